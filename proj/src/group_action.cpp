#include "agc/group_action.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace agc {

namespace {

IndexSet first_n(int n) {
  IndexSet s(n);
  for (int i = 0; i < n; ++i) s[i] = i + 1;
  return s;
}

Matrix leading_columns(const Matrix& m, int count) { return m.submatrix(first_n(m.rows()), first_n(count)); }

Matrix stack_identity_zero(const Field& field, int rows, int cols) {
  Matrix out(field, rows, cols);
  for (int i = 0; i < cols; ++i) out(i, i) = 1;
  return out;
}

// Basis (as rows, in reduced row-echelon form) of { x : B x = 0 }.
Matrix right_null_space(const Matrix& b) {
  const Field& f = b.field();
  const Matrix r = rref_rows(b);
  const auto pivots = pivot_columns(r);
  std::vector<int> free_cols;
  for (int c = 0; c < b.cols(); ++c)
    if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free_cols.push_back(c);
  Matrix basis(f, static_cast<int>(free_cols.size()), b.cols());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    basis(static_cast<int>(k), free_cols[k]) = 1;
    for (std::size_t p = 0; p < pivots.size(); ++p)
      basis(static_cast<int>(k), pivots[p]) = f.neg(r(static_cast<int>(p), free_cols[k]));
  }
  return rref_rows(basis);
}

}  // namespace

AffineMap::AffineMap(Matrix u, Matrix a) : u_(std::move(u)), a_(std::move(a)), a_inv_(a_) {
  if (!a_.is_square() || a_.rows() != u_.cols()) throw std::invalid_argument("AffineMap: shape mismatch");
  if (!(u_.field() == a_.field())) throw std::invalid_argument("AffineMap: field mismatch");
  auto inv = inverse(a_);
  if (!inv) throw std::invalid_argument("AffineMap: matrix is singular");
  a_inv_ = std::move(*inv);
}

AffineMap AffineMap::identity(const Field& field, Shape shape) {
  return AffineMap(Matrix(field, shape.rows, shape.cols), Matrix::identity(field, shape.cols));
}

AffineMap AffineMap::translation(Matrix u) {
  const int n = u.cols();
  Field field = u.field();
  return AffineMap(std::move(u), Matrix::identity(field, n));
}

Matrix AffineMap::apply(const Matrix& point) const {
  if (point.rows() != u_.rows() || point.cols() != u_.cols())
    throw std::invalid_argument("AffineMap::apply: shape mismatch");
  return point * a_inv_ + u_;
}

AffineMap compose(const AffineMap& x, const AffineMap& y) {
  return AffineMap(y.u() * x.a_inverse() + x.u(), x.a() * y.a());
}

AffineMap inverse(const AffineMap& x) { return AffineMap(-(x.u() * x.a()), x.a_inverse()); }

MinorCombination act_on_poly(const AffineMap& phi, const MinorCombination& f) {
  const Shape shape = f.shape();
  if (!(phi.shape() == shape)) throw std::invalid_argument("act_on_poly: shape mismatch");
  const Field& field = f.field();
  const int lp = shape.cols;
  MinorCombination out(field, shape);
  const MinorBasis& basis = f.basis();
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    const Elem c = f.coeff(pos);
    if (c == 0) continue;
    const MinorIndex& mi = basis[pos];
    if (mi.order() == 0) {
      out.add_to(0, c);
      continue;
    }
    // Minor (R, C) of X A^{-1} + u is det(X[R,:] A^{-1}[:,C] + u[R,C]).
    const Matrix n = phi.a_inverse().submatrix(first_n(lp), mi.cols);
    const Matrix v = phi.u().submatrix(mi.rows, mi.cols);
    out = out + expand_affine_det(field, shape, mi.rows, n, v).scaled(c);
  }
  return out;
}

std::vector<std::uint64_t> permutation(const AffineMap& phi) {
  const Field& field = phi.u().field();
  const Shape shape = phi.shape();
  const std::uint64_t n = point_count(field, shape);
  std::vector<std::uint64_t> perm(n);
  for (std::uint64_t j = 0; j < n; ++j) perm[j] = point_index(phi.apply(point_matrix(field, shape, j)));
  return perm;
}

std::vector<Elem> permute_word(std::span<const std::uint64_t> perm, std::span<const Elem> word) {
  if (perm.size() != word.size()) throw std::invalid_argument("permute_word: length mismatch");
  std::vector<Elem> out(word.size());
  for (std::size_t j = 0; j < word.size(); ++j) out[j] = word[perm[j]];
  return out;
}

std::vector<AffineMap> enumerate_group(const CodeParams& params, const Caps& caps) {
  if (group_order_formula(params) > caps.max_listed)
    throw CapExceeded("group order exceeds cap of " + std::to_string(caps.max_listed));
  const Field field = Field::of_order(params.q);
  const Shape shape = shape_of(params);
  const std::uint64_t points = point_count(field, shape, caps.max_points);
  std::vector<AffineMap> out;
  for_each_gl(
      field, shape.cols,
      [&](const Matrix& a) {
        for (std::uint64_t j = 0; j < points; ++j) out.emplace_back(point_matrix(field, shape, j), a);
      },
      caps.max_gl_candidates);
  return out;
}

bool stabilizer_test(const AffineMap& phi) {
  const Shape shape = phi.shape();
  const auto lead = MinorCombination::leading_maximal_minor(phi.u().field(), shape);
  return act_on_poly(phi, lead) == lead;
}

bool stabilizer_criterion(const AffineMap& phi) {
  const Field& field = phi.u().field();
  const Shape shape = phi.shape();
  const int l = shape.rows;
  if (!leading_columns(phi.u(), l).is_zero()) return false;
  const Matrix m = leading_columns(phi.a_inverse(), l);
  // M E = (I; 0) forces E = (top block of M)^{-1}.
  const auto e = inverse(m.submatrix(first_n(l), first_n(l)));
  if (!e || det(*e) != 1) return false;
  return m * *e == stack_identity_zero(field, shape.cols, l);
}

MinorCombination affine_det_form(const Field& field, Shape shape, Elem lambda, const Matrix& m_lin,
                                 const Matrix& m_shift) {
  return expand_affine_det(field, shape, first_n(shape.rows), m_lin, m_shift).scaled(lambda);
}

std::vector<MinorCombination> generate_min_weight_polys(const CodeParams& params, const Caps& caps) {
  if (min_weight_count_formula(params) > caps.max_listed)
    throw CapExceeded("number of minimum-weight polynomials exceeds cap of " + std::to_string(caps.max_listed));
  const Field field = Field::of_order(params.q);
  const Shape shape = shape_of(params);
  const Shape square{shape.rows, shape.rows};
  const std::uint64_t shifts = point_count(field, square, caps.max_points);
  std::vector<MinorCombination> out;
  for (const Matrix& rref : enumerate_rref(field, shape.rows, shape.cols, caps.max_listed)) {
    const Matrix m_lin = rref.transpose();
    for (std::uint64_t s = 0; s < shifts; ++s) {
      const auto base = affine_det_form(field, shape, 1, m_lin, point_matrix(field, square, s));
      for (Elem lambda = 1; lambda < field.size(); ++lambda) out.push_back(base.scaled(lambda));
    }
  }
  std::sort(out.begin(), out.end());
  if (std::adjacent_find(out.begin(), out.end()) != out.end())
    throw std::logic_error("generate_min_weight_polys: parametrization is not injective");
  return out;
}

MinWeightCheck is_min_weight_form(const MinorCombination& f) {
  if (f.is_zero()) throw std::invalid_argument("is_min_weight_form: zero polynomial");
  const Field& field = f.field();
  const Shape shape = f.shape();
  const int l = shape.rows;
  const int lp = shape.cols;
  MinWeightCheck result;

  // Translate by a point whose i-th row lies in the i-th row-vanishing locus.
  Matrix u(field, l, lp);
  for (int i = 1; i <= l; ++i) {
    const auto locus = row_vanishing_locus(f, i);
    if (locus.empty()) {
      result.reason = "row-vanishing locus of row " + std::to_string(i) + " is empty";
      return result;
    }
    for (int j = 0; j < lp; ++j) u(i - 1, j) = locus.front()[j];
  }
  const MinorCombination g = act_on_poly(AffineMap::translation(u), f);
  for (const MinorIndex& m : support(g))
    if (m.order() != l) {
      result.reason = "translate has a term of order " + std::to_string(m.order());
      return result;
    }

  // g = c det(X N): the columns of N span the annihilator of the first locus of g.
  Matrix n = Matrix::identity(field, lp);
  if (l < lp) {
    const auto locus = row_vanishing_locus(g, 1);
    Matrix rows(field, static_cast<int>(locus.size()), lp);
    for (std::size_t k = 0; k < locus.size(); ++k)
      for (int j = 0; j < lp; ++j) rows(static_cast<int>(k), j) = locus[k][j];
    const Matrix span = rref_rows(rows);
    const int dim = rank(span);
    if (dim != lp - l) {
      result.reason = "first locus of the translate has dimension " + std::to_string(dim);
      return result;
    }
    n = right_null_space(span.submatrix(first_n(dim), first_n(lp))).transpose();
  }

  // Complete N to an invertible A; then g(X A^{-1}) = c L.
  Matrix a(field, lp, lp);
  for (int r = 0; r < lp; ++r)
    for (int c = 0; c < l; ++c) a(r, c) = n(r, c);
  const auto pivots = pivot_columns(n.transpose());
  int next = l;
  for (int r = 0; r < lp; ++r)
    if (std::find(pivots.begin(), pivots.end(), r) == pivots.end()) a(r, next++) = 1;
  const MinorCombination h = act_on_poly(AffineMap(Matrix(field, l, lp), a), g);
  const auto lead = MinorCombination::leading_maximal_minor(field, shape);
  const Elem lambda = h.coeff(h.basis().leading_maximal());
  if (lambda == 0 || !(h == lead.scaled(lambda))) {
    result.reason = "translate is not a multiple of a single maximal minor";
    return result;
  }

  // f(X) = g(X - u) = lambda det(X N - u N).
  MinWeightWitness w{lambda, n, -(u * n)};
  if (!(affine_det_form(field, shape, w.lambda, w.m_lin, w.m_shift) == f))
    throw std::logic_error("is_min_weight_form: witness does not reproduce f");
  result.is_min_weight = true;
  result.witness = std::move(w);
  return result;
}

}  // namespace agc
