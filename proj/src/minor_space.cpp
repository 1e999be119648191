#include "agc/minor_space.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace agc {

namespace {

std::uint32_t mask_of(const IndexSet& set) {
  std::uint32_t mask = 0;
  for (int i : set) mask |= std::uint32_t{1} << (i - 1);
  return mask;
}

std::uint64_t key_of(const IndexSet& rows, const IndexSet& cols) {
  return (static_cast<std::uint64_t>(mask_of(rows)) << 32) | mask_of(cols);
}

int index_sum(const IndexSet& set) {
  int s = 0;
  for (int i : set) s += i;
  return s;
}

// Removes `drop` from the set and shifts larger indices down by one.
IndexSet remove_and_shift(const IndexSet& set, int drop) {
  IndexSet out;
  out.reserve(set.size());
  for (int i : set) {
    if (i == drop) continue;
    out.push_back(i > drop ? i - 1 : i);
  }
  return out;
}

IndexSet without_position(const IndexSet& set, std::size_t pos) {
  IndexSet out = set;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(pos));
  return out;
}

// Complement of `positions` within {1..r}.
IndexSet complement(const IndexSet& positions, int r) {
  IndexSet out;
  for (int i = 1; i <= r; ++i)
    if (!std::binary_search(positions.begin(), positions.end(), i)) out.push_back(i);
  return out;
}

void require_same_shape(const MinorCombination& a, const MinorCombination& b) {
  if (a.shape() != b.shape() || !(a.field() == b.field()))
    throw std::invalid_argument("minor combinations over different shapes or fields");
}

}  // namespace

bool MinorIndex::involves_row(int i) const { return std::binary_search(rows.begin(), rows.end(), i); }
bool MinorIndex::involves_col(int j) const { return std::binary_search(cols.begin(), cols.end(), j); }

std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b) {
  if (auto c = a.order() <=> b.order(); c != 0) return c;
  if (auto c = a.rows <=> b.rows; c != 0) return c;
  return a.cols <=> b.cols;
}

MinorBasis::MinorBasis(Shape shape) : shape_(shape) {
  if (shape.rows < 0 || shape.cols < 0 || shape.rows > 31 || shape.cols > 31)
    throw std::invalid_argument("unsupported minor space shape");
  const int top = std::min(shape.rows, shape.cols);
  for (int order = 0; order <= top; ++order) {
    const auto rowsets = k_subsets(shape.rows, order);
    const auto colsets = k_subsets(shape.cols, order);
    if (order == top) leading_ = entries_.size();
    for (const auto& r : rowsets)
      for (const auto& c : colsets) {
        lookup_.emplace(key_of(r, c), entries_.size());
        entries_.push_back(MinorIndex{r, c});
      }
  }
}

std::size_t MinorBasis::position(const IndexSet& rows, const IndexSet& cols) const {
  if (rows.size() != cols.size()) throw std::out_of_range("minor with unequal row and column counts");
  for (int i : rows)
    if (i < 1 || i > shape_.rows) throw std::out_of_range("minor row index out of range");
  for (int j : cols)
    if (j < 1 || j > shape_.cols) throw std::out_of_range("minor column index out of range");
  const auto it = lookup_.find(key_of(rows, cols));
  if (it == lookup_.end()) throw std::out_of_range("minor not in basis");
  return it->second;
}

std::shared_ptr<const MinorBasis> minor_basis(Shape shape) {
  static std::mutex mutex;
  static std::map<Shape, std::shared_ptr<const MinorBasis>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[shape];
  if (!slot) slot = std::make_shared<const MinorBasis>(shape);
  return slot;
}

MinorCombination::MinorCombination(Field field, Shape shape)
    : field_(std::move(field)), basis_(minor_basis(shape)), coeffs_(basis_->size(), 0) {}

MinorCombination::MinorCombination(Field field, Shape shape, std::vector<Elem> coeffs)
    : field_(std::move(field)), basis_(minor_basis(shape)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != basis_->size()) throw std::invalid_argument("coefficient vector length does not match basis");
  for (Elem c : coeffs_)
    if (!field_.contains(c)) throw std::invalid_argument("coefficient outside the field");
}

MinorCombination MinorCombination::constant(Field field, Shape shape, Elem c) {
  MinorCombination f(std::move(field), shape);
  f.coeffs_[0] = c;
  return f;
}

MinorCombination MinorCombination::single(Field field, Shape shape, const MinorIndex& m, Elem c) {
  MinorCombination f(std::move(field), shape);
  f.coeffs_[f.basis_->position(m)] = c;
  return f;
}

MinorCombination MinorCombination::leading_maximal_minor(Field field, Shape shape) {
  MinorCombination f(std::move(field), shape);
  f.coeffs_[f.basis_->leading_maximal()] = 1;
  return f;
}

void MinorCombination::add_to(std::size_t pos, Elem c) { coeffs_[pos] = field_.add(coeffs_[pos], c); }

bool MinorCombination::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](Elem c) { return c == 0; });
}

int MinorCombination::max_order() const {
  int best = -1;
  for (std::size_t pos = 0; pos < coeffs_.size(); ++pos)
    if (coeffs_[pos] != 0) best = std::max(best, (*basis_)[pos].order());
  return best;
}

MinorCombination MinorCombination::operator+(const MinorCombination& o) const {
  require_same_shape(*this, o);
  MinorCombination r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.add(coeffs_[i], o.coeffs_[i]);
  return r;
}

MinorCombination MinorCombination::operator-(const MinorCombination& o) const {
  require_same_shape(*this, o);
  MinorCombination r = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i] = field_.sub(coeffs_[i], o.coeffs_[i]);
  return r;
}

MinorCombination MinorCombination::scaled(Elem c) const {
  MinorCombination r = *this;
  for (Elem& x : r.coeffs_) x = field_.mul(c, x);
  return r;
}

bool operator==(const MinorCombination& a, const MinorCombination& b) {
  return a.shape() == b.shape() && a.field_ == b.field_ && a.coeffs_ == b.coeffs_;
}

bool operator<(const MinorCombination& a, const MinorCombination& b) {
  if (a.shape() != b.shape()) return a.shape() < b.shape();
  return a.coeffs_ < b.coeffs_;
}

std::vector<Elem> minor_values(const Matrix& point, const MinorBasis& basis) {
  if (point.rows() != basis.shape().rows || point.cols() != basis.shape().cols)
    throw std::invalid_argument("point shape does not match minor basis");
  std::vector<Elem> values(basis.size());
  for (std::size_t pos = 0; pos < basis.size(); ++pos) values[pos] = minor(point, basis[pos].rows, basis[pos].cols);
  return values;
}

Elem evaluate(const MinorCombination& f, const Matrix& point) {
  if (point.rows() != f.shape().rows || point.cols() != f.shape().cols)
    throw std::invalid_argument("evaluate: point shape mismatch");
  const Field& field = f.field();
  const MinorBasis& basis = f.basis();
  Elem sum = 0;
  for (std::size_t pos = 0; pos < basis.size(); ++pos) {
    if (f.coeff(pos) == 0) continue;
    sum = field.add(sum, field.mul(f.coeff(pos), minor(point, basis[pos].rows, basis[pos].cols)));
  }
  return sum;
}

std::vector<MinorIndex> support(const MinorCombination& f) {
  std::vector<MinorIndex> out;
  for (std::size_t pos = 0; pos < f.basis().size(); ++pos)
    if (f.coeff(pos) != 0) out.push_back(f.basis()[pos]);
  return out;
}

MinorCombination specialize_row(const MinorCombination& f, int i, std::span<const Elem> a) {
  const Shape shape = f.shape();
  if (shape.rows < 1) throw std::invalid_argument("specialize_row: no rows to specialize");
  if (i < 1 || i > shape.rows) throw std::out_of_range("specialize_row: row index out of range");
  if (static_cast<int>(a.size()) != shape.cols) throw std::invalid_argument("specialize_row: vector length mismatch");
  const Field& field = f.field();
  MinorCombination out(field, Shape{shape.rows - 1, shape.cols});
  const MinorBasis& target = out.basis();
  for (std::size_t pos = 0; pos < f.basis().size(); ++pos) {
    const Elem c = f.coeff(pos);
    if (c == 0) continue;
    const MinorIndex& m = f.basis()[pos];
    const auto it = std::find(m.rows.begin(), m.rows.end(), i);
    if (it == m.rows.end()) {
      out.add_to(target.position(remove_and_shift(m.rows, i), m.cols), c);
      continue;
    }
    // Laplace expansion along the substituted row.
    const int row_pos = static_cast<int>(it - m.rows.begin()) + 1;
    const IndexSet rest_rows = remove_and_shift(m.rows, i);
    for (std::size_t t = 0; t < m.cols.size(); ++t) {
      const Elem entry = a[m.cols[t] - 1];
      if (entry == 0) continue;
      const Elem term = field.mul(field.sign(row_pos + static_cast<int>(t) + 1), field.mul(c, entry));
      out.add_to(target.position(rest_rows, without_position(m.cols, t)), term);
    }
  }
  return out;
}

MinorCombination specialize_col(const MinorCombination& f, int j, std::span<const Elem> b) {
  const Shape shape = f.shape();
  if (shape.cols <= shape.rows) throw std::invalid_argument("specialize_col: requires more columns than rows");
  if (j < 1 || j > shape.cols) throw std::out_of_range("specialize_col: column index out of range");
  if (static_cast<int>(b.size()) != shape.rows) throw std::invalid_argument("specialize_col: vector length mismatch");
  const Field& field = f.field();
  MinorCombination out(field, Shape{shape.rows, shape.cols - 1});
  const MinorBasis& target = out.basis();
  for (std::size_t pos = 0; pos < f.basis().size(); ++pos) {
    const Elem c = f.coeff(pos);
    if (c == 0) continue;
    const MinorIndex& m = f.basis()[pos];
    const auto it = std::find(m.cols.begin(), m.cols.end(), j);
    if (it == m.cols.end()) {
      out.add_to(target.position(m.rows, remove_and_shift(m.cols, j)), c);
      continue;
    }
    const int col_pos = static_cast<int>(it - m.cols.begin()) + 1;
    const IndexSet rest_cols = remove_and_shift(m.cols, j);
    for (std::size_t t = 0; t < m.rows.size(); ++t) {
      const Elem entry = b[m.rows[t] - 1];
      if (entry == 0) continue;
      const Elem term = field.mul(field.sign(col_pos + static_cast<int>(t) + 1), field.mul(c, entry));
      out.add_to(target.position(without_position(m.rows, t), rest_cols), term);
    }
  }
  return out;
}

std::vector<Elem> vector_from_index(std::uint64_t index, int length, unsigned q) {
  std::vector<Elem> v(length);
  for (int k = length - 1; k >= 0; --k) {
    v[k] = static_cast<Elem>(index % q);
    index /= q;
  }
  return v;
}

std::vector<std::vector<Elem>> row_vanishing_locus(const MinorCombination& f, int i) {
  const int len = f.shape().cols;
  const unsigned q = f.field().size();
  std::uint64_t total = 1;
  for (int k = 0; k < len; ++k) total *= q;
  std::vector<std::vector<Elem>> locus;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    auto a = vector_from_index(idx, len, q);
    if (specialize_row(f, i, a).is_zero()) locus.push_back(std::move(a));
  }
  return locus;
}

MinorCombination expand_affine_det(const Field& field, Shape shape, const IndexSet& rows, const Matrix& n,
                                   const Matrix& v) {
  const int r = static_cast<int>(rows.size());
  if (n.rows() != shape.cols || n.cols() != r) throw std::invalid_argument("expand_affine_det: bad coefficient matrix");
  if (v.rows() != r || v.cols() != r) throw std::invalid_argument("expand_affine_det: bad translation block");
  MinorCombination out(field, shape);
  const MinorBasis& basis = out.basis();
  for (int s = 0; s <= r; ++s) {
    const auto subsets = k_subsets(r, s);
    for (const IndexSet& cols_from_v : subsets) {
      const IndexSet kept_cols = complement(cols_from_v, r);
      // Cauchy-Binet coefficients det(n[J, kept_cols]) for every (r-s)-subset J.
      std::vector<std::pair<IndexSet, Elem>> cb_terms;
      for (IndexSet& j : k_subsets(shape.cols, r - s)) {
        const Elem d = minor(n, j, kept_cols);
        if (d != 0) cb_terms.emplace_back(std::move(j), d);
      }
      if (cb_terms.empty()) continue;
      for (const IndexSet& laplace_rows : subsets) {
        const Elem dv = minor(v, laplace_rows, cols_from_v);
        if (dv == 0) continue;
        const Elem lead =
            field.mul(field.sign(index_sum(cols_from_v) + index_sum(laplace_rows)), dv);
        IndexSet x_rows;
        for (int p = 1; p <= r; ++p)
          if (!std::binary_search(laplace_rows.begin(), laplace_rows.end(), p)) x_rows.push_back(rows[p - 1]);
        for (const auto& [j, d] : cb_terms) out.add_to(basis.position(x_rows, j), field.mul(lead, d));
      }
    }
  }
  return out;
}

MinorCombination det_translation_expand(const Matrix& b) {
  if (!b.is_square()) throw std::invalid_argument("det_translation_expand: matrix must be square");
  const int l = b.rows();
  IndexSet all(l);
  for (int i = 0; i < l; ++i) all[i] = i + 1;
  return expand_affine_det(b.field(), Shape{l, l}, all, Matrix::identity(b.field(), l), b);
}

AbsorbedTranslation absorb_translation(const MinorCombination& f) {
  const Shape shape = f.shape();
  if (shape.rows != shape.cols || shape.rows < 1)
    throw std::invalid_argument("absorb_translation: requires a square shape");
  const int l = shape.rows;
  if (f.coeff(f.basis().leading_maximal()) != 1)
    throw std::invalid_argument("absorb_translation: coefficient of det(X) must be 1");
  const Field& field = f.field();
  IndexSet all(l);
  for (int i = 0; i < l; ++i) all[i] = i + 1;
  Matrix a(field, l, l);
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      // Coefficient of det(X^{ij}), the minor avoiding row i and column j.
      const Elem b = f.coeff(f.basis().position(without_position(all, i - 1), without_position(all, j - 1)));
      a(i - 1, j - 1) = field.mul(field.sign(i + j), b);
    }
  return {a, f - det_translation_expand(a)};
}

std::string to_text(const MinorCombination& f) {
  auto join = [](const IndexSet& set) {
    if (set.empty()) return std::string("-");
    std::string s;
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (k) s += ",";
      s += std::to_string(set[k]);
    }
    return s;
  };
  std::string out;
  for (std::size_t pos = 0; pos < f.basis().size(); ++pos) {
    if (f.coeff(pos) == 0) continue;
    const MinorIndex& m = f.basis()[pos];
    out += join(m.rows) + "|" + join(m.cols) + ": " + std::to_string(f.coeff(pos)) + "\n";
  }
  return out;
}

}  // namespace agc
