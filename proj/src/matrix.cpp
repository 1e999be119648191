#include "agc/matrix.hpp"

#include <algorithm>
#include <string>

namespace agc {

namespace {

void require_same_field(const Matrix& a, const Matrix& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("matrices over different fields");
}

void check_index_set(const IndexSet& set, int bound, const char* what) {
  for (std::size_t i = 0; i < set.size(); ++i) {
    if (set[i] < 1 || set[i] > bound) throw std::out_of_range(std::string(what) + " index out of range");
    if (i > 0 && set[i] <= set[i - 1]) throw std::invalid_argument(std::string(what) + " set not strictly increasing");
  }
}

// In-place row reduction to reduced row-echelon form; returns the pivot columns.
std::vector<int> reduce_rows(Matrix& m) {
  const Field& f = m.field();
  std::vector<int> pivots;
  int pivot_row = 0;
  for (int c = 0; c < m.cols() && pivot_row < m.rows(); ++c) {
    int sel = -1;
    for (int r = pivot_row; r < m.rows(); ++r)
      if (m(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) continue;
    if (sel != pivot_row)
      for (int j = 0; j < m.cols(); ++j) std::swap(m(sel, j), m(pivot_row, j));
    const Elem scale = f.inv(m(pivot_row, c));
    for (int j = 0; j < m.cols(); ++j) m(pivot_row, j) = f.mul(m(pivot_row, j), scale);
    for (int r = 0; r < m.rows(); ++r) {
      if (r == pivot_row || m(r, c) == 0) continue;
      const Elem factor = m(r, c);
      for (int j = 0; j < m.cols(); ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(pivot_row, j)));
    }
    pivots.push_back(c);
    ++pivot_row;
  }
  return pivots;
}

}  // namespace

Matrix::Matrix(Field field, int rows, int cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, 0) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
}

Matrix::Matrix(Field field, int rows, int cols, std::vector<Elem> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  if (data_.size() != static_cast<std::size_t>(rows) * cols)
    throw std::invalid_argument("matrix entry count does not match shape");
  for (Elem e : data_)
    if (!field_.contains(e)) throw std::invalid_argument("matrix entry outside the field");
}

Matrix Matrix::identity(Field field, int n) {
  Matrix m(std::move(field), n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(Field field, std::initializer_list<std::initializer_list<unsigned>> rows) {
  const int r = static_cast<int>(rows.size());
  const int c = r ? static_cast<int>(rows.begin()->size()) : 0;
  std::vector<Elem> entries;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (unsigned v : row) entries.push_back(static_cast<Elem>(v));
  }
  return Matrix(std::move(field), r, c, std::move(entries));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::submatrix(const IndexSet& rowset, const IndexSet& colset) const {
  check_index_set(rowset, rows_, "row");
  check_index_set(colset, cols_, "column");
  Matrix s(field_, static_cast<int>(rowset.size()), static_cast<int>(colset.size()));
  for (std::size_t i = 0; i < rowset.size(); ++i)
    for (std::size_t j = 0; j < colset.size(); ++j)
      s(static_cast<int>(i), static_cast<int>(j)) = (*this)(rowset[i] - 1, colset[j] - 1);
  return s;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

Matrix Matrix::operator+(const Matrix& o) const {
  require_same_field(*this, o);
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch in +");
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.add(data_[i], o.data_[i]);
  return s;
}

Matrix Matrix::operator-(const Matrix& o) const { return *this + (-o); }

Matrix Matrix::operator-() const {
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.neg(data_[i]);
  return s;
}

Matrix Matrix::operator*(const Matrix& o) const {
  require_same_field(*this, o);
  if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch in *");
  Matrix p(field_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Elem a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) p(i, j) = field_.add(p(i, j), field_.mul(a, o(k, j)));
    }
  return p;
}

Matrix Matrix::scaled(Elem c) const {
  Matrix s(field_, rows_, cols_);
  for (std::size_t i = 0; i < data_.size(); ++i) s.data_[i] = field_.mul(c, data_[i]);
  return s;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

bool operator<(const Matrix& a, const Matrix& b) {
  if (a.rows_ != b.rows_) return a.rows_ < b.rows_;
  if (a.cols_ != b.cols_) return a.cols_ < b.cols_;
  return a.data_ < b.data_;
}

Elem det(const Matrix& input) {
  if (!input.is_square()) throw std::invalid_argument("determinant of a non-square matrix");
  const Field& f = input.field();
  Matrix m = input;
  const int n = m.rows();
  Elem result = 1;
  for (int c = 0; c < n; ++c) {
    int sel = -1;
    for (int r = c; r < n; ++r)
      if (m(r, c) != 0) {
        sel = r;
        break;
      }
    if (sel < 0) return 0;
    if (sel != c) {
      for (int j = 0; j < n; ++j) std::swap(m(sel, j), m(c, j));
      result = f.neg(result);
    }
    const Elem pivot = m(c, c);
    result = f.mul(result, pivot);
    const Elem pivot_inv = f.inv(pivot);
    for (int r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      const Elem factor = f.mul(m(r, c), pivot_inv);
      for (int j = c; j < n; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return result;
}

Elem minor(const Matrix& m, const IndexSet& rowset, const IndexSet& colset) {
  if (rowset.size() != colset.size()) throw std::invalid_argument("minor: row and column sets differ in size");
  if (rowset.empty()) return 1;
  return det(m.submatrix(rowset, colset));
}

int rank(const Matrix& m) {
  Matrix work = m;
  return static_cast<int>(reduce_rows(work).size());
}

Matrix rref_rows(const Matrix& m) {
  Matrix work = m;
  reduce_rows(work);
  return work;
}

Matrix rref_cols(const Matrix& m) { return rref_rows(m.transpose()).transpose(); }

std::vector<int> pivot_columns(const Matrix& rref) {
  std::vector<int> pivots;
  for (int r = 0; r < rref.rows(); ++r)
    for (int c = 0; c < rref.cols(); ++c)
      if (rref(r, c) != 0) {
        pivots.push_back(c);
        break;
      }
  return pivots;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.is_square()) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = m.rows();
  Matrix aug(m.field(), n, 2 * n);
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = 1;
  }
  const auto pivots = reduce_rows(aug);
  if (static_cast<int>(pivots.size()) < n || (n > 0 && pivots[n - 1] != n - 1)) return std::nullopt;
  Matrix inv(m.field(), n, n);
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  return inv;
}

Matrix row_vector(Field field, std::span<const Elem> v) {
  return Matrix(std::move(field), 1, static_cast<int>(v.size()), std::vector<Elem>(v.begin(), v.end()));
}

std::vector<Elem> vec_mat(std::span<const Elem> v, const Matrix& m) {
  if (static_cast<int>(v.size()) != m.rows()) throw std::invalid_argument("vector-matrix shape mismatch");
  const Field& f = m.field();
  std::vector<Elem> out(m.cols(), 0);
  for (int i = 0; i < m.rows(); ++i) {
    if (v[i] == 0) continue;
    for (int j = 0; j < m.cols(); ++j) out[j] = f.add(out[j], f.mul(v[i], m(i, j)));
  }
  return out;
}

void for_each_gl(const Field& field, int n, const std::function<void(const Matrix&)>& visit, std::uint64_t cap) {
  const unsigned q = field.size();
  const int cells = n * n;
  std::uint64_t total = 1;
  for (int i = 0; i < cells; ++i) {
    total *= q;
    if (total > cap) throw CapExceeded("GL enumeration exceeds cap of " + std::to_string(cap) + " candidates");
  }
  Matrix m(field, n, n);
  std::vector<Elem> digits(cells, 0);
  for (std::uint64_t count = 0; count < total; ++count) {
    for (int i = 0; i < cells; ++i) m(i / n, i % n) = digits[i];
    if (det(m) != 0) visit(m);
    for (int i = cells - 1; i >= 0; --i) {
      if (++digits[i] < q) break;
      digits[i] = 0;
    }
  }
}

std::vector<Matrix> enumerate_gl(const Field& field, int n, std::uint64_t cap) {
  std::vector<Matrix> out;
  for_each_gl(field, n, [&](const Matrix& m) { out.push_back(m); }, cap);
  return out;
}

std::vector<Matrix> enumerate_sl(const Field& field, int n, std::uint64_t cap) {
  std::vector<Matrix> out;
  for_each_gl(field, n, [&](const Matrix& m) {
        if (det(m) == 1) out.push_back(m);
      }, cap);
  return out;
}

std::vector<Matrix> enumerate_rref(const Field& field, int r, int n, std::uint64_t cap) {
  if (r < 0 || r > n) throw std::invalid_argument("enumerate_rref: rank out of range");
  const unsigned q = field.size();
  std::vector<Matrix> out;
  for (const IndexSet& pivots : k_subsets(n, r)) {
    // Free positions: (row i, column c) with c right of pivot i and not itself a pivot.
    std::vector<std::pair<int, int>> free;
    for (int i = 0; i < r; ++i)
      for (int c = pivots[i]; c < n; ++c)
        if (!std::binary_search(pivots.begin(), pivots.end(), c + 1)) free.emplace_back(i, c);
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < free.size(); ++i) {
      count *= q;
      if (count + out.size() > cap) throw CapExceeded("subspace enumeration exceeds cap of " + std::to_string(cap));
    }
    std::vector<Elem> digits(free.size(), 0);
    for (std::uint64_t t = 0; t < count; ++t) {
      Matrix m(field, r, n);
      for (int i = 0; i < r; ++i) m(i, pivots[i] - 1) = 1;
      for (std::size_t k = 0; k < free.size(); ++k) m(free[k].first, free[k].second) = digits[k];
      out.push_back(std::move(m));
      for (std::size_t k = free.size(); k-- > 0;) {
        if (++digits[k] < q) break;
        digits[k] = 0;
      }
    }
  }
  return out;
}

CauchyBinetSides cauchy_binet(const Matrix& a, const Matrix& b) {
  require_same_field(a, b);
  const int r = a.rows();
  const int s = a.cols();
  if (b.rows() != s || b.cols() != r) throw std::invalid_argument("cauchy_binet: shape mismatch");
  if (r > s) throw std::invalid_argument("cauchy_binet: requires r <= s");
  const Field& f = a.field();
  IndexSet all_rows(r);
  for (int i = 0; i < r; ++i) all_rows[i] = i + 1;
  Elem rhs = 0;
  for (const IndexSet& subset : k_subsets(s, r))
    rhs = f.add(rhs, f.mul(minor(a, all_rows, subset), minor(b, subset, all_rows)));
  return {det(a * b), rhs};
}

}  // namespace agc
