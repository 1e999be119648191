#pragma once

#include "agc/finite_field.hpp"
#include "agc/qcomb.hpp"

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace agc {

/// Thrown when an exhaustive enumeration would exceed its configured cap.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense row-major matrix over GF(q).
///
/// Element access through operator() is 0-based. Every API that takes row or
/// column index *sets* (minors, specializations) uses 1-based indices.
class Matrix {
 public:
  Matrix(Field field, int rows, int cols);
  Matrix(Field field, int rows, int cols, std::vector<Elem> entries);
  static Matrix identity(Field field, int n);
  static Matrix from_rows(Field field, std::initializer_list<std::initializer_list<unsigned>> rows);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  Elem& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  std::span<const Elem> row(int r) const {
    return {data_.data() + static_cast<std::size_t>(r) * cols_, static_cast<std::size_t>(cols_)};
  }
  std::span<const Elem> entries() const { return data_; }

  Matrix transpose() const;
  /// Submatrix on 1-based row and column index sets.
  Matrix submatrix(const IndexSet& rowset, const IndexSet& colset) const;
  bool is_zero() const;

  Matrix operator+(const Matrix& other) const;
  Matrix operator-(const Matrix& other) const;
  Matrix operator-() const;
  Matrix operator*(const Matrix& other) const;
  Matrix scaled(Elem c) const;

  friend bool operator==(const Matrix& a, const Matrix& b);
  /// Lexicographic on (rows, cols, entries); gives a canonical sort order.
  friend bool operator<(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  int rows_;
  int cols_;
  std::vector<Elem> data_;
};

/// Determinant by Gaussian elimination; the 0x0 determinant is 1.
Elem det(const Matrix& m);

/// Minor on 1-based strictly increasing index sets; (empty, empty) gives 1.
Elem minor(const Matrix& m, const IndexSet& rowset, const IndexSet& colset);

int rank(const Matrix& m);
/// Reduced row-echelon form (canonical for the row space).
Matrix rref_rows(const Matrix& m);
/// Reduced column-echelon form (canonical for the column space).
Matrix rref_cols(const Matrix& m);
/// 0-based pivot columns of a matrix already in reduced row-echelon form.
std::vector<int> pivot_columns(const Matrix& rref);
std::optional<Matrix> inverse(const Matrix& m);

/// Row vector as a 1 x n matrix.
Matrix row_vector(Field field, std::span<const Elem> v);
/// v * M for a row vector v.
std::vector<Elem> vec_mat(std::span<const Elem> v, const Matrix& m);

/// Calls visit on every invertible n x n matrix in row-major lexicographic
/// entry order. Throws CapExceeded when q^{n^2} > cap.
void for_each_gl(const Field& field, int n, const std::function<void(const Matrix&)>& visit,
                 std::uint64_t cap = std::uint64_t{1} << 24);
std::vector<Matrix> enumerate_gl(const Field& field, int n, std::uint64_t cap = std::uint64_t{1} << 24);
std::vector<Matrix> enumerate_sl(const Field& field, int n, std::uint64_t cap = std::uint64_t{1} << 24);

/// All rank-r matrices of shape r x n in reduced row-echelon form, ordered by
/// pivot set (lexicographic) and then by free entries (row-major,
/// lexicographic). Throws CapExceeded when more than cap would be produced.
std::vector<Matrix> enumerate_rref(const Field& field, int r, int n, std::uint64_t cap = std::uint64_t{1} << 22);

struct CauchyBinetSides {
  Elem lhs;  // det(AB)
  Elem rhs;  // sum over r-subsets I of det(A^I) det(B_I)
};
/// A is r x s and B is s x r with r <= s.
CauchyBinetSides cauchy_binet(const Matrix& a, const Matrix& b);

}  // namespace agc
