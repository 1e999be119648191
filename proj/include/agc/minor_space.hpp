#pragma once

#include "agc/finite_field.hpp"
#include "agc/matrix.hpp"
#include "agc/qcomb.hpp"

#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace agc {

/// Shape (rows, cols) of the generic variable matrix X.
struct Shape {
  int rows = 0;
  int cols = 0;
  friend auto operator<=>(const Shape&, const Shape&) = default;
};

inline Shape shape_of(const CodeParams& p) { return {static_cast<int>(p.l), static_cast<int>(p.lp)}; }

/// A minor of X: 1-based row and column sets of equal size.
struct MinorIndex {
  IndexSet rows;
  IndexSet cols;

  int order() const { return static_cast<int>(rows.size()); }
  bool involves_row(int i) const;
  bool involves_col(int j) const;
  /// Order first, then rows, then columns (the canonical basis order).
  friend std::strong_ordering operator<=>(const MinorIndex& a, const MinorIndex& b);
  friend bool operator==(const MinorIndex&, const MinorIndex&) = default;
};

/// The ordered minor basis of the space spanned by all minors of X.
///
/// The order (by minor order, then row set, then column set, all
/// lexicographic) is a library convention; position 0 is the empty minor.
class MinorBasis {
 public:
  explicit MinorBasis(Shape shape);

  Shape shape() const { return shape_; }
  std::size_t size() const { return entries_.size(); }
  const MinorIndex& operator[](std::size_t pos) const { return entries_[pos]; }
  std::span<const MinorIndex> entries() const { return entries_; }

  /// Position of a minor; throws std::out_of_range if it is not in the basis.
  std::size_t position(const IndexSet& rows, const IndexSet& cols) const;
  std::size_t position(const MinorIndex& m) const { return position(m.rows, m.cols); }
  /// Position of the minor on rows 1..r and columns 1..r, r = min(rows, cols).
  std::size_t leading_maximal() const { return leading_; }

 private:
  Shape shape_;
  std::vector<MinorIndex> entries_;
  std::unordered_map<std::uint64_t, std::size_t> lookup_;
  std::size_t leading_ = 0;
};

/// Shared, cached basis for a shape.
std::shared_ptr<const MinorBasis> minor_basis(Shape shape);

/// An element of the minor space, stored as a dense coefficient vector over
/// the canonical minor basis.
class MinorCombination {
 public:
  MinorCombination(Field field, Shape shape);
  MinorCombination(Field field, Shape shape, std::vector<Elem> coeffs);

  static MinorCombination constant(Field field, Shape shape, Elem c);
  static MinorCombination single(Field field, Shape shape, const MinorIndex& m, Elem c = 1);
  /// The leading maximal minor det(X[1..l, 1..l]).
  static MinorCombination leading_maximal_minor(Field field, Shape shape);

  const Field& field() const { return field_; }
  Shape shape() const { return basis_->shape(); }
  const MinorBasis& basis() const { return *basis_; }
  std::span<const Elem> coeffs() const { return coeffs_; }
  Elem coeff(std::size_t pos) const { return coeffs_[pos]; }
  Elem coeff(const MinorIndex& m) const { return coeffs_[basis_->position(m)]; }

  void add_to(std::size_t pos, Elem c);
  void set(std::size_t pos, Elem c) { coeffs_[pos] = c; }

  bool is_zero() const;
  /// Highest order among supported minors, or -1 for the zero polynomial.
  int max_order() const;

  MinorCombination operator+(const MinorCombination& o) const;
  MinorCombination operator-(const MinorCombination& o) const;
  MinorCombination scaled(Elem c) const;

  friend bool operator==(const MinorCombination& a, const MinorCombination& b);
  /// Lexicographic on coefficient vectors (shapes must agree).
  friend bool operator<(const MinorCombination& a, const MinorCombination& b);

 private:
  Field field_;
  std::shared_ptr<const MinorBasis> basis_;
  std::vector<Elem> coeffs_;
};

/// Values of every basis minor at the point P, in basis order.
std::vector<Elem> minor_values(const Matrix& point, const MinorBasis& basis);

/// f(P) = sum of a_M * M(P).
Elem evaluate(const MinorCombination& f, const Matrix& point);

std::vector<MinorIndex> support(const MinorCombination& f);

/// Substitutes row i of X (1-based) by the constant vector a, giving an
/// element over shape (rows - 1, cols). Minors through row i are expanded
/// along that row.
MinorCombination specialize_row(const MinorCombination& f, int i, std::span<const Elem> a);

/// Substitutes column j of X by the constant vector b, giving an element
/// over shape (rows, cols - 1). Requires cols > rows.
MinorCombination specialize_col(const MinorCombination& f, int j, std::span<const Elem> b);

/// Vectors of length cols, in lexicographic order (first coordinate most
/// significant), enumerated by index.
std::vector<Elem> vector_from_index(std::uint64_t index, int length, unsigned q);

/// { a : specialize_row(f, i, a) == 0 }, sorted lexicographically.
std::vector<std::vector<Elem>> row_vanishing_locus(const MinorCombination& f, int i);

/// Exact expansion of det(X[rows, :] * n + v) in the minor basis of `shape`.
///
/// `rows` selects r rows of X (1-based), n is cols x r and v is r x r. The
/// determinant is expanded by multilinearity over the columns taken from v,
/// each term is Laplace-expanded along those columns, and the remaining
/// products X[rows', :] * n[:, cols'] are expanded with Cauchy-Binet.
MinorCombination expand_affine_det(const Field& field, Shape shape, const IndexSet& rows, const Matrix& n,
                                   const Matrix& v);

/// det(Y + B) for a square l x l matrix B, over the minor basis of l x l Y.
MinorCombination det_translation_expand(const Matrix& b);

struct AbsorbedTranslation {
  Matrix a;            // f = det(X + a) + h
  MinorCombination h;  // supported on minors of order <= l - 2
};

/// For square shape and unit coefficient on det(X): moves every submaximal
/// minor into a translation. Throws std::invalid_argument otherwise.
AbsorbedTranslation absorb_translation(const MinorCombination& f);

/// One line per nonzero term: "rowset|colset: coeff", e.g. "1,2|1,3: 2";
/// the empty minor prints as "-|-".
std::string to_text(const MinorCombination& f);

}  // namespace agc
