#pragma once

#include "agc/affine_code.hpp"
#include "agc/matrix.hpp"
#include "agc/minor_space.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace agc {

/// The affine map P -> P A^{-1} + u on l x l' matrices.
class AffineMap {
 public:
  /// Throws std::invalid_argument if A is singular or the shapes disagree.
  AffineMap(Matrix u, Matrix a);
  static AffineMap identity(const Field& field, Shape shape);
  static AffineMap translation(Matrix u);

  const Matrix& u() const { return u_; }
  const Matrix& a() const { return a_; }
  const Matrix& a_inverse() const { return a_inv_; }
  Shape shape() const { return {u_.rows(), u_.cols()}; }

  Matrix apply(const Matrix& point) const;

  friend bool operator==(const AffineMap& x, const AffineMap& y) { return x.u_ == y.u_ && x.a_ == y.a_; }

 private:
  Matrix u_;
  Matrix a_;
  Matrix a_inv_;
};

/// (x o y)(P) = x(y(P)); equals the map with u = v A^{-1} + u and matrix A B.
AffineMap compose(const AffineMap& x, const AffineMap& y);
AffineMap inverse(const AffineMap& x);

/// g(X) = f(X A^{-1} + u), expanded symbolically in the minor basis.
MinorCombination act_on_poly(const AffineMap& phi, const MinorCombination& f);

/// perm[j] = point_index(phi(P_j)).
std::vector<std::uint64_t> permutation(const AffineMap& phi);
/// The induced coordinate permutation: out[j] = word[perm[j]].
std::vector<Elem> permute_word(std::span<const std::uint64_t> perm, std::span<const Elem> word);

/// Every group element, A in row-major lexicographic order outermost and u
/// by point index inside. Throws CapExceeded past caps.max_listed.
std::vector<AffineMap> enumerate_group(const CodeParams& params, const Caps& caps = {});

/// True iff phi fixes the leading maximal minor under act_on_poly.
bool stabilizer_test(const AffineMap& phi);
/// The explicit criterion: the first l columns of u vanish and, with M the
/// first l columns of A^{-1}, some E in SL_l has M E = (I; 0).
bool stabilizer_criterion(const AffineMap& phi);

/// lambda * det(X M + m) for M of shape l' x l and m of shape l x l.
MinorCombination affine_det_form(const Field& field, Shape shape, Elem lambda, const Matrix& m_lin,
                                 const Matrix& m_shift);

/// All lambda det(XM + m): lambda nonzero, m arbitrary, M one reduced
/// column-echelon representative per column space. Sorted by coefficient
/// vector. Throws std::logic_error if two outputs coincide.
std::vector<MinorCombination> generate_min_weight_polys(const CodeParams& params, const Caps& caps = {});

struct MinWeightWitness {
  Elem lambda = 0;
  Matrix m_lin;    // l' x l, reduced column-echelon
  Matrix m_shift;  // l x l
};

struct MinWeightCheck {
  bool is_min_weight = false;
  std::optional<MinWeightWitness> witness;
  std::string reason;  // why the check failed, empty on success
};

/// Decides whether f = lambda det(XM + m) by translating to a locus point,
/// checking homogeneity and reading M off the first row-vanishing locus.
/// Throws std::invalid_argument for the zero polynomial.
MinWeightCheck is_min_weight_form(const MinorCombination& f);

}  // namespace agc
