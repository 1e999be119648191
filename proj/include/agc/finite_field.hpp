#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace agc {

/// An element of GF(q), identified with its index in [0, q).
///
/// Index 0 is zero and index 1 is one. For q = p^e with e > 1 the base-p
/// digits of the index (least significant first) are the coefficients of
/// the element in the polynomial basis 1, x, ..., x^{e-1}.
using Elem = std::uint16_t;

/// Finite field GF(p^e) with q <= 2^16.
///
/// Cheap to copy: all instances made from the same (p, e) share one
/// immutable table set. Extension fields use the smallest monic irreducible
/// polynomial of degree e, where polynomials are ordered by the integer
/// sum c_i p^i of their coefficients (so x^3+x+1 precedes x^3+x^2+1).
class Field {
 public:
  static constexpr unsigned kMaxOrder = 1u << 16;

  /// Throws std::invalid_argument for non-prime p, e = 0 or p^e > 2^16.
  static Field make(unsigned p, unsigned e = 1);
  /// Field with q elements; q must be a prime power.
  static Field of_order(unsigned q);

  unsigned characteristic() const;
  unsigned degree() const;
  unsigned size() const;
  /// Modulus coefficients c_0..c_e (monic, so c_e = 1); empty for prime fields.
  const std::vector<unsigned>& modulus() const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws std::domain_error on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t exponent) const;

  /// Image of an integer in the prime subfield.
  Elem from_int(long long value) const;
  /// +1 or -1 according to the parity of k.
  Elem sign(long long k) const { return (k % 2 == 0) ? Elem{1} : neg(1); }

  /// All elements in index order 0, 1, ..., q-1.
  std::vector<Elem> elements() const;

  bool contains(unsigned index) const { return index < size(); }

  /// "p^e/c_0,c_1,...,c_e", or "p^1/-" for a prime field.
  std::string to_string() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Tables;
  static std::shared_ptr<const Tables> build_tables(unsigned p, unsigned e);
  explicit Field(std::shared_ptr<const Tables> tables) : t_(std::move(tables)) {}
  std::shared_ptr<const Tables> t_;
};

bool is_prime(unsigned n);

/// Polynomials over GF(p) as coefficient lists, lowest degree first.
namespace gfp_poly {
bool is_irreducible(const std::vector<unsigned>& poly, unsigned p);
/// Smallest monic irreducible of the given degree (ordering as for Field).
std::vector<unsigned> smallest_irreducible(unsigned p, unsigned degree);
}  // namespace gfp_poly

}  // namespace agc
