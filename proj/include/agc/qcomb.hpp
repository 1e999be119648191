#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace agc {

using BigInt = boost::multiprecision::cpp_int;

/// Strictly increasing list of 1-based indices.
using IndexSet = std::vector<int>;

/// All k-subsets of {1..n} in lexicographic order.
std::vector<IndexSet> k_subsets(int n, int k);

/// Parameters (q, l, l') of an affine Grassmann code, with 1 <= l <= l'.
struct CodeParams {
  unsigned q = 2;
  unsigned l = 1;
  unsigned lp = 1;

  /// Validating constructor. Rejects l > l' (transpose instead) and q that
  /// is not a prime power.
  static CodeParams make(unsigned q, unsigned l, unsigned lp);

  unsigned m() const { return l + lp; }
  unsigned delta() const { return l * lp; }
  std::string to_string() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

BigInt big_pow(unsigned base, unsigned exponent);
BigInt binomial(unsigned n, unsigned k);

/// [d]_q! = prod_{i=1}^{d} (q^i - 1).
BigInt q_factorial(unsigned d, unsigned q);
/// Gaussian binomial via q-factorials. Throws std::invalid_argument when k > n.
BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q);
/// Gaussian binomial via prod_{i<k} (q^n - q^i) / (q^k - q^i).
BigInt gaussian_binomial_product(unsigned n, unsigned k, unsigned q);

/// |GL_n(F_q)| = prod_{i<n} (q^n - q^i).
BigInt gl_order(unsigned n, unsigned q);
/// |SL_n(F_q)| = |GL_n(F_q)| / (q - 1).
BigInt sl_order(unsigned n, unsigned q);

/// d = q^{delta - l^2} prod_{i<l} (q^l - q^i); cross-checked against the
/// q-factorial form and throws std::logic_error if they ever disagree.
BigInt min_distance_formula(const CodeParams& params);
/// d = q^{delta - C(l+1,2)} [l]_q!.
BigInt min_distance_qfactorial(const CodeParams& params);

/// k = C(m, l); cross-checked against the Chu-Vandermonde sum.
BigInt dimension_formula(const CodeParams& params);
/// sum_i C(l, l-i) C(l', i).
BigInt dimension_chu_vandermonde(const CodeParams& params);

/// A_d = (q-1) q^{l^2} [l' l]_q.
BigInt min_weight_count_formula(const CodeParams& params);
/// q^delta prod_{i<l'} (q^{l'} - q^i).
BigInt group_order_formula(const CodeParams& params);
/// (q^{l(l'-l)} / (q-1)) prod_{i=l}^{l'-1} (q^{l'} - q^i) prod_{j<l} (q^l - q^j).
BigInt stabilizer_order_formula(const CodeParams& params);
/// q^delta prod_{i<l} (q^l - q^i), the order of the translation-times-GL_l part.
BigInt translation_gl_order(const CodeParams& params);

/// One row of the parameter table.
struct ParamTable {
  BigInt n, k, d, a_d, group_order, stabilizer_order;
};
ParamTable param_table(const CodeParams& params);

}  // namespace agc
