#include "agc/qcomb.hpp"

#include "agc/finite_field.hpp"

#include <stdexcept>

namespace agc {

std::vector<IndexSet> k_subsets(int n, int k) {
  std::vector<IndexSet> out;
  if (k < 0 || k > n) return out;
  IndexSet current(k);
  for (int i = 0; i < k; ++i) current[i] = i + 1;
  while (true) {
    out.push_back(current);
    int pos = k - 1;
    while (pos >= 0 && current[pos] == n - k + pos + 1) --pos;
    if (pos < 0) break;
    ++current[pos];
    for (int i = pos + 1; i < k; ++i) current[i] = current[i - 1] + 1;
  }
  return out;
}

CodeParams CodeParams::make(unsigned q, unsigned l, unsigned lp) {
  if (l < 1) throw std::invalid_argument("l must be at least 1");
  if (l > lp)
    throw std::invalid_argument("l = " + std::to_string(l) + " exceeds l' = " + std::to_string(lp) +
                                "; the minor space is symmetric under transposition, pass the parameters as (l', l)");
  Field::of_order(q);  // validates q
  return CodeParams{q, l, lp};
}

std::string CodeParams::to_string() const {
  return "q=" + std::to_string(q) + " l=" + std::to_string(l) + " lp=" + std::to_string(lp);
}

BigInt big_pow(unsigned base, unsigned exponent) {
  BigInt result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt result = 1;
  for (unsigned i = 1; i <= k; ++i) result = result * (n - k + i) / i;
  return result;
}

BigInt q_factorial(unsigned d, unsigned q) {
  BigInt result = 1;
  for (unsigned i = 1; i <= d; ++i) result *= big_pow(q, i) - 1;
  return result;
}

BigInt gaussian_binomial(unsigned n, unsigned k, unsigned q) {
  if (k > n) throw std::invalid_argument("gaussian_binomial: k > n");
  return q_factorial(n, q) / (q_factorial(k, q) * q_factorial(n - k, q));
}

BigInt gaussian_binomial_product(unsigned n, unsigned k, unsigned q) {
  if (k > n) throw std::invalid_argument("gaussian_binomial_product: k > n");
  BigInt num = 1, den = 1;
  for (unsigned i = 0; i < k; ++i) {
    num *= big_pow(q, n) - big_pow(q, i);
    den *= big_pow(q, k) - big_pow(q, i);
  }
  return num / den;
}

BigInt gl_order(unsigned n, unsigned q) {
  BigInt result = 1;
  for (unsigned i = 0; i < n; ++i) result *= big_pow(q, n) - big_pow(q, i);
  return result;
}

BigInt sl_order(unsigned n, unsigned q) { return gl_order(n, q) / (q - 1); }

BigInt min_distance_qfactorial(const CodeParams& p) {
  return big_pow(p.q, p.delta() - p.l * (p.l + 1) / 2) * q_factorial(p.l, p.q);
}

BigInt min_distance_formula(const CodeParams& p) {
  BigInt d = big_pow(p.q, p.delta() - p.l * p.l) * gl_order(p.l, p.q);
  if (d != min_distance_qfactorial(p)) throw std::logic_error("minimum distance forms disagree");
  return d;
}

BigInt dimension_chu_vandermonde(const CodeParams& p) {
  BigInt sum = 0;
  for (unsigned i = 0; i <= p.l; ++i) sum += binomial(p.l, p.l - i) * binomial(p.lp, i);
  return sum;
}

BigInt dimension_formula(const CodeParams& p) {
  BigInt k = binomial(p.m(), p.l);
  if (k != dimension_chu_vandermonde(p)) throw std::logic_error("dimension forms disagree");
  return k;
}

BigInt min_weight_count_formula(const CodeParams& p) {
  return BigInt(p.q - 1) * big_pow(p.q, p.l * p.l) * gaussian_binomial(p.lp, p.l, p.q);
}

BigInt group_order_formula(const CodeParams& p) { return big_pow(p.q, p.delta()) * gl_order(p.lp, p.q); }

BigInt stabilizer_order_formula(const CodeParams& p) {
  BigInt tail = 1;
  for (unsigned i = p.l; i < p.lp; ++i) tail *= big_pow(p.q, p.lp) - big_pow(p.q, i);
  return big_pow(p.q, p.l * (p.lp - p.l)) * tail * gl_order(p.l, p.q) / (p.q - 1);
}

BigInt translation_gl_order(const CodeParams& p) { return big_pow(p.q, p.delta()) * gl_order(p.l, p.q); }

ParamTable param_table(const CodeParams& p) {
  return ParamTable{big_pow(p.q, p.delta()),       dimension_formula(p),     min_distance_formula(p),
                    min_weight_count_formula(p),   group_order_formula(p),   stabilizer_order_formula(p)};
}

}  // namespace agc
