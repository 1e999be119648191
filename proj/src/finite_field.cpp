#include "agc/finite_field.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace agc {

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace gfp_poly {
namespace {

using Poly = std::vector<unsigned>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

unsigned inv_mod(unsigned a, unsigned p) {
  unsigned r = 1;
  for (unsigned e = p - 2, b = a % p; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return r;
}

// Remainder of a modulo b (b nonzero, trimmed).
Poly poly_mod(Poly a, const Poly& b, unsigned p) {
  trim(a);
  const unsigned lead_inv = inv_mod(b.back(), p);
  while (a.size() >= b.size()) {
    const unsigned factor = a.back() * lead_inv % p;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[shift + i] = (a[shift + i] + p - factor * b[i] % p) % p;
    trim(a);
  }
  return a;
}

// Monic polynomial of the given degree whose lower coefficients are the base-p digits of code.
Poly monic_from_code(unsigned long code, unsigned p, unsigned degree) {
  Poly poly(degree + 1, 0);
  for (unsigned i = 0; i < degree; ++i) {
    poly[i] = code % p;
    code /= p;
  }
  poly[degree] = 1;
  return poly;
}

}  // namespace

bool is_irreducible(const std::vector<unsigned>& poly_in, unsigned p) {
  Poly poly = poly_in;
  trim(poly);
  if (poly.size() < 2) return false;
  const unsigned degree = static_cast<unsigned>(poly.size() - 1);
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    unsigned long count = 1;
    for (unsigned i = 0; i < d; ++i) count *= p;
    for (unsigned long code = 0; code < count; ++code)
      if (poly_mod(poly, monic_from_code(code, p, d), p).empty()) return false;
  }
  return true;
}

std::vector<unsigned> smallest_irreducible(unsigned p, unsigned degree) {
  unsigned long count = 1;
  for (unsigned i = 0; i < degree; ++i) count *= p;
  for (unsigned long code = 0; code < count; ++code) {
    Poly candidate = monic_from_code(code, p, degree);
    if (is_irreducible(candidate, p)) return candidate;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace gfp_poly

struct Field::Tables {
  unsigned p = 0;
  unsigned e = 0;
  unsigned q = 0;
  std::vector<unsigned> modulus;
  bool full_tables = false;
  std::vector<Elem> add;  // q*q, only when full_tables
  std::vector<Elem> mul;  // q*q, only when full_tables
  std::vector<Elem> neg;
  std::vector<Elem> inv;
  std::vector<std::uint32_t> log;
  std::vector<Elem> exp;  // 2(q-1) entries

  Elem digit_add(Elem a, Elem b) const {
    if (e == 1) return static_cast<Elem>((a + b) % p);
    if (p == 2) return static_cast<Elem>(a ^ b);
    unsigned result = 0;
    unsigned place = 1;
    for (unsigned i = 0; i < e; ++i) {
      result += ((a % p + b % p) % p) * place;
      a = static_cast<Elem>(a / p);
      b = static_cast<Elem>(b / p);
      place *= p;
    }
    return static_cast<Elem>(result);
  }

  // Schoolbook product reduced by the modulus; only used while building tables.
  Elem poly_mul(Elem a, Elem b) const {
    if (e == 1) return static_cast<Elem>(static_cast<unsigned long>(a) * b % p);
    std::vector<unsigned> da(e), db(e), prod(2 * e - 1, 0);
    for (unsigned i = 0; i < e; ++i) {
      da[i] = a % p;
      a = static_cast<Elem>(a / p);
      db[i] = b % p;
      b = static_cast<Elem>(b / p);
    }
    for (unsigned i = 0; i < e; ++i)
      for (unsigned j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    for (unsigned k = 2 * e - 2; k >= e; --k) {
      const unsigned c = prod[k];
      if (c == 0) continue;
      prod[k] = 0;
      for (unsigned i = 0; i < e; ++i)
        prod[k - e + i] = (prod[k - e + i] + p * p - c * modulus[i] % p) % p;
    }
    unsigned result = 0;
    for (unsigned i = e; i-- > 0;) result = result * p + prod[i];
    return static_cast<Elem>(result);
  }
};

Field Field::make(unsigned p, unsigned e) {
  if (!is_prime(p)) throw std::invalid_argument("field characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw std::invalid_argument("field extension degree must be at least 1");
  unsigned long q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("unsupported field size (q > 2^16)");
  }

  static std::mutex mutex;
  static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const Tables>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{p, e}];
  if (!slot) slot = build_tables(p, e);
  return Field(slot);
}

Field Field::of_order(unsigned q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  unsigned p = 2;
  while (q % p != 0) ++p;
  unsigned e = 0;
  unsigned rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++e;
  }
  if (rest != 1) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  return make(p, e);
}

std::shared_ptr<const Field::Tables> Field::build_tables(unsigned p, unsigned e) {
  auto t = std::make_shared<Tables>();
  t->p = p;
  t->e = e;
  t->q = 1;
  for (unsigned i = 0; i < e; ++i) t->q *= p;
  const unsigned q = t->q;
  if (e > 1) t->modulus = gfp_poly::smallest_irreducible(p, e);

  t->neg.resize(q);
  for (unsigned a = 0; a < q; ++a) {
    unsigned result = 0, place = 1, rest = a;
    for (unsigned i = 0; i < e; ++i) {
      result += ((p - rest % p) % p) * place;
      rest /= p;
      place *= p;
    }
    t->neg[a] = static_cast<Elem>(result);
  }

  // Multiplicative group is cyclic: find a generator and build log/exp.
  t->log.assign(q, 0);
  t->exp.assign(2 * (q - 1), 0);
  if (q == 2) {
    t->exp = {1, 1};
  } else {
    for (unsigned g = 2; g < q; ++g) {
      Elem x = 1;
      unsigned order = 0;
      do {
        x = t->poly_mul(x, static_cast<Elem>(g));
        ++order;
      } while (x != 1 && order < q);
      if (order != q - 1) continue;
      x = 1;
      for (unsigned k = 0; k < q - 1; ++k) {
        t->exp[k] = x;
        t->exp[k + q - 1] = x;
        t->log[x] = k;
        x = t->poly_mul(x, static_cast<Elem>(g));
      }
      break;
    }
  }

  t->inv.assign(q, 0);
  for (unsigned a = 1; a < q; ++a) t->inv[a] = t->exp[(q - 1 - t->log[a]) % (q - 1)];

  t->full_tables = q <= 256;
  if (t->full_tables) {
    t->add.resize(static_cast<std::size_t>(q) * q);
    t->mul.resize(static_cast<std::size_t>(q) * q);
    for (unsigned a = 0; a < q; ++a)
      for (unsigned b = 0; b < q; ++b) {
        t->add[a * q + b] = t->digit_add(static_cast<Elem>(a), static_cast<Elem>(b));
        t->mul[a * q + b] =
            (a == 0 || b == 0) ? Elem{0} : t->exp[t->log[a] + t->log[b]];
      }
  }
  return t;
}

unsigned Field::characteristic() const { return t_->p; }
unsigned Field::degree() const { return t_->e; }
unsigned Field::size() const { return t_->q; }
const std::vector<unsigned>& Field::modulus() const { return t_->modulus; }

Elem Field::add(Elem a, Elem b) const {
  return t_->full_tables ? t_->add[a * t_->q + b] : t_->digit_add(a, b);
}

Elem Field::sub(Elem a, Elem b) const { return add(a, t_->neg[b]); }

Elem Field::neg(Elem a) const { return t_->neg[a]; }

Elem Field::mul(Elem a, Elem b) const {
  if (t_->full_tables) return t_->mul[a * t_->q + b];
  if (a == 0 || b == 0) return 0;
  return t_->exp[t_->log[a] + t_->log[b]];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return t_->inv[a];
}

Elem Field::div(Elem a, Elem b) const { return mul(a, inv(b)); }

Elem Field::pow(Elem a, std::uint64_t exponent) const {
  if (exponent == 0) return 1;
  if (a == 0) return 0;
  const std::uint64_t order = t_->q - 1;
  return t_->exp[(static_cast<std::uint64_t>(t_->log[a]) * (exponent % order)) % order];
}

Elem Field::from_int(long long value) const {
  const long long p = t_->p;
  return static_cast<Elem>(((value % p) + p) % p);
}

std::vector<Elem> Field::elements() const {
  std::vector<Elem> all(t_->q);
  for (unsigned i = 0; i < t_->q; ++i) all[i] = static_cast<Elem>(i);
  return all;
}

std::string Field::to_string() const {
  std::string s = std::to_string(t_->p) + "^" + std::to_string(t_->e) + "/";
  if (t_->modulus.empty()) return s + "-";
  for (std::size_t i = 0; i < t_->modulus.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(t_->modulus[i]);
  }
  return s;
}

bool operator==(const Field& a, const Field& b) {
  return a.t_ == b.t_ || (a.t_->p == b.t_->p && a.t_->e == b.t_->e);
}

}  // namespace agc
