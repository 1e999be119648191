#pragma once

#include "agc/finite_field.hpp"
#include "agc/matrix.hpp"
#include "agc/minor_space.hpp"
#include "agc/qcomb.hpp"

#include <cstdint>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

namespace agc {

/// Default caps for exhaustive work; the CLI may override them.
struct Caps {
  std::uint64_t max_points = std::uint64_t{1} << 24;    // q^delta
  std::uint64_t max_messages = std::uint64_t{1} << 26;  // q^k
  std::uint64_t max_gl_candidates = std::uint64_t{1} << 24;
  std::uint64_t max_listed = std::uint64_t{1} << 22;  // subspaces, min-weight polynomials
};

/// Linear code given by a k x n generator matrix of full row rank.
class LinearCode {
 public:
  explicit LinearCode(Matrix generator);

  const Field& field() const { return generator_.field(); }
  int length() const { return generator_.cols(); }
  int dimension() const { return generator_.rows(); }
  const Matrix& generator() const { return generator_; }

  /// message * G. Throws std::invalid_argument on a length mismatch.
  std::vector<Elem> encode(std::span<const Elem> message) const;
  /// Row-space membership.
  bool contains(std::span<const Elem> word) const;

  /// Results of earlier exhaustive scans, if any. Copies share the cache.
  std::optional<std::vector<std::uint64_t>> cached_distribution() const;
  std::optional<std::uint64_t> cached_min_distance() const;
  void cache_distribution(std::vector<std::uint64_t> dist) const;
  void cache_min_distance(std::uint64_t d) const;

 private:
  struct Cache {
    std::mutex mutex;
    std::optional<std::vector<std::uint64_t>> distribution;
    std::optional<std::uint64_t> min_distance;
  };
  Matrix generator_;
  Matrix rref_;
  std::vector<int> pivots_;
  std::shared_ptr<Cache> cache_ = std::make_shared<Cache>();
};

/// Coordinates of the affine code are the l x l' matrices P, ordered by
/// sum_{i,j} index(p_ij) * q^{(i-1) l' + (j-1)} (entry (1,1) least significant).
std::uint64_t point_index(const Matrix& point);
Matrix point_matrix(const Field& field, Shape shape, std::uint64_t index);
/// q^{rows*cols}; throws CapExceeded past the cap.
std::uint64_t point_count(const Field& field, Shape shape, std::uint64_t cap = Caps{}.max_points);

/// Ev(f): the values of f at every point, in point-index order.
std::vector<Elem> ev(const MinorCombination& f);

/// Generator whose row r is Ev(basis minor r).
LinearCode build_affine_code(const CodeParams& params, const Caps& caps = {});

std::size_t weight(std::span<const Elem> word);

struct ScanOptions {
  unsigned threads = 1;
  /// Stop the minimum-distance scan once a codeword of this weight is seen.
  std::optional<std::uint64_t> stop_at_weight;
  std::uint64_t max_messages = Caps{}.max_messages;
};

/// Messages are enumerated by index in [0, q^k); digit r of the index (base
/// q, first row most significant) is the coefficient of generator row r.
std::vector<Elem> message_from_index(std::uint64_t index, int k, unsigned q);

/// Minimum nonzero weight by exhaustive scan over all q^k - 1 nonzero
/// messages. A full (blind) scan is cached on the code.
std::uint64_t min_distance(const LinearCode& code, const ScanOptions& options = {});
/// counts[w] = number of codewords of weight w (length n + 1, sums to q^k).
std::vector<std::uint64_t> weight_distribution(const LinearCode& code, const ScanOptions& options = {});
/// All messages whose codeword has exactly weight w, in index order.
std::vector<std::vector<Elem>> messages_of_weight(const LinearCode& code, std::uint64_t w,
                                                  const ScanOptions& options = {});

/// Weight of Ev of a maximal minor: q^{delta - l^2} prod_{i<l} (q^l - q^i).
BigInt max_minor_weight(const CodeParams& params);
/// The same weight counted directly: |GL_l(F_q)| by enumeration times q^{delta - l^2}.
BigInt max_minor_weight_by_count(const CodeParams& params, const Caps& caps = {});

struct RowSpecBound {
  std::size_t locus_size = 0;  // t = #V_f^{(i)}
  BigInt numerator;            // (q^{l'} - t) d
  BigInt denominator;          // q^{l'} - q^{l'-l}
  std::uint64_t actual = 0;    // w(Ev(f))
  bool holds() const { return BigInt(actual) * denominator >= numerator; }
};

/// Weight lower bound from the size of the i-th row-vanishing locus.
/// Throws std::invalid_argument for the zero polynomial.
RowSpecBound rowspec_weight_bound(const MinorCombination& f, int i);

}  // namespace agc
