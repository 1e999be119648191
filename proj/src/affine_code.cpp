#include "agc/affine_code.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace agc {

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), rref_(rref_rows(generator_)), pivots_(pivot_columns(rref_)) {
  if (static_cast<int>(pivots_.size()) != generator_.rows())
    throw std::invalid_argument("generator matrix does not have full row rank");
}

std::vector<Elem> LinearCode::encode(std::span<const Elem> message) const {
  if (static_cast<int>(message.size()) != dimension()) throw std::invalid_argument("message length mismatch");
  return vec_mat(message, generator_);
}

bool LinearCode::contains(std::span<const Elem> word) const {
  if (static_cast<int>(word.size()) != length()) return false;
  const Field& f = field();
  std::vector<Elem> rest(word.begin(), word.end());
  for (std::size_t r = 0; r < pivots_.size(); ++r) {
    const Elem c = rest[pivots_[r]];
    if (c == 0) continue;
    for (int j = 0; j < length(); ++j) rest[j] = f.sub(rest[j], f.mul(c, rref_(static_cast<int>(r), j)));
  }
  return std::all_of(rest.begin(), rest.end(), [](Elem e) { return e == 0; });
}

std::optional<std::vector<std::uint64_t>> LinearCode::cached_distribution() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->distribution;
}

std::optional<std::uint64_t> LinearCode::cached_min_distance() const {
  std::lock_guard lock(cache_->mutex);
  return cache_->min_distance;
}

void LinearCode::cache_distribution(std::vector<std::uint64_t> dist) const {
  std::lock_guard lock(cache_->mutex);
  cache_->distribution = std::move(dist);
}

void LinearCode::cache_min_distance(std::uint64_t d) const {
  std::lock_guard lock(cache_->mutex);
  cache_->min_distance = d;
}

std::uint64_t point_index(const Matrix& point) {
  const std::uint64_t q = point.field().size();
  std::uint64_t index = 0;
  for (int k = point.rows() * point.cols() - 1; k >= 0; --k)
    index = index * q + point(k / point.cols(), k % point.cols());
  return index;
}

Matrix point_matrix(const Field& field, Shape shape, std::uint64_t index) {
  Matrix p(field, shape.rows, shape.cols);
  const unsigned q = field.size();
  for (int k = 0; k < shape.rows * shape.cols; ++k) {
    p(k / shape.cols, k % shape.cols) = static_cast<Elem>(index % q);
    index /= q;
  }
  return p;
}

std::uint64_t point_count(const Field& field, Shape shape, std::uint64_t cap) {
  std::uint64_t n = 1;
  for (int k = 0; k < shape.rows * shape.cols; ++k) {
    n *= field.size();
    if (n > cap) throw CapExceeded("number of points exceeds cap of " + std::to_string(cap));
  }
  return n;
}

std::vector<Elem> ev(const MinorCombination& f) {
  const std::uint64_t n = point_count(f.field(), f.shape());
  std::vector<Elem> word(n);
  for (std::uint64_t j = 0; j < n; ++j) word[j] = evaluate(f, point_matrix(f.field(), f.shape(), j));
  return word;
}

LinearCode build_affine_code(const CodeParams& params, const Caps& caps) {
  const Field field = Field::of_order(params.q);
  const Shape shape = shape_of(params);
  const std::uint64_t n = point_count(field, shape, caps.max_points);
  const auto basis = minor_basis(shape);
  const int k = static_cast<int>(basis->size());
  Matrix g(field, k, static_cast<int>(n));
  for (std::uint64_t j = 0; j < n; ++j) {
    const auto values = minor_values(point_matrix(field, shape, j), *basis);
    for (int r = 0; r < k; ++r) g(r, static_cast<int>(j)) = values[r];
  }
  return LinearCode(std::move(g));
}

std::size_t weight(std::span<const Elem> word) {
  return static_cast<std::size_t>(std::count_if(word.begin(), word.end(), [](Elem e) { return e != 0; }));
}

std::vector<Elem> message_from_index(std::uint64_t index, int k, unsigned q) { return vector_from_index(index, k, q); }

namespace {

std::uint64_t message_count(const LinearCode& code, std::uint64_t cap) {
  std::uint64_t total = 1;
  for (int r = 0; r < code.dimension(); ++r) {
    total *= code.field().size();
    if (total > cap) throw CapExceeded("number of messages exceeds cap of " + std::to_string(cap));
  }
  return total;
}

// Walks messages begin..end-1 in index order, maintaining the codeword
// incrementally. visit(index, weight) returns false to stop early.
template <class Visit>
void scan_range(const LinearCode& code, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  if (begin >= end) return;
  const Field& f = code.field();
  const unsigned q = f.size();
  const int k = code.dimension();
  const int n = code.length();
  const Matrix& g = code.generator();

  if (q == 2) {
    const int words = (n + 63) / 64;
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(k) * words, 0);
    for (int r = 0; r < k; ++r)
      for (int j = 0; j < n; ++j)
        if (g(r, j)) rows[static_cast<std::size_t>(r) * words + j / 64] |= std::uint64_t{1} << (j % 64);
    std::vector<std::uint64_t> cw(words, 0);
    auto toggle = [&](int r) {
      const std::uint64_t* row = rows.data() + static_cast<std::size_t>(r) * words;
      for (int w = 0; w < words; ++w) cw[w] ^= row[w];
    };
    for (int r = 0; r < k; ++r)
      if ((begin >> (k - 1 - r)) & 1) toggle(r);
    for (std::uint64_t idx = begin;;) {
      std::size_t wt = 0;
      for (std::uint64_t word : cw) wt += static_cast<std::size_t>(std::popcount(word));
      if (!visit(idx, wt)) return;
      if (++idx == end) return;
      std::uint64_t changed = (idx - 1) ^ idx;
      while (changed) {
        const int bit = std::countr_zero(changed);
        changed &= changed - 1;
        toggle(k - 1 - bit);
      }
    }
  }

  // General q: inc[r][a] = (a+1)*row_r - a*row_r, where a+1 is the next index mod q.
  std::vector<std::vector<Elem>> inc(static_cast<std::size_t>(k) * q);
  for (int r = 0; r < k; ++r)
    for (unsigned a = 0; a < q; ++a) {
      const Elem next = static_cast<Elem>((a + 1) % q);
      const Elem delta = f.sub(next, static_cast<Elem>(a));
      auto& v = inc[static_cast<std::size_t>(r) * q + a];
      v.resize(n);
      for (int j = 0; j < n; ++j) v[j] = f.mul(delta, g(r, j));
    }
  std::vector<Elem> digits = message_from_index(begin, k, q);
  std::vector<Elem> cw = code.encode(digits);
  for (std::uint64_t idx = begin;;) {
    std::size_t wt = 0;
    for (Elem e : cw) wt += (e != 0);
    if (!visit(idx, wt)) return;
    if (++idx == end) return;
    for (int r = k - 1; r >= 0; --r) {
      const Elem old = digits[r];
      const auto& v = inc[static_cast<std::size_t>(r) * q + old];
      for (int j = 0; j < n; ++j) cw[j] = f.add(cw[j], v[j]);
      digits[r] = static_cast<Elem>((old + 1) % q);
      if (digits[r] != 0) break;
    }
  }
}

// Splits [begin, end) into contiguous chunks, one per worker.
template <class Work>
void run_partitioned(std::uint64_t begin, std::uint64_t end, unsigned threads, Work&& work) {
  threads = std::max(1u, threads);
  const std::uint64_t span = end > begin ? end - begin : 0;
  if (threads == 1 || span < 2 * threads) {
    work(0u, begin, end);
    return;
  }
  std::vector<std::jthread> pool;
  const std::uint64_t chunk = span / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::uint64_t lo = begin + t * chunk;
    const std::uint64_t hi = (t + 1 == threads) ? end : lo + chunk;
    pool.emplace_back([&work, t, lo, hi] { work(t, lo, hi); });
  }
}

}  // namespace

std::uint64_t min_distance(const LinearCode& code, const ScanOptions& options) {
  if (auto d = code.cached_min_distance()) return *d;
  const std::uint64_t total = message_count(code, options.max_messages);
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::uint64_t> best(threads, std::numeric_limits<std::uint64_t>::max());
  std::atomic<bool> stop{false};
  run_partitioned(1, total, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    scan_range(code, lo, hi, [&](std::uint64_t idx, std::size_t wt) {
      best[t] = std::min<std::uint64_t>(best[t], wt);
      if (options.stop_at_weight && wt == *options.stop_at_weight) {
        stop = true;
        return false;
      }
      // Poll the shared flag only occasionally.
      return (idx & 0xfff) != 0 || !stop.load(std::memory_order_relaxed);
    });
  });
  std::uint64_t d = *std::min_element(best.begin(), best.end());
  if (d == std::numeric_limits<std::uint64_t>::max()) d = 0;
  // An early exit only shows d <= stop weight, so only blind results are kept.
  if (!stop) code.cache_min_distance(d);
  return d;
}

std::vector<std::uint64_t> weight_distribution(const LinearCode& code, const ScanOptions& options) {
  if (auto dist = code.cached_distribution()) return *dist;
  const std::uint64_t total = message_count(code, options.max_messages);
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<std::uint64_t>> counts(threads, std::vector<std::uint64_t>(code.length() + 1, 0));
  run_partitioned(0, total, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    scan_range(code, lo, hi, [&](std::uint64_t, std::size_t wt) {
      ++counts[t][wt];
      return true;
    });
  });
  std::vector<std::uint64_t> merged(code.length() + 1, 0);
  for (const auto& c : counts)
    for (std::size_t w = 0; w < c.size(); ++w) merged[w] += c[w];
  code.cache_distribution(merged);
  std::size_t d = 1;
  while (d < merged.size() && merged[d] == 0) ++d;
  code.cache_min_distance(d < merged.size() ? d : 0);
  return merged;
}

std::vector<std::vector<Elem>> messages_of_weight(const LinearCode& code, std::uint64_t w,
                                                  const ScanOptions& options) {
  const std::uint64_t total = message_count(code, options.max_messages);
  const unsigned threads = std::max(1u, options.threads);
  std::vector<std::vector<std::uint64_t>> found(threads);
  run_partitioned(0, total, threads, [&](unsigned t, std::uint64_t lo, std::uint64_t hi) {
    scan_range(code, lo, hi, [&](std::uint64_t idx, std::size_t wt) {
      if (wt == w) found[t].push_back(idx);
      return true;
    });
  });
  std::vector<std::vector<Elem>> out;
  for (const auto& part : found)
    for (std::uint64_t idx : part) out.push_back(message_from_index(idx, code.dimension(), code.field().size()));
  return out;
}

BigInt max_minor_weight(const CodeParams& p) { return big_pow(p.q, p.delta() - p.l * p.l) * gl_order(p.l, p.q); }

BigInt max_minor_weight_by_count(const CodeParams& p, const Caps& caps) {
  std::uint64_t invertible = 0;
  for_each_gl(Field::of_order(p.q), static_cast<int>(p.l), [&](const Matrix&) { ++invertible; },
              caps.max_gl_candidates);
  return BigInt(invertible) * big_pow(p.q, p.delta() - p.l * p.l);
}

RowSpecBound rowspec_weight_bound(const MinorCombination& f, int i) {
  if (f.is_zero()) throw std::invalid_argument("rowspec_weight_bound: zero polynomial");
  const Shape shape = f.shape();
  const auto params = CodeParams::make(f.field().size(), static_cast<unsigned>(shape.rows),
                                       static_cast<unsigned>(shape.cols));
  RowSpecBound b;
  b.locus_size = row_vanishing_locus(f, i).size();
  const BigInt full = big_pow(params.q, params.lp);
  b.numerator = (full - b.locus_size) * min_distance_formula(params);
  b.denominator = full - big_pow(params.q, params.lp - params.l);
  b.actual = weight(ev(f));
  return b;
}

}  // namespace agc
