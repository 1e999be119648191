#include "agc/affine_code.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

using agc::CodeParams;
using agc::Elem;
using agc::Field;
using agc::Matrix;
using agc::MinorCombination;

namespace {

// Encodes every message directly, without the incremental scan.
std::vector<std::uint64_t> naive_distribution(const agc::LinearCode& code) {
  std::vector<std::uint64_t> dist(code.length() + 1, 0);
  std::uint64_t total = 1;
  for (int r = 0; r < code.dimension(); ++r) total *= code.field().size();
  for (std::uint64_t idx = 0; idx < total; ++idx)
    ++dist[agc::weight(code.encode(agc::message_from_index(idx, code.dimension(), code.field().size())))];
  return dist;
}

}  // namespace

TEST(AffineCode, PointIndexRoundTrip) {
  const Field f3 = Field::of_order(3);
  for (std::uint64_t j = 0; j < 729; ++j) EXPECT_EQ(agc::point_index(agc::point_matrix(f3, {2, 3}, j)), j);
  const Matrix e11 = Matrix::from_rows(Field::of_order(2), {{1, 0}, {0, 0}});
  const Matrix e12 = Matrix::from_rows(Field::of_order(2), {{0, 1}, {0, 0}});
  const Matrix e21 = Matrix::from_rows(Field::of_order(2), {{0, 0}, {1, 0}});
  EXPECT_EQ(agc::point_index(e11), 1u);
  EXPECT_EQ(agc::point_index(e12), 2u);
  EXPECT_EQ(agc::point_index(e21), 4u);
  EXPECT_THROW(agc::point_count(f3, {3, 6}), agc::CapExceeded);
}

TEST(AffineCode, BuildShapes) {
  const auto c22 = agc::build_affine_code(CodeParams::make(2, 2, 2));
  EXPECT_EQ(c22.dimension(), 6);
  EXPECT_EQ(c22.length(), 16);
  const auto c11 = agc::build_affine_code(CodeParams::make(2, 1, 1));
  EXPECT_EQ(c11.generator(), Matrix::from_rows(Field::of_order(2), {{1, 1}, {0, 1}}));
  const auto c12 = agc::build_affine_code(CodeParams::make(3, 1, 2));
  EXPECT_EQ(c12.dimension(), 3);
  EXPECT_EQ(c12.length(), 9);
  EXPECT_EQ(agc::rank(c12.generator()), 3);
  agc::Caps small;
  small.max_points = 100;
  EXPECT_THROW(agc::build_affine_code(CodeParams::make(2, 2, 4), small), agc::CapExceeded);
}

TEST(AffineCode, GeneratorRowsAreEvaluations) {
  const auto p = CodeParams::make(3, 2, 2);
  const auto code = agc::build_affine_code(p);
  const Field f = code.field();
  const auto basis = agc::minor_basis(agc::shape_of(p));
  for (std::size_t r = 0; r < basis->size(); ++r) {
    const auto word = agc::ev(MinorCombination::single(f, agc::shape_of(p), (*basis)[r]));
    EXPECT_TRUE(std::equal(word.begin(), word.end(), code.generator().row(static_cast<int>(r)).begin()));
  }
}

TEST(AffineCode, EncodeExamples) {
  const auto code = agc::build_affine_code(CodeParams::make(2, 2, 2));
  std::vector<Elem> msg(6, 0);
  EXPECT_EQ(agc::weight(code.encode(msg)), 0u);
  msg[0] = 1;
  EXPECT_EQ(code.encode(msg), std::vector<Elem>(16, 1));
  msg[0] = 0;
  msg[5] = 1;
  const auto word = code.encode(msg);
  EXPECT_EQ(agc::weight(word), 6u);
  for (std::uint64_t j = 0; j < 16; ++j)
    EXPECT_EQ(word[j], agc::det(agc::point_matrix(code.field(), {2, 2}, j)));
  EXPECT_THROW(code.encode(std::vector<Elem>(5, 0)), std::invalid_argument);
}

TEST(AffineCode, NondegenerateAndMembership) {
  const auto code = agc::build_affine_code(CodeParams::make(3, 2, 2));
  for (int j = 0; j < code.length(); ++j) {
    bool nonzero = false;
    for (int r = 0; r < code.dimension(); ++r) nonzero = nonzero || code.generator()(r, j) != 0;
    EXPECT_TRUE(nonzero);
  }
  std::vector<Elem> word(code.length(), 0);
  word[3] = 1;
  EXPECT_FALSE(code.contains(word));
  EXPECT_TRUE(code.contains(code.encode(std::vector<Elem>{1, 2, 0, 1, 2, 2})));
}

TEST(AffineCode, MinimumDistanceExamples) {
  EXPECT_EQ(agc::min_distance(agc::build_affine_code(CodeParams::make(2, 2, 2))), 6u);
  EXPECT_EQ(agc::min_distance(agc::build_affine_code(CodeParams::make(2, 2, 3))), 24u);
  const auto dist = agc::weight_distribution(agc::build_affine_code(CodeParams::make(2, 2, 2)));
  EXPECT_EQ(dist[6], 16u);
  // Single-row code over GF(3): nonzero weights are exactly 9 and 6.
  const auto d12 = agc::weight_distribution(agc::build_affine_code(CodeParams::make(3, 1, 2)));
  for (std::size_t w = 1; w < d12.size(); ++w) EXPECT_EQ(d12[w] != 0, w == 6 || w == 9) << w;
}

TEST(AffineCode, ScanMatchesNaiveEncoding) {
  for (auto [q, l, lp] : {std::tuple{2u, 1u, 3u}, {2u, 2u, 2u}, {3u, 1u, 2u}, {3u, 2u, 2u}, {4u, 1u, 2u}, {2u, 2u, 3u}}) {
    const auto code = agc::build_affine_code(CodeParams::make(q, l, lp));
    const auto naive = naive_distribution(code);
    std::size_t d = 1;
    while (naive[d] == 0) ++d;
    for (unsigned threads : {1u, 3u, 8u}) {
      agc::ScanOptions opt;
      opt.threads = threads;
      // Fresh codes so that no cached result is reused.
      EXPECT_EQ(agc::weight_distribution(agc::LinearCode(code.generator()), opt), naive);
      EXPECT_EQ(agc::min_distance(agc::LinearCode(code.generator()), opt), d);
      opt.stop_at_weight = d;
      EXPECT_EQ(agc::min_distance(agc::LinearCode(code.generator()), opt), d);
      EXPECT_EQ(agc::messages_of_weight(code, d, opt).size(), naive[d]);
    }
  }
}

TEST(AffineCode, ScanResultsAreCached) {
  const auto code = agc::build_affine_code(CodeParams::make(2, 2, 3));
  EXPECT_FALSE(code.cached_distribution().has_value());
  agc::ScanOptions early;
  early.stop_at_weight = 24;
  EXPECT_EQ(agc::min_distance(code, early), 24u);
  EXPECT_FALSE(code.cached_min_distance().has_value());
  const auto dist = agc::weight_distribution(code);
  ASSERT_TRUE(code.cached_distribution().has_value());
  EXPECT_EQ(*code.cached_distribution(), dist);
  EXPECT_EQ(code.cached_min_distance(), std::optional<std::uint64_t>{24});
}

TEST(AffineCode, MessageCapIsEnforced) {
  const auto code = agc::build_affine_code(CodeParams::make(2, 2, 4));
  agc::ScanOptions opt;
  opt.max_messages = 1000;
  EXPECT_THROW(agc::min_distance(code, opt), agc::CapExceeded);
}

TEST(AffineCode, MaximalMinorWeight) {
  EXPECT_EQ(agc::max_minor_weight(CodeParams::make(2, 2, 2)), 6);
  EXPECT_EQ(agc::max_minor_weight(CodeParams::make(2, 2, 3)), 24);
  EXPECT_EQ(agc::max_minor_weight(CodeParams::make(3, 2, 2)), 48);
  for (auto [q, l, lp] : {std::tuple{2u, 2u, 2u}, {2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 3u, 3u}, {5u, 1u, 2u}}) {
    const auto p = CodeParams::make(q, l, lp);
    const auto w = agc::weight(agc::ev(MinorCombination::leading_maximal_minor(Field::of_order(q), agc::shape_of(p))));
    EXPECT_EQ(agc::BigInt(w), agc::max_minor_weight(p));
    EXPECT_EQ(agc::max_minor_weight_by_count(p), agc::max_minor_weight(p));
  }
}

TEST(AffineCode, RowSpecializationBound) {
  const Field f2 = Field::of_order(2);
  const agc::Shape s{2, 2};
  const auto lead = agc::rowspec_weight_bound(MinorCombination::leading_maximal_minor(f2, s), 1);
  EXPECT_GE(lead.locus_size, 1u);  // at least q^{l'-l}
  EXPECT_TRUE(lead.holds());
  const auto one = agc::rowspec_weight_bound(MinorCombination::constant(f2, s, 1), 1);
  EXPECT_EQ(one.locus_size, 0u);
  EXPECT_EQ(one.actual, 16u);
  EXPECT_EQ(one.numerator, 4 * 6);
  EXPECT_EQ(one.denominator, 3);
  EXPECT_TRUE(one.holds());
  EXPECT_THROW(agc::rowspec_weight_bound(MinorCombination(f2, s), 1), std::invalid_argument);

  std::mt19937_64 rng(9);
  for (int t = 0; t < 200; ++t) {
    MinorCombination f(f2, s);
    for (std::size_t pos = 0; pos < 6; ++pos) f.set(pos, static_cast<Elem>(rng() & 1));
    if (f.is_zero()) continue;
    for (int i = 1; i <= 2; ++i) EXPECT_TRUE(agc::rowspec_weight_bound(f, i).holds());
  }
}

TEST(AffineCode, DistanceRatioOnGrid) {
  for (auto [q, l, lp] : {std::tuple{2u, 2u, 2u}, {2u, 2u, 3u}, {3u, 2u, 2u}}) {
    const auto big = agc::min_distance(agc::build_affine_code(CodeParams::make(q, l, lp)));
    const auto small = agc::min_distance(agc::build_affine_code(CodeParams::make(q, l - 1, lp)));
    EXPECT_EQ(agc::BigInt(big), agc::BigInt(small) * (agc::big_pow(q, lp) - agc::big_pow(q, lp - l)));
  }
}

TEST(AffineCode, DeskGridDistanceAndCensus) {
  for (unsigned q : {2u, 3u})
    for (unsigned l = 1; l <= 3; ++l)
      for (unsigned lp = l; lp <= 6; ++lp) {
        const auto p = CodeParams::make(q, l, lp);
        if (agc::big_pow(q, p.delta()) > 4096 || agc::big_pow(q, static_cast<unsigned>(agc::dimension_formula(p))) > (1u << 16))
          continue;
        const auto dist = agc::weight_distribution(agc::build_affine_code(p));
        const auto d = static_cast<std::size_t>(agc::min_distance_formula(p));
        for (std::size_t w = 1; w < d; ++w) EXPECT_EQ(dist[w], 0u) << p.to_string();
        EXPECT_EQ(agc::BigInt(dist[d]), agc::min_weight_count_formula(p)) << p.to_string();
      }
}
