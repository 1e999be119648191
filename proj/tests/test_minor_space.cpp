#include "agc/affine_code.hpp"
#include "agc/group_action.hpp"
#include "agc/minor_space.hpp"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

using agc::Elem;
using agc::Field;
using agc::IndexSet;
using agc::Matrix;
using agc::MinorCombination;
using agc::MinorIndex;
using agc::Shape;

namespace {

MinorCombination random_poly(std::mt19937_64& rng, const Field& f, Shape shape) {
  MinorCombination g(f, shape);
  std::uniform_int_distribution<unsigned> d(0, f.size() - 1);
  for (std::size_t pos = 0; pos < g.basis().size(); ++pos) g.set(pos, static_cast<Elem>(d(rng)));
  return g;
}

Matrix random_matrix(std::mt19937_64& rng, const Field& f, int r, int c) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<unsigned> d(0, f.size() - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(d(rng));
  return m;
}

MinorCombination minor_of(const Field& f, Shape s, IndexSet rows, IndexSet cols, Elem c = 1) {
  return MinorCombination::single(f, s, MinorIndex{std::move(rows), std::move(cols)}, c);
}

}  // namespace

TEST(MinorSpace, BasisOrderTwoByTwo) {
  const auto basis = agc::minor_basis({2, 2});
  const std::vector<MinorIndex> expected = {
      {{}, {}}, {{1}, {1}}, {{1}, {2}}, {{2}, {1}}, {{2}, {2}}, {{1, 2}, {1, 2}}};
  ASSERT_EQ(basis->size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ((*basis)[k], expected[k]);
  EXPECT_EQ(basis->leading_maximal(), 5u);
}

TEST(MinorSpace, BasisSizes) {
  EXPECT_EQ(agc::minor_basis({1, 1})->size(), 2u);
  const auto b23 = agc::minor_basis({2, 3});
  EXPECT_EQ(b23->size(), 10u);
  int by_order[3] = {0, 0, 0};
  for (const auto& m : b23->entries()) ++by_order[m.order()];
  EXPECT_EQ(by_order[0], 1);
  EXPECT_EQ(by_order[1], 6);
  EXPECT_EQ(by_order[2], 3);
  for (std::size_t k = 1; k < b23->size(); ++k) EXPECT_LT((*b23)[k - 1], (*b23)[k]);
  EXPECT_THROW(b23->position({3}, {1}), std::out_of_range);
}

TEST(MinorSpace, EvaluationExamples) {
  const Field f2 = Field::of_order(2);
  const Shape s{2, 2};
  const Matrix diag = Matrix::from_rows(f2, {{1, 0}, {0, 1}});
  EXPECT_EQ(agc::evaluate(MinorCombination::constant(f2, s, 1), diag), 1);
  EXPECT_EQ(agc::evaluate(MinorCombination::leading_maximal_minor(f2, s), diag), 1);
  // a = 0, b = (b1..b4), c: the value at e11 + e22 is b1 + b4 + c.
  for (unsigned bits = 0; bits < 32; ++bits) {
    const Elem b1 = bits & 1, b2 = (bits >> 1) & 1, b3 = (bits >> 2) & 1, b4 = (bits >> 3) & 1, c = (bits >> 4) & 1;
    const MinorCombination f = minor_of(f2, s, {1}, {1}, b1) + minor_of(f2, s, {1}, {2}, b2) +
                               minor_of(f2, s, {2}, {1}, b3) + minor_of(f2, s, {2}, {2}, b4) +
                               MinorCombination::leading_maximal_minor(f2, s).scaled(c);
    EXPECT_EQ(agc::evaluate(f, diag), (b1 + b4 + c) % 2);
  }
  EXPECT_THROW(agc::evaluate(MinorCombination::constant(f2, s, 1), Matrix(f2, 2, 3)), std::invalid_argument);
}

TEST(MinorSpace, Support) {
  const Field f2 = Field::of_order(2);
  const Shape s{2, 2};
  EXPECT_TRUE(agc::support(MinorCombination(f2, s)).empty());
  EXPECT_TRUE(MinorCombination(f2, s).is_zero());
  const auto lead = agc::support(MinorCombination::leading_maximal_minor(f2, s));
  ASSERT_EQ(lead.size(), 1u);
  EXPECT_EQ(lead[0].order(), 2);
  const auto f = MinorCombination::constant(f2, s, 1) + MinorCombination::leading_maximal_minor(f2, s);
  EXPECT_EQ(agc::support(f), (std::vector<MinorIndex>{{{}, {}}, {{1, 2}, {1, 2}}}));
}

TEST(MinorSpace, SpecializeRowExamples) {
  const Field f2 = Field::of_order(2);
  const Shape s{2, 2};
  // Row 1 untouched minors are reindexed.
  EXPECT_EQ(agc::specialize_row(minor_of(f2, s, {2}, {1}), 1, std::vector<Elem>{1, 1}),
            minor_of(f2, {1, 2}, {1}, {1}));
  // det with row 1 = (1, 0) leaves X22, now the minor at row 1, column 2.
  EXPECT_EQ(agc::specialize_row(MinorCombination::leading_maximal_minor(f2, s), 1, std::vector<Elem>{1, 0}),
            minor_of(f2, {1, 2}, {1}, {2}));
  EXPECT_TRUE(agc::specialize_row(minor_of(f2, s, {1}, {2}), 1, std::vector<Elem>{0, 0}).is_zero());
  EXPECT_THROW(agc::specialize_row(minor_of(f2, s, {1}, {2}), 3, std::vector<Elem>{0, 0}), std::out_of_range);
}

TEST(MinorSpace, SpecializeColExamples) {
  const Field f3 = Field::of_order(3);
  const Shape s{1, 3};
  EXPECT_EQ(agc::specialize_col(minor_of(f3, s, {1}, {3}), 1, std::vector<Elem>{2}), minor_of(f3, {1, 2}, {1}, {2}));
  EXPECT_EQ(agc::specialize_col(minor_of(f3, s, {1}, {1}), 1, std::vector<Elem>{2}),
            MinorCombination::constant(f3, {1, 2}, 2));
  EXPECT_THROW(agc::specialize_col(minor_of(f3, {2, 2}, {1}, {1}), 1, std::vector<Elem>{1, 1}), std::invalid_argument);
}

TEST(MinorSpace, SpecializationAgreesPointwise) {
  const Field f2 = Field::of_order(2);
  std::mt19937_64 rng(3);
  for (int lp : {2, 3}) {
    const Shape s{2, lp};
    for (int t = 0; t < 5; ++t) {
      const auto f = random_poly(rng, f2, s);
      for (int i = 1; i <= 2; ++i)
        for (std::uint64_t ai = 0; ai < (1u << lp); ++ai) {
          const auto a = agc::vector_from_index(ai, lp, 2);
          const auto g = agc::specialize_row(f, i, a);
          for (std::uint64_t j = 0; j < agc::point_count(f2, {1, lp}); ++j) {
            const Matrix small = agc::point_matrix(f2, {1, lp}, j);
            Matrix full(f2, 2, lp);
            for (int c = 0; c < lp; ++c) {
              full(i - 1, c) = a[c];
              full(2 - i, c) = small(0, c);
            }
            EXPECT_EQ(agc::evaluate(g, small), agc::evaluate(f, full));
          }
        }
    }
  }
}

TEST(MinorSpace, ColumnSpecializationAgreesPointwise) {
  const Field f3 = Field::of_order(3);
  std::mt19937_64 rng(4);
  const Shape s{2, 3};
  for (int t = 0; t < 5; ++t) {
    const auto f = random_poly(rng, f3, s);
    for (int j = 1; j <= 3; ++j)
      for (std::uint64_t bi = 0; bi < 9; ++bi) {
        const auto b = agc::vector_from_index(bi, 2, 3);
        const auto g = agc::specialize_col(f, j, b);
        for (std::uint64_t k = 0; k < 81; k += 7) {
          const Matrix small = agc::point_matrix(f3, {2, 2}, k);
          Matrix full(f3, 2, 3);
          for (int r = 0; r < 2; ++r)
            for (int c = 0, src = 0; c < 3; ++c) full(r, c) = (c == j - 1) ? b[r] : small(r, src++);
          EXPECT_EQ(agc::evaluate(g, small), agc::evaluate(f, full));
        }
      }
  }
}

TEST(MinorSpace, RowVanishingLocusExamples) {
  const Field f2 = Field::of_order(2);
  EXPECT_TRUE(agc::row_vanishing_locus(MinorCombination::constant(f2, {2, 2}, 1), 1).empty());
  const auto lead = agc::row_vanishing_locus(MinorCombination::leading_maximal_minor(f2, {2, 2}), 1);
  EXPECT_EQ(lead, (std::vector<std::vector<Elem>>{{0, 0}}));
  const auto lead23 = agc::row_vanishing_locus(MinorCombination::leading_maximal_minor(f2, {2, 3}), 1);
  EXPECT_EQ(lead23, (std::vector<std::vector<Elem>>{{0, 0, 0}, {0, 0, 1}}));
  const auto f = MinorCombination::constant(f2, {1, 1}, 1) + minor_of(f2, {1, 1}, {1}, {1});
  EXPECT_EQ(agc::row_vanishing_locus(f, 1), (std::vector<std::vector<Elem>>{{1}}));
}

TEST(MinorSpace, TranslationExpansion) {
  const Field f3 = Field::of_order(3);
  EXPECT_EQ(agc::det_translation_expand(Matrix(f3, 2, 2)), MinorCombination::leading_maximal_minor(f3, {2, 2}));
  EXPECT_EQ(agc::det_translation_expand(Matrix::from_rows(f3, {{2}})),
            minor_of(f3, {1, 1}, {1}, {1}) + MinorCombination::constant(f3, {1, 1}, 2));
  std::mt19937_64 rng(5);
  const Matrix b = random_matrix(rng, f3, 2, 2);
  const auto e = agc::det_translation_expand(b);
  EXPECT_EQ(e.coeff(e.basis().leading_maximal()), 1);
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j)
      EXPECT_EQ(e.coeff(MinorIndex{{3 - i}, {3 - j}}), f3.mul(f3.sign(i + j), b(i - 1, j - 1)));
  for (int t = 0; t < 50; ++t) {
    const Matrix y = random_matrix(rng, f3, 2, 2);
    EXPECT_EQ(agc::evaluate(e, y), agc::det(y + b));
  }
  EXPECT_THROW(agc::det_translation_expand(Matrix(f3, 2, 3)), std::invalid_argument);
}

TEST(MinorSpace, AbsorbTranslationExamples) {
  const Field f2 = Field::of_order(2);
  const auto det2 = MinorCombination::leading_maximal_minor(f2, {2, 2});
  const auto plain = agc::absorb_translation(det2);
  EXPECT_TRUE(plain.a.is_zero());
  EXPECT_TRUE(plain.h.is_zero());

  const Field f5 = Field::of_order(5);
  const auto x_plus_b = minor_of(f5, {1, 1}, {1}, {1}) + MinorCombination::constant(f5, {1, 1}, 3);
  const auto one = agc::absorb_translation(x_plus_b);
  EXPECT_EQ(one.a, Matrix::from_rows(f5, {{3}}));
  EXPECT_TRUE(one.h.is_zero());

  const auto f = det2 + minor_of(f2, {2, 2}, {1}, {1});
  const auto r = agc::absorb_translation(f);
  EXPECT_EQ(r.a, Matrix::from_rows(f2, {{0, 0}, {0, 1}}));
  EXPECT_LE(r.h.max_order(), 0);
  for (std::uint64_t j = 0; j < 16; ++j) {
    const Matrix p = agc::point_matrix(f2, {2, 2}, j);
    EXPECT_EQ(agc::evaluate(f, p), f2.add(agc::det(p + r.a), agc::evaluate(r.h, p)));
  }
  EXPECT_THROW(agc::absorb_translation(minor_of(f2, {2, 2}, {1}, {1})), std::invalid_argument);
  EXPECT_THROW(agc::absorb_translation(MinorCombination::leading_maximal_minor(f2, {2, 3})), std::invalid_argument);
}

TEST(MinorSpace, AbsorbTranslationRandomThreeByThree) {
  const Field f3 = Field::of_order(3);
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    auto f = random_poly(rng, f3, {3, 3});
    f.set(f.basis().leading_maximal(), 1);
    const auto r = agc::absorb_translation(f);
    EXPECT_LE(r.h.max_order(), 1);
    for (int k = 0; k < 20; ++k) {
      const Matrix p = random_matrix(rng, f3, 3, 3);
      EXPECT_EQ(agc::evaluate(f, p), f3.add(agc::det(p + r.a), agc::evaluate(r.h, p)));
    }
  }
}

TEST(MinorSpace, BasisEvaluationsAreIndependent) {
  for (auto [q, l, lp] : {std::tuple{2u, 1u, 1u}, {2u, 2u, 2u}, {2u, 2u, 3u}, {3u, 2u, 2u}, {2u, 2u, 4u}, {4u, 2u, 2u}}) {
    const auto code = agc::build_affine_code(agc::CodeParams::make(q, l, lp));
    EXPECT_EQ(agc::rank(code.generator()), code.dimension());
  }
}

TEST(MinorSpace, TextFormat) {
  const Field f3 = Field::of_order(3);
  const auto f = MinorCombination::constant(f3, {2, 3}, 2) + minor_of(f3, {2, 3}, {1, 2}, {1, 3});
  EXPECT_EQ(agc::to_text(f), "-|-: 2\n1,2|1,3: 1\n");
}

TEST(MinorSpace, ExpandAffineDetMatchesEvaluation) {
  std::mt19937_64 rng(8);
  for (unsigned q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 20; ++t) {
      const Shape s{2, 3};
      const Matrix n = random_matrix(rng, f, 3, 2);
      const Matrix v = random_matrix(rng, f, 2, 2);
      const auto e = agc::expand_affine_det(f, s, {1, 2}, n, v);
      for (int k = 0; k < 10; ++k) {
        const Matrix x = random_matrix(rng, f, 2, 3);
        EXPECT_EQ(agc::evaluate(e, x), agc::det(x * n + v));
      }
    }
  }
}
