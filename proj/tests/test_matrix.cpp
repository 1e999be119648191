#include "agc/matrix.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>
#include <stdexcept>

using agc::Elem;
using agc::Field;
using agc::Matrix;

namespace {

Matrix random_matrix(std::mt19937_64& rng, const Field& f, int r, int c) {
  Matrix m(f, r, c);
  std::uniform_int_distribution<unsigned> d(0, f.size() - 1);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m(i, j) = static_cast<Elem>(d(rng));
  return m;
}

}  // namespace

TEST(Matrix, Determinants) {
  const Field f2 = Field::of_order(2);
  EXPECT_EQ(agc::det(Matrix::identity(Field::of_order(3), 3)), 1);
  EXPECT_EQ(agc::det(Matrix::from_rows(f2, {{1, 1}, {1, 1}})), 0);
  EXPECT_EQ(agc::det(Matrix::from_rows(f2, {{1, 0}, {1, 1}})), 1);
  EXPECT_EQ(agc::det(Matrix(f2, 0, 0)), 1);
  EXPECT_THROW(agc::det(Matrix(f2, 2, 3)), std::invalid_argument);
}

TEST(Matrix, Minors) {
  const Field f2 = Field::of_order(2);
  const Matrix diag = Matrix::from_rows(f2, {{1, 0}, {0, 1}});
  EXPECT_EQ(agc::minor(diag, {}, {}), 1);
  EXPECT_EQ(agc::minor(diag, {1, 2}, {1, 2}), 1);
  EXPECT_EQ(agc::minor(Matrix::from_rows(f2, {{1, 1}, {1, 1}}), {1, 2}, {1, 2}), 0);
  EXPECT_THROW(agc::minor(diag, {1}, {1, 2}), std::invalid_argument);
  EXPECT_THROW(agc::minor(diag, {3}, {1}), std::out_of_range);
  EXPECT_THROW(agc::minor(diag, {2, 1}, {1, 2}), std::invalid_argument);
}

TEST(Matrix, EchelonForms) {
  const Field f2 = Field::of_order(2);
  const Matrix id = Matrix::identity(f2, 3);
  EXPECT_EQ(agc::rref_rows(id), id);
  EXPECT_EQ(agc::rank(id), 3);
  EXPECT_EQ(agc::rank(Matrix(f2, 2, 3)), 0);
  EXPECT_EQ(agc::rref_rows(Matrix(f2, 2, 3)), Matrix(f2, 2, 3));
  const Matrix ones = Matrix::from_rows(f2, {{1, 1}, {1, 1}});
  EXPECT_EQ(agc::rref_rows(ones), Matrix::from_rows(f2, {{1, 1}, {0, 0}}));
  EXPECT_EQ(agc::rank(ones), 1);
}

TEST(Matrix, EchelonPropertiesRandom) {
  std::mt19937_64 rng(7);
  for (unsigned q : {2u, 3u, 4u, 5u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 200; ++t) {
      const Matrix m = random_matrix(rng, f, 3, 5);
      const Matrix r = agc::rref_rows(m);
      EXPECT_EQ(agc::rref_rows(r), r);
      EXPECT_EQ(agc::rank(r), agc::rank(m));
      EXPECT_EQ(static_cast<int>(agc::pivot_columns(r).size()), agc::rank(m));
      // Mixing rows by an invertible matrix keeps the row space.
      Matrix g = random_matrix(rng, f, 3, 3);
      if (agc::det(g) == 0) continue;
      EXPECT_EQ(agc::rref_rows(g * m), r);
      EXPECT_EQ(agc::rref_cols(m.transpose()), r.transpose());
      const auto inv = agc::inverse(g);
      ASSERT_TRUE(inv.has_value());
      EXPECT_EQ(g * *inv, Matrix::identity(f, 3));
    }
  }
}

TEST(Matrix, SingularHasNoInverse) {
  EXPECT_FALSE(agc::inverse(Matrix::from_rows(Field::of_order(2), {{1, 1}, {1, 1}})).has_value());
}

TEST(Matrix, GeneralAndSpecialLinearGroupOrders) {
  EXPECT_EQ(agc::enumerate_gl(Field::of_order(2), 2).size(), 6u);
  EXPECT_EQ(agc::enumerate_sl(Field::of_order(2), 2).size(), 6u);
  EXPECT_EQ(agc::enumerate_gl(Field::of_order(3), 1).size(), 2u);
  for (auto [n, q] : {std::pair{1, 2u}, {1, 3u}, {2, 2u}, {2, 3u}, {3, 2u}}) {
    const Field f = Field::of_order(q);
    const auto gl = agc::enumerate_gl(f, n);
    EXPECT_EQ(agc::BigInt(gl.size()), agc::gl_order(n, q));
    EXPECT_EQ(agc::BigInt(agc::enumerate_sl(f, n).size()), agc::sl_order(n, q));
    EXPECT_TRUE(std::is_sorted(gl.begin(), gl.end()));
    EXPECT_EQ(std::set<Matrix>(gl.begin(), gl.end()).size(), gl.size());
  }
  EXPECT_THROW(agc::enumerate_gl(Field::of_order(2), 5), agc::CapExceeded);
}

TEST(Matrix, ReducedEchelonEnumeration) {
  const Field f2 = Field::of_order(2);
  const auto reps = agc::enumerate_rref(f2, 2, 4);
  EXPECT_EQ(reps.size(), 35u);
  std::set<Matrix> distinct;
  for (const Matrix& m : reps) {
    EXPECT_EQ(agc::rref_rows(m), m);
    EXPECT_EQ(agc::rank(m), 2);
    distinct.insert(m);
  }
  EXPECT_EQ(distinct.size(), 35u);
  EXPECT_EQ(agc::enumerate_rref(Field::of_order(3), 2, 3).size(), 13u);
  EXPECT_EQ(agc::enumerate_rref(f2, 3, 3).size(), 1u);
}

TEST(Matrix, CauchyBinetExamples) {
  std::mt19937_64 rng(11);
  const Field f3 = Field::of_order(3);
  const Matrix a = random_matrix(rng, f3, 2, 2), b = random_matrix(rng, f3, 2, 2);
  const auto square = agc::cauchy_binet(a, b);
  EXPECT_EQ(square.lhs, f3.mul(agc::det(a), agc::det(b)));
  EXPECT_EQ(square.rhs, square.lhs);
  const Matrix top = Matrix::from_rows(f3, {{1, 0, 0}, {0, 1, 0}});
  const auto unit = agc::cauchy_binet(top, top.transpose());
  EXPECT_EQ(unit.lhs, 1);
  EXPECT_EQ(unit.rhs, 1);
  const auto rnd = agc::cauchy_binet(random_matrix(rng, f3, 2, 3), random_matrix(rng, f3, 3, 2));
  EXPECT_EQ(rnd.lhs, rnd.rhs);
  EXPECT_THROW(agc::cauchy_binet(random_matrix(rng, f3, 3, 2), random_matrix(rng, f3, 2, 3)), std::invalid_argument);
}

TEST(Matrix, CauchyBinetRandomPairs) {
  std::mt19937_64 rng(12);
  for (unsigned q : {2u, 3u, 4u}) {
    const Field f = Field::of_order(q);
    for (int t = 0; t < 1000; ++t) {
      const int r = 1 + t % 3, s = r + t % 3;
      const auto sides = agc::cauchy_binet(random_matrix(rng, f, r, s), random_matrix(rng, f, s, r));
      EXPECT_EQ(sides.lhs, sides.rhs);
    }
  }
}

TEST(Matrix, SubmatrixAndArithmetic) {
  const Field f3 = Field::of_order(3);
  const Matrix m = Matrix::from_rows(f3, {{1, 2, 0}, {0, 1, 2}});
  EXPECT_EQ(m.submatrix({2}, {2, 3}), Matrix::from_rows(f3, {{1, 2}}));
  EXPECT_TRUE((m - m).is_zero());
  EXPECT_EQ(m + (-m), Matrix(f3, 2, 3));
  EXPECT_EQ(m.scaled(2), m + m);
  EXPECT_EQ(agc::vec_mat(std::vector<Elem>{1, 1}, m), (std::vector<Elem>{1, 0, 2}));
}
