#include "agc/finite_field.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using agc::Elem;
using agc::Field;

TEST(FiniteField, PrimeFieldsHaveNoModulus) {
  const Field f2 = Field::make(2, 1);
  EXPECT_EQ(f2.size(), 2u);
  EXPECT_TRUE(f2.modulus().empty());
  EXPECT_EQ(f2.to_string(), "2^1/-");
  EXPECT_EQ(Field::make(3, 1).size(), 3u);
}

TEST(FiniteField, Gf4UsesXSquaredPlusXPlusOne) {
  const Field f4 = Field::make(2, 2);
  EXPECT_EQ(f4.modulus(), (std::vector<unsigned>{1, 1, 1}));
  EXPECT_EQ(f4.to_string(), "2^2/1,1,1");
  // x * x = x + 1: index 2 is x, index 3 is x + 1.
  EXPECT_EQ(f4.mul(2, 2), 3);
}

TEST(FiniteField, SameParametersGiveSameModulus) {
  EXPECT_EQ(Field::make(3, 2).modulus(), Field::make(3, 2).modulus());
  EXPECT_EQ(Field::of_order(8).modulus(), (std::vector<unsigned>{1, 1, 0, 1}));
}

TEST(FiniteField, SmallExamples) {
  EXPECT_EQ(Field::make(2).add(1, 1), 0);
  EXPECT_EQ(Field::make(3).inv(2), 2);
  const Field f4 = Field::of_order(4);
  EXPECT_EQ(f4.elements(), (std::vector<Elem>{0, 1, 2, 3}));
  EXPECT_EQ(Field::of_order(3).elements(), (std::vector<Elem>{0, 1, 2}));
}

TEST(FiniteField, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 0), std::invalid_argument);
  EXPECT_THROW(Field::make(2, 17), std::invalid_argument);
  EXPECT_THROW(Field::of_order(6), std::invalid_argument);
  EXPECT_THROW(Field::of_order(1), std::invalid_argument);
  EXPECT_THROW(Field::make(5).inv(0), std::domain_error);
}

TEST(FiniteField, AxiomsExhaustiveUpToNine) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u}) {
    const Field f = Field::of_order(q);
    for (Elem a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, 0), a);
      EXPECT_EQ(f.mul(a, 1), a);
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      if (a) {
        EXPECT_EQ(f.mul(a, f.inv(a)), 1) << "q=" << q << " a=" << a;
      }
      for (Elem b = 0; b < q; ++b) {
        EXPECT_EQ(f.add(a, b), f.add(b, a));
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        EXPECT_EQ(f.sub(f.add(a, b), b), a);
        for (Elem c = 0; c < q; ++c) {
          EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
          EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
  }
}

TEST(FiniteField, FrobeniusFixesEveryElement) {
  for (unsigned q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
    const Field f = Field::of_order(q);
    for (Elem a = 0; a < q; ++a) EXPECT_EQ(f.pow(a, q), a) << "q=" << q;
  }
}

TEST(FiniteField, LargeFieldsInvert) {
  for (unsigned q : {256u, 257u, 1024u, 65536u}) {
    const Field f = Field::of_order(q);
    for (unsigned a = 1; a < q; a += 97) EXPECT_EQ(f.mul(static_cast<Elem>(a), f.inv(static_cast<Elem>(a))), 1);
  }
}

TEST(FiniteField, IrreducibilityByTrialDivision) {
  using agc::gfp_poly::is_irreducible;
  EXPECT_TRUE(is_irreducible({1, 1, 1}, 2));
  EXPECT_FALSE(is_irreducible({1, 0, 1}, 2));  // (x+1)^2
  EXPECT_TRUE(is_irreducible({1, 1, 0, 1}, 2));
  EXPECT_FALSE(is_irreducible({0, 1, 1}, 3));
  EXPECT_EQ(agc::gfp_poly::smallest_irreducible(3, 2), (std::vector<unsigned>{1, 0, 1}));
}

TEST(FiniteField, FromIntAndSign) {
  const Field f = Field::of_order(5);
  EXPECT_EQ(f.from_int(-1), 4);
  EXPECT_EQ(f.from_int(12), 2);
  EXPECT_EQ(f.sign(3), 4);
  EXPECT_EQ(f.sign(4), 1);
  EXPECT_EQ(Field::of_order(4).sign(1), 1);
}
