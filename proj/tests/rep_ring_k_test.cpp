#include "tdual/rep_ring_k.hpp"

#include "tdual/errors.hpp"

#include <gtest/gtest.h>

#include <numeric>
#include <random>

namespace tdual {
namespace {

RepRingElement elem(std::int64_t n, std::initializer_list<long long> c) {
  return RepRingElement(n, std::vector<Integer>(c.begin(), c.end()));
}

RepRingElement random_elem(std::mt19937_64& rng, std::int64_t n) {
  std::uniform_int_distribution<int> coeff(-5, 5);
  std::vector<Integer> c(n);
  for (auto& x : c) x = coeff(rng);
  return RepRingElement(n, std::move(c));
}

TEST(RepMultiply, Examples) {
  const auto b = elem(3, {4, -1, 2});
  EXPECT_EQ(rep_multiply(RepRingElement::one(3), b), b);
  EXPECT_EQ(rep_multiply(elem(2, {0, 1}), elem(2, {0, 1})), RepRingElement::one(2));
  EXPECT_EQ(rep_multiply(elem(3, {1, 1, 0}), elem(3, {1, 0, 1})), elem(3, {2, 1, 1}));
  EXPECT_THROW(rep_multiply(RepRingElement::one(2), RepRingElement::one(3)), InputError);
  EXPECT_THROW(elem(3, {1, 2}), InputError);
}

TEST(RepMultiply, RingAxioms) {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 300; ++trial) {
    const std::int64_t n = 1 + trial % 8;
    const auto a = random_elem(rng, n), b = random_elem(rng, n), c = random_elem(rng, n);
    EXPECT_EQ(rep_multiply(a, b), rep_multiply(b, a));
    EXPECT_EQ(rep_multiply(rep_multiply(a, b), c), rep_multiply(a, rep_multiply(b, c)));
    EXPECT_EQ(rep_multiply(RepRingElement::one(n), a), a);
    // Augmentation is a ring homomorphism to Z.
    EXPECT_EQ(rep_multiply(a, b).augmentation(), a.augmentation() * b.augmentation());
  }
}

TEST(CharMatrix, Examples) {
  EXPECT_EQ(char_multiplication_matrix(5, 0), IntMatrix::identity(5));
  EXPECT_EQ(char_multiplication_matrix(3, 1), (IntMatrix{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}));
  const IntMatrix p = char_multiplication_matrix(4, 2);
  EXPECT_NE(p, IntMatrix::identity(4));
  EXPECT_EQ(p * p, IntMatrix::identity(4));
}

TEST(CharMatrix, MatchesRingMultiplication) {
  std::mt19937_64 rng(31);
  for (std::int64_t n = 1; n <= 8; ++n)
    for (std::int64_t q = -n; q <= n; ++q) {
      const auto a = random_elem(rng, n);
      const auto prod = rep_multiply(RepRingElement::character(n, q), a);
      EXPECT_EQ(char_multiplication_matrix(n, q) * std::span<const Integer>(a.coeffs()),
                prod.coeffs());
    }
}

TEST(CharMatrix, PermutationOfExpectedOrder) {
  for (std::int64_t n = 1; n <= 12; ++n)
    for (std::int64_t q = 0; q < n; ++q) {
      const IntMatrix p = char_multiplication_matrix(n, q);
      for (std::size_t j = 0; j < p.cols(); ++j) {
        int ones = 0;
        for (std::size_t i = 0; i < p.rows(); ++i) {
          EXPECT_TRUE(p(i, j) == 0 || p(i, j) == 1);
          ones += p(i, j) == 1;
        }
        EXPECT_EQ(ones, 1);
      }
      const std::int64_t expected_order = n / std::gcd(n, q);
      IntMatrix power = IntMatrix::identity(n);
      std::int64_t order = 0;
      do {
        power = power * p;
        ++order;
      } while (power != IntMatrix::identity(n));
      EXPECT_EQ(order, expected_order) << "n = " << n << ", q = " << q;
    }
}

TEST(BorelK, CoprimeExamples) {
  const KGroups zz{FgAbGroup::free(1), FgAbGroup::free(1)};
  EXPECT_EQ(borel_k_of_dual(2, 1), zz);
  EXPECT_EQ(borel_k_of_dual(12, 5), zz);
  EXPECT_EQ(borel_k_via_mv(2, 1), zz);
  EXPECT_EQ(borel_k_via_mv(3, 1), zz);
  EXPECT_EQ(borel_k_of_dual(1, 0), zz);
  EXPECT_EQ(k_untwisted_free_quotient(), zz);
}

TEST(BorelK, NonCoprime) {
  const KGroups z2z2{FgAbGroup::free(2), FgAbGroup::free(2)};
  EXPECT_EQ(borel_k_of_dual(4, 2), z2z2);
  EXPECT_EQ(borel_k_via_mv(4, 2), z2z2);
  // q = 0: the operator vanishes, so both groups are all of R(Z/n).
  EXPECT_EQ(borel_k_of_dual(6, 0), (KGroups{FgAbGroup::free(6), FgAbGroup::free(6)}));
}

TEST(BorelK, KernelIsCycleInvariants) {
  // ker(P - 1) for a permutation P is spanned by cycle indicators; the
  // cokernel is free of the same rank.
  for (std::int64_t n = 1; n <= 20; ++n)
    for (std::int64_t q = 0; q < n; ++q) {
      const KGroups k = borel_k_of_dual(n, q);
      const auto cycles = static_cast<std::size_t>(std::gcd(n, q));
      EXPECT_EQ(k.k0, FgAbGroup::free(cycles));
      EXPECT_EQ(k.k1, FgAbGroup::free(cycles));
    }
}

TEST(BorelK, MvMatrixLayout) {
  const IntMatrix m = mv_matrix(3, 1);
  ASSERT_EQ(m.rows(), 6u);
  const IntMatrix twist = char_multiplication_matrix(3, -1);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) {
      EXPECT_EQ(m(i, j), i == j ? 1 : 0);
      EXPECT_EQ(m(i, j + 3), i == j ? 1 : 0);
      EXPECT_EQ(m(i + 3, j), -twist(i, j));
      EXPECT_EQ(m(i + 3, j + 3), i == j ? -1 : 0);
    }
}

}  // namespace
}  // namespace tdual
