#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "utlab/functionals.hpp"

namespace utlab {
namespace {

using testing::random_in_disk;

const Complex kI{0.0, 1.0};

TEST(T21, Examples) {
  EXPECT_EQ(t21(0.0), 1.0);
  EXPECT_EQ(t21(2.0), -3.0);
  EXPECT_EQ(t21(-2.0), -3.0);
}

TEST(T31, Examples) {
  EXPECT_EQ(t31(2.0, 3.0), 8.0);
  EXPECT_EQ(t31(1.0, 0.0), -1.0);
  EXPECT_EQ(t31(0.0, 0.0), 1.0);
}

TEST(SymmetricToeplitz, ExtremalValues) {
  const Complex convex = ts22(-kI, -1.0);
  EXPECT_NEAR(std::abs(convex - Complex(-2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(convex), 2.0, 1e-15);

  const Complex r = ts32(-kI, -4.0 / 3.0, 13.0 / 6.0 * kI);
  EXPECT_NEAR(std::abs(r - 817.0 / 108.0 * kI), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(r), 817.0 / 108.0, 1e-12);

  EXPECT_EQ(ts23(0.0, 0.0), Complex(0.0));

  const Complex star = ts32(-2.0 * kI, -5.0, 14.0 * kI);
  EXPECT_EQ(star, 416.0 * kI);
}

TEST(SymmetricToeplitz, DispatchAndParse) {
  EXPECT_EQ(evaluate(FunctionalId::TS32, -2.0 * kI, -5.0, 14.0 * kI), 416.0 * kI);
  EXPECT_EQ(evaluate(FunctionalId::T31, 2.0, 3.0, 0.0), Complex(8.0));
  EXPECT_EQ(parse_functional("ts32"), FunctionalId::TS32);
  EXPECT_EQ(parse_functional("T21"), FunctionalId::T21);
  EXPECT_FALSE(parse_functional("ts33").has_value());
  EXPECT_EQ(bound_quantity(FunctionalId::T21, -3.0), -3.0);
  EXPECT_EQ(bound_quantity(FunctionalId::TS22, Complex(0.0, -2.0)), 2.0);
}

TEST(InversionInvariance, Examples) {
  const auto koebe = inversion_invariance_check(2.0, 3.0);
  EXPECT_EQ(t31(2.0, 3.0), 8.0);
  EXPECT_EQ(t31(-2.0, 5.0), 8.0);
  EXPECT_EQ(koebe.t21_f, koebe.t21_inverse);

  const auto zero = inversion_invariance_check(0.0, 0.0);
  EXPECT_EQ(zero.t21_f, 1.0);
  EXPECT_EQ(zero.t21_inverse, 1.0);
  EXPECT_EQ(zero.ts31_f, Complex(1.0));
  EXPECT_EQ(zero.ts31_inverse, Complex(1.0));

  // Frozen from a symbolic evaluation: T21 = -1, T31 = -12, TS31 = 2 + 8i on
  // both sides.
  const Complex a2{1.0, 1.0};
  const Complex a3{2.0, -1.0};
  const auto mixed = inversion_invariance_check(a2, a3);
  EXPECT_NEAR(mixed.t21_f, -1.0, 1e-14);
  EXPECT_NEAR(mixed.t21_inverse, -1.0, 1e-14);
  EXPECT_NEAR(std::abs(mixed.ts31_f - Complex(2.0, 8.0)), 0.0, 1e-13);
  EXPECT_NEAR(std::abs(mixed.ts31_inverse - Complex(2.0, 8.0)), 0.0, 1e-13);
  EXPECT_NEAR(t31(a2, a3), -12.0, 1e-13);
  EXPECT_NEAR(t31(-a2, 2.0 * a2 * a2 - a3), -12.0, 1e-13);
}

// Closed forms against determinants of the explicit matrices.
TEST(FunctionalProperty, ClosedFormsMatchMatrixDeterminants) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 10000; ++trial) {
    const std::vector<Complex> seq = {0.0, 1.0, random_in_disk(rng, 3.0), random_in_disk(rng, 3.0),
                                      random_in_disk(rng, 3.0)};
    const Complex a2 = seq[2], a3 = seq[3], a4 = seq[4];
    const auto det = [&](std::size_t q, std::size_t n, bool herm) {
      return testing::determinant(testing::toeplitz(seq, q, n, herm));
    };
    const Complex h21 = det(2, 1, true);
    const Complex h31 = det(3, 1, true);
    ASSERT_LT(std::abs(h21.imag()), 1e-10);
    ASSERT_LT(std::abs(h31.imag()), 1e-10);
    ASSERT_NEAR(t21(a2), h21.real(), 1e-10);
    ASSERT_NEAR(t31(a2, a3), h31.real(), 1e-9);
    ASSERT_LT(std::abs(ts22(a2, a3) - det(2, 2, false)), 1e-10);
    ASSERT_LT(std::abs(ts23(a3, a4) - det(2, 3, false)), 1e-10);
    ASSERT_LT(std::abs(ts31(a2, a3) - det(3, 1, false)), 1e-9);
    ASSERT_LT(std::abs(ts32(a2, a3, a4) - det(3, 2, false)), 1e-8);
  }
}

TEST(FunctionalProperty, T21InvariantUnderInversion) {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 100000; ++trial) {
    const Complex a2 = random_in_disk(rng, 2.0);
    ASSERT_EQ(t21(a2), t21(-a2));
  }
}

TEST(FunctionalProperty, T31AndTs31InvariantUnderInversion) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 100000; ++trial) {
    const Complex a2 = random_in_disk(rng, 2.0);
    const Complex a3 = random_in_disk(rng, 3.0);
    const Complex inv2 = -a2;
    const Complex inv3 = 2.0 * a2 * a2 - a3;
    ASSERT_NEAR(t31(a2, a3), t31(inv2, inv3), 1e-10);
    const auto check = inversion_invariance_check(a2, a3);
    ASSERT_EQ(check.t21_f, check.t21_inverse);
    ASSERT_LT(std::abs(check.ts31_f - check.ts31_inverse), 1e-10);
  }
}

TEST(FunctionalProperty, TriangleBounds) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 100000; ++trial) {
    const Complex a2 = random_in_disk(rng, 2.0);
    const Complex a3 = random_in_disk(rng, 5.0);
    const Complex a4 = random_in_disk(rng, 14.0);
    ASSERT_LE(std::abs(ts22(a2, a3)), std::norm(a2) + std::norm(a3) + 1e-12);
    ASSERT_LE(std::abs(ts23(a3, a4)), std::norm(a3) + std::norm(a4) + 1e-10);
  }
}

}  // namespace
}  // namespace utlab
