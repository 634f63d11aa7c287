#include "mobkit/dirichlet.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "mobkit/arith.hpp"

namespace {

using mobkit::BigInt;
using mobkit::Rational;
namespace dirichlet = mobkit::dirichlet;
using dirichlet::Complex;

// sum_{n <= N} 1/n^2 exactly, over the common denominator (N!)^2 avoided by
// accumulating with a running lcm.
Rational exact_inverse_squares(unsigned long n_terms) {
  BigInt lcm = 1;
  for (unsigned long n = 1; n <= n_terms; ++n) {
    const BigInt sq = BigInt(n) * n;
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), sq.get_mpz_t());
  }
  BigInt numer = 0;
  for (unsigned long n = 1; n <= n_terms; ++n) numer += lcm / (BigInt(n) * n);
  Rational r(numer, lcm);
  r.canonicalize();
  return r;
}

TEST(ZetaTruncated, OneTerm) {
  const auto s = dirichlet::zeta_truncated({3.0, 7.0}, 1);
  EXPECT_EQ(s.partial_sum(), Complex(1.0, 0.0));
  const auto r = dirichlet::zeta_reciprocal_truncated({3.0, 7.0}, 1);
  EXPECT_EQ(r.partial_sum(), Complex(1.0, 0.0));
}

TEST(ZetaTruncated, AgreesWithExactRationalSum) {
  const unsigned long n_terms = 10'000;
  const Rational exact = exact_inverse_squares(n_terms);
  const auto s = dirichlet::zeta_truncated({2.0, 0.0}, n_terms);
  const double diff = std::abs(s.partial_sum().real() - exact.get_d());
  EXPECT_LE(diff, s.rounding_bound() + 1e-16);
  EXPECT_EQ(s.partial_sum().imag(), 0.0);
  // The limit lies in the enclosure.
  EXPECT_LE(std::abs(s.partial_sum().real() - std::numbers::pi * std::numbers::pi / 6), s.error_bound());
}

TEST(ZetaTruncated, BaselZetaTwoMillionTerms) {
  const auto s = dirichlet::zeta_truncated({2.0, 0.0}, 1'000'000);
  const double target = std::numbers::pi * std::numbers::pi / 6;
  EXPECT_LE(std::abs(s.partial_sum().real() - target), 1e-6 + s.rounding_bound());
  EXPECT_LE(std::abs(s.partial_sum().real() - target), s.error_bound());
}

TEST(ZetaTruncated, RealInputHasZeroImaginaryPart) {
  for (double sigma : {1.5, 3.0, 7.25}) {
    EXPECT_EQ(dirichlet::zeta_truncated({sigma, 0.0}, 5000).partial_sum().imag(), 0.0);
    EXPECT_EQ(dirichlet::zeta_reciprocal_truncated({sigma, 0.0}, 5000).partial_sum().imag(), 0.0);
  }
}

TEST(ZetaTruncated, ConjugateSymmetryIsExact) {
  for (const Complex z : {Complex(1.3, 4.7), Complex(2.0, -0.1), Complex(9.5, 10.0)}) {
    const auto a = dirichlet::zeta_truncated(z, 20'000).partial_sum();
    const auto b = dirichlet::zeta_truncated(std::conj(z), 20'000).partial_sum();
    EXPECT_EQ(std::conj(a), b);
    const auto c = dirichlet::zeta_reciprocal_truncated(z, 20'000).partial_sum();
    const auto d = dirichlet::zeta_reciprocal_truncated(std::conj(z), 20'000).partial_sum();
    EXPECT_EQ(std::conj(c), d);
  }
}

TEST(ZetaTruncated, TailBoundIsMonotoneInN) {
  for (const double sigma : {1.1, 1.5, 2.0, 5.0, 10.0}) {
    for (std::uint64_t n = 1; n <= 1'000'000; n *= 10) {
      EXPECT_LT(dirichlet::integral_tail_bound(sigma, 2 * n), dirichlet::integral_tail_bound(sigma, n));
    }
  }
  EXPECT_NEAR(dirichlet::integral_tail_bound(2.0, 100), 0.01, 1e-15);
}

TEST(ZetaTruncated, TailBoundDominatesActualTail) {
  const auto coarse = dirichlet::zeta_truncated({1.7, 3.0}, 1000);
  const auto fine = dirichlet::zeta_truncated({1.7, 3.0}, 1'000'000);
  EXPECT_LE(std::abs(coarse.partial_sum() - fine.partial_sum()),
            coarse.error_bound() + fine.error_bound());
}

TEST(ZetaTruncated, RejectsOutsideHalfPlane) {
  EXPECT_THROW(dirichlet::zeta_truncated({1.0, 2.0}, 10), mobkit::DomainError);
  EXPECT_THROW(dirichlet::zeta_truncated({0.5, 0.0}, 10), mobkit::DomainError);
  EXPECT_THROW(dirichlet::zeta_truncated({NAN, 0.0}, 10), mobkit::DomainError);
  EXPECT_THROW(dirichlet::zeta_truncated({2.0, 0.0}, 0), mobkit::DomainError);
  EXPECT_THROW(dirichlet::zeta_reciprocal_truncated({1.0, 0.0}, 10), mobkit::DomainError);
  EXPECT_THROW(dirichlet::zeta_reciprocal_truncated({2.0, 0.0}, dirichlet::kMaxReciprocalTerms + 1),
               mobkit::CapError);
}

TEST(ZetaReciprocal, SmallSumMatchesDefinition) {
  // 1 - 2^-2 - 3^-2 - 5^-2 + 6^-2 at N = 6.
  const auto r = dirichlet::zeta_reciprocal_truncated({2.0, 0.0}, 6);
  EXPECT_NEAR(r.partial_sum().real(), 1.0 - 0.25 - 1.0 / 9 - 0.04 + 1.0 / 36, 1e-15);
}

TEST(ZetaReciprocal, ProductWithZetaIsOne) {
  for (const Complex z : {Complex(2.0, 0.0), Complex(3.0, 0.0), Complex(2.0, 5.0)}) {
    const auto check = dirichlet::check_reciprocal_product(z, 10'000);
    EXPECT_TRUE(check.within) << check.deviation << " vs " << check.combined_error;
  }
}

TEST(ZetaBounds, ZetaTwo) {
  const auto report = dirichlet::verify_zeta_bounds({2.0, 0.0}, 1'000'000);
  EXPECT_DOUBLE_EQ(report.lower_bound, 0.5);
  EXPECT_DOUBLE_EQ(report.upper_bound, 2.0);
  EXPECT_EQ(report.verdict, dirichlet::Verdict::kPass);
  EXPECT_EQ(report.reciprocal_verdict, dirichlet::Verdict::kPass);
  EXPECT_LT(report.abs_zeta.lo, 1.6449341);
  EXPECT_GT(report.abs_zeta.hi, 1.6449340);
}

TEST(ZetaBounds, LargeRealPartApproachesOne) {
  const auto report = dirichlet::verify_zeta_bounds({50.0, 3.0}, 1000);
  EXPECT_EQ(report.verdict, dirichlet::Verdict::kPass);
  // Both sides of |1/zeta(z)| <= zeta(50) sit within a few ulps of 1.
  EXPECT_NE(report.reciprocal_verdict, dirichlet::Verdict::kViolation);
  EXPECT_NEAR(std::abs(report.zeta.partial_sum()), 1.0, 1e-14);
  EXPECT_LT(report.lower_bound, 1.0);
  EXPECT_GT(report.upper_bound, 1.0);
}

TEST(ZetaBounds, BoundFormulasNearOne) {
  const auto report = dirichlet::verify_zeta_bounds({1.1, 0.0}, 1000);
  EXPECT_NEAR(report.lower_bound, 0.1 / 1.1, 1e-15);
  EXPECT_NEAR(report.upper_bound, 11.0, 1e-12);
  EXPECT_NE(report.verdict, dirichlet::Verdict::kViolation);
}

TEST(ZetaBounds, SampledGridHasNoViolations) {
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      const Complex z(1.1 + i * 2.2, -10.0 + j * 5.0);
      const auto report = dirichlet::verify_zeta_bounds(z, 100'000);
      EXPECT_NE(report.verdict, dirichlet::Verdict::kViolation) << z;
      EXPECT_NE(report.reciprocal_verdict, dirichlet::Verdict::kViolation) << z;
      if (report.verdict == dirichlet::Verdict::kInconclusive) {
        EXPECT_LT(report.bound_gap, 10 * report.zeta.error_bound()) << z;
      }
    }
  }
}

TEST(Verdicts, Names) {
  EXPECT_EQ(dirichlet::to_string(dirichlet::Verdict::kPass), "pass");
  EXPECT_EQ(dirichlet::to_string(dirichlet::Verdict::kInconclusive), "inconclusive");
  EXPECT_EQ(dirichlet::to_string(dirichlet::Verdict::kViolation), "violation");
}

}  // namespace
