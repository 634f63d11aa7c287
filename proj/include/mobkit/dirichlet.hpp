#pragma once

#include <complex>
#include <cstdint>
#include <string>

namespace mobkit::dirichlet {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kMaxTerms = 100'000'000;
inline constexpr std::uint64_t kMaxReciprocalTerms = 10'000'000;

// A partial Dirichlet sum sum_{n <= N} c_n n^{-z} with |c_n| <= 1 and Re z > 1.
//
// tail_bound is the integral comparison N^{1 - Re z} / (Re z - 1), which
// dominates |sum_{n > N} c_n n^{-z}|. rounding_bound covers binary64 error in
// partial_sum: each term contributes |t_n| eps (8 + 4 |z| ln n) from log,
// exp and sincos, and the compensated sum adds (4 eps + N eps^2) sum |t_n|;
// the total is doubled.
class TruncatedSeries {
public:
  TruncatedSeries(Complex z, std::uint64_t n_terms, Complex partial_sum, double rounding_bound);

  Complex z() const { return z_; }
  std::uint64_t n_terms() const { return n_terms_; }
  Complex partial_sum() const { return partial_sum_; }
  double tail_bound() const { return tail_bound_; }
  double rounding_bound() const { return rounding_bound_; }
  // Bound on |true sum - partial_sum|.
  double error_bound() const { return tail_bound_ + rounding_bound_; }

private:
  Complex z_;
  std::uint64_t n_terms_;
  Complex partial_sum_;
  double tail_bound_;
  double rounding_bound_;
};

// N^{1 - sigma} / (sigma - 1); throws DomainError for sigma <= 1.
double integral_tail_bound(double sigma, std::uint64_t n_terms);

// sum_{n <= N} n^{-z}, summed left to right in increasing n. The result for
// conj(z) is exactly the conjugate of the result for z.
TruncatedSeries zeta_truncated(Complex z, std::uint64_t n_terms);

// sum_{n <= N} mu(n) n^{-z}; N <= kMaxReciprocalTerms.
TruncatedSeries zeta_reciprocal_truncated(Complex z, std::uint64_t n_terms);

enum class Verdict { kPass, kInconclusive, kViolation };
std::string to_string(Verdict v);

struct Interval {
  double lo = 0;
  double hi = 0;
};

struct ZetaBoundsReport {
  Complex z;
  std::uint64_t n_terms = 0;
  TruncatedSeries zeta;
  TruncatedSeries reciprocal;
  double lower_bound = 0;  // (Re z - 1) / Re z
  double upper_bound = 0;  // Re z / (Re z - 1)
  Interval abs_zeta;       // encloses |zeta(z)|
  // Distance from |partial_sum| to the nearer bound.
  double bound_gap = 0;
  Verdict verdict = Verdict::kInconclusive;
  Interval abs_reciprocal;  // encloses |1/zeta(z)|
  Interval zeta_of_re;      // encloses zeta(Re z)
  // |1/zeta(z)| <= zeta(Re z)
  Verdict reciprocal_verdict = Verdict::kInconclusive;
};

// Checks lower_bound < |zeta(z)| < upper_bound against the enclosure
// |partial_sum| +- error_bound: pass when the enclosure lies strictly inside,
// violation when it lies entirely outside, inconclusive otherwise.
ZetaBoundsReport verify_zeta_bounds(Complex z, std::uint64_t n_terms);

struct ProductCheck {
  Complex product;
  double deviation = 0;       // |Z_N(z) R_N(z) - 1|
  double combined_error = 0;  // bound on that deviation from the two enclosures
  bool within = false;
};

// Z_N(z) R_N(z) against 1, where Z_N and R_N are the truncated zeta and
// reciprocal sums.
ProductCheck check_reciprocal_product(Complex z, std::uint64_t n_terms);

}  // namespace mobkit::dirichlet
