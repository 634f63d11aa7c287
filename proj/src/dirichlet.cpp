#include "mobkit/dirichlet.hpp"

#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <vector>

#include "mobkit/arith.hpp"

namespace mobkit::dirichlet {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void check_domain(Complex z, std::uint64_t n_terms, std::uint64_t cap) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
    throw DomainError("z must be finite");
  }
  if (!(z.real() > 1.0)) {
    throw DomainError("series requires Re z > 1, got Re z = " + std::to_string(z.real()));
  }
  if (n_terms < 1) throw DomainError("number of terms must be at least 1");
  if (n_terms > cap) {
    throw CapError("number of terms " + std::to_string(n_terms) + " exceeds cap " + std::to_string(cap));
  }
}

// Neumaier summation of one real component.
class CompensatedSum {
public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      carry_ += (sum_ - t) + x;
    } else {
      carry_ += (x - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + carry_; }

private:
  double sum_ = 0;
  double carry_ = 0;
};

// Process-wide, grow-only; callers keep their own snapshot.
std::shared_ptr<const std::vector<std::int8_t>> mobius_table(std::uint64_t n_terms) {
  static std::mutex mutex;
  static std::shared_ptr<const std::vector<std::int8_t>> table;
  std::lock_guard lock(mutex);
  if (!table || table->size() <= n_terms) {
    auto fresh = std::make_shared<std::vector<std::int8_t>>(n_terms + 1, 0);
    for (std::uint64_t n = 1; n <= n_terms; ++n) {
      (*fresh)[n] = static_cast<std::int8_t>(arith::mobius(BigInt(static_cast<unsigned long>(n))));
    }
    table = std::move(fresh);
  }
  return table;
}

template <class Coefficient>
TruncatedSeries sum_series(Complex z, std::uint64_t n_terms, Coefficient coefficient) {
  const double sigma = z.real();
  const double tau = std::abs(z.imag());
  const double sign = std::signbit(z.imag()) ? 1.0 : -1.0;
  const double z_abs = std::abs(z);
  CompensatedSum re;
  CompensatedSum im;
  double abs_total = 0;
  double per_term = 0;
  for (std::uint64_t n = 1; n <= n_terms; ++n) {
    const int c = coefficient(n);
    if (c == 0) continue;
    const double log_n = std::log(static_cast<double>(n));
    const double magnitude = std::exp(-sigma * log_n);
    const double angle = tau * log_n;
    const double t_re = c * magnitude * std::cos(angle);
    const double t_im = c * sign * magnitude * std::sin(angle);
    re.add(t_re);
    im.add(t_im);
    abs_total += magnitude;
    per_term += magnitude * (8.0 + 4.0 * z_abs * log_n);
  }
  const double n = static_cast<double>(n_terms);
  const double rounding = 2.0 * (kEps * per_term + (4.0 * kEps + n * kEps * kEps) * abs_total);
  return TruncatedSeries(z, n_terms, Complex(re.value(), im.value()), rounding);
}

Verdict strict_inside(const Interval& value, double lo, double hi) {
  if (value.lo > lo && value.hi < hi) return Verdict::kPass;
  if (value.hi <= lo || value.lo >= hi) return Verdict::kViolation;
  return Verdict::kInconclusive;
}

}  // namespace

TruncatedSeries::TruncatedSeries(Complex z, std::uint64_t n_terms, Complex partial_sum,
                                 double rounding_bound)
    : z_(z),
      n_terms_(n_terms),
      partial_sum_(partial_sum),
      tail_bound_(integral_tail_bound(z.real(), n_terms)),
      rounding_bound_(rounding_bound) {
  if (n_terms < 1) throw DomainError("number of terms must be at least 1");
  if (!(rounding_bound >= 0)) throw DomainError("rounding bound must be nonnegative");
}

double integral_tail_bound(double sigma, std::uint64_t n_terms) {
  if (!(sigma > 1.0)) throw DomainError("tail bound requires Re z > 1");
  const double log_n = std::log(static_cast<double>(n_terms));
  const double bound = std::exp((1.0 - sigma) * log_n) / (sigma - 1.0);
  return bound * (1.0 + (8.0 + 4.0 * (sigma - 1.0) * log_n) * kEps);
}

TruncatedSeries zeta_truncated(Complex z, std::uint64_t n_terms) {
  check_domain(z, n_terms, kMaxTerms);
  return sum_series(z, n_terms, [](std::uint64_t) { return 1; });
}

TruncatedSeries zeta_reciprocal_truncated(Complex z, std::uint64_t n_terms) {
  check_domain(z, n_terms, kMaxReciprocalTerms);
  const auto table = mobius_table(n_terms);
  return sum_series(z, n_terms, [&](std::uint64_t n) { return static_cast<int>((*table)[n]); });
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kPass: return "pass";
    case Verdict::kInconclusive: return "inconclusive";
    case Verdict::kViolation: return "violation";
  }
  throw InternalError("unknown verdict");
}

ZetaBoundsReport verify_zeta_bounds(Complex z, std::uint64_t n_terms) {
  auto zeta = zeta_truncated(z, n_terms);
  auto reciprocal = zeta_reciprocal_truncated(z, n_terms);
  const double sigma = z.real();
  const double lower = (sigma - 1.0) / sigma;
  const double upper = sigma / (sigma - 1.0);

  const double abs_partial = std::abs(zeta.partial_sum());
  const double err = zeta.error_bound() + 2.0 * kEps * abs_partial;
  const Interval abs_zeta{abs_partial - err, abs_partial + err};

  const double abs_rec = std::abs(reciprocal.partial_sum());
  const double rec_err = reciprocal.error_bound() + 2.0 * kEps * abs_rec;
  const Interval abs_reciprocal{abs_rec - rec_err, abs_rec + rec_err};

  const auto real_zeta = zeta_truncated(Complex(sigma, 0.0), n_terms);
  const double real_partial = real_zeta.partial_sum().real();
  const Interval zeta_of_re{real_partial - real_zeta.rounding_bound(),
                            real_partial + real_zeta.error_bound()};

  Verdict reciprocal_verdict = Verdict::kInconclusive;
  if (abs_reciprocal.hi <= zeta_of_re.lo) {
    reciprocal_verdict = Verdict::kPass;
  } else if (abs_reciprocal.lo > zeta_of_re.hi) {
    reciprocal_verdict = Verdict::kViolation;
  }

  return ZetaBoundsReport{
      .z = z,
      .n_terms = n_terms,
      .zeta = zeta,
      .reciprocal = reciprocal,
      .lower_bound = lower,
      .upper_bound = upper,
      .abs_zeta = abs_zeta,
      .bound_gap = std::min(abs_partial - lower, upper - abs_partial),
      .verdict = strict_inside(abs_zeta, lower, upper),
      .abs_reciprocal = abs_reciprocal,
      .zeta_of_re = zeta_of_re,
      .reciprocal_verdict = reciprocal_verdict,
  };
}

ProductCheck check_reciprocal_product(Complex z, std::uint64_t n_terms) {
  const auto zeta = zeta_truncated(z, n_terms);
  const auto reciprocal = zeta_reciprocal_truncated(z, n_terms);
  const Complex product = zeta.partial_sum() * reciprocal.partial_sum();
  const double e1 = zeta.error_bound();
  const double e2 = reciprocal.error_bound();
  const double a1 = std::abs(zeta.partial_sum());
  const double a2 = std::abs(reciprocal.partial_sum());
  // Z R - 1 = zeta e2 + e1 / zeta + e1 e2
  const double combined = (a1 + e1) * e2 + e1 * (a2 + e2) + e1 * e2 + 8.0 * kEps * a1 * a2;
  const double deviation = std::abs(product - 1.0);
  return {product, deviation, combined, deviation <= combined};
}

}  // namespace mobkit::dirichlet
