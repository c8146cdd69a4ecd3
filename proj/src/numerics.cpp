#include "opseries/numerics.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <limits>
#include <numbers>

namespace opseries {

namespace {

// Gamma(171.624...) is the last value below DBL_MAX.
constexpr double kGammaOverflowArg = 171.62437695630272;

// Multiple of eps * sum|term| charged for per-term rounding; each addend is a
// product of a handful of correctly rounded operations.
constexpr double kRoundingUlps = 8.0;

}  // namespace

void TruncationPolicy::validate() const {
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol))
    throw DomainError("truncation policy: rel_tol must be finite and > 0");
  if (small_streak < 1)
    throw DomainError("truncation policy: small_streak must be >= 1");
  if (max_terms < 1)
    throw DomainError("truncation policy: max_terms must be >= 1");
}

double gamma_real(double x) {
  if (!std::isfinite(x) || !(x > 0.0))
    throw DomainError("gamma_real: argument must be finite and > 0, got " +
                      std::to_string(x));
  if (x > kGammaOverflowArg)
    throw OverflowError("gamma_real: Gamma(" + std::to_string(x) +
                        ") exceeds the double range");
  double g = boost::math::tgamma(x);
  if (!std::isfinite(g))
    throw OverflowError("gamma_real: Gamma(" + std::to_string(x) +
                        ") exceeds the double range");
  return g;
}

double gamma_scaled(double a, double scale) {
  if (!std::isfinite(a) || !(a > 0.0))
    throw DomainError("gamma_scaled: argument must be finite and > 0");
  if (scale == 0.0) return 0.0;
  if (a <= 170.0) return gamma_real(a) * scale;
  double log_mag = boost::math::lgamma(a) + std::log(std::abs(scale));
  double mag = std::exp(log_mag);
  if (!std::isfinite(mag))
    throw OverflowError("gamma_scaled: product exceeds the double range");
  return std::copysign(mag, scale);
}

ComplexValue unit_phase(long long k, long long d) {
  if (d <= 0) throw DomainError("unit_phase: denominator must be positive");
  const long long period = 2 * d;
  long long r = k % period;
  if (r < 0) r += period;
  // angle = pi r / d = (pi/2) * (2r / d); split into quarter turns.
  const long long twice = 2 * r;
  const long long quarter = twice / d;
  long long rem = twice - quarter * d;  // angle within quadrant = (pi/2) rem/d

  double c = 1.0;
  double s = 0.0;
  if (rem != 0) {
    bool folded = false;
    if (2 * rem > d) {
      rem = d - rem;
      folded = true;
    }
    const double phi = std::numbers::pi * static_cast<double>(rem) /
                       (2.0 * static_cast<double>(d));
    c = std::cos(phi);
    s = std::sin(phi);
    if (2 * rem == d) s = c;  // pi/4 exactly
    if (folded) std::swap(c, s);
  }
  switch (quarter) {
    case 0: return {c, s};
    case 1: return {-s, c};
    case 2: return {-c, -s};
    default: return {s, -c};
  }
}

void CompensatedAccumulator::Lane::add(double v) {
  const double t = sum + v;
  if (std::abs(sum) >= std::abs(v))
    comp += (sum - t) + v;
  else
    comp += (v - t) + sum;
  sum = t;
}

void CompensatedAccumulator::add(ComplexValue term) {
  re_.add(term.real());
  im_.add(term.imag());
}

SeriesSummer::SeriesSummer(const TruncationPolicy& policy) : policy_(policy) {
  policy_.validate();
}

bool SeriesSummer::add(ComplexValue term) { return add(term, std::abs(term)); }

bool SeriesSummer::add(ComplexValue term, double magnitude) {
  if (!std::isfinite(term.real()) || !std::isfinite(term.imag())) {
    abandoned_ = true;
    return true;
  }
  acc_.add(term);
  ++terms_;
  magnitude_sum_ += magnitude;
  recent_.push_back(term);
  if (static_cast<int>(recent_.size()) > policy_.small_streak) recent_.pop_front();

  const double mag = std::abs(term);
  const bool small = mag == 0.0 || mag < policy_.rel_tol * std::abs(acc_.value());
  streak_ = small ? streak_ + 1 : 0;
  if (streak_ >= policy_.small_streak) {
    streak_fired_ = true;
    return true;
  }
  return terms_ >= policy_.max_terms;
}

EvalResult SeriesSummer::result() const {
  EvalResult out;
  out.value = acc_.value();
  out.terms_used = terms_;
  out.converged = !abandoned_ && (streak_fired_ || terms_ < policy_.max_terms);
  ComplexValue tail{};
  for (const auto& t : recent_) tail += t;
  out.abs_err_est = std::abs(tail) + kRoundingUlps *
                                         std::numeric_limits<double>::epsilon() *
                                         magnitude_sum_;
  if (abandoned_) out.abs_err_est = std::numeric_limits<double>::infinity();
  return out;
}

}  // namespace opseries
