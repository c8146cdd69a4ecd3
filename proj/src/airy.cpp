#include "opseries/airy.hpp"

#include <cmath>
#include <numbers>
#include <string>

namespace opseries {

namespace {

const double kCbrt3 = std::cbrt(3.0);
const double kAiryPrefactor = 1.0 / (kCbrt3 * kCbrt3 * std::numbers::pi);

void check_domain(double x, double limit, const char* what) {
  if (!std::isfinite(x) || std::abs(x) > limit)
    throw DomainError(std::string(what) + ": |x| must be <= " + std::to_string(limit) +
                      ", got " + std::to_string(x));
}

// Addend j of the order-k derivative series:
//   Gamma((j+k+1)/3) / j! * cos((4(j+k)+1) pi/6) * 3^{k/3} (3^{1/3} x)^j / (3^{2/3} pi)
// `scaled_pow` carries (3^{1/3} x)^j / j!.
double airy_addend(double scaled_pow, int j, int order) {
  const int n = j + order;
  const double trig = unit_phase(4LL * n + 1, 6).real();
  if (trig == 0.0) return 0.0;
  const double shift = order == 0 ? 1.0 : std::pow(kCbrt3, order);
  return gamma_scaled((n + 1) / 3.0, scaled_pow) * trig * shift * kAiryPrefactor;
}

EvalResult airy_series(double x, int order, const TruncationPolicy& policy) {
  check_domain(x, kAiryMaxAbsX, "airy_ai");
  SeriesSummer summer(policy);
  const double step = kCbrt3 * x;
  double scaled_pow = 1.0;
  for (int j = 0;; ++j) {
    if (j > 0) scaled_pow *= step / j;
    if (summer.add(airy_addend(scaled_pow, j, order))) break;
  }
  return summer.result();
}

}  // namespace

EvalResult airy_ai(double x, const TruncationPolicy& policy) {
  return airy_series(x, 0, policy);
}

EvalResult airy_ai_deriv(double x, int order, const TruncationPolicy& policy) {
  if (order != 1 && order != 2)
    throw DomainError("airy_ai_deriv: order must be 1 or 2");
  return airy_series(x, order, policy);
}

double airy_ai_term(double x, int n) {
  if (n < 0) throw DomainError("airy_ai_term: negative index");
  const double step = kCbrt3 * x;
  double scaled_pow = 1.0;
  for (int j = 1; j <= n; ++j) scaled_pow *= step / j;
  return airy_addend(scaled_pow, n, 0);
}

EvalResult airy4(double x, Airy4Variant variant, const TruncationPolicy& policy) {
  check_domain(x, kAiry4MaxAbsX, "airy4");
  const double c2 = std::cos(2.0 * x * x);
  const double s2 = std::sin(2.0 * x * x);
  const double step = 2.0 * x;

  SeriesSummer summer(policy);
  double scaled_pow = 1.0;  // (2x)^n / n!
  for (int n = 0;; ++n) {
    if (n > 0) scaled_pow *= step / n;
    const ComplexValue phase = unit_phase(5LL * n + 1, 8);
    const double angular = variant == Airy4Variant::corrected
                               ? c2 * phase.real() - s2 * phase.imag()
                               : c2 * phase.real() - s2 * phase.real();
    const double term = 0.25 * gamma_scaled((n + 1) / 4.0, scaled_pow) * angular;
    if (summer.add(term)) break;
  }
  return summer.result();
}

}  // namespace opseries
