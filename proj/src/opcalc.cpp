#include "opseries/opcalc.hpp"

#include <cmath>
#include <numbers>

namespace opseries {

void FresnelSymbol::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 1.0))
    throw DomainError("fresnel symbol: alpha must be > 1");
  if (!std::isfinite(beta) || !(beta > -1.0))
    throw DomainError("fresnel symbol: beta must be > -1");
}

namespace {

bool is_integral(double v) { return std::abs(v) <= 1e15 && std::round(v) == v; }

// exp{i pi (1+beta) / (2 alpha)}, exact at quarter turns when the ratio is an
// integer or both parameters are.
ComplexValue fresnel_phase(double alpha, double beta) {
  const double ratio = (1.0 + beta) / alpha;
  if (is_integral(ratio)) return unit_phase(static_cast<long long>(ratio), 2);
  if (is_integral(alpha) && is_integral(beta))
    return unit_phase(static_cast<long long>(beta) + 1, 2 * static_cast<long long>(alpha));
  return std::polar(1.0, 0.5 * std::numbers::pi * ratio);
}

}  // namespace

ComplexValue fresnel_symbol(const FresnelSymbol& s) {
  s.validate();
  const double modulus = gamma_real((1.0 + s.beta) / s.alpha) / s.alpha;
  return modulus * fresnel_phase(s.alpha, s.beta);
}

CoefficientSeries operator+(const CoefficientSeries& f, const CoefficientSeries& g) {
  return CoefficientSeries([f, g](std::size_t n) { return f(n) + g(n); });
}

CoefficientSeries exp_coefficients(ComplexValue c) {
  return CoefficientSeries([c](std::size_t n) {
    ComplexValue a{1.0, 0.0};
    for (std::size_t j = 1; j <= n; ++j) a *= c / static_cast<double>(j);
    return a;
  });
}

EvalResult transform_series(const CoefficientSeries& f, double alpha, ComplexValue x,
                            const TruncationPolicy& policy) {
  if (!std::isfinite(alpha) || !(alpha > 1.0))
    throw DomainError("transform_series: alpha must be > 1");

  SeriesSummer summer(policy);
  ComplexValue x_pow{1.0, 0.0};
  for (std::size_t n = 0;; ++n) {
    if (n > 0) x_pow *= x;
    const ComplexValue scaled = f(n) * x_pow;
    const double mag = std::abs(scaled);
    const double ratio = (1.0 + static_cast<double>(n)) / alpha;
    // C(alpha, n) scaled by |a_n x^n|; Gamma alone overflows long before the
    // product does when alpha is close to 1.
    ComplexValue term{};
    if (mag != 0.0) {
      if (!std::isfinite(mag)) {
        summer.abandon();
        break;
      }
      const double modulus = gamma_scaled(ratio, mag) / alpha;
      term = modulus * fresnel_phase(alpha, static_cast<double>(n)) * (scaled / mag);
    }
    if (summer.add(term)) break;
  }
  return summer.result();
}

}  // namespace opseries
