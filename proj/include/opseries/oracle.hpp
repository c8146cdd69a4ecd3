#pragma once

// Ground truth for the series evaluators: integrals of the form
//
//   int_0^inf e^{i xi^alpha} g(xi) dxi
//
// evaluated along the ray xi = e^{i theta} s. At theta = pi/(2 alpha) the
// oscillatory factor becomes e^{-s^alpha}; any 0 < theta <= pi/(2 alpha)
// keeps it decaying. The damped integrand is integrated by adaptive
// Gauss-Kronrod (7/15) bisection up to a tail cut-off derived from a growth
// bound on g.

#include <functional>
#include <optional>

#include "opseries/numerics.hpp"

namespace opseries {

struct ContourSpec {
  double alpha = 2.0;
  std::optional<double> rotation;  // defaults to pi / (2 alpha)
  double abs_tol = 1e-10;
  int max_subdivisions = 60;

  double effective_rotation() const;
  void validate() const;
};

/// Bound on the amplitude along the ray:
///   |g(e^{i theta} s)| <= s^power * exp(linear * s + quadratic * s^2).
/// The constants must hold for the rotation in use.
struct AmplitudeGrowth {
  double power = 0.0;
  double linear = 0.0;
  double quadratic = 0.0;
};

struct Amplitude {
  std::function<ComplexValue(ComplexValue)> eval;
  AmplitudeGrowth growth;
};

struct QuadResult {
  ComplexValue value{};
  double error = 0.0;  // absolute, panels plus truncated tail
  int panels = 0;
};

/// Throws ConvergenceError if max_subdivisions bisections do not bring the
/// summed panel error estimate below abs_tol.
QuadResult rotated_quadrature(const ContourSpec& spec, const Amplitude& amplitude);

/// Upper end of the integration range on the ray: beyond it the damped
/// integrand bound stays below abs_tol / 10.
double tail_cutoff(const ContourSpec& spec, const AmplitudeGrowth& growth);

/// Ai(x) = (1/pi) Re int_0^inf e^{i(xi^3/3 + x xi)} dxi, |x| <= 8. Real result.
QuadResult airy_quad(double x, std::optional<double> rotation = {});

/// Ai4(x) = Re{e^{2ix^2} int_0^inf e^{i t^4} e^{2ixt} dt}, |x| <= 4. Real result.
QuadResult airy4_quad(double x, std::optional<double> rotation = {});

/// P(x, y) = int_0^inf e^{i(u^4 + x u^2 + y u)} du, |x|, |y| <= 3.
QuadResult pearcey_quad(double x, double y, std::optional<double> rotation = {});

/// C(alpha, beta) by quadrature of xi^beta along the ray.
QuadResult fresnel_quad(double alpha, double beta, std::optional<double> rotation = {});

}  // namespace opseries
