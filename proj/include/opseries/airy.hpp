#pragma once

// Power-series evaluators for Ai(x) and the quartic-phase generalization
//
//   Ai4(x) = int_0^inf cos(t^4 + 2 x t + 2 x^2) dt,
//
// both obtained by applying C(alpha, x d/dx) to an exponential. The series are
// alternating-factorial and lose digits to cancellation as |x| grows, so each
// evaluator refuses arguments beyond a practical domain.

#include "opseries/numerics.hpp"

namespace opseries {

inline constexpr double kAiryMaxAbsX = 8.0;
inline constexpr double kAiry4MaxAbsX = 4.0;

enum class Airy4Variant {
  // cos(2x^2 + (5n+1) pi/8) per term: Re{e^{2ix^2} C(4, x d/dx) e^{2ix}}.
  corrected,
  // cos(2x^2) cos(phi_n) - sin(2x^2) cos(phi_n), reproduced as printed in
  // the source derivation; kept for comparison only.
  verbatim,
};

/// Ai(x) = (1 / (3^{2/3} pi)) sum_n Gamma((n+1)/3) / n! cos((4n+1) pi/6) (3^{1/3} x)^n.
/// Throws DomainError for |x| > kAiryMaxAbsX. The value is real (im = 0).
EvalResult airy_ai(double x, const TruncationPolicy& policy = {});

/// Term-wise derivative of order 1 or 2 of the airy_ai series.
EvalResult airy_ai_deriv(double x, int order, const TruncationPolicy& policy = {});

/// n-th addend of the airy_ai series at x, before summation.
double airy_ai_term(double x, int n);

/// Ai4(x) by series; throws DomainError for |x| > kAiry4MaxAbsX.
EvalResult airy4(double x, Airy4Variant variant = Airy4Variant::corrected,
                 const TruncationPolicy& policy = {});

}  // namespace opseries
