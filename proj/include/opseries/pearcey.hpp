#pragma once

// Half-line Pearcey integral
//
//   P(x, y) = int_0^inf e^{i(u^4 + x u^2 + y u)} du
//
// by two independent expansions: the double power series in (x, y) and the
// heat-operator form sum_n e^{i 5n pi/8} Gamma((n+1)/4) / n! H_n(y, -ix).
// This is the half-line integral, not the full-line Pearcey function used in
// diffraction optics.

#include "opseries/numerics.hpp"

namespace opseries {

inline constexpr double kPearceyMaxAbs = 3.0;

struct PearceyPoint {
  double x = 0.0;  // coefficient of u^2
  double y = 0.0;  // coefficient of u

  bool in_domain() const;
};

/// Rearranged double series
///   (1/4) sum_{m,k} Gamma((2m+k+1)/4) x^m y^k / (m! k!) e^{i pi (6m+5k+1)/8},
/// summed by total degree n = m + k. Points outside |x|, |y| <= 3 are still
/// evaluated but reported as not converged.
EvalResult pearcey_double_sum(const PearceyPoint& p, const TruncationPolicy& policy = {});

/// P(0, y) = (e^{i pi/8}/4) sum_n Gamma((n+1)/4) / n! (e^{i 5pi/8} y)^n.
EvalResult pearcey_boundary(double y, const TruncationPolicy& policy = {});

/// P(x, y) = (e^{i pi/8}/4) sum_n e^{i 5n pi/8} / n! Gamma((n+1)/4) H_n(y, -ix).
EvalResult pearcey_hermite(const PearceyPoint& p, const TruncationPolicy& policy = {});

/// |i dP/dx - d^2P/dy^2| with both derivatives taken term-wise on the Hermite
/// expansion.
double pearcey_pde_residual(const PearceyPoint& p, const TruncationPolicy& policy = {});

/// Same residual from central differences of pearcey_double_sum with the given
/// step. Second-order accurate; an independent cross-check only.
double pearcey_pde_residual_fd(const PearceyPoint& p, double step,
                               const TruncationPolicy& policy = {});

/// Phase of the (m, k) addend written as the product of the three unit factors
/// e^{i pi/8} e^{i 3 n pi/4} e^{-i k pi/8} with n = m + k.
ComplexValue pearcey_phase_factored(int m, int k);

/// Phase of the (m, k) addend as a single reduced angle e^{i pi (6m+5k+1)/8}.
ComplexValue pearcey_phase(int m, int k);

}  // namespace opseries
