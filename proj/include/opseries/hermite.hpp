#pragma once

// Two-variable (heat) Hermite polynomials
//
//   H_n(z, w) = n! sum_{k=0}^{[n/2]} z^{n-2k} w^k / ((n-2k)! k!) = e^{w d^2/dz^2} z^n,
//
// which satisfy dH/dw = d^2H/dz^2 = n(n-1) H_{n-2}.

#include "opseries/numerics.hpp"

namespace opseries {

inline constexpr int kHermiteMaxDegree = 400;

struct HermiteArgs {
  int n = 0;
  ComplexValue z{};
  ComplexValue w{};

  void validate() const;
};

/// H_n(z, w) from the defining sum. Throws OverflowError if a term or the
/// result leaves the double range, DomainError if n is outside [0, 400].
ComplexValue hermite2(const HermiteArgs& a);

/// dH_n/dw, from differentiating each w^k of the defining sum.
ComplexValue hermite2_dw(const HermiteArgs& a);

/// d^2H_n/dz^2, from differentiating each z^{n-2k} of the defining sum twice.
ComplexValue hermite2_dzz(const HermiteArgs& a);

}  // namespace opseries
