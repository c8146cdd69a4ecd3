#pragma once

// Generalized Fresnel symbol C(alpha, beta) = int_0^inf e^{i xi^alpha} xi^beta dxi
// in closed form, and the operational transform
//
//   T(x | alpha) = int_0^inf e^{i xi^alpha} f(x xi) dxi = sum_n a_n C(alpha, n) x^n
//
// for f(x) = sum_n a_n x^n. The dilatation operator x d/dx acts diagonally on
// monomials, so C(alpha, x d/dx) only ever needs its eigenvalues C(alpha, n).
//
// Supported f: entire functions of exponential type (a_n = c^n / n! and
// finite combinations). For those |a_n| Gamma((n+1)/alpha) -> 0 for every
// alpha > 1, which is what the series needs to be summable.

#include <cstddef>
#include <functional>

#include "opseries/numerics.hpp"

namespace opseries {

struct FresnelSymbol {
  double alpha = 2.0;  // exponent of the oscillatory phase xi^alpha, > 1
  double beta = 0.0;   // monomial power xi^beta, > -1

  void validate() const;
};

/// (1/alpha) Gamma((1+beta)/alpha) exp{i pi (1+beta) / (2 alpha)}.
ComplexValue fresnel_symbol(const FresnelSymbol& s);

/// Power-series coefficients a_n of f(x) = sum a_n x^n.
///
/// Providers must be stateless (or internally synchronized): a series may be
/// shared between threads and indexed in any order.
class CoefficientSeries {
 public:
  using Provider = std::function<ComplexValue(std::size_t)>;

  explicit CoefficientSeries(Provider provider) : provider_(std::move(provider)) {}

  ComplexValue operator()(std::size_t n) const { return provider_(n); }

  /// Coefficient-wise sum, (f + g)_n = f_n + g_n.
  friend CoefficientSeries operator+(const CoefficientSeries& f,
                                     const CoefficientSeries& g);

 private:
  Provider provider_;
};

/// a_n = c^n / n!, i.e. f(x) = e^{c x}, via a_n = a_{n-1} c / n.
CoefficientSeries exp_coefficients(ComplexValue c);

/// sum_n a_n C(alpha, n) x^n under `policy`. Throws DomainError if alpha <= 1.
EvalResult transform_series(const CoefficientSeries& f, double alpha, ComplexValue x,
                            const TruncationPolicy& policy = {});

}  // namespace opseries
