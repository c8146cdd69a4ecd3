#include "opseries/pearcey.hpp"

#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <vector>

#include "opseries/hermite.hpp"

namespace opseries {

namespace {

// Gamma((n+1)/4) / n!, in log space once n! leaves the double range.
double quarter_gamma_over_factorial(int n, double inv_factorial) {
  if (n <= 170) return gamma_scaled((n + 1) / 4.0, inv_factorial);
  return std::exp(boost::math::lgamma((n + 1) / 4.0) - boost::math::lgamma(n + 1.0));
}

// Running table of v^j / j!.
class ScaledPowers {
 public:
  explicit ScaledPowers(double v) : v_(v), table_{1.0} {}

  double operator[](int j) {
    while (static_cast<int>(table_.size()) <= j) {
      const int next = static_cast<int>(table_.size());
      table_.push_back(table_.back() * v_ / next);
    }
    return table_[j];
  }

 private:
  double v_;
  std::vector<double> table_;
};

// (1/4) Gamma((2m+k+1)/4) x^m y^k / (m! k!) e^{i pi (6m+5k+1)/8}
ComplexValue monomial_addend(int m, int k, double x_scaled, double y_scaled) {
  const double mag = gamma_scaled((2.0 * m + k + 1) / 4.0, x_scaled * y_scaled);
  if (mag == 0.0) return {};
  return 0.25 * mag * pearcey_phase(m, k);
}

EvalResult flag_domain(EvalResult r, const PearceyPoint& p) {
  if (!p.in_domain()) r.converged = false;
  return r;
}

// (e^{i pi/8}/4) e^{i 5n pi/8} Gamma((n+1)/4) / n!
ComplexValue hermite_weight(int n, double inv_factorial) {
  return 0.25 * quarter_gamma_over_factorial(n, inv_factorial) * unit_phase(5LL * n + 1, 8);
}

// sum_n weight_n * h(n) with h one of the Hermite kernels at (y, -ix).
template <class Kernel>
EvalResult hermite_series(const PearceyPoint& p, const TruncationPolicy& policy,
                          Kernel kernel) {
  const ComplexValue z{p.y, 0.0};
  const ComplexValue w{0.0, -p.x};
  SeriesSummer summer(policy);
  double inv_factorial = 1.0;
  for (int n = 0;; ++n) {
    if (n > 0) inv_factorial /= n;
    if (n > kHermiteMaxDegree) {
      summer.abandon();
      break;
    }
    ComplexValue term;
    try {
      term = hermite_weight(n, inv_factorial) * kernel(HermiteArgs{n, z, w});
    } catch (const OverflowError&) {
      summer.abandon();
      break;
    }
    if (summer.add(term)) break;
  }
  return summer.result();
}

}  // namespace

bool PearceyPoint::in_domain() const {
  return std::isfinite(x) && std::isfinite(y) && std::abs(x) <= kPearceyMaxAbs &&
         std::abs(y) <= kPearceyMaxAbs;
}

ComplexValue pearcey_phase(int m, int k) { return unit_phase(6LL * m + 5LL * k + 1, 8); }

ComplexValue pearcey_phase_factored(int m, int k) {
  const int n = m + k;
  return unit_phase(1, 8) * unit_phase(3LL * n, 4) * unit_phase(-k, 8);
}

EvalResult pearcey_double_sum(const PearceyPoint& p, const TruncationPolicy& policy) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw DomainError("pearcey_double_sum: non-finite argument");
  ScaledPowers xs(p.x);
  ScaledPowers ys(p.y);
  SeriesSummer summer(policy);
  for (int n = 0;; ++n) {
    CompensatedAccumulator diagonal;
    double magnitude = 0.0;
    for (int k = 0; k <= n; ++k) {
      const ComplexValue t = monomial_addend(n - k, k, xs[n - k], ys[k]);
      diagonal.add(t);
      magnitude += std::abs(t);
    }
    if (summer.add(diagonal.value(), magnitude)) break;
  }
  return flag_domain(summer.result(), p);
}

EvalResult pearcey_boundary(double y, const TruncationPolicy& policy) {
  if (!std::isfinite(y)) throw DomainError("pearcey_boundary: non-finite argument");
  ScaledPowers ys(y);
  SeriesSummer summer(policy);
  for (int n = 0;; ++n) {
    if (summer.add(monomial_addend(0, n, 1.0, ys[n]))) break;
  }
  return flag_domain(summer.result(), PearceyPoint{0.0, y});
}

EvalResult pearcey_hermite(const PearceyPoint& p, const TruncationPolicy& policy) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw DomainError("pearcey_hermite: non-finite argument");
  return flag_domain(hermite_series(p, policy, hermite2), p);
}

double pearcey_pde_residual(const PearceyPoint& p, const TruncationPolicy& policy) {
  if (!std::isfinite(p.x) || !std::isfinite(p.y))
    throw DomainError("pearcey_pde_residual: non-finite argument");
  // d/dx H_n(y, -ix) = -i dH_n/dw, so i dP/dx = sum weight_n dH_n/dw.
  const EvalResult i_dx = hermite_series(p, policy, hermite2_dw);
  const EvalResult d_yy = hermite_series(p, policy, hermite2_dzz);
  return std::abs(i_dx.value - d_yy.value);
}

double pearcey_pde_residual_fd(const PearceyPoint& p, double step,
                               const TruncationPolicy& policy) {
  if (!(step > 0.0)) throw DomainError("pearcey_pde_residual_fd: step must be > 0");
  auto at = [&](double x, double y) {
    return pearcey_double_sum(PearceyPoint{x, y}, policy).value;
  };
  const ComplexValue centre = at(p.x, p.y);
  const ComplexValue dx = (at(p.x + step, p.y) - at(p.x - step, p.y)) / (2.0 * step);
  const ComplexValue dyy =
      (at(p.x, p.y + step) - 2.0 * centre + at(p.x, p.y - step)) / (step * step);
  return std::abs(ComplexValue{0.0, 1.0} * dx - dyy);
}

}  // namespace opseries
