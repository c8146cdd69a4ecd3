#include "opseries/hermite.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace opseries {

namespace {

// m * 2^e with |m| kept near 1, so powers and factorial ratios of degree 400
// never overflow before the final rescale.
struct Scaled {
  ComplexValue m{1.0, 0.0};
  int e = 0;

  void normalize() {
    const double big = std::max(std::abs(m.real()), std::abs(m.imag()));
    if (big == 0.0 || !std::isfinite(big)) return;
    int shift = 0;
    std::frexp(big, &shift);
    m = {std::ldexp(m.real(), -shift), std::ldexp(m.imag(), -shift)};
    e += shift;
  }

  ComplexValue unscale() const {
    ComplexValue v{std::ldexp(m.real(), e), std::ldexp(m.imag(), e)};
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw OverflowError("hermite2: term exceeds the double range");
    return v;
  }
};

std::vector<Scaled> power_table(ComplexValue base, int count) {
  std::vector<Scaled> out(static_cast<std::size_t>(std::max(count, 0)) + 1);
  for (int j = 1; j <= count; ++j) {
    out[j] = out[j - 1];
    out[j].m *= base;
    out[j].normalize();
  }
  return out;
}

// n! / ((n-2k)! k!) for k = 0..[n/2], as mantissa/exponent pairs. Exact while
// the integers fit in 53 bits.
std::vector<Scaled> hermite_coefficients(int n) {
  std::vector<Scaled> out(static_cast<std::size_t>(n / 2) + 1);
  for (int k = 0; k + 1 <= n / 2; ++k) {
    out[k + 1] = out[k];
    const double top = static_cast<double>(n - 2 * k) * (n - 2 * k - 1);
    out[k + 1].m *= top;
    out[k + 1].m /= static_cast<double>(k + 1);
    out[k + 1].normalize();
  }
  return out;
}

// sum_k weight_k * c_k * z^{n-2k-zdrop} * w^{k-wdrop} over the k where both
// exponents are non-negative; weight_k is an exact small integer.
template <class Weight>
ComplexValue hermite_sum(const HermiteArgs& a, int zdrop, int wdrop, Weight weight) {
  a.validate();
  const auto coeff = hermite_coefficients(a.n);
  const auto zpow = power_table(a.z, a.n);
  const auto wpow = power_table(a.w, a.n / 2);

  CompensatedAccumulator acc;
  for (int k = wdrop; k <= a.n / 2; ++k) {
    const int zexp = a.n - 2 * k - zdrop;
    if (zexp < 0) break;
    const double wk = weight(k);
    if (wk == 0.0) continue;
    Scaled t;
    t.m = coeff[k].m * wk * zpow[zexp].m * wpow[k - wdrop].m;
    t.e = coeff[k].e + zpow[zexp].e + wpow[k - wdrop].e;
    acc.add(t.unscale());
  }
  const ComplexValue v = acc.value();
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
    throw OverflowError("hermite2: sum exceeds the double range");
  return v;
}

}  // namespace

void HermiteArgs::validate() const {
  if (n < 0 || n > kHermiteMaxDegree)
    throw DomainError("hermite2: degree must be in [0, " +
                      std::to_string(kHermiteMaxDegree) + "], got " + std::to_string(n));
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()) || !std::isfinite(w.real()) ||
      !std::isfinite(w.imag()))
    throw DomainError("hermite2: arguments must be finite");
}

ComplexValue hermite2(const HermiteArgs& a) {
  return hermite_sum(a, 0, 0, [](int) { return 1.0; });
}

ComplexValue hermite2_dw(const HermiteArgs& a) {
  return hermite_sum(a, 0, 1, [](int k) { return static_cast<double>(k); });
}

ComplexValue hermite2_dzz(const HermiteArgs& a) {
  return hermite_sum(a, 2, 0, [n = a.n](int k) {
    return static_cast<double>(n - 2 * k) * (n - 2 * k - 1);
  });
}

}  // namespace opseries
