#include "opseries/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <queue>
#include <string>
#include <vector>

namespace opseries {

namespace {

// 15-point Kronrod abscissae (positive half, centre last) and weights, with the
// embedded 7-point Gauss weights on the odd-indexed abscissae.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double a = 0.0;
  double b = 0.0;
  ComplexValue value{};
  double error = 0.0;

  bool operator<(const Panel& other) const { return error < other.error; }
};

template <class F>
Panel kronrod15(const F& f, double a, double b) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const ComplexValue fc = f(centre);
  ComplexValue gauss = fc * kWg[3];
  ComplexValue kronrod = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const ComplexValue pair = f(centre - dx) + f(centre + dx);
    kronrod += pair * kWgk[j];
    if (j % 2 == 1) gauss += pair * kWg[j / 2];
  }
  Panel p{a, b, kronrod * half, 0.0};
  p.error = std::abs((kronrod - gauss) * half);
  return p;
}

double growth_exponent(double decay, double alpha, const AmplitudeGrowth& g, double s) {
  return -decay * std::pow(s, alpha) + g.power * std::log(s) + g.linear * s +
         g.quadratic * s * s;
}

double growth_slope(double decay, double alpha, const AmplitudeGrowth& g, double s) {
  return -decay * alpha * std::pow(s, alpha - 1.0) + g.power / s + g.linear +
         2.0 * g.quadratic * s;
}

double ray_decay(const ContourSpec& spec) {
  return std::sin(spec.alpha * spec.effective_rotation());
}

void check_box(double v, double limit, const char* what) {
  if (!std::isfinite(v) || std::abs(v) > limit)
    throw DomainError(std::string(what) + ": argument must satisfy |v| <= " +
                      std::to_string(limit));
}

}  // namespace

double ContourSpec::effective_rotation() const {
  return rotation.value_or(0.5 * std::numbers::pi / alpha);
}

void ContourSpec::validate() const {
  if (!std::isfinite(alpha) || !(alpha > 1.0))
    throw DomainError("contour: alpha must be > 1");
  const double theta = effective_rotation();
  const double limit = 0.5 * std::numbers::pi / alpha;
  if (!(theta > 0.0) || theta > limit * (1.0 + 1e-15))
    throw DomainError("contour: rotation must lie in (0, pi/(2 alpha)]");
  if (!(abs_tol > 0.0)) throw DomainError("contour: abs_tol must be > 0");
  if (max_subdivisions < 0) throw DomainError("contour: max_subdivisions must be >= 0");
}

double tail_cutoff(const ContourSpec& spec, const AmplitudeGrowth& growth) {
  spec.validate();
  const double decay = ray_decay(spec);
  if (spec.alpha <= 2.0 && growth.quadratic > 0.0 &&
      !(spec.alpha == 2.0 && decay > growth.quadratic))
    throw DomainError("contour: amplitude growth outpaces the damping factor");
  const double target = std::log(spec.abs_tol / 10.0);
  double s = 1.0;
  for (int iter = 0; iter < 100000; ++iter) {
    if (growth_exponent(decay, spec.alpha, growth, s) < target &&
        growth_slope(decay, spec.alpha, growth, s) < 0.0)
      return s;
    s *= 1.01;
  }
  throw ConvergenceError("contour: no tail cut-off found");
}

QuadResult rotated_quadrature(const ContourSpec& spec, const Amplitude& amplitude) {
  spec.validate();
  const double theta = spec.effective_rotation();
  const ComplexValue ray = std::polar(1.0, theta);
  // e^{i xi^alpha} on the ray is exp(i e^{i alpha theta} s^alpha).
  const ComplexValue phase_dir = ComplexValue{0.0, 1.0} * std::polar(1.0, spec.alpha * theta);
  auto integrand = [&](double s) {
    const ComplexValue xi = ray * s;
    return std::exp(phase_dir * std::pow(s, spec.alpha)) * amplitude.eval(xi) * ray;
  };

  const double upper = tail_cutoff(spec, amplitude.growth);
  const double decay = ray_decay(spec);
  const double tail_log = growth_exponent(decay, spec.alpha, amplitude.growth, upper);
  const double tail_slope = growth_slope(decay, spec.alpha, amplitude.growth, upper);
  const double tail_error = std::exp(tail_log) / std::max(-tail_slope, 1.0);

  std::priority_queue<Panel> queue;
  Panel first = kronrod15(integrand, 0.0, upper);
  double total_error = first.error;
  queue.push(first);
  int subdivisions = 0;
  while (total_error > spec.abs_tol) {
    if (subdivisions >= spec.max_subdivisions)
      throw ConvergenceError("rotated_quadrature: " + std::to_string(subdivisions) +
                             " subdivisions left error estimate " +
                             std::to_string(total_error) + " above tolerance");
    Panel worst = queue.top();
    queue.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    Panel left = kronrod15(integrand, worst.a, mid);
    Panel right = kronrod15(integrand, mid, worst.b);
    total_error += left.error + right.error - worst.error;
    queue.push(left);
    queue.push(right);
    ++subdivisions;
  }

  // Sum panels in ascending position for a result independent of heap layout.
  std::vector<Panel> panels;
  panels.reserve(queue.size());
  while (!queue.empty()) {
    panels.push_back(queue.top());
    queue.pop();
  }
  std::sort(panels.begin(), panels.end(),
            [](const Panel& l, const Panel& r) { return l.a < r.a; });
  CompensatedAccumulator sum;
  double error = 0.0;
  for (const auto& p : panels) {
    sum.add(p.value);
    error += p.error;
  }
  const ComplexValue value = sum.value();
  if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
    throw ConvergenceError("rotated_quadrature: non-finite result");
  return QuadResult{value, error + tail_error, static_cast<int>(panels.size())};
}

QuadResult fresnel_quad(double alpha, double beta, std::optional<double> rotation) {
  if (!(beta > -1.0)) throw DomainError("fresnel_quad: beta must be > -1");
  ContourSpec spec{alpha, rotation};
  Amplitude amp{[beta](ComplexValue xi) {
                  return xi == ComplexValue{} ? ComplexValue{beta == 0.0 ? 1.0 : 0.0, 0.0}
                                              : std::pow(xi, beta);
                },
                AmplitudeGrowth{std::max(beta, 0.0), 0.0, 0.0}};
  return rotated_quadrature(spec, amp);
}

QuadResult airy_quad(double x, std::optional<double> rotation) {
  check_box(x, 8.0, "airy_quad");
  // xi = 3^{1/3} t turns xi^3/3 into t^3.
  const double c = std::cbrt(3.0) * x;
  ContourSpec spec{3.0, rotation};
  const double theta = spec.effective_rotation();
  Amplitude amp{[c](ComplexValue t) { return std::exp(ComplexValue{0.0, c} * t); },
                AmplitudeGrowth{0.0, std::max(0.0, -c * std::sin(theta)), 0.0}};
  const QuadResult q = rotated_quadrature(spec, amp);
  const double scale = std::cbrt(3.0) / std::numbers::pi;
  return QuadResult{{scale * q.value.real(), 0.0}, scale * q.error, q.panels};
}

QuadResult airy4_quad(double x, std::optional<double> rotation) {
  check_box(x, 4.0, "airy4_quad");
  const double c = 2.0 * x;
  ContourSpec spec{4.0, rotation};
  const double theta = spec.effective_rotation();
  Amplitude amp{[c](ComplexValue t) { return std::exp(ComplexValue{0.0, c} * t); },
                AmplitudeGrowth{0.0, std::max(0.0, -c * std::sin(theta)), 0.0}};
  const QuadResult q = rotated_quadrature(spec, amp);
  const ComplexValue shifted = std::polar(1.0, 2.0 * x * x) * q.value;
  return QuadResult{{shifted.real(), 0.0}, q.error, q.panels};
}

QuadResult pearcey_quad(double x, double y, std::optional<double> rotation) {
  check_box(x, 3.0, "pearcey_quad");
  check_box(y, 3.0, "pearcey_quad");
  ContourSpec spec{4.0, rotation};
  const double theta = spec.effective_rotation();
  Amplitude amp{[x, y](ComplexValue u) {
                  return std::exp(ComplexValue{0.0, 1.0} * (x * u * u + y * u));
                },
                AmplitudeGrowth{0.0, std::max(0.0, -y * std::sin(theta)),
                                std::max(0.0, -x * std::sin(2.0 * theta))}};
  return rotated_quadrature(spec, amp);
}

}  // namespace opseries
