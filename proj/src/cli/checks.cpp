#include "opseries/cli/checks.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "opseries/airy.hpp"
#include "opseries/fixtures.hpp"
#include "opseries/hermite.hpp"
#include "opseries/opcalc.hpp"
#include "opseries/oracle.hpp"
#include "opseries/pearcey.hpp"

namespace opseries::cli {

namespace {

const std::vector<double> kAiryGrid = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
const std::vector<double> kAiry4Grid = {0.0, 0.25, 0.5, 0.75, 1.0};
const std::vector<double> kPearceyAxis = {-1.0, -0.5, 0.0, 0.5, 1.0};
const std::vector<double> kAlphaGrid = {1.5, 2.0, 3.0, 4.0, 5.0};
const std::vector<double> kBetaGrid = {0.0, 0.5, 1.0, 2.0};

double component_gap(ComplexValue a, ComplexValue b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

class Recorder {
 public:
  Recorder(std::string suite, const CheckOptions& options, std::vector<CheckResult>& out)
      : suite_(std::move(suite)), options_(options), out_(out) {}

  void record(const std::string& name, double measured, double threshold) {
    const double limit = options_.tol_override.value_or(threshold);
    // NaN measurements fail.
    out_.push_back({suite_, name, measured, limit, measured <= limit});
  }

 private:
  std::string suite_;
  const CheckOptions& options_;
  std::vector<CheckResult>& out_;
};

void suite_closed_form(Recorder& r) {
  const ComplexValue fresnel = fresnel_symbol({2.0, 0.0});
  const double root = std::sqrt(std::numbers::pi / 8.0);
  r.record("fresnel point C(2,0) = sqrt(pi/8)(1+i)", component_gap(fresnel, {root, root}),
           1e-12);

  double worst = 0.0;
  for (double a : kAlphaGrid)
    for (double b : kBetaGrid)
      worst = std::max(worst, component_gap(fresnel_symbol({a, b}), fresnel_quad(a, b).value));
  r.record("closed form vs quadrature, 20-point (alpha,beta) grid", worst, 1e-8);
}

void suite_ode(Recorder& r) {
  double worst = 0.0;
  for (double x : kAiryGrid) {
    const double y = airy_ai(x).value.real();
    const double ypp = airy_ai_deriv(x, 2).value.real();
    worst = std::max(worst, std::abs(ypp - x * y));
  }
  r.record("airy ode |y'' - x y|", worst, 1e-8);
}

void suite_oracle(Recorder& r) {
  double worst = 0.0;
  for (double x : kAiryGrid)
    worst = std::max(worst, std::abs(airy_ai(x).value.real() - airy_quad(x).value.real()));
  r.record("airy series vs quadrature", worst, 1e-9);
  r.record("airy_ai(0) = 0.355028053887817",
           std::abs(airy_ai(0.0).value.real() - 0.355028053887817), 1e-9);

  worst = 0.0;
  for (double x : kAiry4Grid)
    worst = std::max(worst, std::abs(airy4(x).value.real() - airy4_quad(x).value.real()));
  r.record("ai4 corrected series vs quadrature", worst, 1e-8);
}

void suite_dual_expansion(Recorder& r) {
  double dual = 0.0;
  double vs_quad = 0.0;
  for (double x : kPearceyAxis)
    for (double y : kPearceyAxis) {
      const PearceyPoint p{x, y};
      const ComplexValue ds = pearcey_double_sum(p).value;
      const ComplexValue he = pearcey_hermite(p).value;
      const ComplexValue q = pearcey_quad(x, y).value;
      dual = std::max(dual, component_gap(ds, he));
      vs_quad = std::max({vs_quad, component_gap(ds, q), component_gap(he, q)});
    }
  r.record("pearcey double sum vs hermite expansion", dual, 1e-8);
  r.record("pearcey expansions vs quadrature", vs_quad, 1e-7);
}

void suite_pde(Recorder& r) {
  double analytic = 0.0;
  double differenced = 0.0;
  for (double x : kPearceyAxis)
    for (double y : kPearceyAxis) {
      analytic = std::max(analytic, pearcey_pde_residual({x, y}));
      differenced = std::max(differenced, pearcey_pde_residual_fd({x, y}, 1e-2));
    }
  r.record("pearcey pde residual (term-wise)", analytic, 1e-8);
  r.record("pearcey pde residual (finite differences, h = 1e-2)", differenced, 1e-3);
}

void suite_hermite(Recorder& r) {
  const double values[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  double recurrence = 0.0;
  for (double zr : values)
    for (double wr : values) {
      const ComplexValue z{zr, 0.0};
      const ComplexValue w{wr, 0.0};
      for (int n = 1; n < 30; ++n) {
        const ComplexValue next = hermite2({n + 1, z, w});
        const ComplexValue rebuilt = z * hermite2({n, z, w}) +
                                     2.0 * w * static_cast<double>(n) * hermite2({n - 1, z, w});
        const double gap = std::abs(next - rebuilt);
        recurrence = std::max(recurrence, next == ComplexValue{} ? gap : gap / std::abs(next));
      }
    }
  r.record("hermite recurrence H_{n+1} = z H_n + 2 w n H_{n-1}", recurrence, 1e-12);

  // Exact-to-rounding: a few ulps of the largest intermediate.
  double brute = 0.0;
  double heat = 0.0;
  const ComplexValue zs[] = {{0.7, -0.3}, {-1.5, 0.0}, {2.0, 1.0}};
  const ComplexValue ws[] = {{0.0, -1.0}, {0.4, 0.9}, {-2.0, 0.0}};
  for (const auto& z : zs)
    for (const auto& w : ws)
      for (int n = 0; n <= 8; ++n) {
        const ComplexValue h = hermite2({n, z, w});
        const double scale = std::pow(std::abs(z) + 2.0 * std::sqrt(std::abs(w)) + 1.0, n);
        brute = std::max(brute, std::abs(h - heat_semigroup_brute_force(n, z, w)) / scale);
        const ComplexValue dw = hermite2_dw({n, z, w});
        const ComplexValue dzz = hermite2_dzz({n, z, w});
        heat = std::max(heat, std::abs(dw - dzz) / scale);
      }
  const double rounding = 16 * std::numeric_limits<double>::epsilon();
  r.record("e^{w d2/dz2} z^n brute force vs hermite2 (n <= 8)", brute, rounding);
  r.record("heat identity dH/dw = d2H/dz2 (n <= 8)", heat, rounding);
}

void suite_fixtures(Recorder& r, const CheckOptions& options) {
  std::vector<FixtureRecord> pinned;
  try {
    pinned = read_fixtures(options.fixtures);
  } catch (const std::exception&) {
    r.record("fixture file readable: " + options.fixtures.string(),
             std::numeric_limits<double>::infinity(), 0.0);
    return;
  }
  double worst = pinned.empty() ? std::numeric_limits<double>::infinity() : 0.0;
  for (const auto& f : pinned) {
    ComplexValue now;
    if (f.function_id == "ai")
      now = airy_quad(f.x).value;
    else if (f.function_id == "ai4")
      now = airy4_quad(f.x).value;
    else if (f.function_id == "pearcey-halfline")
      now = pearcey_quad(f.x, f.y).value;
    else {
      worst = std::numeric_limits<double>::infinity();
      continue;
    }
    worst = std::max(worst, component_gap(now, {f.re, f.im}));
  }
  r.record("quadrature vs pinned fixtures", worst, 1e-9);
}

using SuiteFn = std::function<void(Recorder&, const CheckOptions&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites = {
      {"closed-form", [](Recorder& r, const CheckOptions&) { suite_closed_form(r); }},
      {"ode", [](Recorder& r, const CheckOptions&) { suite_ode(r); }},
      {"oracle", [](Recorder& r, const CheckOptions&) { suite_oracle(r); }},
      {"dual-expansion", [](Recorder& r, const CheckOptions&) { suite_dual_expansion(r); }},
      {"pde", [](Recorder& r, const CheckOptions&) { suite_pde(r); }},
      {"hermite", [](Recorder& r, const CheckOptions&) { suite_hermite(r); }},
      {"fixtures", suite_fixtures},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

std::vector<CheckResult> run_suite(const std::string& suite, const CheckOptions& options) {
  std::vector<CheckResult> out;
  bool matched = false;
  for (const auto& [name, fn] : registry()) {
    if (suite != "all" && suite != name) continue;
    matched = true;
    Recorder recorder(name, options, out);
    fn(recorder, options);
  }
  if (!matched) throw DomainError("unknown check suite '" + suite + "'");
  return out;
}

ComplexValue heat_semigroup_brute_force(int n, ComplexValue z, ComplexValue w) {
  // poly[i] is the coefficient of z^i in the current derivative d^{2j} z^n.
  std::vector<double> poly(static_cast<std::size_t>(n) + 1, 0.0);
  poly[n] = 1.0;
  ComplexValue total{};
  ComplexValue w_pow_over_fact{1.0, 0.0};
  for (int j = 0; 2 * j <= n; ++j) {
    if (j > 0) {
      std::vector<double> next(poly.size(), 0.0);
      for (std::size_t i = 2; i < poly.size(); ++i)
        next[i - 2] = poly[i] * static_cast<double>(i) * static_cast<double>(i - 1);
      poly = std::move(next);
      w_pow_over_fact *= w / static_cast<double>(j);
    }
    ComplexValue at_z{};
    for (std::size_t i = poly.size(); i-- > 0;) at_z = at_z * z + poly[i];
    total += w_pow_over_fact * at_z;
  }
  return total;
}

}  // namespace opseries::cli
