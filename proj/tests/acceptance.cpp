// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "opseries/airy.hpp"
#include "opseries/cli/app.hpp"
#include "opseries/cli/checks.hpp"
#include "opseries/hermite.hpp"
#include "opseries/opcalc.hpp"
#include "opseries/oracle.hpp"
#include "opseries/pearcey.hpp"

using namespace opseries;

namespace {

const double kAiryGrid[] = {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0};
const double kAiry4Grid[] = {0.0, 0.25, 0.5, 0.75, 1.0};
const double kPearceyAxis[] = {-1.0, -0.5, 0.0, 0.5, 1.0};

double gap(ComplexValue a, ComplexValue b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

struct Verdict {
  bool pass;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

Verdict ac1() {
  const double root = std::sqrt(std::numbers::pi / 8.0);
  const double e = gap(fresnel_symbol({2.0, 0.0}), {root, root});
  return {e <= 1e-12, fmt("max component error %.3g (limit 1e-12)", e)};
}

Verdict ac2() {
  double worst = 0.0;
  for (double a : {1.5, 2.0, 3.0, 4.0, 5.0})
    for (double b : {0.0, 0.5, 1.0, 2.0})
      worst = std::max(worst, gap(fresnel_symbol({a, b}), fresnel_quad(a, b).value));
  return {worst <= 1e-8, fmt("max component error %.3g over 20 points (limit 1e-8)", worst)};
}

Verdict ac3() {
  double worst = 0.0;
  for (double x : kAiryGrid)
    worst = std::max(worst, std::abs(airy_ai(x).value.real() - airy_quad(x).value.real()));
  const double at0 = std::abs(airy_ai(0.0).value.real() - 0.355028053887817);
  return {worst <= 1e-9 && at0 <= 1e-9,
          fmt("series vs quadrature %.3g (limit 1e-9); |Ai(0) - 0.355028053887817| = %.3g", worst,
              at0)};
}

Verdict ac4() {
  double worst = 0.0;
  for (double x : kAiryGrid)
    worst = std::max(worst,
                     std::abs(airy_ai_deriv(x, 2).value.real() - x * airy_ai(x).value.real()));
  return {worst <= 1e-8, fmt("max |y'' - x y| = %.3g (limit 1e-8)", worst)};
}

Verdict ac5() {
  double worst = 0.0;
  for (double x : kAiry4Grid)
    worst = std::max(worst, std::abs(airy4(x).value.real() - airy4_quad(x).value.real()));
  const double deviation =
      std::abs(airy4(0.5, Airy4Variant::verbatim).value.real() - airy4_quad(0.5).value.real());
  return {worst <= 1e-8 && deviation > 1e-4,
          fmt("corrected vs quadrature %.3g (limit 1e-8); verbatim deviation at 0.5 = %.6g "
              "(must exceed 1e-4)",
              worst, deviation)};
}

Verdict ac6() {
  double dual = 0.0;
  double vs_quad = 0.0;
  for (double x : kPearceyAxis)
    for (double y : kPearceyAxis) {
      const ComplexValue d = pearcey_double_sum({x, y}).value;
      const ComplexValue h = pearcey_hermite({x, y}).value;
      const ComplexValue q = pearcey_quad(x, y).value;
      dual = std::max(dual, gap(d, h));
      vs_quad = std::max({vs_quad, gap(d, q), gap(h, q)});
    }
  return {dual <= 1e-8 && vs_quad <= 1e-7,
          fmt("double sum vs hermite %.3g (limit 1e-8); vs quadrature %.3g (limit 1e-7)", dual,
              vs_quad)};
}

Verdict ac7() {
  double analytic = 0.0;
  double fd = 0.0;
  for (double x : kPearceyAxis)
    for (double y : kPearceyAxis) {
      analytic = std::max(analytic, pearcey_pde_residual({x, y}));
      fd = std::max(fd, pearcey_pde_residual_fd({x, y}, 1e-2));
    }
  return {analytic <= 1e-8 && fd <= 1e-3,
          fmt("term-wise residual %.3g (limit 1e-8); finite differences h=1e-2 %.3g (limit 1e-3)",
              analytic, fd)};
}

Verdict ac8() {
  const double values[] = {-2.0, -1.0, 0.0, 1.0, 2.0};
  double recurrence = 0.0;
  for (double zr : values)
    for (double wr : values) {
      const ComplexValue z{zr, 0.0};
      const ComplexValue w{wr, 0.0};
      for (int n = 1; n < 30; ++n) {
        const ComplexValue next = hermite2({n + 1, z, w});
        const ComplexValue rebuilt =
            z * hermite2({n, z, w}) + 2.0 * w * static_cast<double>(n) * hermite2({n - 1, z, w});
        const double e = std::abs(next - rebuilt);
        recurrence = std::max(recurrence, next == ComplexValue{} ? e : e / std::abs(next));
      }
    }
  double brute = 0.0;
  const ComplexValue zs[] = {{0.7, -0.3}, {-1.5, 0.0}, {2.0, 1.0}, {0.0, 0.0}};
  const ComplexValue ws[] = {{0.0, -1.0}, {0.4, 0.9}, {-2.0, 0.0}, {1.0, 0.0}};
  for (const auto& z : zs)
    for (const auto& w : ws)
      for (int n = 0; n <= 8; ++n) {
        const double scale = std::pow(std::abs(z) + 2.0 * std::sqrt(std::abs(w)) + 1.0, n);
        brute = std::max(
            brute, std::abs(hermite2({n, z, w}) - cli::heat_semigroup_brute_force(n, z, w)) / scale);
      }
  const double rounding = 16 * std::numeric_limits<double>::epsilon();
  return {recurrence <= 1e-12 && brute <= rounding,
          fmt("recurrence %.3g (limit 1e-12); brute force %.3g in units of the term scale "
              "(limit 16 eps = %.3g)",
              recurrence, brute, rounding)};
}

std::string table_run() {
  std::ostringstream out;
  std::ostringstream err;
  const int code =
      cli::run({"table", "--function", "pearcey-halfline", "--x-min", "-1", "--x-max", "1",
                "--x-steps", "11", "--y-min", "-1", "--y-max", "1", "--y-steps", "11",
                "--threads", "8"},
               out, err);
  return std::to_string(code) + "\n" + out.str();
}

Verdict ac9() {
  const std::string a = table_run();
  const std::string b = table_run();
  return {a == b && a.rfind("0\n", 0) == 0,
          fmt("two 8-thread runs of a 121-point table, %.0f bytes each, identical", a.size())};
}

Verdict ac10() {
  std::ostringstream out;
  std::ostringstream err;
  const auto start = std::chrono::steady_clock::now();
  const int code = cli::run({"check", "--suite", "all"}, out, err);
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {code == 0 && secs < 60.0,
          fmt("check --suite all exit %.0f in %.2f s (limit 60 s)", code, secs)};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
      {"AC1 Fresnel point", ac1},
      {"AC2 closed form vs quadrature", ac2},
      {"AC3 Airy values", ac3},
      {"AC4 Airy ODE", ac4},
      {"AC5 Ai4 corrected vs verbatim", ac5},
      {"AC6 Pearcey dual expansion", ac6},
      {"AC7 Pearcey PDE", ac7},
      {"AC8 Hermite suite", ac8},
      {"AC9 table determinism", ac9},
      {"AC10 full check suite runtime", ac10},
  };
  int failures = 0;
  for (const auto& [name, fn] : criteria) {
    Verdict v{false, ""};
    const auto start = std::chrono::steady_clock::now();
    try {
      v = fn();
    } catch (const std::exception& e) {
      v = {false, std::string("threw: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("[%s] %s: %s [%.3f s]\n", v.pass ? "PASS" : "FAIL", name.c_str(),
                v.detail.c_str(), secs);
    failures += v.pass ? 0 : 1;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
              criteria.size());
  return failures == 0 ? 0 : 1;
}
