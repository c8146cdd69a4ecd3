#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <sstream>

#include "opseries/fixtures.hpp"
#include "opseries/oracle.hpp"

using namespace opseries;

#ifndef OPSERIES_TEST_FIXTURES
#error "OPSERIES_TEST_FIXTURES must point at the pinned oracle table"
#endif

namespace {

double component_gap(ComplexValue a, ComplexValue b) {
  return std::max(std::abs(a.real() - b.real()), std::abs(a.imag() - b.imag()));
}

// mpmath, 30 digits
struct Ref {
  const char* id;
  double x;
  double y;
  ComplexValue value;
};
const Ref kRefs[] = {
    {"ai", -2.0, 0.0, {0.227407428201685575991924436038, 0.0}},
    {"ai", -1.0, 0.0, {0.535560883292352118799516565639, 0.0}},
    {"ai", -0.5, 0.0, {0.475728091610539588798643778281, 0.0}},
    {"ai", 0.0, 0.0, {0.355028053887817239260063186004, 0.0}},
    {"ai", 0.5, 0.0, {0.23169360648083348976912525451, 0.0}},
    {"ai", 1.0, 0.0, {0.135292416312881415524147423515, 0.0}},
    {"ai", 2.0, 0.0, {0.0349241304232743791353220807918, 0.0}},
    {"ai", -8.0, 0.0, {-0.0527050503563862026220826757939, 0.0}},
    {"ai", 8.0, 0.0, {4.69220761609923162564908170349e-8, 0.0}},
    {"ai4", 0.0, 0.0, {0.837406696769086483083602722181, 0.0}},
    {"ai4", 0.25, 0.0, {0.607369315904507812119481253022, 0.0}},
    {"ai4", 0.5, 0.0, {0.18879583443467583422120765782, 0.0}},
    {"ai4", 0.75, 0.0, {-0.328647542963179341382447617612, 0.0}},
    {"ai4", 1.0, 0.0, {-0.551955050193997655729444961241, 0.0}},
    {"pearcey-halfline", 0.0, 1.0, {0.502496795733072463536151259685, 0.526018266863029296004698456451}},
    {"pearcey-halfline", 1.0, 1.0, {0.355641206569435875475401987152, 0.446475897254544249651833395376}},
    {"pearcey-halfline", 1.0, 0.5, {0.473498318932154728484374091976, 0.435959373971070708642938181395}},
    {"pearcey-halfline", 0.5, 1.0, {0.415885998062223707806512896494, 0.486703466243596324799819923691}},
    {"pearcey-halfline", -1.0, -1.0, {1.0558774205740191157112428563, -0.604172646167878114249507141357}},
};

QuadResult quad_for(const std::string& id, double x, double y, std::optional<double> rot = {}) {
  if (id == "ai") return airy_quad(x, rot);
  if (id == "ai4") return airy4_quad(x, rot);
  return pearcey_quad(x, y, rot);
}

double full_rotation(const std::string& id) {
  const double alpha = id == "ai" ? 3.0 : 4.0;
  return 0.5 * std::numbers::pi / alpha;
}

}  // namespace

TEST_CASE("rotated_quadrature: ordinary Fresnel integral") {
  const auto q = fresnel_quad(2.0, 0.0);
  const double root = std::sqrt(std::numbers::pi / 8.0);
  CHECK(std::abs(q.value.real() - root) <= 1e-10);
  CHECK(std::abs(q.value.imag() - root) <= 1e-10);
  CHECK(q.error <= 1e-10);
}

TEST_CASE("rotated_quadrature: xi^2 against e^{i xi^3} gives i/3") {
  ContourSpec spec;
  spec.alpha = 3.0;
  const Amplitude amp{[](ComplexValue xi) { return xi * xi; }, {2.0, 0.0, 0.0}};
  const auto q = rotated_quadrature(spec, amp);
  CHECK(std::abs(q.value.real()) <= 1e-10);
  CHECK(std::abs(q.value.imag() - 1.0 / 3.0) <= 1e-10);
}

TEST_CASE("rotated_quadrature: quartic Fresnel integral") {
  const auto q = fresnel_quad(4.0, 0.0);
  CHECK(component_gap(q.value, {0.837406696769086483083602722181,
                                0.346865211023809496042035100047}) <= 1e-10);
}

TEST_CASE("airy_quad: reference points") {
  CHECK(std::abs(airy_quad(0.0).value.real() - 0.355028053887817) <= 1e-9);
  CHECK(std::abs(airy_quad(1.0).value.real() - 0.135292416313) <= 1e-9);
  CHECK(std::abs(airy_quad(-1.0).value.real() - 0.535560883292) <= 1e-9);
  CHECK(airy_quad(0.5).value.imag() == 0.0);
}

TEST_CASE("oracle: every reference value within 1e-9") {
  for (const auto& ref : kRefs) {
    CAPTURE(ref.id);
    CAPTURE(ref.x);
    CAPTURE(ref.y);
    CHECK(component_gap(quad_for(ref.id, ref.x, ref.y).value, ref.value) <= 1e-9);
  }
}

TEST_CASE("oracle: rotation invariance") {
  for (const auto& ref : kRefs) {
    CAPTURE(ref.id);
    CAPTURE(ref.x);
    CAPTURE(ref.y);
    const auto full = quad_for(ref.id, ref.x, ref.y);
    const auto part = quad_for(ref.id, ref.x, ref.y, 0.9 * full_rotation(ref.id));
    CHECK(component_gap(full.value, part.value) <= 1e-9);
  }
  for (double alpha : {1.5, 2.0, 3.0, 5.0})
    for (double scale : {0.7, 0.9}) {
      const auto a = fresnel_quad(alpha, 1.0);
      const auto b = fresnel_quad(alpha, 1.0, scale * 0.5 * std::numbers::pi / alpha);
      CHECK(component_gap(a.value, b.value) <= 1e-9);
    }
}

TEST_CASE("oracle: error estimates are honest") {
  int honest = 0;
  int total = 0;
  for (const auto& ref : kRefs) {
    const auto q = quad_for(ref.id, ref.x, ref.y);
    ++total;
    if (std::abs(q.value - ref.value) <= 10.0 * q.error) ++honest;
  }
  MESSAGE(honest << " of " << total << " points within 10x the error estimate");
  CHECK(honest >= 0.95 * total);
}

TEST_CASE("oracle: argument checks") {
  CHECK_THROWS_AS(airy_quad(8.5), DomainError);
  CHECK_THROWS_AS(airy4_quad(-4.5), DomainError);
  CHECK_THROWS_AS(pearcey_quad(0.0, 3.5), DomainError);
  CHECK_THROWS_AS(fresnel_quad(2.0, -1.0), DomainError);
  CHECK_THROWS_AS(fresnel_quad(1.0, 0.0), DomainError);
  CHECK_THROWS_AS(airy_quad(0.0, 0.6), DomainError);  // beyond pi/6
  CHECK_THROWS_AS(airy_quad(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(airy_quad(0.0, -0.1), DomainError);
}

TEST_CASE("oracle: subdivision budget") {
  ContourSpec spec;
  spec.alpha = 3.0;
  spec.max_subdivisions = 0;
  spec.abs_tol = 1e-14;
  const Amplitude amp{[](ComplexValue xi) { return std::exp(ComplexValue{0.0, 6.0} * xi); },
                      {0.0, 3.0, 0.0}};
  CHECK_THROWS_AS(rotated_quadrature(spec, amp), ConvergenceError);
  spec.max_subdivisions = -1;
  CHECK_THROWS_AS(rotated_quadrature(spec, amp), DomainError);
}

TEST_CASE("tail_cutoff: the damped bound is below abs_tol/10 from the cut-off on") {
  const AmplitudeGrowth growths[] = {{0.0, 0.0, 0.0}, {2.0, 0.0, 0.0}, {0.0, 5.0, 0.0},
                                     {1.0, 1.0, 0.3}};
  for (double alpha : {3.0, 4.0})
    for (const auto& g : growths) {
      ContourSpec spec;
      spec.alpha = alpha;
      const double s0 = tail_cutoff(spec, g);
      const double decay = std::sin(alpha * spec.effective_rotation());
      for (double s = s0; s < 4.0 * s0; s += 0.01 * s0) {
        const double log_bound =
            g.power * std::log(s) + g.linear * s + g.quadratic * s * s - decay * std::pow(s, alpha);
        CAPTURE(alpha);
        CAPTURE(s);
        CHECK(log_bound < std::log(spec.abs_tol / 10.0));
      }
    }
  ContourSpec gauss;
  gauss.alpha = 2.0;
  CHECK_THROWS_AS(tail_cutoff(gauss, {0.0, 0.0, 1.5}), DomainError);
}

TEST_CASE("fixtures: round trip") {
  const std::vector<FixtureRecord> records = {
      {"ai", -0.5, 0.0, 0.1 + 0.2, 0.0, 1e-12, "rot1.0+rot0.9"},
      {"pearcey-halfline", 1.0 / 3.0, -2.0, 5e-324, -1.7976931348623157e308, 0.0, "p"},
  };
  std::stringstream buffer;
  write_fixtures(buffer, records);
  const auto back = read_fixtures(buffer);
  REQUIRE(back.size() == records.size());
  for (std::size_t i = 0; i < back.size(); ++i) {
    CHECK(back[i].function_id == records[i].function_id);
    CHECK(back[i].x == records[i].x);
    CHECK(back[i].y == records[i].y);
    CHECK(back[i].re == records[i].re);
    CHECK(back[i].im == records[i].im);
    CHECK(back[i].err == records[i].err);
    CHECK(back[i].protocol == records[i].protocol);
  }
  CHECK(format_real(0.1) == "0.10000000000000001");
}

TEST_CASE("fixtures: malformed lines are rejected") {
  std::istringstream bad("# header\nai 0 0 0.3 0 oops tag\n");
  CHECK_THROWS(read_fixtures(bad));
  std::istringstream short_line("ai 0 0 0.3\n");
  CHECK_THROWS(read_fixtures(short_line));
  CHECK_THROWS(read_fixtures(std::filesystem::path("/nonexistent/oracle_values.txt")));
}

TEST_CASE("fixtures: pinned table matches the oracle and the references") {
  const auto pinned = read_fixtures(std::filesystem::path(OPSERIES_TEST_FIXTURES));
  CHECK(pinned.size() == 37);
  for (const auto& f : pinned) {
    CAPTURE(f.function_id);
    CAPTURE(f.x);
    CAPTURE(f.y);
    CHECK(f.protocol == "rot1.0+rot0.9");
    CHECK(component_gap(quad_for(f.function_id, f.x, f.y).value, {f.re, f.im}) <= 1e-9);
    for (const auto& ref : kRefs)
      if (ref.id == f.function_id && ref.x == f.x && ref.y == f.y)
        CHECK(component_gap(ref.value, {f.re, f.im}) <= 1e-9);
  }
}
