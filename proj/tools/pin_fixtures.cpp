// Regenerates the pinned oracle table.
//
// Every value is computed at the default rotation pi/(2 alpha) and again at
// 0.9 of it; the point is pinned only if the two contours agree to 1e-9.
// The stored error is the larger of the quadrature estimate and that
// disagreement.
//
//   pin_fixtures [output-path]     (stdout when omitted)

#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <optional>
#include <vector>

#include "opseries/fixtures.hpp"
#include "opseries/oracle.hpp"

namespace {

constexpr double kAgreement = 1e-9;
constexpr double kRotationScale = 0.9;
constexpr const char* kProtocol = "rot1.0+rot0.9";

using Quad = std::function<opseries::QuadResult(std::optional<double>)>;

bool pin(std::vector<opseries::FixtureRecord>& out, const char* id, double x, double y,
         double alpha, const Quad& quad) {
  const double full = 0.5 * std::numbers::pi / alpha;
  const auto a = quad(full);
  const auto b = quad(kRotationScale * full);
  const double gap = std::abs(a.value - b.value);
  if (gap > kAgreement) {
    std::cerr << "pin_fixtures: " << id << " (" << x << ", " << y
              << ") rotations disagree by " << gap << "\n";
    return false;
  }
  out.push_back({id, x, y, a.value.real(), a.value.imag(), std::max(a.error, gap), kProtocol});
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace opseries;
  std::vector<FixtureRecord> records;
  bool ok = true;

  for (double x : {-2.0, -1.0, -0.5, 0.0, 0.5, 1.0, 2.0})
    ok &= pin(records, "ai", x, 0.0, 3.0, [x](auto r) { return airy_quad(x, r); });
  for (double x : {0.0, 0.25, 0.5, 0.75, 1.0})
    ok &= pin(records, "ai4", x, 0.0, 4.0, [x](auto r) { return airy4_quad(x, r); });
  const double grid[] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  for (double x : grid)
    for (double y : grid)
      ok &= pin(records, "pearcey-halfline", x, y, 4.0,
                [x, y](auto r) { return pearcey_quad(x, y, r); });

  if (!ok) return 1;
  if (argc > 1) {
    std::ofstream out(argv[1]);
    if (!out) {
      std::cerr << "pin_fixtures: cannot write " << argv[1] << "\n";
      return 1;
    }
    write_fixtures(out, records);
  } else {
    write_fixtures(std::cout, records);
  }
  return 0;
}
