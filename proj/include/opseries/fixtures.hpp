#pragma once

// Pinned oracle values: a plain-text table, one record per line,
//
//   function-id x y re im err rotation-protocol-tag
//
// whitespace separated, reals with 17 significant digits, '#' starts a
// comment line.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace opseries {

struct FixtureRecord {
  std::string function_id;  // ai | ai4 | pearcey-halfline
  double x = 0.0;
  double y = 0.0;
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;
  std::string protocol;
};

/// Shortest-round-trip-safe decimal with 17 significant digits, "C" locale.
std::string format_real(double v);

std::vector<FixtureRecord> read_fixtures(std::istream& in);
std::vector<FixtureRecord> read_fixtures(const std::filesystem::path& path);

void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records);

}  // namespace opseries
