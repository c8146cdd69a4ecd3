#include "opseries/fixtures.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace opseries {

namespace {

double parse_real(std::string_view token, int line) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
  if (ec != std::errc{} || ptr != token.data() + token.size())
    throw std::runtime_error("fixtures: line " + std::to_string(line) +
                             ": bad number '" + std::string(token) + "'");
  return v;
}

}  // namespace

std::string format_real(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, 17);
  if (ec != std::errc{}) throw std::runtime_error("format_real: conversion failed");
  return std::string(buf, ptr);
}

std::vector<FixtureRecord> read_fixtures(std::istream& in) {
  std::vector<FixtureRecord> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string id, x, y, re, im, err, tag, extra;
    if (!(fields >> id >> x >> y >> re >> im >> err >> tag) || (fields >> extra))
      throw std::runtime_error("fixtures: line " + std::to_string(lineno) +
                               ": expected 7 columns");
    out.push_back(FixtureRecord{id, parse_real(x, lineno), parse_real(y, lineno),
                                parse_real(re, lineno), parse_real(im, lineno),
                                parse_real(err, lineno), tag});
  }
  return out;
}

std::vector<FixtureRecord> read_fixtures(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("fixtures: cannot open " + path.string());
  return read_fixtures(in);
}

void write_fixtures(std::ostream& out, const std::vector<FixtureRecord>& records) {
  out << "# function-id x y re im err rotation-protocol-tag\n";
  for (const auto& r : records) {
    out << r.function_id << ' ' << format_real(r.x) << ' ' << format_real(r.y) << ' '
        << format_real(r.re) << ' ' << format_real(r.im) << ' ' << format_real(r.err)
        << ' ' << r.protocol << '\n';
  }
}

}  // namespace opseries
