#include "opseries/cli/records.hpp"

#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "opseries/fixtures.hpp"

namespace opseries::cli {

namespace {

double parse_double(const std::string& s) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw std::runtime_error("csv: bad number '" + s + "'");
  return v;
}

// JSON has no literal for non-finite numbers.
std::string json_real(double v) { return std::isfinite(v) ? format_real(v) : "null"; }

}  // namespace

void write_csv(std::ostream& out, const std::vector<OutputRecord>& records) {
  out << "function,x,y,re,im,abs_err_est,terms,converged,method\n";
  for (const auto& r : records) {
    out << r.function_id << ',' << format_real(r.x) << ',' << format_real(r.y) << ','
        << format_real(r.re) << ',' << format_real(r.im) << ','
        << format_real(r.abs_err_est) << ',' << r.terms << ','
        << (r.converged ? "true" : "false") << ',' << r.method << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<OutputRecord>& records) {
  // Same 17-digit reals as the CSV writer.
  out << "[";
  for (std::size_t i = 0; i < records.size(); ++i) {
    const auto& r = records[i];
    out << (i == 0 ? "\n  " : ",\n  ") << "{\"function_id\": "
        << nlohmann::json(r.function_id).dump() << ", \"x\": " << json_real(r.x)
        << ", \"y\": " << json_real(r.y) << ", \"re\": " << json_real(r.re)
        << ", \"im\": " << json_real(r.im)
        << ", \"abs_err_est\": " << json_real(r.abs_err_est)
        << ", \"terms\": " << r.terms
        << ", \"converged\": " << (r.converged ? "true" : "false")
        << ", \"method\": " << nlohmann::json(r.method).dump() << "}";
  }
  out << (records.empty() ? "]\n" : "\n]\n");
}

std::vector<OutputRecord> read_csv(std::istream& in) {
  std::vector<OutputRecord> out;
  std::string line;
  if (!std::getline(in, line)) return out;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    if (cells.size() != 9) throw std::runtime_error("csv: expected 9 columns");
    out.push_back(OutputRecord{cells[0], parse_double(cells[1]), parse_double(cells[2]),
                               parse_double(cells[3]), parse_double(cells[4]),
                               parse_double(cells[5]), std::stoi(cells[6]),
                               cells[7] == "true", cells[8]});
  }
  return out;
}

}  // namespace opseries::cli
