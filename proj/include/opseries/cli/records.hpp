#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace opseries::cli {

/// One evaluated point as emitted by `eval` and `table`.
struct OutputRecord {
  std::string function_id;
  double x = 0.0;
  double y = 0.0;  // 0 when unused
  double re = 0.0;
  double im = 0.0;
  double abs_err_est = 0.0;
  int terms = 0;
  bool converged = false;
  std::string method;
};

enum class Format { csv, json };

/// Header `function,x,y,re,im,abs_err_est,terms,converged,method`, one line
/// per record, reals with 17 significant digits.
void write_csv(std::ostream& out, const std::vector<OutputRecord>& records);

/// Array of objects keyed by the OutputRecord field names.
void write_json(std::ostream& out, const std::vector<OutputRecord>& records);

std::vector<OutputRecord> read_csv(std::istream& in);

}  // namespace opseries::cli
