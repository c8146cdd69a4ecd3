#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "opseries/cli/records.hpp"
#include "opseries/numerics.hpp"

namespace opseries::cli {

/// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNotConverged = 1;
inline constexpr int kExitUsage = 2;

struct EvalRequest {
  std::string function = "ai";  // ai | ai4 | pearcey-halfline | csym
  std::string method = "series";  // series | hermite | double-sum | quadrature
  std::string variant = "corrected";
  double x = 0.0;
  double y = 0.0;
  double alpha = 2.0;
  double beta = 0.0;
  TruncationPolicy policy;
};

/// Evaluates one point. Throws DomainError for unsupported function/method
/// pairs or arguments outside a domain, ConvergenceError when quadrature
/// runs out of subdivisions.
OutputRecord evaluate(const EvalRequest& request);

/// Evaluates every request, `threads` at a time, preserving input order.
std::vector<OutputRecord> evaluate_all(const std::vector<EvalRequest>& requests,
                                       unsigned threads);

/// Entry point behind the `opseries` executable; argv[0] excluded.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace opseries::cli
