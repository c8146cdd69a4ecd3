#include "opseries/cli/app.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <limits>
#include <ostream>
#include <thread>
#include <variant>

#include "CLI11.hpp"
#include "opseries/airy.hpp"
#include "opseries/cli/checks.hpp"
#include "opseries/fixtures.hpp"
#include "opseries/opcalc.hpp"
#include "opseries/oracle.hpp"
#include "opseries/pearcey.hpp"

namespace opseries::cli {

namespace {

constexpr double kDefaultTol = 1e-12;
constexpr int kDefaultMaxTerms = 500;

OutputRecord from_series(const EvalRequest& q, const EvalResult& r, double x, double y,
                         const std::string& method) {
  return {q.function, x,           y,           r.value.real(), r.value.imag(),
          r.abs_err_est, r.terms_used, r.converged, method};
}

OutputRecord from_quad(const EvalRequest& q, const QuadResult& r, double x, double y) {
  return {q.function, x, y, r.value.real(), r.value.imag(), r.error, r.panels, true,
          "quadrature"};
}

[[noreturn]] void bad_method(const EvalRequest& q) {
  throw DomainError("method '" + q.method + "' is not available for function '" +
                    q.function + "'");
}

Airy4Variant parse_variant(const std::string& v) {
  if (v == "corrected") return Airy4Variant::corrected;
  if (v == "verbatim") return Airy4Variant::verbatim;
  throw DomainError("unknown variant '" + v + "'");
}

int default_max_terms() {
  if (const char* env = std::getenv("OPSERIES_MAX_TERMS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1 && v <= std::numeric_limits<int>::max())
      return static_cast<int>(v);
  }
  return kDefaultMaxTerms;
}

struct PolicyFlags {
  double tol = kDefaultTol;
  std::optional<int> max_terms;

  TruncationPolicy policy() const {
    TruncationPolicy p;
    p.rel_tol = tol;
    p.max_terms = max_terms.value_or(default_max_terms());
    p.validate();
    return p;
  }
};

struct PointFlags {
  std::string function;
  std::string method = "series";
  std::string variant = "corrected";
  double alpha = 2.0;
  double beta = 0.0;
  std::string format = "csv";
};

void add_point_options(CLI::App& cmd, PointFlags& f, PolicyFlags& p) {
  cmd.add_option("--function", f.function, "ai | ai4 | pearcey-halfline | csym")
      ->required()
      ->check(CLI::IsMember({"ai", "ai4", "pearcey-halfline", "csym"}));
  cmd.add_option("--method", f.method, "series | hermite | double-sum | quadrature")
      ->check(CLI::IsMember({"series", "hermite", "double-sum", "quadrature"}));
  cmd.add_option("--variant", f.variant, "ai4 series variant: corrected | verbatim")
      ->check(CLI::IsMember({"corrected", "verbatim"}));
  cmd.add_option("--alpha", f.alpha, "csym phase exponent (> 1)");
  cmd.add_option("--beta", f.beta, "csym monomial power (> -1)");
  cmd.add_option("--tol", p.tol, "relative truncation tolerance")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--max-terms", p.max_terms, "series term cap (env OPSERIES_MAX_TERMS)")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--format", f.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
}

EvalRequest make_request(const PointFlags& f, const PolicyFlags& p, double x, double y) {
  EvalRequest q;
  q.function = f.function;
  q.method = f.method;
  q.variant = f.variant;
  q.x = x;
  q.y = y;
  q.alpha = f.alpha;
  q.beta = f.beta;
  q.policy = p.policy();
  return q;
}

void emit(std::ostream& out, const std::string& format,
          const std::vector<OutputRecord>& records) {
  if (format == "json")
    write_json(out, records);
  else
    write_csv(out, records);
}

int exit_for(const std::vector<OutputRecord>& records) {
  const bool all = std::all_of(records.begin(), records.end(),
                               [](const OutputRecord& r) { return r.converged; });
  return all ? kExitOk : kExitNotConverged;
}

std::vector<double> linspace(double lo, double hi, int steps) {
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(steps));
  for (int i = 0; i < steps; ++i)
    out.push_back(steps == 1 ? lo : lo + (hi - lo) * i / (steps - 1));
  return out;
}

}  // namespace

OutputRecord evaluate(const EvalRequest& q) {
  if (q.function == "csym") {
    if (q.method == "series") {
      const ComplexValue c = fresnel_symbol({q.alpha, q.beta});
      const double err = 4.0 * std::numeric_limits<double>::epsilon() * std::abs(c);
      return {q.function, q.alpha, q.beta, c.real(), c.imag(), err, 1, true, "series"};
    }
    if (q.method == "quadrature") return from_quad(q, fresnel_quad(q.alpha, q.beta), q.alpha, q.beta);
    bad_method(q);
  }
  if (q.function == "ai") {
    if (q.method == "series") return from_series(q, airy_ai(q.x, q.policy), q.x, 0.0, "series");
    if (q.method == "quadrature") return from_quad(q, airy_quad(q.x), q.x, 0.0);
    bad_method(q);
  }
  if (q.function == "ai4") {
    if (q.method == "series") {
      const auto variant = parse_variant(q.variant);
      return from_series(q, airy4(q.x, variant, q.policy), q.x, 0.0, "series");
    }
    if (q.method == "quadrature") return from_quad(q, airy4_quad(q.x), q.x, 0.0);
    bad_method(q);
  }
  if (q.function == "pearcey-halfline") {
    const PearceyPoint p{q.x, q.y};
    if (q.method == "series" || q.method == "double-sum")
      return from_series(q, pearcey_double_sum(p, q.policy), q.x, q.y, "double-sum");
    if (q.method == "hermite")
      return from_series(q, pearcey_hermite(p, q.policy), q.x, q.y, "hermite");
    if (q.method == "quadrature") return from_quad(q, pearcey_quad(q.x, q.y), q.x, q.y);
    bad_method(q);
  }
  throw DomainError("unknown function '" + q.function + "'");
}

std::vector<OutputRecord> evaluate_all(const std::vector<EvalRequest>& requests,
                                       unsigned threads) {
  using Slot = std::variant<std::monostate, OutputRecord, std::exception_ptr>;
  std::vector<Slot> slots(requests.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < requests.size(); i = next++) {
      try {
        slots[i] = evaluate(requests[i]);
      } catch (...) {
        slots[i] = std::current_exception();
      }
    }
  };
  const unsigned count =
      std::clamp<unsigned>(threads, 1, static_cast<unsigned>(std::max<std::size_t>(requests.size(), 1)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  std::vector<OutputRecord> out;
  out.reserve(requests.size());
  for (auto& slot : slots) {
    if (auto* e = std::get_if<std::exception_ptr>(&slot)) std::rethrow_exception(*e);
    out.push_back(std::get<OutputRecord>(std::move(slot)));
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Operational-series evaluators for Airy-type oscillatory integrals"};
  app.require_subcommand(1);
  std::string fixtures = OPSERIES_DEFAULT_FIXTURES;
  app.add_option("--fixtures", fixtures, "pinned oracle table");

  PointFlags eval_flags;
  PolicyFlags eval_policy;
  double eval_x = 0.0;
  double eval_y = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate one point");
  add_point_options(*eval, eval_flags, eval_policy);
  eval->add_option("--x", eval_x, "first argument");
  eval->add_option("--y", eval_y, "second argument (pearcey-halfline)");
  eval->add_option("--fixtures", fixtures, "pinned oracle table");

  PointFlags table_flags;
  PolicyFlags table_policy;
  double x_min = 0.0, x_max = 0.0, y_min = 0.0, y_max = 0.0, table_y = 0.0;
  int x_steps = 1, y_steps = 1;
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  auto* table = app.add_subcommand("table", "evaluate over a uniform grid");
  add_point_options(*table, table_flags, table_policy);
  table->add_option("--x-min", x_min)->required();
  table->add_option("--x-max", x_max)->required();
  table->add_option("--x-steps", x_steps)->required()->check(CLI::PositiveNumber);
  auto* y_min_opt = table->add_option("--y-min", y_min);
  auto* y_max_opt = table->add_option("--y-max", y_max);
  auto* y_steps_opt = table->add_option("--y-steps", y_steps)->check(CLI::PositiveNumber);
  y_min_opt->needs(y_max_opt, y_steps_opt);
  y_max_opt->needs(y_min_opt, y_steps_opt);
  y_steps_opt->needs(y_min_opt, y_max_opt);
  table->add_option("--y", table_y, "fixed second argument when no y grid is given")
      ->excludes(y_min_opt);
  table->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  table->add_option("--fixtures", fixtures, "pinned oracle table");

  std::string suite;
  std::optional<double> check_tol;
  auto* check = app.add_subcommand("check", "run an invariant suite");
  std::vector<std::string> suites = suite_names();
  suites.push_back("all");
  check->add_option("--suite", suite, "ode | pde | dual-expansion | closed-form | hermite | "
                                      "oracle | fixtures | all")
      ->required();
  check->add_option("--tol", check_tol, "replace every check threshold")
      ->check(CLI::PositiveNumber);
  check->add_option("--fixtures", fixtures, "pinned oracle table");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "opseries: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (eval->parsed()) {
      const auto record = evaluate(make_request(eval_flags, eval_policy, eval_x, eval_y));
      emit(out, eval_flags.format, {record});
      return exit_for({record});
    }
    if (table->parsed()) {
      const bool grid_y = y_steps_opt->count() > 0;
      std::vector<EvalRequest> requests;
      for (double x : linspace(x_min, x_max, x_steps))
        for (double y : grid_y ? linspace(y_min, y_max, y_steps) : std::vector<double>{table_y})
          requests.push_back(make_request(table_flags, table_policy, x, y));
      const auto records = evaluate_all(requests, threads);
      emit(out, table_flags.format, records);
      return exit_for(records);
    }
    if (check->parsed()) {
      if (std::find(suites.begin(), suites.end(), suite) == suites.end()) {
        err << "opseries: unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      const auto results = run_suite(suite, CheckOptions{check_tol, fixtures});
      bool all_pass = true;
      for (const auto& r : results) {
        out << (r.pass ? "PASS" : "FAIL") << "  [" << r.suite << "] " << r.name
            << "  measured=" << format_real(r.measured)
            << "  threshold=" << format_real(r.threshold) << "\n";
        all_pass &= r.pass;
      }
      out << (all_pass ? "ALL PASS" : "FAILURES") << " (" << results.size() << " checks)\n";
      return all_pass ? kExitOk : kExitNotConverged;
    }
  } catch (const DomainError& e) {
    err << "opseries: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ConvergenceError& e) {
    err << "opseries: " << e.what() << "\n";
    return kExitNotConverged;
  } catch (const OverflowError& e) {
    err << "opseries: " << e.what() << "\n";
    return kExitNotConverged;
  }
  return kExitUsage;
}

}  // namespace opseries::cli
