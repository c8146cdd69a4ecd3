#pragma once

// Scalar kernels shared by the series evaluators: error types, the real Gamma
// function, exact unit phases e^{i pi k/d}, and compensated series summation
// with a truncation policy.

#include <complex>
#include <cstddef>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>

namespace opseries {

using ComplexValue = std::complex<double>;

/// Arguments outside an operation's domain (refused computation).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A result or intermediate that cannot be represented in double.
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Adaptive procedure ran out of budget before reaching its tolerance.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TruncationPolicy {
  double rel_tol = 1e-14;
  int small_streak = 3;
  int max_terms = 500;

  /// Throws DomainError unless rel_tol > 0, small_streak >= 1, max_terms >= 1.
  void validate() const;
};

struct EvalResult {
  ComplexValue value{};
  double abs_err_est = 0.0;
  int terms_used = 0;
  bool converged = false;
};

/// Gamma(x) for finite x > 0. Throws DomainError for x <= 0 or non-finite x,
/// OverflowError once Gamma(x) exceeds the double range (x > ~171.62).
double gamma_real(double x);

/// Gamma(a) * scale, staying finite when Gamma(a) alone would overflow but
/// the product is representable. a must be > 0.
double gamma_scaled(double a, double scale);

/// e^{i pi k / d} with k reduced modulo 2d. Multiples of pi/2 are exact and
/// symmetric angles produce bit-identical magnitudes.
ComplexValue unit_phase(long long k, long long d);

/// Neumaier (Kahan-Babuska) accumulator, applied per component.
class CompensatedAccumulator {
 public:
  void add(ComplexValue term);
  ComplexValue value() const { return {re_.sum + re_.comp, im_.sum + im_.comp}; }

 private:
  struct Lane {
    double sum = 0.0;
    double comp = 0.0;
    void add(double v);
  };
  Lane re_;
  Lane im_;
};

/// Summation state machine behind compensated_sum. Exposed so evaluators that
/// produce terms in a loop can drive it without wrapping the loop in a lambda.
class SeriesSummer {
 public:
  explicit SeriesSummer(const TruncationPolicy& policy);

  /// Feeds the next term. Returns true once the series should stop, either
  /// because the small-term streak fired or the term cap was reached.
  bool add(ComplexValue term);

  /// As add(term), for a term that is itself a sum whose addends had total
  /// magnitude `magnitude`; the rounding floor is charged on that instead.
  bool add(ComplexValue term, double magnitude);

  /// Marks the series as abandoned (a term could not be formed); the result
  /// reports converged = false.
  void abandon() { abandoned_ = true; }

  EvalResult result() const;
  int terms() const { return terms_; }

 private:
  TruncationPolicy policy_;
  CompensatedAccumulator acc_;
  std::deque<ComplexValue> recent_;
  double magnitude_sum_ = 0.0;
  int terms_ = 0;
  int streak_ = 0;
  bool streak_fired_ = false;
  bool abandoned_ = false;
};

/// Sums the stream next(0), next(1), ... under `policy`. A std::nullopt from
/// `next` ends a finite stream, which counts as converged.
///
/// Stops when |term| < rel_tol * |partial sum| (or the term is exactly zero)
/// for small_streak consecutive terms, or after max_terms terms. The error
/// estimate is the magnitude of the last small_streak terms' sum plus a
/// rounding floor of 8 eps * sum |term|, which dominates when the series
/// cancels heavily.
template <class Stream>
EvalResult compensated_sum(Stream&& next, const TruncationPolicy& policy) {
  SeriesSummer summer(policy);
  for (std::size_t n = 0;; ++n) {
    std::optional<ComplexValue> term = next(n);
    if (!term) break;
    if (summer.add(*term)) break;
  }
  return summer.result();
}

}  // namespace opseries
