#ifndef SPECINT_CORE_HPP
#define SPECINT_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>

namespace specint {

// ---------------------------------------------------------------------------
// Result and control types
// ---------------------------------------------------------------------------

/// A computed value with an absolute error estimate and a work counter
/// (series terms summed or quadrature panels evaluated).
struct EvalResult {
  double value = 0.0;
  double est_error = 0.0;
  std::int64_t work = 0;
};

/// Convergence policy for infinite series.
struct SeriesControl {
  double rel_tol = 1e-15;
  int max_terms = 10000;
  int quiet_terms = 3;  // consecutive small terms required before stopping
};

/// Adaptive-quadrature policy.
struct QuadControl {
  double abs_tol = 1e-12;
  double rel_tol = 1e-10;
  int max_depth = 50;
  double tail_log_threshold = -35.0;  // natural-log scale truncation level
};

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

// Exit-code categories used by the CLI: bad arguments/parameters vs a
// computation that failed to converge or overflowed.
enum class ErrorKind {
  domain_error,
  pole_error,
  invalid_params,
  unsupported,
  divergent,
  divergent_integral,
  no_convergence,
  tolerance_not_met,
  overflow,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& msg)
      : std::runtime_error(msg), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

  // argument-class errors -> 2, numerical-failure class -> 3
  int exit_code() const {
    switch (kind_) {
      case ErrorKind::domain_error:
      case ErrorKind::pole_error:
      case ErrorKind::invalid_params:
      case ErrorKind::unsupported:
      case ErrorKind::divergent:
      case ErrorKind::divergent_integral:
        return 2;
      default:
        return 3;
    }
  }

  const char* name() const {
    switch (kind_) {
      case ErrorKind::domain_error: return "DomainError";
      case ErrorKind::pole_error: return "PoleError";
      case ErrorKind::invalid_params: return "InvalidParams";
      case ErrorKind::unsupported: return "Unsupported";
      case ErrorKind::divergent: return "Divergent";
      case ErrorKind::divergent_integral: return "DivergentIntegral";
      case ErrorKind::no_convergence: return "NoConvergence";
      case ErrorKind::tolerance_not_met: return "ToleranceNotMet";
      case ErrorKind::overflow: return "OverflowError";
    }
    return "Error";
  }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind k, const std::string& msg) {
  throw Error(k, msg);
}

// ---------------------------------------------------------------------------
// Parameter records
// ---------------------------------------------------------------------------

struct MLParams {
  double alpha;
  double beta;
};

struct WhittakerParams {
  double kappa;
  double mu;
};

struct WrightParams {
  double alpha;
  double beta;
};

/// A positive rational p/q in lowest terms; the parameter form required by
/// all finite-sum reduction formulas.
struct RationalAlpha {
  int p;
  int q;

  RationalAlpha(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1)
      raise(ErrorKind::invalid_params, "RationalAlpha: p and q must be >= 1");
    if (std::gcd(p, q) != 1)
      raise(ErrorKind::invalid_params, "RationalAlpha: p/q must be in lowest terms");
  }
  double value() const { return double(p) / double(q); }
};

struct LTPoint {
  double s;
  explicit LTPoint(double s_) : s(s_) {
    if (!(s > 1.0)) raise(ErrorKind::domain_error, "LTPoint: require s > 1");
  }
};

// ---------------------------------------------------------------------------
// Small numeric helpers
// ---------------------------------------------------------------------------

namespace detail {

inline constexpr double pi = 3.14159265358979323846264338327950288;
inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;
inline constexpr double sqrt_pi = 1.77245385090551602729816748334114518;

/// Compensated (Kahan) accumulator.
struct Kahan {
  double sum = 0.0;
  double carry = 0.0;
  void add(double t) {
    double y = t - carry;
    double u = sum + y;
    carry = (u - sum) - y;
    sum = u;
  }
};

inline bool near(double a, double b, double tol = 1e-12) {
  return std::fabs(a - b) <= tol * std::max({1.0, std::fabs(a), std::fabs(b)});
}

inline bool is_nonpos_int(double x, double tol = 1e-9) {
  if (x > 0.5) return false;
  return std::fabs(x - std::round(x)) <= tol;
}

inline bool is_int(double x, double tol = 1e-9) {
  return std::fabs(x - std::round(x)) <= tol;
}

/// sin(pi*x) without the catastrophic loss of sin(M_PI*x) near integers.
inline double sin_pi(double x) {
  double n = std::round(x);
  double r = x - n;
  double s = std::sin(pi * r);
  return (std::fmod(std::fabs(n), 2.0) < 0.5) ? s : -s;
}

inline double cos_pi(double x) {
  double n = std::round(x);
  double r = x - n;
  double c = std::cos(pi * r);
  return (std::fmod(std::fabs(n), 2.0) < 0.5) ? c : -c;
}

inline void check_finite(double v, ErrorKind k, const char* what) {
  if (!std::isfinite(v)) raise(k, what);
}

}  // namespace detail

}  // namespace specint

#endif  // SPECINT_CORE_HPP
