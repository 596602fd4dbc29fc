#ifndef SPECINT_HYPERGEOMETRIC_HPP
#define SPECINT_HYPERGEOMETRIC_HPP

#include <algorithm>
#include <cstdlib>
#include <vector>

#include "specint/core.hpp"

namespace specint {

/// Parameter record for a generalized hypergeometric series pFq.
struct PFQParams {
  std::vector<double> upper;
  std::vector<double> lower;
  double z = 0.0;
};

namespace detail {

// Index of termination if some upper parameter is a non-positive integer:
// the series then has round(-a)+1 terms. Returns -1 when non-terminating.
inline long pfq_terminating_n(const std::vector<double>& upper) {
  long n = -1;
  for (double a : upper) {
    if (is_nonpos_int(a)) {
      long m = static_cast<long>(std::llround(-a));
      if (n < 0 || m < n) n = m;
    }
  }
  return n;
}

}  // namespace detail

/// Generalized hypergeometric series sum_k prod(a_i)_k / prod(b_j)_k * z^k/k!
/// by term recurrence with compensated accumulation. Terminates exactly when
/// an upper parameter is a non-positive integer; otherwise stops once
/// |term| <= rel_tol*|sum| holds for quiet_terms consecutive terms.
inline EvalResult pfq(const PFQParams& params, const SeriesControl& ctrl = {}) {
  const auto& a = params.upper;
  const auto& b = params.lower;
  const double z = params.z;

  const long nterm = detail::pfq_terminating_n(a);

  for (double bj : b) {
    if (detail::is_nonpos_int(bj)) {
      // terminating-series escape: allowed if the series stops strictly
      // before the lower-parameter pole is reached
      long pole = static_cast<long>(std::llround(-bj));
      if (nterm < 0 || nterm > pole)
        raise(ErrorKind::invalid_params,
              "pfq: lower parameter is a non-positive integer");
    }
  }
  if (nterm < 0 && z != 0.0) {
    const std::size_t p = a.size(), q = b.size();
    if (p > q + 1)
      raise(ErrorKind::divergent, "pfq: p > q+1 diverges for z != 0");
    if (p == q + 1 && std::fabs(z) >= 1.0)
      raise(ErrorKind::divergent, "pfq: p = q+1 requires |z| < 1");
  }

  detail::Kahan acc;
  double term = 1.0;
  double max_mag = 1.0;
  int quiet = 0;
  long k = 0;
  acc.add(term);

  const long limit = (nterm >= 0) ? nterm : ctrl.max_terms;
  while (k < limit) {
    double num = 1.0, den = 1.0;
    for (double ai : a) num *= ai + double(k);
    for (double bj : b) den *= bj + double(k);
    term *= (num / den) * z / double(k + 1);
    if (!std::isfinite(term))
      raise(ErrorKind::overflow, "pfq: term overflow");
    acc.add(term);
    ++k;
    max_mag = std::max(max_mag, std::fabs(acc.sum));
    if (nterm < 0) {
      if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
        ++quiet;
      else
        quiet = 0;
      if (quiet >= ctrl.quiet_terms) break;
    }
  }
  if (nterm < 0 && quiet < ctrl.quiet_terms && z != 0.0)
    raise(ErrorKind::no_convergence, "pfq: max_terms exhausted");

  EvalResult r;
  r.value = acc.sum;
  r.est_error = std::fabs(term) +
                std::numeric_limits<double>::epsilon() * max_mag;
  r.work = k + 1;
  return r;
}

inline EvalResult pfq(std::vector<double> upper, std::vector<double> lower,
                      double z, const SeriesControl& ctrl = {}) {
  return pfq(PFQParams{std::move(upper), std::move(lower), z}, ctrl);
}

/// Terminating Gauss sum 2F1(-n, b; c; z) as an exact (n+1)-term compensated
/// sum. The z = 2 case appears as a series coefficient for the integral
/// Whittaker functions.
inline EvalResult gauss_2f1_terminating(long n, double b, double c, double z) {
  if (n < 0)
    raise(ErrorKind::invalid_params, "gauss_2f1_terminating: n must be >= 0");
  detail::Kahan acc;
  double term = 1.0;
  acc.add(term);
  for (long k = 0; k < n; ++k) {
    if (std::fabs(c + double(k)) < 1e-12)
      raise(ErrorKind::invalid_params,
            "gauss_2f1_terminating: lower parameter pole before termination");
    double den = (c + double(k)) * double(k + 1);
    term *= (double(-n + k) * (b + double(k)) / den) * z;
    acc.add(term);
  }
  EvalResult r;
  r.value = acc.sum;
  r.est_error = std::numeric_limits<double>::epsilon() * (std::fabs(acc.sum) + 1.0) * double(n + 1);
  r.work = n + 1;
  return r;
}

}  // namespace specint

#endif  // SPECINT_HYPERGEOMETRIC_HPP
