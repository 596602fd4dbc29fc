#ifndef SPECINT_MITTAG_LEFFLER_HPP
#define SPECINT_MITTAG_LEFFLER_HPP

#include "specint/core.hpp"
#include "specint/elementary.hpp"
#include "specint/hypergeometric.hpp"

namespace specint {

namespace detail {

inline void check_ml_params(const MLParams& p) {
  if (!(p.alpha > 0.0) || !(p.beta > 0.0))
    raise(ErrorKind::invalid_params, "MLParams: require alpha > 0 and beta > 0");
}

}  // namespace detail

/// Two-parameter Mittag-Leffler function E_{alpha,beta}(x) = sum x^k/Gamma(alpha k + beta),
/// x >= 0. The one-parameter function is the beta = 1 case.
inline EvalResult ml(const MLParams& params, double x,
                     const SeriesControl& ctrl = {}) {
  detail::check_ml_params(params);
  if (x < 0.0) raise(ErrorKind::domain_error, "ml: require x >= 0");
  detail::Kahan acc;
  double xk = 1.0;
  int quiet = 0;
  long k = 0;
  for (; k < ctrl.max_terms; ++k) {
    double term = xk * rgamma(params.alpha * double(k) + params.beta);
    acc.add(term);
    if (!std::isfinite(acc.sum)) raise(ErrorKind::overflow, "ml: overflow");
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
    xk *= x;
    if (!std::isfinite(xk)) raise(ErrorKind::overflow, "ml: overflow");
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "ml: series did not converge");
  return {acc.sum, 2.0 * ctrl.rel_tol * std::fabs(acc.sum), k + 1};
}

/// Integral Mittag-Leffler function: sum_{k>=1} x^k/(k Gamma(alpha k + beta)),
/// the log-weighted integral of E_{alpha,beta} from 0 to x.
inline EvalResult iml(const MLParams& params, double x,
                      const SeriesControl& ctrl = {}) {
  detail::check_ml_params(params);
  if (x < 0.0) raise(ErrorKind::domain_error, "iml: require x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0};
  detail::Kahan acc;
  double xk = 1.0;
  int quiet = 0;
  long k = 1;
  for (; k <= ctrl.max_terms; ++k) {
    xk *= x;
    if (!std::isfinite(xk)) raise(ErrorKind::overflow, "iml: overflow");
    double term = xk * rgamma(params.alpha * double(k) + params.beta) / double(k);
    acc.add(term);
    if (!std::isfinite(acc.sum)) raise(ErrorKind::overflow, "iml: overflow");
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "iml: series did not converge");
  return {acc.sum, 2.0 * ctrl.rel_tol * std::fabs(acc.sum), k};
}

/// E_{p/q,beta}(x) as the finite sum over residue classes mod q: each class
/// contributes x^k/Gamma(pk/q+beta) * 1F_p(1; b_0..b_{p-1}; x^q/p^p) with
/// b_j = k/q + (beta+j)/p, obtained from the Gauss multiplication formula.
inline EvalResult ml_rational(const RationalAlpha& pq, double beta, double x,
                              const SeriesControl& ctrl = {}) {
  if (!(beta > 0.0)) raise(ErrorKind::invalid_params, "ml_rational: beta > 0");
  if (x < 0.0) raise(ErrorKind::domain_error, "ml_rational: require x >= 0");
  const int p = pq.p, q = pq.q;
  const double z = std::pow(x, q) / std::pow(double(p), p);
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  try {
    double xk = 1.0;
    for (int k = 0; k < q; ++k) {
      std::vector<double> lower(p);
      for (int j = 0; j < p; ++j)
        lower[j] = double(k) / q + (beta + j) / p;
      EvalResult h = pfq({1.0}, lower, z, ctrl);
      acc.add(xk * rgamma(double(p) * k / q + beta) * h.value);
      est += std::fabs(xk) * h.est_error;
      work += h.work;
      xk *= x;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_params)
      return ml({pq.value(), beta}, x, ctrl);  // reduction pole: direct series
    throw;
  }
  return {acc.sum, est + 4e-16 * std::fabs(acc.sum), work};
}

/// Ei_{p/q,beta}(x) finite-sum reduction: classes k = 1..q with
/// x^k/(k Gamma(pk/q+beta)) * 2F_{p+1}(1, k/q; b_0..b_{p-1}, k/q+1; x^q/p^p).
inline EvalResult iml_rational(const RationalAlpha& pq, double beta, double x,
                               const SeriesControl& ctrl = {}) {
  if (!(beta > 0.0)) raise(ErrorKind::invalid_params, "iml_rational: beta > 0");
  if (x < 0.0) raise(ErrorKind::domain_error, "iml_rational: require x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0};
  const int p = pq.p, q = pq.q;
  const double z = std::pow(x, q) / std::pow(double(p), p);
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  try {
    double xk = 1.0;
    for (int k = 1; k <= q; ++k) {
      xk *= x;
      std::vector<double> lower(p + 1);
      for (int j = 0; j < p; ++j)
        lower[j] = double(k) / q + (beta + j) / p;
      lower[p] = double(k) / q + 1.0;
      EvalResult h = pfq({1.0, double(k) / q}, lower, z, ctrl);
      acc.add(xk / double(k) * rgamma(double(p) * k / q + beta) * h.value);
      est += std::fabs(xk) * h.est_error;
      work += h.work;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_params)
      return iml({pq.value(), beta}, x, ctrl);
    throw;
  }
  return {acc.sum, est + 4e-16 * std::fabs(acc.sum), work};
}

// ---------------------------------------------------------------------------
// Registered closed forms for Ei_{alpha,beta}
// ---------------------------------------------------------------------------

/// Closed-form evaluations of Ei_{alpha,beta} for the registered parameter
/// rows; fixture generator for tests and the `check` command.
inline EvalResult iml_reference(const MLParams& params, double x) {
  using detail::near;
  const double a = params.alpha, b = params.beta;
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "iml_reference: require x > 0");
  auto F = [&](std::vector<double> up, std::vector<double> lo, double z) {
    return pfq(std::move(up), std::move(lo), z).value;
  };
  const double g = detail::euler_gamma;
  const double sp = detail::sqrt_pi;
  EvalResult r;
  r.work = 1;
  if (near(a, 0.5)) {
    if (near(b, 1.0)) {
      double Ei = exp_integrals(ExpIntKind::ei, x * x).value;
      r.value = -g / 2.0 - std::log(x) + Ei / 2.0 +
                (2.0 * x / sp) * F({0.5, 1.0}, {1.5, 1.5}, x * x);
      return r;
    }
    // generic beta: two-term 2F2 pair
    r.value = x * x / (2.0 * gamma_fn(b + 1.0)) * F({1.0, 1.0}, {2.0, b + 1.0}, x * x) +
              x / gamma_fn(b + 0.5) * F({0.5, 1.0}, {1.5, b + 0.5}, x * x);
    return r;
  }
  if (near(a, 1.0)) {
    if (near(b, 1.0)) {
      r.value = -g - std::log(x) + hyp_integrals(HypIntKind::Chi, x).value +
                hyp_integrals(HypIntKind::Shi, x).value;
      return r;
    }
    r.value = x / gamma_fn(b + 1.0) * F({1.0, 1.0}, {2.0, 1.0 + b}, x);
    return r;
  }
  if (near(a, 1.5)) {
    double z = x * x / 27.0;
    if (near(b, 1.0)) {
      r.value = 4.0 * x / (3.0 * sp) *
                    F({0.5, 1.0}, {5.0 / 6, 7.0 / 6, 1.5, 1.5}, z) +
                x * x / 12.0 * F({1.0, 1.0}, {4.0 / 3, 5.0 / 3, 2.0, 2.0}, z);
      return r;
    }
    if (near(b, 2.0)) {
      r.value = 8.0 * x / (15.0 * sp) *
                    F({0.5, 1.0}, {7.0 / 6, 1.5, 1.5, 11.0 / 6}, z) +
                x * x / 48.0 * F({1.0, 1.0}, {5.0 / 3, 2.0, 2.0, 7.0 / 3}, z);
      return r;
    }
    raise(ErrorKind::unsupported, "iml_reference: unregistered (alpha, beta)");
  }
  if (near(a, 2.0)) {
    if (near(b, 1.0)) {
      r.value = -2.0 * g - std::log(x) +
                2.0 * hyp_integrals(HypIntKind::Chi, std::sqrt(x)).value;
      return r;
    }
    if (near(b, 2.0)) {
      double sx = std::sqrt(x);
      r.value = 2.0 - 2.0 * g - std::log(x) - 2.0 * std::sinh(sx) / sx +
                2.0 * hyp_integrals(HypIntKind::Chi, sx).value;
      return r;
    }
    r.value = x / gamma_fn(b + 2.0) *
              F({1.0, 1.0}, {2.0, b / 2.0 + 1.0, (b + 3.0) / 2.0}, x / 4.0);
    return r;
  }
  if (near(a, 3.0)) {
    r.value = x / gamma_fn(b + 3.0) *
              F({1.0, 1.0}, {2.0, b / 3.0 + 1.0, (b + 4.0) / 3.0, (b + 5.0) / 3.0},
                x / 27.0);
    return r;
  }
  if (near(a, 4.0)) {
    r.value = x / gamma_fn(b + 4.0) *
              F({1.0, 1.0},
                {2.0, b / 4.0 + 1.0, (b + 5.0) / 4.0, 1.5 + b / 4.0, (b + 7.0) / 4.0},
                x / 256.0);
    return r;
  }
  if (near(a, 5.0)) {
    r.value = x / gamma_fn(b + 5.0) *
              F({1.0, 1.0},
                {2.0, b / 5.0 + 1.0, (b + 6.0) / 5.0, (b + 7.0) / 5.0,
                 (b + 8.0) / 5.0, (b + 9.0) / 5.0},
                x / 3125.0);
    return r;
  }
  if (near(a, 1.0 / 3.0)) {
    // three-term 2F2 combination, classes k = 1..3 of the p/q = 1/3 reduction
    double z = x * x * x;
    if (near(b, 0.5)) {
      r.value = 2.0 * z / (3.0 * sp) * F({1.0, 1.0}, {1.5, 2.0}, z) +
                x / gamma_fn(5.0 / 6.0) * F({1.0, 1.0 / 3.0}, {5.0 / 6.0, 4.0 / 3.0}, z) +
                3.0 * x * x / gamma_fn(1.0 / 6.0) *
                    F({1.0, 2.0 / 3.0}, {7.0 / 6.0, 5.0 / 3.0}, z);
      return r;
    }
    if (near(b, 0.2)) {
      r.value = x / gamma_fn(8.0 / 15.0) * F({1.0, 1.0 / 3.0}, {8.0 / 15.0, 4.0 / 3.0}, z) +
                x * x / (2.0 * gamma_fn(13.0 / 15.0)) *
                    F({1.0, 2.0 / 3.0}, {13.0 / 15.0, 5.0 / 3.0}, z) +
                5.0 * z / (3.0 * gamma_fn(0.2)) * F({1.0, 1.0}, {1.2, 2.0}, z);
      return r;
    }
    raise(ErrorKind::unsupported, "iml_reference: unregistered (alpha, beta)");
  }
  raise(ErrorKind::unsupported, "iml_reference: unregistered (alpha, beta)");
}

}  // namespace specint

#endif  // SPECINT_MITTAG_LEFFLER_HPP
