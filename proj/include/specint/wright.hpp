#ifndef SPECINT_WRIGHT_HPP
#define SPECINT_WRIGHT_HPP

#include <algorithm>
#include <vector>

#include "specint/core.hpp"
#include "specint/elementary.hpp"
#include "specint/hypergeometric.hpp"

namespace specint {

namespace detail {

inline void check_wright_params(const WrightParams& p, double x) {
  if (p.alpha <= -1.0) {
    if (!is_int(p.alpha) || p.alpha < -1.0)
      raise(ErrorKind::domain_error, "wright: require alpha > -1");
  }
  if (p.alpha < 0.0 && p.alpha > -1.0 && std::fabs(x) > 10.0)
    raise(ErrorKind::domain_error,
          "wright: second-kind series restricted to |x| <= 10");
}

}  // namespace detail

/// Wright function W_{alpha,beta}(x) = sum x^k/(k! Gamma(alpha k + beta)),
/// alpha > -1 (second kind for -1 < alpha < 0); alpha = -1 by the closed
/// form (1+x)^{beta-1}/Gamma(beta), x > -1.
inline EvalResult wright_w(const WrightParams& params, double x,
                           const SeriesControl& ctrl = {}) {
  const double a = params.alpha, b = params.beta;
  if (a == -1.0) {
    if (!(x > -1.0))
      raise(ErrorKind::domain_error, "wright_w: alpha = -1 needs x > -1");
    double v = std::pow(1.0 + x, b - 1.0) * rgamma(b);
    return {v, 4e-16 * std::fabs(v), 1};
  }
  detail::check_wright_params(params, x);
  detail::Kahan acc;
  double xk = 1.0;  // x^k / k!
  double mx = 0.0;
  int quiet = 0;
  long k = 0;
  for (; k < ctrl.max_terms; ++k) {
    double term = xk * rgamma(a * double(k) + b);
    acc.add(term);
    mx = std::max(mx, std::fabs(term));
    if (!std::isfinite(acc.sum)) raise(ErrorKind::overflow, "wright_w: overflow");
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
    xk *= x / double(k + 1);
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "wright_w: series did not converge");
  return {acc.sum, 2e-16 * mx + 2.0 * ctrl.rel_tol * std::fabs(acc.sum), k + 1};
}

/// W_{p/q,beta}(x) as a finite sum of 0F_{p+q-1} values (series split mod q +
/// Gauss multiplication); falls back to the direct series when a reduction
/// parameter lands on a pole.
inline EvalResult wright_rational(const RationalAlpha& pq, double beta, double x,
                                  const SeriesControl& ctrl = {}) {
  const int p = pq.p, q = pq.q;
  const double z =
      std::pow(x, q) / (std::pow(double(p), p) * std::pow(double(q), q));
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  try {
    double xk = 1.0;  // x^k / k!
    for (int k = 0; k < q; ++k) {
      std::vector<double> lower;
      lower.reserve(p + q - 1);
      for (int j = 0; j < p; ++j)
        lower.push_back(double(k) / q + (beta + j) / p);
      for (int j = 0; j < q; ++j) {
        double c = double(k + 1 + j) / q;
        if (k + 1 + j != q) lower.push_back(c);  // the value 1 is excluded
      }
      EvalResult h = pfq({}, lower, z, ctrl);
      acc.add(xk * rgamma(double(p) * k / q + beta) * h.value);
      est += std::fabs(xk) * h.est_error;
      work += h.work;
      xk *= x / double(k + 1);
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_params)
      return wright_w({pq.value(), beta}, x, ctrl);
    throw;
  }
  return {acc.sum, est + 4e-16 * std::fabs(acc.sum), work};
}

// ---------------------------------------------------------------------------
// Mainardi functions
// ---------------------------------------------------------------------------

enum class MainardiKind { F, M };

/// Mainardi F_alpha / M_alpha on x >= 0, 0 < alpha < 1, by the reflected
/// Gamma*sin series (no reciprocal-gamma cancellation near poles):
///   F_alpha(x) = -(1/pi) sum_{k>=1} (-x)^k Gamma(alpha k+1) sin(pi alpha k)/k!
///   M_alpha(x) =  (1/pi) sum_{k>=0} (-x)^k Gamma(alpha(k+1)) sin(pi alpha(k+1))/k!
inline EvalResult mainardi(MainardiKind kind, double alpha, double x,
                           const SeriesControl& ctrl = {}) {
  if (!(alpha > 0.0 && alpha < 1.0))
    raise(ErrorKind::domain_error, "mainardi: require 0 < alpha < 1");
  if (x < 0.0) raise(ErrorKind::domain_error, "mainardi: require x >= 0");
  if (x == 0.0) {
    if (kind == MainardiKind::F) return {0.0, 0.0, 1};
    return {rgamma(1.0 - alpha), 4e-16 * rgamma(1.0 - alpha), 1};
  }
  const double lx = std::log(x);
  detail::Kahan acc;
  double mx = 0.0;
  int quiet = 0;
  long k = (kind == MainardiKind::F) ? 1 : 0;
  long count = 0;
  for (; count < ctrl.max_terms; ++k, ++count) {
    double garg = (kind == MainardiKind::F) ? alpha * double(k) + 1.0
                                            : alpha * double(k + 1);
    double sarg = (kind == MainardiKind::F) ? alpha * double(k)
                                            : alpha * double(k + 1);
    double lmag = ln_gamma(garg) + double(k) * lx - ln_gamma(double(k) + 1.0);
    double s = detail::sin_pi(sarg);
    double sign = (k % 2 == 0) ? 1.0 : -1.0;  // (-x)^k
    double term = sign * s * std::exp(lmag);
    acc.add(term);
    mx = std::max(mx, std::fabs(term));
    if (!std::isfinite(acc.sum)) raise(ErrorKind::overflow, "mainardi: overflow");
    if (std::fabs(term) <= ctrl.rel_tol * (std::fabs(acc.sum) + 1e-300))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "mainardi: series did not converge");
  double scale = (kind == MainardiKind::F) ? -1.0 / detail::pi : 1.0 / detail::pi;
  return {scale * acc.sum,
          (2e-16 * mx + 2.0 * ctrl.rel_tol * std::fabs(acc.sum)) / detail::pi,
          count + 1};
}

/// Rational reduction of F_{p/q} (finite sin-weighted sum of pF_{q-1}), with
/// M_{p/q}(x) = (q/(p x)) F_{p/q}(x).
inline EvalResult mainardi_rational(MainardiKind kind, const RationalAlpha& pq,
                                    double x, const SeriesControl& ctrl = {}) {
  const int p = pq.p, q = pq.q;
  if (!(p < q))
    raise(ErrorKind::domain_error, "mainardi_rational: require 0 < p/q < 1");
  if (x < 0.0) raise(ErrorKind::domain_error, "mainardi_rational: require x >= 0");
  if (x == 0.0) {
    if (kind == MainardiKind::F) return {0.0, 0.0, 1};
    return {rgamma(1.0 - pq.value()), 4e-16 * rgamma(1.0 - pq.value()), 1};
  }
  const double z = ((p + q) % 2 == 0 ? 1.0 : -1.0) * std::pow(x, q) *
                   std::pow(double(p), p) / std::pow(double(q), q);
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  double xk = 1.0;  // x^k/k!
  for (int k = 1; k <= q; ++k) {
    xk *= -x / double(k);
    double s = detail::sin_pi(double(p) * k / q);
    if (s == 0.0) continue;
    std::vector<double> upper, lower;
    for (int j = 0; j < p; ++j) upper.push_back(double(k) / q + double(j + 1) / p);
    for (int j = 0; j < q; ++j) {
      if (k + 1 + j != q) lower.push_back(double(k + 1 + j) / q);
    }
    EvalResult h = pfq(std::move(upper), std::move(lower), z, ctrl);
    double term = xk * gamma_fn(double(p) * k / q + 1.0) * s * h.value;
    acc.add(term);
    est += std::fabs(xk) * h.est_error;
    work += h.work;
  }
  double f = -acc.sum / detail::pi;
  double fe = (est + 4e-16 * std::fabs(acc.sum)) / detail::pi;
  if (kind == MainardiKind::F) return {f, fe, work};
  double m = double(q) / (double(p) * x) * f;
  return {m, double(q) / (double(p) * x) * fe, work};
}

// ---------------------------------------------------------------------------
// Integral Wright and integral Mainardi functions
// ---------------------------------------------------------------------------

/// Wi_{alpha,beta}(x) = sum_{k>=1} x^k/(k k! Gamma(alpha k+beta)); the
/// log-weighted integral of W_{alpha,beta} - 1/Gamma(beta) from 0.
inline EvalResult integral_wright(const WrightParams& params, double x,
                                  const SeriesControl& ctrl = {}) {
  detail::check_wright_params(params, x);
  if (x < 0.0) raise(ErrorKind::domain_error, "integral_wright: require x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0};
  detail::Kahan acc;
  double xk = 1.0;  // x^k / k!
  double mx = 0.0;
  int quiet = 0;
  long k = 1;
  for (; k <= ctrl.max_terms; ++k) {
    xk *= x / double(k);
    double term = xk * rgamma(params.alpha * double(k) + params.beta) / double(k);
    acc.add(term);
    mx = std::max(mx, std::fabs(term));
    if (!std::isfinite(acc.sum))
      raise(ErrorKind::overflow, "integral_wright: overflow");
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "integral_wright: series did not converge");
  return {acc.sum, 2e-16 * mx + 2.0 * ctrl.rel_tol * std::fabs(acc.sum), k};
}

/// Finite-sum reduction of Wi_{p/q,beta}: classes k = 1..q contribute
/// x^k/(k k! Gamma(pk/q+beta)) * 2F_{p+q+1}(1, k/q; b-list, c-list, k/q+1; z)
/// with z = x^q/(p^p q^q); the parameter 1 shared by the upper and c lists
/// cancels termwise.
inline EvalResult integral_wright_rational(const RationalAlpha& pq, double beta,
                                           double x,
                                           const SeriesControl& ctrl = {}) {
  if (x < 0.0)
    raise(ErrorKind::domain_error, "integral_wright_rational: require x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0};
  const int p = pq.p, q = pq.q;
  const double z =
      std::pow(x, q) / (std::pow(double(p), p) * std::pow(double(q), q));
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  try {
    double xk = 1.0;  // x^k/k!
    for (int k = 1; k <= q; ++k) {
      xk *= x / double(k);
      std::vector<double> lower;
      lower.reserve(p + q + 1);
      for (int j = 0; j < p; ++j)
        lower.push_back(double(k) / q + (beta + j) / p);
      for (int j = 0; j < q; ++j) lower.push_back(double(k + 1 + j) / q);
      lower.push_back(double(k) / q + 1.0);
      EvalResult h = pfq({1.0, double(k) / q}, lower, z, ctrl);
      acc.add(xk / double(k) * rgamma(double(p) * k / q + beta) * h.value);
      est += std::fabs(xk) * h.est_error;
      work += h.work;
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::invalid_params)
      return integral_wright({pq.value(), beta}, x, ctrl);
    throw;
  }
  return {acc.sum, est + 4e-16 * std::fabs(acc.sum), work};
}

/// Integral Mainardi functions Fi_{p/q} and Mi_{p/q} by the finite
/// sin-weighted sums with hypergeometric kernels
///   S_k = {p+2}F_{q+1}(1, k/q, a-list; k/q+1, b-list; (-1)^{p+q} x^q p^p/q^q);
/// the Fi variant uses a_j = k/q+(j+1)/p, the Mi variant a_j = (k+1)/q+j/p
/// (paired with its Gamma(p(k+1)/q) sin(pi p(k+1)/q) weight).
inline EvalResult integral_mainardi(MainardiKind kind, const RationalAlpha& pq,
                                    double x, const SeriesControl& ctrl = {}) {
  const int p = pq.p, q = pq.q;
  if (!(p < q))
    raise(ErrorKind::domain_error, "integral_mainardi: require 0 < p/q < 1");
  if (x < 0.0) raise(ErrorKind::domain_error, "integral_mainardi: require x >= 0");
  if (x == 0.0) return {0.0, 0.0, 0};
  const double z = ((p + q) % 2 == 0 ? 1.0 : -1.0) * std::pow(x, q) *
                   std::pow(double(p), p) / std::pow(double(q), q);
  detail::Kahan acc;
  double est = 0.0;
  long work = 0;
  double xk = 1.0;  // (-x)^k/k!
  for (int k = 1; k <= q; ++k) {
    xk *= -x / double(k);
    double sarg = (kind == MainardiKind::F) ? double(p) * k / q
                                            : double(p) * (k + 1) / q;
    double s = detail::sin_pi(sarg);
    if (s == 0.0) continue;
    double g = gamma_fn((kind == MainardiKind::F) ? double(p) * k / q + 1.0
                                               : double(p) * (k + 1) / q);
    std::vector<double> upper, lower;
    upper.push_back(1.0);
    upper.push_back(double(k) / q);
    if (kind == MainardiKind::F) {
      for (int j = 0; j < p; ++j)
        upper.push_back(double(k) / q + double(j + 1) / p);
    } else {
      for (int j = 0; j < p; ++j)
        upper.push_back(double(k + 1) / q + double(j) / p);
    }
    lower.push_back(double(k) / q + 1.0);
    for (int j = 0; j < q; ++j) lower.push_back(double(k + 1 + j) / q);
    EvalResult h = pfq(std::move(upper), std::move(lower), z, ctrl);
    acc.add(xk / double(k) * g * s * h.value);
    est += std::fabs(xk / double(k)) * g * h.est_error;
    work += h.work;
  }
  double sign = (kind == MainardiKind::F) ? -1.0 : 1.0;
  return {sign * acc.sum / detail::pi,
          (est + 4e-16 * std::fabs(acc.sum)) / detail::pi, work};
}

}  // namespace specint

#endif  // SPECINT_WRIGHT_HPP
