#ifndef SPECINT_WHITTAKER_HPP
#define SPECINT_WHITTAKER_HPP

#include <functional>

#include "specint/core.hpp"
#include "specint/elementary.hpp"
#include "specint/hypergeometric.hpp"
#include "specint/quadrature.hpp"

namespace specint {

namespace detail {

inline constexpr double whittaker_delta = 1e-6;  // log-case perturbation

// n >= 0 such that v == -n, or -1
inline long nonpos_int_index(double v, double tol = 1e-9) {
  if (v > tol) return -1;
  double r = std::round(v);
  if (std::fabs(v - r) > tol) return -1;
  return static_cast<long>(-r);
}

}  // namespace detail

/// M_{kappa,mu}(x) = x^{mu+1/2} e^{-x/2} 1F1(mu-kappa+1/2; 1+2mu; x), x > 0.
inline EvalResult whittaker_m(const WhittakerParams& wp, double x,
                              const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "whittaker_m: require x > 0");
  if (detail::is_nonpos_int(1.0 + 2.0 * wp.mu))
    raise(ErrorKind::invalid_params,
          "whittaker_m: 1+2mu is a non-positive integer");
  EvalResult h = pfq({wp.mu - wp.kappa + 0.5}, {1.0 + 2.0 * wp.mu}, x, ctrl);
  double pref = std::pow(x, wp.mu + 0.5) * std::exp(-x / 2.0);
  detail::check_finite(pref * h.value, ErrorKind::overflow, "whittaker_m: overflow");
  return {pref * h.value, pref * h.est_error + 4e-16 * std::fabs(pref * h.value),
          h.work};
}

namespace detail {

// W as the reflection combination of M at +/-mu; 2mu must not be an integer.
inline EvalResult whittaker_w_combination(double kappa, double mu, double x,
                                          const SeriesControl& ctrl) {
  double mua = std::fabs(mu);
  double c1 = specint::gamma_fn(-2.0 * mua) * specint::rgamma(0.5 - kappa - mua);
  double c2 = specint::gamma_fn(2.0 * mua) * specint::rgamma(0.5 - kappa + mua);
  double t1 = 0.0, t2 = 0.0, err = 0.0;
  long work = 0;
  if (c1 != 0.0) {
    EvalResult m1 = whittaker_m({kappa, mua}, x, ctrl);
    t1 = c1 * m1.value;
    err += std::fabs(c1) * m1.est_error;
    work += m1.work;
  }
  if (c2 != 0.0) {
    EvalResult m2 = whittaker_m({kappa, -mua}, x, ctrl);
    t2 = c2 * m2.value;
    err += std::fabs(c2) * m2.est_error;
    work += m2.work;
  }
  double v = t1 + t2;
  // the M pieces grow like e^{x/2} while W decays like e^{-x/2}
  double cancel = 2e-16 * (std::fabs(t1) + std::fabs(t2));
  return {v, err + cancel, work};
}

// Terminating or asymptotic 2F0 route:
// W ~ e^{-x/2} x^kappa sum_k (a1)_k (a2)_k / k! (-1/x)^k,
// a1 = mu-kappa+1/2, a2 = -mu-kappa+1/2. Exact when either a is a
// non-positive integer; otherwise an asymptotic tail truncated at its
// smallest term (use only for large x).
inline EvalResult whittaker_w_2f0(double kappa, double mu, double x,
                                  long nterm) {
  double a1 = mu - kappa + 0.5;
  double a2 = -mu - kappa + 0.5;
  Kahan acc;
  double term = 1.0;
  acc.add(term);
  double prev = 1.0;
  double omitted = 0.0;
  long k = 1;
  long cap = (nterm >= 0) ? nterm : 60;
  for (; k <= cap; ++k) {
    double f = (a1 + double(k - 1)) * (a2 + double(k - 1)) / double(k) * (-1.0 / x);
    term *= f;
    if (nterm < 0 && std::fabs(term) >= prev) {
      omitted = std::fabs(term);
      break;
    }
    acc.add(term);
    prev = std::fabs(term);
    if (nterm < 0 && std::fabs(term) < 1e-17 * std::fabs(acc.sum)) break;
  }
  double pref = std::exp(-x / 2.0) * std::pow(x, kappa);
  return {pref * acc.sum,
          pref * (omitted + std::fabs(term)) + 4e-16 * std::fabs(pref * acc.sum),
          k};
}

}  // namespace detail

/// W_{kappa,mu}(x), symmetric in mu -> -mu. Routes: exact polynomial form
/// when kappa -1/2 -+ mu is a non-negative integer, Bessel-K form at kappa=0,
/// large-x asymptotic, and the reflection combination with a symmetric
/// mu +- 1e-6 perturbation for the logarithmic (2mu integer) case.
inline EvalResult whittaker_w(const WhittakerParams& wp, double x,
                              const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "whittaker_w: require x > 0");
  const double kappa = wp.kappa;
  const double mua = std::fabs(wp.mu);

  long n1 = detail::nonpos_int_index(mua - kappa + 0.5);
  long n2 = detail::nonpos_int_index(-mua - kappa + 0.5);
  if (n1 >= 0 || n2 >= 0) {
    long n = (n2 >= 0) ? n2 : n1;  // larger |a| terminates later; either works
    if (n1 >= 0 && n2 >= 0) n = std::max(n1, n2);
    return detail::whittaker_w_2f0(kappa, mua, x, n);
  }
  if (x >= 20.0) return detail::whittaker_w_2f0(kappa, mua, x, -1);
  if (kappa == 0.0) {
    EvalResult k = bessel_mod(BesselKind::K, mua, x / 2.0);
    double pref = std::sqrt(x / detail::pi);
    return {pref * k.value, pref * k.est_error, k.work};
  }
  if (detail::is_int(2.0 * mua)) {
    const double d = detail::whittaker_delta;
    // the 1/delta-amplified cancellation needs the Kummer series summed to
    // the last representable digit
    SeriesControl tight = ctrl;
    tight.rel_tol = 2e-17;
    tight.quiet_terms = 2;
    EvalResult a = detail::whittaker_w_combination(kappa, mua + d, x, tight);
    EvalResult b = detail::whittaker_w_combination(kappa, std::fabs(mua - d), x, tight);
    double v = 0.5 * (a.value + b.value);
    if (!std::isfinite(v))
      raise(ErrorKind::invalid_params,
            "whittaker_w: unregularizable gamma poles");
    double est = 0.5 * std::fabs(a.value - b.value) +
                 0.5 * (a.est_error + b.est_error) + 1e-12 * std::fabs(v);
    return {v, est, a.work + b.work};
  }
  EvalResult r = detail::whittaker_w_combination(kappa, mua, x, ctrl);
  if (!std::isfinite(r.value))
    raise(ErrorKind::invalid_params, "whittaker_w: unregularizable gamma poles");
  return r;
}

// ---------------------------------------------------------------------------
// Integral Whittaker functions
// ---------------------------------------------------------------------------

namespace detail {

// Mi by the alternating series
// x^{mu+1/2} sum_n 2F1(-n, mu-kappa+1/2; 1+2mu; 2) (-x/2)^n / (n! (1/2+mu+n)).
inline EvalResult integral_mi_series(double kappa, double mu, double x,
                                     const SeriesControl& ctrl) {
  Kahan acc;
  const double b = mu - kappa + 0.5;
  const double c = 1.0 + 2.0 * mu;
  double pw = 1.0;  // (-x/2)^n / n!
  double mx = 0.0;
  int quiet = 0;
  long n = 0;
  const long cap = std::min<long>(400, ctrl.max_terms);
  double term = 0.0;
  for (; n < cap; ++n) {
    double coef = gauss_2f1_terminating(n, b, c, 2.0).value;
    term = coef * pw / (0.5 + mu + double(n));
    acc.add(term);
    mx = std::max(mx, std::fabs(term));
    if (std::fabs(term) <= ctrl.rel_tol * std::fabs(acc.sum))
      ++quiet;
    else
      quiet = 0;
    if (quiet >= ctrl.quiet_terms) break;
    pw *= -x / 2.0 / double(n + 1);
  }
  if (quiet < ctrl.quiet_terms)
    raise(ErrorKind::no_convergence, "integral_mi: series cap reached");
  double pref = std::pow(x, mu + 0.5);
  return {pref * acc.sum,
          pref * (std::fabs(term) + 2e-16 * mx) + 4e-16 * std::fabs(pref * acc.sum),
          n + 1};
}

}  // namespace detail

/// Mi_{kappa,mu}(x) = int_0^x M_{kappa,mu}(t)/t dt, by the alternating series
/// above; for x > 40 the series digits wash out and the remainder is picked
/// up by quadrature from 40.
inline EvalResult integral_mi(const WhittakerParams& wp, double x,
                              const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integral_mi: require x > 0");
  if (!(wp.mu > -0.5))
    raise(ErrorKind::invalid_params, "integral_mi: require mu > -1/2");
  if (detail::is_nonpos_int(1.0 + 2.0 * wp.mu))
    raise(ErrorKind::invalid_params, "integral_mi: 1+2mu non-positive integer");
  if (x <= 40.0) return detail::integral_mi_series(wp.kappa, wp.mu, x, ctrl);
  EvalResult head = detail::integral_mi_series(wp.kappa, wp.mu, 40.0, ctrl);
  EvalResult tail = integrate(
      [&](double t) { return whittaker_m(wp, t, ctrl).value / t; }, 40.0, x);
  return {head.value + tail.value, head.est_error + tail.est_error,
          head.work + tail.work};
}

/// Closed 1F2 forms of Mi for kappa in {0, +1/2, -1/2} and the incomplete
/// gamma form for kappa = mu + 1/2.
inline EvalResult integral_mi_reference(const WhittakerParams& wp, double x) {
  if (!(x > 0.0))
    raise(ErrorKind::domain_error, "integral_mi_reference: require x > 0");
  const double mu = wp.mu, kappa = wp.kappa;
  using detail::near;
  if (near(kappa, mu + 0.5) && kappa > 0.0) {
    EvalResult g = incomplete_gamma(IncGammaKind::lower, kappa, x / 2.0);
    double pref = std::pow(2.0, kappa);
    return {pref * g.value, pref * g.est_error, g.work};
  }
  if (near(kappa, 0.0)) {
    EvalResult h = pfq({(2.0 * mu + 1.0) / 4.0},
                       {mu + 1.0, (2.0 * mu + 5.0) / 4.0}, x * x / 16.0);
    double pref = std::pow(x, mu + 0.5) / (mu + 0.5);
    return {pref * h.value, pref * h.est_error, h.work};
  }
  if (near(std::fabs(kappa), 0.5)) {
    double sgn = kappa > 0.0 ? 1.0 : -1.0;  // the -+ sign on the x/2 term
    EvalResult h1 = pfq({mu / 2.0 + 0.25}, {mu + 0.5, mu / 2.0 + 0.75},
                        x * x / 16.0);
    EvalResult h2 = pfq({mu / 2.0 + 0.75}, {mu + 1.5, mu / 2.0 + 1.75},
                        x * x / 16.0);
    double pref = std::pow(x, mu + 0.5) / (mu + 0.5);
    double v = pref * (h1.value - sgn * (x / 2.0) / (2.0 * mu + 3.0) * h2.value);
    return {v, pref * (h1.est_error + h2.est_error) + 4e-16 * std::fabs(v),
            h1.work + h2.work};
  }
  raise(ErrorKind::unsupported, "integral_mi_reference: unregistered kappa");
}

/// Wi_{kappa,mu}(x) = int_0^x W_{kappa,mu}(t)/t dt via the gamma-weighted Mi
/// pair; incomplete-gamma fast path for mu = +-(kappa-1/2); quadrature
/// fallback for the integer-2mu cases with |mu| >= 1/2 whose divergent piece
/// carries a vanishing weight.
inline EvalResult integral_wi(const WhittakerParams& wp, double x,
                              const SeriesControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integral_wi: require x > 0");
  const double kappa = wp.kappa;
  const double mua = std::fabs(wp.mu);
  using detail::near;

  if (near(mua, std::fabs(kappa - 0.5))) {
    if (!(kappa > 0.0))
      raise(ErrorKind::invalid_params,
            "integral_wi: integrand is not integrable at 0 for kappa <= 0");
    EvalResult g = incomplete_gamma(IncGammaKind::lower, kappa, x / 2.0);
    double pref = std::pow(2.0, kappa);
    return {pref * g.value, pref * g.est_error, g.work};
  }

  auto combination = [&](double m) -> EvalResult {
    double c1 = specint::gamma_fn(-2.0 * m) * specint::rgamma(0.5 - kappa - m);
    double c2 = specint::gamma_fn(2.0 * m) * specint::rgamma(0.5 - kappa + m);
    EvalResult a = integral_mi({kappa, m}, x, ctrl);
    EvalResult b = integral_mi({kappa, -m}, x, ctrl);
    double v = c1 * a.value + c2 * b.value;
    double err = std::fabs(c1) * a.est_error + std::fabs(c2) * b.est_error +
                 2e-16 * (std::fabs(c1 * a.value) + std::fabs(c2 * b.value));
    return {v, err, a.work + b.work};
  };

  if (detail::is_int(2.0 * mua)) {
    if (mua < 0.25) {
      // mu = 0: symmetric perturbation, the combination is even in mu
      const double d = detail::whittaker_delta;
      EvalResult a = combination(d);
      if (!std::isfinite(a.value))
        raise(ErrorKind::invalid_params, "integral_wi: unregularizable poles");
      a.est_error += 1e-10 * std::fabs(a.value);
      return a;
    }
    if (detail::nonpos_int_index(0.5 - kappa + mua) >= 0) {
      // the t^{1/2-mu} piece of W carries weight 0: W/t is integrable and the
      // integral is done directly
      EvalResult q = integrate(
          [&](double t) { return whittaker_w(wp, t, ctrl).value / t; }, 0.0, x);
      q.est_error += 1e-9 * std::fabs(q.value);
      return q;
    }
    raise(ErrorKind::invalid_params,
          "integral_wi: divergent at 0 for this (kappa, mu)");
  }

  if (mua < 0.5) {
    EvalResult r = combination(mua);
    if (!std::isfinite(r.value))
      raise(ErrorKind::invalid_params, "integral_wi: unregularizable poles");
    return r;
  }
  // |mu| >= 1/2 non-integer 2mu: representable only if the divergent piece
  // has exactly vanishing gamma weight
  if (specint::rgamma(0.5 - kappa + mua) == 0.0) {
    double c1 = specint::gamma_fn(-2.0 * mua) * specint::rgamma(0.5 - kappa - mua);
    EvalResult a = integral_mi({kappa, mua}, x, ctrl);
    return {c1 * a.value, std::fabs(c1) * a.est_error, a.work};
  }
  raise(ErrorKind::invalid_params,
        "integral_wi: divergent at 0 for this (kappa, mu)");
}

/// mi_{kappa,mu}(x) = int_x^inf M_{kappa,mu}(t)/t dt. Converges only when
/// kappa - mu - 1/2 is a non-negative integer (the Kummer series terminates
/// and M decays like t^kappa e^{-t/2}).
inline EvalResult integral_mi_tail(const WhittakerParams& wp, double x,
                                   const QuadControl& qctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integral_mi_tail: require x > 0");
  long n = detail::nonpos_int_index(wp.mu - wp.kappa + 0.5);
  if (n < 0)
    raise(ErrorKind::divergent_integral,
          "integral_mi_tail: M grows like e^{t/2}; kappa-mu-1/2 must be a "
          "non-negative integer");
  if (detail::is_nonpos_int(1.0 + 2.0 * wp.mu))
    raise(ErrorKind::invalid_params, "integral_mi_tail: 1+2mu non-positive integer");
  // |1F1(-n; 1+2mu; t)| <= polynomial with absolute coefficients
  std::vector<double> absc(n + 1);
  absc[0] = 1.0;
  for (long k = 1; k <= n; ++k)
    absc[k] = absc[k - 1] * std::fabs(double(-n + k - 1)) /
              (std::fabs(1.0 + 2.0 * wp.mu + double(k - 1)) * double(k));
  auto envelope = [absc, wp](double t) {
    double bound = 0.0;
    for (std::size_t k = absc.size(); k-- > 0;) bound = bound * t + absc[k];
    return (wp.mu + 0.5) * std::log(t) - t / 2.0 + std::log(2.0 * bound) -
           std::log(t);
  };
  SeriesControl sctrl;
  return integrate_tail(
      [&, wp](double t) { return whittaker_m(wp, t, sctrl).value; }, x, envelope,
      qctrl);
}

/// wi_{kappa,mu}(x) = int_x^inf W_{kappa,mu}(t)/t dt; W always decays like
/// t^kappa e^{-t/2}.
inline EvalResult integral_wi_tail(const WhittakerParams& wp, double x,
                                   const QuadControl& qctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integral_wi_tail: require x > 0");
  SeriesControl sctrl;
  // scale of W e^{t/2} t^{-kappa} probed over a few points
  double c = 0.0;
  for (double t : {x, x + 1.0, 2.0 * x + 1.0, 4.0 * x + 2.0}) {
    double w = std::fabs(whittaker_w(wp, t, sctrl).value);
    c = std::max(c, w * std::exp(t / 2.0) * std::pow(t, -wp.kappa));
  }
  double lc = std::log(4.0 * (c + 1e-300));
  auto envelope = [lc, wp](double t) {
    return lc + (wp.kappa - 1.0) * std::log(t) - t / 2.0;
  };
  return integrate_tail(
      [&, wp](double t) { return whittaker_w(wp, t, sctrl).value; }, x, envelope,
      qctrl);
}

}  // namespace specint

#endif  // SPECINT_WHITTAKER_HPP
