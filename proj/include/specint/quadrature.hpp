#ifndef SPECINT_QUADRATURE_HPP
#define SPECINT_QUADRATURE_HPP

#include <array>
#include <functional>

#include "specint/core.hpp"

namespace specint {

namespace detail {

// 15-point Gauss-Kronrod pair (7-point Gauss embedded), QUADPACK abscissae.
inline constexpr std::array<double, 8> gk15_x = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};

inline constexpr std::array<double, 8> gk15_wk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};

inline constexpr std::array<double, 4> gk15_wg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
  double value;
  double error;
};

inline Panel gk15(const std::function<double(double)>& f, double a, double b) {
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);
  double resk = gk15_wk[7] * f(c);
  double resg = gk15_wg[3] * f(c);
  for (int j = 0; j < 7; ++j) {
    double dx = h * gk15_x[j];
    double fv = f(c - dx) + f(c + dx);
    resk += gk15_wk[j] * fv;
    if (j % 2 == 1) resg += gk15_wg[j / 2] * fv;
  }
  resk *= h;
  resg *= h;
  // |K - G| as the panel error estimate; conservative, and bisection keeps
  // the refinement schedule deterministic
  return {resk, std::fabs(resk - resg)};
}

struct AdaptiveState {
  const std::function<double(double)>* f;
  int max_depth;
  bool depth_exceeded = false;
  long panels = 0;
};

inline Panel adaptive_rec(AdaptiveState& st, double a, double b, double tol,
                          int depth) {
  Panel p = gk15(*st.f, a, b);
  ++st.panels;
  if (p.error <= tol || depth >= st.max_depth) {
    if (p.error > tol) st.depth_exceeded = true;
    return p;
  }
  double m = 0.5 * (a + b);
  Panel l = adaptive_rec(st, a, m, 0.5 * tol, depth + 1);
  Panel r = adaptive_rec(st, m, b, 0.5 * tol, depth + 1);
  return {l.value + r.value, l.error + r.error};
}

}  // namespace detail

/// Adaptive Gauss-Kronrod integration of f over [a, b].
inline EvalResult integrate(const std::function<double(double)>& f, double a,
                            double b, const QuadControl& ctrl = {}) {
  if (a == b) return {0.0, 0.0, 0};
  detail::AdaptiveState st{&f, ctrl.max_depth};
  detail::Panel first = detail::gk15(f, a, b);
  double scale = std::fabs(first.value);
  double tol = std::max(ctrl.abs_tol, ctrl.rel_tol * scale);
  detail::Panel p = detail::adaptive_rec(st, a, b, tol, 0);
  double allowed = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(p.value));
  if (p.error > allowed)
    raise(ErrorKind::tolerance_not_met, "integrate: error estimate above tolerance");
  return {p.value, p.error, st.panels * 15 + 15};
}

/// int_0^x (f(t) - f(0))/t dt. The integrand must have a finite limit at 0;
/// the fragment below x*2^-40 is treated as constant at that limit.
inline EvalResult integrate_fi(const std::function<double(double)>& f,
                               double f_at_zero, double x,
                               const QuadControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integrate_fi: require x > 0");
  auto g = [&](double t) { return (f(t) - f_at_zero) / t; };
  const double eps0 = x * std::ldexp(1.0, -40);
  double g0 = g(eps0);
  detail::AdaptiveState st{nullptr, ctrl.max_depth};
  std::function<double(double)> gf = g;
  st.f = &gf;
  detail::Panel first = detail::gk15(gf, eps0, x);
  double tol = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(first.value));
  detail::Panel p = detail::adaptive_rec(st, eps0, x, tol, 0);
  double head = g0 * eps0;
  double value = p.value + head;
  double err = p.error + 0.5 * std::fabs(head);
  double allowed = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(value));
  if (p.error > allowed)
    raise(ErrorKind::tolerance_not_met, "integrate_fi: error estimate above tolerance");
  return {value, err, st.panels * 15 + 16};
}

/// int_x^inf f(t)/t dt with caller-supplied monotone log-scale envelope
/// decay_log_bound(t) >= ln|f(t)/t|. The range is truncated at T with
/// envelope(T) below ctrl.tail_log_threshold and the envelope tail bound is
/// added to est_error.
inline EvalResult integrate_tail(const std::function<double(double)>& f,
                                 double x,
                                 const std::function<double(double)>& decay_log_bound,
                                 const QuadControl& ctrl = {}) {
  if (!(x > 0.0)) raise(ErrorKind::domain_error, "integrate_tail: require x > 0");
  double T = std::max(2.0 * x, x + 1.0);
  int steps = 0;
  while (decay_log_bound(T) >= ctrl.tail_log_threshold) {
    T *= 1.5;
    if (++steps > 200 || T > 1e6)
      raise(ErrorKind::divergent_integral,
            "integrate_tail: envelope never reaches the truncation threshold");
  }
  // local decay rate of the envelope fixes the tail bound
  double h = 0.05 * T;
  double lam = (decay_log_bound(T) - decay_log_bound(T + h)) / h;
  double tail_bound = std::exp(decay_log_bound(T));
  tail_bound *= (lam > 0.0) ? std::min(T, 1.0 / lam) : T;

  std::function<double(double)> g = [&](double t) { return f(t) / t; };
  detail::AdaptiveState st{&g, ctrl.max_depth};
  detail::Panel first = detail::gk15(g, x, T);
  double tol = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(first.value));
  detail::Panel p = detail::adaptive_rec(st, x, T, tol, 0);
  double value = p.value;
  double err = p.error + tail_bound;
  double allowed = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(value)) + tail_bound;
  if (p.error > allowed)
    raise(ErrorKind::tolerance_not_met, "integrate_tail: error estimate above tolerance");
  return {value, err, st.panels * 15 + 15};
}

/// Numerical Laplace transform int_0^inf e^{-st} f(t) dt, truncated where the
/// damped integrand is below the tail threshold. f must be of exponential
/// order < s.
inline EvalResult laplace_quad(const std::function<double(double)>& f, double s,
                               const QuadControl& ctrl = {}) {
  if (!(s > 0.0)) raise(ErrorKind::domain_error, "laplace_quad: require s > 0");
  const double mag = -ctrl.tail_log_threshold;  // 35 by default
  double T = (mag + 40.0) / s;
  std::function<double(double)> g = [&](double t) {
    return std::exp(-s * t) * f(t);
  };
  // extend T until the damped integrand is genuinely small (covers growth of
  // exponential order up to s - mag/T)
  int guard = 0;
  while (std::fabs(g(T)) * T > std::exp(ctrl.tail_log_threshold) && guard < 60) {
    T *= 1.4;
    ++guard;
    if (T > 1e6)
      raise(ErrorKind::divergent_integral, "laplace_quad: integrand does not decay");
  }
  detail::AdaptiveState st{&g, ctrl.max_depth};
  detail::Panel first = detail::gk15(g, 0.0, T);
  double tol = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(first.value));
  detail::Panel p = detail::adaptive_rec(st, 0.0, T, tol, 0);
  double tail_bound = std::fabs(g(T)) * std::min(T, 2.0 / s) +
                      std::exp(ctrl.tail_log_threshold);
  double value = p.value;
  double err = p.error + tail_bound;
  double allowed = std::max(ctrl.abs_tol, ctrl.rel_tol * std::fabs(value)) + tail_bound;
  if (p.error > allowed)
    raise(ErrorKind::tolerance_not_met, "laplace_quad: error estimate above tolerance");
  return {value, err, st.panels * 15 + 15};
}

}  // namespace specint

#endif  // SPECINT_QUADRATURE_HPP
