#include "test_common.hpp"

#include <cmath>
#include <vector>

#include "specint/elementary.hpp"
#include "specint/quadrature.hpp"
#include "specint/whittaker.hpp"

using namespace specint;
using testutil::check_rel;

namespace {

// independent oracle: int_0^x M/t dt by adaptive quadrature, with a power
// substitution t = u^m when the integrand is singular (but integrable) at 0
double quad_mi(double kappa, double mu, double x, int m = 1) {
  if (m == 1) {
    return integrate(
               [&](double t) { return whittaker_m({kappa, mu}, t).value / t; },
               0.0, x)
        .value;
  }
  return integrate(
             [&](double u) {
               double t = std::pow(u, m);
               return double(m) * whittaker_m({kappa, mu}, t).value / u;
             },
             0.0, std::pow(x, 1.0 / m))
      .value;
}

double quad_wi(double kappa, double mu, double x, int m) {
  return integrate(
             [&](double u) {
               double t = std::pow(u, m);
               return double(m) * whittaker_w({kappa, mu}, t).value / u;
             },
             0.0, std::pow(x, 1.0 / m))
      .value;
}

// tail integrals by the inversion u = 1/t (an independent route from the
// envelope-truncated integrator used in the implementation)
double quad_tail_inverted(const std::function<double(double)>& f, double x) {
  return integrate([&](double u) { return f(1.0 / u) / u; }, 0.0, 1.0 / x)
      .value;
}

}  // namespace

TEST_CASE("Whittaker M") {
  for (double x : {0.5, 2.0, 7.0}) {
    check_rel(whittaker_m({0.0, 0.5}, x).value, 2.0 * std::sinh(x / 2.0),
              1e-13, "M_{0,1/2} = 2 sinh(x/2)");
    check_rel(whittaker_m({0.5, 0.0}, x).value,
              std::sqrt(x) * std::exp(-x / 2.0), 1e-13,
              "M_{1/2,0} = sqrt(x) e^{-x/2}");
  }
  for (double x : {1e-6, 1e-4}) {
    check_rel(whittaker_m({0.7, 0.3}, x).value / std::pow(x, 0.8), 1.0, 1e-3,
              "leading power at 0+");
  }
  check_rel(whittaker_m({0.3, 0.77}, 2.3).value, 2.6407343926502113835, 1e-13,
            "frozen");
  check_rel(whittaker_m({1.3, 0.26}, 0.7).value, 0.39428246115301261556, 1e-13,
            "frozen");
  check_rel(whittaker_m({-0.5, 1.12}, 1.5).value, 2.5715838621058959703, 1e-13,
            "frozen");
  CHECK_THROWS_AS(whittaker_m({0.0, -0.5}, 1.0), Error);
  CHECK_THROWS_AS(whittaker_m({0.0, 0.5}, 0.0), Error);
}

TEST_CASE("Whittaker W") {
  for (double x : {0.5, 2.0, 9.0}) {
    check_rel(whittaker_w({0.0, 0.5}, x).value, std::exp(-x / 2.0), 1e-12,
              "W_{0,1/2} = e^{-x/2}");
    check_rel(whittaker_w({2.0, 0.5}, x).value,
              x * (x - 2.0) * std::exp(-x / 2.0), 1e-12,
              "W_{2,1/2} polynomial row");
  }
  // mu -> -mu symmetry across code paths
  for (auto [k, m, x] : std::vector<std::array<double, 3>>{
           {0.3, 0.77, 2.3}, {1.3, 0.26, 0.7}, {-0.4, 1.12, 3.0}}) {
    check_rel(whittaker_w({k, m}, x).value, whittaker_w({k, -m}, x).value,
              1e-9, "mu symmetry");
  }
  check_rel(whittaker_w({0.3, 0.77}, 2.3).value, 0.49217860962613395233, 1e-12,
            "frozen");
  check_rel(whittaker_w({1.3, 0.26}, 0.7).value, 0.075789417112645136014,
            1e-11, "frozen");
  check_rel(whittaker_w({-0.5, 1.12}, 1.5).value, 0.42546146158289044506,
            1e-12, "frozen");
  // logarithmic (integer 2mu) cases via perturbation
  check_rel(whittaker_w({-0.5, 0.0}, 2.0).value,
            std::sqrt(2.0) * std::exp(1.0) *
                exp_integrals(ExpIntKind::e1, 2.0).value,
            1e-9, "W_{-1/2,0} = sqrt(x) e^{x/2} Gamma(0,x)");
  check_rel(whittaker_w({1.3, 1.0}, 2.4).value, 1.1078807758526022073, 1e-8,
            "frozen log case");
  // Bessel route and large-argument asymptotics
  for (double x : {0.8, 3.0}) {
    check_rel(whittaker_w({0.0, 0.3}, x).value,
              std::sqrt(x / M_PI) *
                  bessel_mod(BesselKind::K, 0.3, x / 2.0).value,
              1e-12, "W_{0,mu} = sqrt(x/pi) K_mu(x/2)");
  }
  check_rel(whittaker_w({0.75, 0.25}, 30.0).value, 3.9212426033065943618e-6,
            1e-9, "frozen large x");
  check_rel(whittaker_w({1.3, 0.26}, 25.0).value, 2.3909817398280956923e-4,
            1e-9, "frozen large x");
}

TEST_CASE("Whittaker recurrences") {
  const std::vector<double> kappas = {0.3, 0.8, 1.3, 1.7, -0.4};
  const std::vector<double> mus = {0.26, 0.77, 1.12, 1.55};
  const std::vector<double> ts = {0.7, 2.3};
  int count = 0;
  for (double k : kappas) {
    for (double m : mus) {
      for (double t : ts) {
        double lhs = 2.0 * m *
                     (whittaker_m({k - 0.5, m - 0.5}, t).value -
                      whittaker_m({k + 0.5, m - 0.5}, t).value);
        double rhs = std::sqrt(t) * whittaker_m({k, m}, t).value;
        check_rel(lhs, rhs, 1e-10, "M recurrence");
        double lhsw = (k + m) * whittaker_w({k - 0.5, m}, t).value +
                      whittaker_w({k + 0.5, m}, t).value;
        double rhsw = std::sqrt(t) * whittaker_w({k, m + 0.5}, t).value;
        check_rel(lhsw, rhsw, 1e-10, "W recurrence");
        ++count;
      }
    }
  }
  CHECK(count >= 20);
}

TEST_CASE("integral Whittaker Mi") {
  for (double x : {0.5, 2.0, 6.0}) {
    check_rel(integral_mi({0.0, 0.5}, x).value,
              2.0 * hyp_integrals(HypIntKind::Shi, x / 2.0).value, 1e-12,
              "Mi_{0,1/2} = 2 Shi(x/2)");
  }
  // incomplete-gamma reduction along kappa = mu + 1/2
  for (double k : {0.5, 1.0, 1.5, 2.0}) {
    for (double x : {0.5, 2.0, 8.0}) {
      double want = std::pow(2.0, k) *
                    incomplete_gamma(IncGammaKind::lower, k, x / 2.0).value;
      check_rel(integral_mi({k, k - 0.5}, x).value, want, 1e-11, "Mi chain");
      check_rel(integral_wi({k, k - 0.5}, x).value, want, 1e-11, "Wi chain");
      check_rel(whittaker_m({k, k - 0.5}, x).value,
                std::pow(x, k) * std::exp(-x / 2.0), 1e-11, "M chain");
      check_rel(whittaker_w({k, k - 0.5}, x).value,
                std::pow(x, k) * std::exp(-x / 2.0), 1e-11, "W chain");
    }
  }
  check_rel(integral_mi({1.5, 1.0}, 2.0).value, quad_mi(1.5, 1.0, 2.0), 1e-8,
            "(3/2,1) vs quadrature");
  check_rel(integral_mi({0.3, 0.77}, 12.0).value, 60.055570939063452186, 1e-11,
            "frozen");
  check_rel(integral_mi({-0.5, 1.0}, 20.0).value, 19696.056670172251036, 1e-10,
            "frozen");
  // large-x fallback joins the series region smoothly
  check_rel(integral_mi({1.0, 0.5}, 45.0).value,
            2.0 * (1.0 - std::exp(-22.5)), 1e-9, "x > 40 fallback");
  CHECK_THROWS_AS(integral_mi({1.0, -0.7}, 1.0), Error);
}

TEST_CASE("alternating series vs quadrature across the grid") {
  const std::vector<std::pair<double, double>> params = {
      {0.0, 0.5}, {1.5, 1.0}, {-0.5, 1.0}, {1.0, 0.5}};
  for (auto [k, m] : params) {
    for (double x : {0.5, 2.0, 5.0}) {
      check_rel(integral_mi({k, m}, x).value, quad_mi(k, m, x, 2), 1e-8,
                "Mi vs oracle");
    }
  }
  // the long-range check: alternating series keeps digits through x = 20
  for (auto [k, m] : params) {
    for (double x : {5.0, 12.0, 20.0}) {
      check_rel(integral_mi({k, m}, x).value, quad_mi(k, m, x, 2), 1e-8,
                "Mi vs oracle, large x");
    }
  }
}

TEST_CASE("closed 1F2 reference forms") {
  for (double m : {0.3, 0.77, 0.15}) {
    for (double x : {0.5, 2.0, 5.0}) {
      check_rel(integral_mi_reference({0.0, m}, x).value,
                integral_mi({0.0, m}, x).value, 1e-11, "kappa = 0 form");
      check_rel(integral_mi_reference({0.5, m}, x).value,
                integral_mi({0.5, m}, x).value, 1e-11, "kappa = 1/2 form");
      check_rel(integral_mi_reference({-0.5, m}, x).value,
                integral_mi({-0.5, m}, x).value, 1e-11, "kappa = -1/2 form");
    }
  }
  for (double x : {0.5, 2.0}) {
    check_rel(integral_mi_reference({0.0, 0.5}, x).value,
              2.0 * hyp_integrals(HypIntKind::Shi, x / 2.0).value, 1e-12,
              "matches the Shi row");
  }
  check_rel(integral_mi_reference({1.5, 1.0}, 2.0).value,
            integral_mi({1.5, 1.0}, 2.0).value, 1e-11, "kappa = mu + 1/2");
  CHECK_THROWS_AS(integral_mi_reference({1.3, 0.3}, 1.0), Error);
}

TEST_CASE("integrated recurrence") {
  for (auto [k, m] : std::vector<std::pair<double, double>>{
           {0.8, 0.77}, {1.3, 1.12}, {0.3, 0.9}}) {
    for (double x : {1.0, 3.0}) {
      double lhs = integrate(
                       [&](double t) {
                         return whittaker_m({k, m}, t).value / std::sqrt(t);
                       },
                       0.0, x)
                       .value;
      double rhs = 2.0 * m *
                   (integral_mi({k - 0.5, m - 0.5}, x).value -
                    integral_mi({k + 0.5, m - 0.5}, x).value);
      check_rel(lhs, rhs, 1e-7, "sqrt-weighted integral");
    }
  }
}

TEST_CASE("integral Whittaker Wi") {
  for (double x : {0.5, 2.0, 6.0}) {
    check_rel(integral_wi({0.5, 0.0}, x).value,
              std::sqrt(2.0 * M_PI) *
                  error_family(ErrKind::erf, std::sqrt(x / 2.0)).value,
              1e-10, "Wi_{1/2,0} = sqrt(2pi) erf");
    check_rel(integral_wi({1.0, 0.5}, x).value,
              2.0 * (1.0 - std::exp(-x / 2.0)), 1e-11, "Wi_{1,1/2}");
    check_rel(integral_wi({1.0, -0.5}, x).value,
              integral_wi({1.0, 0.5}, x).value, 1e-12, "mu symmetry");
    check_rel(integral_wi({2.0, 1.5}, x).value,
              4.0 - 2.0 * (2.0 + x) * std::exp(-x / 2.0), 1e-11, "Wi_{2,3/2}");
  }
  // general gamma-weighted combination against quadrature oracles
  check_rel(integral_wi({1.25, 0.25}, 1.5).value, -1.0455190467607570577,
            1e-10, "frozen (5/4,1/4)");
  check_rel(integral_wi({1.0, 1.0 / 3.0}, 2.0).value, 0.20451111986902436642,
            1e-10, "frozen (1,1/3)");
  check_rel(integral_wi({-0.5, 0.25}, 1.0).value, 5.1309000851106939522, 1e-10,
            "frozen (-1/2,1/4)");
  check_rel(integral_wi({1.3, 0.26}, 0.5).value, -1.4392500101945282108, 1e-10,
            "frozen (1.3,0.26)");
  for (auto [k, m] : std::vector<std::pair<double, double>>{{1.25, 0.25},
                                                            {0.8, 1.0 / 3.0}}) {
    for (double x : {0.5, 1.5, 3.0}) {
      check_rel(integral_wi({k, m}, x).value, quad_wi(k, m, x, 8), 1e-7,
                "Wi vs substituted quadrature");
    }
  }
  check_rel(integral_wi({1.25, 0.25}, 1.5).value,
            integral_wi({1.25, -0.25}, 1.5).value, 1e-9, "mu symmetry");
  // integer-2mu with vanishing weight on the divergent piece: quadrature route
  for (double x : {1.0, 3.0}) {
    check_rel(integral_wi({2.0, 0.5}, x).value, -2.0 * x * std::exp(-x / 2.0),
              1e-8, "Wi_{2,1/2} = -2x e^{-x/2}");
    check_rel(integral_wi({3.0, 1.5}, x).value,
              -2.0 * x * x * std::exp(-x / 2.0), 1e-8, "Wi_{3,3/2}");
  }
  CHECK_THROWS_AS(integral_wi({0.0, 0.5}, 1.0), Error);   // log-divergent at 0
  CHECK_THROWS_AS(integral_wi({0.0, 1.5}, 1.0), Error);   // power-divergent
  CHECK_THROWS_AS(integral_wi({-1.0, 0.7}, 1.0), Error);  // divergent piece
}

TEST_CASE("tail integral mi") {
  for (double x : {0.5, 1.0, 2.0}) {
    check_rel(integral_mi_tail({1.0, 0.5}, x).value, 2.0 * std::exp(-x / 2.0),
              1e-9, "mi_{1,1/2} = 2e^{-x/2}");
    check_rel(integral_mi_tail({2.0, 0.5}, x).value, -x * std::exp(-x / 2.0),
              1e-9, "mi_{2,1/2} = -x e^{-x/2}");
    check_rel(integral_mi_tail({2.0, 1.5}, x).value,
              2.0 * (2.0 + x) * std::exp(-x / 2.0), 1e-9, "mi_{2,3/2}");
    check_rel(integral_mi_tail({2.5, 1.0}, x).value,
              -2.0 / 3.0 * std::pow(x, 1.5) * std::exp(-x / 2.0), 1e-9,
              "mi_{5/2,1}");
  }
  check_rel(integral_mi_tail({2.5, 2.0}, 3.0).value, 5.2638128641637482822,
            1e-9, "frozen (5/2,2)");
  // independent inversion-route oracle
  for (auto [k, m] : std::vector<std::pair<double, double>>{
           {1.0, 0.5}, {2.0, 0.5}, {2.0, 1.5}, {2.5, 1.0}}) {
    for (double x : {0.5, 1.0, 2.0}) {
      double oracle = quad_tail_inverted(
          [&](double t) { return whittaker_m({k, m}, t).value; }, x);
      check_rel(integral_mi_tail({k, m}, x).value, oracle, 1e-7,
                "mi vs inverted quadrature");
    }
  }
  CHECK_THROWS_AS(integral_mi_tail({0.0, 0.5}, 1.0), Error);  // sinh growth
}

TEST_CASE("tail integral wi") {
  for (double x : {0.5, 1.0, 2.0}) {
    check_rel(integral_wi_tail({0.5, 0.0}, x).value,
              std::sqrt(2.0 * M_PI) *
                  error_family(ErrKind::erfc, std::sqrt(x / 2.0)).value,
              1e-8, "wi_{1/2,0} = sqrt(2pi) erfc");
    check_rel(integral_wi_tail({0.0, -0.5}, x).value,
              exp_integrals(ExpIntKind::e1, x / 2.0).value, 1e-9,
              "wi_{0,-1/2} = E1(x/2)");
    check_rel(integral_wi_tail({1.0, 0.5}, x).value, 2.0 * std::exp(-x / 2.0),
              1e-9, "wi_{1,1/2}");
    check_rel(integral_wi_tail({2.0, 1.5}, x).value,
              2.0 * (2.0 + x) * std::exp(-x / 2.0), 1e-9, "wi_{2,3/2}");
  }
  check_rel(integral_wi_tail({1.5, 0.0}, 1.0).value, 1.2130613194252668472,
            1e-8, "frozen (3/2,0)");
  check_rel(integral_wi_tail({0.3, 0.77}, 1.5).value, 0.54208015896627323873,
            1e-8, "frozen (0.3,0.77)");
  check_rel(integral_wi_tail({0.0, -1.5}, 3.0).value, 0.14875344009895321929,
            1e-9, "frozen (0,-3/2)");
  for (auto [k, m] : std::vector<std::pair<double, double>>{
           {0.5, 0.0}, {1.0, 0.5}, {1.5, 0.0}, {2.0, 1.5}}) {
    for (double x : {0.5, 1.0, 2.0}) {
      double oracle = quad_tail_inverted(
          [&](double t) { return whittaker_w({k, m}, t).value; }, x);
      check_rel(integral_wi_tail({k, m}, x).value, oracle, 1e-7,
                "wi vs inverted quadrature");
    }
  }
  // decays at infinity
  CHECK(std::fabs(integral_wi_tail({1.0, 0.5}, 50.0).value) < 1e-9);
}
