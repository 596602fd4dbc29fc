#include "test_common.hpp"

#include <cmath>
#include <vector>

#include "specint/mittag_leffler.hpp"
#include "specint/quadrature.hpp"

using namespace specint;
using testutil::check_rel;

namespace {
constexpr double kEulerGamma = 0.57721566490153286061;
}

TEST_CASE("Mittag-Leffler series") {
  for (double x : {0.0, 0.5, 1.0, 4.0}) {
    check_rel(ml({1.0, 1.0}, x).value, std::exp(x), 1e-14, "E_{1,1} = e^x");
    check_rel(ml({2.0, 1.0}, x).value, std::cosh(std::sqrt(x)), 1e-14,
              "E_{2,1} = cosh(sqrt x)");
  }
  for (double b : {0.4, 1.0, 2.7}) {
    check_rel(ml({1.3, b}, 0.0).value, rgamma(b), 1e-15, "E(0) = 1/Gamma(b)");
  }
  check_rel(ml({0.5, 1.0}, 1.5).value, 18.653886256262733939, 1e-13, "frozen");
  check_rel(ml({0.25, 1.0}, 2.0).value, 35544441.509930781603, 1e-13, "frozen");
  check_rel(ml({0.5, 0.5}, 2.0).value, 218.44599836350370111, 1e-13, "frozen");
  check_rel(ml({2.0, 2.0}, 4.0).value, 1.8134302039235093838, 1e-14, "frozen");
  CHECK_THROWS_AS(ml({0.5, 1.0}, 40.0), Error);   // e^{1600} overflow
  CHECK_THROWS_AS(ml({1.0, 1.0}, -1.0), Error);
  CHECK_THROWS_AS(ml({-1.0, 1.0}, 1.0), Error);
}

TEST_CASE("integral Mittag-Leffler series") {
  CHECK(iml({1.3, 0.7}, 0.0).value == 0.0);
  for (double x : {0.4, 1.0, 3.0}) {
    check_rel(iml({2.0, 1.0}, x).value,
              -2.0 * kEulerGamma - std::log(x) +
                  2.0 * hyp_integrals(HypIntKind::Chi, std::sqrt(x)).value,
              1e-13, "Ei_{2,1} closed form");
    check_rel(iml({1.0, 1.0}, x).value,
              -kEulerGamma - std::log(x) +
                  hyp_integrals(HypIntKind::Chi, x).value +
                  hyp_integrals(HypIntKind::Shi, x).value,
              1e-13, "Ei_{1,1} closed form");
  }
  check_rel(iml({2.0, 1.0}, 1.0).value, 0.52130255215735076058, 1e-14, "frozen");
  check_rel(iml({1.5, 1.0}, 1.5).value, 1.3392435758811192135, 1e-14, "frozen");
  check_rel(iml({0.5, 1.0}, 2.0).value, 18.921366168260777878, 1e-13, "frozen");
  check_rel(iml({5.0, 1.0}, 4.0).value, 0.033335537935185227805, 1e-14, "frozen");
  check_rel(iml({3.0, 2.2}, 2.0).value, 0.061655870700683029396, 1e-14, "frozen");
  check_rel(iml({0.5, 0.5}, 1.0).value, 2.2780442666489748198, 1e-13, "frozen");
}

TEST_CASE("rational reduction of E") {
  for (double x : {0.0, 0.7, 2.0}) {
    check_rel(ml_rational({1, 1}, 1.0, x).value, std::exp(x), 1e-13,
              "p = q = 1 degenerate");
  }
  for (double x : {0.3, 1.0, 2.2}) {
    double want = std::exp(x * x) * (error_family(ErrKind::erf, x).value + 1.0);
    check_rel(ml_rational({1, 2}, 1.0, x).value, want, 1e-12,
              "E_{1/2,1} = e^{x^2}(erf+1)");
  }
  check_rel(ml_rational({3, 2}, 1.0, 1.7).value, ml({1.5, 1.0}, 1.7).value,
            1e-10, "direct series oracle");
}

TEST_CASE("rational reduction grids agree with the direct series") {
  const std::vector<std::pair<int, int>> pqs = {{1, 2}, {1, 3}, {2, 3}, {3, 2},
                                                {2, 1}, {3, 1}, {1, 4}};
  for (auto [p, q] : pqs) {
    for (double b : {0.5, 1.0, 2.0}) {
      for (double x : {0.25, 1.0, 2.5}) {
        MLParams par{double(p) / q, b};
        check_rel(ml_rational({p, q}, b, x).value, ml(par, x).value, 1e-10,
                  "ml_rational vs ml");
        check_rel(iml_rational({p, q}, b, x).value, iml(par, x).value, 1e-10,
                  "iml_rational vs iml");
      }
    }
  }
}

TEST_CASE("integral ML rational reduction examples") {
  check_rel(iml_rational({2, 1}, 1.0, 1.3).value, iml({2.0, 1.0}, 1.3).value,
            1e-10, "2/1 vs series");
  // the alpha = 1/2, beta = 1/2 table row: x^2/sqrt(pi) 2F2 + e^{x^2} Dawson
  for (double x : {0.5, 1.0}) {
    double want = x * x / std::sqrt(M_PI) *
                      pfq({1.0, 1.0}, {1.5, 2.0}, x * x).value +
                  std::exp(x * x) * error_family(ErrKind::dawson, x).value;
    check_rel(iml_rational({1, 2}, 0.5, x).value, want, 1e-12,
              "Ei_{1/2,1/2} closed row");
    check_rel(iml({0.5, 0.5}, x).value, want, 1e-12, "series matches row");
  }
}

TEST_CASE("registered closed forms match the series") {
  struct Row {
    double a, b;
  };
  const std::vector<Row> rows = {
      {0.5, 1.0}, {0.5, 2.0}, {0.5, 3.2}, {1.0, 0.25}, {1.0, 1.0 / 3.0},
      {1.0, 0.5}, {1.0, 1.0}, {1.0, 1.5}, {1.0, 2.6},  {1.5, 1.0},
      {1.5, 2.0}, {2.0, 1.0}, {2.0, 2.0}, {2.0, 3.0},  {2.0, 1.3},
      {3.0, 1.0}, {3.0, 2.2}, {4.0, 1.0}, {4.0, 1.6},  {5.0, 1.0},
      {5.0, 2.4}, {1.0 / 3.0, 0.5}, {1.0 / 3.0, 0.2}};
  for (auto r : rows) {
    for (double x : {0.1, 0.5, 1.0, 2.0, 4.0}) {
      INFO("alpha=" << r.a << " beta=" << r.b << " x=" << x);
      check_rel(iml_reference({r.a, r.b}, x).value, iml({r.a, r.b}, x).value,
                1e-9, "closed form vs series");
    }
  }
  CHECK_THROWS_AS(iml_reference({1.7, 1.0}, 1.0), Error);
}

TEST_CASE("integral consistency against quadrature") {
  const std::vector<std::pair<double, double>> params = {
      {1.0, 1.0}, {2.0, 1.0}, {0.5, 1.0}, {1.5, 2.0}};
  for (auto [a, b] : params) {
    for (double x : {0.5, 1.0, 2.0}) {
      double oracle =
          integrate_fi([a = a, b = b](double t) { return ml({a, b}, t).value; },
                       rgamma(b), x)
              .value;
      check_rel(iml({a, b}, x).value, oracle, 1e-7, "iml vs quadrature");
    }
  }
}

TEST_CASE("derivative link by central differences") {
  for (auto [a, b] : std::vector<std::pair<double, double>>{
           {1.0, 1.0}, {0.5, 2.0}, {2.0, 1.5}, {1.5, 0.5}}) {
    for (double x : {0.5, 1.2, 3.1}) {
      double h = 1e-5 * x;
      double der = (iml({a, b}, x + h).value - iml({a, b}, x - h).value) /
                   (2.0 * h);
      double want = (ml({a, b}, x).value - rgamma(b)) / x;
      check_rel(der, want, 1e-6, "d/dx iml");
    }
  }
}

TEST_CASE("monotonicity of the one-parameter integral function") {
  for (double a : {0.25, 0.5, 1.0, 2.0}) {
    double prev = 0.0;
    for (double x = 0.1; x <= 4.0; x += 0.13) {
      double v = iml({a, 1.0}, x).value;
      INFO("alpha=" << a << " x=" << x);
      CHECK(v > prev);
      prev = v;
    }
  }
}
