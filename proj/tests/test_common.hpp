#ifndef SPECINT_TEST_COMMON_HPP
#define SPECINT_TEST_COMMON_HPP

#include <catch2/catch_amalgamated.hpp>
#include <cmath>

namespace testutil {

inline double rel_err(double got, double want) {
  double scale = std::max(std::fabs(want), 1e-300);
  return std::fabs(got - want) / scale;
}

// |got - want| <= tol * max(1, |want|): relative away from zero, absolute
// near zero
inline void check_close(double got, double want, double tol,
                        const char* what = "") {
  INFO(what << " got=" << got << " want=" << want
            << " relerr=" << rel_err(got, want));
  CHECK(std::fabs(got - want) <= tol * std::max(1.0, std::fabs(want)));
}

inline void check_rel(double got, double want, double tol,
                      const char* what = "") {
  INFO(what << " got=" << got << " want=" << want
            << " relerr=" << rel_err(got, want));
  CHECK(rel_err(got, want) <= tol);
}

}  // namespace testutil

#endif
