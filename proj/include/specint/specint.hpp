#ifndef SPECINT_SPECINT_HPP
#define SPECINT_SPECINT_HPP

#include "specint/core.hpp"
#include "specint/elementary.hpp"
#include "specint/hypergeometric.hpp"
#include "specint/laplace.hpp"
#include "specint/mittag_leffler.hpp"
#include "specint/quadrature.hpp"
#include "specint/whittaker.hpp"
#include "specint/wright.hpp"

#endif  // SPECINT_SPECINT_HPP
