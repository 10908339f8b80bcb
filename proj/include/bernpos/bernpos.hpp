#pragma once

#include "bernpos/bivariate_nested.hpp"
#include "bernpos/bivariate_raise.hpp"
#include "bernpos/certificate.hpp"
#include "bernpos/polynomial.hpp"
#include "bernpos/rational.hpp"
#include "bernpos/univariate.hpp"

namespace bernpos {
inline constexpr const char* version = "0.1.0";
}
