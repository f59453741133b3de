#pragma once

#include "bessel.hpp"
#include "cutoff.hpp"
#include "diffusion.hpp"
#include "errors.hpp"
#include "funceq.hpp"
#include "gamma.hpp"
#include "quadrature.hpp"
#include "theta.hpp"
#include "types.hpp"
#include "zeta_classic.hpp"
#include "zeta_regularized.hpp"

namespace zetalab {

inline constexpr const char* version = "0.1.0";

} // namespace zetalab
