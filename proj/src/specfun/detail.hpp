#pragma once

#include "gastba/specfun.hpp"

namespace gastba::specfun::detail {

/// sin(pi z) with the real part reduced exactly, accurate near integers.
cplx sin_pi(cplx z);

/// A logarithm of sin(pi z), safe for large |Im z|.
cplx log_sin_pi(cplx z);

/// sum_{k>=0} (-1)^k y^(k+1) / (k+1)^nu for Re nu > 0 and 0 < y <= 1
/// (equals -Li_nu(-y); equals eta(nu) at y = 1), by the
/// Cohen-Rodriguez Villegas-Zagier weighting.
EvalResult alternating_sum(const ComplexOrder& nu, double y);

}  // namespace gastba::specfun::detail
