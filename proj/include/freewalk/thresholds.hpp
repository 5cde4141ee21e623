// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_THRESHOLDS_HPP
#define FREEWALK_THRESHOLDS_HPP

#include "freewalk/group.hpp"

namespace freewalk {

// C(tau) = (2 / (tau sqrt 5)) (2 + sqrt(2 + 9 tau^2)) for tau in (0, 4].
// The Kac walk estimates are admissible once N >= tau + C(tau).
double cap_c(double tau);
double admissible_size(double tau);  // tau + C(tau)

// Smallest k whose convolution power has an L^1 density.
struct k0_result {
  long k0 = 1;
  bool finite = true;   // false for the counit: no power is ever bounded
  double raw = 0.0;     // the real number whose ceiling gives k0
};

// Boundedness threshold of the pure state with parameter t on g.  Evaluates
// the ceiling of -ln q / ln(q(t)/q(N)) on (|t|, N) for the free orthogonal
// family and on (sqrt t, sqrt carrier) for the v families.  Parameters at or
// beyond the carrier have no bounded power (finite = false); parameters
// inside the absolutely continuous part of the spectrum report k0 = 1.
k0_result threshold_k0(const group_family& g, double t);

// Same ceiling formula on an explicit pair 2 < t_eff < n_eff.
k0_result threshold_k0_pair(double t_eff, double n_eff);

// Cut-off location N ln(N) / tau.
double threshold_k1(int size, double tau);

}  // namespace freewalk

#endif  // FREEWALK_THRESHOLDS_HPP
