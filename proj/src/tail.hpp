// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0
//
// Certified truncation-tail machinery for the character series
//   sum_n d_n phi(n)^k  (and its square / weighted variants).
//
// Every state maps to a common shape: phi(n) is a weighted sum of ratios
// u_l(b_i) / u_l(B) at u-index l = g n, plus an optional additive constant.
// Tails are bounded by geometric envelopes built from the two-sided
// encadrement of u_n and the monotone ratio a_l(t) = u_{l+1}(t)/u_l(t);
// the polynomial-dimension families (carrier 4) use integral tails instead.

#ifndef FREEWALK_SRC_TAIL_HPP
#define FREEWALK_SRC_TAIL_HPP

#include <vector>

#include "freewalk/state.hpp"

namespace freewalk::detail {

struct state_shape {
  int g = 1;          // u-index step per irreducible level
  double base_den = 0;  // denominator base B (>= 2)
  std::vector<std::pair<double, double>> atoms;  // (weight, numerator base)
  double constant = 0.0;  // additive constant part (random transposition)
  bool haar = false;
  bool counit = false;
  bool never_bounded = false;  // counit component present
};

state_shape shape_of(const central_state& s);

// Certified bound for sup_{n > m} |phi(n)|; ok = false when no finite
// certificate exists at this truncation point.
struct phi_tail_sup {
  double sup = 0.0;
  bool ok = false;
};
phi_tail_sup phi_envelope_sup(const central_state& s, int m);

// Certified bounds for the coefficient tails beyond index m, with
// c_n = d_n phi(n)^k.
struct tail_bounds {
  bool certified = false;
  bool divergent = false;     // certified: no absolutely continuous power
  double sum_sq = 0.0;        // sum_{n>m} c_n^2
  double sum_l1_deg = 0.0;    // sum_{n>m} |c_n| (g n + 1)
};
tail_bounds coeff_tail(const central_state& s, long k, int m);

}  // namespace freewalk::detail

#endif  // FREEWALK_SRC_TAIL_HPP
