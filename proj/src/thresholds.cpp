// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/thresholds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "freewalk/chebyshev.hpp"

namespace freewalk {

namespace {

// Ties within this distance of an integer are pushed up: at the exact
// boundary the strict inequality q(t)^k > q(N)^{k-1} fails.
constexpr double kTieTol = 1e-12;

long conservative_ceil(double x) {
  const double nearest = std::round(x);
  if (std::fabs(x - nearest) <= kTieTol * std::fmax(1.0, std::fabs(x)))
    return static_cast<long>(nearest) + 1;
  return static_cast<long>(std::ceil(x));
}

}  // namespace

double cap_c(double tau) {
  if (!(tau > 0.0) || !(tau <= 4.0))
    throw std::domain_error("cap_c: requires tau in (0, 4]");
  return 2.0 / (tau * std::sqrt(5.0)) * (2.0 + std::sqrt(2.0 + 9.0 * tau * tau));
}

double admissible_size(double tau) { return tau + cap_c(tau); }

k0_result threshold_k0_pair(double t_eff, double n_eff) {
  if (t_eff > n_eff)
    throw std::domain_error("threshold_k0: parameter beyond the carrier");
  if (t_eff == n_eff)
    return {0, false, std::numeric_limits<double>::infinity()};
  if (t_eff <= 2.0) return {1, true, 1.0};
  const double lq_t = std::log(q_param(t_eff));
  const double lq_n = std::log(q_param(n_eff));
  const double raw = -lq_n / (lq_t - lq_n);
  long k0 = conservative_ceil(raw);
  if (k0 < 1) k0 = 1;
  return {k0, true, raw};
}

k0_result threshold_k0(const group_family& g, double t) {
  if (g.uses_v()) {
    if (t < 0.0)
      throw std::domain_error("threshold_k0: v-family parameter must be >= 0");
    return threshold_k0_pair(std::sqrt(t), std::sqrt(g.carrier()));
  }
  return threshold_k0_pair(std::fabs(t), g.carrier());
}

double threshold_k1(int size, double tau) {
  if (size < 3) throw std::domain_error("threshold_k1: requires N >= 3");
  if (!(tau > 0.0) || !(tau <= 4.0))
    throw std::domain_error("threshold_k1: requires tau in (0, 4]");
  const double n = static_cast<double>(size);
  return n * std::log(n) / tau;
}

}  // namespace freewalk
