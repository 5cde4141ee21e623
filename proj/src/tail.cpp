// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "tail.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "freewalk/chebyshev.hpp"

namespace freewalk::detail {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ln of the numerator envelope |u_l(b)| at u-index l.
double num_env_log(int l, double b) { return log_cheb_u_abs_upper(l, b); }

// ln of a valid per-n-step growth bound of the numerator envelope,
// uniform over all levels at u-index >= l.
double num_step_log(int l, double b, int g) {
  const double ab = std::fabs(b);
  if (ab > 2.0) return g * std::log(cheb_u_ratio(l, ab));
  if (ab < 2.0) return 0.0;  // constant envelope 1/sqrt(1 - b^2/4)
  return std::log((l + g + 1.0) / (l + 1.0));
}

// ln of a lower bound for the denominator u_l(B), B >= 2.
double den_low_log(int l, double B) {
  if (B > 2.0) return log_encadrement_lower(l, B);
  return std::log(l + 1.0);  // u_l(2) = l + 1 exactly
}

// ln of a valid per-n-step growth lower bound of the denominator,
// uniform over levels at u-index >= l.
double den_step_log(int l, double B, int g) {
  if (B > 2.0) return -g * std::log(q_param(B));  // a_l(B) >= 1/q(B)
  return std::log((l + g + 1.0) / (l + 1.0));
}

// sum_{n > m} (g n + 1)^{-p} <= (g m + 1)^{-(p-1)} / (g (p-1)), p > 1.
double int_tail(int m, int g, double p) {
  if (!(p > 1.0)) return kInf;
  return std::exp(-(p - 1.0) * std::log(g * m + 1.0)) / (g * (p - 1.0));
}

}  // namespace

state_shape shape_of(const central_state& s) {
  state_shape sh;
  const group_family& g = s.group();
  switch (s.state_kind()) {
    case central_state::kind::haar:
      sh.haar = true;
      return sh;
    case central_state::kind::pure_character:
      if (s.is_counit()) {
        sh.counit = sh.never_bounded = true;
        return sh;
      }
      if (g.uses_v()) {
        sh.g = 2;
        sh.base_den = std::sqrt(g.carrier());
        sh.atoms = {{1.0, std::sqrt(s.parameter())}};
      } else {
        sh.g = 1;
        sh.base_den = g.carrier();
        sh.atoms = {{1.0, s.parameter()}};
      }
      return sh;
    case central_state::kind::rotation_angle:
      if (g.kind() == family_kind::quantum_automorphism) {
        sh.g = 2;
        sh.base_den = static_cast<double>(g.size());
      } else {
        sh.g = 1;
        sh.base_den = static_cast<double>(g.size());
      }
      sh.atoms = {{1.0, s.parameter()}};
      return sh;
    case central_state::kind::angle_mixture: {
      sh.g = 1;
      sh.base_den = static_cast<double>(g.size());
      for (const angle_atom& a : s.atoms())
        sh.atoms.push_back({a.weight, g.size() - a.tau});
      return sh;
    }
    case central_state::kind::random_transposition: {
      const double n = static_cast<double>(g.size());
      sh.g = 2;
      sh.base_den = std::sqrt(n);
      sh.atoms = {{(n - 1.0) / n, std::sqrt(n - 2.0)}};
      sh.constant = 1.0 / n;
      sh.never_bounded = true;  // counit component of weight 1/N
      return sh;
    }
  }
  throw std::logic_error("shape_of: unreachable");
}

phi_tail_sup phi_envelope_sup(const central_state& s, int m) {
  const state_shape sh = shape_of(s);
  if (sh.haar) return {0.0, true};
  if (sh.counit) return {1.0, true};
  const int l1 = sh.g * (m + 1);
  double sup = sh.constant;
  for (const auto& [w, b] : sh.atoms) {
    const double step =
        num_step_log(l1, b, sh.g) - den_step_log(l1, sh.base_den, sh.g);
    if (step > 0.0) return {1.0, false};  // envelope not yet decreasing
    const double e =
        std::exp(num_env_log(l1, b) - den_low_log(l1, sh.base_den));
    sup += w * std::fmin(e, 1.0);
  }
  return {sup, true};
}

tail_bounds coeff_tail(const central_state& s, long k, int m) {
  tail_bounds out;
  const state_shape sh = shape_of(s);
  if (sh.haar) {
    out.certified = true;
    return out;
  }
  if (sh.never_bounded) {
    out.divergent = true;
    out.sum_sq = out.sum_l1_deg = kInf;
    return out;
  }

  const int g = sh.g;
  const int l1 = g * (m + 1);
  const double B = sh.base_den;

  if (B == 2.0) {
    // Polynomial dimensions d_n = g n + 1 (carrier 4).  Single atom with
    // bounded numerator; integral tails in place of geometric ones.
    const double b = sh.atoms.front().second;  // < 2 here (== 2 is the counit)
    const double ls = -0.5 * std::log1p(-0.25 * b * b);  // ln sup|u_l(b)|
    out.sum_sq = std::exp(2.0 * k * ls) * int_tail(m, g, 2.0 * k - 2.0);
    out.sum_l1_deg = std::exp(k * ls) * int_tail(m, g, static_cast<double>(k) - 2.0);
    out.certified = std::isfinite(out.sum_sq);
    return out;
  }

  double log_t1, log_r;
  if (sh.atoms.size() == 1 && sh.constant == 0.0) {
    // c_n = u_l(b)^k / u_l(B)^{k-1}: bound numerator and denominator
    // separately, uniformly over n > m.
    const double b = sh.atoms.front().second;
    log_t1 = k * num_env_log(l1, b) - (k - 1) * den_low_log(l1, B);
    log_r = k * num_step_log(l1, b, g) - (k - 1) * den_step_log(l1, B, g);
  } else {
    // Mixture: envelope the state value and multiply by the dimension.
    double e_mix = 0.0, step_max = -kInf;
    for (const auto& [w, b] : sh.atoms) {
      const double e = std::exp(num_env_log(l1, b) - den_low_log(l1, B));
      e_mix += w * std::fmin(e, 1.0);
      step_max = std::fmax(step_max,
                           num_step_log(l1, b, g) - den_step_log(l1, B, g));
    }
    log_t1 = log_dim(s.group(), m + 1) + k * std::log(e_mix);
    log_r = g * std::log(cheb_u_ratio(l1, B)) + k * step_max;
  }

  if (!(log_r < -1e-15)) {
    out.sum_sq = out.sum_l1_deg = kInf;
    return out;  // not certified at this truncation point
  }
  const double r = std::exp(log_r);
  const double t1 = std::exp(log_t1);
  out.sum_sq = t1 * t1 * std::exp(-std::log1p(-r * r));
  // sum_j t1 r^j (l1 + 1 + g j)
  out.sum_l1_deg = t1 * ((l1 + 1.0) / (1.0 - r) + g * r / ((1.0 - r) * (1.0 - r)));
  out.certified = true;
  return out;
}

}  // namespace freewalk::detail
