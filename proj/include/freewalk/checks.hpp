// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_CHECKS_HPP
#define FREEWALK_CHECKS_HPP

#include <string>
#include <vector>

namespace freewalk {

// Result of a grid verification.  Margins are signed: >= 0 means the
// inequality holds at that point, and near-violations stay visible instead
// of being clamped.  A report passes when the worst margin stays above
// -margin_tolerance.
struct check_report {
  std::string name;
  std::string grid;  // reproducible description of the sweep
  long grid_size = 0;
  double worst_margin = 0.0;
  std::string worst_point;
  bool pass = false;
};

inline constexpr double kMarginTolerance = 1e-12;

// t q(t)^{-(n-1)} <= u_n(t) <= q(t)^{-n}/(1-q(t)^2) on n <= 200,
// t in a log grid over [2.001, 50].
check_report verify_encadrement();

// (1) q(N)/q(N-tau) <= (N-tau)/N, (2) q(N) > 1/N, (3) N ln(1-tau/N) <= -tau,
// on N in [4, 200], tau in (0, 4] with N - tau > 2.
std::vector<check_report> verify_various_bounds();

// q(N-tau)(1 - q(N-tau)^2) >= e^{tau/N}/N for N >= tau + C(tau).
check_report verify_hard_lower();

// tau^2 / (2t(t+tau)^2) >= (16/5) / (t^3(t^2-4)) for t >= C(tau).
check_report verify_three_functions();

// phi_{N-tau}(n)^{N ln N / tau} <= 1/d_n, and
// sum_n d_n^{-lambda/ln N} <= e^{-lambda/2}/(1 - e^{-lambda/2}).
std::vector<check_report> verify_mixed_lemma();

// Assorted proof-step identities: the q(t)(1-q(t)^2) rewriting, the
// two-sided bracket of the ratio u_{n+1}/u_n, monotone decay of
// v_n(N-2)/v_n(N), and the spot value (t+1)(t - sqrt(t^2-4)) at t = 14.
std::vector<check_report> verify_misc_identities();

std::vector<check_report> run_all_checks();

std::string format_report(const check_report& r);

}  // namespace freewalk

#endif  // FREEWALK_CHECKS_HPP
