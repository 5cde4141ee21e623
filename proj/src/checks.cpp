// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/checks.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <vector>

#include "freewalk/chebyshev.hpp"
#include "freewalk/thresholds.hpp"

namespace freewalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<double> log_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < points; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (points - 1));
  g.front() = lo;
  g.back() = hi;
  return g;
}

std::vector<double> linear_grid(double lo, double hi, int points) {
  std::vector<double> g(points);
  for (int i = 0; i < points; ++i) g[i] = lo + (hi - lo) * (i + 1) / points;
  return g;  // excludes lo, includes hi: suits half-open (0, hi] axes
}

std::vector<int> int_log_grid(int lo, int hi, int points) {
  std::vector<int> g;
  for (double x : log_grid(lo, hi, points)) {
    const int n = static_cast<int>(std::lround(x));
    if (g.empty() || g.back() != n) g.push_back(n);
  }
  return g;
}

struct margin_tracker {
  double worst = kInf;
  std::string where;
  long count = 0;

  void note(double margin, const std::string& point) {
    ++count;
    if (margin < worst) {
      worst = margin;
      where = point;
    }
  }

  check_report report(std::string name, std::string grid) const {
    check_report r;
    r.name = std::move(name);
    r.grid = std::move(grid);
    r.grid_size = count;
    r.worst_margin = worst;
    r.worst_point = where;
    r.pass = worst >= -kMarginTolerance;
    return r;
  }
};

std::string point(const char* fmt, double a, double b, double c = 0.0) {
  char buf[96];
  std::snprintf(buf, sizeof buf, fmt, a, b, c);
  return buf;
}

}  // namespace

check_report verify_encadrement() {
  margin_tracker tracker;
  const auto ts = log_grid(2.001, 50.0, 64);
  for (double t : ts) {
    const double q = q_param(t);
    const double L = -std::log(q);
    for (int n = 1; n <= 200; ++n) {
      // Structural log margins: ln(u_n/lower) and ln(upper/u_n), written so
      // the n ln q terms cancel symbolically.
      const double q_pow = std::exp(-(2.0 * n + 2.0) * L);
      const double log_up = -std::log1p(-q_pow);
      const double log_lo =
          L - std::log(t) - std::log1p(-q * q) + std::log1p(-q_pow);
      const double base_lo = log_encadrement_lower(n, t);
      const double base_u = base_lo + log_lo;  // ln u_n
      auto linearize = [](double base, double lg) {
        if (base < 300.0) return std::exp(base) * std::expm1(lg);
        return lg >= -1e-12 ? kInf : -kInf;
      };
      const double m = std::fmin(linearize(base_lo, log_lo),
                                 linearize(base_u, log_up));
      tracker.note(m, point("(n=%.0f, t=%.6g)", n, t));
    }
  }
  return tracker.report("encadrement", "n=1..200; t=log[2.001,50]x64");
}

std::vector<check_report> verify_various_bounds() {
  margin_tracker t1, t2, t3;
  const auto ns = int_log_grid(4, 200, 64);
  const auto taus = linear_grid(0.0, 4.0, 64);
  for (int N : ns) {
    const double q_n = q_param(N);
    t2.note(q_n - 1.0 / N, point("(N=%.0f)", N, 0));
    for (double tau : taus) {
      t3.note(-tau - N * std::log1p(-tau / N), point("(N=%.0f, tau=%.6g)", N, tau));
      if (N - tau > 2.0)
        t1.note((N - tau) / N - q_n / q_param(N - tau),
                point("(N=%.0f, tau=%.6g)", N, tau));
    }
  }
  const std::string grid = "N=log-int[4,200]x64; tau=(0,4]x64";
  return {t1.report("various-bounds-1 q(N)/q(N-tau) <= (N-tau)/N", grid + "; N-tau>2"),
          t2.report("various-bounds-2 q(N) > 1/N", grid),
          t3.report("various-bounds-3 N ln(1-tau/N) <= -tau", grid)};
}

check_report verify_hard_lower() {
  margin_tracker tracker;
  const auto taus = linear_grid(0.0, 4.0, 64);
  for (double tau : taus) {
    const int n_min = static_cast<int>(std::ceil(admissible_size(tau)));
    std::vector<int> ns = int_log_grid(n_min, 200, 16);
    if (ns.front() != n_min) ns.insert(ns.begin(), n_min);
    for (int N : ns) {
      if (N < n_min) continue;
      const double q = q_param(N - tau);
      const double lhs = q * (1.0 - q * q);
      const double rhs = std::exp(tau / N) / N;
      tracker.note(lhs - rhs, point("(tau=%.6g, N=%.0f)", tau, N));
    }
  }
  return tracker.report("hard-lower q(N-tau)(1-q^2) >= e^{tau/N}/N",
                        "tau=(0,4]x64; N=log-int[ceil(tau+C(tau)),200]x16+boundary");
}

check_report verify_three_functions() {
  margin_tracker tracker;
  const auto taus = linear_grid(0.0, 4.0, 64);
  for (double tau : taus) {
    const double c = cap_c(tau);
    for (double t : log_grid(c, 500.0, 64)) {
      const double f = tau * tau / (2.0 * t * (t + tau) * (t + tau));
      const double g = 16.0 / 5.0 / (t * t * t * (t * t - 4.0));
      tracker.note(f - g, point("(tau=%.6g, t=%.6g)", tau, t));
    }
  }
  return tracker.report("three-functions f >= g for t >= C(tau)",
                        "tau=(0,4]x64; t=log[C(tau),500]x64");
}

std::vector<check_report> verify_mixed_lemma() {
  margin_tracker per_level, summed;
  // (a) phi_{N-tau}(n)^{N ln N / tau} <= 1/d_n on admissible N.
  const auto taus = linear_grid(0.0, 4.0, 16);
  for (double tau : taus) {
    const int n_min = static_cast<int>(std::ceil(admissible_size(tau)));
    for (int N : int_log_grid(n_min, 200, 16)) {
      if (N < n_min) continue;
      const double k = N * std::log(static_cast<double>(N)) / tau;
      for (int n = 1; n <= 50; ++n) {
        const double lphi = log_cheb_u(n, N - tau) - log_cheb_u(n, N);
        const double ld = log_cheb_u(n, N);
        // 1/d_n - phi^k = e^{-ld} (1 - e^{k lphi + ld})
        const double margin = std::exp(-ld) * -std::expm1(k * lphi + ld);
        per_level.note(margin, point("(tau=%.4g, N=%.0f, n=%.0f)", tau, N, n));
      }
    }
  }
  // (b) sum_n d_n^{-lambda/ln N} <= e^{-lambda/2}/(1 - e^{-lambda/2}), N >= 3.
  const auto lambdas = linear_grid(0.0, 8.0, 16);
  for (int N : int_log_grid(3, 200, 16)) {
    const double q = q_param(N);
    for (double lambda : lambdas) {
      const double s = lambda / std::log(static_cast<double>(N));
      double partial = 0.0;
      const int m = 50;
      for (int n = 1; n <= m; ++n) partial += std::exp(-s * log_cheb_u(n, N));
      // d_n >= N q^{-(n-1)}: tail <= N^{-s} q^{s m} / (1 - q^s)
      const double tail = std::exp(-s * std::log(static_cast<double>(N)) +
                                   s * m * std::log(q)) /
                          -std::expm1(s * std::log(q));
      const double rhs = 1.0 / std::expm1(lambda / 2.0);
      summed.note(rhs - (partial + tail), point("(N=%.0f, lambda=%.4g)", N, lambda));
    }
  }
  return {per_level.report("mixed-lemma-a phi_{N-tau}(n)^{N ln N/tau} <= 1/d_n",
                           "tau=(0,4]x16; N=log-int[admissible,200]x16; n=1..50"),
          summed.report("mixed-lemma-b sum d_n^{-lambda/ln N} <= 1/(e^{lambda/2}-1)",
                        "N=log-int[3,200]x16; lambda=(0,8]x16; 50 terms + tail")};
}

std::vector<check_report> verify_misc_identities() {
  std::vector<check_report> out;

  {  // q(t)(1 - q(t)^2) = 2 q(t) - t^2 q(t) + t
    margin_tracker tracker;
    for (double t : log_grid(2.001, 50.0, 64)) {
      const double q = q_param(t);
      const double lhs = q * (1.0 - q * q);
      const double rhs = 2.0 * q - t * t * q + t;
      tracker.note(1e-10 - std::fabs(lhs - rhs), point("(t=%.6g)", t, 0));
    }
    out.push_back(tracker.report("misc-q-identity q(1-q^2) = 2q - t^2 q + t",
                                 "t=log[2.001,50]x64; tol 1e-10"));
  }

  {  // f(t) = (t+1)(t - sqrt(t^2-4)) decreasing, f(14) < 5/2
    margin_tracker tracker;
    auto f = [](double t) { return (t + 1.0) * (t - std::sqrt(t * t - 4.0)); };
    tracker.note(2.5 - f(14.0), "(t=14)");
    for (double t : log_grid(14.0, 500.0, 64))
      tracker.note(2.5 - f(t), point("(t=%.6g)", t, 0));
    out.push_back(tracker.report("misc-f14 (t+1)(t-sqrt(t^2-4)) < 5/2 for t >= 14",
                                 "t=log[14,500]x64"));
  }

  {  // ratio bracket: 1/q(t) <= u_{n+1}(t)/u_n(t) <= t - 1/t (equality n = 1)
    margin_tracker tracker;
    for (double t : log_grid(2.0, 10.0, 64)) {
      const double inv_q = 1.0 / q_param(t);
      const double a1 = t - 1.0 / t;
      for (int n = 1; n <= 200; ++n) {
        const double a = cheb_u_ratio(n, t);
        const double m = std::fmin(a - inv_q, a1 - a);
        tracker.note(m, point("(t=%.6g, n=%.0f)", t, n));
      }
    }
    out.push_back(tracker.report("misc-ratio-bracket 1/q <= u_{n+1}/u_n <= t - 1/t",
                                 "t=log[2,10]x64; n=1..200"));
  }

  {  // v_n(N-2)/v_n(N) strictly decreasing (N >= 6)
    margin_tracker tracker;
    auto log_v = [](int n, double x) {
      return x > 4.0 ? log_cheb_v(n, x) : std::log(2.0 * n + 1.0);  // v_n(4) = 2n+1
    };
    for (int N : {6, 8, 10, 20, 50, 100}) {
      double prev = std::exp(log_v(1, N - 2.0) - log_v(1, static_cast<double>(N)));
      for (int n = 2; n <= 500; ++n) {
        const double cur =
            std::exp(log_v(n, N - 2.0) - log_v(n, static_cast<double>(N)));
        tracker.note(prev - cur, point("(N=%.0f, n=%.0f)", N, n));
        prev = cur;
      }
    }
    out.push_back(tracker.report("misc-v-ratio-decreasing v_n(N-2)/v_n(N)",
                                 "N in {6,8,10,20,50,100}; n=1..500"));
  }

  return out;
}

std::vector<check_report> run_all_checks() {
  std::vector<check_report> out;
  out.push_back(verify_encadrement());
  for (auto& r : verify_various_bounds()) out.push_back(std::move(r));
  out.push_back(verify_hard_lower());
  out.push_back(verify_three_functions());
  for (auto& r : verify_mixed_lemma()) out.push_back(std::move(r));
  for (auto& r : verify_misc_identities()) out.push_back(std::move(r));
  return out;
}

std::string format_report(const check_report& r) {
  char buf[256];
  std::snprintf(buf, sizeof buf, "%-55s grid=%-6ld worst=% .6e at %-24s %s",
                r.name.c_str(), r.grid_size, r.worst_margin,
                r.worst_point.c_str(), r.pass ? "PASS" : "FAIL");
  return buf;
}

}  // namespace freewalk
