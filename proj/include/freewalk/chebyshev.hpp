// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_CHEBYSHEV_HPP
#define FREEWALK_CHEBYSHEV_HPP

#include <utility>

namespace freewalk {

// Root in (0, 1] of q + 1/q = t, evaluated in the cancellation-free form
// 2 / (t + sqrt(t^2 - 4)).  Requires t >= 2; q(2) = 1 exactly.
double q_param(double t);

// Dilated Chebyshev polynomial of the second kind, u_n(x) = U_n(x/2):
// u_0 = 1, u_1 = x, u_{n+1} = x u_n - u_{n-1}.  Total function; switches to
// the log-domain closed form once the recursion would overflow.
double cheb_u(int n, double x);

// ln u_n(t) for t > 2 through the closed form in q(t).  Stable for all n.
// Throws std::domain_error when t <= 2.
double log_cheb_u(int n, double t);

// v_n(x) = u_{2n}(sqrt(x)) continued to all real x by the recursion
// v_0 = 1, v_1 = x - 1, v_{n+1} = (x - 2) v_n - v_{n-1}.
double cheb_v(int n, double x);

// ln v_n(x) for x > 4.
double log_cheb_v(int n, double x);

// Two-sided bracket t q(t)^{-(n-1)} <= u_n(t) <= q(t)^{-n} / (1 - q(t)^2)
// for n >= 1, t >= 2.  The upper bound is +infinity at t = 2.
std::pair<double, double> encadrement_bounds(int n, double t);
double log_encadrement_lower(int n, double t);
double log_encadrement_upper(int n, double t);

// u_{n+1}(t) / u_n(t) for t >= 2, n >= 0, computed without cancellation.
// Strictly decreasing in n from t, with limit 1/q(t).
double cheb_u_ratio(int n, double t);

// ln of a certified upper bound for |u_n(x)| valid for every real x:
// min(n+1, 1/sqrt(1 - x^2/4)) when |x| <= 2 and the encadrement upper
// bound when |x| > 2.
double log_cheb_u_abs_upper(int n, double x);

namespace detail {

// Sign/log representation used to move products and powers of huge or tiny
// Chebyshev values through ratios without overflow.
struct slog {
  double lg;  // ln |value|, -inf when the value is zero
  int sgn;    // -1, 0 or +1
};

slog slog_of(double value);
slog slog_cheb_u(int n, double x);
slog slog_cheb_v(int n, double x);
double slog_to_double(const slog& s);

// s^k as a double, k >= 0.
double slog_pow_to_double(const slog& s, long k);

}  // namespace detail

}  // namespace freewalk

#endif  // FREEWALK_CHEBYSHEV_HPP
