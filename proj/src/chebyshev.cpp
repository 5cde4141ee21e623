// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/chebyshev.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace freewalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// ln 1e300; beyond this the three-term recursion is at risk of overflow.
constexpr double kRecursionLogLimit = 690.0;

double disc_sqrt(double t) {
  // (t-2)(t+2) keeps full precision near t = 2.
  return std::sqrt((t - 2.0) * (t + 2.0));
}

double recursion_u(int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (int k = 1; k < n; ++k) {
    double next = x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

}  // namespace

double q_param(double t) {
  if (!(t >= 2.0)) throw std::domain_error("q_param: requires t >= 2");
  return 2.0 / (t + disc_sqrt(t));
}

double log_cheb_u(int n, double t) {
  if (n < 0) throw std::domain_error("log_cheb_u: requires n >= 0");
  if (!(t > 2.0)) throw std::domain_error("log_cheb_u: requires t > 2");
  const double q = q_param(t);
  const double L = -std::log(q);
  // (n+1) L + ln(1 - q^{2n+2}) - ln(1/q - q), with the last factor written
  // as (1 - q^2)/q so that n = 0 gives exactly zero.
  return n * L + std::log1p(-std::exp(-(2.0 * n + 2.0) * L)) -
         std::log1p(-q * q);
}

double cheb_u(int n, double x) {
  if (n < 0) throw std::domain_error("cheb_u: requires n >= 0");
  if (n == 0) return 1.0;
  if (n == 1) return x;
  const double ax = std::fabs(x);
  if (ax > 2.0) {
    const double lg = log_cheb_u(n, ax);
    if (lg > kRecursionLogLimit) {
      const double mag = std::exp(lg);  // may round to +inf
      const bool neg = (x < 0.0) && (n % 2 == 1);
      return neg ? -mag : mag;
    }
  }
  return recursion_u(n, x);
}

double cheb_v(int n, double x) {
  if (n < 0) throw std::domain_error("cheb_v: requires n >= 0");
  if (n == 0) return 1.0;
  if (n == 1) return x - 1.0;
  if (x > 4.0) {
    const double lg = log_cheb_v(n, x);
    if (lg > kRecursionLogLimit) return std::exp(lg);
  }
  double prev = 1.0, cur = x - 1.0;
  for (int k = 1; k < n; ++k) {
    double next = (x - 2.0) * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double log_cheb_v(int n, double x) {
  if (!(x > 4.0)) throw std::domain_error("log_cheb_v: requires x > 4");
  return log_cheb_u(2 * n, std::sqrt(x));
}

double log_encadrement_lower(int n, double t) {
  if (n < 1) throw std::domain_error("encadrement: requires n >= 1");
  if (!(t >= 2.0)) throw std::domain_error("encadrement: requires t >= 2");
  const double q = q_param(t);
  return std::log(t) - (n - 1) * std::log(q);
}

double log_encadrement_upper(int n, double t) {
  if (n < 1) throw std::domain_error("encadrement: requires n >= 1");
  if (!(t >= 2.0)) throw std::domain_error("encadrement: requires t >= 2");
  const double q = q_param(t);
  // log1p(-1) = -inf at t = 2, so the bound degenerates to +inf there.
  return -n * std::log(q) - std::log1p(-q * q);
}

std::pair<double, double> encadrement_bounds(int n, double t) {
  return {std::exp(log_encadrement_lower(n, t)),
          std::exp(log_encadrement_upper(n, t))};
}

double cheb_u_ratio(int n, double t) {
  if (n < 0) throw std::domain_error("cheb_u_ratio: requires n >= 0");
  if (!(t >= 2.0)) throw std::domain_error("cheb_u_ratio: requires t >= 2");
  if (t == 2.0) return (n + 2.0) / (n + 1.0);
  const double q = q_param(t);
  const double q2n2 = std::exp((2.0 * n + 2.0) * std::log(q));
  // (1/q) (1 - q^{2n+4}) / (1 - q^{2n+2}); never below the limit 1/q in
  // floating point because q^{2n+2} >= q^{2n+4} term by term.
  return (1.0 - q2n2 * q * q) / (q * (1.0 - q2n2));
}

double log_cheb_u_abs_upper(int n, double x) {
  const double ax = std::fabs(x);
  if (n == 0) return 0.0;
  if (ax > 2.0) return log_encadrement_upper(n, ax);
  const double poly = std::log(n + 1.0);
  if (ax == 2.0) return poly;
  // |u_n(2 cos a)| = |sin((n+1)a)/sin(a)| <= 1/sin(a)
  const double osc = -0.5 * std::log1p(-0.25 * ax * ax);
  return std::min(poly, osc);
}

namespace detail {

slog slog_of(double value) {
  if (value == 0.0) return {-kInf, 0};
  return {std::log(std::fabs(value)), value > 0.0 ? 1 : -1};
}

slog slog_cheb_u(int n, double x) {
  const double ax = std::fabs(x);
  if (ax > 2.0) {
    const bool neg = (x < 0.0) && (n % 2 == 1);
    return {log_cheb_u(n, ax), neg ? -1 : 1};
  }
  return slog_of(recursion_u(n, x));
}

slog slog_cheb_v(int n, double x) {
  if (x > 4.0) return {log_cheb_v(n, x), 1};
  return slog_of(cheb_v(n, x));
}

double slog_to_double(const slog& s) {
  if (s.sgn == 0) return 0.0;
  return s.sgn * std::exp(s.lg);
}

double slog_pow_to_double(const slog& s, long k) {
  if (k == 0) return 1.0;
  if (s.sgn == 0) return 0.0;
  const double mag = std::exp(s.lg * static_cast<double>(k));
  const bool neg = (s.sgn < 0) && (k % 2 != 0);
  return neg ? -mag : mag;
}

}  // namespace detail

}  // namespace freewalk
