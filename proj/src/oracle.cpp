// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "tail.hpp"

namespace freewalk {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

// Gauss-Chebyshev (second kind) rule of the given order, rescaled to the
// semicircle on [-2, 2]: nodes 2 cos(j pi/(Q+1)), weights
// (2/(Q+1)) sin^2(j pi/(Q+1)).  Exact for polynomials of degree 2Q - 1.
spectral_measure semicircle_rule(int order) {
  spectral_measure m;
  m.kind = measure_kind::semicircle;
  m.nodes.resize(order);
  m.weights.resize(order);
  for (int j = 1; j <= order; ++j) {
    const double th = j * kPi / (order + 1);
    m.nodes[j - 1] = 2.0 * std::cos(th);
    const double s = std::sin(th);
    m.weights[j - 1] = 2.0 / (order + 1) * s * s;
  }
  return m;
}

// Pushforward of a semicircle rule under x -> x^2: the free Poisson law on
// [0, 4].  An even base order keeps 0 out of the node set; folding the
// symmetric pairs halves the point count without losing degrees.
spectral_measure free_poisson_rule(int order) {
  spectral_measure base = semicircle_rule(2 * order);
  spectral_measure m;
  m.kind = measure_kind::free_poisson;
  m.nodes.resize(order);
  m.weights.resize(order);
  for (int j = 0; j < order; ++j) {
    // nodes come in (+y, -y) pairs: j and 2*order - 1 - j
    const double y = base.nodes[j];
    m.nodes[j] = y * y;
    m.weights[j] = base.weights[j] + base.weights[2 * order - 1 - j];
  }
  return m;
}

// Kahan-compensated accumulator; fixed order keeps results bit-reproducible.
struct kahan {
  double sum = 0.0, comp = 0.0;
  void add(double x) {
    const double y = x - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
};

}  // namespace

double spectral_measure::integrate(const std::vector<double>& values) const {
  if (values.size() != nodes.size())
    throw std::invalid_argument("spectral_measure: value/node size mismatch");
  kahan acc;
  for (size_t j = 0; j < nodes.size(); ++j) acc.add(weights[j] * values[j]);
  return acc.sum;
}

spectral_measure spectral_measure_for(const group_family& g,
                                      const numeric_context& ctx) {
  ctx.validate();
  return g.uses_v() ? free_poisson_rule(ctx.quad_order)
                    : semicircle_rule(ctx.quad_order);
}

check_report orthonormality_check(const group_family& g, int max_n,
                                  const numeric_context& ctx) {
  ctx.validate();
  if (max_n + 1 > ctx.quad_order)
    throw std::invalid_argument(
        "orthonormality_check: quad_order too small for the requested degree");
  const spectral_measure mu = spectral_measure_for(g, ctx);
  const size_t q = mu.nodes.size();

  // P_n(x_j) for n = 0..max_n by the three-term recursions.
  std::vector<std::vector<double>> p(max_n + 1, std::vector<double>(q));
  for (size_t j = 0; j < q; ++j) {
    const double x = mu.nodes[j];
    p[0][j] = 1.0;
    if (max_n >= 1) p[1][j] = g.uses_v() ? x - 1.0 : x;
    for (int n = 2; n <= max_n; ++n)
      p[n][j] = g.uses_v() ? (x - 2.0) * p[n - 1][j] - p[n - 2][j]
                           : x * p[n - 1][j] - p[n - 2][j];
  }

  check_report rep;
  rep.name = "orthonormality-" + g.name();
  rep.grid = "m,n <= " + std::to_string(max_n) + "; quad_order " +
             std::to_string(ctx.quad_order);
  rep.grid_size = static_cast<long>(max_n + 1) * (max_n + 1);
  double worst_dev = 0.0;
  int wm = 0, wn = 0;
  for (int a = 0; a <= max_n; ++a)
    for (int b = a; b <= max_n; ++b) {
      kahan acc;
      for (size_t j = 0; j < q; ++j) acc.add(mu.weights[j] * p[a][j] * p[b][j]);
      const double dev = std::fabs(acc.sum - (a == b ? 1.0 : 0.0));
      if (dev > worst_dev) {
        worst_dev = dev;
        wm = a;
        wn = b;
      }
    }
  rep.worst_margin = 1e-10 - worst_dev;
  rep.worst_point = "(m=" + std::to_string(wm) + ", n=" + std::to_string(wn) + ")";
  rep.pass = rep.worst_margin >= -kMarginTolerance;
  return rep;
}

density_expansion density_coeffs(const central_state& s, long k,
                                 const numeric_context& ctx) {
  if (k < 1) throw std::domain_error("density_coeffs: requires k >= 1");
  ctx.validate();
  density_expansion out;
  out.coeffs = {1.0};
  if (s.state_kind() == central_state::kind::haar) {
    out.convergent = true;
    return out;
  }
  const k0_result k0 = s.boundedness_threshold();
  if (!k0.finite || k < k0.k0) {
    out.tail_bound = out.l2_tail_bound = kInf;
    return out;  // convergent stays false
  }
  const double target = 0.1 * ctx.abs_tol;
  for (int n = 1; n <= ctx.max_terms; ++n) {
    const detail::slog phi = s.eval_irrep_slog(n);
    out.coeffs.push_back(detail::slog_pow_to_double(phi, k) *
                         std::exp(log_dim(s.group(), n)));
    if (n >= 8 && (n % 16 == 0 || n == ctx.max_terms)) {
      detail::tail_bounds tail = detail::coeff_tail(s, k, n);
      if (tail.divergent) break;
      if (tail.certified &&
          (tail.sum_l1_deg <= target || n == ctx.max_terms)) {
        out.tail_bound = tail.sum_l1_deg;
        out.l2_tail_bound = tail.sum_sq;
        out.convergent = std::isfinite(tail.sum_l1_deg);
        return out;
      }
    }
  }
  out.tail_bound = out.l2_tail_bound = kInf;
  out.coeffs.resize(1);
  return out;
}

namespace {

// G(alpha) = sum_l uc[l] sin((l+1) alpha) evaluated by the sine recurrence.
double sine_poly(const std::vector<double>& uc, double alpha) {
  const double two_cos = 2.0 * std::cos(alpha);
  double s_prev = 0.0;            // sin(0)
  double s_cur = std::sin(alpha); // sin(alpha)
  kahan acc;
  for (size_t l = 0; l < uc.size(); ++l) {
    // s_cur = sin((l+1) alpha)
    if (uc[l] != 0.0) acc.add(uc[l] * s_cur);
    const double s_next = two_cos * s_cur - s_prev;
    s_prev = s_cur;
    s_cur = s_next;
  }
  return acc.sum;
}

// Antiderivative of G(alpha) sin(alpha):
// F(alpha) = sum_l uc[l] (sin(l alpha)/l - sin((l+2) alpha)/(l+2)) / 2.
double sine_poly_antiderivative(const std::vector<double>& uc, double alpha) {
  const double two_cos = 2.0 * std::cos(alpha);
  double s_prev = 0.0;
  double s_cur = std::sin(alpha);
  // keep a 3-term window so both sin(l a) and sin((l+2) a) are available
  std::vector<double> sins(uc.size() + 3);
  sins[0] = 0.0;
  sins[1] = s_cur;
  for (size_t i = 2; i < sins.size(); ++i) {
    const double s_next = two_cos * s_cur - s_prev;
    s_prev = s_cur;
    s_cur = s_next;
    sins[i] = s_cur;
  }
  kahan acc;
  for (size_t l = 1; l < uc.size() + 1; ++l) {
    const double c = uc[l - 1];
    if (c == 0.0) continue;
    acc.add(0.5 * c * (sins[l] / l - sins[l + 2] / (l + 2)));
  }
  return acc.sum;
}

// (1/pi) integral_0^pi |G(alpha)| sin(alpha) d(alpha), splitting at the sign
// changes of G located by scanning then bisection.
double tv_integral(const std::vector<double>& uc, int scan_points) {
  std::vector<double> cuts;
  cuts.push_back(0.0);
  double a_prev = 0.0;
  double g_prev = 0.0;  // G(0) = 0, but sign comes from the first interior point
  bool have_prev = false;
  for (int i = 1; i <= scan_points; ++i) {
    const double a = kPi * i / (scan_points + 1);
    const double g = sine_poly(uc, a);
    if (have_prev && ((g_prev < 0.0 && g > 0.0) || (g_prev > 0.0 && g < 0.0))) {
      double lo = a_prev, hi = a, glo = g_prev;
      for (int it = 0; it < 80; ++it) {
        const double mid = 0.5 * (lo + hi);
        const double gm = sine_poly(uc, mid);
        if ((glo < 0.0) == (gm < 0.0)) {
          lo = mid;
          glo = gm;
        } else {
          hi = mid;
        }
        if (hi - lo <= 1e-15) break;
      }
      cuts.push_back(0.5 * (lo + hi));
    }
    if (g != 0.0) {
      a_prev = a;
      g_prev = g;
      have_prev = true;
    }
  }
  cuts.push_back(kPi);
  kahan total;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double piece = sine_poly_antiderivative(uc, cuts[i + 1]) -
                         sine_poly_antiderivative(uc, cuts[i]);
    total.add(std::fabs(piece));
  }
  return total.sum / kPi;
}

}  // namespace

tv_result exact_tv(const central_state& s, long k, const numeric_context& ctx) {
  if (k < 1) throw std::domain_error("exact_tv: requires k >= 1");
  ctx.validate();
  density_expansion dens = density_coeffs(s, k, ctx);
  if (!dens.convergent) return {0.0, 0.0, true};

  // Map to u-index: v_n corresponds to u_{2n} under the pushforward.
  const int g = s.group().uses_v() ? 2 : 1;
  const size_t m = dens.coeffs.size() - 1;
  std::vector<double> uc(g * m, 0.0);
  for (size_t n = 1; n <= m; ++n) uc[g * n - 1] = dens.coeffs[n];

  const int degree = static_cast<int>(uc.size()) + 1;
  const int scan = std::max(8 * (degree + 2), 4 * ctx.quad_order);
  const double coarse = tv_integral(uc, scan);
  const double fine = tv_integral(uc, 2 * scan + 1);

  tv_result out;
  out.divergent = false;
  out.value = fine;
  const double trunc =
      0.5 * std::fmin(std::sqrt(dens.l2_tail_bound), dens.tail_bound);
  out.error_bar = trunc + std::fabs(fine - coarse) + 1e-15;
  if (out.value < -1e-9 || out.value > 1.0 + out.error_bar + 1e-9)
    throw std::runtime_error("exact_tv: integral escaped [0, 1]");
  return out;
}

}  // namespace freewalk
