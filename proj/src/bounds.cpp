// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/bounds.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "freewalk/oracle.hpp"
#include "tail.hpp"

namespace freewalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double tau_of(double theta) { return 2.0 * (1.0 - std::cos(theta)); }

void require(bool ok, const char* msg) {
  if (!ok) throw std::domain_error(msg);
}

}  // namespace

std::string to_string(bound_status s) {
  switch (s) {
    case bound_status::valid: return "valid";
    case bound_status::vacuous: return "vacuous";
    case bound_status::divergent: return "divergent";
  }
  return "?";
}

bound_value upper_bound_value(double v, std::string formula) {
  return {v, v >= 1.0 ? bound_status::vacuous : bound_status::valid,
          std::move(formula)};
}

bound_value lower_bound_value(double v, std::string formula) {
  return {v, (v <= 0.0 || v >= 1.0) ? bound_status::vacuous : bound_status::valid,
          std::move(formula)};
}

bound_value divergent_value(std::string formula) {
  return {kInf, bound_status::divergent, std::move(formula)};
}

bound_value not_applicable() { return {kNaN, bound_status::vacuous, "n/a"}; }

bound_value dsh_upper(const central_state& s, long k, const numeric_context& ctx) {
  if (k < 1) throw std::domain_error("dsh_upper: requires k >= 1");
  ctx.validate();
  const char* label = "dsh: (1/2) sqrt(sum d_n^2 phi(n)^{2k})";
  if (s.state_kind() == central_state::kind::haar)
    return upper_bound_value(0.0, label);

  const k0_result k0 = s.boundedness_threshold();
  if (!k0.finite || k < k0.k0) return divergent_value(label);

  double sum = 0.0, comp = 0.0;  // Kahan
  for (int n = 1; n <= ctx.max_terms; ++n) {
    const detail::slog phi = s.eval_irrep_slog(n);
    const double c =
        phi.sgn == 0 ? 0.0 : std::exp(log_dim(s.group(), n) + k * phi.lg);
    const double term = c * c;
    const double y = term - comp;
    const double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
    if (n >= 8 && (n % 16 == 0 || n == ctx.max_terms)) {
      detail::tail_bounds tail = detail::coeff_tail(s, k, n);
      if (tail.divergent) return divergent_value(label);
      if (tail.certified &&
          (tail.sum_sq <= 0.1 * ctx.abs_tol * ctx.abs_tol ||
           tail.sum_sq <= ctx.rel_tol * sum || n == ctx.max_terms))
        return upper_bound_value(0.5 * std::sqrt(sum + tail.sum_sq), label);
    }
  }
  return divergent_value(label);  // no certificate within max_terms
}

bound_value small_t_upper(int size, double t, long k) {
  require(size >= 3, "small_t_upper: requires N >= 3");
  require(std::fabs(t) < 2.0, "small_t_upper: requires |t| < 2");
  require(k >= 2, "small_t_upper: requires k >= 2");
  const double n = static_cast<double>(size);
  const double q = q_param(n);
  const double lg = std::log(n / 2.0) - 0.5 * std::log1p(-q * q) +
                    k * (-std::log(n) - 0.5 * std::log1p(-0.25 * t * t));
  const bool exp_convergent = t < 2.0 * std::sqrt(1.0 - 1.0 / (n * n));
  return upper_bound_value(
      std::exp(lg),
      exp_convergent ? "small-t: N/(2 sqrt(1-q(N)^2)) (1/(N sqrt(1-t^2/4)))^k [rate < 1]"
                     : "small-t: N/(2 sqrt(1-q(N)^2)) (1/(N sqrt(1-t^2/4)))^k [rate >= 1]");
}

bound_value large_t_upper(int size, double t, long k) {
  require(size >= 3, "large_t_upper: requires N >= 3");
  const double at = std::fabs(t);
  const double n = static_cast<double>(size);
  require(at > 2.0 && at < n, "large_t_upper: requires 2 < |t| < N");
  const char* label =
      "large-t: (N q(t)^{k0} / 2 sqrt(q(t)^{2k0}-q(N)^{2k0-2})) (1/(N q(t)(1-q(t)^2)))^k";
  const k0_result k0 = threshold_k0_pair(at, n);
  if (k < k0.k0) return divergent_value(label);
  const double lq_t = std::log(q_param(at));
  const double lq_n = std::log(q_param(n));
  // q(t)^{2k0} - q(N)^{2k0-2} = q(t)^{2k0} (1 - e^{-gap}), gap > 0 at k0
  const double gap = 2.0 * k0.k0 * lq_t - (2.0 * k0.k0 - 2.0) * lq_n;
  const double q = q_param(at);
  const double log_rate = -(std::log(n) + lq_t + std::log1p(-q * q));
  const double lg = std::log(n / 2.0) - 0.5 * std::log1p(-std::exp(-gap)) +
                    k * log_rate;
  return upper_bound_value(std::exp(lg), label);
}

bound_value s_small_upper(int carrier, double t, long k) {
  require(carrier >= 5, "s_small_upper: requires N >= 5");
  require(std::fabs(t) < 4.0, "s_small_upper: requires |t| < 4");
  require(k >= 2, "s_small_upper: requires k >= 2");
  const double n = static_cast<double>(carrier);
  const double qs = q_param(std::sqrt(n));
  const char* base = "s-small: (1/2) sqrt(N/(q(sqrt N)^2(1-q(sqrt N)^4))) (q(sqrt N)/(N sqrt(1-t^2/4)))^k";
  if (std::fabs(t) >= 2.0)
    return divergent_value(base);  // 1 - t^2/4 <= 0: the closed form degenerates
  const double pref = 0.5 * std::exp(0.5 * (std::log(n) - 2.0 * std::log(qs) -
                                            std::log1p(-std::pow(qs, 4))));
  const double log_rate =
      std::log(qs) - std::log(n) - 0.5 * std::log1p(-0.25 * t * t);
  const double value = pref * std::exp(k * log_rate);
  const double cond = 2.0 * std::sqrt(1.0 - (qs / n) * (qs / n));
  return upper_bound_value(value, t < cond ? std::string(base) + " [rate < 1]"
                                           : std::string(base) + " [rate >= 1]");
}

bound_value s_large_upper(int carrier, double t, long k) {
  const double n = static_cast<double>(carrier);
  require(carrier >= 5, "s_large_upper: requires N >= 5");
  require(t > 4.0 && t < n, "s_large_upper: requires 4 < t < N");
  const char* label =
      "s-large: (1/2) sqrt(N^2 q(st)^{4k0}/(q(st)^{4k0}-q(sN)^{4k0-4})) (q(sN)/(sqrt N q(st)^2(1-q(st)^2)))^k";
  const k0_result k0 = threshold_k0_pair(std::sqrt(t), std::sqrt(n));
  if (k < k0.k0) return divergent_value(label);
  const double lq_t = std::log(q_param(std::sqrt(t)));
  const double lq_n = std::log(q_param(std::sqrt(n)));
  const double gap = 4.0 * k0.k0 * lq_t - (4.0 * k0.k0 - 4.0) * lq_n;
  const double qt = q_param(std::sqrt(t));
  const double log_rate =
      lq_n - 0.5 * std::log(n) - 2.0 * lq_t - std::log1p(-qt * qt);
  const double lg = std::log(n / 2.0) - 0.5 * std::log1p(-std::exp(-gap)) +
                    k * log_rate;
  return upper_bound_value(std::exp(lg), label);
}

bound_value char_lower(const central_state& s, long k, const numeric_context& ctx) {
  if (k < 1) throw std::domain_error("char_lower: requires k >= 1");
  ctx.validate();
  if (s.group().uses_v()) {
    // (1/2) (d_1 / ||chi_1||) |phi(1)|^k with sup |chi_1| = 3 on the free
    // Poisson support.
    const double d1 = dim(s.group(), 1);
    const double v = 0.5 * (d1 / 3.0) *
                     std::fabs(detail::slog_pow_to_double(s.eval_irrep_slog(1), k));
    return lower_bound_value(v, "char: (d_1/6) |phi(1)|^k");
  }
  const char* label = "char: sup_n (1/2)(d_n/(n+1)) |phi(n)|^k";
  if (s.is_counit()) {
    // Every term is valid; report the fundamental one, N/4.
    return lower_bound_value(s.group().size() / 4.0, label);
  }
  double best_log = -kInf;
  for (int n = 1; n <= ctx.max_terms; ++n) {
    detail::slog phi = s.eval_irrep_slog(n);
    if (phi.sgn == 0) continue;
    const double lg = std::log(0.5) + log_dim(s.group(), n) -
                      std::log(n + 1.0) + k * phi.lg;
    if (lg > best_log) best_log = lg;
  }
  return lower_bound_value(std::exp(best_log), label);
}

bound_value kac_window_upper(int size, double theta, double c, double c0) {
  const double tau = tau_of(theta);
  require(tau > 0.0 && tau <= 4.0, "kac_window_upper: requires tau in (0, 4]");
  require(c0 > 0.0 && c >= c0, "kac_window_upper: requires c >= c0 > 0");
  require(size >= admissible_size(tau),
          "kac_window_upper: N below tau + C(tau)");
  const double v = std::exp(-tau * c) /
                   (2.0 * std::sqrt(-std::expm1(-2.0 * tau * c0)));
  return upper_bound_value(v, "kac-upper: e^{-tau c} / (2 sqrt(1-e^{-2 tau c0}))");
}

bound_value kac_window_lower(int size, double theta, double c) {
  const double tau = tau_of(theta);
  require(tau > 0.0 && tau <= 4.0, "kac_window_lower: requires tau in (0, 4]");
  require(size >= 5, "kac_window_lower: requires N >= 5");
  require(c > 0.0, "kac_window_lower: requires c > 0");
  return lower_bound_value(1.0 - 200.0 * std::exp(-2.0 * c * tau),
                           "kac-lower: 1 - 200 e^{-2 c tau}");
}

namespace {

double mixture_eta(const std::vector<angle_atom>& atoms) {
  double total = 0.0, eta = 0.0;
  for (const angle_atom& a : atoms) {
    require(a.tau > 0.0 && a.tau <= 4.0, "mixture: tau outside (0, 4]");
    require(a.weight > 0.0, "mixture: weights must be positive");
    total += a.weight;
    eta += a.weight * a.tau;
  }
  return eta / total;
}

}  // namespace

bound_value mixed_upper(int size, const std::vector<angle_atom>& atoms, double c) {
  require(!atoms.empty(), "mixed_upper: empty mixture");
  require(c > 0.0, "mixed_upper: requires c > 0");
  require(size >= 3, "mixed_upper: requires N >= 3");
  const double eta = mixture_eta(atoms);
  for (const angle_atom& a : atoms)
    require(size >= admissible_size(a.tau), "mixed_upper: N below tau + C(tau)");
  const double v =
      std::pow(3.0, 0.125) * std::exp(-eta * c / 32.0) +
      std::exp(-c * eta / 4.0) / (2.0 * std::sqrt(-std::expm1(-c * eta / 2.0)));
  return upper_bound_value(
      v, "mixed-upper: 3^{1/8} e^{-eta c/32} + e^{-c eta/4}/(2 sqrt(1-e^{-c eta/2}))");
}

bound_value mixed_lower(int size, const std::vector<angle_atom>& atoms, double c) {
  require(!atoms.empty(), "mixed_lower: empty mixture");
  require(size >= 5, "mixed_lower: requires N >= 5");
  require(c > 0.0, "mixed_lower: requires c > 0");
  const double eta = mixture_eta(atoms);
  return lower_bound_value(1.0 - 500.0 * std::exp(-2.0 * eta * c),
                           "mixed-lower: 1 - 500 e^{-2 eta c}");
}

window_pair transposition_window(int size, double c) {
  require(size >= 16, "transposition_window: requires N >= 16");
  require(c > 0.0, "transposition_window: requires c > 0");
  const double n = static_cast<double>(size);
  const long k_up = static_cast<long>(std::ceil(n * std::log(n) / 2.0 + c * n));
  window_pair out;
  out.k_upper = k_up;
  out.upper = s_large_upper(size, n - 2.0, k_up);
  // Chebyshev machinery with mean >= e^{2c}/5 and Popoviciu variance <= 4.
  out.lower = lower_bound_value(1.0 - 500.0 * std::exp(-4.0 * c),
                                "transposition-lower: 1 - 500 e^{-4c}");
  return out;
}

l2_window_result l2_window(int size, double c, const numeric_context& ctx) {
  require(size >= 4, "l2_window: requires N >= 4");
  require(c > 0.0 && c < 1.0, "l2_window: requires c in (0, 1)");
  const double n = static_cast<double>(size);
  l2_window_result out;
  out.upper = std::exp(-1.0 - 2.0 * c);
  out.lower = size >= 5 ? std::exp(2.0 * c - 2.0) : kNaN;
  out.k_upper = static_cast<long>(std::ceil(n / 2.0 + c * n));
  out.k_lower = std::max<long>(0, static_cast<long>(std::floor(n / 2.0 - c * n)));
  const central_state rt =
      central_state::random_transposition(group_family(family_kind::free_symmetric, size));
  out.exact_at_upper = l2_operator_distance(rt, out.k_upper, ctx).value;
  out.exact_at_lower =
      out.k_lower >= 1 ? l2_operator_distance(rt, out.k_lower, ctx).value : 1.0;
  return out;
}

namespace {

bound_value closed_upper_for(const central_state& s, long k) {
  const group_family& g = s.group();
  try {
    switch (s.state_kind()) {
      case central_state::kind::pure_character:
      case central_state::kind::rotation_angle: {
        const double t = s.parameter();
        const bool even_restriction =
            s.state_kind() == central_state::kind::rotation_angle &&
            g.kind() == family_kind::quantum_automorphism;
        if (!g.uses_v() || even_restriction) {
          const int n = g.size();
          if (std::fabs(t) < 2.0)
            return k >= 2 ? small_t_upper(n, t, k) : not_applicable();
          if (std::fabs(t) > 2.0 && std::fabs(t) < n) return large_t_upper(n, t, k);
          return s.is_counit() ? divergent_value("closed form") : not_applicable();
        }
        const int carrier = static_cast<int>(g.carrier());
        if (t < 4.0) return k >= 2 ? s_small_upper(carrier, t, k) : not_applicable();
        if (t > 4.0 && t < g.carrier()) return s_large_upper(carrier, t, k);
        return s.is_counit() ? divergent_value("closed form") : not_applicable();
      }
      case central_state::kind::angle_mixture: {
        const double eta = mixture_eta(s.atoms());
        const double c =
            (k - threshold_k1(g.size(), eta)) / static_cast<double>(g.size());
        if (c <= 0.0) return not_applicable();
        return mixed_upper(g.size(), s.atoms(), c);
      }
      case central_state::kind::random_transposition:
        return divergent_value("no absolutely continuous power");
      case central_state::kind::haar:
        return upper_bound_value(0.0, "haar");
    }
  } catch (const std::domain_error&) {
    return not_applicable();
  }
  return not_applicable();
}

bound_value window_lower_for(const central_state& s, long k) {
  const group_family& g = s.group();
  try {
    switch (s.state_kind()) {
      case central_state::kind::rotation_angle: {
        if (g.kind() != family_kind::free_orthogonal) return not_applicable();
        const double c =
            (threshold_k1(g.size(), s.tau()) - k) / static_cast<double>(g.size());
        if (c <= 0.0) return not_applicable();
        return kac_window_lower(g.size(), s.theta(), c);
      }
      case central_state::kind::angle_mixture: {
        const double eta = mixture_eta(s.atoms());
        const double c =
            (threshold_k1(g.size(), eta) - k) / static_cast<double>(g.size());
        if (c <= 0.0) return not_applicable();
        return mixed_lower(g.size(), s.atoms(), c);
      }
      case central_state::kind::random_transposition: {
        const double c =
            (threshold_k1(g.size(), 2.0) - k) / static_cast<double>(g.size());
        if (c <= 0.0 || g.size() < 5) return not_applicable();
        return lower_bound_value(1.0 - 500.0 * std::exp(-4.0 * c),
                                 "transposition-lower: 1 - 500 e^{-4c}");
      }
      default:
        return not_applicable();
    }
  } catch (const std::domain_error&) {
    return not_applicable();
  }
}

}  // namespace

cutoff_profile build_profile(const central_state& s, long k_from, long k_to,
                             const numeric_context& ctx, bool with_exact) {
  if (k_from < 1 || k_to < k_from)
    throw std::invalid_argument("build_profile: empty or invalid k range");
  ctx.validate();
  const k0_result k0 = s.boundedness_threshold();
  cutoff_profile profile;
  profile.rows.reserve(k_to - k_from + 1);
  for (long k = k_from; k <= k_to; ++k) {
    profile_row row;
    row.k = k;
    row.past_k0 = k0.finite && k >= k0.k0;
    row.dsh = dsh_upper(s, k, ctx);
    row.closed_upper = closed_upper_for(s, k);
    row.char_low = char_lower(s, k, ctx);
    row.window_low = window_lower_for(s, k);
    row.l2_norm = l2_operator_distance(s, k, ctx).value;
    if (with_exact) {
      tv_result tv = exact_tv(s, k, ctx);
      if (!tv.divergent) {
        row.exact = tv.value;
        row.exact_err = tv.error_bar;
        row.exact_status = bound_status::valid;
      }
    }
    profile.rows.push_back(std::move(row));
  }
  return profile;
}

}  // namespace freewalk
