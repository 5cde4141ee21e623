// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/state.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "tail.hpp"

namespace freewalk {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double reduce_angle(double theta) {
  // cos is what matters; fold into [0, pi].
  return std::acos(std::cos(theta));
}

}  // namespace

central_state::central_state(group_family g, kind k) : group_(g), kind_(k) {}

central_state central_state::pure(const group_family& g, double t) {
  central_state s(g, kind::pure_character);
  if (g.uses_v()) {
    if (t < 0.0 || t > g.carrier())
      throw std::domain_error("central_state: pure parameter outside [0, carrier]");
  } else {
    if (std::fabs(t) > g.carrier())
      throw std::domain_error("central_state: pure parameter outside [-N, N]");
  }
  s.t_ = t;
  return s;
}

central_state central_state::rotation(const group_family& g, double theta) {
  if (g.kind() == family_kind::free_symmetric)
    throw std::domain_error("central_state: rotation states live on oplus/aut");
  central_state s(g, kind::rotation_angle);
  const double th = reduce_angle(theta);
  if (!(th > 0.0))
    throw std::domain_error("central_state: rotation angle must have cos(theta) < 1");
  s.theta_ = th;
  s.t_ = rotation_trace(g.size(), th);
  return s;
}

central_state central_state::mixture(const group_family& g,
                                     std::vector<angle_atom> atoms) {
  if (g.kind() != family_kind::free_orthogonal)
    throw std::domain_error("central_state: angle mixtures live on oplus");
  if (atoms.empty()) throw std::domain_error("central_state: empty mixture");
  double total = 0.0;
  for (const angle_atom& a : atoms) {
    if (!(a.tau > 0.0) || !(a.tau <= 4.0))
      throw std::domain_error("central_state: mixture tau must lie in (0, 4]");
    if (!(a.weight > 0.0))
      throw std::domain_error("central_state: mixture weights must be positive");
    total += a.weight;
  }
  for (angle_atom& a : atoms) a.weight /= total;
  central_state s(g, kind::angle_mixture);
  s.atoms_ = std::move(atoms);
  return s;
}

central_state central_state::random_transposition(const group_family& g) {
  if (g.kind() != family_kind::free_symmetric)
    throw std::domain_error("central_state: random transpositions live on splus");
  return central_state(g, kind::random_transposition);
}

central_state central_state::haar(const group_family& g) {
  return central_state(g, kind::haar);
}

bool central_state::is_counit() const {
  return kind_ == kind::pure_character && t_ == group_.carrier();
}

double rotation_trace(int size, double theta) {
  if (size < 3) throw std::domain_error("rotation_trace: requires N >= 3");
  return size - 2.0 + 2.0 * std::cos(theta);
}

detail::slog central_state::eval_irrep_slog(int n) const {
  if (n < 0) throw std::domain_error("eval_irrep: requires n >= 0");
  if (n == 0) return {0.0, 1};
  const double N = static_cast<double>(group_.size());
  switch (kind_) {
    case kind::haar:
      return {-kInf, 0};
    case kind::pure_character: {
      detail::slog num = group_.uses_v() ? detail::slog_cheb_v(n, t_)
                                         : detail::slog_cheb_u(n, t_);
      if (num.sgn == 0) return num;
      return {num.lg - log_dim(group_, n), num.sgn};
    }
    case kind::rotation_angle: {
      if (group_.kind() == family_kind::quantum_automorphism) {
        detail::slog num = detail::slog_cheb_u(2 * n, t_);
        if (num.sgn == 0) return num;
        return {num.lg - log_cheb_u(2 * n, N), num.sgn};
      }
      detail::slog num = detail::slog_cheb_u(n, t_);
      if (num.sgn == 0) return num;
      return {num.lg - log_cheb_u(n, N), num.sgn};
    }
    case kind::angle_mixture: {
      const double ld = log_cheb_u(n, N);
      double sum = 0.0;
      for (const angle_atom& a : atoms_) {
        detail::slog num = detail::slog_cheb_u(n, N - a.tau);
        if (num.sgn == 0) continue;
        sum += a.weight * num.sgn * std::exp(num.lg - ld);
      }
      return detail::slog_of(sum);
    }
    case kind::random_transposition: {
      detail::slog num = detail::slog_cheb_v(n, N - 2.0);
      const double ratio =
          num.sgn == 0 ? 0.0 : num.sgn * std::exp(num.lg - log_dim(group_, n));
      return detail::slog_of((N - 1.0) / N * ratio + 1.0 / N);
    }
  }
  throw std::logic_error("eval_irrep: unreachable");
}

double central_state::eval_irrep(int n) const {
  double value = detail::slog_to_double(eval_irrep_slog(n));
  if (std::fabs(value) > 1.0) {
    if (std::fabs(value) > 1.0 + 1e-9)
      throw std::logic_error("eval_irrep: |phi(n)| > 1");
    value = value > 0.0 ? 1.0 : -1.0;
  }
  return value;
}

double central_state::conv_eval(long k, int n) const {
  if (k < 1) throw std::domain_error("conv_eval: requires k >= 1");
  return detail::slog_pow_to_double(eval_irrep_slog(n), k);
}

moment_pair central_state::mean_var_chi1(long k) const {
  if (k < 1) throw std::domain_error("mean_var_chi1: requires k >= 1");
  const double a1 = detail::slog_pow_to_double(eval_irrep_slog(1), k) *
                    std::exp(log_dim(group_, 1));
  const double a2 = detail::slog_pow_to_double(eval_irrep_slog(2), k) *
                    std::exp(log_dim(group_, 2));
  // chi_1^2 = chi_2 + 1 for the orthogonal family; chi_2 + chi_1 + 1 for the
  // v families.
  double variance = 1.0 + a2 - a1 * a1;
  if (group_.uses_v()) variance += a1;
  const double scale = std::fmax(1.0, a1 * a1);
  if (variance < 0.0 && variance > -1e-9 * scale) variance = 0.0;
  return {a1, variance};
}

k0_result central_state::boundedness_threshold() const {
  switch (kind_) {
    case kind::haar:
      return {1, true, 1.0};
    case kind::pure_character:
      return threshold_k0(group_, t_);
    case kind::rotation_angle:
      // Restriction to even levels keeps the orthogonal-family criterion.
      return threshold_k0_pair(std::fabs(t_),
                               static_cast<double>(group_.size()));
    case kind::angle_mixture: {
      k0_result worst{1, true, 1.0};
      for (const angle_atom& a : atoms_) {
        k0_result r = threshold_k0_pair(std::fabs(group_.size() - a.tau),
                                        static_cast<double>(group_.size()));
        if (r.k0 > worst.k0) worst = r;
      }
      return worst;
    }
    case kind::random_transposition:
      // Carries a counit component of weight 1/N: never absolutely
      // continuous.
      return {0, false, kInf};
  }
  throw std::logic_error("boundedness_threshold: unreachable");
}

l2_distance_result l2_operator_distance(const central_state& s, long k,
                                        const numeric_context& ctx) {
  if (k < 1) throw std::domain_error("l2_operator_distance: requires k >= 1");
  ctx.validate();
  if (s.state_kind() == central_state::kind::haar) return {0.0, true};
  if (s.is_counit()) return {1.0, true};

  double best = 0.0;
  bool certified = false;
  int m = 0;
  for (int n = 1; n <= ctx.max_terms; ++n) {
    best = std::fmax(best, std::fabs(s.eval_irrep(n)));
    m = n;
    if (n >= 8 && (n % 16 == 0 || n == ctx.max_terms)) {
      detail::phi_tail_sup tail = detail::phi_envelope_sup(s, m);
      if (tail.ok && tail.sup <= best) {
        certified = true;
        break;
      }
    }
  }
  if (s.state_kind() == central_state::kind::random_transposition) {
    const double n = static_cast<double>(s.group().size());
    return {std::pow((n - 2.0) / n, static_cast<double>(k)), certified};
  }
  return {std::pow(best, static_cast<double>(k)), certified};
}

}  // namespace freewalk
