// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_STATE_HPP
#define FREEWALK_STATE_HPP

#include <cmath>
#include <vector>

#include "freewalk/chebyshev.hpp"
#include "freewalk/group.hpp"
#include "freewalk/thresholds.hpp"

namespace freewalk {

struct moment_pair {
  double mean;
  double variance;
};

struct angle_atom {
  double tau;     // 2(1 - cos theta), in (0, 4]
  double weight;  // > 0; normalized on construction
};

// A central state on one of the three families, described by its value
// phi(n) on each irreducible.  Immutable after construction.
class central_state {
 public:
  enum class kind {
    pure_character,       // evaluation at t in the character spectrum
    rotation_angle,       // Kac walk: trace N - 2 + 2 cos(theta)
    angle_mixture,        // finite mixture of rotation angles (O_N^+ only)
    random_transposition, // ((N-1)/N) phi_{N-2} + (1/N) counit (S_N^+ only)
    haar,                 // phi(n) = 0 for n >= 1; testing aid
  };

  static central_state pure(const group_family& g, double t);
  static central_state rotation(const group_family& g, double theta);
  static central_state mixture(const group_family& g,
                               std::vector<angle_atom> atoms);
  static central_state random_transposition(const group_family& g);
  static central_state haar(const group_family& g);

  const group_family& group() const { return group_; }
  kind state_kind() const { return kind_; }
  // Pure parameter, or the rotation trace N - 2 + 2 cos(theta).
  double parameter() const { return t_; }
  double theta() const { return theta_; }
  double tau() const { return 2.0 * (1.0 - std::cos(theta_)); }
  const std::vector<angle_atom>& atoms() const { return atoms_; }
  bool is_counit() const;

  // phi(n); always 1 at n = 0 and |phi(n)| <= 1.
  double eval_irrep(int n) const;
  detail::slog eval_irrep_slog(int n) const;
  // phi(n)^k in the log domain.
  double conv_eval(long k, int n) const;
  // Mean and variance of the fundamental character under the k-th power.
  moment_pair mean_var_chi1(long k) const;
  // Boundedness threshold of this walk (k0).
  k0_result boundedness_threshold() const;

 private:
  central_state(group_family g, kind k);

  group_family group_;
  kind kind_;
  double t_ = 0.0;      // pure parameter / rotation trace
  double theta_ = 0.0;  // rotation only
  std::vector<angle_atom> atoms_;
};

// Trace of a plane rotation by theta inside O_N: N - 2 + 2 cos(theta).
double rotation_trace(int size, double theta);

struct l2_distance_result {
  double value = 0.0;
  bool certified = false;  // tail dominance established within max_terms
};

// sup_{n >= 1} |phi(n)|^k: the L^2-operator distance between the transition
// operator of the k-th convolution power and the Haar projection.
l2_distance_result l2_operator_distance(const central_state& s, long k,
                                        const numeric_context& ctx);

}  // namespace freewalk

#endif  // FREEWALK_STATE_HPP
