// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_BOUNDS_HPP
#define FREEWALK_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "freewalk/state.hpp"

namespace freewalk {

enum class bound_status { valid, vacuous, divergent };

std::string to_string(bound_status s);

// A bound evaluation.  Divergent bounds carry +infinity; vacuous ones keep
// the raw formula value (a lower bound outside (0, 1), or an upper bound
// >= 1) so plots can show the true curve.
struct bound_value {
  double value = 0.0;
  bound_status status = bound_status::valid;
  std::string formula;

  bool valid() const { return status == bound_status::valid; }
};

bound_value upper_bound_value(double v, std::string formula);
bound_value lower_bound_value(double v, std::string formula);
bound_value divergent_value(std::string formula);
bound_value not_applicable();

// Diaconis-Shahshahani upper bound: (1/2) sqrt(sum_n d_n^2 phi(n)^{2k}),
// truncated with a certified tail.  Divergent below the boundedness
// threshold or when no tail certificate exists within ctx.max_terms.
bound_value dsh_upper(const central_state& s, long k, const numeric_context& ctx);

// Closed forms for the free orthogonal family.
bound_value small_t_upper(int size, double t, long k);            // |t| < 2, k >= 2
bound_value large_t_upper(int size, double t, long k);            // 2 < |t| < N

// Closed forms for the v families (argument is the carrier value).
bound_value s_small_upper(int carrier, double t, long k);         // |t| < 4, k >= 2
bound_value s_large_upper(int carrier, double t, long k);         // 4 < t < carrier

// Character lower bound: best over n of (1/2) (d_n / ||chi_n||_inf) |phi(n)|^k
// for the orthogonal family, and the n = 1 term for the v families.
bound_value char_lower(const central_state& s, long k, const numeric_context& ctx);

// Kac walk windows at k = N ln(N)/tau +/- cN, tau = 2(1 - cos theta).
bound_value kac_window_upper(int size, double theta, double c, double c0);
bound_value kac_window_lower(int size, double theta, double c);

// Mixture windows at k = N ln(N)/eta +/- cN, eta = sum w_i tau_i.
bound_value mixed_upper(int size, const std::vector<angle_atom>& atoms, double c);
bound_value mixed_lower(int size, const std::vector<angle_atom>& atoms, double c);

// Random transposition walk on S_N^+, window at N ln(N)/2 +/- cN.
struct window_pair {
  bound_value upper;
  bound_value lower;
  long k_upper = 0;
};
window_pair transposition_window(int size, double c);

// L^2-operator-norm cut-off window at N/2 +/- cN for random transpositions.
struct l2_window_result {
  double upper = 0.0;          // e^{-1} e^{-2c}
  double lower = 0.0;          // e^{2c-2} (needs N >= 5)
  long k_upper = 0, k_lower = 0;
  double exact_at_upper = 0.0; // (1 - 2/N)^k cross-checks
  double exact_at_lower = 0.0;
};
l2_window_result l2_window(int size, double c, const numeric_context& ctx);

struct profile_row {
  long k = 0;
  bool past_k0 = false;
  bound_value dsh;
  bound_value closed_upper;
  bound_value char_low;
  bound_value window_low;
  std::optional<double> exact;
  double exact_err = 0.0;
  bound_status exact_status = bound_status::divergent;
  double l2_norm = 0.0;
};

struct cutoff_profile {
  std::vector<profile_row> rows;
};

// One row per k in [k_from, k_to]; family- and state-appropriate closed
// forms; exact TV attached when requested and convergent.
cutoff_profile build_profile(const central_state& s, long k_from, long k_to,
                             const numeric_context& ctx, bool with_exact);

}  // namespace freewalk

#endif  // FREEWALK_BOUNDS_HPP
