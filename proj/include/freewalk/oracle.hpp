// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_ORACLE_HPP
#define FREEWALK_ORACLE_HPP

#include <vector>

#include "freewalk/checks.hpp"
#include "freewalk/state.hpp"

namespace freewalk {

enum class measure_kind { semicircle, free_poisson };

// Spectral law of the fundamental character under the Haar state: the
// semicircle on [-2, 2] for the orthogonal family, the free Poisson law on
// [0, 4] for the v families.  Nodes and weights form a Gauss-type rule that
// integrates polynomials up to degree 2 * quad_order - 1 exactly; the free
// Poisson rule is the pushforward x -> x^2 of a semicircle rule, which keeps
// the singular endpoint x = 0 out of the node set.
struct spectral_measure {
  measure_kind kind = measure_kind::semicircle;
  std::vector<double> nodes;
  std::vector<double> weights;

  double integrate(const std::vector<double>& values) const;
};

spectral_measure spectral_measure_for(const group_family& g,
                                      const numeric_context& ctx);

// Max deviation of the quadrature Gram matrix of the character polynomials
// from the identity, for degrees up to max_n.
check_report orthonormality_check(const group_family& g, int max_n,
                                  const numeric_context& ctx);

// Truncated expansion of the density of the k-th convolution power in the
// character basis: coeffs[n] = d_n phi(n)^k for n = 0..m.  tail_bound
// dominates sum_{n>m} |c_n| sup|P_n| (the L^infinity criterion);
// l2_tail_bound dominates sum_{n>m} c_n^2.
struct density_expansion {
  std::vector<double> coeffs;
  double tail_bound = 0.0;
  double l2_tail_bound = 0.0;
  bool convergent = false;
};

density_expansion density_coeffs(const central_state& s, long k,
                                 const numeric_context& ctx);

struct tv_result {
  double value = 0.0;
  double error_bar = 0.0;
  bool divergent = true;
};

// Exact total variation distance on the central algebra:
// (1/2) integral |density - 1| d(mu).  The integrand is split at the sign
// changes of the truncated density and each piece is integrated in closed
// form; the truncation tail and the root-refinement slack are folded into
// error_bar.  Divergent when the expansion has no convergence certificate.
tv_result exact_tv(const central_state& s, long k, const numeric_context& ctx);

}  // namespace freewalk

#endif  // FREEWALK_ORACLE_HPP
