// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#include "freewalk/group.hpp"

#include <cmath>
#include <stdexcept>

#include "freewalk/chebyshev.hpp"

namespace freewalk {

group_family::group_family(family_kind kind, int size)
    : kind_(kind), size_(size) {
  int min_size = 0;
  switch (kind) {
    case family_kind::free_orthogonal: min_size = 3; break;
    case family_kind::free_symmetric: min_size = 4; break;
    case family_kind::quantum_automorphism: min_size = 2; break;
  }
  if (size < min_size)
    throw std::invalid_argument("group_family: size below the admissible minimum for " +
                                name());
}

double group_family::carrier() const {
  if (kind_ == family_kind::quantum_automorphism)
    return static_cast<double>(size_) * static_cast<double>(size_);
  return static_cast<double>(size_);
}

std::string group_family::name() const {
  switch (kind_) {
    case family_kind::free_orthogonal: return "oplus";
    case family_kind::free_symmetric: return "splus";
    case family_kind::quantum_automorphism: return "aut";
  }
  return "?";
}

double dim(const group_family& g, int n) {
  if (n < 0) throw std::domain_error("dim: requires n >= 0");
  double value = g.uses_v() ? cheb_v(n, g.carrier())
                            : cheb_u(n, static_cast<double>(g.size()));
  // Dimensions are integers; snap when the double still resolves units.
  if (std::isfinite(value) && value < 9.0e15) value = std::round(value);
  return value;
}

double log_dim(const group_family& g, int n) {
  if (n < 0) throw std::domain_error("log_dim: requires n >= 0");
  if (n == 0) return 0.0;
  if (g.uses_v()) {
    const double c = g.carrier();
    if (c > 4.0) return log_cheb_v(n, c);
    return std::log(cheb_v(n, c));  // carrier 4: v_n(4) = 2n+1
  }
  return log_cheb_u(n, static_cast<double>(g.size()));
}

void numeric_context::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
    throw std::invalid_argument("numeric_context: tolerances must be positive");
  if (max_terms < 8)
    throw std::invalid_argument("numeric_context: max_terms must be >= 8");
  if (quad_order < 16)
    throw std::invalid_argument("numeric_context: quad_order must be >= 16");
}

}  // namespace freewalk
