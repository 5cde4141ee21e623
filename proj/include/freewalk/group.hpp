// Copyright (c) 2026 the freewalk authors
// SPDX-License-Identifier: Apache-2.0

#ifndef FREEWALK_GROUP_HPP
#define FREEWALK_GROUP_HPP

#include <string>

namespace freewalk {

enum class family_kind { free_orthogonal, free_symmetric, quantum_automorphism };

// One of the three quantum group families at a fixed size N.  The carrier is
// the value of the fundamental character at the identity fibre: N for O_N^+
// and S_N^+, N^2 for the quantum automorphism group of M_N.
class group_family {
 public:
  group_family(family_kind kind, int size);

  family_kind kind() const { return kind_; }
  int size() const { return size_; }
  double carrier() const;
  // True for the families whose character polynomials are the v_n.
  bool uses_v() const { return kind_ != family_kind::free_orthogonal; }
  std::string name() const;  // oplus / splus / aut

 private:
  family_kind kind_;
  int size_;
};

// Dimension of the n-th irreducible: u_n(N), v_n(N) or v_n(N^2).
// Integer-valued; rounded to the nearest integer when representable.
double dim(const group_family& g, int n);
double log_dim(const group_family& g, int n);

// Shared numeric knobs.  Series are truncated at max_terms with certified
// tails; quadrature rules integrate polynomials of degree 2*quad_order - 1
// exactly.
struct numeric_context {
  double rel_tol = 1e-12;
  double abs_tol = 1e-12;
  int max_terms = 512;
  int quad_order = 64;

  void validate() const;  // throws std::invalid_argument
};

}  // namespace freewalk

#endif  // FREEWALK_GROUP_HPP
