#pragma once

#include <vector>

#include "redchern/mpoly.hpp"

namespace redchern {

/// Feasibility limits for the root-product expansions. The defaults keep the
/// full suite desk-scale; raise them deliberately.
struct Limits {
  int max_rank = 6;
};

/// c1..cn with deg c_i = i.
VarTable chern_vars(int n);

/// Chern classes c_1..c_n of a rank-n bundle, as elements of some ring
/// (by default the free ring Q[c1..cn]); c_0 = 1 is implicit.
struct ChernVector {
  int rank = 0;
  std::vector<MPoly> classes;  // classes[i-1] = c_i

  /// The universal bundle: c_i is the variable c_i of chern_vars(n).
  static ChernVector universal(int n);

  const VarTable& ring() const { return classes.front().vars(); }
  /// c_i for 0 <= i; c_0 = 1 and c_i = 0 above the rank.
  MPoly c(int i) const;

  bool operator==(const ChernVector&) const = default;
};

/// Formal Chern roots x1..xn and the shifted roots f_i = x_i - (x1+...+xn)/n.
struct RootSystem {
  int n = 0;
  VarTable vars;
  std::vector<MPoly> roots;
  std::vector<MPoly> shifted;
};

RootSystem make_root_system(int n);

/// sigma_r of the shifted roots, rewritten in c1..cn.
MPoly reduced_chern_roots(int n, int r);

/// sum_{i=0}^{r} (-1)^{r-i} n^{-(r-i)} C(n-i, r-i) c_1^{r-i} c_i.
MPoly reduced_chern_formula(int n, int r);

/// Evaluates a polynomial in chern_vars(n) at the classes of cv
/// (with an optional quotient-ring normal form applied after each product).
MPoly evaluate_chern(const MPoly& q, const ChernVector& cv, const Reduction& reduce = {});

/// Classes of E (x) L where L has first Chern class `line` (same ring as cv).
/// Computed from the roots x_i + t of the twisted bundle.
ChernVector twist(const ChernVector& cv, const MPoly& line, const Reduction& reduce = {});

/// The free twist: adjoins a degree-1 variable named `line_name` to the
/// ring of cv and twists by it.
ChernVector twist(const ChernVector& cv, std::string_view line_name = "t");

/// c_1 of the determinant line bundle, i.e. the sum of the roots.
MPoly det_class(const ChernVector& cv);

/// c_1(F) .. c_kmax(F) for F = S^n(E) (x) det(E)^{-1}, in chern_vars(n).
/// F has the C(2n-1, n) roots m_1 f_1 + ... + m_n f_n with sum m_i = n.
/// Requires 2 <= n <= limits.max_rank and 0 <= k_max <= C(2n-1, n).
std::vector<MPoly> sym_power_det_inverse_chern(int n, int k_max, const Limits& limits = {});

/// The Q-algebra endomorphism of Q[c1..cn] induced by x_i -> x_i - (sum x)/n.
MPoly reduce_hom(const MPoly& q);

}  // namespace redchern
