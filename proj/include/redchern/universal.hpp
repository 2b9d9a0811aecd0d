#pragma once

#include <map>
#include <vector>

#include "redchern/chern.hpp"
#include "redchern/mpoly.hpp"
#include "redchern/rational.hpp"
#include "redchern/symfun.hpp"

namespace redchern {

/// The linear forms m_1 x_1 + ... + m_n x_n with m_i >= 0 and sum m_i = n.
/// The first n entries are n*x_i; the rest follow in ascending lexicographic
/// order of (m_1, ..., m_n).
struct YRootSet {
  int n = 0;
  std::vector<std::vector<int>> coefficients;

  std::size_t size() const noexcept { return coefficients.size(); }
  /// The forms as polynomials in root_vars(n).
  std::vector<MPoly> forms() const;
};

YRootSet y_roots(int n, const Limits& limits = {});

/// s1..sn with deg s_i = i.
VarTable s_vars(int n);
/// u2..un with deg u_j = j.
VarTable u_vars(int n);

/// s_r = sigma_r(y_1..y_N) written in the e-basis:
///   s_r = lead_r e_r + sum_{lambda in P_r, lambda != (r)} lower_r[lambda] e_lambda.
struct SExpansion {
  int n = 0;
  std::vector<MPoly> s;                                            // in elementary_vars(n)
  std::vector<Rational> lead;                                      // lead_1..lead_rmax
  std::vector<std::map<Partition, Rational, PartitionLess>> lower;  // d_{r,lambda}
};

SExpansion s_in_elementary(int n, int r_max, const Limits& limits = {});

/// psi_i (in s_vars) with e_i = psi_i(s_1..s_n), phi_i (in u_vars) with
/// cbar_i = phi_i(c_2(F)..c_n(F)), and the leading coefficients lead_r.
struct UniversalPolys {
  int n = 0;
  int N = 0;
  std::vector<MPoly> psi;  // psi_1..psi_n
  std::vector<MPoly> phi;  // phi_2..phi_n
  std::vector<Rational> lead;
  std::vector<std::map<Partition, Rational, PartitionLess>> lower;
};

/// Back-substitution of the triangular system, r = 1..n. Verifies
/// psi_i(s(e)) = e_i before returning; throws InconsistencyError on a zero
/// leading coefficient or a failed verification.
UniversalPolys solve_psi(int n, const Limits& limits = {});

/// phi_i = psi_i with s_1 -> 0 and s_j -> u_j.
std::vector<MPoly> compute_phi(const UniversalPolys& psi_part);

/// solve_psi followed by compute_phi; memoized per (n, limits.max_rank).
const UniversalPolys& universal_polys(int n, const Limits& limits = {});

/// Evaluates phi_2..phi_n at the supplied classes u_2..u_n (all in one ring),
/// returning cbar_2..cbar_n of the Brauer-Severi scheme.
std::vector<MPoly> brauer_reduced(std::span<const MPoly> phi,
                                  std::span<const MPoly> pushforward_classes,
                                  const Reduction& reduce = {});
std::vector<MPoly> brauer_reduced(int n, std::span<const MPoly> pushforward_classes,
                                  const Reduction& reduce = {});

}  // namespace redchern
