#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "redchern/chern.hpp"
#include "redchern/mpoly.hpp"

namespace redchern {

/// Presentation of a truncated graded ring Q[generators]/(relations, deg > top).
struct ToyRingSpec {
  std::string id;
  VarTable generators;
  std::vector<MPoly> relations;   // each must be a single monomial over `generators`
  std::optional<int> top_degree;  // required unless every generator is nilpotent
};

/// Finite-dimensional graded commutative Q-algebra with monomial relations.
/// Elements are MPoly values over generators() kept in normal form (no term
/// divisible by a relation monomial, no term above top_degree()).
class ToyRing {
 public:
  static ToyRing make(const ToyRingSpec& spec);

  const std::string& id() const noexcept { return id_; }
  const VarTable& generators() const noexcept { return gens_; }
  int top_degree() const noexcept { return top_; }

  MPoly reduce(const MPoly& p) const;
  Reduction reducer() const;
  MPoly mul(const MPoly& a, const MPoly& b) const;
  MPoly zero() const { return MPoly(gens_); }
  MPoly one() const { return MPoly::constant(gens_, 1); }

  /// Standard monomials of the given degree (a basis of that graded piece).
  const std::vector<Exponents>& basis(int degree) const;
  int dimension(int degree) const;

  /// Substitutes `images` (elements of this ring) into q, in normal form.
  MPoly evaluate(const MPoly& q, std::span<const MPoly> images) const;

 private:
  bool is_standard(const Exponents& e) const;

  std::string id_;
  VarTable gens_;
  std::vector<Exponents> relations_;
  int top_ = 0;
  std::vector<std::vector<Exponents>> basis_;  // by degree 0..top
};

/// Chern classes of a bundle over a toy ring, plus the seed that drew them.
struct ToyBundle {
  ChernVector chern;
  std::uint64_t seed = 0;
};

/// Seeded element of the degree-d piece with small rational coefficients.
/// Deterministic across platforms (uses only raw mt19937_64 output).
MPoly random_element(const ToyRing& ring, int degree, std::mt19937_64& rng);

ToyBundle random_bundle(const ToyRing& ring, int n, std::uint64_t seed);

/// The ring H(X)[xi]/(xi^n + c_1 xi^{n-1} + ... + c_n) of the projectivization
/// of a bundle over a toy ring, with deg xi = 1.
class ProjectiveBundleRing {
 public:
  ProjectiveBundleRing(const ToyRing& base, const ToyBundle& bundle);

  const VarTable& vars() const noexcept { return vars_; }
  int rank() const noexcept { return rank_; }
  MPoly xi() const;
  /// xi^n + c_1 xi^{n-1} + ... + c_n as an (unreduced) element.
  MPoly relation() const;
  MPoly reduce(const MPoly& p) const;
  /// Highest degree with a nonzero piece when the free-basis property holds.
  int top_degree() const noexcept { return base_.top_degree() + rank_ - 1; }

  /// Dimension of the degree-d piece of the quotient, computed by exact
  /// linear algebra (degree-d monomials modulo the degree-d part of the ideal).
  int dimension(int d) const;
  /// sum_{i=0}^{n-1} dim_base(d - i): the count for a free module on 1..xi^{n-1}.
  int free_dimension(int d) const;

 private:
  MPoly base_reduce(const MPoly& p) const;

  ToyRing base_;
  int rank_;
  VarTable vars_;
  std::vector<MPoly> classes_;  // c_1..c_n embedded in vars_
};

/// Universal polynomials consumed by the toy-ring checks. A perturbed copy of
/// this set drives the negative controls.
struct FormulaSet {
  int n = 0;
  std::vector<MPoly> cbar;        // closed formula, r = 1..n
  std::vector<MPoly> cbar_roots;  // root definition, r = 1..n
  std::vector<MPoly> sym_power;   // c_1(F) .. c_n(F)
  std::vector<MPoly> phi;         // phi_2 .. phi_n

  static FormulaSet build(int n);
};

enum class Identity {
  formula_agreement,
  twist,
  c1_zero,
  phi_roundtrip,
  c1f_zero,
  projective_bundle,
};

const char* identity_tag(Identity id);
/// Throws UsageError on an unknown tag.
Identity identity_from_tag(std::string_view tag);
const std::vector<Identity>& all_toy_identities();

struct CheckReport {
  std::string identity;
  std::string ring;
  int rank = 0;
  std::optional<std::uint64_t> seed;
  bool pass = false;
  std::optional<MPoly> witness;  // lowest-degree graded piece of lhs - rhs on failure
};

/// Runs one universal identity on a toy bundle. `line` is the first Chern
/// class of the twisting line bundle (used by Identity::twist).
CheckReport check_identity(Identity id, const ToyRing& ring, const ToyBundle& bundle,
                           const MPoly& line, const FormulaSet& formulas);

/// The fixed catalogue of toy rings used by the suites.
std::vector<ToyRing> standard_toy_rings();

}  // namespace redchern
