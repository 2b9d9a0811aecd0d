#pragma once

#include <compare>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "redchern/mpoly.hpp"
#include "redchern/rational.hpp"

namespace redchern {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// (weight 0) is a legal value and stands for the constant 1.
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  std::span<const int> parts() const noexcept { return parts_; }
  int weight() const noexcept { return weight_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int largest() const noexcept { return parts_.empty() ? 0 : parts_.front(); }
  int operator[](std::size_t i) const { return parts_[i]; }

  bool operator==(const Partition&) const = default;

 private:
  std::vector<int> parts_;
  int weight_ = 0;
};

/// Container order: weight ascending, then parts lexicographically.
/// (Use compare_order to rank partitions of equal weight.)
struct PartitionLess {
  bool operator()(const Partition& a, const Partition& b) const;
};

/// All partitions of d with at most max_parts parts, largest first under compare_order.
std::vector<Partition> partitions_of(int d, int max_parts);

/// All (m_1..m_parts) with m_i >= 0 and sum m_i = total, lexicographically ascending.
std::vector<std::vector<int>> weak_compositions(int total, int parts);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// Total order on partitions of one weight: lexicographic on the part
/// sequence, largest parts first. Throws UsageError on weight mismatch.
std::strong_ordering compare_order(const Partition& a, const Partition& b);

/// x1..xn, all of degree 1.
VarTable root_vars(int n, std::string_view prefix = "x");
/// e1..en with deg e_i = i.
VarTable elementary_vars(int n, std::string_view prefix = "e");

/// m_lambda(x1..xn): sum over distinct permutations of the exponent vector.
MPoly monomial_symmetric(const Partition& lambda, int n);

/// sigma_r(x1..xn) in root_vars(n). Zero when r > n.
MPoly elementary_symmetric(int r, int n);

/// e_lambda = prod_i sigma_{lambda_i}(x1..xn). Zero when lambda_1 > n.
MPoly elementary_product(const Partition& lambda, int n);

/// Graded pieces [sigma_0, ..., sigma_cap] of prod_i (1 + values[i]),
/// i.e. the elementary symmetric functions of arbitrary ring elements.
/// All values must share one table; cap bounds the number of factors per term.
std::vector<MPoly> elementary_of(std::span<const MPoly> values, int cap,
                                 const VarTable& table);

enum class Basis { monomial, elementary };

/// Coordinates of a symmetric polynomial in the m- or e-basis.
struct SymPolyInBasis {
  Basis basis = Basis::monomial;
  int n = 0;  // number of underlying variables
  std::map<Partition, Rational, PartitionLess> coeffs;

  /// Expansion as a polynomial in root_vars(n).
  MPoly expand() const;

  bool operator==(const SymPolyInBasis&) const = default;
};

/// Permutation under which p is not invariant (variable i -> witness[i]),
/// or nullopt if p is symmetric in all its variables.
std::optional<std::vector<int>> symmetry_witness(const MPoly& p);

/// Throws NotSymmetricError (carrying the witness) if p is not symmetric.
void require_symmetric(const MPoly& p);

/// The m-basis coordinates of e_lambda in n variables.
SymPolyInBasis elementary_to_monomial(const Partition& lambda, int n);

/// m-basis coordinates of a symmetric polynomial.
SymPolyInBasis monomial_coefficients(const MPoly& p);

/// Rewrites a symmetric polynomial in x1..xn as a polynomial in
/// elementary_vars(n) by leading-term reduction.
MPoly express_in_elementary(const MPoly& p);

/// e-basis coordinates of a symmetric polynomial (inverse of SymPolyInBasis::expand).
SymPolyInBasis elementary_coefficients(const MPoly& p);

/// Partition with multiplicity mult[k] of part k+1 (exponents of an e-monomial).
Partition partition_from_multiplicities(const Exponents& mult);

/// Expands a polynomial in elementary_vars(n) back into root_vars(n).
MPoly expand_elementary(const MPoly& q);

}  // namespace redchern
