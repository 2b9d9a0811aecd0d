#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "redchern/rational.hpp"

namespace redchern {

struct Variable {
  std::string name;
  int degree = 1;

  bool operator==(const Variable&) const = default;
};

/// Ordered list of named graded variables shared by a family of polynomials.
/// Copies are cheap (shared, immutable storage).
class VarTable {
 public:
  VarTable();
  explicit VarTable(std::vector<Variable> vars);

  /// Variables named prefix<i> for i = first_index, first_index+1, ...; degree
  /// i when graded_by_index, else 1.
  static VarTable indexed(std::string_view prefix, int count, int first_index = 1,
                          bool graded_by_index = false);

  std::size_t size() const noexcept { return vars_->size(); }
  bool empty() const noexcept { return vars_->empty(); }
  const Variable& operator[](std::size_t i) const { return (*vars_)[i]; }
  const std::vector<Variable>& variables() const noexcept { return *vars_; }
  std::optional<std::size_t> index_of(std::string_view name) const;

  /// This table followed by `extra` (names must not clash).
  VarTable extended(std::span<const Variable> extra) const;

  friend bool operator==(const VarTable& a, const VarTable& b) {
    return a.vars_ == b.vars_ || *a.vars_ == *b.vars_;
  }

 private:
  std::shared_ptr<const std::vector<Variable>> vars_;
};

/// Dense exponent vector, one entry per variable of the table.
using Exponents = std::vector<int>;

/// Sparse multivariate polynomial over Q in a VarTable.
///
/// Terms are kept in a map keyed by exponent vector (plain lexicographic
/// order) and never store a zero coefficient, so two polynomials over the
/// same table are equal iff their term maps are identical. The canonical
/// presentation order used for output is provided by canonical_terms().
class MPoly {
 public:
  using TermMap = std::map<Exponents, Rational>;

  MPoly();  // zero over the empty table
  explicit MPoly(VarTable vars);

  static MPoly constant(VarTable vars, const Rational& c);
  static MPoly variable(VarTable vars, std::size_t index);
  static MPoly variable(VarTable vars, std::string_view name);
  static MPoly monomial(VarTable vars, Exponents exps, const Rational& c = 1);

  const VarTable& vars() const noexcept { return vars_; }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;

  int weighted_degree(const Exponents& exps) const;
  /// Largest weighted degree of a term; nullopt for the zero polynomial.
  std::optional<int> degree() const;
  /// Smallest weighted degree of a term; nullopt for zero.
  std::optional<int> low_degree() const;

  /// Terms in canonical order: weighted degree descending; ties broken by
  /// comparing exponents from the last variable towards the first, larger first.
  std::vector<std::pair<Exponents, Rational>> canonical_terms() const;

  MPoly operator-() const;
  MPoly& operator+=(const MPoly& other);
  MPoly& operator-=(const MPoly& other);
  MPoly& operator*=(const MPoly& other);
  MPoly& operator*=(const Rational& c);

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }
  friend MPoly operator*(const Rational& c, MPoly a) { return a *= c; }

  friend bool operator==(const MPoly& a, const MPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Adds c * x^exps; drops the term if the sum cancels.
  void add_term(const Exponents& exps, const Rational& c);

 private:
  void require_same_table(const MPoly& other, const char* op) const;

  VarTable vars_;
  TermMap terms_;
};

/// Product with every term of weighted degree > cap discarded. nullopt = full product.
MPoly mul_truncated(const MPoly& p, const MPoly& q, std::optional<int> cap);

/// Terms of weighted degree exactly d.
MPoly graded_component(const MPoly& p, int d);

/// Terms of weighted degree <= cap.
MPoly truncate(const MPoly& p, int cap);

MPoly pow(const MPoly& p, unsigned k, std::optional<int> cap = std::nullopt);

/// Post-multiplication normal form for substitution into a quotient ring.
using Reduction = std::function<MPoly(const MPoly&)>;

/// Ring homomorphism sending variable i of p's table to images[i]. All images
/// must share one table. `reduce` (if set) is applied after every product.
MPoly substitute(const MPoly& p, std::span<const MPoly> images,
                 const Reduction& reduce = {});

/// Same, keyed by variable name. Every variable occurring in p must be assigned.
/// `target` is the table of the images (needed when p is constant).
MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& assignment,
                 const VarTable& target);

/// Reinterprets p's exponent vectors in another table of the same size.
MPoly relabel(const MPoly& p, const VarTable& target);

/// Maps p into `target` by variable name; every variable of p that occurs
/// must exist in target with the same degree.
MPoly embed(const MPoly& p, const VarTable& target);

}  // namespace redchern
