#include "redchern/symfun.hpp"

#include <algorithm>
#include <numeric>

#include "redchern/errors.hpp"

namespace redchern {

namespace {

Partition partition_from_exponents(const Exponents& e) {
  std::vector<int> parts;
  for (int x : e) {
    if (x > 0) parts.push_back(x);
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

// Exponent vector over elementary_vars(n) of e_lambda: multiplicity of part k at slot k-1.
Exponents elementary_exponents(const Partition& lambda, int n) {
  Exponents e(static_cast<std::size_t>(n), 0);
  for (int part : lambda.parts()) ++e[static_cast<std::size_t>(part - 1)];
  return e;
}

void require_root_like(const MPoly& p) {
  for (const auto& v : p.vars().variables()) {
    if (v.degree != 1) {
      throw UsageError("symmetric-function input must be in degree-1 variables, got '" +
                       v.name + "'");
    }
  }
}

bool invariant_under(const MPoly& p, const std::vector<int>& perm) {
  Exponents moved(perm.size());
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < perm.size(); ++i) moved[static_cast<std::size_t>(perm[i])] = e[i];
    const auto it = p.terms().find(moved);
    if (it == p.terms().end() || it->second != c) return false;
  }
  return true;
}

constexpr int kFullOrbitCheckMaxVars = 6;

}  // namespace

// --------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) {
      throw UsageError("partition parts must be weakly decreasing");
    }
    weight_ += parts_[i];
  }
}

bool PartitionLess::operator()(const Partition& a, const Partition& b) const {
  if (a.weight() != b.weight()) return a.weight() < b.weight();
  return std::lexicographical_compare(a.parts().begin(), a.parts().end(), b.parts().begin(),
                                      b.parts().end());
}

std::vector<Partition> partitions_of(int d, int max_parts) {
  if (d < 0 || max_parts < 1) throw UsageError("partitions_of needs d >= 0 and max_parts >= 1");
  std::vector<Partition> out;
  std::vector<int> current;
  // Depth-first with the largest admissible part tried first, which yields
  // descending lexicographic order directly.
  const auto recurse = [&](auto&& self, int remaining, int cap) -> void {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    if (static_cast<int>(current.size()) == max_parts) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.push_back(part);
      self(self, remaining - part, part);
      current.pop_back();
    }
  };
  recurse(recurse, d, d);
  return out;
}

std::vector<std::vector<int>> weak_compositions(int total, int parts) {
  if (total < 0 || parts < 1) throw UsageError("weak_compositions needs total >= 0, parts >= 1");
  std::vector<std::vector<int>> out;
  std::vector<int> current(static_cast<std::size_t>(parts), 0);
  const auto recurse = [&](auto&& self, std::size_t slot, int remaining) -> void {
    if (slot + 1 == current.size()) {
      current[slot] = remaining;
      out.push_back(current);
      return;
    }
    for (int m = 0; m <= remaining; ++m) {
      current[slot] = m;
      self(self, slot + 1, remaining - m);
    }
  };
  recurse(recurse, 0, total);
  return out;
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> parts;
  for (int j = 1; j <= lambda.largest(); ++j) {
    int count = 0;
    for (int part : lambda.parts()) count += part >= j ? 1 : 0;
    parts.push_back(count);
  }
  return Partition(std::move(parts));
}

std::strong_ordering compare_order(const Partition& a, const Partition& b) {
  if (a.weight() != b.weight()) {
    throw UsageError("compare_order is only defined for partitions of equal weight");
  }
  return std::lexicographical_compare_three_way(a.parts().begin(), a.parts().end(),
                                                b.parts().begin(), b.parts().end());
}

// ------------------------------------------------------------------- bases

VarTable root_vars(int n, std::string_view prefix) { return VarTable::indexed(prefix, n); }

VarTable elementary_vars(int n, std::string_view prefix) {
  return VarTable::indexed(prefix, n, 1, true);
}

MPoly monomial_symmetric(const Partition& lambda, int n) {
  if (lambda.length() > n) throw UsageError("partition has more parts than variables");
  const VarTable vars = root_vars(n);
  Exponents e(static_cast<std::size_t>(n), 0);
  std::copy(lambda.parts().begin(), lambda.parts().end(), e.begin());
  std::sort(e.begin(), e.end());
  MPoly out(vars);
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MPoly elementary_symmetric(int r, int n) {
  const VarTable vars = root_vars(n);
  if (r < 0 || r > n) return MPoly(vars);
  Exponents e(static_cast<std::size_t>(n), 0);
  std::fill(e.end() - r, e.end(), 1);
  MPoly out(vars);
  do {
    out.add_term(e, 1);
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MPoly elementary_product(const Partition& lambda, int n) {
  MPoly out = MPoly::constant(root_vars(n), 1);
  for (int part : lambda.parts()) {
    if (part > n) return MPoly(root_vars(n));
    out *= elementary_symmetric(part, n);
  }
  return out;
}

std::vector<MPoly> elementary_of(std::span<const MPoly> values, int cap, const VarTable& table) {
  if (cap < 0) throw UsageError("elementary_of needs cap >= 0");
  std::vector<MPoly> sigma(static_cast<std::size_t>(cap) + 1, MPoly(table));
  sigma[0] = MPoly::constant(table, 1);
  for (const auto& v : values) {
    if (!(v.vars() == table)) throw UsageError("elementary_of values must share the table");
    if (v.is_zero()) continue;
    for (int k = cap; k >= 1; --k) {
      const auto ku = static_cast<std::size_t>(k);
      if (!sigma[ku - 1].is_zero()) sigma[ku] += sigma[ku - 1] * v;
    }
  }
  return sigma;
}

MPoly SymPolyInBasis::expand() const {
  MPoly out(root_vars(n));
  for (const auto& [lambda, c] : coeffs) {
    out += c * (basis == Basis::monomial ? monomial_symmetric(lambda, n)
                                         : elementary_product(lambda, n));
  }
  return out;
}

// ------------------------------------------------------------- symmetry

std::optional<std::vector<int>> symmetry_witness(const MPoly& p) {
  const int n = static_cast<int>(p.vars().size());
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  if (n <= kFullOrbitCheckMaxVars) {
    while (std::next_permutation(perm.begin(), perm.end())) {
      if (!invariant_under(p, perm)) return perm;
    }
    return std::nullopt;
  }
  // Adjacent transpositions generate the symmetric group.
  for (int i = 0; i + 1 < n; ++i) {
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(i) + 1]);
    if (!invariant_under(p, perm)) return perm;
  }
  return std::nullopt;
}

void require_symmetric(const MPoly& p) {
  if (auto w = symmetry_witness(p)) {
    std::string text = "polynomial is not symmetric; witness permutation [";
    for (std::size_t i = 0; i < w->size(); ++i) {
      text += (i ? "," : "") + std::to_string((*w)[i]);
    }
    throw NotSymmetricError(text + "]", std::move(*w));
  }
}

SymPolyInBasis monomial_coefficients(const MPoly& p) {
  require_symmetric(p);
  SymPolyInBasis out{Basis::monomial, static_cast<int>(p.vars().size()), {}};
  for (const auto& [e, c] : p.terms()) {
    if (std::is_sorted(e.begin(), e.end(), std::greater<>())) {
      out.coeffs.emplace(partition_from_exponents(e), c);
    }
  }
  return out;
}

SymPolyInBasis elementary_to_monomial(const Partition& lambda, int n) {
  if (lambda.length() > n || lambda.largest() > n) {
    throw UsageError("elementary_to_monomial needs length and largest part <= n");
  }
  return monomial_coefficients(elementary_product(lambda, n));
}

MPoly express_in_elementary(const MPoly& p) {
  require_root_like(p);
  require_symmetric(p);
  const int n = static_cast<int>(p.vars().size());
  MPoly work = relabel(p, root_vars(n));
  MPoly result(elementary_vars(n));
  std::map<Partition, MPoly, PartitionLess> cache;
  while (!work.is_zero()) {
    // The lex-largest monomial of a symmetric polynomial has weakly
    // decreasing exponents alpha, and e_{alpha'} has leading monomial x^alpha.
    const auto& [alpha, c] = *work.terms().rbegin();
    if (!std::is_sorted(alpha.begin(), alpha.end(), std::greater<>())) {
      throw InconsistencyError("leading monomial of a symmetric polynomial is not a partition");
    }
    const Partition mu = conjugate(partition_from_exponents(alpha));
    auto it = cache.find(mu);
    if (it == cache.end()) it = cache.emplace(mu, elementary_product(mu, n)).first;
    const Rational coeff = c;
    result.add_term(elementary_exponents(mu, n), coeff);
    work -= coeff * it->second;
  }
  return result;
}

SymPolyInBasis elementary_coefficients(const MPoly& p) {
  const MPoly q = express_in_elementary(p);
  SymPolyInBasis out{Basis::elementary, static_cast<int>(p.vars().size()), {}};
  for (const auto& [e, c] : q.terms()) out.coeffs.emplace(partition_from_multiplicities(e), c);
  return out;
}

Partition partition_from_multiplicities(const Exponents& mult) {
  std::vector<int> parts;
  for (std::size_t k = mult.size(); k-- > 0;) {
    parts.insert(parts.end(), static_cast<std::size_t>(mult[k]), static_cast<int>(k + 1));
  }
  return Partition(std::move(parts));
}

MPoly expand_elementary(const MPoly& q) {
  const int n = static_cast<int>(q.vars().size());
  std::vector<MPoly> images;
  images.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) images.push_back(elementary_symmetric(i, n));
  return substitute(q, images);
}

}  // namespace redchern
