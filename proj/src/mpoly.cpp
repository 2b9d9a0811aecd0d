#include "redchern/mpoly.hpp"

#include <algorithm>
#include <set>

#include "redchern/errors.hpp"

namespace redchern {

// ---------------------------------------------------------------- VarTable

VarTable::VarTable() : vars_(std::make_shared<const std::vector<Variable>>()) {}

VarTable::VarTable(std::vector<Variable> vars) {
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (v.name.empty()) throw UsageError("variable with empty name");
    if (v.degree < 1) throw UsageError("variable '" + v.name + "' must have positive degree");
    if (!seen.insert(v.name).second) throw UsageError("duplicate variable '" + v.name + "'");
  }
  vars_ = std::make_shared<const std::vector<Variable>>(std::move(vars));
}

VarTable VarTable::indexed(std::string_view prefix, int count, int first_index,
                           bool graded_by_index) {
  std::vector<Variable> vars;
  vars.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int i = first_index; i < first_index + count; ++i) {
    vars.push_back({std::string(prefix) + std::to_string(i), graded_by_index ? i : 1});
  }
  return VarTable(std::move(vars));
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < vars_->size(); ++i) {
    if ((*vars_)[i].name == name) return i;
  }
  return std::nullopt;
}

VarTable VarTable::extended(std::span<const Variable> extra) const {
  std::vector<Variable> all = *vars_;
  all.insert(all.end(), extra.begin(), extra.end());
  return VarTable(std::move(all));
}

// ------------------------------------------------------------------- MPoly

MPoly::MPoly() = default;

MPoly::MPoly(VarTable vars) : vars_(std::move(vars)) {}

MPoly MPoly::constant(VarTable vars, const Rational& c) {
  MPoly p(std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

MPoly MPoly::variable(VarTable vars, std::size_t index) {
  if (index >= vars.size()) throw UsageError("variable index out of range");
  Exponents e(vars.size(), 0);
  e[index] = 1;
  return monomial(std::move(vars), std::move(e));
}

MPoly MPoly::variable(VarTable vars, std::string_view name) {
  const auto idx = vars.index_of(name);
  if (!idx) throw UsageError("unknown variable '" + std::string(name) + "'");
  return variable(std::move(vars), *idx);
}

MPoly MPoly::monomial(VarTable vars, Exponents exps, const Rational& c) {
  if (exps.size() != vars.size()) throw UsageError("exponent vector length mismatch");
  for (int e : exps) {
    if (e < 0) throw UsageError("negative exponent");
  }
  MPoly p(std::move(vars));
  p.add_term(exps, c);
  return p;
}

Rational MPoly::coefficient(const Exponents& exps) const {
  const auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational MPoly::constant_term() const { return coefficient(Exponents(vars_.size(), 0)); }

int MPoly::weighted_degree(const Exponents& exps) const {
  int d = 0;
  for (std::size_t i = 0; i < exps.size(); ++i) d += exps[i] * vars_[i].degree;
  return d;
}

std::optional<int> MPoly::degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int d = weighted_degree(e);
    if (!best || d > *best) best = d;
  }
  return best;
}

std::optional<int> MPoly::low_degree() const {
  std::optional<int> best;
  for (const auto& [e, c] : terms_) {
    const int d = weighted_degree(e);
    if (!best || d < *best) best = d;
  }
  return best;
}

std::vector<std::pair<Exponents, Rational>> MPoly::canonical_terms() const {
  std::vector<std::pair<Exponents, Rational>> out(terms_.begin(), terms_.end());
  std::sort(out.begin(), out.end(), [this](const auto& a, const auto& b) {
    const int da = weighted_degree(a.first);
    const int db = weighted_degree(b.first);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.first.rbegin(), b.first.rend(), a.first.rbegin(),
                                        a.first.rend());
  });
  return out;
}

void MPoly::add_term(const Exponents& exps, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exps, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

void MPoly::require_same_table(const MPoly& other, const char* op) const {
  if (!(vars_ == other.vars_)) {
    throw UsageError(std::string("mismatched variable tables in ") + op);
  }
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MPoly& MPoly::operator+=(const MPoly& other) {
  require_same_table(other, "addition");
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& other) {
  require_same_table(other, "subtraction");
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

MPoly& MPoly::operator*=(const MPoly& other) {
  *this = mul_truncated(*this, other, std::nullopt);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) { return mul_truncated(a, b, std::nullopt); }

// -------------------------------------------------------------- operations

MPoly mul_truncated(const MPoly& p, const MPoly& q, std::optional<int> cap) {
  if (!(p.vars() == q.vars())) throw UsageError("mismatched variable tables in product");
  if (cap && *cap < 0) throw UsageError("truncation cap must be non-negative");
  MPoly::TermMap acc;
  const std::size_t nv = p.vars().size();
  std::vector<int> qdeg;
  qdeg.reserve(q.size());
  for (const auto& [e, c] : q.terms()) qdeg.push_back(q.weighted_degree(e));

  Exponents sum(nv);
  Rational prod;
  for (const auto& [pe, pc] : p.terms()) {
    const int pd = p.weighted_degree(pe);
    if (cap && pd > *cap) continue;
    std::size_t j = 0;
    for (const auto& [qe, qc] : q.terms()) {
      if (cap && pd + qdeg[j++] > *cap) continue;
      for (std::size_t i = 0; i < nv; ++i) sum[i] = pe[i] + qe[i];
      prod = pc * qc;
      auto [it, inserted] = acc.try_emplace(sum, prod);
      if (!inserted) it->second += prod;
    }
  }
  MPoly out(p.vars());
  for (auto& [e, c] : acc) {
    if (c != 0) out.add_term(e, c);
  }
  return out;
}

MPoly graded_component(const MPoly& p, int d) {
  if (d < 0) throw UsageError("graded component degree must be non-negative");
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (p.weighted_degree(e) == d) out.add_term(e, c);
  }
  return out;
}

MPoly truncate(const MPoly& p, int cap) {
  MPoly out(p.vars());
  for (const auto& [e, c] : p.terms()) {
    if (p.weighted_degree(e) <= cap) out.add_term(e, c);
  }
  return out;
}

MPoly pow(const MPoly& p, unsigned k, std::optional<int> cap) {
  MPoly result = MPoly::constant(p.vars(), 1);
  MPoly base = p;
  while (k > 0) {
    if (k & 1U) result = mul_truncated(result, base, cap);
    k >>= 1U;
    if (k > 0) base = mul_truncated(base, base, cap);
  }
  return cap ? truncate(result, *cap) : result;
}

MPoly substitute(const MPoly& p, std::span<const MPoly> images, const Reduction& reduce) {
  if (images.size() != p.vars().size()) {
    throw UsageError("substitution needs one image per variable");
  }
  std::optional<VarTable> target;
  for (const auto& img : images) {
    if (!target) {
      target = img.vars();
    } else if (!(*target == img.vars())) {
      throw UsageError("substitution images must share one variable table");
    }
  }
  if (!target) target = VarTable();

  const auto apply = [&](MPoly x) { return reduce ? reduce(x) : x; };
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MPoly>> powers(images.size());
  const auto power_of = [&](std::size_t i, int k) -> const MPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(apply(MPoly::constant(*target, 1)));
    while (static_cast<int>(cache.size()) <= k) {
      cache.push_back(apply(cache.back() * images[i]));
    }
    return cache[static_cast<std::size_t>(k)];
  };

  MPoly out(*target);
  for (const auto& [e, c] : p.terms()) {
    MPoly term = MPoly::constant(*target, c);
    for (std::size_t i = 0; i < e.size() && !term.is_zero(); ++i) {
      if (e[i] > 0) term = apply(term * power_of(i, e[i]));
    }
    out += term;
  }
  return apply(out);
}

MPoly substitute(const MPoly& p, const std::map<std::string, MPoly>& assignment,
                 const VarTable& target) {
  std::vector<bool> used(p.vars().size(), false);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) used[i] = used[i] || e[i] > 0;
  }
  std::vector<MPoly> images;
  images.reserve(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    const auto it = assignment.find(p.vars()[i].name);
    if (it == assignment.end()) {
      if (used[i]) throw UsageError("unassigned variable '" + p.vars()[i].name + "'");
      images.emplace_back(target);
    } else {
      if (!(it->second.vars() == target)) {
        throw UsageError("substitution images must share one variable table");
      }
      images.push_back(it->second);
    }
  }
  return substitute(p, images);
}

MPoly relabel(const MPoly& p, const VarTable& target) {
  if (p.vars().size() != target.size()) throw UsageError("relabel needs tables of equal size");
  MPoly out(target);
  for (const auto& [e, c] : p.terms()) out.add_term(e, c);
  return out;
}

MPoly embed(const MPoly& p, const VarTable& target) {
  std::vector<std::optional<std::size_t>> where(p.vars().size());
  for (std::size_t i = 0; i < p.vars().size(); ++i) {
    where[i] = target.index_of(p.vars()[i].name);
    if (where[i] && target[*where[i]].degree != p.vars()[i].degree) {
      throw UsageError("degree mismatch embedding '" + p.vars()[i].name + "'");
    }
  }
  MPoly out(target);
  for (const auto& [e, c] : p.terms()) {
    Exponents te(target.size(), 0);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!where[i]) throw UsageError("variable '" + p.vars()[i].name + "' missing in target");
      te[*where[i]] = e[i];
    }
    out.add_term(te, c);
  }
  return out;
}

}  // namespace redchern
