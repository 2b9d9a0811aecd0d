#include "redchern/oracle.hpp"

#include <algorithm>

#include "redchern/errors.hpp"
#include "redchern/universal.hpp"

namespace redchern {

namespace {

bool divides(const Exponents& m, const Exponents& e) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] > e[i]) return false;
  }
  return true;
}

// Rank of a dense rational matrix by fraction-exact Gaussian elimination.
int matrix_rank(std::vector<std::vector<Rational>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  int rank = 0;
  for (std::size_t col = 0; col < cols && static_cast<std::size_t>(rank) < rows.size(); ++col) {
    const auto r0 = static_cast<std::size_t>(rank);
    std::size_t pivot = r0;
    while (pivot < rows.size() && rows[pivot][col] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r0], rows[pivot]);
    for (std::size_t r = r0 + 1; r < rows.size(); ++r) {
      if (rows[r][col] == 0) continue;
      const Rational factor = rows[r][col] / rows[r0][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[r0][c];
    }
    ++rank;
  }
  return rank;
}

std::optional<MPoly> first_difference(const MPoly& lhs, const MPoly& rhs) {
  const MPoly diff = lhs - rhs;
  if (diff.is_zero()) return std::nullopt;
  return graded_component(diff, *diff.low_degree());
}

Rational random_coefficient(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 7) - 3;
  const long den = static_cast<long>(rng() % 3) + 1;
  return make_rational(num, den);
}

}  // namespace

// ------------------------------------------------------------------ ToyRing

ToyRing ToyRing::make(const ToyRingSpec& spec) {
  ToyRing ring;
  ring.id_ = spec.id;
  ring.gens_ = spec.generators;
  for (const auto& rel : spec.relations) {
    if (!(rel.vars() == spec.generators)) {
      throw UsageError("relation is not over the ring's generators");
    }
    if (rel.is_zero()) throw UsageError("zero relation");
    if (*rel.degree() != *rel.low_degree()) throw UsageError("inhomogeneous relation");
    if (rel.size() != 1) throw UsageError("only monomial relations are supported");
    const Exponents& m = rel.terms().begin()->first;
    if (*rel.degree() == 0) throw UsageError("relation must have positive degree");
    ring.relations_.push_back(m);
  }

  if (spec.top_degree) {
    if (*spec.top_degree < 0) throw UsageError("top degree must be non-negative");
    ring.top_ = *spec.top_degree;
  } else {
    // Without a truncation every generator must be nilpotent.
    int top = 0;
    for (std::size_t g = 0; g < spec.generators.size(); ++g) {
      std::optional<int> power;
      for (const auto& m : ring.relations_) {
        const bool pure = std::all_of(m.begin(), m.end(), [&, i = std::size_t{0}](int e) mutable {
          return i++ == g || e == 0;
        });
        if (pure && (!power || m[g] < *power)) power = m[g];
      }
      if (!power) {
        throw UsageError("generator '" + spec.generators[g].name +
                         "' is not nilpotent; give a top degree");
      }
      top += (*power - 1) * spec.generators[g].degree;
    }
    ring.top_ = top;
  }

  ring.basis_.assign(static_cast<std::size_t>(ring.top_) + 1, {});
  const std::size_t ng = ring.gens_.size();
  Exponents e(ng, 0);
  const auto recurse = [&](auto&& self, std::size_t slot, int degree) -> void {
    if (slot == ng) {
      if (ring.is_standard(e)) ring.basis_[static_cast<std::size_t>(degree)].push_back(e);
      return;
    }
    for (int k = 0; degree + k * ring.gens_[slot].degree <= ring.top_; ++k) {
      e[slot] = k;
      self(self, slot + 1, degree + k * ring.gens_[slot].degree);
    }
    e[slot] = 0;
  };
  recurse(recurse, 0, 0);
  for (auto& piece : ring.basis_) std::sort(piece.begin(), piece.end());
  return ring;
}

bool ToyRing::is_standard(const Exponents& e) const {
  return std::none_of(relations_.begin(), relations_.end(),
                      [&](const Exponents& m) { return divides(m, e); });
}

MPoly ToyRing::reduce(const MPoly& p) const {
  if (!(p.vars() == gens_)) throw UsageError("element is not in ring '" + id_ + "'");
  MPoly out(gens_);
  for (const auto& [e, c] : p.terms()) {
    if (p.weighted_degree(e) <= top_ && is_standard(e)) out.add_term(e, c);
  }
  return out;
}

Reduction ToyRing::reducer() const {
  return [ring = *this](const MPoly& p) { return ring.reduce(p); };
}

MPoly ToyRing::mul(const MPoly& a, const MPoly& b) const {
  return reduce(mul_truncated(a, b, top_));
}

const std::vector<Exponents>& ToyRing::basis(int degree) const {
  static const std::vector<Exponents> empty;
  if (degree < 0 || degree > top_) return empty;
  return basis_[static_cast<std::size_t>(degree)];
}

int ToyRing::dimension(int degree) const { return static_cast<int>(basis(degree).size()); }

MPoly ToyRing::evaluate(const MPoly& q, std::span<const MPoly> images) const {
  for (const auto& img : images) {
    if (!(img.vars() == gens_)) throw UsageError("image is not in ring '" + id_ + "'");
  }
  if (images.empty()) return reduce(MPoly::constant(gens_, q.constant_term()));
  return substitute(q, images, reducer());
}

MPoly random_element(const ToyRing& ring, int degree, std::mt19937_64& rng) {
  MPoly out = ring.zero();
  for (const auto& e : ring.basis(degree)) out.add_term(e, random_coefficient(rng));
  return out;
}

ToyBundle random_bundle(const ToyRing& ring, int n, std::uint64_t seed) {
  if (n < 1) throw UsageError("bundle rank must be at least 1");
  std::mt19937_64 rng(seed);
  ToyBundle b{{n, {}}, seed};
  for (int i = 1; i <= n; ++i) b.chern.classes.push_back(random_element(ring, i, rng));
  return b;
}

// ---------------------------------------------------- ProjectiveBundleRing

ProjectiveBundleRing::ProjectiveBundleRing(const ToyRing& base, const ToyBundle& bundle)
    : base_(base), rank_(bundle.chern.rank) {
  if (rank_ < 1) throw UsageError("bundle rank must be at least 1");
  const Variable xi{"xi", 1};
  vars_ = base.generators().extended(std::span(&xi, 1));
  for (const auto& c : bundle.chern.classes) {
    if (!(c.vars() == base.generators())) throw UsageError("bundle does not live over the ring");
    classes_.push_back(embed(c, vars_));
  }
}

MPoly ProjectiveBundleRing::xi() const { return MPoly::variable(vars_, vars_.size() - 1); }

MPoly ProjectiveBundleRing::relation() const {
  MPoly rel = pow(xi(), static_cast<unsigned>(rank_));
  for (int i = 1; i <= rank_; ++i) {
    rel += classes_[static_cast<std::size_t>(i - 1)] * pow(xi(), static_cast<unsigned>(rank_ - i));
  }
  return rel;
}

MPoly ProjectiveBundleRing::base_reduce(const MPoly& p) const {
  const std::size_t ng = base_.generators().size();
  MPoly out(vars_);
  for (const auto& [e, c] : p.terms()) {
    const Exponents b(e.begin(), e.begin() + static_cast<std::ptrdiff_t>(ng));
    const MPoly base_part = MPoly::monomial(base_.generators(), b);
    if (!base_.reduce(base_part).is_zero()) out.add_term(e, c);
  }
  return out;
}

MPoly ProjectiveBundleRing::reduce(const MPoly& p) const {
  if (!(p.vars() == vars_)) throw UsageError("element is not in the projective bundle ring");
  const std::size_t xi_slot = vars_.size() - 1;
  // xi^n = -(c_1 xi^{n-1} + ... + c_n)
  MPoly tail(vars_);
  for (int i = 1; i <= rank_; ++i) {
    tail -= classes_[static_cast<std::size_t>(i - 1)] * pow(xi(), static_cast<unsigned>(rank_ - i));
  }
  MPoly work = base_reduce(p);
  for (;;) {
    auto high = std::find_if(work.terms().begin(), work.terms().end(),
                             [&](const auto& t) { return t.first[xi_slot] >= rank_; });
    if (high == work.terms().end()) return work;
    Exponents lowered = high->first;
    lowered[xi_slot] -= rank_;
    const Rational c = high->second;
    MPoly replacement = MPoly::monomial(vars_, lowered, c) * tail;
    work.add_term(high->first, -c);
    work = base_reduce(work + replacement);
  }
}

int ProjectiveBundleRing::dimension(int d) const {
  if (d < 0) return 0;
  // Monomials b * xi^k of degree d with b a standard base monomial.
  std::vector<Exponents> space;
  std::map<Exponents, std::size_t> index;
  for (int bd = 0; bd <= std::min(d, base_.top_degree()); ++bd) {
    for (const auto& b : base_.basis(bd)) {
      Exponents e = b;
      e.push_back(d - bd);
      index.emplace(e, space.size());
      space.push_back(std::move(e));
    }
  }
  std::vector<std::vector<Rational>> rows;
  const MPoly rel = relation();
  const int gd = d - rank_;
  for (int bd = 0; gd >= 0 && bd <= std::min(gd, base_.top_degree()); ++bd) {
    for (const auto& b : base_.basis(bd)) {
      Exponents e = b;
      e.push_back(gd - bd);
      const MPoly g = base_reduce(MPoly::monomial(vars_, e) * rel);
      std::vector<Rational> row(space.size());
      for (const auto& [ge, gc] : g.terms()) {
        const auto it = index.find(ge);
        if (it == index.end()) throw InconsistencyError("ideal element left the graded piece");
        row[it->second] = gc;
      }
      rows.push_back(std::move(row));
    }
  }
  return static_cast<int>(space.size()) - matrix_rank(std::move(rows));
}

int ProjectiveBundleRing::free_dimension(int d) const {
  int total = 0;
  for (int i = 0; i < rank_; ++i) total += base_.dimension(d - i);
  return total;
}

// -------------------------------------------------------------- identities

FormulaSet FormulaSet::build(int n) {
  FormulaSet f;
  f.n = n;
  for (int r = 1; r <= n; ++r) {
    f.cbar.push_back(reduced_chern_formula(n, r));
    f.cbar_roots.push_back(reduced_chern_roots(n, r));
  }
  f.sym_power = sym_power_det_inverse_chern(n, n);
  f.phi = universal_polys(n).phi;
  return f;
}

const char* identity_tag(Identity id) {
  switch (id) {
    case Identity::formula_agreement: return "formula-agreement";
    case Identity::twist: return "twist";
    case Identity::c1_zero: return "c1-zero";
    case Identity::phi_roundtrip: return "phi-roundtrip";
    case Identity::c1f_zero: return "c1F-zero";
    case Identity::projective_bundle: return "projective-bundle";
  }
  return "unknown";
}

Identity identity_from_tag(std::string_view tag) {
  for (Identity id : all_toy_identities()) {
    if (tag == identity_tag(id)) return id;
  }
  throw UsageError("unknown identity tag '" + std::string(tag) + "'");
}

const std::vector<Identity>& all_toy_identities() {
  static const std::vector<Identity> ids = {
      Identity::formula_agreement, Identity::twist,    Identity::c1_zero,
      Identity::phi_roundtrip,     Identity::c1f_zero, Identity::projective_bundle};
  return ids;
}

CheckReport check_identity(Identity id, const ToyRing& ring, const ToyBundle& bundle,
                           const MPoly& line, const FormulaSet& formulas) {
  const int n = bundle.chern.rank;
  if (formulas.n != n) throw UsageError("formula set rank differs from bundle rank");
  CheckReport report{identity_tag(id), ring.id(), n, bundle.seed, true, std::nullopt};
  const auto eval = [&](const MPoly& q, const ChernVector& cv) {
    return ring.evaluate(q, cv.classes);
  };
  const auto compare = [&](const MPoly& lhs, const MPoly& rhs) {
    if (!report.pass) return;
    if (auto w = first_difference(lhs, rhs)) {
      report.pass = false;
      report.witness = std::move(w);
    }
  };
  const ChernVector& cv = bundle.chern;

  switch (id) {
    case Identity::formula_agreement:
      for (int r = 0; r < n; ++r) {
        const auto ru = static_cast<std::size_t>(r);
        compare(eval(formulas.cbar[ru], cv), eval(formulas.cbar_roots[ru], cv));
      }
      break;
    case Identity::twist: {
      const ChernVector twisted = twist(cv, line, ring.reducer());
      for (const auto& cbar : formulas.cbar) compare(eval(cbar, twisted), eval(cbar, cv));
      break;
    }
    case Identity::c1_zero: {
      ChernVector special = cv;
      special.classes[0] = ring.zero();
      for (int r = 1; r <= n; ++r) {
        compare(eval(formulas.cbar[static_cast<std::size_t>(r - 1)], special), special.c(r));
      }
      break;
    }
    case Identity::phi_roundtrip: {
      std::vector<MPoly> u;
      for (int j = 2; j <= n; ++j) u.push_back(eval(formulas.sym_power[static_cast<std::size_t>(j - 1)], cv));
      const auto reduced = brauer_reduced(formulas.phi, u, ring.reducer());
      for (int i = 2; i <= n; ++i) {
        compare(reduced[static_cast<std::size_t>(i - 2)],
                eval(formulas.cbar[static_cast<std::size_t>(i - 1)], cv));
      }
      break;
    }
    case Identity::c1f_zero:
      compare(eval(formulas.sym_power[0], cv), ring.zero());
      break;
    case Identity::projective_bundle: {
      const ProjectiveBundleRing pb(ring, bundle);
      const MPoly residue = pb.reduce(pb.relation());
      compare(residue, MPoly(pb.vars()));
      for (int d = 0; report.pass && d <= pb.top_degree() + 1; ++d) {
        if (pb.dimension(d) != pb.free_dimension(d)) report.pass = false;
      }
      break;
    }
  }
  return report;
}

std::vector<ToyRing> standard_toy_rings() {
  const auto power = [](const VarTable& g, std::size_t i, int k) {
    Exponents e(g.size(), 0);
    e[i] = k;
    return MPoly::monomial(g, e);
  };
  std::vector<ToyRing> rings;
  rings.push_back(ToyRing::make({"Q", VarTable(), {}, 0}));
  {
    const VarTable g({{"h", 2}});
    rings.push_back(ToyRing::make({"P2-top", g, {power(g, 0, 3)}, std::nullopt}));
  }
  {
    const VarTable g({{"h", 1}});
    rings.push_back(ToyRing::make({"P4", g, {power(g, 0, 5)}, std::nullopt}));
  }
  {
    const VarTable g({{"h1", 1}, {"h2", 1}});
    rings.push_back(
        ToyRing::make({"curve-x-curve", g, {power(g, 0, 2), power(g, 1, 2)}, std::nullopt}));
  }
  {
    const VarTable g({{"a", 1}, {"b", 1}});
    rings.push_back(ToyRing::make({"P2-x-P2", g, {power(g, 0, 3), power(g, 1, 3)}, std::nullopt}));
  }
  {
    const VarTable g({{"a", 1}, {"b", 2}});
    rings.push_back(ToyRing::make({"mixed", g, {power(g, 0, 3), power(g, 1, 2)}, std::nullopt}));
  }
  {
    const VarTable g({{"g1", 1}, {"g2", 1}, {"g3", 2}});
    rings.push_back(ToyRing::make({"free-trunc4", g, {}, 4}));
  }
  return rings;
}

}  // namespace redchern
