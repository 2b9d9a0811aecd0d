#include "redchern/suites.hpp"

#include <algorithm>
#include <random>

#include "redchern/errors.hpp"
#include "redchern/symfun.hpp"
#include "redchern/universal.hpp"

namespace redchern {

namespace {

constexpr const char* kUniversalRing = "universal";

CheckReport symbolic(const char* identity, int n, const MPoly& lhs, const MPoly& rhs,
                     std::optional<std::uint64_t> seed = std::nullopt) {
  CheckReport r{identity, kUniversalRing, n, seed, true, std::nullopt};
  const MPoly diff = lhs - rhs;
  if (!diff.is_zero()) {
    r.pass = false;
    r.witness = graded_component(diff, *diff.low_degree());
  }
  return r;
}

CheckReport verdict(const char* identity, int n, bool ok) {
  return CheckReport{identity, kUniversalRing, n, std::nullopt, ok, std::nullopt};
}

FormulaSet formulas_for(int n, const SuiteOptions& options) {
  FormulaSet f = FormulaSet::build(n);
  if (options.fault) {
    // Corrupt the top-index polynomial, first canonical term.
    f = perturb(std::move(f), *options.fault, n, 0);
  }
  return f;
}

MPoly random_chern_poly(int n, int max_degree, std::mt19937_64& rng) {
  const VarTable vars = chern_vars(n);
  MPoly out(vars);
  for (int d = 0; d <= max_degree; ++d) {
    for (const auto& lambda : partitions_of(d, d == 0 ? 1 : d)) {
      if (lambda.largest() > n) continue;
      if (rng() % 2 == 0) continue;
      const long num = static_cast<long>(rng() % 11) - 5;
      const long den = static_cast<long>(rng() % 4) + 1;
      Exponents e(static_cast<std::size_t>(n), 0);
      for (int part : lambda.parts()) ++e[static_cast<std::size_t>(part - 1)];
      out.add_term(e, make_rational(num, den));
    }
  }
  return out;
}

void formula_agreement(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= o.max_rank; ++n) {
    const FormulaSet f = formulas_for(n, o);
    for (int r = 1; r <= n; ++r) {
      const auto ru = static_cast<std::size_t>(r - 1);
      out.push_back(symbolic("formula-agreement", n, f.cbar[ru], reduced_chern_roots(n, r)));
    }
  }
}

void twist_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= o.max_rank; ++n) {
    const FormulaSet f = formulas_for(n, o);
    const ChernVector twisted = twist(ChernVector::universal(n), "t");
    for (int r = 1; r <= n; ++r) {
      const MPoly& cbar = f.cbar[static_cast<std::size_t>(r - 1)];
      out.push_back(symbolic("twist", n, evaluate_chern(cbar, twisted), embed(cbar, twisted.ring())));
    }
  }
}

void c1_zero_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= o.max_rank; ++n) {
    const FormulaSet f = formulas_for(n, o);
    ChernVector special = ChernVector::universal(n);
    special.classes[0] = MPoly(chern_vars(n));
    for (int r = 1; r <= n; ++r) {
      out.push_back(symbolic("c1-zero", n,
                             evaluate_chern(f.cbar[static_cast<std::size_t>(r - 1)], special),
                             special.c(r)));
    }
  }
}

void uniqueness_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  const int top = std::min(o.max_rank, 4);
  for (int n = 2; n <= top; ++n) {
    const FormulaSet f = formulas_for(n, o);
    const ChernVector cv = ChernVector::universal(n);
    for (int j = 1; j <= n; ++j) {
      for (int k = 0; k < o.uniqueness_samples; ++k) {
        const std::uint64_t seed = o.seed * 1000003ULL + static_cast<std::uint64_t>(n * 100 + j) * 1000 + k;
        std::mt19937_64 rng(seed);
        const MPoly s = random_chern_poly(n, std::max(j - 1, 0), rng);
        const MPoly q = cv.c(j) + s * cv.c(1);
        out.push_back(symbolic("uniqueness", n, reduce_hom(q),
                               f.cbar[static_cast<std::size_t>(j - 1)], seed));
      }
    }
  }
}

void phi_roundtrip_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= o.max_rank; ++n) {
    const FormulaSet f = formulas_for(n, o);
    out.push_back(symbolic("c1F-zero", n, f.sym_power[0], MPoly(chern_vars(n))));
    const std::vector<MPoly> u(f.sym_power.begin() + 1, f.sym_power.end());
    const auto reduced = brauer_reduced(f.phi, u);
    for (int i = 2; i <= n; ++i) {
      out.push_back(symbolic("phi-roundtrip", n, reduced[static_cast<std::size_t>(i - 2)],
                             reduced_chern_roots(n, i)));
    }
  }
}

void positivity_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= o.max_rank; ++n) {
    const auto sigma = elementary_of(y_roots(n).forms(), n, root_vars(n));
    bool ok = true;
    for (int r = 1; r <= n && ok; ++r) {
      for (const auto& [lambda, c] : monomial_coefficients(sigma[static_cast<std::size_t>(r)]).coeffs) {
        if (c < 0) ok = false;
      }
    }
    out.push_back(verdict("positivity", n, ok));
  }
}

void triangularity_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  // e-to-m change of basis: coefficient of m_{lambda'} is 1, all others below it.
  for (int n = 2; n <= o.max_rank; ++n) {
    bool ok = true;
    for (int d = 1; d <= n && ok; ++d) {
      for (const auto& lambda : partitions_of(d, n)) {
        if (lambda.largest() > n) continue;
        const Partition top = conjugate(lambda);
        const auto m = elementary_to_monomial(lambda, n);
        for (const auto& [mu, c] : m.coeffs) {
          if (mu == top ? c != 1 : compare_order(mu, top) != std::strong_ordering::less) ok = false;
        }
      }
    }
    out.push_back(verdict("triangularity-e-to-m", n, ok));
  }
  for (int n = 2; n <= o.max_rank; ++n) {
    bool ok = true;
    try {
      const UniversalPolys& u = universal_polys(n);
      ok = u.lead.front() == binomial(2 * n - 1, n);
      for (int r = 1; r <= n; ++r) {
        const auto ru = static_cast<std::size_t>(r - 1);
        ok = ok && u.lead[ru] > 0;
        for (const auto& [lambda, d] : u.lower[ru]) ok = ok && lambda.largest() < r;
      }
    } catch (const InconsistencyError&) {
      ok = false;
    }
    out.push_back(verdict("triangularity", n, ok));
  }
}

void toy_suite(const SuiteOptions& o, std::vector<CheckReport>& out) {
  for (int n = 2; n <= std::min(o.max_rank, o.toy_max_rank); ++n) {
    auto reports = run_toy_checks(n, o.seed, o.bundles_per_ring, formulas_for(n, o));
    out.insert(out.end(), std::make_move_iterator(reports.begin()),
               std::make_move_iterator(reports.end()));
  }
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "formula-agreement", "twist",         "c1-zero",   "uniqueness", "phi-roundtrip",
      "positivity",        "triangularity", "toy-rings", "all"};
  return names;
}

bool is_heavy_suite(std::string_view suite) {
  return suite == "phi-roundtrip" || suite == "positivity" || suite == "triangularity" ||
         suite == "toy-rings" || suite == "uniqueness" || suite == "all";
}

std::vector<CheckReport> run_suite(std::string_view suite, const SuiteOptions& options) {
  if (std::find(suite_names().begin(), suite_names().end(), suite) == suite_names().end()) {
    throw UsageError("unknown suite '" + std::string(suite) + "'");
  }
  if (options.max_rank < 2) throw UsageError("max rank must be at least 2");
  std::vector<CheckReport> out;
  const bool all = suite == "all";
  if (all || suite == "formula-agreement") formula_agreement(options, out);
  if (all || suite == "twist") twist_suite(options, out);
  if (all || suite == "c1-zero") c1_zero_suite(options, out);
  if (all || suite == "uniqueness") uniqueness_suite(options, out);
  if (all || suite == "phi-roundtrip") phi_roundtrip_suite(options, out);
  if (all || suite == "positivity") positivity_suite(options, out);
  if (all || suite == "triangularity") triangularity_suite(options, out);
  if (all || suite == "toy-rings") toy_suite(options, out);
  return out;
}

FormulaSet perturb(FormulaSet formulas, Fault fault, int index, std::size_t term_index) {
  MPoly* target = nullptr;
  if (fault == Fault::phi) {
    if (index < 2 || index > formulas.n) throw UsageError("phi index outside 2..n");
    target = &formulas.phi[static_cast<std::size_t>(index - 2)];
  } else {
    if (index < 1 || index > formulas.n) throw UsageError("cbar index outside 1..n");
    target = &formulas.cbar[static_cast<std::size_t>(index - 1)];
  }
  const auto terms = target->canonical_terms();
  if (terms.empty()) {
    // cbar_1 = 0: perturb by adding c_1.
    Exponents e(target->vars().size(), 0);
    e[0] = 1;
    target->add_term(e, 1);
  } else {
    if (term_index >= terms.size()) throw UsageError("term index out of range");
    target->add_term(terms[term_index].first, 1);
  }
  return formulas;
}

std::vector<CheckReport> run_toy_checks(int n, std::uint64_t seed, int bundles_per_ring,
                                        const FormulaSet& formulas) {
  std::vector<CheckReport> out;
  for (const ToyRing& ring : standard_toy_rings()) {
    for (int k = 0; k < bundles_per_ring; ++k) {
      const std::uint64_t s = seed * 1000003ULL + static_cast<std::uint64_t>(n) * 1000 + k;
      const ToyBundle bundle = random_bundle(ring, n, s);
      std::mt19937_64 line_rng(s ^ 0x9e3779b97f4a7c15ULL);
      const MPoly line = random_element(ring, 1, line_rng);
      for (Identity id : all_toy_identities()) {
        out.push_back(check_identity(id, ring, bundle, line, formulas));
      }
    }
  }
  return out;
}

}  // namespace redchern
