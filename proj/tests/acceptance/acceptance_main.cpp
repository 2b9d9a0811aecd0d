// Acceptance gate. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Each criterion has a wall-clock budget; exceeding it
// counts as a failure.
//
//   redchern_acceptance [--golden PATH] [--with-rank-5]
//
// The rank-5 run of criterion 4 is also enabled by REDCHERN_ACCEPT_RANK5=1.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "redchern/chern.hpp"
#include "redchern/cli.hpp"
#include "redchern/oracle.hpp"
#include "redchern/suites.hpp"
#include "redchern/symfun.hpp"
#include "redchern/universal.hpp"

using namespace redchern;
using Clock = std::chrono::steady_clock;

namespace {

// Budgets in seconds.
constexpr double kBudgetFormula = 30;
constexpr double kBudgetFirstValues = 1;
constexpr double kBudgetCharacterization = 60;
constexpr double kBudgetPipeline = 60;
constexpr double kBudgetPipelineRank5 = 600;
constexpr double kBudgetRoundTrip = 120;
constexpr double kBudgetToyRings = 120;
constexpr double kBudgetDeterminism = 60;

constexpr int kUniquenessSamples = 50;
constexpr int kMinInstancesPerRank = 20;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

MPoly c(int n, int i) { return ChernVector::universal(n).c(i); }

// Random homogeneous element of degree d in Q[c1..cn].
MPoly random_homogeneous(int n, int d, std::mt19937_64& rng) {
  MPoly out(chern_vars(n));
  for (const auto& lambda : partitions_of(d, d)) {
    if (lambda.largest() > n) continue;
    Exponents e(static_cast<std::size_t>(n), 0);
    for (int part : lambda.parts()) ++e[static_cast<std::size_t>(part - 1)];
    out.add_term(e, make_rational(static_cast<long>(rng() % 11) - 5,
                                  static_cast<long>(rng() % 4) + 1));
  }
  return out;
}

Outcome formula_agreement() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) {
      o.require(reduced_chern_formula(n, r) == reduced_chern_roots(n, r),
                "n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  return o;
}

Outcome first_values() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    o.require(reduced_chern_formula(n, 1).is_zero(), "cbar_1 != 0 at n=" + std::to_string(n));
    const MPoly want = c(n, 2) - make_rational(n - 1, 2 * n) * c(n, 1) * c(n, 1);
    o.require(reduced_chern_formula(n, 2) == want, "cbar_2 at n=" + std::to_string(n));
  }
  return o;
}

Outcome characterization() {
  Outcome o;
  for (int n = 2; n <= 6; ++n) {
    const VarTable ring = chern_vars(n);
    std::vector<MPoly> images;
    for (int i = 1; i <= n; ++i) images.push_back(i == 1 ? MPoly(ring) : c(n, i));
    for (int r = 1; r <= n; ++r) {
      o.require(substitute(reduced_chern_formula(n, r), images) == images[static_cast<std::size_t>(r - 1)],
                "(a) n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  for (int n = 2; n <= 4; ++n) {
    const ChernVector twisted = twist(ChernVector::universal(n), "t");
    for (int r = 1; r <= n; ++r) {
      const MPoly cbar = reduced_chern_formula(n, r);
      const MPoly lhs = evaluate_chern(cbar, twisted);
      o.require(lhs == embed(cbar, twisted.ring()),
                "(b) n=" + std::to_string(n) + " r=" + std::to_string(r));
    }
  }
  std::mt19937_64 rng(20240611);
  for (int n = 2; n <= 4; ++n) {
    for (int j = 2; j <= n; ++j) {
      const MPoly cbar = reduced_chern_formula(n, j);
      for (int k = 0; k < kUniquenessSamples; ++k) {
        const MPoly s = random_homogeneous(n, j - 1, rng);
        o.require(reduce_hom(c(n, j) + s * c(n, 1)) == cbar,
                  "(c) n=" + std::to_string(n) + " j=" + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome pipeline(int lo, int hi) {
  Outcome o;
  for (int n = lo; n <= hi; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const Integer N = binomial(2 * n - 1, n);
    const YRootSet roots = y_roots(n);
    o.require(Integer(static_cast<unsigned long>(roots.size())) == N, "|y_roots|" + at);

    const auto sigma = elementary_of(roots.forms(), n, root_vars(n));
    for (int r = 1; r <= n; ++r) {
      for (const auto& [lambda, coeff] : monomial_coefficients(sigma[static_cast<std::size_t>(r)]).coeffs) {
        o.require(coeff >= 0, "negative m-coefficient in s_" + std::to_string(r) + at);
      }
    }

    const SExpansion sx = s_in_elementary(n, n);
    o.require(sx.lead[0] == N, "lead_1" + at);
    for (int r = 1; r <= n; ++r) {
      const auto ru = static_cast<std::size_t>(r - 1);
      o.require(sx.lead[ru] > 0, "lead_" + std::to_string(r) + at);
      for (const auto& [lambda, d] : sx.lower[ru]) {
        o.require(lambda.largest() < r, "non-triangular s_" + std::to_string(r) + at);
      }
    }

    const UniversalPolys& u = universal_polys(n);
    const VarTable e = elementary_vars(n);
    for (int i = 1; i <= n; ++i) {
      o.require(substitute(u.psi[static_cast<std::size_t>(i - 1)], sx.s) ==
                    MPoly::variable(e, static_cast<std::size_t>(i - 1)),
                "psi_" + std::to_string(i) + " round trip" + at);
    }
  }
  return o;
}

Outcome round_trip() {
  Outcome o;
  for (int n = 2; n <= 4; ++n) {
    const auto cf = sym_power_det_inverse_chern(n, n);
    const std::vector<MPoly> classes(cf.begin() + 1, cf.end());
    const auto reduced = brauer_reduced(n, classes);
    for (int i = 2; i <= n; ++i) {
      o.require(reduced[static_cast<std::size_t>(i - 2)] == reduced_chern_formula(n, i),
                "phi_" + std::to_string(i) + " at n=" + std::to_string(n));
    }
  }
  for (int n = 2; n <= 5; ++n) {
    o.require(sym_power_det_inverse_chern(n, 1)[0].is_zero(), "c_1(F) at n=" + std::to_string(n));
  }
  // Hand check at n = 2: the roots of F are x1 - x2, x2 - x1 and 0.
  o.require(universal_polys(2).phi[0] == make_rational(1, 4) * MPoly::variable(u_vars(2), 0),
            "phi_2 at n=2");
  o.require(sym_power_det_inverse_chern(2, 2)[1] == 4 * c(2, 2) - c(2, 1) * c(2, 1),
            "c_2(F) at n=2");
  return o;
}

Outcome toy_rings() {
  Outcome o;
  constexpr std::uint64_t seed = 7;
  constexpr int bundles_per_ring = 3;
  for (int n = 2; n <= 4; ++n) {
    const std::string at = " at n=" + std::to_string(n);
    const FormulaSet formulas = FormulaSet::build(n);
    const auto reports = run_toy_checks(n, seed, bundles_per_ring, formulas);
    std::size_t instances = 0;
    for (const auto& r : reports) {
      o.require(r.pass, r.identity + " on " + r.ring + at);
      if (r.identity == "projective-bundle") ++instances;
    }
    o.require(instances >= kMinInstancesPerRank, "only " + std::to_string(instances) +
                                                     " instances" + at);

    const auto sensitive = [&](Fault fault, int index, std::size_t terms) {
      for (std::size_t k = 0; k < std::max<std::size_t>(terms, 1); ++k) {
        const FormulaSet bad = perturb(formulas, fault, index, k);
        bool caught = false;
        for (const auto& r : run_toy_checks(n, seed, bundles_per_ring, bad)) caught |= !r.pass;
        o.require(caught, std::string(fault == Fault::phi ? "phi_" : "cbar_") +
                              std::to_string(index) + " term " + std::to_string(k) +
                              " mutation undetected" + at);
      }
    };
    for (int i = 2; i <= n; ++i) {
      sensitive(Fault::phi, i, formulas.phi[static_cast<std::size_t>(i - 2)].size());
    }
    for (int r = 1; r <= n; ++r) {
      sensitive(Fault::cbar, r, formulas.cbar[static_cast<std::size_t>(r - 1)].size());
    }
  }
  return o;
}

Outcome determinism(const std::string& golden_path) {
  Outcome o;
  const auto run_table = [] {
    std::ostringstream out, err;
    const int code = cli::run({"redchern", "table", "--max-rank", "4"}, out, err);
    return code == cli::kOk ? out.str() : std::string();
  };
  const std::string first = run_table();
  o.require(!first.empty(), "table command failed");
  o.require(run_table() == first, "two runs differ");
  std::ifstream in(golden_path, std::ios::binary);
  o.require(static_cast<bool>(in), "cannot read " + golden_path);
  std::ostringstream golden;
  golden << in.rdbuf();
  o.require(golden.str() == first, "output differs from " + golden_path);
  return o;
}

bool report(const std::string& name, double budget, const std::function<Outcome()>& body) {
  const auto start = Clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (o.pass && secs > budget) {
    o.pass = false;
    o.detail = "over budget of " + std::to_string(static_cast<int>(budget)) + " s";
  }
  std::ostringstream line;
  line.setf(std::ios::fixed);
  line.precision(2);
  line << (o.pass ? "PASS " : "FAIL ") << name << " (" << secs << " s)";
  if (!o.pass) line << ": " << o.detail;
  std::cout << line.str() << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden = REDCHERN_GOLDEN_TABLE;
  bool rank5 = false;
  if (const char* env = std::getenv("REDCHERN_ACCEPT_RANK5")) rank5 = std::string(env) == "1";
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--with-rank-5") {
      rank5 = true;
    } else if (arg == "--golden" && i + 1 < argc) {
      golden = argv[++i];
    } else {
      std::cerr << "usage: " << argv[0] << " [--golden PATH] [--with-rank-5]\n";
      return 2;
    }
  }

  bool ok = true;
  ok &= report("1 formula agreement, n=2..6", kBudgetFormula, formula_agreement);
  ok &= report("2 first two reduced classes, n=2..6", kBudgetFirstValues, first_values);
  ok &= report("3 characterization: c1=0, twist invariance, uniqueness", kBudgetCharacterization,
               characterization);
  ok &= report("4 y-root pipeline, n=2..4", kBudgetPipeline, [] { return pipeline(2, 4); });
  if (rank5) {
    ok &= report("4 y-root pipeline, n=5", kBudgetPipelineRank5, [] { return pipeline(5, 5); });
  } else {
    std::cout << "SKIP 4 y-root pipeline, n=5 (pass --with-rank-5)" << std::endl;
  }
  ok &= report("5 phi round trip and pinned n=2 values", kBudgetRoundTrip, round_trip);
  ok &= report("6 toy-ring transfer and mutation sensitivity", kBudgetToyRings, toy_rings);
  ok &= report("7 deterministic table output", kBudgetDeterminism,
               [&] { return determinism(golden); });
  return ok ? 0 : 1;
}
