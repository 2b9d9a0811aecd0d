#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "redchern/oracle.hpp"

namespace redchern {

/// Deliberate corruption of the universal polynomials, for negative controls.
enum class Fault { phi, cbar };

struct SuiteOptions {
  int max_rank = 4;
  std::uint64_t seed = 0;
  std::optional<Fault> fault;
  int bundles_per_ring = 3;      // toy-rings: seeded bundles per (ring, rank)
  int uniqueness_samples = 50;   // uniqueness: random s per (n, j)
  int toy_max_rank = 4;          // toy-rings stop here even if max_rank is larger
};

/// Suite names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// True for suites whose cost grows steeply with rank (gated above 4 by the CLI).
bool is_heavy_suite(std::string_view suite);

/// Runs one suite (or "all") and returns its reports in a fixed order.
/// Throws UsageError on an unknown suite name.
std::vector<CheckReport> run_suite(std::string_view suite, const SuiteOptions& options);

/// Adds 1 to the coefficient of term `term_index` (canonical order) of
/// phi_`index` or cbar_`index` in a copy of `formulas`.
FormulaSet perturb(FormulaSet formulas, Fault fault, int index, std::size_t term_index);

/// Toy-ring checks for one rank over the standard catalogue.
std::vector<CheckReport> run_toy_checks(int n, std::uint64_t seed, int bundles_per_ring,
                                        const FormulaSet& formulas);

}  // namespace redchern
