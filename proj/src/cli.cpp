#include "redchern/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "redchern/errors.hpp"
#include "redchern/json_io.hpp"
#include "redchern/render.hpp"
#include "redchern/suites.hpp"
#include "redchern/universal.hpp"

namespace redchern::cli {

namespace {

constexpr int kMaxDefaultRank = 6;
constexpr int kMaxDefaultSuiteRank = 4;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string render(const MPoly& p, Format f) {
  switch (f) {
    case Format::text: return to_text(p);
    case Format::latex: return to_latex(p);
    case Format::json: return to_json(p).dump();
  }
  return {};
}

void check_rank(int n, bool allow_large) {
  if (n < 2 || (!allow_large && n > kMaxDefaultRank)) {
    throw UsageError("rank " + std::to_string(n) + " outside 2.." +
                     std::to_string(kMaxDefaultRank) + " (use --allow-large-rank to go higher)");
  }
}

// --out if given; otherwise default_name inside $REDCHERN_OUTPUT_DIR; otherwise stdout.
std::optional<std::filesystem::path> output_path(const std::string& out_flag,
                                                 const std::string& default_name) {
  if (!out_flag.empty()) return std::filesystem::path(out_flag);
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
    return std::filesystem::path(dir) / default_name;
  }
  return std::nullopt;
}

void emit(const std::optional<std::filesystem::path>& path, const std::string& content,
          std::ostream& out) {
  if (!path) {
    out << content;
    return;
  }
  std::ofstream file(*path, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot open '" + path->string() + "' for writing");
  file << content;
  file.flush();
  if (!file) throw IoError("failed writing '" + path->string() + "'");
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "text") return Format::text;
  if (name == "latex") return Format::latex;
  if (name == "json") return Format::json;
  throw UsageError("unknown format '" + name + "'");
}

std::string render_formula(int n, int r, Format format) {
  return render(reduced_chern_formula(n, r), format);
}

std::string render_universal(int n, Format format, int max_rank) {
  const UniversalPolys& u = universal_polys(n, Limits{max_rank});
  if (format == Format::json) return to_json(u).dump();

  const bool latex = format == Format::latex;
  std::string out;
  const auto line = [&](const std::string& lhs, const std::string& rhs) {
    out += latex ? lhs + " &= " + rhs + " \\\\\n" : lhs + " = " + rhs + "\n";
  };
  if (latex) out += "\\begin{align*}\n";
  line("N", std::to_string(u.N));
  for (std::size_t i = 0; i < u.lead.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    line(latex ? "\\mathrm{lead}_{" + idx + "}" : "lead_" + idx,
         latex ? to_latex(MPoly::constant(VarTable(), u.lead[i])) : format_rational(u.lead[i]));
  }
  for (std::size_t i = 0; i < u.psi.size(); ++i) {
    const std::string idx = std::to_string(i + 1);
    line(latex ? "\\psi_{" + idx + "}" : "psi_" + idx, render(u.psi[i], format));
  }
  for (std::size_t i = 0; i < u.phi.size(); ++i) {
    const std::string idx = std::to_string(i + 2);
    line(latex ? "\\phi_{" + idx + "}" : "phi_" + idx, render(u.phi[i], format));
  }
  if (latex) out += "\\end{align*}\n";
  return out;
}

std::string table_json(int max_rank) {
  if (max_rank < 2 || max_rank > kMaxDefaultRank) {
    throw UsageError("table max rank must be in 2.." + std::to_string(kMaxDefaultRank));
  }
  Json ranks = Json::array();
  for (int n = 2; n <= max_rank; ++n) {
    const UniversalPolys& u = universal_polys(n);
    Json cbar = Json::array();
    for (int r = 1; r <= n; ++r) cbar.push_back(to_json(reduced_chern_formula(n, r)));
    Json entry = to_json(u);
    Json row = {{"n", n}, {"N", u.N}, {"cbar", std::move(cbar)}};
    row["psi"] = entry["psi"];
    row["phi"] = entry["phi"];
    row["lead"] = entry["lead"];
    ranks.push_back(std::move(row));
  }
  Json table = {{"max_rank", max_rank}, {"ranks", std::move(ranks)}};
  return table.dump(2) + "\n";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reduced Chern classes and universal polynomials in exact arithmetic",
               "redchern"};
  app.require_subcommand(1);

  int rank = 0;
  int index = 0;
  std::string format = "text";
  int max_rank = kMaxDefaultSuiteRank;
  std::uint64_t seed = 0;
  std::string out_path;
  bool allow_large = false;
  std::string suite = "all";
  std::string fault;

  auto* formula = app.add_subcommand("formula", "Print the reduced Chern class cbar_r at level n");
  formula->add_option("--rank,-n", rank, "Bundle rank n")->required();
  formula->add_option("--index,-r", index, "Class index r, 1 <= r <= n")->required();
  formula->add_option("--format", format, "text | latex | json");
  formula->add_flag("--allow-large-rank", allow_large, "Permit n > 6");

  auto* universal = app.add_subcommand("universal", "Print psi, phi, lead and N at rank n");
  universal->add_option("--rank,-n", rank, "Bundle rank n")->required();
  universal->add_option("--format", format, "text | latex | json");
  universal->add_flag("--allow-large-rank", allow_large, "Permit n > 6");

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name")
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--max-rank", max_rank, "Largest rank checked (default 4)");
  verify->add_option("--seed", seed, "Seed for random instances");
  verify->add_option("--out", out_path, "JSON-lines report path");
  verify->add_flag("--allow-large-rank", allow_large, "Permit ranks 5-6 for the heavy suites");
  verify->add_option("--inject-fault", fault, "Corrupt phi or cbar (negative control)")
      ->check(CLI::IsMember({"phi", "cbar"}));

  auto* table = app.add_subcommand("table", "Write the regression table");
  table->add_option("--max-rank", max_rank, "Largest rank in the table");
  table->add_option("--out", out_path, "Output file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();  // program name
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*formula) {
      check_rank(rank, allow_large);
      out << render_formula(rank, index, parse_format(format)) << "\n";
      return kOk;
    }
    if (*universal) {
      check_rank(rank, allow_large);
      out << render_universal(rank, parse_format(format), std::max(rank, kMaxDefaultRank));
      if (parse_format(format) == Format::json) out << "\n";
      return kOk;
    }
    if (*verify) {
      if (max_rank < 2 || max_rank > kMaxDefaultRank) {
        throw UsageError("--max-rank must be in 2.." + std::to_string(kMaxDefaultRank));
      }
      if (is_heavy_suite(suite) && max_rank > kMaxDefaultSuiteRank && !allow_large) {
        throw UsageError("suite '" + suite + "' above rank " +
                         std::to_string(kMaxDefaultSuiteRank) + " needs --allow-large-rank");
      }
      SuiteOptions options;
      options.max_rank = max_rank;
      options.seed = seed;
      if (!fault.empty()) options.fault = fault == "phi" ? Fault::phi : Fault::cbar;
      const auto reports = run_suite(suite, options);
      std::string lines;
      std::size_t failed = 0;
      for (const auto& r : reports) {
        lines += to_json(r).dump() + "\n";
        failed += r.pass ? 0 : 1;
      }
      emit(output_path(out_path, "verify-" + suite + ".jsonl"), lines, out);
      err << "verify " << suite << ": " << reports.size() << " checks, " << failed
          << " failed\n";
      return failed == 0 ? kOk : kIdentityFailure;
    }
    if (*table) {
      const std::string content = table_json(max_rank);
      emit(output_path(out_path, "table-max-rank-" + std::to_string(max_rank) + ".json"), content,
           out);
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const IoError& e) {
    err << "error: " << e.what() << "\n";
    return kIoFailure;
  } catch (const InconsistencyError& e) {
    err << "internal inconsistency: " << e.what() << "\n";
    return kIdentityFailure;
  }
  return kUsage;
}

}  // namespace redchern::cli
