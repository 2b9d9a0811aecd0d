#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "redchern/chern.hpp"
#include "redchern/cli.hpp"
#include "redchern/errors.hpp"
#include "redchern/json_io.hpp"

using namespace redchern;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "redchern");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch_dir(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("redchern-test-" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("formula output in each format") {
  CHECK(run({"formula", "-n", "3", "-r", "2"}).out == "c_2 - 1/3*c_1^2\n");
  CHECK(run({"formula", "-n", "3", "-r", "2", "--format", "latex"}).out ==
        "c_2 - \\frac{1}{3} c_1^2\n");
  CHECK(run({"formula", "-n", "2", "-r", "1"}).out == "0\n");

  const Result json = run({"formula", "--rank", "2", "--index", "2", "--format", "json"});
  CHECK(json.code == cli::kOk);
  const MPoly p = mpoly_from_json(Json::parse(json.out));
  CHECK(p == reduced_chern_formula(2, 2));
}

TEST_CASE("universal json round trips") {
  const Result r = run({"universal", "-n", "3", "--format", "json"});
  REQUIRE(r.code == cli::kOk);
  const UniversalPolys u = universal_from_json(Json::parse(r.out));
  const UniversalPolys& want = universal_polys(3);
  CHECK(u.N == 10);
  CHECK(u.psi == want.psi);
  CHECK(u.phi == want.phi);
  CHECK(u.lead == want.lead);

  const Result text = run({"universal", "-n", "2"});
  CHECK(text.out.find("N = 3") != std::string::npos);
  CHECK(text.out.find("phi_2 = 1/4*u_2") != std::string::npos);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == cli::kUsage);
  CHECK(run({"bogus"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "3"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "3", "-r", "4"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "3", "-r", "0"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "1", "-r", "1"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "7", "-r", "1"}).code == cli::kUsage);
  CHECK(run({"formula", "-n", "3", "-r", "1", "--format", "xml"}).code == cli::kUsage);
  CHECK(run({"universal", "-n", "7"}).code == cli::kUsage);
  CHECK(run({"verify", "--suite", "nope"}).code == cli::kUsage);
  CHECK(run({"verify", "--max-rank", "1"}).code == cli::kUsage);
  CHECK(run({"verify", "--max-rank", "5", "--suite", "uniqueness"}).code == cli::kUsage);
  CHECK(run({"verify", "--inject-fault", "psi"}).code == cli::kUsage);
  CHECK(run({"table", "--max-rank", "7"}).code == cli::kUsage);
  CHECK(run({"--help"}).code == cli::kOk);
}

TEST_CASE("verify passes and negative controls fail") {
  const Result ok = run({"verify", "--suite", "c1-zero", "--max-rank", "3"});
  CHECK(ok.code == cli::kOk);
  std::istringstream lines(ok.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    const Json j = Json::parse(line);
    CHECK(j.at("status") == "pass");
    CHECK(j.at("identity") == "c1-zero");
    ++count;
  }
  CHECK(count > 0);
  CHECK(ok.err.find(" 0 failed") != std::string::npos);

  CHECK(run({"verify", "--suite", "phi-roundtrip", "--max-rank", "3", "--inject-fault", "phi"})
            .code == cli::kIdentityFailure);
  CHECK(run({"verify", "--suite", "c1-zero", "--max-rank", "3", "--inject-fault", "cbar"}).code ==
        cli::kIdentityFailure);
}

TEST_CASE("table output is deterministic and honours --out and the env var") {
  const Result a = run({"table", "--max-rank", "3"});
  const Result b = run({"table", "--max-rank", "3"});
  REQUIRE(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out == cli::table_json(3));
  const Json t = Json::parse(a.out);
  CHECK(t.at("max_rank") == 3);
  CHECK(t.at("ranks").size() == 2);
  CHECK(t.at("ranks")[1].at("N") == 10);

  const fs::path dir = scratch_dir("cli");
  const fs::path file = dir / "t.json";
  const Result written = run({"table", "--max-rank", "3", "--out", file.string()});
  CHECK(written.code == cli::kOk);
  CHECK(written.out.empty());
  CHECK(slurp(file) == a.out);

  ::setenv(cli::kOutputDirEnv, dir.c_str(), 1);
  const Result via_env = run({"table", "--max-rank", "3"});
  ::unsetenv(cli::kOutputDirEnv);
  CHECK(via_env.code == cli::kOk);
  CHECK(slurp(dir / "table-max-rank-3.json") == a.out);

  CHECK(run({"table", "--out", (dir / "missing" / "x.json").string()}).code == cli::kIoFailure);
  fs::remove_all(dir);
}
