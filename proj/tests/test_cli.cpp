#include "brocard/checkpoint.hpp"
#include "brocard/cli.hpp"
#include "brocard/factorial_engine.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace brocard;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "brocard");
  std::ostringstream out, err;
  const int code = cli::dispatch(args, out, err);
  return {code, out.str(), err.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  std::string row;
  while (std::getline(in, row)) {
    if (row == line) return true;
  }
  return false;
}

std::filesystem::path temp_path(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("brocard_cli_" + name);
  std::filesystem::remove(p);
  std::filesystem::remove(p.string() + ".tally");
  return p;
}

}  // namespace

TEST_CASE("verify 7") {
  const Result r = call({"verify", "7"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "is_solution=true"));
  CHECK(has_line(r.out, "m=71"));
  CHECK(has_line(r.out, "k=70"));
}

TEST_CASE("verify --factor-structure") {
  const Result r = call({"verify", "7", "--factor-structure"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "half_even=70"));
  CHECK(has_line(r.out, "half_pow=72"));
  CHECK(has_line(r.out, "two_adic_valuation=4"));

  const Result six = call({"verify", "6", "--factor-structure"});
  CHECK(six.code == cli::kExitOk);
  CHECK(has_line(six.out, "factor_structure=none (n is not a solution)"));
}

TEST_CASE("usage errors exit 1 with a synopsis") {
  const Result missing = call({"verify"});
  CHECK(missing.code == cli::kExitUsage);
  CHECK(missing.err.find("usage: brocard verify") != std::string::npos);

  CHECK(call({}).code == cli::kExitUsage);
  CHECK(call({"frobnicate"}).code == cli::kExitUsage);
  CHECK(call({"search"}).code == cli::kExitUsage);
  CHECK(call({"search", "--max-n", "4294967296"}).code == cli::kExitUsage);
  CHECK(call({"table", "--from", "5", "--to", "2"}).code == cli::kExitUsage);
  CHECK(call({"search", "--max-n", "10", "--resume"}).code == cli::kExitUsage);
}

TEST_CASE("help exits 0") {
  CHECK(call({"--help"}).code == cli::kExitOk);
}

TEST_CASE("search writes a JSON-lines report") {
  const auto path = temp_path("report.jsonl");
  const Result r = call({"search", "--max-n", "100", "--primes", "48", "--report", path.string()});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "solution (m,n)=(71,7)"));

  std::ifstream in(path);
  std::vector<nlohmann::json> lines;
  for (std::string row; std::getline(in, row);) lines.push_back(nlohmann::json::parse(row));
  REQUIRE(lines.size() == 4);
  CHECK(lines[0].dump() == R"({"kind":"solution","m":5,"n":4})");
  CHECK(lines[3]["kind"] == "summary");
  CHECK(lines[3]["counters"]["scanned"] == 99);
  CHECK(lines[3]["counters"]["solutions"] == 3);
  std::filesystem::remove(path);
}

TEST_CASE("search to stdout when no report path is given") {
  const Result r = call({"search", "--max-n", "10"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, R"({"kind":"solution","n":4,"m":5})"));
}

TEST_CASE("checkpoint mismatch exits 3") {
  const auto ckpt = temp_path("ckpt");
  CHECK(call({"search", "--max-n", "1000", "--checkpoint", ckpt.string(), "--stop-at", "500"})
            .code == cli::kExitOk);
  const Result bad =
      call({"search", "--max-n", "2000", "--checkpoint", ckpt.string(), "--resume"});
  CHECK(bad.code == cli::kExitCheckpoint);
  CHECK(bad.err.find("checkpoint") != std::string::npos);

  std::string bytes = read_file(ckpt);
  bytes[bytes.size() - 3] = bytes[bytes.size() - 3] == 'a' ? 'b' : 'a';
  write_file_atomically(ckpt, bytes);
  CHECK(call({"search", "--max-n", "1000", "--checkpoint", ckpt.string(), "--resume"}).code ==
        cli::kExitCheckpoint);
  std::filesystem::remove(ckpt);
  std::filesystem::remove(ckpt.string() + ".tally");
}

TEST_CASE("unwritable report path exits 2") {
  CHECK(call({"search", "--max-n", "10", "--report", "/nonexistent-dir/x.jsonl"}).code ==
        cli::kExitInternal);
}

TEST_CASE("epsilon and nine runs") {
  const Result r = call({"epsilon", "7", "--digits", "10", "--nine-run"});
  CHECK(r.code == cli::kExitOk);
  CHECK(has_line(r.out, "epsilon=0.9929573971"));
  CHECK(has_line(r.out, "epsilon_nine_run=2 (exact)"));
  CHECK(has_line(r.out, "required_epsilon_nine_run=2 (exact)"));
}

TEST_CASE("bit budget override") {
  ::setenv("BROCARD_BIT_BUDGET", "64", 1);
  CHECK(call({"epsilon", "7", "--digits", "100"}).code == cli::kExitInternal);
  ::setenv("BROCARD_BIT_BUDGET", "nonsense", 1);
  CHECK(call({"epsilon", "7"}).code == cli::kExitUsage);
  ::unsetenv("BROCARD_BIT_BUDGET");
  CHECK(call({"epsilon", "7", "--digits", "100"}).code == cli::kExitOk);
}

TEST_CASE("table flags the two k misprints") {
  const Result r = call({"table", "--from", "1", "--to", "11", "--digits", "10"});
  CHECK(r.code == cli::kExitOk);
  std::istringstream in(r.out);
  std::string row;
  std::getline(in, row);  // header
  int flagged = 0;
  while (std::getline(in, row)) {
    if (row.find("FLAG") == std::string::npos) continue;
    ++flagged;
    const bool eight = row.rfind("8\t", 0) == 0;
    const bool eleven = row.rfind("11\t", 0) == 0;
    CHECK((eight || eleven));
  }
  CHECK(flagged == 2);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("polysys") {
  const Result r = call({"polysys", "--ymin", "0", "--ymax", "100", "--factorials"});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out == "(24,4)\n(120,10)\n(5040,70)\ncount=3\n");
  const Result neg = call({"polysys", "--ymin", "-3", "--ymax", "-1"});
  CHECK(neg.out == "(3,-3)\n(0,-2)\n(-1,-1)\ncount=3\n");
}
