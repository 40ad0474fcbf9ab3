#include <doctest.h>

#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli_app.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "rootnum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = rootnum::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<nlohmann::json> json_lines(const std::string& text) {
  std::vector<nlohmann::json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) out.push_back(nlohmann::json::parse(line));
  }
  return out;
}

}  // namespace

TEST_CASE("compute prints a per-place table") {
  const Run r = run({"compute", "-p", "3", "-a", "2"});
  CHECK(r.code == 0);
  CHECK(r.out.find("global root number: -1") != std::string::npos);
  CHECK(r.out.find("inf     -1    Archimedean") != std::string::npos);
  CHECK(r.out.find("2       +1    Two_Else") != std::string::npos);
  CHECK(r.out.find("3       +1    Wild_P") != std::string::npos);
}

TEST_CASE("compute exit codes") {
  Run r = run({"compute", "-p", "3", "-a", "-1"});
  CHECK(r.code == rootnum::cli::kExitUnsupported);
  CHECK(r.err.find("UnsupportedTameCase") != std::string::npos);

  r = run({"compute", "-p", "3", "-a", "774840978"});  // 2 * 3^18
  CHECK(r.code == rootnum::cli::kExitModelSearch);
  CHECK(r.err.find("ModelSearchFailed") != std::string::npos);
  CHECK(run({"compute", "-p", "3", "-a", "774840978", "--bound", "300"}).code == 0);

  CHECK(run({"compute", "-p", "4", "-a", "2"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"compute", "-p", "2", "-a", "2"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"compute", "-p", "3", "-a", "0"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"compute", "-p", "3", "-a", "x"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"compute", "-p", "3"}).code == rootnum::cli::kExitUsage);
  CHECK(run({}).code == rootnum::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("compute --json") {
  const Run r = run({"compute", "-p", "5", "-a", "2", "--json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j.at("global") == 1);
  CHECK(j.at("factors").size() == 3);
  CHECK(j.at("model").at("coeffs") == nlohmann::json({-30, 80, -80, 40, -10, 1}));

  const Run bad = run({"compute", "-p", "3", "-a", "-1", "--json"});
  CHECK(bad.code == 2);
  CHECK(nlohmann::json::parse(bad.out).at("status") == "UnsupportedTameCase");
}

TEST_CASE("batch") {
  Run r = run({"batch", "-p", "3", "--range", "-3..3", "--json"});
  CHECK(r.code == 0);
  auto rows = json_lines(r.out);
  REQUIRE(rows.size() == 6);
  std::vector<long> as;
  for (const auto& row : rows) as.push_back(row.at("a").get<long>());
  CHECK(as == std::vector<long>{-3, -2, -1, 1, 2, 3});
  CHECK(rows[2].at("status") == "UnsupportedTameCase");  // a = -1
  CHECK(rows[3].at("status") == "UnsupportedTameCase");  // a = 1
  CHECK(rows[4].at("global") == -1);                     // a = 2

  r = run({"batch", "-p", "3", "--range", "2..2"});
  CHECK(r.code == 0);
  CHECK(r.out == "a\tglobal\tstatus\n2\t-1\tok\n");

  CHECK(run({"batch", "-p", "3", "--range", "5..4"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"batch", "-p", "3", "--range", "5"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"batch", "-p", "9", "--range", "1..4"}).code == rootnum::cli::kExitUsage);
}

TEST_CASE("batch output is independent of --jobs") {
  const Run serial = run({"batch", "-p", "7", "--range", "-60..60", "--json"});
  const Run pooled =
      run({"batch", "-p", "7", "--range", "-60..60", "--json", "--jobs", "4"});
  CHECK(serial.code == 0);
  CHECK(serial.out == pooled.out);
}

TEST_CASE("verify suites") {
  CHECK(run({"verify", "parity", "--max-p", "10000"}).code == 0);
  CHECK(run({"verify", "gauss", "--p", "5", "--max-f", "2"}).code == 0);
  const Run fixtures =
      run({"verify", "fixtures", "--file", ROOTNUM_DATA_DIR "/mordell_p3.tsv"});
  CHECK(fixtures.code == 0);
  CHECK(fixtures.out.find("76 of 76 rows match") != std::string::npos);
  CHECK(run({"verify", "disc", "--count", "50", "--seed", "9"}).code == 0);
  CHECK(run({"verify", "scaling", "-p", "5", "--max-abs", "10", "--jobs", "2"}).code == 0);
  CHECK(run({"verify", "hilbert", "--max-abs", "6", "--count", "50"}).code == 0);
  CHECK(run({"verify", "pthpower", "--max-abs", "50"}).code == 0);
  CHECK(run({"verify", "engine", "-p", "3", "--max-abs", "20"}).code == 0);

  CHECK(run({"verify", "nonsense"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"verify", "fixtures"}).code == rootnum::cli::kExitUsage);
  CHECK(run({"verify", "fixtures", "--file", "/nonexistent"}).code ==
        rootnum::cli::kExitUsage);
}
