#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "pellsg/cli/app.hpp"
#include "pellsg/cli/record.hpp"
#include "pellsg/cli/tables.hpp"

using pellsg::cli::Json;
using pellsg::cli::OutputRecord;
using pellsg::cli::QuantityValues;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pellsg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<Json> lines(const std::string& text) {
  std::vector<Json> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(Json::parse(line));
  return out;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("compute even-family Frobenius numbers") {
  const auto r = run({"compute", "--family", "even", "--u", "2", "--i", "2", "--k", "2", "--p-range", "0..3", "--what",
                      "g", "--source", "both"});
  CHECK(r.code == 0);
  const auto records = lines(r.out);
  REQUIRE(records.size() == 4);
  const char* expected[] = {"1323", "1743", "2163", "2583"};
  for (std::size_t p = 0; p < 4; ++p) {
    CHECK(records[p]["p"] == p);
    CHECK(records[p]["values"]["g"]["closed_form"] == expected[p]);
    CHECK(records[p]["values"]["g"]["engine"] == expected[p]);
    CHECK(records[p]["agrees"]["g"] == true);
    CHECK(records[p]["forced"] == false);
  }
}

TEST_CASE("compute with raw generators") {
  const auto r = run({"compute", "--gens", "2,3", "--p", "0", "--what", "g,n,s"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "{\"family\":\"gens\",\"generators\":[\"2\",\"3\"],\"p\":0,\"values\":{\"g\":{\"engine\":\"1\"},"
        "\"n\":{\"engine\":\"1\"},\"s\":{\"engine\":\"1\"}},\"forced\":false}\n");
}

TEST_CASE("compute past the proven range") {
  const std::vector<std::string> base{"compute", "--family", "odd-even", "--u", "2", "--i", "3", "--k", "4", "--p", "29"};
  auto args = base;
  args.insert(args.end(), {"--source", "engine", "--what", "g"});
  auto r = run(args);
  CHECK(r.code == 0);
  CHECK(lines(r.out)[0]["values"]["g"]["engine"] == "322312");

  args = base;
  args.insert(args.end(), {"--source", "both", "--what", "g"});
  r = run(args);
  CHECK(r.code == 1);
  CHECK(r.out.empty());
  CHECK(r.err.find("p <= 28") != std::string::npos);

  args.push_back("--force-formula");
  r = run(args);
  CHECK(r.code == 2);
  const auto rec = lines(r.out)[0];
  CHECK(rec["forced"] == true);
  CHECK(rec["agrees"]["g"] == false);
  CHECK(rec["values"]["g"]["closed_form"] == "327068");
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"frobnicate"}).code == 1);
  CHECK(run({"compute", "--p", "0"}).code == 1);
  CHECK(run({"compute", "--gens", "2,3"}).code == 1);
  CHECK(run({"compute", "--gens", "2,3", "--p", "0", "--p-range", "0..1"}).code == 1);
  CHECK(run({"compute", "--gens", "2,3", "--p-range", "3..1"}).code == 1);
  CHECK(run({"compute", "--gens", "2,3", "--p", "0", "--what", "x"}).code == 1);
  CHECK(run({"compute", "--gens", "2,3", "--p", "0", "--source", "formula"}).code == 1);
  CHECK(run({"compute", "--gens", "4,6", "--p", "0"}).code == 1);
  CHECK(run({"compute", "--family", "even", "--u", "2", "--i", "2", "--p", "0"}).code == 1);
  CHECK(run({"compute", "--family", "odd-odd", "--u", "2", "--i", "3", "--k", "4", "--p", "0"}).code == 1);
  CHECK(run({"compute", "--family", "odd-odd", "--u", "2", "--i", "3", "--k", "3", "--p", "0", "--what", "s",
             "--source", "formula"})
            .code == 1);
  CHECK(run({"table", "--preset", "paper-9.9"}).code == 1);
  CHECK(run({"verify"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("budget flag and environment override") {
  const std::vector<std::string> big{"compute", "--gens", "985,5741,13860", "--p", "50", "--what", "g"};
  auto args = big;
  args.insert(args.end(), {"--budget", "1000"});
  auto r = run(args);
  CHECK(r.code == 1);
  CHECK(r.err.find("--budget") != std::string::npos);

  ::setenv("PELLSG_BUDGET", "1000", 1);
  CHECK(run(big).code == 1);
  args = big;
  args.insert(args.end(), {"--budget", "100000000"});
  CHECK(run(args).code == 0);
  ::setenv("PELLSG_BUDGET", "lots", 1);
  CHECK(run(big).code == 1);
  ::unsetenv("PELLSG_BUDGET");
  CHECK(run(big).code == 0);
}

TEST_CASE("csv output") {
  const auto r = run({"compute", "--family", "even", "--u", "2", "--i", "2", "--k", "2", "--p", "1", "--source", "both",
                      "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "family,u,i,k,p,quantity,source,value,agrees\n"
        "even,2,2,2,1,g,closed_form,1743,true\n"
        "even,2,2,2,1,g,engine,1743,true\n"
        "even,2,2,2,1,n,closed_form,1082,true\n"
        "even,2,2,2,1,n,engine,1082,true\n"
        "even,2,2,2,1,s,closed_form,713239,true\n"
        "even,2,2,2,1,s,engine,713239,true\n");

  const auto raw = run({"compute", "--gens", "5,7", "--p", "0", "--what", "g", "--format", "csv"});
  CHECK(raw.out == "family,u,i,k,p,quantity,source,value,agrees\n5;7,,,,0,g,engine,23,\n");
}

TEST_CASE("records round trip through JSON") {
  OutputRecord a;
  a.family = "odd-odd";
  a.u = 2;
  a.i = 4;
  a.k = 3;
  a.generators = {985, 5741, 13860};
  a.p = 100;
  a.values = {QuantityValues{"g", {{"closed_form", 5510539}, {"engine", 5482819}}},
              QuantityValues{"n", {{"engine", pellsg::parse_integer("123456789012345678901234567890")}}}};
  a.forced = true;

  OutputRecord b;
  b.family = "gens";
  b.generators = {2, 3};
  b.values = {QuantityValues{"s", {{"engine", 1}, {"oracle", 1}}}};

  for (const auto& rec : {a, b}) {
    const Json j = pellsg::cli::to_json(rec);
    CHECK(pellsg::cli::record_from_json(Json::parse(j.dump())) == rec);
  }
  CHECK(pellsg::cli::to_json(a)["agrees"]["g"] == false);
  CHECK_FALSE(pellsg::cli::to_json(a)["agrees"].contains("n"));
  CHECK_FALSE(pellsg::cli::to_json(OutputRecord{"gens", {}, {}, {}, {2, 3}, 0, {QuantityValues{"g", {{"engine", 1}}}}, false})
                  .contains("agrees"));

  const auto r = run({"compute", "--family", "odd-even", "--u", "2", "--i", "3", "--k", "4", "--p-range", "27..29",
                      "--source", "both", "--force-formula", "--what", "g,n"});
  for (const auto& j : lines(r.out)) {
    CHECK(pellsg::cli::to_json(pellsg::cli::record_from_json(j)).dump() == j.dump());
  }

  Json broken = pellsg::cli::to_json(a);
  broken["agrees"]["g"] = true;
  CHECK_THROWS_AS(pellsg::cli::record_from_json(broken), std::invalid_argument);
  CHECK_THROWS_AS(pellsg::cli::record_from_json(Json::parse("{\"family\":1}")), std::invalid_argument);
}

TEST_CASE("identical invocations give identical bytes") {
  const std::vector<std::string> args{"compute", "--family", "odd-odd", "--u", "2", "--i", "3", "--k", "3",
                                      "--p-range", "0..16", "--source", "both", "--what", "g,n"};
  CHECK(run(args).out == run(args).out);
  CHECK(run({"verify", "--grid", "default"}).out == run({"verify", "--grid", "default"}).out);
}

TEST_CASE("verify reports breakdowns without failing") {
  auto r = run({"verify", "--family", "odd-odd", "--u", "2", "--i", "4", "--k", "3", "--p-max", "100"});
  CHECK(r.code == 0);
  CHECK(r.out.find("breakdown at p=99") != std::string::npos);

  r = run({"verify", "--gens", "12,70,985", "--p-max", "3", "--with-oracle"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("PASS", 0) == 0);

  r = run({"verify", "--family", "even", "--u", "2", "--i", "2", "--k", "2", "--p-max", "5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("breakdown at p=4") != std::string::npos);

  r = run({"verify", "--family", "odd-even", "--u", "2", "--i", "3", "--k", "4", "--p-max", "40", "--budget", "100"});
  CHECK(r.code == 2);
  CHECK(r.out.find("FAIL") != std::string::npos);

  r = run({"verify", "--grid", "default", "--failures-only"});
  CHECK(r.code == 0);
  CHECK(r.out == "verify: 56 instances, 0 failed\n");
}

TEST_CASE("tables match the stored fixtures byte for byte") {
  const std::filesystem::path dir = PELLSG_FIXTURE_DIR;
  for (const auto& preset : pellsg::cli::table_presets()) {
    for (const std::string format : {"json", "csv"}) {
      const auto expected = slurp(dir / (preset + "." + format));
      REQUIRE_FALSE(expected.empty());
      CHECK(pellsg::cli::render_table(preset, format) == expected);
      CHECK(run({"table", "--preset", preset, "--format", format}).out == expected);
    }
  }
  const auto t35 = pellsg::cli::render_table("paper-3.5", "csv");
  for (const char* v : {"347209", "713239", "1255669", "1974499"}) CHECK(t35.find(v) != std::string::npos);
  const auto t42 = pellsg::cli::render_table("paper-4.2", "csv");
  for (const char* v : {"2738539", "92798917", "160579", "186412240"}) CHECK(t42.find(v) != std::string::npos);
  const auto t61 = pellsg::cli::render_table("paper-6.1", "csv");
  for (const char* v : {"118324", "121704", "243404", "244501"}) CHECK(t61.find(v) != std::string::npos);
}

TEST_CASE("output files and the installed binary") {
  const auto path = std::filesystem::temp_directory_path() / "pellsg_test_output.jsonl";
  std::filesystem::remove(path);
  CHECK(run({"compute", "--gens", "2,3", "--p", "0", "--output", path.string()}).code == 0);
  CHECK(slurp(path) == run({"compute", "--gens", "2,3", "--p", "0"}).out);
  std::filesystem::remove(path);

  const std::string cli = PELLSG_CLI_PATH;
  const auto status = [&](const std::string& args) {
    const int raw = std::system((cli + " " + args + " > /dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  CHECK(status("compute --gens 2,3 --p 0") == 0);
  CHECK(status("compute --gens 2 --p 0") == 1);
  CHECK(status("compute --family odd-even --u 2 --i 3 --k 4 --p 29 --source both --force-formula") == 2);
}
