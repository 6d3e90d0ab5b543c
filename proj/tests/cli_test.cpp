#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  const std::string cmd = std::string(QUADRICA_CLI_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  RunResult res;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) res.out.append(buf, n);
  const int status = pclose(pipe);
  res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return res;
}

std::filesystem::path data_file(const std::string& name) {
  return std::filesystem::path(QUADRICA_DATA_DIR) / name;
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST(Cli, UsageErrorsAreExitTwo) {
  EXPECT_EQ(run_cli("").exit_code, 2);
  EXPECT_EQ(run_cli("no-such-subcommand").exit_code, 2);
  EXPECT_EQ(run_cli("case-study").exit_code, 2);          // neither name nor --all
  EXPECT_EQ(run_cli("case-study no-such-name").exit_code, 2);
}

TEST(Cli, MalformedNumbersAreExitThree) {
  EXPECT_EQ(run_cli("bound abc 0 4").exit_code, 3);
  EXPECT_EQ(run_cli("secants --a 1,x --b 1 --r 2").exit_code, 3);
  EXPECT_EQ(run_cli("double-points --ci 4-2,2").exit_code, 3);
}

TEST(Cli, MissingFilesAreExitFour) {
  EXPECT_EQ(run_cli("classify-line --forms /nonexistent.json --p 1,0 --q 0,1").exit_code, 4);
  EXPECT_EQ(run_cli("audit --catalog /nonexistent.csv").exit_code, 4);
}

TEST(Cli, DomainViolationsAreExitFive) {
  EXPECT_EQ(run_cli("bound 5 2 3").exit_code, 5);               // codimension 1
  EXPECT_EQ(run_cli("np-bound 10 4 5").exit_code, 5);           // c + 1 - p < 1
  EXPECT_EQ(run_cli("secants --a 1,0 --b 1,0 --r 4").exit_code, 5);
}

TEST(Cli, DoublePointsQuadricThreeJson) {
  // global flags may come before or after the subcommand
  for (const char* call : {"--json double-points --quadric 3", "double-points --quadric 3 --json"}) {
    const RunResult res = run_cli(call);
    ASSERT_EQ(res.exit_code, 0) << call;
    const nlohmann::json j = nlohmann::json::parse(res.out);
    EXPECT_EQ(j.at("schema"), "quadrica/1");
    EXPECT_EQ(j.at("b"), nlohmann::json::array({1, 0, 0, 0}));
    EXPECT_EQ(j.at("delta_direct"), 35);
    EXPECT_EQ(j.at("delta_via_b"), 35);
    EXPECT_EQ(j.at("agree"), true);
  }
}

TEST(Cli, JsonRoundTripsIdempotently) {
  const std::pair<const char*, int> calls[] = {
      {"--json double-points --quadric 3", 0},
      {"--json bound 8 0 4 --alpha 6", 1},  // criterion violated, output still well-formed
      {"--json bound 3 1 3 --alpha 2 --g 0", 0},
      {"--json classify-equality --c-max 10", 0},
      {"--json verify-identities --k-max 5", 0},
  };
  for (const auto& [call, want_exit] : calls) {
    const RunResult res = run_cli(call);
    ASSERT_EQ(res.exit_code, want_exit) << call;
    const nlohmann::json parsed = nlohmann::json::parse(res.out);
    EXPECT_EQ(nlohmann::json::parse(parsed.dump()), parsed) << call;
  }
}

TEST(Cli, BoundVerdictDrivesExitCode) {
  EXPECT_EQ(run_cli("bound 8 0 4 --alpha 6").exit_code, 1);  // equality criterion violated
  EXPECT_EQ(run_cli("bound 9 0 4 --alpha 6").exit_code, 1);  // bound violated
  EXPECT_EQ(run_cli("bound 3 1 3 --alpha 2 --g 0").exit_code, 0);
  EXPECT_EQ(run_cli("bound 8 0 4").exit_code, 0);  // nothing evaluated beyond the bound
}

TEST(Cli, CaseStudyRegistryPasses) {
  const RunResult all = run_cli("case-study --all --quiet");
  EXPECT_EQ(all.exit_code, 0);
  const RunResult one = run_cli("case-study remW-nine-points");
  EXPECT_EQ(one.exit_code, 0);
  EXPECT_NE(one.out.find("bound violated: 36 > 35"), std::string::npos);
}

TEST(Cli, ClassifyLineOnShippedSystems) {
  const RunResult dc = run_cli("classify-line --forms " + data_file("forms_nine_points_p4.json").string() +
                               " --p 1,0,0,0,0 --q 0,1,0,0,0");
  ASSERT_EQ(dc.exit_code, 0);
  EXPECT_NE(dc.out.find("double-cover"), std::string::npos);

  const RunResult ver = run_cli("classify-line --forms " + data_file("forms_complete_p3.json").string() +
                                " --p 1,0,0,0 --q 0,0,0,1");
  ASSERT_EQ(ver.exit_code, 0);
  EXPECT_NE(ver.out.find("veronese-embedding"), std::string::npos);
}

TEST(Cli, SampleLinesHistogram) {
  const RunResult res = run_cli("--json sample-lines --forms " +
                                data_file("forms_complete_p3.json").string() +
                                " --trials 60 --seed 11");
  ASSERT_EQ(res.exit_code, 0);
  const nlohmann::json j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j.at("counts").at("veronese-embedding"), 60);
  EXPECT_EQ(j.at("double_cover_found"), false);
}

TEST(Cli, DiophantineJsonLinesAndScanLog) {
  const auto log_path = temp_file("quadrica_scan_log.csv");
  const RunResult res =
      run_cli("--quiet diophantine --c-max 12 --scan-log " + log_path.string());
  ASSERT_EQ(res.exit_code, 0);
  // one JSON object per line, three solutions in range
  std::vector<nlohmann::json> lines;
  std::stringstream ss(res.out);
  std::string line;
  while (std::getline(ss, line))
    if (!line.empty()) lines.push_back(nlohmann::json::parse(line));
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0].at("d"), 3);
  EXPECT_EQ(lines[1].at("d"), 5);
  EXPECT_EQ(lines[2].at("d"), 221);
  EXPECT_EQ(lines[2].at("value"), 24310);

  std::ifstream log(log_path);
  ASSERT_TRUE(log.good());
  std::string header;
  std::getline(log, header);
  EXPECT_EQ(header, "c,value,is_triangular");
  int rows = 0, triangular = 0;
  while (std::getline(log, line)) {
    if (line.empty()) continue;
    ++rows;
    if (line.back() == '1') ++triangular;
  }
  EXPECT_EQ(rows, 11);        // c = 2..12
  EXPECT_EQ(triangular, 3);   // c = 2, 3, 9
  std::filesystem::remove(log_path);
}

TEST(Cli, DiophantineJsonModeEmitsPureJsonLines) {
  const RunResult res = run_cli("--json diophantine --c-max 12");
  ASSERT_EQ(res.exit_code, 0);
  std::stringstream ss(res.out);
  std::string line;
  int lines = 0;
  while (std::getline(ss, line)) {
    if (line.empty()) continue;
    ++lines;
    EXPECT_NO_THROW(nlohmann::json::parse(line)) << line;
  }
  EXPECT_EQ(lines, 3);
}

TEST(Cli, ShardedSearchMatchesSingleShard) {
  const RunResult single = run_cli("--quiet diophantine --c-max 400");
  const RunResult sharded = run_cli("--quiet diophantine --c-max 400 --shards 4");
  EXPECT_EQ(single.exit_code, 0);
  EXPECT_EQ(sharded.exit_code, 0);
  EXPECT_EQ(single.out, sharded.out);
  EXPECT_EQ(run_cli("diophantine --c-max 10 --shards 2 --scan-log /tmp/x.csv").exit_code, 2);
}

TEST(Cli, AuditCatalogs) {
  EXPECT_EQ(run_cli("--quiet audit --catalog " + data_file("catalog_example.csv").string()).exit_code,
            1);  // the eight-point and octic rows violate the equality criterion

  const auto good = temp_file("quadrica_catalog_ok.csv");
  {
    std::ofstream out(good);
    out << "d,n,r,alpha,g,h0,p\n3,1,3,2,0,,\n5,1,4,4,1,,\n";
  }
  EXPECT_EQ(run_cli("audit --catalog " + good.string()).exit_code, 0);

  const auto json_cat = temp_file("quadrica_catalog.json");
  {
    std::ofstream out(json_cat);
    out << R"([{"d": 3, "n": 1, "r": 3, "alpha": 2, "g": 0}])";
  }
  const RunResult res = run_cli("--json audit --catalog " + json_cat.string());
  EXPECT_EQ(res.exit_code, 0);
  const nlohmann::json j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j.at("reports").size(), 1u);
  EXPECT_EQ(j.at("reports")[0].at("equality"), true);
  std::filesystem::remove(good);
  std::filesystem::remove(json_cat);
}

TEST(Cli, VerifyIdentities) {
  EXPECT_EQ(run_cli("verify-identities --k-max 12").exit_code, 0);
  const RunResult res = run_cli("--json verify-identities --k-max 8");
  const nlohmann::json j = nlohmann::json::parse(res.out);
  EXPECT_EQ(j.at("vandermonde"), true);
  EXPECT_EQ(j.at("coefficient_identity"), true);
  EXPECT_EQ(j.at("weight_sums"), true);
}

TEST(Cli, AsymptoticsTableFormats) {
  const RunResult csv = run_cli("--csv asymptotics --c-from 2 --c-to 9");
  ASSERT_EQ(csv.exit_code, 0);
  EXPECT_NE(csv.out.find("c,d_max,ratio"), std::string::npos);
  EXPECT_NE(csv.out.find("9,221,"), std::string::npos);
  const RunResult js = run_cli("--json asymptotics --c-from 2 --c-to 9");
  const nlohmann::json j = nlohmann::json::parse(js.out);
  EXPECT_EQ(j.at("rows").back().at("d_max"), 221);
}
