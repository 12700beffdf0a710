#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "commands.hpp"
#include "run_config.hpp"

using nuclearity::cli::kExitOk;
using nuclearity::cli::kExitUsage;
using nuclearity::cli::kExitVerificationFailed;
using nuclearity::cli::run_cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
  const CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return nlohmann::json::parse(r.out);
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "nuclearity_cli_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p);
  f << text;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p);
  return {std::istreambuf_iterator<char>(f), {}};
}

}  // namespace

TEST(CliGeom, SymmetricIntervals) {
  const auto j = run_json({"geom", "--outer=-2,2", "--inner=-1,1"});
  EXPECT_NEAR(j["ell"].get<double>(), std::log(2.0), 1e-12);
  EXPECT_NEAR(j["ell_prime"].get<double>(), std::sinh(0.5 * std::log(2.0)), 1e-12);
}

TEST(CliGeom, HalfLine) {
  const auto j = run_json({"geom", "--outer", "0,inf", "--inner", "0.462117,2.163953"});
  EXPECT_NEAR(j["ell"].get<double>(), 1.0, 1e-5);
  EXPECT_EQ(j["outer"]["x2"], "inf");
}

TEST(CliGeom, TouchingClosureIsAUsageError) {
  const CliRun r = run({"geom", "--outer=-1,1", "--inner=-1,0.5"});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_NE(r.err.find("closure"), std::string::npos);
}

TEST(CliGeom, CsvFormat) {
  const CliRun r = run({"--format", "csv", "geom", "--outer=-2,2", "--inner=-1,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "ell,ell_prime,a,a_prime");
}

TEST(CliVerify, GroupIdentities) {
  for (const char* id : {"bch", "rotation", "euclidean", "half_turn"}) {
    const auto j = run_json({"verify", "--identity", id});
    EXPECT_EQ(j["verdict"], "pass") << id;
  }
  EXPECT_EQ(run({"verify", "--identity", "rotation", "--param", "3.141592653589793"}).code, kExitUsage);
}

TEST(CliVerify, TruncatedIdentity) {
  const auto j = run_json({"verify", "--identity", "m1", "--param", "1", "--dims", "40,80"});
  EXPECT_EQ(j["verdict"], "pass");
  EXPECT_EQ(j["dims_tested"], nlohmann::json::array({40, 80}));
}

TEST(CliVerify, FailingVerdictExitCode) {
  const CliRun r = run({"verify", "--identity", "m1", "--param", "1", "--dims", "40,80", "--tolerance", "0"});
  EXPECT_EQ(r.code, kExitVerificationFailed);
  EXPECT_EQ(nlohmann::json::parse(r.out)["verdict"], "fail");
}

TEST(CliVerify, BlockTooLarge) {
  EXPECT_EQ(run({"verify", "--identity", "m1", "--dims", "40", "--block", "11"}).code, kExitUsage);
}

TEST(CliVerify, UnknownIdentity) { EXPECT_EQ(run({"verify", "--identity", "nope"}).code, kExitUsage); }

TEST(CliVerify, OutputIsDeterministic) {
  const CliRun a = run({"verify", "--identity", "t2", "--dims", "40,80"});
  const CliRun b = run({"verify", "--identity", "t2", "--dims", "40,80"});
  EXPECT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliConfig, FlagsOverrideConfig) {
  const auto cfg = scratch("config.json");
  write_file(cfg, R"({"truncation_dims": [80, 40, 40], "block": 5, "tolerance_overrides": {"m1": 0.0}})");
  const CliRun from_config = run({"--config", cfg.string(), "verify", "--identity", "m1"});
  EXPECT_EQ(from_config.code, kExitVerificationFailed);
  const auto j = nlohmann::json::parse(from_config.out);
  EXPECT_EQ(j["dims_tested"], nlohmann::json::array({40, 80}));
  EXPECT_EQ(j["block"], 5);

  const CliRun overridden =
      run({"--config", cfg.string(), "verify", "--identity", "m1", "--dims", "48", "--tolerance", "1e-6"});
  EXPECT_EQ(overridden.code, kExitOk);
  EXPECT_EQ(nlohmann::json::parse(overridden.out)["dims_tested"], nlohmann::json::array({48}));

  write_file(cfg, R"({"output_format": "csv"})");
  const CliRun csv = run({"--config", cfg.string(), "geom", "--outer=-2,2", "--inner=-1,1"});
  EXPECT_EQ(csv.out.rfind("ell,", 0), 0u);
  const CliRun json = run({"--config", cfg.string(), "--format", "json", "geom", "--outer=-2,2", "--inner=-1,1"});
  EXPECT_TRUE(nlohmann::json::accept(json.out));
}

TEST(CliConfig, MalformedConfig) {
  const auto cfg = scratch("bad.json");
  write_file(cfg, "{\"truncation_dims\": \"x\"}");
  EXPECT_EQ(run({"--config", cfg.string(), "verify", "--identity", "m1"}).code, kExitUsage);
  EXPECT_EQ(run({"--config", scratch("missing.json").string(), "verify", "--identity", "m1"}).code, kExitUsage);
}

TEST(CliChar, CharacterValues) {
  const auto j = run_json({"char", "--s", "1"});
  EXPECT_NEAR(j["values"][0]["character"].get<double>(), 0.5819767068693264, 1e-15);
  const auto spec = scratch("d3.json");
  write_file(spec, R"({"entries": [], "tail_rule": {"name": "free_field", "d": 3}})");
  const auto k = run_json({"char", "--spectrum", spec.string(), "--s", "1,2"});
  EXPECT_NEAR(k["values"][0]["character"].get<double>(), 1.992294767124987, 1e-12);
}

TEST(CliChar, Chain) {
  const auto j = run_json({"char", "--chain", "--lambda", "0.125", "--outer", "0,3", "--inner", "1,1.5"});
  EXPECT_NEAR(j["bw_bound"].get<double>(), 0.36602540378443865, 1e-15);
  EXPECT_EQ(j["steps"].size(), 4u);
  EXPECT_EQ(run({"char", "--chain", "--lambda", "0.125"}).code, kExitUsage);
}

TEST(CliChar, KmsNeedsGrid) {
  EXPECT_EQ(run({"char", "--kms"}).code, kExitUsage);
  const auto j = run_json({"char", "--kms", "--grid", "0.001,0.002,0.004,0.006,0.01"});
  EXPECT_TRUE(j["kms_criterion_met"].get<bool>());
}

TEST(CliChar, ExactlyOneMode) {
  EXPECT_EQ(run({"char", "--s", "1", "--split", "0.1"}).code, kExitUsage);
  EXPECT_EQ(run({"char"}).code, kExitUsage);
  const auto j = run_json({"char", "--split", "0.1"});
  EXPECT_NEAR(j["norm"].get<double>(), 9.508331944775049, 1e-13);
}

TEST(CliChar, L2Norm) {
  const auto j = run_json({"char", "--l2", "--lambda", "0.25", "--outer", "0,inf", "--inner",
                           "0.46211715726000974,2.1639534137386529"});
  EXPECT_NEAR(j["l2_nuclearity_norm"].get<double>(), 0.5819767068693264, 1e-12);
}

TEST(CliBranch, Table) {
  const auto j = run_json({"branch", "--d", "3", "--kmax", "4"});
  ASSERT_EQ(j["table"].size(), 5u);
  EXPECT_EQ(j["table"][3]["N_d_k"], 5);
  EXPECT_EQ(j["table"][3]["m_d_k"], 10);
  const CliRun csv = run({"--format", "csv", "branch", "--d", "5", "--kmax", "5"});
  EXPECT_NE(csv.out.find("5,5,126,30"), std::string::npos);
  EXPECT_EQ(run({"branch", "--d", "4"}).code, kExitUsage);
}

TEST(CliBranch, PartitionAndPlotData) {
  const auto plot = scratch("curve.csv");
  const CliRun r = run({"--emit-plot-data", plot.string(), "branch", "--partition", "--grid", "0.5,1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["partition"][1]["value"].get<double>(), j["partition"][1]["closed_form"].get<double>(), 1e-12);
  const std::string text = read_file(plot);
  EXPECT_EQ(text.rfind("x,y\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
}

TEST(CliBranch, DoubleCone) {
  const auto j = run_json({"branch", "--double-cone", "1.01"});
  EXPECT_LE(j["relative_deviation"].get<double>(), 0.01);
  EXPECT_EQ(run({"branch", "--double-cone", "1"}).code, kExitUsage);
}

TEST(CliOutput, WritesToFile) {
  const auto path = scratch("out.json");
  const CliRun r = run({"--output", path.string(), "geom", "--outer=-2,2", "--inner=-1,1"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NEAR(nlohmann::json::parse(read_file(path))["ell"].get<double>(), std::log(2.0), 1e-12);
}

TEST(CliUsage, HelpAndMissingSubcommand) {
  EXPECT_EQ(run({"--help"}).code, kExitOk);
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "geom", "--outer=0,1", "--inner=0.2,0.3"}).code, kExitUsage);
}
