#include "commands.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace kepler::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "kepler_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

const std::vector<std::string> kCanonical{"--m", "1", "--r0", "1", "--v0", "1", "--alpha0", "60"};

std::vector<std::string> with(std::vector<std::string> head, const std::vector<std::string>& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

TEST(Classify, CanonicalEllipse) {
  const Result r = run(with({"classify"}, kCanonical));
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["class"], "ellipse");
  EXPECT_NEAR(j["e"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["periapsis"].get<double>(), 0.5, 1e-15);
  EXPECT_NEAR(j["apoapsis"].get<double>(), 1.5, 1e-15);
}

TEST(Classify, MissingFlagIsUsageError) {
  const Result r = run({"classify", "--m", "1"});
  EXPECT_EQ(r.code, kUsage);
  EXPECT_NE(r.err.find("missing required value"), std::string::npos);
}

TEST(Classify, AngleOutOfRangeIsUsageError) {
  EXPECT_EQ(run({"classify", "--m", "1", "--r0", "1", "--v0", "1", "--alpha0", "200"}).code, kUsage);
}

TEST(Classify, RadialLaunchIsNumericError) {
  const Result r = run({"classify", "--m", "1", "--r0", "1", "--v0", "1", "--alpha0", "0"});
  EXPECT_EQ(r.code, kNumeric);
  EXPECT_NE(r.err.find("degenerate"), std::string::npos);
}

TEST(Classify, NonPositiveFieldIsDomainError) {
  EXPECT_EQ(run({"classify", "--m", "-1", "--r0", "1", "--v0", "1", "--alpha0", "60"}).code, kNumeric);
}

TEST(Cli, UnknownSubcommandAndHelp) {
  EXPECT_EQ(run({"orbit"}).code, kUsage);
  EXPECT_EQ(run({}).code, kUsage);
  const Result help = run({"--help"});
  EXPECT_EQ(help.code, kSuccess);
  EXPECT_NE(help.out.find("simulate"), std::string::npos);
}

TEST(Config, FileSuppliesScenario) {
  const fs::path cfg = scratch("canonical.json");
  std::ofstream(cfg) << R"({"m": 1, "r0": 1, "v0": 1, "alpha0": 60})";
  const Result r = run({"classify", "--config", cfg.string()});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(r.out, run(with({"classify"}, kCanonical)).out);
}

TEST(Config, FlagsOverrideFile) {
  const fs::path cfg = scratch("override.json");
  std::ofstream(cfg) << R"({"m": 1, "r0": 1, "v0": 1, "alpha0": 60})";
  const Result r = run({"classify", "--config", cfg.string(), "--alpha0", "90"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["class"], "circle");
}

TEST(Config, BadFilesAreUsageErrors) {
  const fs::path unknown = scratch("unknown.json");
  std::ofstream(unknown) << R"({"m": 1, "r0": 1, "v0": 1, "alpha0": 60, "mass": 2})";
  EXPECT_EQ(run({"classify", "--config", unknown.string()}).code, kUsage);

  const fs::path broken = scratch("broken.json");
  std::ofstream(broken) << "{ not json";
  EXPECT_EQ(run({"classify", "--config", broken.string()}).code, kUsage);

  EXPECT_EQ(run({"classify", "--config", scratch("missing.json").string()}).code, kUsage);
}

TEST(Simulate, WritesCsvAndDiagnostics) {
  const fs::path csv = scratch("sim.csv");
  const Result r = run(with({"simulate", "--dt", "1e-3", "--steps", "13000", "--out", csv.string()}, kCanonical));
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_LT(j["Q_drift"].get<double>(), 1e-12);
  EXPECT_FALSE(j["observed_period"].is_null());
  const std::string text = slurp(csv);
  EXPECT_EQ(text.rfind("t,x,y,vx,vy,r,v,alpha\n", 0), 0u);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 13002);
}

TEST(Simulate, ByteIdenticalReruns) {
  const fs::path a = scratch("a.csv");
  const fs::path b = scratch("b.csv");
  const auto args = with({"simulate", "--dt", "1e-3", "--steps", "3000"}, kCanonical);
  const Result first = run(with(args, {"--out", a.string()}));
  const Result second = run(with(args, {"--out", b.string()}));
  ASSERT_EQ(first.code, kSuccess);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(slurp(a), slurp(b));
}

TEST(Simulate, Decimation) {
  const fs::path csv = scratch("dec.csv");
  const Result r =
      run(with({"simulate", "--dt", "1e-3", "--steps", "1000", "--decimate", "10", "--out", csv.string()}, kCanonical));
  ASSERT_EQ(r.code, kSuccess) << r.err;
  const std::string text = slurp(csv);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 101);
}

TEST(Simulate, NeedsOutputAndValidStep) {
  EXPECT_EQ(run(with({"simulate", "--dt", "1e-3", "--steps", "10"}, kCanonical)).code, kUsage);
  EXPECT_EQ(run(with({"simulate", "--dt", "0", "--steps", "10", "--out", scratch("x.csv").string()}, kCanonical)).code,
            kUsage);
}

TEST(Simulate, RadialLaunchIsNumericError) {
  const Result r = run({"simulate", "--m", "1", "--r0", "1", "--v0", "0.5", "--alpha0", "180", "--dt", "1e-3",
                        "--steps", "100", "--out", scratch("fall.csv").string()});
  EXPECT_EQ(r.code, kNumeric);
}

TEST(Kepler3, SlopeAndExitCode) {
  const Result r = run({"kepler3", "--m", "1", "--count", "3", "--xmin", "0.5", "--xmax", "2"});
  ASSERT_EQ(r.code, kSuccess) << r.out << r.err;
  EXPECT_EQ(r.out.rfind("X,T_formula,T_simulated,rel_error\n", 0), 0u);
  const auto pos = r.out.find("# slope ");
  ASSERT_NE(pos, std::string::npos);
  EXPECT_NEAR(std::stod(r.out.substr(pos + 8)), 1.5, 0.005);
  EXPECT_EQ(run({"kepler3", "--m", "1", "--count", "1"}).code, kUsage);
}

TEST(Kepler3, RowsInOrderOfSemiMajorAxis) {
  const Kepler3Result result = run_kepler3(2.0, 3, 1.0, 4.0);
  ASSERT_EQ(result.rows.size(), 3u);
  EXPECT_NEAR(result.rows[0].semi_major, 1.0, 1e-12);
  EXPECT_NEAR(result.rows[1].semi_major, 2.0, 1e-12);
  EXPECT_NEAR(result.rows[2].semi_major, 4.0, 1e-12);
  for (const auto& row : result.rows) {
    EXPECT_NEAR(row.period_formula, 2.0 * M_PI * std::pow(row.semi_major, 1.5) / std::sqrt(2.0), 1e-10);
    EXPECT_LT(row.rel_error, 1e-3);
  }
}

TEST(ShellCheckCommand, ExitCodes) {
  const Result ok = run({"shell-check", "--a", "1", "--mass", "1", "--g", "1", "--d", "2", "--rings", "10000"});
  ASSERT_EQ(ok.code, kSuccess) << ok.err;
  EXPECT_LT(nlohmann::json::parse(ok.out)["rel_error"].get<double>(), 1e-6);
  EXPECT_EQ(run({"shell-check", "--a", "1", "--mass", "1", "--g", "1", "--d", "2", "--rings", "10"}).code, kCheckFailed);
  EXPECT_EQ(run({"shell-check", "--a", "1", "--mass", "1", "--g", "1", "--d", "0.5"}).code, kNumeric);
}

TEST(MoonCheckCommand, Values) {
  const Result r = run({"moon-check"});
  ASSERT_EQ(r.code, kSuccess) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_NEAR(j["v"].get<double>(), 1025.0, 10.25);
  EXPECT_NEAR(j["a"].get<double>(), 0.0027, 0.0027 * 0.03);
  EXPECT_EQ(j["a_two_digits"].get<double>(), 0.0027);
  EXPECT_NEAR(j["earth_ratio"].get<double>(), 3.97e14, 3.97e12);
  EXPECT_NEAR(j["moon_ratio"].get<double>(), 4.00e14, 4.00e12);
  EXPECT_TRUE(j["pass"].get<bool>());
}

TEST(MoonCheckCommand, Struct) {
  const MoonCheck mc = moon_check();
  // 2 pi 3.85e8 / 2358720 and its square over R.
  EXPECT_NEAR(mc.speed, 1025.5674023470954, 1e-9);
  EXPECT_NEAR(mc.accel, 0.0027319181733947246, 1e-15);
  EXPECT_NEAR(mc.earth_product, 9.8 * 6.367e6 * 6.367e6, 1.0);
  EXPECT_TRUE(mc.passed());
}

TEST(RoundToSignificant, Cases) {
  EXPECT_EQ(round_to_significant(0.0027319, 2), 0.0027);
  EXPECT_EQ(round_to_significant(1025.56, 3), 1030.0);
  EXPECT_EQ(round_to_significant(-0.0456, 1), -0.05);
  EXPECT_EQ(round_to_significant(0.0, 3), 0.0);
}

TEST(GeometryCheck, ExitCodes) {
  const Result r = run({"geometry-check", "--e", "0.5", "--ell", "0.75"});
  ASSERT_EQ(r.code, kSuccess) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["class"], "ellipse");
  EXPECT_EQ(run({"geometry-check", "--e", "0", "--ell", "1"}).code, kNumeric);
  EXPECT_EQ(run({"geometry-check", "--e", "0.5", "--ell", "1", "--samples", "3"}).code, kUsage);
}

}  // namespace
}  // namespace kepler::cli
