// Runs the balloonlink executable as a subprocess and checks exit codes and
// the files it writes.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace fs = std::filesystem;

namespace {

const fs::path kCli = BALLOONLINK_CLI_PATH;
const fs::path kScenarios = BALLOONLINK_SCENARIO_DIR;

struct RunResult
{
  int exit_code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p)
{
  std::ifstream in(p, std::ios::binary);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test
{
protected:
  void SetUp() override
  {
    work_ = fs::temp_directory_path() /
            ("balloonlink_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(work_);
    fs::create_directories(work_);
  }

  void TearDown() override { fs::remove_all(work_); }

  RunResult run(const std::string& args)
  {
    const auto out = work_ / "stdout.txt";
    const auto err = work_ / "stderr.txt";
    const std::string cmd =
      "\"" + kCli.string() + "\" " + args + " >\"" + out.string() + "\" 2>\"" + err.string() + "\"";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, slurp(out), slurp(err)};
  }

  std::string default_scenario() const { return "\"" + (kScenarios / "default.json").string() + "\""; }

  fs::path work_;
};

} // namespace

TEST_F(CliTest, Table1WritesReferenceRows)
{
  const auto r = run("table1 --scenario " + default_scenario() + " --out " + work_.string());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  const auto csv = slurp(work_ / "table1.csv");
  EXPECT_TRUE(csv.starts_with("distance_m,power_density_w_m2\n"));
  EXPECT_NE(csv.find("1.00000e+01,7.95775e-01\n"), std::string::npos);
  EXPECT_NE(csv.find("5.00000e+02,3.18310e-04\n"), std::string::npos);
}

TEST_F(CliTest, EveryFigureIsWritten)
{
  for (const char* fig : {"fig4", "fig5", "fig6", "fig7", "fig8"}) {
    const auto r = run(std::string("exposure --figure ") + fig + " --scenario " + default_scenario() +
                       " --out " + work_.string());
    ASSERT_EQ(r.exit_code, 0) << fig << ": " << r.err;
    EXPECT_TRUE(slurp(work_ / (std::string(fig) + ".csv")).starts_with("abscissa,value,unit\n"));
  }
}

TEST_F(CliTest, LinkbudgetPrintsToStdout)
{
  const auto r = run("linkbudget --scenario " + default_scenario());
  ASSERT_EQ(r.exit_code, 0) << r.err;
  EXPECT_TRUE(r.out.starts_with("key,value\n"));
  EXPECT_NE(r.out.find("power_density_w_m2,3.53678e-03\n"), std::string::npos);
}

TEST_F(CliTest, ZonesAndGreenAndCoverage)
{
  ASSERT_EQ(run("zones --densities 5.0,0.796,0.0001 --scenario " + default_scenario() + " --out " +
                work_.string()).exit_code, 0);
  EXPECT_EQ(slurp(work_ / "zones.csv"),
            "density_w_m2,zone\n5.00000e+00,EXCEEDS_LIMIT\n7.96000e-01,CAUTION\n1.00000e-04,SAFE\n");

  ASSERT_EQ(run("green --scenario " + default_scenario() + " --out " + work_.string()).exit_code, 0);
  EXPECT_NE(slurp(work_ / "green.csv").find("avoided_tons,4.69536e+03\n"), std::string::npos);

  ASSERT_EQ(run("coverage --balloons 7 --scenario " + default_scenario() + " --out " + work_.string()).exit_code, 0);
  EXPECT_TRUE(slurp(work_ / "coverage.csv").starts_with("cell_radius_km,"));
}

TEST_F(CliTest, ExitCodes)
{
  EXPECT_EQ(run("exposure --figure fig9 --scenario " + default_scenario() + " --out " + work_.string()).exit_code, 1);
  EXPECT_EQ(run("zones --densities -1 --scenario " + default_scenario() + " --out " + work_.string()).exit_code, 1);
  EXPECT_EQ(run("table1").exit_code, 1);
  EXPECT_EQ(run("bogus").exit_code, 1);
  EXPECT_EQ(run("table1 --scenario " + (work_ / "missing.json").string()).exit_code, 2);

  std::ofstream(work_ / "bad.json") << R"({"transmitter": {"power_w": -5, "freq_mhz": 900}})";
  const auto bad = run("table1 --scenario " + (work_ / "bad.json").string() + " --out " + work_.string());
  EXPECT_EQ(bad.exit_code, 1);
  EXPECT_NE(bad.err.find("power_w must be > 0"), std::string::npos);

  std::ofstream(work_ / "syntax.json") << "{\n\"transmitter\": {\n";
  const auto syntax = run("table1 --scenario " + (work_ / "syntax.json").string());
  EXPECT_EQ(syntax.exit_code, 1);
  EXPECT_NE(syntax.err.find("line"), std::string::npos);

  // Output path is an existing regular file.
  std::ofstream(work_ / "occupied") << "x";
  EXPECT_EQ(run("table1 --scenario " + default_scenario() + " --out " + (work_ / "occupied").string()).exit_code, 2);
}

TEST_F(CliTest, HelpListsGreenAssumptions)
{
  for (const char* sub : {"table1", "exposure", "coverage", "green", "zones", "linkbudget"}) {
    const auto r = run(std::string(sub) + " --help");
    EXPECT_EQ(r.exit_code, 0) << sub;
    EXPECT_NE(r.out.find("DIESEL 2 L/h at 2.68 kg CO2/L"), std::string::npos) << sub;
    EXPECT_NE(r.out.find("hours_per_year=8760"), std::string::npos) << sub;
  }
  const auto cov = run("coverage --help");
  EXPECT_NE(cov.out.find("144.846"), std::string::npos);
}
