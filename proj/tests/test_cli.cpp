#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kipp/generators.hpp"
#include "kipp/io.hpp"

using namespace kipp;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = -1;
  std::string out;
};

CliRun run(const std::string& args) {
  const std::string cmd = std::string(KIPP_BINARY) + " " + args + " 2>/dev/null";
  CliRun r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("kipp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write_matrix(const std::string& name, const ComplexMatrix& a) const {
    write_text(path(name), to_json(a).dump());
    return path(name);
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, PolyOfJordanTwo) {
  ASSERT_EQ(run("generate jordan --n 2 --out " + path("j2.json")).code, 0);
  const CliRun r = run("poly " + path("j2.json") + " --seed 5");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["seed"], 5);
  double z2 = 0, x2 = 0, y2 = 0;
  for (const auto& t : j["polynomial"]["terms"]) {
    const double c = t["coeff"];
    if (t["z"] == 2) z2 = c;
    if (t["x"] == 2) x2 = c;
    if (t["y"] == 2) y2 = c;
  }
  EXPECT_NEAR(z2, 1.0, 1e-12);
  EXPECT_NEAR(x2, -0.25, 1e-12);
  EXPECT_NEAR(y2, -0.25, 1e-12);
}

TEST_F(Cli, PolyOfDiagonalIsProduct) {
  ComplexMatrix d = ComplexMatrix::Zero(2, 2);
  d(0, 0) = 1.0;
  d(1, 1) = kI;
  const CliRun r = run("poly " + write_matrix("d.json", d));
  ASSERT_EQ(r.code, 0);
  // (x + z)(y + z) = z^2 + xz + yz + xy
  const Json j = Json::parse(r.out);
  double xy = 0.0, xz = 0.0, x2 = 0.0;
  for (const auto& t : j["polynomial"]["terms"]) {
    if (t["x"] == 1 && t["y"] == 1) xy = t["coeff"];
    if (t["x"] == 1 && t["z"] == 1) xz = t["coeff"];
    if (t["x"] == 2) x2 = t["coeff"];
  }
  EXPECT_NEAR(xy, 1.0, 1e-12);
  EXPECT_NEAR(xz, 1.0, 1e-12);
  EXPECT_NEAR(x2, 0.0, 1e-12);
}

TEST_F(Cli, PolyCheckOracleAndPreconditions) {
  const CliRun r = run("poly " + write_matrix("r.json", random_matrix(5, {70})) + " --check-oracle");
  ASSERT_EQ(r.code, 0);
  EXPECT_LT(Json::parse(r.out)["oracleDiscrepancy"].get<double>(), 1e-9);
  EXPECT_EQ(run("poly " + path("r.json") + " --expanded").code, 3);
  EXPECT_EQ(run("poly " + write_matrix("j2.json", jordan_shift(2)) + " --expanded").code, 3);
  write_text(path("bad.json"), "{\"dim\": 2, \"entries\": [[1, 0]]}");
  EXPECT_EQ(run("poly " + path("bad.json")).code, 2);
  write_text(path("junk.json"), "not json");
  EXPECT_EQ(run("poly " + path("junk.json")).code, 2);
  EXPECT_EQ(run("poly").code, 2);
}

TEST_F(Cli, ClassifyTwoEllipseBlock) {
  ASSERT_EQ(run("generate two-ellipse --lambdas 0.5,0.2 -0.4,0.1 0.1,-0.6 0.3,0.5 -0.2,-0.3 --r 0.9 --s 0.4 --out " +
                path("te.json"))
                .code,
            0);
  const CliRun r = run("classify " + path("te.json") + " --svg " + path("te.svg"));
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  ASSERT_EQ(j["components"].size(), 3u);
  EXPECT_EQ(j["components"][0]["kind"], "Point");
  EXPECT_EQ(j["components"][1]["kind"], "Ellipse");
  EXPECT_EQ(j["components"][2]["kind"], "Ellipse");
  ASSERT_EQ(j["reports"].size(), 1u);
  EXPECT_LT(j["reports"][0]["maxResidual"].get<double>(), 1e-10);
  EXPECT_EQ(slurp(path("te.svg")).rfind("<?xml", 0), 0u);
}

TEST_F(Cli, ClassifyJordanFiveIsCircularAtOrigin) {
  ASSERT_EQ(run("generate s5 --a 0 --b 0 --c 0 --out " + path("j5.json")).code, 0);
  EXPECT_EQ(matrix_from_json(Json::parse(slurp(path("j5.json")))), jordan_shift(5));
  const Json j = Json::parse(run("classify " + path("j5.json")).out);
  EXPECT_TRUE(j["discFit"]["circular"].get<bool>());
  EXPECT_LT(j["discFit"]["centerModulus"].get<double>(), 1e-10);
}

TEST_F(Cli, ClassifyDiagonalAndSizes) {
  ComplexMatrix d = ComplexMatrix::Zero(5, 5);
  for (int i = 0; i < 5; ++i) d(i, i) = std::polar(0.6, 1.1 * i);
  const Json j = Json::parse(run("classify " + write_matrix("d.json", d)).out);
  ASSERT_EQ(j["components"].size(), 5u);
  for (const auto& c : j["components"]) EXPECT_EQ(c["kind"], "Point");
  EXPECT_EQ(run("classify " + write_matrix("j4.json", jordan_shift(4))).code, 3);
  EXPECT_EQ(run("classify " + path("j4.json") + " --disc-only").code, 0);
}

TEST_F(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate pi --n 5 --ker 2 --seed 7 --out " + path("a.json")).code, 0);
  ASSERT_EQ(run("generate pi --n 5 --ker 2 --seed 7 --out " + path("b.json")).code, 0);
  EXPECT_EQ(slurp(path("a.json")), slurp(path("b.json")));
  const Json j = Json::parse(slurp(path("a.json")));
  EXPECT_EQ(j["generator"]["seed"], 7);
  EXPECT_EQ(run("generate bogus").code, 2);
  EXPECT_EQ(run("generate s5 --a 1.5").code, 3);
  EXPECT_EQ(run("generate flat3 --l3 0 --l4 0 --l5 0 --mu -1").code, 3);
  EXPECT_EQ(run("generate ker2 --seed 3 --b-equals-a").code, 0);
}

TEST_F(Cli, BoundaryCsvAndSvg) {
  const CliRun r = run("boundary " + write_matrix("j2.json", jordan_shift(2)) + " --samples 32 --svg " + path("b.svg"));
  ASSERT_EQ(r.code, 0);
  std::istringstream lines(r.out);
  std::string line;
  int rows = 0;
  std::getline(lines, line);
  EXPECT_NE(line.find("seed=0"), std::string::npos);
  std::getline(lines, line);
  EXPECT_EQ(line, "re,im");
  while (std::getline(lines, line)) {
    double re = 0, im = 0;
    ASSERT_EQ(std::sscanf(line.c_str(), "%lf,%lf", &re, &im), 2);
    EXPECT_NEAR(std::hypot(re, im), 0.5, 1e-12);
    ++rows;
  }
  EXPECT_EQ(rows, 32);
  EXPECT_NE(slurp(path("b.svg")).find("fitted-disc"), std::string::npos);
  EXPECT_EQ(run("boundary " + path("j2.json") + " --samples 4").code, 2);
}

TEST_F(Cli, CampaignPassFailAndConfig) {
  const std::string env = "KIPP_RUNS_DIR=" + path("runs") + " ";
  const CliRun pass = run("campaign --trials 40 --seed 3 --id smoke --runs-dir " + path("runs"));
  EXPECT_EQ(pass.code, 0);
  EXPECT_NE(pass.out.find("PASS"), std::string::npos);

  const std::string cmd = "env " + env + KIPP_BINARY + " campaign --trials 24 --seed 3 --id envrun >/dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_TRUE(fs::exists(path("runs") + "/envrun/records.jsonl"));
  EXPECT_TRUE(fs::exists(path("runs") + "/envrun/summary.json"));
  EXPECT_TRUE(fs::exists(path("runs") + "/envrun/config.json"));

  const CliRun fail = run("campaign --trials 12 --tol-center 1e-30 --no-persist");
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run("campaign --trials 0 --no-persist").code, 2);
  EXPECT_TRUE(fs::exists(path("runs") + "/smoke/records.jsonl"));
}

TEST_F(Cli, Identities) {
  const CliRun r = run("identities --count 20 --ker2-samples 5 --seed 9");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["seed"], 9);
  EXPECT_TRUE(j["oracle"]["passed"].get<bool>());
  EXPECT_TRUE(j["s5"]["passed"].get<bool>());
  EXPECT_TRUE(j["ker2"]["passed"].get<bool>());
}
