#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

std::string bin() {
  const char* b = std::getenv("CAYLEYLAB_BIN");
  return b ? b : "./cayleylab";
}

int run(const std::string& args) {
  std::string cmd = bin() + " " + args + " >/dev/null 2>&1";
  int rc = std::system(cmd.c_str());
  return WEXITSTATUS(rc);
}

fs::path write_config(const std::string& name, const std::string& content) {
  fs::path dir = fs::temp_directory_path() / "cayleylab_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream out(p);
  out << content;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Cli, ConvergeCyclicLaw) {
  auto cfg = write_config("converge.json",
                          R"({"family": {"name": "cyclic", "from": 3, "to": 20}, "rmax": 12})");
  fs::path out = fs::temp_directory_path() / "cayleylab_test" / "conv_out";
  fs::remove_all(out);
  ASSERT_EQ(run("--config " + cfg.string() + " --out " + out.string() + " converge"), 0);
  auto payload = slurp(out / "converge.json");
  EXPECT_NE(payload.find("\"nondecreasing\": true"), std::string::npos);
  // R_9 = 4 per the radius law
  EXPECT_NE(payload.find("\"R_m\": 4"), std::string::npos);
  EXPECT_NE(payload.find("\"conventions\""), std::string::npos);
}

TEST(Cli, DeterministicOutputs) {
  auto cfg = write_config(
      "spec.json", R"({"family": {"name": "selberg", "primes": [3, 5]}, "poincare": {"q": 2, "d": 2, "trials": 50}})");
  fs::path out1 = fs::temp_directory_path() / "cayleylab_test" / "s1";
  fs::path out2 = fs::temp_directory_path() / "cayleylab_test" / "s2";
  fs::remove_all(out1);
  fs::remove_all(out2);
  ASSERT_EQ(run("--config " + cfg.string() + " --seed 42 --out " + out1.string() + " spectrum"), 0);
  ASSERT_EQ(run("--config " + cfg.string() + " --seed 42 --out " + out2.string() + " spectrum"), 0);
  EXPECT_EQ(slurp(out1 / "spectrum.json"), slurp(out2 / "spectrum.json"));
}

TEST(Cli, SeedMandatoryForRandomized) {
  auto cfg = write_config(
      "spec_noseed.json",
      R"({"family": {"name": "selberg", "primes": [3]}, "poincare": {"trials": 10}})");
  EXPECT_EQ(run("--config " + cfg.string() + " spectrum"), 2);
  // a config-level seed satisfies the requirement; the flag overrides it
  auto cfg2 = write_config(
      "spec_cfgseed.json",
      R"({"family": {"name": "selberg", "primes": [3]}, "poincare": {"trials": 10}, "seed": 7})");
  EXPECT_EQ(run("--config " + cfg2.string() + " spectrum"), 0);
}

TEST(Cli, RoundtripActionStep) {
  auto cfg = write_config(
      "rt_step.json",
      R"({"family": {"name": "cyclic", "from": 7, "to": 10}, "rmax": 20, "action": {"kind": "translation", "step": 2.5}})");
  fs::path out = fs::temp_directory_path() / "cayleylab_test" / "rt_step_out";
  fs::remove_all(out);
  ASSERT_EQ(run("--config " + cfg.string() + " --out " + out.string() + " fibred-roundtrip"), 0);
  EXPECT_NE(slurp(out / "roundtrip.json").find("\"pass\": true"), std::string::npos);
}

TEST(Cli, UnknownKeyRejected) {
  auto cfg = write_config("bad.json", R"({"family": {"name": "cyclic"}, "surprise": 1})");
  EXPECT_EQ(run("--config " + cfg.string() + " converge"), 2);
}

TEST(Cli, UnknownFamilyKeyRejected) {
  auto cfg = write_config("bad2.json", R"({"family": {"name": "cyclic", "tpo": 9}})");
  EXPECT_EQ(run("--config " + cfg.string() + " converge"), 2);
}

TEST(Cli, FibredRoundtripPasses) {
  auto cfg = write_config(
      "rt.json", R"({"family": {"name": "cyclic", "from": 5, "to": 12}, "rmax": 40, "q": 2.0, "delta": 0.2})");
  fs::path out = fs::temp_directory_path() / "cayleylab_test" / "rt_out";
  fs::remove_all(out);
  ASSERT_EQ(run("--config " + cfg.string() + " --out " + out.string() + " fibred-roundtrip"), 0);
  auto payload = slurp(out / "roundtrip.json");
  EXPECT_NE(payload.find("\"pass\": true"), std::string::npos);
  EXPECT_NE(payload.find("\"transitions_bit_stable\": true"), std::string::npos);
}

TEST(Cli, ExportDot) {
  auto cfg = write_config("exp.json",
                          R"({"family": {"name": "cyclic", "from": 6, "to": 6}, "index": 0, "radius": 2})");
  fs::path out = fs::temp_directory_path() / "cayleylab_test" / "exp_out";
  fs::remove_all(out);
  ASSERT_EQ(run("--config " + cfg.string() + " --format dot --out " + out.string() + " export"), 0);
  auto payload = slurp(out / "ball.dot");
  EXPECT_NE(payload.find("digraph"), std::string::npos);
}

TEST(Cli, TheoremDAndE) {
  auto cfgd = write_config("thmd.json", R"({"p": 3, "l": 1, "n": 0, "lef": "sym3"})");
  fs::path outd = fs::temp_directory_path() / "cayleylab_test" / "thmd_out";
  fs::remove_all(outd);
  ASSERT_EQ(run("--config " + cfgd.string() + " --out " + outd.string() + " theorem-d"), 0);
  EXPECT_NE(slurp(outd / "theorem_d.json").find("\"pass\": true"), std::string::npos);

  auto cfge = write_config("thme.json", R"({"p": 3, "n_seq": [1, 1, 1], "count": 3})");
  fs::path oute = fs::temp_directory_path() / "cayleylab_test" / "thme_out";
  fs::remove_all(oute);
  ASSERT_EQ(run("--config " + cfge.string() + " --out " + oute.string() + " theorem-e"), 0);
  auto payload = slurp(oute / "theorem_e.json");
  EXPECT_NE(payload.find("\"xi_size\": 8"), std::string::npos);
  EXPECT_NE(payload.find("\"omega_size\": 9"), std::string::npos);
  EXPECT_NE(payload.find("\"ball_vertices\": 85"), std::string::npos);
}

TEST(Cli, MissingConfigIsBuildError) {
  EXPECT_EQ(run("--config /nonexistent.json converge"), 2);
}

TEST(Cli, DeclarativeFamilySpecForm) {
  auto cfg = write_config(
      "decl.json",
      R"({"family": "cyclic", "params": {"from": 3, "to": 15}, "radii": [12], "limit_check": true})");
  fs::path out = fs::temp_directory_path() / "cayleylab_test" / "decl_out";
  fs::remove_all(out);
  ASSERT_EQ(run("--config " + cfg.string() + " --out " + out.string() + " converge"), 0);
  auto payload = slurp(out / "converge.json");
  EXPECT_NE(payload.find("\"R_m\": 4"), std::string::npos);  // m = 9

  auto cfg2 = write_config(
      "decl2.json", R"({"family": "selberg", "params": {"primes": [3, 5]}, "limit_check": false})");
  ASSERT_EQ(run("--config " + cfg2.string() + " converge"), 0);
}

TEST(Cli, ViolationWitnessRunExitsOne) {
  // an impossible spectral-gap assertion: finding the violation is a
  // successful witness run with exit code 1
  auto cfg = write_config(
      "viol.json", R"({"family": {"name": "selberg", "primes": [3, 5]}, "assert_min_lambda1": 1.9})");
  EXPECT_EQ(run("--config " + cfg.string() + " spectrum"), 1);
}

TEST(Cli, WorkersDoNotChangeOutputs) {
  auto cfg = write_config("w.json", R"({"family": {"name": "cyclic", "from": 3, "to": 24}, "rmax": 15})");
  fs::path out1 = fs::temp_directory_path() / "cayleylab_test" / "w1";
  fs::path out2 = fs::temp_directory_path() / "cayleylab_test" / "w2";
  fs::remove_all(out1);
  fs::remove_all(out2);
  ASSERT_EQ(run("--config " + cfg.string() + " --workers 1 --out " + out1.string() + " converge"), 0);
  ASSERT_EQ(run("--config " + cfg.string() + " --workers 4 --out " + out2.string() + " converge"), 0);
  EXPECT_EQ(slurp(out1 / "converge.json"), slurp(out2 / "converge.json"));
}
