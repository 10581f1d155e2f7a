#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "msomb/graph.hpp"
#include "msomb/trees.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(MSOMB_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("msomb_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    std::ofstream(dir_ / "p3.txt") << "3\n0 1\n1 2\n";
  }
  void TearDown() override { fs::remove_all(dir_); }
  fs::path dir_;
};

TEST_F(Cli, ComputeP3) {
  const auto r = run("compute --graph " + (dir_ / "p3.txt").string() + " --alpha 2");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(r.out.rfind("quantity,alpha,value,equivalent,classical\n", 0), 0u);
  EXPECT_NE(r.out.find("3.16227766"), std::string::npos);
  const auto json = run("compute --graph " + (dir_ / "p3.txt").string() + " --alpha -inf --format json");
  ASSERT_EQ(json.status, 0);
  EXPECT_NE(json.out.find("-inf"), std::string::npos);
}

TEST_F(Cli, Matrix) {
  const auto r = run("matrix --graph " + (dir_ / "p3.txt").string() + " --alpha 2 --out " + (dir_ / "m.csv").string());
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(slurp(dir_ / "m.csv"), "0,1.5811388300841895,0\n1.5811388300841895,0,1.5811388300841895\n0,1.5811388300841895,0\n");
  EXPECT_NE(r.out.find("trace_of_square"), std::string::npos);
  EXPECT_NE(r.out.find("variance_identity_residual"), std::string::npos);
}

TEST_F(Cli, EnumerateRoundTrip) {
  ASSERT_EQ(run("enumerate --out " + (dir_ / "sk").string()).status, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(dir_ / "sk")) files += entry.path().extension() == ".txt";
  EXPECT_EQ(files, 18);
  const auto skeletons = msomb::enumerate_octane_skeletons();
  for (std::size_t i = 0; i < skeletons.size(); ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "%02zu.txt", i + 1);
    const auto g = msomb::parse_graph(slurp(dir_ / "sk" / name));
    EXPECT_EQ(msomb::canonical_form(g), skeletons[i].canonical) << name;
  }
  const auto manifest = slurp(dir_ / "sk" / "manifest.csv");
  EXPECT_EQ(manifest.rfind("index,name,canonical,file\n", 0), 0u);
  EXPECT_NE(manifest.find("\"2,2,3,3-tetramethylbutane\""), std::string::npos);
}

TEST_F(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify --corpus default --kalpha-constant lemma").status, 0);
  // The K_alpha constant as a function of Delta/delta fails on some graphs.
  const auto printed = run("verify --corpus default");
  EXPECT_EQ(printed.status, 2);
  EXPECT_EQ(printed.out.rfind("bound_id,", 0), 0u);
}

TEST_F(Cli, OperationalErrors) {
  std::ofstream(dir_ / "bad.txt") << "3\n0 0\n";
  EXPECT_EQ(run("compute --graph " + (dir_ / "bad.txt").string()).status, 1);
  EXPECT_EQ(run("compute --graph " + (dir_ / "missing.txt").string()).status, 1);
  EXPECT_EQ(run("compute --graph " + (dir_ / "p3.txt").string() + " --alpha banana").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  std::ofstream(dir_ / "props.csv") << "name,p\nnot-a-molecule,1\n";
  EXPECT_EQ(run("qspr --properties " + (dir_ / "props.csv").string() + " --property p").status, 1);
}

TEST_F(Cli, ScanIsDeterministic) {
  ASSERT_EQ(run("enumerate --out " + (dir_ / "sk").string()).status, 0);
  std::ostringstream csv;
  csv << "name,p\n";
  const auto skeletons = msomb::enumerate_octane_skeletons();
  for (std::size_t i = 0; i < skeletons.size(); ++i) {
    char name[16];
    std::snprintf(name, sizeof name, "%02zu", i + 1);
    csv << name << ',' << (i * i % 7) + 0.5 * i << '\n';
  }
  std::ofstream(dir_ / "props.csv") << csv.str();
  const std::string args = "scan --properties " + (dir_ / "props.csv").string() + " --graphs " +
                           (dir_ / "sk").string() + " --grid -2:0.1:2 --format json";
  const auto a = run("--jobs 1 " + args);
  const auto b = run("--jobs 3 " + args);
  ASSERT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out.find("\"property\": \"p\""), std::string::npos);
}

}  // namespace
