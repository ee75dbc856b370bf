#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include "canonwit/canonical.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("canonwit_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
    return path(name);
  }

  Outcome run(const std::string& args, const std::string& env = "") const {
    std::string cmd = env + " " CANONWIT_CLI " " + args + " 2>" + path("stderr.txt");
    Outcome r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    int status = ::pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  std::string err() const {
    std::ifstream in(path("stderr.txt"));
    return std::string(std::istreambuf_iterator<char>(in), {});
  }

  std::string gen(const std::string& name, const std::string& args) const {
    Outcome r = run("gen " + args);
    EXPECT_EQ(r.code, 0) << args;
    return write(name, r.out);
  }

  fs::path dir_;
};

TEST_F(Cli, ExtractCycle) {
  std::string g = gen("c9.txt", "--kind hole --order 9");
  Outcome r = run("extract --input " + g + " --s 5 --q 2");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["type"], "canonical");
  EXPECT_EQ(j["descriptor"], "C9");
  EXPECT_EQ(j["verified"], true);
}

TEST_F(Cli, ExtractSingleEdgeInconclusive) {
  std::string g = write("k2.txt", "2 1\n0 1\n");
  Outcome r = run("extract --input " + g + " --s 5 --q 2");
  EXPECT_EQ(r.code, 2);
  json j = json::parse(r.out);
  EXPECT_EQ(j["type"], "inconclusive");
  EXPECT_FALSE(j["stageLog"].empty());
}

TEST_F(Cli, ExtractRake) {
  std::string g = gen("rake.txt", "--kind rake -k 12");
  Outcome r = run("extract --input " + g + " --s 4 --q 2");
  ASSERT_EQ(r.code, 0);
  json j = json::parse(r.out);
  EXPECT_EQ(j["type"], "canonical");
  EXPECT_EQ(j["descriptor"].get<std::string>().substr(0, 1), "H");
  EXPECT_EQ(j["verified"], true);
}

TEST_F(Cli, ExtractMalformedInput) {
  std::string g = write("bad.txt", "3 2\n0 1\n1 x\n");
  Outcome r = run("extract --input " + g + " --s 4 --q 2");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(err().find("line 3"), std::string::npos) << err();
}

TEST_F(Cli, UnknownFlagRejected) {
  std::string g = gen("c5.txt", "--kind hole --order 5");
  EXPECT_EQ(run("extract --input " + g + " --s 4 --q 2 --frobnicate").code, 1);
  EXPECT_EQ(run("extract --input " + g + " --s 4 --q 2 --stage nowhere").code, 1);
}

TEST_F(Cli, VerifyRoundTrip) {
  std::string g = gen("c9.txt", "--kind hole --order 9");
  std::string w = write("w.json", run("extract --input " + g + " --s 5 --q 2").out);
  EXPECT_EQ(run("verify --input " + g + " --witness " + w).code, 0);
}

TEST_F(Cli, VerifyChordDiagnostic) {
  std::string g = gen("c5.txt", "--kind hole --order 5");
  std::string w = write("w.json", R"({"type":"induced-path","vertices":[0,1,2,3,4]})");
  Outcome r = run("verify --input " + g + " --witness " + w);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(err().find("chord (0,4)"), std::string::npos) << err();
}

TEST_F(Cli, VerifyOverlappingSides) {
  std::string g = gen("k.txt", "--kind hole --order 5");
  std::string w = write("w.json", R"({"type":"biclique","sideA":[0,1],"sideB":[1,2]})");
  Outcome r = run("verify --input " + g + " --witness " + w);
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(err().find("sides intersect"), std::string::npos) << err();
}

TEST_F(Cli, VerifyUnparsableWitness) {
  std::string g = gen("c5.txt", "--kind hole --order 5");
  std::string w = write("w.json", "{");
  EXPECT_EQ(run("verify --input " + g + " --witness " + w).code, 1);
}

TEST_F(Cli, Bounds) {
  Outcome p = run("bounds --fn P --args 2 3");
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "5\nflags: none\n");
  EXPECT_EQ(run("bounds --fn C --args 2 2").out, "33\nflags: none\n");
  EXPECT_EQ(run("bounds --fn Y --args 3 3 --literal").out, "1\nflags: degenerate-base-case\n");
  EXPECT_EQ(run("bounds --fn P --args 2").code, 1);
  EXPECT_EQ(run("bounds --fn Q --args 2 3").code, 1);
  json j = json::parse(run("bounds --fn C --args 2 2 --json").out);
  EXPECT_EQ(j["value"], "33");
}

TEST_F(Cli, GenExamples) {
  Outcome c5 = run("gen --kind hole --order 5");
  EXPECT_EQ(c5.out, "5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  Outcome rake = run("gen --kind rake -k 9 --dense 1");
  EXPECT_EQ(rake.out.substr(0, rake.out.find('\n')), "20 19");
  Outcome tight = run("gen --kind h-tight --order 3");
  EXPECT_EQ(tight.out.substr(0, tight.out.find('\n')), "7 8");
  EXPECT_EQ(run("gen --kind hole --order 3").code, 1);
  EXPECT_EQ(run("gen --kind random --order 6").code, 1);
  EXPECT_EQ(run("gen --kind random --order 12 --seed 4").out,
            run("gen --kind random --order 12 --seed 4").out);
}

TEST_F(Cli, Antichain) {
  for (int order : {3, 4, 6}) {
    Outcome r = run("antichain --max-order " + std::to_string(order));
    EXPECT_EQ(r.code, 0) << order;
    EXPECT_EQ(r.out.substr(0, 3), "OK ") << r.out;
  }
  EXPECT_EQ(run("antichain --max-order 3").out, "OK 0 pairs\n");
}

TEST_F(Cli, Oracle) {
  std::string g = gen("grid.txt", "--kind grid --order 3");
  json j = json::parse(run("oracle --input " + g + " --query longest-path").out);
  EXPECT_EQ(j["vertices"].size(), 9u);
  std::string c4 = gen("c4.txt", "--kind hole --order 4");
  json e = json::parse(run("oracle --input " + g + " --query embed --pattern " + c4).out);
  EXPECT_EQ(e["found"], true);
  json tw = json::parse(run("oracle --input " + g + " --query treewidth").out);
  EXPECT_EQ(tw["treewidth"], 3);
}

TEST_F(Cli, CeilingFromEnvironment) {
  std::string g = gen("grid.txt", "--kind grid --order 3");
  std::string c4 = gen("c4.txt", "--kind hole --order 4");
  Outcome r = run("oracle --input " + g + " --query embed --pattern " + c4,
              "CANONICAL_WITNESS_CEILING=3");
  EXPECT_EQ(r.code, 4);
}

TEST_F(Cli, DeterministicOutput) {
  std::string g = gen("rand.txt", "--kind random --order 14 --p 0.3 --seed 9");
  for (const char* stage : {"pipeline", "path", "dense-rake"}) {
    std::string args = "extract --input " + g + " --s 4 --q 2 --stage " + stage;
    Outcome a = run(args), b = run(args);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << stage;
  }
}

TEST_F(Cli, GenExtractRoundTrip) {
  using namespace canonwit;
  const std::pair<const char*, Tightness> kinds[] = {
      {"h", Tightness::kPlain}, {"h-semi", Tightness::kSemiTight}, {"h-tight", Tightness::kTight}};
  for (std::size_t order = 4; order <= 9; ++order) {
    std::string g = gen("hole.txt", "--kind hole --order " + std::to_string(order));
    json j = json::parse(run("extract --input " + g + " --s " + std::to_string(order) +
                             " --q 2").out);
    EXPECT_EQ(j["descriptor"], to_string(CanonicalDescriptor::hole(order)));
    for (auto [kind, t] : kinds) {
      std::string h = gen("h.txt", std::string("--kind ") + kind + " --order " +
                                       std::to_string(order));
      json w = json::parse(run("extract --input " + h + " --s " + std::to_string(order) +
                               " --q 2").out);
      EXPECT_EQ(w["descriptor"], to_string(CanonicalDescriptor::h_graph(order, t))) << kind;
    }
  }
}

}  // namespace
