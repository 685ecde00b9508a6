#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lfnerve/cli.hpp"

using namespace lfnerve;
namespace fs = std::filesystem;

namespace {

cli::CommandResult run(std::vector<std::string> args) {
  args.insert(args.begin(), "lfnerve");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return cli::run(static_cast<int>(argv.size()), argv.data());
}

std::string data(const std::string& name) { return corpus::data_path(name); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("lfnerve_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_F(Cli, ValidateDataFiles) {
  for (const auto& entry : fs::directory_iterator(LFNERVE_DATA_DIR)) {
    const auto r = run({"validate", entry.path().string()});
    EXPECT_EQ(r.status, 0) << entry.path() << r.err;
  }
}

TEST_F(Cli, RepCheckFirstLine) {
  const auto r = run({"rep-check", "--groupoid", data("z2.cat.json"), "--family", data("z3.fam.json")});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(first_line(r.out), "classes: 2, homotopy classes: 2, bijection: PASS");
  const auto r2 = run({"rep-check", "--groupoid", data("z2.cat.json"), "--family", data("z2.fam.json")});
  EXPECT_EQ(first_line(r2.out), "classes: 2, homotopy classes: 2, bijection: PASS");
  const auto r3 = run({"rep-check", "--groupoid", data("trivial.cat.json"), "--family", data("z3.fam.json")});
  EXPECT_EQ(first_line(r3.out), "classes: 1, homotopy classes: 1, bijection: PASS");
}

TEST_F(Cli, OutputsRevalidate) {
  ASSERT_EQ(run({"nerve", data("poset2.cat.json"), "-o", tmp("p.sset.json")}).status, 0);
  EXPECT_EQ(run({"validate", tmp("p.sset.json")}).status, 0);

  const auto e = run({"enum-lax", data("z2.cat.json"), data("z2.cat.json"), "-o", tmp("list.json")});
  ASSERT_EQ(e.status, 0) << e.err;
  EXPECT_EQ(e.out, "lax functors: 2\n");
  EXPECT_EQ(run({"validate", tmp("list.json")}).status, 0);

  // One functor from the list, written as a standalone document.
  const auto list = io::lax_functor_list_from(io::read_json(tmp("list.json")), dir_);
  io::write_json(tmp("f.laxfun.json"), io::to_json(list.back()));
  ASSERT_EQ(run({"validate", tmp("f.laxfun.json")}).status, 0);
  ASSERT_EQ(run({"nerve-map", tmp("f.laxfun.json"), "-o", tmp("f.smap.json")}).status, 0);
  EXPECT_EQ(run({"validate", tmp("f.smap.json")}).status, 0);
  const auto rc = run({"reconstruct", tmp("f.smap.json"), "--dom", data("z2.cat.json"), "--cod", data("z2.cat.json"),
                       "-o", tmp("back.laxfun.json")});
  ASSERT_EQ(rc.status, 0) << rc.err;
  EXPECT_EQ(run({"validate", tmp("back.laxfun.json")}).status, 0);
  EXPECT_EQ(io::load_lax_functor(tmp("back.laxfun.json")), io::load_lax_functor(tmp("f.laxfun.json")));
}

TEST_F(Cli, ReconstructRejectsNonSimplicialMap) {
  const auto e = run({"enum-lax", data("z2.cat.json"), data("z2.cat.json"), "-o", tmp("list.json")});
  ASSERT_EQ(e.status, 0);
  const auto list = io::lax_functor_list_from(io::read_json(tmp("list.json")), dir_);
  auto doc = io::to_json(nerve_of_lax_functor(list.back()), io::json{{"nerve_of", io::to_json(*list.back().dom)}},
                         io::json{{"nerve_of", io::to_json(*list.back().cod)}});
  doc["phi"][1]["t"] = "e";  // the edge no longer matches its 2-simplices
  io::write_json(tmp("broken.smap.json"), doc);
  const auto r = run({"reconstruct", tmp("broken.smap.json"), "--dom", data("z2.cat.json"), "--cod", data("z2.cat.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("naturality: d_"), std::string::npos) << r.err;
}

TEST_F(Cli, JsonErrors) {
  const auto r = run({"--json-errors", "reconstruct", data("z2.cat.json"), "--dom", data("z2.cat.json"), "--cod",
                      data("z2.cat.json")});
  EXPECT_EQ(r.status, 2);
  const auto j = io::json::parse(r.err);
  ASSERT_TRUE(j.contains("errors"));
  EXPECT_EQ(j["errors"][0]["law"], "io");
}

TEST_F(Cli, UsageAndIoErrors) {
  EXPECT_EQ(run({}).status, 2);
  EXPECT_EQ(run({"frobnicate"}).status, 2);
  EXPECT_EQ(run({"validate", tmp("missing.json")}).status, 2);
  std::ofstream(tmp("bad.json")) << "{ not json";
  EXPECT_EQ(run({"validate", tmp("bad.json")}).status, 2);
  auto doc = io::read_json(data("terminal.2cat.json"));
  doc["extra"] = 1;
  io::write_json(tmp("extra.json"), doc);
  const auto r = run({"validate", tmp("extra.json")});
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("unknown field"), std::string::npos);
  EXPECT_EQ(run({"--help"}).status, 0);
}

TEST_F(Cli, ValidationFailureExitsOne) {
  auto doc = io::read_json(data("z2.group.json"));
  doc["mult"].erase(doc["mult"].size() - 1);
  io::write_json(tmp("g.json"), doc);
  const auto r = run({"validate", tmp("g.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("partial table"), std::string::npos) << r.err;
}

TEST_F(Cli, SizeGuardFlag) {
  const auto r = run({"--size-guard", "2", "h2", "--groupoid", data("z2.cat.json"), "--family", data("z3.fam.json")});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("size guard"), std::string::npos) << r.err;
}

TEST_F(Cli, HomotopyClassesAndH2) {
  ASSERT_EQ(run({"nerve", data("z2.cat.json"), "-o", tmp("b.json")}).status, 0);
  const auto r = run({"homotopy-classes", tmp("b.json"), tmp("b.json")});
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(first_line(r.out), "maps: 2, homotopy classes: 2");
  const auto h = run({"h2", "--groupoid", data("z2.cat.json"), "--family", data("z2.fam.json"), "-o", tmp("h2.json")});
  EXPECT_EQ(h.status, 0);
  EXPECT_EQ(first_line(h.out), "classes: 2");
  EXPECT_EQ(io::read_json(tmp("h2.json"))["classes"].size(), 2u);
}

TEST_F(Cli, RepeatedRunsAreByteIdentical) {
  for (int i = 0; i < 2; ++i) {
    ASSERT_EQ(run({"nerve", data("arrow2.2cat.json"), "-o", tmp("n" + std::to_string(i))}).status, 0);
    ASSERT_EQ(run({"rep-check", "--groupoid", data("z2.cat.json"), "--family", data("z3.fam.json"), "-o",
                   tmp("r" + std::to_string(i))})
                  .status,
              0);
  }
  auto slurp = [](const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    return std::string(std::istreambuf_iterator<char>(in), {});
  };
  EXPECT_EQ(slurp(tmp("n0")), slurp(tmp("n1")));
  EXPECT_EQ(slurp(tmp("r0")), slurp(tmp("r1")));
}
