#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "strongcol/cli.hpp"
#include "strongcol/error.hpp"

using namespace strongcol;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "strongcol");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("strongcol_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& text) {
    const auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) { return (dir_ / name).string(); }
  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, ColourCycleFive) {
  const auto in = file("c5.txt", "0 1\n1 2\n2 3\n3 4\n4 0\n");
  const auto r = run({"colour", in, "--check"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = parse_document(r.out);
  EXPECT_EQ(doc.num_colours, 5);
  EXPECT_EQ(doc.bound_value, 5);
  EXPECT_EQ(doc.bound_exactness, Exactness::kExact);
  EXPECT_EQ(doc.edges.size(), 5u);
  EXPECT_FALSE(doc.seed.has_value());
  EXPECT_EQ(r.out.back(), '\n');
  EXPECT_EQ(render_document(doc), r.out);
}

TEST_F(Cli, ColourTree) {
  const auto in = file("tree.txt", "0 1\n0 2\n0 3\n3 4\n4 5\n");
  const auto r = run({"colour", in});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(parse_document(r.out).num_colours, 4);
}

TEST_F(Cli, ColourRejections) {
  EXPECT_EQ(run({"colour", file("k4.txt", "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n")}).code, 2);
  EXPECT_EQ(run({"colour", file("split.txt", "0 1\n2 3\n")}).code, 2);
  const auto bad = run({"colour", file("bad.txt", "0 1\n1 two\n")});
  EXPECT_EQ(bad.code, 3);
  EXPECT_NE(bad.err.find("line 2"), std::string::npos);
  EXPECT_EQ(run({"colour", path("missing.txt")}).code, 3);
  EXPECT_EQ(run({"colour"}).code, 3);
  EXPECT_EQ(run({}).code, 3);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(Cli, Exact) {
  auto r = run({"exact", file("c6.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "3\n");
  r = run({"exact", file("c7.txt", "0 1\n1 2\n2 3\n3 4\n4 5\n5 6\n6 0\n")});
  EXPECT_EQ(r.out, "4\n");
  ASSERT_EQ(run({"gen", "--kind", "outerplanar", "--n", "3000", "--faces", "400", "--pendant-budget", "600", "-o",
                 path("big.txt")})
                .code,
            0);
  r = run({"exact", path("big.txt"), "--timeout-s", "0"});
  EXPECT_EQ(r.code, 4);
  EXPECT_NE(r.out.find("lower="), std::string::npos);
  EXPECT_EQ(run({"exact", path("c7.txt"), "--max-colours", "3"}).code, 1);
}

TEST_F(Cli, RoundTripAndTamper) {
  ASSERT_EQ(run({"gen", "--kind", "outerplanar", "--n", "80", "--faces", "12", "--pendant-budget", "20", "--seed",
                 "9", "-o", path("g.txt")})
                .code,
            0);
  ASSERT_EQ(run({"colour", path("g.txt"), "-o", path("g.json")}).code, 0);
  const auto doc = parse_document(slurp(path("g.json")));
  EXPECT_EQ(doc.seed, 9u);
  EXPECT_EQ(doc.input_hash.size(), 16u);
  EXPECT_EQ(run({"verify", path("g.txt"), path("g.json")}).code, 0);

  // Give edge 0 the colour of an adjacent edge.
  auto tampered = doc;
  for (std::size_t i = 1; i < tampered.edges.size(); ++i) {
    const auto& a = tampered.edges[0];
    const auto& b = tampered.edges[i];
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) {
      tampered.edges[0].colour = b.colour;
      break;
    }
  }
  file("bad.json", render_document(tampered));
  const auto r = run({"verify", path("g.txt"), path("bad.json")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find(std::to_string(doc.edges[0].u) + "-" + std::to_string(doc.edges[0].v)), std::string::npos);

  auto fewer = doc;
  fewer.edges.pop_back();
  file("short.json", render_document(fewer));
  EXPECT_EQ(run({"verify", path("g.txt"), path("short.json")}).code, 3);
  EXPECT_EQ(run({"verify", path("g.txt"), file("junk.json", "{not json")}).code, 3);
}

TEST_F(Cli, Gen) {
  auto r = run({"gen", "--kind", "cycle", "--k", "9"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("#gen kind=cycle k=9\n#n 9\n0 1\n", 0), 0u);
  r = run({"gen", "--kind", "puffer", "--cycle", "5", "--pendants", "2,2,2,2,2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("#n 15\n"), std::string::npos);
  EXPECT_EQ(run({"gen", "--kind", "hexagon"}).code, 3);
  EXPECT_EQ(run({"gen", "--kind", "cycle", "--k", "2"}).code, 3);
  EXPECT_EQ(run({"gen", "--kind", "cycle", "--wat"}).code, 3);
}

TEST_F(Cli, Bench) {
  auto r = run({"bench", "--sizes", "1000", "--seed", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream lines(r.out);
  std::string header, row, extra;
  std::getline(lines, header);
  std::getline(lines, row);
  EXPECT_EQ(header, "n,m,time_ms,colours,bound,lb");
  EXPECT_EQ(row.rfind("1000,", 0), 0u);
  EXPECT_FALSE(std::getline(lines, extra));

  ASSERT_EQ(run({"bench", "--sizes", "200,400", "--csv", path("b.csv")}).code, 0);
  EXPECT_EQ(slurp(path("b.csv")).rfind("n,m,", 0), 0u);
  EXPECT_EQ(run({"bench"}).code, 3);
}
