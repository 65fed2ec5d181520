#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
  std::vector<std::string> lines() const {
    std::vector<std::string> v;
    std::istringstream in(out);
    for (std::string l; std::getline(in, l);)
      v.push_back(l);
    return v;
  }
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = pmhopf::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

using Lines = std::vector<std::string>;

} // namespace

TEST(Cli, ProductFiveTerms) {
  auto r = run({"product", "SMQSym", "[{3 4},{1};{2},{}]", "[{2 3 4},{1}]"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.lines(),
            (Lines{"[{3 4},{1},{6 7 8},{5};{2},{},{},{}]",
                   "[{3 4},{1},{},{};{2},{},{6 7 8},{5}]",
                   "[{3 4},{1},{},{};{2},{},{},{};{},{},{6 7 8},{5}]",
                   "[{3 4},{1},{},{};{},{},{6 7 8},{5};{2},{},{},{}]",
                   "[{},{},{6 7 8},{5};{3 4},{1},{},{};{2},{},{},{}]"}));
}

TEST(Cli, UnitProduct) {
  for (const char *x : {"[{1},{2}]", "[{2 4},{1};{6},{3 5}]"}) {
    auto r = run({"product", "SMQSym", "[]", x});
    EXPECT_EQ(r.lines(), Lines{x});
  }
}

TEST(Cli, Coproduct) {
  auto r = run({"coproduct", "SMQSym", "[{2 4},{1};{6},{3 5}]"});
  EXPECT_EQ(r.lines(), (Lines{"[] ⊗ [{2 4},{1};{6},{3 5}]",
                              "[{2 3},{1}] ⊗ [{3},{1 2}]",
                              "[{2 4},{1};{6},{3 5}] ⊗ []"}));
}

// MC[1]MC[1] = 2 MC[1,0;0,1] + MC[1,1], and M[1,0;0,1] expands to twice
// MC[1,0;0,1].
TEST(Cli, OtherAlgebras) {
  EXPECT_EQ(run({"product", "MQSym", "[1]", "[1]"}).lines(),
            (Lines{"[0,1;1,0]", "[1,0;0,1]", "[1,1]"}));
  EXPECT_EQ(run({"product", "MSym", "[1]", "[1]"}).lines(),
            (Lines{"[1,0;0,1]", "[1,1]"}));
  EXPECT_EQ(run({"product", "WQSym", "1", "1"}).lines(),
            (Lines{"WQ[11]", "WQ[12]", "WQ[21]"}));
  EXPECT_EQ(run({"coproduct", "MRSym", "[1;1]"}).code, 0);
}

TEST(Cli, Hilbert) {
  auto r = run({"hilbert", "MRSym", "--upto", "7", "--method", "both"});
  ASSERT_EQ(r.code, 0);
  auto l = r.lines();
  ASSERT_GE(l.size(), 9u);
  EXPECT_EQ(Lines(l.begin(), l.begin() + 8),
            (Lines{"1", "1", "4", "16", "76", "400", "2356", "15200"}));
  EXPECT_EQ(l[8].substr(0, 5), "AGREE");
  EXPECT_NE(r.out.find("C(i+k-1,k)"), std::string::npos);
}

TEST(Cli, HilbertMethods) {
  EXPECT_EQ(run({"hilbert", "SMQSym", "--upto", "3", "--method", "enumerate"})
                .lines(),
            (Lines{"1", "1", "9", "169"}));
  EXPECT_EQ(run({"hilbert", "MSym", "--upto", "3", "--method", "formula"}).code, 1);
  EXPECT_EQ(run({"hilbert", "MSym", "--upto", "9", "--method", "enumerate"}).code, 1);
  EXPECT_EQ(run({"hilbert", "MSym", "--upto", "3"}).lines()[3], "10");
}

TEST(Cli, Dendriform) {
  EXPECT_EQ(run({"dendriform", "dgg", "[{2 4},{1};{6},{3 5}]"}).lines(),
            Lines{"[{2 3},{1}] ⊗ [{3},{1 2}]"});
  EXPECT_EQ(run({"dendriform", "dll", "[{2 4},{1};{6},{3 5}]"}).lines(),
            Lines{"0"});
  auto prec = run({"dendriform", "prec", "[{1}]", "[{1}]"});
  auto circ = run({"dendriform", "circ", "[{1}]", "[{1}]"});
  auto succ = run({"dendriform", "succ", "[{1}]", "[{1}]"});
  EXPECT_EQ(prec.lines().size() + circ.lines().size() + succ.lines().size(), 3u);
  EXPECT_EQ(run({"dendriform", "prec", "[{1}]"}).code, 1);
  EXPECT_EQ(run({"dendriform", "dgg", "[{1}]", "[{1}]"}).code, 1);
}

TEST(Cli, Convert) {
  EXPECT_EQ(run({"convert", "biword", "[{1},{4};{2 3},{}]"}).lines(),
            Lines{"(1221|1112)"});
  EXPECT_EQ(run({"convert", "matrix", "(1221|1112)"}).lines(),
            Lines{"[{1},{4};{2 3},{}]"});
  EXPECT_EQ(run({"convert", "setcomps", "[{1},{4};{2 3},{}]"}).lines(),
            (Lines{"[{1 4},{2 3}]", "[{1 2 3},{4}]"}));
  EXPECT_EQ(run({"convert", "matrix", "[{1 4},{2 3}]", "[{1 2 3},{4}]"}).lines(),
            Lines{"[{1},{4};{2 3},{}]"});
  EXPECT_EQ(run({"convert", "matrix", "(2)(1,3,1)(0,1,2)(0,1)"}).lines(),
            Lines{"[2,1,0,0;0,3,1,1;0,1,2,0]"});
  EXPECT_EQ(run({"convert", "word", "[2,1,0,0;0,3,1,1;0,1,2,0]"}).lines(),
            Lines{"(2)(1,3,1)(0,1,2)(0,1)"});
  auto d = run({"convert", "diagram", "[1,2,0,0;0,0,3,0;0,0,0,5]"});
  EXPECT_NE(d.out.find("multiplier L^(0,0,2,0,1) V^(1,1,1,0,1)"),
            std::string::npos);
}

TEST(Cli, Check) {
  auto a = run({"check", "assoc", "--grade", "3"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out.substr(0, 4), "PASS");
  EXPECT_EQ(run({"check", "bialgebra", "--grade", "3", "--alg", "MCSym"}).code, 0);
  EXPECT_EQ(run({"check", "bidend", "--grade", "3"}).code, 0);
  auto d = run({"check", "diagram", "--grade", "2"});
  EXPECT_EQ(d.code, 2);
  EXPECT_NE(d.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(run({"check", "tridend", "--alg", "MSym"}).code, 1);
}

TEST(Cli, LdProduct) {
  EXPECT_EQ(run({"ld-product", "[2,0;1,4]", "[1]"}).lines(),
            (Lines{"qc^7*[0,0,1;2,0,0;1,4,0]", "qc^5*[2,0,0;0,0,1;1,4,0]",
                   "[2,0,0;1,4,0;0,0,1]", "qs^5*[2,0,0;1,4,1]",
                   "qc^5*qs^2*[2,0,1;1,4,0]"}));
  EXPECT_EQ(run({"ld-product", "[1]", "[1]", "--qc", "1", "--qs", "1"}).lines(),
            (Lines{"[0,1;1,0]", "[1,0;0,1]", "[1,1]"}));
  EXPECT_EQ(run({"ld-product", "[1]", "[1]", "--qc", "2"}).lines(),
            (Lines{"2*[0,1;1,0]", "[1,0;0,1]", "qs*[1,1]"}));
  EXPECT_EQ(run({"ld-product", "[1]", "[1]", "--left-then-right"}).lines(),
            (Lines{"[0,1;1,0]", "qc*[1,0;0,1]", "qs*[1,1]"}));
  EXPECT_EQ(run({"ld-product", "[1]", "[1]", "--qs", "x"}).code, 1);
}

TEST(Cli, Json) {
  auto r = run({"--json", "product", "MQSym", "[1]", "[1]"});
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["terms"].size(), 3u);
  EXPECT_EQ(doc["terms"][0]["basis"], "[0,1;1,0]");
  auto c = nlohmann::json::parse(run({"coproduct", "SMQSym", "[{1}]", "--json"}).out);
  EXPECT_EQ(c["terms"][0]["basis"], nlohmann::json::array({"[]", "[{1}]"}));
  auto h = nlohmann::json::parse(
      run({"hilbert", "MRSym", "--upto", "2", "--json"}).out);
  EXPECT_EQ(h["status"], "AGREE");
  EXPECT_EQ(h["coefficients"][2]["formula"], "4");
}

TEST(Cli, Errors) {
  auto r = run({"product", "SMQSym", "[{1},{3}]", "[{1}]"});
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
  EXPECT_EQ(run({"product", "NoSym", "[1]", "[1]"}).code, 1);
  EXPECT_NE(run({"product", "NoSym", "[1]", "[1]"}).err.find("unknown algebra"),
            std::string::npos);
  EXPECT_EQ(run({"product", "MQSym", "[1,0;0,0]", "[1]"}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, Deterministic) {
  Lines args{"product", "SMRSym", "[{1 2}]", "[{1};{2}]"};
  auto a = run(args), b = run(args);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}
