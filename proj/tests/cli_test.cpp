#include <gtest/gtest.h>

#include <sstream>

#include <json.hpp>

#include "gonseq/cli.hpp"

using gonseq::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "gonseq");
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::vector<std::vector<std::string>> kCommands = {
    {"profile", "--d", "10", "--r", "4"},
    {"classify", "--d", "21", "--r", "6"},
    {"embed", "--gamma", "4", "--lambda", "12", "--n", "3"},
    {"bounds", "--d", "13", "--r", "5", "--gamma", "4"},
    {"slope", "--d", "13", "--r", "5", "--gamma", "4"},
    {"table1", "--gamma-max", "5", "--mode", "resolved"},
    {"scan", "--r-lo", "3", "--r-hi", "4", "--d-max", "12"},
    {"verylast", "--n", "5"},
    {"plane", "--k", "7", "--r", "5"},
};

} // namespace

TEST(Cli, ProfileText) {
  const Result r = call({"profile", "--d", "10", "--r", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "m=3 eps=0 pi=9\n");
}

TEST(Cli, VerylastJson) {
  const Result r = call({"verylast", "--n", "3", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto doc = nlohmann::json::parse(r.out);
  const auto& rows = doc.at("ledger").at("rows");
  auto row = [&](int index) { return rows.at(static_cast<std::size_t>(index - 1)); };
  EXPECT_EQ(row(3).at("lo"), 11);
  EXPECT_EQ(row(3).at("hi"), 11);
  EXPECT_EQ(row(4).at("lo"), 12);
  EXPECT_EQ(row(4).at("hi"), 12);
  EXPECT_EQ(row(5).at("hi"), 15);
  EXPECT_EQ(doc.at("embeddings").at("rows").size(), 1u);
}

TEST(Cli, EveryCommandParsesAsJson) {
  for (auto args : kCommands) {
    args.insert(args.end(), {"--format", "json"});
    const Result r = call(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_TRUE(nlohmann::json::accept(r.out)) << args[0];
  }
}

TEST(Cli, EveryCommandEmitsRectangularCsv) {
  for (auto args : kCommands) {
    args.insert(args.end(), {"--format", "csv"});
    const Result r = call(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    std::istringstream lines(r.out);
    std::string line;
    long columns = -1;
    while (std::getline(lines, line)) {
      if (line.empty()) {
        columns = -1; // next block
        continue;
      }
      if (line.find('"') != std::string::npos) continue;
      const long n = static_cast<long>(std::count(line.begin(), line.end(), ','));
      if (columns < 0) columns = n;
      EXPECT_EQ(n, columns) << args[0] << ": " << line;
    }
  }
}

TEST(Cli, EveryCommandEmitsMarkdown) {
  for (const auto& args : kCommands) {
    const Result r = call(args);
    ASSERT_EQ(r.code, 0) << args[0] << ": " << r.err;
    EXPECT_FALSE(r.out.empty());
  }
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(call({"profile", "--d", "5", "--r", "3"}).code, 2);
  EXPECT_EQ(call({"profile", "--d", "x", "--r", "3"}).code, 2);
  EXPECT_EQ(call({"profile", "--d", "10"}).code, 2);
  EXPECT_EQ(call({"profile", "--d", "10", "--r", "4", "--bogus"}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"embed", "--gamma", "4", "--lambda", "4", "--n", "1"}).code, 2);
  EXPECT_EQ(call({"embed", "--gamma", "2", "--lambda", "7", "--n", "1"}).code, 2);
  EXPECT_EQ(call({"slope", "--d", "10", "--r", "4", "--gamma", "7"}).code, 2);
  EXPECT_EQ(call({"plane", "--k", "4", "--r", "2"}).code, 2);
  EXPECT_EQ(call({"table1", "--gamma-max", "6", "--mode", "faithful"}).code, 2);
  EXPECT_EQ(call({"--format", "xml", "profile", "--d", "10", "--r", "4"}).code, 2);
  EXPECT_EQ(call({"bounds", "--d", "10", "--r", "4", "--gamma", "4", "--pin", "3"}).code, 2);
  EXPECT_EQ(call({"--strict", "--lenient", "profile", "--d", "10", "--r", "4"}).code, 2);
  const Result big = call({"profile", "--d", "9223372036854775807", "--r", "3"});
  EXPECT_EQ(big.code, 2);
}

TEST(Cli, LenientMode) {
  EXPECT_EQ(call({"--lenient", "profile", "--d", "5", "--r", "3"}).out, "m=2 eps=0 pi=2\n");
  EXPECT_EQ(call({"slope", "--d", "8", "--r", "4", "--gamma", "3"}).code, 2);
  const Result r = call({"--lenient", "slope", "--d", "8", "--r", "4", "--gamma", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("d=2r"), std::string::npos);
}

TEST(Cli, ContradictionExitsThreeAndNamesBothTags) {
  const Result r = call({"bounds", "--d", "10", "--r", "4", "--gamma", "4", "--pin", "4:3"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("lower=monotone(gonality)"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("upper=user-pin"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, SlopeRows) {
  const Result r = call({"slope", "--d", "13", "--r", "5", "--gamma", "4", "--family",
                         "bielliptic", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "case,status,tag,reason\n"
            "type-iii,violated,projected-dual,\"fourgonal, d = 3r - 2, r >= 5: d_{r+1} = 3r + 1 "
            "via the extremal projection to P^{r-2} and its Serre dual\"\n"
            "ledger,violated,ledger,status certified by the propagated bounds on d_r and "
            "d_{r+1}\n"
            "family:bielliptic,holds,family-bielliptic,bielliptic curves satisfy every slope "
            "inequality\n");
  EXPECT_EQ(call({"slope", "--d", "13", "--r", "5", "--gamma", "4", "--family", "x"}).code, 2);
}

TEST(Cli, PlaneRow) {
  const Result r = call({"plane", "--k", "6", "--r", "5", "--format", "csv"});
  EXPECT_EQ(r.out, "k,r,g,alpha,beta,dr,status,tag\n6,5,10,2,0,12,violated,noether-beta-zero\n");
}

TEST(Cli, HelpExitsZero) {
  const Result r = call({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("table1"), std::string::npos);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"scan", "--r-lo", "3", "--r-hi", "6", "--format", "csv"};
  EXPECT_EQ(call(args).out, call(args).out);
}

TEST(Cli, SelfcheckWithMissingGoldenFails) {
  const Result r = call({"selfcheck", "--golden", "/nonexistent/table.md", "--seeds", "10"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}
