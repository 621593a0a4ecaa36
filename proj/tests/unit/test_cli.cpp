#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "starideal/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = starideal::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("ns stars lists three operations for <3,4,5>") {
  const auto r = run({"ns", "stars", "3,4,5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("<3,4,5>: 3 star operations") != std::string::npos);
  CHECK(r.out.find("s1: not-stable") != std::string::npos);
  CHECK(r.out.find("d: stable") != std::string::npos);
  const auto j = run({"ns", "stars", "3,4,5", "--json"});
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["count"] == 3);
  CHECK(doc["stars"].size() == 3);
}

TEST_CASE("ns verify emits consistent JSON reports") {
  const auto r = run({"ns", "verify", "3,4,5", "--suite", "prufer", "--star", "v", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.is_array());
  REQUIRE(doc.size() == 1);
  CHECK(doc[0]["consistent"] == true);
  for (const auto& c : doc[0]["conditions"]) {
    CHECK(c["holds"] == false);
    CHECK(c.contains("witness"));
  }
}

TEST_CASE("ns classify of N is all true") {
  const auto r = run({"ns", "classify", "1", "--json"});
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["star_count"] == 1);
  for (const auto& [name, value] : doc["derived"].items()) CHECK(value == true);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"ns"}).code == 1);
  CHECK(run({"ns", "verify", "4,6", "--suite", "prufer"}).code == 1);
  CHECK(run({"ns", "verify", "3,4,5", "--suite", "bogus"}).code == 1);
  CHECK(run({"ns", "verify", "3,4,5", "--suite", "prufer", "--star", "q"}).code == 1);
  CHECK(run({"ns", "verify", "3,4,5"}).code == 1);
  CHECK(run({"qo", "verify", "--N", "4", "--suite", "cicd"}).code == 1);
  CHECK(run({"mon", "verify", "--k", "9", "--suite", "cicd"}).code == 1);
  CHECK(run({"ns", "stars", "6,7,8,9,10,11", "--max-stars", "50"}).code == 1);
  const auto r = run({"ns", "stars", "6,7,8,9,10,11", "--max-stars", "50"});
  CHECK(r.err.find("50 found") != std::string::npos);
}

TEST_CASE("help exits with 0") {
  const auto r = run({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ns") != std::string::npos);
}

TEST_CASE("identical configurations give byte-identical JSON") {
  const std::vector<std::vector<std::string>> commands{
      {"qo", "verify", "--N", "-1", "--f", "3", "--suite", "v-cicd", "--samples", "80", "--json"},
      {"mon", "verify", "--k", "2", "--suite", "prufer", "--star", "t", "--samples", "120", "--seed", "7", "--json"},
      {"qo", "classify", "--N", "-5", "--f", "1", "--samples", "20", "--seed", "42", "--json"},
      {"ns", "classify", "4,5,6,7", "--json", "--full"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd), b = run(cmd);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("replay reproduces saved witnesses") {
  const auto r = run({"mon", "verify", "--k", "2", "--suite", "prufer,cicd", "--samples", "60", "--json"});
  REQUIRE(r.code == 0);
  const std::string path = "replay_test_reports.json";
  {
    std::ofstream f(path);
    f << r.out;
  }
  const auto ok = run({"mon", "verify", "--k", "2", "--replay", path});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("NOT reproduced") == std::string::npos);
  // The same witnesses are not counterexamples under t, which is Pruefer here.
  auto doc = nlohmann::json::parse(r.out);
  for (auto& rep : doc) rep["star"] = "t";
  {
    std::ofstream f(path);
    f << doc.dump();
  }
  const auto bad = run({"mon", "verify", "--k", "2", "--replay", path});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("NOT reproduced") != std::string::npos);
  std::remove(path.c_str());
}
