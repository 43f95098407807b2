#include "doctest.h"

#include "commands.hpp"
#include "json.hpp"

#include <sstream>

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "flagmorse");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = flagmorse::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

int count_lines(const std::string& s) {
  int n = 0;
  for (char c : s) n += c == '\n';
  return n;
}

}  // namespace

TEST_CASE("ell-table has eight matching rows") {
  Run r = run({"ell-table"});
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 8);
  Run j = run({"ell-table", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["rows"].size() == 8);
  CHECK(doc["match"] == true);
}

TEST_CASE("index-bound for projective three-space") {
  Run r = run({"index-bound", "--m", "2", "--n", "2", "--family", "A", "--rank", "3", "--painted", "2,3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("lambda_0 = 1") != std::string::npos);
  CHECK(r.out.find("I = 2") != std::string::npos);
  Run j = run({"index-bound", "--m", "2", "--n", "2", "--family", "A", "--rank", "3", "--painted", "2,3", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc["lambda0"] == 1);
  CHECK(doc["index_bound"] == 2);
  CHECK(doc["ell"] == 3);
  CHECK(doc["v"] == 3);
}

TEST_CASE("index-bound with the improved value") {
  Run r = run({"index-bound", "--m", "10", "--n", "10", "--family", "B", "--rank", "4", "--painted", "1,2,3",
               "--special", "--json"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["ell"] == 7);
  Run bad = run({"index-bound", "--m", "1", "--n", "1", "--family", "B", "--rank", "4", "--special"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("--special") != std::string::npos);
}

TEST_CASE("check output is reproducible and passes") {
  std::vector<std::string> args = {"check", "--suite", "all", "--family", "A", "--rank", "3", "--painted", "",
                                   "--trials", "300", "--seed", "42", "--json"};
  Run a = run(args), b = run(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto doc = nlohmann::json::parse(a.out);
  CHECK(doc["pass"] == true);
  CHECK(doc["seed"] == 42);
  CHECK(doc["elapsed_ms"] == 0.0);
  Run text = run({"check", "--suite", "mel", "--family", "B", "--rank", "2", "--trials", "50"});
  CHECK(text.code == 0);
  CHECK(text.out.find("all checks pass") != std::string::npos);
}

TEST_CASE("usage errors exit with status two") {
  CHECK(run({}).code == 2);
  CHECK(run({"roots", "--family", "A"}).code == 2);
  CHECK(run({"roots", "--family", "G", "--rank", "2"}).code == 2);
  CHECK(run({"roots", "--family", "E", "--rank", "5"}).code == 2);
  CHECK(run({"parabolic", "--family", "A", "--rank", "3", "--painted", "7"}).code == 2);
  Run s = run({"check", "--suite", "nope", "--family", "A", "--rank", "2"});
  CHECK(s.code == 2);
  CHECK(s.err.find("nope") != std::string::npos);
  CHECK(run({"ell", "--family", "A", "--rank", "3", "--gamma", "999"}).code == 2);
  CHECK(run({"bogus"}).code == 2);
}

TEST_CASE("roots, chevalley and parabolic output") {
  Run r = run({"roots", "--family", "B", "--rank", "2", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["positives"].size() == 4);
  Run c = run({"chevalley", "--family", "A", "--rank", "2"});
  CHECK(c.out.rfind("alpha,beta,c,n\n", 0) == 0);
  Run p = run({"parabolic", "--family", "A", "--rank", "3", "--painted", "2,3"});
  CHECK(p.out.find("oxx") != std::string::npos);
  CHECK(p.out.find("v = 3") != std::string::npos);
}

TEST_CASE("ell output") {
  Run r = run({"ell", "--family", "D", "--rank", "4", "--json"});
  CHECK(r.code == 0);
  auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["ell"] == 5);
  CHECK(doc["condition1"] == true);
  CHECK(doc["condition2"] == true);
  Run t = run({"ell", "--family", "A", "--rank", "3", "--gamma", "100", "--delta", "100"});
  CHECK(t.code == 0);
  CHECK(t.out.find("l = 3") != std::string::npos);
}

TEST_CASE("hessian output") {
  Run neg = run({"hessian", "--family", "A", "--rank", "2", "--gamma", "11:1,0", "--field", "11:1,0", "--json"});
  CHECK(neg.code == 0);
  auto d1 = nlohmann::json::parse(neg.out);
  CHECK(d1["observed"] == "negative");
  CHECK(d1["classification"][0]["negative"] == true);
  Run zero = run({"hessian", "--family", "A", "--rank", "2", "--gamma", "11:1,0", "--field", "10:0,1", "--json"});
  auto d2 = nlohmann::json::parse(zero.out);
  CHECK(d2["observed"] == "zero");
  CHECK(d2["classification"][0]["negative"] == false);
}
