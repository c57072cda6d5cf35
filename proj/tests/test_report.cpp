#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "symcheck/report.hpp"

using namespace symcheck;

namespace {

CheckResult make_check(std::string id, Status st) {
  CheckResult c;
  c.id = id;
  c.suite = id.substr(0, id.find('.'));
  c.description = "d";
  c.paper_ref = "r";
  c.status = st;
  if (st == Status::Fail) c.details = "why";
  return c;
}

const CheckResult* find(const VerificationReport& r, const std::string& id) {
  for (const auto& c : r.checks) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("summary of an empty report") {
  VerificationReport r;
  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["summary"]["total"] == 0);
  CHECK(j["summary"]["passed"] == 0);
  CHECK(j["summary"]["failed"] == 0);
  CHECK(j["checks"].is_array());
  CHECK(r.all_passed());
}

TEST_CASE("one pass and one fail") {
  VerificationReport r;
  r.checks = {make_check("group.a", Status::Pass), make_check("group.b", Status::Fail)};
  const Summary s = r.summary();
  CHECK(s.total == 2);
  CHECK(s.passed == 1);
  CHECK(s.failed == 1);
  CHECK_FALSE(r.all_passed());
  const std::string text = to_text(r);
  CHECK(text.find("PASS group.a") != std::string::npos);
  CHECK(text.find("FAIL group.b") != std::string::npos);
  CHECK(text.find("failed: 1") != std::string::npos);
}

TEST_CASE("config validation names the field") {
  RunConfig c;
  c.suites = {"nope"};
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("suites"), ConfigError);
  c = RunConfig{};
  c.samples = 0;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("samples"), ConfigError);
  c = RunConfig{};
  c.tolerance = -1;
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("tolerance"), ConfigError);
  c = RunConfig{};
  c.lambda = ExactComplex(2);
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("lambda"), ConfigError);
  c = RunConfig{};
  c.suites = {};
  CHECK_THROWS_AS(run(c), ConfigError);
}

TEST_CASE("parsers") {
  CHECK(parse_lambda("-i") == -ExactComplex::i());
  CHECK(parse_lambda("+i") == ExactComplex::i());
  CHECK(parse_lambda("1") == ExactComplex(1));
  CHECK_FALSE(parse_lambda("2").has_value());
  CHECK(parse_potential_rule("signflip") == PotentialRuleChoice::SignFlip);
  CHECK(parse_potential_rule("unchanged") == PotentialRuleChoice::Unchanged);
  CHECK_FALSE(parse_potential_rule("other").has_value());
}

TEST_CASE("suite filter keeps only the requested suite") {
  RunConfig c;
  c.suites = {"group"};
  const VerificationReport r = run(c);
  REQUIRE_FALSE(r.checks.empty());
  for (const auto& ch : r.checks) CHECK(ch.suite == "group");
  CHECK(r.all_passed());
}

TEST_CASE("ids are unique, sorted, prefixed and failures carry details") {
  RunConfig c;
  c.samples = 10;
  const VerificationReport r = run(c);
  std::set<std::string> ids;
  for (const auto& ch : r.checks) {
    CHECK(ids.insert(ch.id).second);
    CHECK(ch.id.rfind(ch.suite + ".", 0) == 0);
    CHECK_FALSE(ch.paper_ref.empty());
    if (ch.status == Status::Fail) CHECK_FALSE(ch.details.empty());
  }
  CHECK(std::is_sorted(r.checks.begin(), r.checks.end(),
                       [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
}

TEST_CASE("potential rule selects the charged checks") {
  RunConfig c;
  c.suites = {"electron"};
  c.samples = 5;
  c.potential_rule = PotentialRuleChoice::SignFlip;
  const VerificationReport r = run(c);
  CHECK(find(r, "electron.charged-signflip") != nullptr);
  CHECK(find(r, "electron.charged-unchanged") == nullptr);
}

TEST_CASE("corrupted gamma matrix fails with the identity named") {
  RunConfig c;
  c.suites = {"electron"};
  c.samples = 5;
  const GammaSet good = build_gamma4();
  c.tamper = GammaTamper{4, GammaOverride{2, good.g[1]}};
  const VerificationReport r = run(c);
  CHECK_FALSE(r.all_passed());
  const CheckResult* clifford = find(r, "electron.gamma4-clifford");
  REQUIRE(clifford != nullptr);
  CHECK(clifford->status == Status::Fail);
  CHECK(clifford->details.find("violated") != std::string::npos);
  const CheckResult* construction = find(r, "electron.gamma4-construction");
  REQUIRE(construction != nullptr);
  CHECK(construction->status == Status::Fail);
  CHECK(construction->details.find("2 g^ab") != std::string::npos);
}

TEST_CASE("reports are byte-reproducible for a fixed config") {
  RunConfig c;
  c.samples = 20;
  c.seed = 42;
  const std::string a = to_json(run(c));
  const std::string b = to_json(run(c));
  CHECK(a == b);
  CHECK(to_text(run(c)) == to_text(run(c)));
  const auto ja = nlohmann::json::parse(a);
  CHECK(ja["config"]["seed"] == 42);
  CHECK(ja["version"] == std::string(kReportVersion));
}

TEST_CASE("emit writes files and reports unwritable paths") {
  VerificationReport r;
  r.checks = {make_check("group.a", Status::Pass)};
  const std::string path = "report_emit_test.json";
  emit(r, ReportFormat::Json, path);
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  CHECK(ss.str() == to_json(r));
  std::remove(path.c_str());
  CHECK_THROWS_AS(emit(r, ReportFormat::Json, "/nonexistent-dir/x.json"), IoError);
}
