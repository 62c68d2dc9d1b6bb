#include <gtest/gtest.h>

#include <iterator>
#include <string>

#include "surfcover/scenario.hpp"

using namespace surfcover;

namespace {

long inv(const ScenarioReport& r, const char* key) { return r.invariants.at(key).get<long>(); }

bool failed(const ScenarioReport& r, const std::string& id) {
  const CheckEntry* c = r.find(id);
  return c && c->status == CheckStatus::Fail;
}

/// The pgq0 fixture with the septic given inline.
ScenarioSpec with_septic(const std::string& poly) {
  ScenarioSpec s = default_scenario("pgq0");
  s.fixture["curves"]["C7"] = {{"poly", poly}};
  return s;
}

}  // namespace

TEST(Scenario, FixturesLoad) {
  for (const auto& name : scenario_names()) {
    ScenarioSpec s = default_scenario(name);
    EXPECT_EQ(s.name, name);
  }
  EXPECT_THROW(ScenarioSpec::load("/nonexistent/fixture.json"), FixtureError);
}

TEST(Scenario, ParseClassRoundTrip) {
  ScenarioContext ctx(default_scenario("pgq2"), 0);
  for (const char* text : {"3T - E0 - E1 - E1' - E2 - E2'", "2T - 2E0 - E1' - E2'", "0", "-T + E10"}) {
    DivisorClass c = ctx.cls(text);
    EXPECT_EQ(ctx.cls(c.str()), c) << text;
  }
  EXPECT_EQ(ctx.cls("T - T"), ctx.cls("0"));
  EXPECT_THROW(ctx.cls("3T -"), ParseError);
  EXPECT_THROW(ctx.cls("2Q"), ParseError);
  EXPECT_THROW(ctx.cls("E4'"), ParseError);
}

TEST(Scenario, PgqZeroPasses) {
  ScenarioReport r = run_scenario("pgq0");
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(r.exit_code(), 0);
  EXPECT_EQ(inv(r, "chi"), 1);
  EXPECT_EQ(inv(r, "pg"), 0);
  EXPECT_EQ(inv(r, "Ksq_min"), 7);
  const CheckEntry* budget = r.find("intersection:C6.C7");
  ASSERT_NE(budget, nullptr);
  EXPECT_EQ(budget->values.at("values"), json({6, 8, 8, 8, 8, 3}));
  EXPECT_EQ(budget->values.at("residual"), 1);
  EXPECT_EQ(r.covers.at("bidouble").at("Ksq"), -9);
}

TEST(Scenario, PgqZeroConjugatePointFails) {
  ScenarioSpec s = default_scenario("pgq0");
  s.fixture["points"]["p5"] = "3,-2*i,1";
  ScenarioReport r = run_pgq0(s, 0);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_TRUE(failed(r, "singularity:C7@p5"));
}

TEST(Scenario, PgqZeroSwappedTangentFails) {
  ScenarioSpec s = default_scenario("pgq0");
  for (auto& e : s.fixture["singularities"]) {
    if (e["curve"] != "C6" || !e.contains("tangent")) continue;
    if (e["tangent"] == "T1") {
      e["tangent"] = "T2";
    } else if (e["tangent"] == "T2") {
      e["tangent"] = "T1";
    }
  }
  ScenarioReport r = run_pgq0(s, 0);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(failed(r, "singularity:C6@p1"));
  EXPECT_TRUE(failed(r, "singularity:C6@p2"));
}

TEST(Scenario, PgqOnePassesAndIsDeterministic) {
  ScenarioReport a = run_scenario("pgq1", 0);
  EXPECT_TRUE(a.passed()) << a.summary();
  EXPECT_EQ(inv(a, "chi"), 1);
  EXPECT_EQ(inv(a, "pg"), 1);
  EXPECT_EQ(inv(a, "Ksq_min"), 7);
  EXPECT_TRUE(a.choices.contains("points"));
  ScenarioReport b = run_scenario("pgq1", 0);
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
}

TEST(Scenario, PgqOneSeedsPassOrAreRejected) {
  int passed = 0;
  for (unsigned long seed = 0; seed < 6; ++seed) {
    try {
      ScenarioReport r = run_scenario("pgq1", seed);
      EXPECT_TRUE(r.passed()) << "seed " << seed << "\n" << r.summary();
      ++passed;
    } catch (const DegenerateChoice&) {
    }
  }
  EXPECT_GE(passed, 3);
}

TEST(Scenario, PgqOnePointOnLineIsDegenerate) {
  ScenarioSpec s = default_scenario("pgq1");
  s.fixture["points"]["p4"] = "5,0,1";  // on T1
  EXPECT_THROW(run_pgq1(s, 0), DegenerateChoice);
}

TEST(Scenario, PgqTwoPasses) {
  ScenarioReport r = run_scenario("pgq2", 0);
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_EQ(inv(r, "chi"), 1);
  EXPECT_EQ(inv(r, "pg"), 2);
  EXPECT_EQ(inv(r, "Ksq_min"), 7);
  EXPECT_EQ(r.covers.at("bidouble").at("chi"), 0);
  EXPECT_EQ(r.covers.at("bidouble").at("pg"), 1);
  const CheckEntry* sq = r.find("contracted-squares");
  ASSERT_NE(sq, nullptr);
  EXPECT_EQ(sq->values.at("R_sq"), 8);
  EXPECT_EQ(sq->values.at("C_sq"), 0);
  EXPECT_EQ(sq->values.at("R_dot_C"), 4);
  EXPECT_EQ(sq->values.at("B_sq"), 16);
  // Evenness and irregularity are recorded, not proved.
  int assumed = 0;
  for (const auto& c : r.checks) assumed += c.status == CheckStatus::Assumed;
  EXPECT_EQ(assumed, 4);
  EXPECT_EQ(r.assumptions.size(), 4u);
  EXPECT_EQ(r.to_json().at("assumptions").size(), 4u);
}

TEST(Scenario, PgqTwoWrongLineFails) {
  ScenarioSpec s = default_scenario("pgq2");
  s.fixture["points"]["q"] = "5,7,1";
  s.fixture["curves"]["R"] = {{"line", {"p3", "q"}}};
  ScenarioReport r = run_pgq2(s, 0);
  EXPECT_FALSE(r.passed());
  EXPECT_TRUE(failed(r, "contact-point"));
  EXPECT_TRUE(r.invariants.at("chi").is_null());
}

TEST(Scenario, PgqTwoSeedsPassOrAreRejected) {
  int passed = 0;
  for (unsigned long seed = 0; seed < 10; ++seed) {
    try {
      ScenarioReport r = run_scenario("pgq2", seed);
      EXPECT_TRUE(r.passed()) << "seed " << seed << "\n" << r.summary();
      EXPECT_EQ(inv(r, "Ksq_min"), 7);
      ++passed;
    } catch (const DegenerateChoice&) {
    }
  }
  EXPECT_GE(passed, 6);
}

TEST(Scenario, ReportSchema) {
  ScenarioReport r = run_scenario("pgq2", 3);
  json j = r.to_json();
  for (const char* key : {"scenario", "seed", "checks", "invariants", "assumptions"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["seed"], 3);
  for (const auto& c : j["checks"]) {
    for (const char* key : {"id", "anchor", "status", "values"}) EXPECT_TRUE(c.contains(key)) << key;
  }
  for (const char* key : {"chi", "pg", "Ksq_min"}) EXPECT_TRUE(j["invariants"].contains(key)) << key;
}

TEST(Scenario, PerturbedSepticFails) {
  ScenarioContext ctx(default_scenario("pgq0"), 0);
  const MultiPoly& F = ctx.curve("C7");
  const auto sixth = std::next(F.terms().begin(), 5);
  const MultiPoly bumped = F + MultiPoly::monomial(F.vars(), sixth->first, GR(1));
  ScenarioReport r = run_pgq0(with_septic(bumped.str()), 0);
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_TRUE(failed(r, "intersection:C6.C7"));
  EXPECT_TRUE(failed(r, "linear-system:C7"));
}
