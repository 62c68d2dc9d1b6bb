#include <gtest/gtest.h>

#include <random>

#include "curves.hpp"
#include "surfcover/linsys.hpp"

using namespace surfcover;
using testdata::base_points;
using testdata::septic;
using testdata::sextic;

namespace {

MultiPoly line_to_base(std::size_t k) { return line_through_points(base_points()[0], base_points()[k]); }

/// Triple points at p0 and p5, tacnodes along p0 p_i at p1..p4.
std::vector<BaseCondition> septic_conditions() {
  const auto& p = base_points();
  std::vector<BaseCondition> c{{p[0], {}, 3}};
  for (std::size_t k = 1; k <= 4; ++k) {
    auto t = tangent_cluster(p[k], line_to_base(k));
    c.insert(c.end(), t.begin(), t.end());
  }
  c.push_back({p[5], {}, 3});
  return c;
}

std::vector<BaseCondition> sextic_conditions() {
  auto c = septic_conditions();
  c.front().multiplicity = 2;
  c.back().multiplicity = 1;
  return c;
}

ConfigPtr base_config() {
  auto cfg = std::make_shared<BlowupConfiguration>();
  const auto& p = base_points();
  cfg->add_point("E0", p[0]);
  for (std::size_t k = 1; k <= 4; ++k) {
    int c = cfg->add_point("E" + std::to_string(k), p[k]);
    cfg->add_along_line("E" + std::to_string(k) + "'", c, line_to_base(k));
  }
  cfg->add_point("E5", p[5]);
  return cfg;
}

DivisorClass cls(const ConfigPtr& cfg, long d, const std::vector<std::pair<std::string, long>>& m) {
  return DivisorClass::from_labels(cfg, d, m);
}

PlanePoint random_point(std::mt19937& rng) {
  std::uniform_int_distribution<int> dist(-40, 40);
  return {GR(Rational(dist(rng), 1 + (dist(rng) & 7))), GR(dist(rng)), GR(1)};
}

}  // namespace

TEST(ConditionMatrix, SmallExamples) {
  PlanePoint p(GR(2), GR(-3), GR(5));
  ExactMatrix M = condition_matrix(1, {{p, {}, 1}});
  ASSERT_EQ(M.rows(), 1U);
  ASSERT_EQ(M.cols(), 3U);
  PlanePoint n = p.normalized();
  for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(M(0, k), n[k]);

  std::vector<BaseCondition> circle;
  for (auto [x, y] : std::vector<std::pair<Rational, Rational>>{
           {1, 0}, {0, 1}, {-1, 0}, {0, -1}, {Rational(3, 5), Rational(4, 5)}}) {
    circle.push_back({PlanePoint::affine(GR(x), GR(y)), {}, 1});
  }
  LinearSystemResult r = solve_system(2, circle);
  EXPECT_EQ(r.rank(), 5U);
  EXPECT_EQ(r.dimension(), 0);
  EXPECT_EQ(find_member(r), parse_poly("x^2+y^2-z^2"));
}

TEST(ConditionMatrix, RowCounts) {
  EXPECT_EQ(system_dimension(7, {}), 35);
  ExactMatrix M = condition_matrix(7, septic_conditions());
  EXPECT_EQ(M.rows(), 36U);
  EXPECT_EQ(M.cols(), 36U);
  EXPECT_EQ(rank(M), 35U);
}

TEST(ConditionMatrix, InfinitelyNearNeedsParent) {
  PlanePoint o = PlanePoint::affine(GR(0), GR(0));
  EXPECT_THROW(condition_matrix(3, {{o, {Direction::with_slope(GR(0))}, 1}}), Error);
}

TEST(LinearSystem, SepticIsUnique) {
  LinearSystemResult r = solve_system(7, septic_conditions());
  EXPECT_EQ(r.dimension(), 0);
  EXPECT_EQ(find_member(r), septic().monic());
  EXPECT_THROW(find_member(r, 1), Error);
}

TEST(LinearSystem, SexticMembers) {
  LinearSystemResult r = solve_system(6, sextic_conditions());
  ASSERT_GE(r.dimension(), 0);
  // The data sextic lies in the system.
  ExactMatrix M = r.matrix;
  std::vector<GR> v;
  for (const auto& e : form_monomials(6)) v.push_back(sextic().coeff(e));
  for (const GR& x : M.apply(v)) EXPECT_TRUE(x.is_zero());
  if (r.dimension() == 0) EXPECT_EQ(find_member(r), sextic().monic());
}

TEST(LinearSystem, MembersMeetTheConditions) {
  for (const auto& conds : {septic_conditions(), sextic_conditions()}) {
    LinearSystemResult r = solve_system(conds.front().multiplicity == 3 ? 7 : 6, conds);
    MultiPoly F = random_member(r, 11);
    for (const auto& c : conds) {
      if (!c.path.empty()) continue;
      EXPECT_GE(multiplicity_at(F, c.point), c.multiplicity) << c.str();
    }
    const auto& p = base_points();
    for (std::size_t k = 1; k <= 4; ++k) {
      SingularityClass s = classify_singularity(F, p[k]);
      EXPECT_EQ(s.kind, SingularityKind::Tacnode) << k;
    }
  }
}

TEST(LinearSystem, EmptySystem) {
  PlanePoint o = PlanePoint::affine(GR(0), GR(0));
  LinearSystemResult r = solve_system(2, {{o, {}, 3}});
  EXPECT_EQ(r.dimension(), -1);
  EXPECT_THROW(find_member(r), EmptySystem);
}

TEST(LinearSystem, MonotoneAndExpectedDimension) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int d = 3 + trial % 4;
    std::vector<BaseCondition> conds;
    long prev = system_dimension(d, conds);
    long count = 0;
    const long coeffs = (d + 1) * (d + 2) / 2;
    for (int k = 0; k < 5; ++k) {
      int m = 1 + static_cast<int>(rng() % 3);
      conds.push_back({random_point(rng), {}, m});
      count += m * (m + 1) / 2;
      long dim = system_dimension(d, conds);
      EXPECT_LE(dim, prev);
      prev = dim;
      // Distinct general points of multiplicity <= 3 impose independent conditions
      // while the expected dimension is large enough.
      if (count + 3 * d <= coeffs) {
        EXPECT_EQ(solve_system(d, conds).rank(), static_cast<std::size_t>(count));
      }
    }
  }
}

TEST(H0, Examples) {
  ConfigPtr cfg = base_config();
  auto catalog = exceptional_catalog(cfg);
  EXPECT_EQ(h0_class(DivisorClass::zero(cfg), catalog), 1);
  EXPECT_EQ(h0_class(DivisorClass::line(cfg), catalog), 3);
  EXPECT_EQ(h0_class(-1 * DivisorClass::line(cfg), catalog), 0);
  EXPECT_EQ(h0_class(DivisorClass::exceptional(cfg, "E5"), catalog), 1);
  EXPECT_EQ(h0_class(2 * DivisorClass::exceptional(cfg, "E5"), catalog), 1);
  // Lines through p0 and p1 with the tangent direction: only T1.
  EXPECT_EQ(h0_class(cls(cfg, 1, {{"E0", 1}, {"E1", 1}, {"E1'", 1}}), catalog), 1);
  EXPECT_EQ(h0_class(cls(cfg, 1, {{"E0", 1}, {"E1", 1}, {"E2", 1}}), catalog), 0);

  // K + L1 of the last construction: six (-2)-curves are fixed, then the conic
  // through p1..p5 would have to be tangent to T1.
  DivisorClass K = canonical_class(cfg);
  DivisorClass L1 = cls(cfg, 8, {{"E0", 4}, {"E1", 2}, {"E1'", 2}, {"E2", 2}, {"E2'", 3}, {"E3", 2}, {"E3'", 3},
                                 {"E4", 2}, {"E4'", 3}, {"E5", 2}});
  auto full = catalog;
  for (std::size_t k = 1; k <= 4; ++k) {
    full.push_back({"T" + std::to_string(k), strict_transform_class(line_to_base(k), cfg)});
  }
  H0Result h = h0_class_detailed(K + L1, full);
  EXPECT_EQ(h.value, 0);
  EXPECT_EQ(h.moving, cls(cfg, 2, {{"E1", 1}, {"E1'", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}, {"E5", 1}}));
  EXPECT_EQ(h.removed.size(), 6U);
  // Without the tangency at p1' the conic exists.
  EXPECT_EQ(h0_class(cls(cfg, 2, {{"E1", 1}, {"E2", 1}, {"E3", 1}, {"E4", 1}, {"E5", 1}}), full), 1);
}

TEST(H0, ExceptionalCurvesAreAlwaysAvailable) {
  ConfigPtr cfg = base_config();
  // 3T - E1 + E1': E1' is a fixed component.
  DivisorClass a = 3 * DivisorClass::line(cfg) + DivisorClass::exceptional(cfg, "E1'") -
                   DivisorClass::exceptional(cfg, "E1");
  EXPECT_EQ(h0_class(a, {}), 9);
  // E1 - E1' is effective, -E1' (a point condition with nothing to carry it) is not.
  EXPECT_EQ(h0_class(DivisorClass::exceptional(cfg, "E1") - DivisorClass::exceptional(cfg, "E1'"), {}), 1);
  EXPECT_EQ(h0_class(-1 * DivisorClass::exceptional(cfg, "E1'"), {}), 0);
}

TEST(H0, CatalogInsufficient) {
  ConfigPtr cfg = base_config();
  // A catalog entry that is not an irreducible curve makes the removal cycle.
  DivisorClass e1 = DivisorClass::exceptional(cfg, "E1"), e1p = DivisorClass::exceptional(cfg, "E1'");
  std::vector<CatalogCurve> bogus{{"not a curve", e1p - e1}};
  EXPECT_THROW(h0_class(3 * DivisorClass::line(cfg) - e1, bogus), CatalogInsufficient);
}
