#include <gtest/gtest.h>

#include <random>

#include "curves.hpp"
#include "generators.hpp"
#include "surfcover/singularity.hpp"

using namespace surfcover;
using testdata::base_points;
using testdata::septic;
using testdata::sextic;

namespace {

MultiPoly loc(const char* s) { return parse_poly(s, local_vars()); }
const PlanePoint origin = PlanePoint::affine(GR(0), GR(0));

LocalCurve local(const char* s) { return LocalCurve{loc(s)}; }

MultiPoly line_to_base(std::size_t k) { return line_through_points(base_points()[0], base_points()[k]); }

}  // namespace

TEST(Multiplicity, DataCurves) {
  const auto& p = base_points();
  EXPECT_EQ(multiplicity_at(sextic(), p[0]), 2);
  EXPECT_EQ(multiplicity_at(septic(), p[0]), 3);
  EXPECT_EQ(multiplicity_at(septic(), p[5]), 3);
  EXPECT_EQ(multiplicity_at(sextic(), p[5]), 1);
  for (int k = 1; k <= 4; ++k) {
    EXPECT_EQ(multiplicity_at(sextic(), p[k]), 2);
    EXPECT_EQ(multiplicity_at(septic(), p[k]), 2);
  }
  EXPECT_EQ(multiplicity_at(sextic(), PlanePoint(GR(5), GR(7), GR(1))), 0);
}

TEST(TangentCone, Examples) {
  EXPECT_EQ(tangent_cone_at(loc("y^2-x^3"), origin), loc("y^2"));
  BinaryForm node = tangent_cone_at(sextic(), base_points()[0]);
  EXPECT_EQ(node.degree(), 2);
  EXPECT_TRUE(binary_form_squarefree(node));
  BinaryForm tac = tangent_cone_at(sextic(), base_points()[1]);
  EXPECT_FALSE(binary_form_squarefree(tac));
  EXPECT_THROW(tangent_cone_at(sextic(), PlanePoint(GR(5), GR(7), GR(1))), NotOnCurve);
}

TEST(BlowUp, Examples) {
  LocalCurve cusp = blow_up_local(local("y^2-x^3"), Direction::with_slope(GR(0)), 0);
  EXPECT_EQ(cusp.multiplicity(), 1);
  EXPECT_EQ(cusp.on_x0, 0);
  EXPECT_TRUE(needs_blow_up(cusp));  // tangent to the exceptional curve
  LocalCurve tac = blow_up_local(local("y^2-x^4"), Direction::with_slope(GR(0)), 0);
  EXPECT_EQ(tac.multiplicity(), 2);
  EXPECT_TRUE(binary_form_squarefree(tac.tangent_cone()));
  EXPECT_THROW(blow_up_local(local("y^2-x^3"), Direction::vertical_line()), DirectionNotInTangentCone);
  LocalCurve v = blow_up_local(local("x^2-y^3"), Direction::vertical_line(), 0);
  EXPECT_EQ(v.on_y0, 0);
  EXPECT_EQ(v.multiplicity(), 1);

  // The septic at (-2:1:1) toward the line through (0:0:1).
  const PlanePoint& p1 = base_points()[1];
  LocalCurve c = local_curve_at(septic(), p1);
  // Direction of the line x + 2y = 0 at p1: slope -1/2.
  Direction d = Direction::with_slope(GR(make_rational(-1, 2)));
  EXPECT_EQ(blow_up_local(c, d, 0).multiplicity(), 2);
}

TEST(Resolve, SmallExamples) {
  ResolutionTree smooth = resolve_point(loc("y-x^2"), origin);
  ASSERT_EQ(smooth.nodes.size(), 1U);
  EXPECT_EQ(smooth.nodes[0].multiplicity, 1);

  ResolutionTree cusp = resolve_point(loc("y^2-x^3"), origin);
  EXPECT_EQ(cusp.multiplicity_sequence(), (std::vector<int>{2, 1, 1}));
  EXPECT_EQ(delta_invariant(cusp), 1);
  EXPECT_TRUE(cusp.nodes.back().satellite());

  ResolutionTree tac = resolve_point(loc("y^2-x^4"), origin);
  EXPECT_EQ(tac.multiplicity_sequence(), (std::vector<int>{2, 2}));
  EXPECT_EQ(delta_invariant(tac), 2);

  EXPECT_EQ(delta_invariant(resolve_point(loc("x*y"), origin)), 1);
  EXPECT_EQ(delta_invariant(resolve_point(loc("x^3-y^3+x^4"), origin)), 3);
  EXPECT_EQ(delta_invariant(resolve_point(loc("y^3-x^7"), origin)), 6);  // (3-1)(7-1)/2
  EXPECT_THROW(resolve_point(loc("y^2-x^3"), origin, 1), DepthCapExceeded);
  EXPECT_THROW(resolve_point(loc("(y^2-2*x^2)^2+x^5"), origin), NonSplitTangentCone);
}

TEST(Resolve, DataCurves) {
  const auto& p = base_points();
  EXPECT_EQ(resolve_point(sextic(), p[1]).multiplicity_sequence(), (std::vector<int>{2, 2}));
  ResolutionTree t = resolve_point(septic(), p[5]);
  EXPECT_EQ(t.nodes.size(), 1U);
  EXPECT_EQ(t.nodes[0].multiplicity, 3);
  auto j = t.to_json();
  EXPECT_EQ(j["nodes"][0]["multiplicity"], 3);
}

TEST(Classify, SmallExamples) {
  EXPECT_EQ(classify_singularity(loc("y-x^2"), origin).kind, SingularityKind::Smooth);
  EXPECT_EQ(classify_singularity(loc("x^2+y^2+x^3"), origin).kind, SingularityKind::Node);
  EXPECT_EQ(classify_singularity(loc("y^2-2*x^2+y^3"), origin).kind, SingularityKind::Node);
  SingularityClass t = classify_singularity(loc("y^2-x^4"), origin);
  EXPECT_EQ(t.kind, SingularityKind::Tacnode);
  EXPECT_EQ(*t.tangent, parse_poly("y"));
  SingularityClass o = classify_singularity(loc("x^3-y^3+x^4"), origin);
  EXPECT_EQ(o.kind, SingularityKind::OrdinaryMultiple);
  EXPECT_EQ(o.m1, 3);
  SingularityClass q = classify_singularity(loc("y*(y^2-x^4)"), origin);
  EXPECT_EQ(q.kind, SingularityKind::TypePoint);
  EXPECT_EQ(q.m1, 3);
  EXPECT_EQ(q.m2, 3);
  EXPECT_EQ(classify_singularity(loc("y^2-x^3"), origin).kind, SingularityKind::General);
  EXPECT_EQ(classify_singularity(loc("y^2-x^6"), origin).kind, SingularityKind::General);
  EXPECT_EQ(classify_singularity(loc("x*(y^2-x^4)"), origin).kind, SingularityKind::General);
}

TEST(Classify, DataCurves) {
  const auto& p = base_points();
  EXPECT_EQ(classify_singularity(sextic(), p[0]).kind, SingularityKind::Node);
  EXPECT_EQ(classify_singularity(sextic(), p[5]).kind, SingularityKind::Smooth);
  for (std::size_t k = 1; k <= 4; ++k) {
    for (const MultiPoly* F : {&sextic(), &septic()}) {
      SingularityClass c = classify_singularity(*F, p[k]);
      ASSERT_EQ(c.kind, SingularityKind::Tacnode) << k;
      EXPECT_EQ(*c.tangent, line_to_base(k)) << k;
      EXPECT_EQ(c.tree.multiplicity_sequence(), (std::vector<int>{2, 2}));
    }
  }
  for (std::size_t k : {0U, 5U}) {
    SingularityClass c = classify_singularity(septic(), p[k]);
    EXPECT_EQ(c.kind, SingularityKind::OrdinaryMultiple) << k;
    EXPECT_EQ(c.m1, 3);
  }
  SingularityClass joined = classify_singularity(sextic() * septic(), p[5]);
  EXPECT_EQ(joined.kind, SingularityKind::OrdinaryMultiple);
  EXPECT_EQ(joined.m1, 4);
}

TEST(Delta, GenusConsistency) {
  const auto& p = base_points();
  long d6 = 0, d7 = 0;
  for (std::size_t k = 0; k <= 4; ++k) d6 += delta_invariant(resolve_point(sextic(), p[k]));
  for (std::size_t k = 0; k <= 5; ++k) d7 += delta_invariant(resolve_point(septic(), p[k]));
  EXPECT_EQ(d6, 9);
  EXPECT_EQ(d7, 14);
  EXPECT_EQ(10 - d6, 1);
  EXPECT_EQ(15 - d7, 1);
}

TEST(TangentLine, Examples) {
  EXPECT_TRUE(is_tangent_line(loc("y-x^2"), origin, loc("y")));
  EXPECT_FALSE(is_tangent_line(loc("y-x"), origin, loc("y")));
  EXPECT_FALSE(is_tangent_line(loc("x*y"), origin, loc("x-y")));
  EXPECT_TRUE(is_tangent_line(sextic(), base_points()[1], line_to_base(1)));
  EXPECT_FALSE(is_tangent_line(sextic(), base_points()[1], parse_poly("x-y+3*z")));
  EXPECT_THROW(is_tangent_line(loc("y-x^2"), origin, loc("y-1")), NotOnCurve);
}

TEST(Noether, AgreesWithFultonOnDataCurves) {
  const auto& p = base_points();
  for (std::size_t k = 0; k < p.size(); ++k) {
    EXPECT_EQ(noether_intersection(sextic(), septic(), p[k]), intersection_multiplicity(sextic(), septic(), p[k]).value);
  }
}

TEST(Noether, AgreesWithFultonOnGeneratedPairs) {
  std::mt19937_64 rng(11);
  int checked = 0;
  for (int trial = 0; trial < 40; ++trial) {
    MultiPoly f = testdata::random_branch_curve(rng), g = testdata::random_branch_curve(rng);
    IntersectionNumber fulton = intersection_multiplicity(f, g, origin);
    if (fulton.infinite) continue;
    EXPECT_EQ(noether_intersection(f, g, origin), fulton.value) << f.str() << " | " << g.str();
    ++checked;
  }
  EXPECT_GE(checked, 20);
}

#include "surfcover/points.hpp"

TEST(SingularPoints, SmallExamples) {
  SingularPoints node = rational_singular_points(loc("x^2-y^2"));
  ASSERT_EQ(node.points.size(), 1U);
  EXPECT_EQ(node.points[0].first, origin);
  EXPECT_EQ(node.points[0].second.kind, SingularityKind::Node);
  EXPECT_TRUE(node.complete);
  SingularPoints conic = rational_singular_points(parse_poly("x^2+y^2-z^2"));
  EXPECT_TRUE(conic.points.empty());
  EXPECT_TRUE(conic.complete);
  SingularPoints at_infinity = rational_singular_points(parse_poly("x*y*z"));
  EXPECT_EQ(at_infinity.points.size(), 3U);
}

TEST(SingularPoints, DataCurvesJoined) {
  SingularPoints s = rational_singular_points(std::vector<MultiPoly>{sextic(), septic()});
  EXPECT_TRUE(s.complete);
  ASSERT_EQ(s.points.size(), 7U);
  int extra = 0;
  for (const auto& [p, c] : s.points) {
    bool listed = std::find(base_points().begin(), base_points().end(), p) != base_points().end();
    if (!listed) {
      ++extra;
      EXPECT_EQ(c.kind, SingularityKind::Node) << p.str();
      EXPECT_EQ(intersection_multiplicity(sextic(), septic(), p).value, 1);
    }
  }
  EXPECT_EQ(extra, 1);
}

TEST(SingularPoints, BezoutBudget) {
  PointSearch m = rational_intersection_points(sextic(), septic());
  EXPECT_TRUE(m.complete);
  long total = 0;
  for (const auto& p : m.points) total += intersection_multiplicity(sextic(), septic(), p).value;
  EXPECT_EQ(total, 42);
}
