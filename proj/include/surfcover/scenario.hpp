#ifndef SURFCOVER_SCENARIO_HPP
#define SURFCOVER_SCENARIO_HPP

// The three constructions as checked scenarios.
//   pgq0: p_g = q = 0 from the listed septic and sextic.
//   pgq1: p_g = q = 1 from a quintic and a sextic built as kernel members.
//   pgq2: p_g = q = 2 from two conics of a tangent pencil and four lines.

#include <filesystem>
#include <string>
#include <vector>

#include "surfcover/scenario_checks.hpp"
#include "surfcover/scenario_lattice.hpp"

namespace surfcover {

inline std::filesystem::path default_fixture_path(const std::string& name) {
#ifdef SURFCOVER_DATA_DIR
  return std::filesystem::path(SURFCOVER_DATA_DIR) / "scenarios" / (name + ".json");
#else
  return std::filesystem::path("data") / "scenarios" / (name + ".json");
#endif
}

inline ScenarioSpec default_scenario(const std::string& name) { return ScenarioSpec::load(default_fixture_path(name)); }

namespace detail {

inline ScenarioReport start_report(ScenarioContext& ctx) {
  ScenarioReport r;
  r.scenario = ctx.spec().name;
  r.seed = ctx.seed();
  return r;
}

/// Checks shared by the constructions, in report order.
inline BranchData common_checks(ScenarioContext& ctx, ScenarioReport& r, const std::string& curves_anchor) {
  check_irreducible(ctx, r, curves_anchor);
  check_singularities(ctx, r, curves_anchor);
  check_singular_sets(ctx, r, curves_anchor);
  check_intersections(ctx, r, curves_anchor);
  check_systems(ctx, r, curves_anchor);
  BranchData b;
  run_check(r, "branch-data", "branch divisors of the bidouble cover", "branch components and half sums resolve", [&] {
    b = branch_data(ctx);
    json d = json::array(), l = json::array();
    for (int g = 0; g < 3; ++g) {
      d.push_back(b.D[g].str());
      l.push_back(b.L[g].str());
    }
    return CheckOutcome{true, {{"D", d}, {"L", l}}};
  });
  if (!r.check_passed("branch-data")) return b;
  check_branch_classes(ctx, r, b, "branch divisors of the bidouble cover");
  check_branch_smooth(ctx, r, b, "branch divisors of the bidouble cover");
  check_branch_transversality(ctx, r, b, "pairwise transverse intersections and no common intersection");
  check_bidouble_relations(r, b, "half sums of the branch divisors");
  return b;
}

inline void finish(ScenarioContext& ctx, ScenarioReport& r, json invariants) {
  r.invariants = std::move(invariants);
  r.choices = ctx.choices();
}

inline json invariants_json(const CoverSummary& cover) {
  json inv{{"chi", nullptr}, {"pg", nullptr}, {"Ksq_min", nullptr}};
  if (cover.invariants) {
    inv["chi"] = cover.invariants->invariants.chi;
    inv["pg"] = *cover.invariants->invariants.pg;
    inv["Ksq_min"] = cover.invariants->invariants.Ksq + cover.minus_one_curves;
  }
  return inv;
}

/// General position requirements on seeded choices:
///   {"point": P, "off": [curves]}, {"curve": C, "misses": [points]} and
///   {"distinct": [points]}.
inline void require_general_position(ScenarioContext& ctx) {
  for (const auto& g : ctx.section("genericity")) {
    if (g.contains("distinct")) {
      const auto names = g["distinct"].get<std::vector<std::string>>();
      for (std::size_t i = 0; i < names.size(); ++i) {
        for (std::size_t j = i + 1; j < names.size(); ++j) {
          if (ctx.point(names[i]) == ctx.point(names[j])) {
            throw DegenerateChoice(names[i] + " and " + names[j] + " coincide; rerun with another seed");
          }
        }
      }
    } else if (g.contains("point")) {
      const std::string p = g["point"].get<std::string>();
      for (const auto& c : g.at("off")) {
        if (on_curve(ctx.curve(c.get<std::string>()), ctx.point(p))) {
          throw DegenerateChoice(p + " = " + ctx.point(p).str() + " lies on " + c.get<std::string>() +
                                 "; rerun with another seed");
        }
      }
    } else {
      const std::string c = g.at("curve").get<std::string>();
      for (const auto& p : g.at("misses")) {
        if (on_curve(ctx.curve(c), ctx.point(p.get<std::string>()))) {
          throw DegenerateChoice(c + " passes through " + p.get<std::string>() + "; rerun with another seed");
        }
      }
    }
  }
}

}  // namespace detail

/// p_g = q = 0, K^2 = 7.
inline ScenarioReport run_pgq0(const ScenarioSpec& spec, unsigned long seed = 0) {
  ScenarioContext ctx(spec, seed);
  detail::require_general_position(ctx);
  ScenarioReport r = detail::start_report(ctx);
  BranchData b = detail::common_checks(ctx, r, "septic and sextic with assigned singularities");
  if (!r.check_passed("branch-data")) {
    detail::finish(ctx, r, {{"chi", nullptr}, {"pg", nullptr}, {"Ksq_min", nullptr}});
    return r;
  }
  CoverSummary cover = check_cover_invariants(ctx, r, b, "invariants of the bidouble cover",
                                              "contracting the (-1)-curves over the four lines");

  run_check(r, "adjoint-L1-vanishes", "h0 of K+L1 through the conic", "h0(K + L1) = 0 because the conic misses the tangent", [&] {
    const ConfigPtr& cfg = ctx.config();
    auto catalog = scenario_catalog(ctx);
    H0Result h = h0_class_detailed(canonical_class(cfg) + b.L[0], catalog);
    // After the fixed part the class asks for a conic through p1..p5 tangent to T1.
    DivisorClass expected_moving = ctx.cls("2T - E1 - E1' - E2 - E3 - E4 - E5");
    std::vector<BaseCondition> through;
    for (const char* p : {"p1", "p2", "p3", "p4", "p5"}) through.push_back({ctx.point(p), {}, 1});
    LinearSystemResult conics = solve_system(2, through);
    const MultiPoly Q = find_member(conics);
    const bool tangent = is_tangent_line(Q, ctx.point("p1"), ctx.curve("T1"));
    const bool ok = h.value == 0 && h.moving == expected_moving && conics.dimension() == 0 && !tangent;
    return CheckOutcome{ok,
                        {{"h0", h.value}, {"removed", h.removed}, {"moving", h.moving.str()}, {"conic", Q.str()},
                         {"conic_tangent_to_T1", tangent}}};
  });

  // The double cover Y of X branched on D2 + D3 = 2 L1: six (-2)-curves in the
  // branch locus pull back to (-1)-curves.
  run_check(r, "intermediate-cover", "numerical Campedelli surface as an intermediate cover",
            "double cover branched on D2 + D3 has chi = 1, p_g = 0 and minimal K^2 = 2", [&] {
              if (!(b.D[1] + b.D[2] == 2 * b.L[0])) return CheckOutcome{false, {{"error", "D2 + D3 is not 2 L1"}}};
              SurfaceInvariants y = double_cover_invariants(b.L[0], scenario_catalog(ctx));
              long minus_two = 0;
              for (const auto& c : b.components) {
                if (c.branch != 0 && self_intersection(c.cls) == -2) ++minus_two;
              }
              const long k = minimal_model_Ksq(y.Ksq, minus_two);
              r.covers["intermediate"] = y.to_json();
              r.covers["intermediate"]["Ksq_min"] = k;
              const bool ok = y.chi == 1 && y.pg == 0 && y.Ksq == -4 && minus_two == 6 && k == 2;
              return CheckOutcome{ok, {{"computed", y.to_json()}, {"minus_one_curves", minus_two}, {"Ksq_min", k}}};
            });

  detail::finish(ctx, r, detail::invariants_json(cover));
  return r;
}

/// p_g = q = 1, K^2 = 7. The seed places p4 and the line T; C5 and C6 are
/// members of their linear systems.
inline ScenarioReport run_pgq1(const ScenarioSpec& spec, unsigned long seed = 0) {
  ScenarioContext ctx(spec, seed);
  detail::require_general_position(ctx);
  ScenarioReport r = detail::start_report(ctx);
  BranchData b = detail::common_checks(ctx, r, "quintic and sextic with assigned singularities");
  if (!r.check_passed("branch-data")) {
    detail::finish(ctx, r, detail::invariants_json({}));
    return r;
  }

  // C5 + C6 + E4 on X: both curves are smooth there, they meet transversally
  // off the centers and not over them, and they cross E4 in four distinct points.
  run_check(r, "nodal-union", "the quintic, the sextic and E4 form a nodal curve",
            "strict transforms of C5, C6 and E4 have at most nodes", [&] {
              const ConfigPtr& cfg = ctx.config();
              TransversalityReport cert =
                  transversality_certificate({{"C5", 0, ctx.curve("C5")}, {"C6", 1, ctx.curve("C6")}}, ctx.center_points(), seed);
              const long meet = intersection_number(strict_transform_class(ctx.curve("C5"), cfg),
                                                    strict_transform_class(ctx.curve("C6"), cfg));
              BinaryForm cone = tangent_cone_at(ctx.curve("C5*C6"), ctx.point("p4"));
              const bool distinct_on_E4 = binary_form_squarefree(cone) && cone.degree() == 4;
              const bool ok = cert.certified() && meet == cert.pairs.at(0).residual && distinct_on_E4 &&
                              r.check_passed("branch-smooth");
              return CheckOutcome{ok,
                                  {{"certificate", cert.to_json()}, {"C5_dot_C6_on_X", meet}, {"distinct_directions_at_p4", distinct_on_E4}}};
            });

  CoverSummary cover = check_cover_invariants(ctx, r, b, "invariants of the bidouble cover",
                                              "contracting the (-1)-curves over the three lines");
  detail::finish(ctx, r, detail::invariants_json(cover));
  return r;
}

namespace detail {

/// The double cover of X branched on D2 + D3 = 2 L1: every component A of D1
/// lifts to two curves of square A^2 when it misses D2 + D3, and to one of
/// square 2 A^2 when it meets it twice.
inline void check_intermediate_kummer(ScenarioContext& ctx, ScenarioReport& r, const BranchData& b) {
  run_check(r, "intermediate-cover", "the double cover branched on D2 + D3",
            "D1 pulls back to 16 disjoint (-2)-curves and the cover has chi = 2, p_g = 1, K^2 = 0", [&] {
              if (!(b.D[1] + b.D[2] == 2 * b.L[0])) return CheckOutcome{false, {{"error", "D2 + D3 is not 2 L1"}}};
              long minus_two = 0;
              json parts = json::array();
              for (const auto& c : b.components) {
                if (c.branch != 0) continue;
                const long meets = intersection_number(c.cls, b.D[1] + b.D[2]);
                const long self = self_intersection(c.cls);
                long count = 0, square = 0;
                if (meets == 0) {
                  count = 2;
                  square = self;
                } else if (meets == 2) {
                  count = 1;
                  square = 2 * self;
                }
                if (square == -2) minus_two += count;
                parts.push_back({{"component", c.name}, {"meets_branch", meets}, {"curves", count}, {"square", square}});
              }
              SurfaceInvariants y = double_cover_invariants(b.L[0], scenario_catalog(ctx));
              r.covers["intermediate"] = y.to_json();
              const bool ok = minus_two == 16 && y.chi == 2 && y.pg == 1 && y.Ksq == 0;
              return CheckOutcome{ok, {{"minus_two_curves", minus_two}, {"components", parts}, {"computed", y.to_json()}}};
            });
}

inline bool is_contracted(const CoverLattice& lat, std::size_t k) {
  const std::vector<int> gone = lat.contracted();
  return std::find(gone.begin(), gone.end(), static_cast<int>(k)) != gone.end();
}

/// Contracted pairing with every generator that survives on the minimal model.
inline bool pairs_evenly(const CoverLattice& lat, const CoverClass& c, json& odd) {
  bool ok = true;
  for (std::size_t k = 0; k < lat.size(); ++k) {
    if (is_contracted(lat, k)) continue;
    const long v = contracted_pairing(lat, c, lat.unit(lat.generators()[k].label));
    if (v % 2 != 0) {
      ok = false;
      odd.push_back({{"generator", lat.generators()[k].label}, {"pairing", v}});
    }
  }
  return ok;
}

/// The model after contraction of n smooth branches through one point of a
/// (-1)-curve, transverse to it in distinct directions: y = a_i x^2.
inline SingularityClass contracted_branches_model(int n) {
  const auto& v = projective_vars();
  const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1), z = MultiPoly::variable(v, 2);
  MultiPoly F = MultiPoly::constant(v, GR(1));
  for (int i = 0; i < n; ++i) F = F * (y * z - MultiPoly::constant(v, GR(i)) * x * x);
  return classify_singularity(F, PlanePoint(GR(0), GR(0), GR(1)));
}

inline CoverClass add(CoverClass a, const CoverClass& b, long s = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += s * b[i];
  return a;
}

}  // namespace detail

/// p_g = q = 2, K^2 = 7. The seed picks the two conics in the pencil and the
/// slopes of T3 and T4.
inline ScenarioReport run_pgq2(const ScenarioSpec& spec, unsigned long seed = 0) {
  ScenarioContext ctx(spec, seed);
  detail::require_general_position(ctx);
  ScenarioReport r = detail::start_report(ctx);
  BranchData b = detail::common_checks(ctx, r, "two conics tangent to T1, T2 at p1, p2 and four lines through p0");
  if (!r.check_passed("branch-data")) {
    detail::finish(ctx, r, detail::invariants_json({}));
    return r;
  }
  CoverSummary cover = check_cover_invariants(ctx, r, b, "invariants of the bidouble cover V",
                                              "D1 lifts to 16 disjoint (-1)-curves");
  const ConfigPtr& cfg = ctx.config();

  run_check(r, "canonical-support", "the canonical divisor of V",
            "2K_X + L1 + L2 + L3 = D1, so K_V is the reduced preimage of D1 and vanishes on the minimal model", [&] {
              const DivisorClass twice = 2 * canonical_class(cfg) + b.L[0] + b.L[1] + b.L[2];
              long on_D1 = 0;
              for (const auto& f : cover.fates) on_D1 += f.branch == 0 ? f.minus_one_curves : 0;
              const bool ok = twice == b.D[0] && on_D1 == 16 && cover.minus_one_curves == 16;
              return CheckOutcome{ok, {{"2K_plus_L", twice.str()}, {"D1", b.D[0].str()}, {"minus_one_curves_over_D1", on_D1}}};
            });
  detail::check_intermediate_kummer(ctx, r, b);

  const json& sb = ctx.section("second_branch");
  const auto names = sb.at("curves").get<std::vector<std::string>>();
  const std::string line_name = names.at(0), conic_name = names.at(1);
  const std::string other = sb.at("other").get<std::string>();
  const std::string contact_center = sb.at("center").get<std::string>();

  std::optional<BranchLattice> bl;
  run_check(r, "cover-lattice", "curves on V over the pencil through p0", "intersection lattice of V from the branch fates", [&] {
    std::vector<std::pair<std::string, DivisorClass>> pulls{
        {"T", ctx.cls("T")},
        {line_name + "'", strict_transform_class(ctx.curve(line_name), cfg)},
        {other + "'", strict_transform_class(ctx.curve(other), cfg)}};
    std::vector<bool> in_branch(cfg->size(), false);
    for (const auto& c : b.components) {
      if (c.center >= 0) in_branch[c.center] = true;
    }
    for (int k = 0; k < cfg->size(); ++k) {
      if (!in_branch[k]) pulls.emplace_back(cfg->center(k).label, exceptional_strict_transform(cfg, k));
    }
    bl = branch_lattice(b, cover.fates, pulls);
    const std::size_t contracted = bl->lattice.contracted().size();
    return CheckOutcome{contracted == 16,
                        {{"generators", bl->lattice.size()}, {"contracted", contracted}, {"lattice", bl->lattice.to_json()}}};
  });
  if (!bl) {
    detail::finish(ctx, r, detail::invariants_json({}));
    return r;
  }
  const CoverLattice& lat = bl->lattice;
  const CoverClass R = lat.unit(pullback_label(line_name + "'"));
  const CoverClass C = lat.unit(reduced_label(conic_name));
  const CoverClass B = detail::add(R, C);
  const CoverClass expansion = detail::add(pull_plane_curve(*bl, cfg, line_name, ctx.curve(line_name)),
                                           pull_plane_curve(*bl, cfg, other, ctx.curve(other)));

  long triple_points = 0;
  run_check(r, "contact-point", "the tangent line R and the conic C1 over p3",
            "R is tangent to C1 at p3, so its preimage has a node on the curve over E3 through which the conic passes: "
            "a (3,3)-point after contraction",
            [&] {
              const MultiPoly& L = ctx.curve(line_name);
              const MultiPoly& Q = ctx.curve(conic_name);
              const PlanePoint& p = ctx.point(sb.at("contact").get<std::string>());
              const int e = cfg->index_of(contact_center);
              const bool tangent = is_tangent_line(Q, p, L);
              const DivisorClass Ls = strict_transform_class(L, cfg), Qs = strict_transform_class(Q, cfg);
              const DivisorClass E = exceptional_strict_transform(cfg, e);
              const long on_X = intersection_number(Ls, Qs);
              TransversalityReport cert =
                  transversality_certificate({{line_name, 0, L}, {conic_name, 1, Q}}, ctx.center_points(), seed);
              const long residual = cert.pairs.at(0).residual;
              const CoverClass Ebar = lat.unit(reduced_label(contact_center));
              const long mR = lat.pairing(R, Ebar), mC = lat.pairing(C, Ebar);
              // Another contracted curve met by both would carry a further singular point.
              json elsewhere = json::array();
              for (int k : lat.contracted()) {
                const CoverClass g = lat.unit(lat.generators()[k].label);
                if (g != Ebar && lat.pairing(R, g) != 0 && lat.pairing(C, g) != 0) elsewhere.push_back(lat.generators()[k].label);
              }
              const bool concurrent = tangent && on_X == 1 && residual == 0 && intersection_number(Ls, E) == 1 &&
                                      intersection_number(Qs, E) == 1;
              SingularityClass model = detail::contracted_branches_model(static_cast<int>(mR + mC));
              const bool type33 = model.kind == SingularityKind::TypePoint && model.m1 == 3 && model.m2 == 3;
              const bool ok = concurrent && mR == 2 && mC == 1 && type33 && elsewhere.empty();
              triple_points = ok ? 1 : 0;
              return CheckOutcome{ok,
                                  {{"tangent", tangent},
                                   {"strict_pairing_on_X", on_X},
                                   {"residual_off_centers", residual},
                                   {"line_meets_center", intersection_number(Ls, E)},
                                   {"conic_meets_center", intersection_number(Qs, E)},
                                   {"line_branches_on_center", mR},
                                   {"conic_branches_on_center", mC},
                                   {"model", model.str()},
                                   {"other_common_contracted_curves", elsewhere}}};
            });

  run_check(r, "pullback-identity", "pi^*(R + H) over the pencil through p0",
            "pi^*(R + H) expands to the stated curves and equals pi^*(2T) against every generator", [&] {
              CoverClass stated(lat.size(), 0);
              for (const auto& t : sb.at("decomposition")) stated[lat.index_of(t.at(0).get<std::string>())] += t.at(1).get<long>();
              const bool matches = expansion == stated;
              const bool identity = verify_class_identity(lat, lat.combo({{pullback_label("T"), 2}}), expansion);
              return CheckOutcome{matches && identity,
                                  {{"expansion", cover_class_str(lat, expansion)},
                                   {"stated", cover_class_str(lat, stated)},
                                   {"equals_pullback_of_2T", identity}}};
            });

  long B_sq = 0;
  run_check(r, "contracted-squares", "R^ and C1^ on the minimal model",
            "R^2 = 8, C1^2 = 0, R^.C1^ = 4 and (R^ + C1^)^2 = 16 after contracting the 16 curves", [&] {
              const ContractionRecord rr = contraction_record(lat, R);
              const long R2 = contracted_self_intersection(lat, R, rr);
              const long C2 = contracted_self_intersection(lat, C, contraction_record(lat, C));
              const long RC = contracted_pairing(lat, R, C);
              B_sq = contracted_self_intersection(lat, B, contraction_record(lat, B));
              json rec = json::array();
              for (const auto& [label, m] : rr) rec.push_back({{"curve", label}, {"multiplicity", m}});
              const bool ok = R2 == 8 && C2 == 0 && RC == 4 && B_sq == 16;
              return CheckOutcome{ok,
                                  {{"R_sq_on_V", lat.pairing(R, R)},
                                   {"R_record", rec},
                                   {"R_sq", R2},
                                   {"C_sq", C2},
                                   {"R_dot_C", RC},
                                   {"B_sq", B_sq}}};
            });

  run_check(r, "even-pairing", "R^ + C1^ = 2L and R^ + H^ + T1^ + T2^ = 2L'",
            "R^ + C1^ pairs evenly with every surviving generator, and pi^*(R + H) minus the four fibre curves is twice a "
            "sum of contracted curves",
            [&] {
              json odd = json::array();
              const bool even = detail::pairs_evenly(lat, B, odd);
              std::vector<std::pair<std::string, long>> fibre{{pullback_label(line_name + "'"), 1},
                                                             {pullback_label(other + "'"), 1}};
              for (const auto& e : sb.at("elliptic")) fibre.push_back({pullback_label(e.get<std::string>()), 1});
              const CoverClass diff = detail::add(expansion, lat.combo(fibre), -1);
              bool twice_contracted = true;
              for (std::size_t i = 0; i < diff.size(); ++i) {
                if (diff[i] != 0 && (!detail::is_contracted(lat, i) || diff[i] % 2 != 0)) twice_contracted = false;
              }
              return CheckOutcome{even && twice_contracted,
                                  {{"odd_pairings", odd},
                                   {"difference", cover_class_str(lat, diff)},
                                   {"twice_contracted", twice_contracted}}};
            });

  record_assumption(r, "assumption:fibration-evenness", "elliptic fibrations over elliptic bases",
                    "H^ + C1^ and T1^ + T2^ are even as sums of two fibres of elliptic fibrations with elliptic base; "
                    "with the identity above this makes R^ + C1^ even");
  record_assumption(r, "assumption:abelian-minimal-model", "the minimal model of V",
                    "the minimal model of V is an abelian surface whose Kummer surface is the double cover branched on D2 + D3");
  record_assumption(r, "assumption:single-singular-point", "the branch curve R^ + C1^",
                    "the three branches at the contact point are pairwise transverse on V and R^ + C1^ has no other singular point");

  std::optional<SurfaceInvariants> final_inv;
  run_check(r, "double-cover-invariants", "double cover of the abelian surface branched on R^ + C1^",
            "chi = 1 and K^2 = 7 for the minimal model of the double cover", [&] {
              if (!cover.invariants) throw Error("cover invariants unavailable");
              DoubleCoverInput in;
              in.ambient = Ambient::Abelian;
              in.chi_X = cover.invariants->invariants.chi;
              in.n = 0;
              in.B_sq = B_sq;
              in.L_sq = B_sq / 4;
              in.L_dot_K = 0;
              in.branch_even = r.check_passed("even-pairing");
              in.B_disjoint_from_A = true;
              in.triple_triple_points = triple_points;
              final_inv = prop1_invariants(in);
              r.covers["double_cover"] = final_inv->to_json();
              const bool ok = r.check_passed("canonical-support") && final_inv->chi == 1 && final_inv->Ksq == 7;
              return CheckOutcome{ok, {{"computed", final_inv->to_json()}, {"L_sq", in.L_sq}, {"B_sq", in.B_sq}}};
            });
  record_assumption(r, "assumption:irregularity", "irregularity of the double cover",
                    "q(S) >= 2 from the abelian surface and no minimal surface with chi = 1, K^2 = 7 has q > 2, "
                    "so p_g(S) = q(S) = 2",
                    {{"pg", 2}, {"q", 2}});

  json inv{{"chi", nullptr}, {"pg", nullptr}, {"Ksq_min", nullptr}};
  if (final_inv && r.check_passed("double-cover-invariants")) {
    inv = {{"chi", final_inv->chi}, {"pg", 2}, {"Ksq_min", final_inv->Ksq}};
  }
  detail::finish(ctx, r, inv);
  return r;
}

inline const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names{"pgq0", "pgq1", "pgq2"};
  return names;
}

/// Runs a scenario by the name in its fixture.
inline ScenarioReport run_scenario(const ScenarioSpec& spec, unsigned long seed = 0) {
  if (spec.name == "pgq0") return run_pgq0(spec, seed);
  if (spec.name == "pgq1") return run_pgq1(spec, seed);
  if (spec.name == "pgq2") return run_pgq2(spec, seed);
  throw FixtureError("unknown scenario " + spec.name);
}

inline ScenarioReport run_scenario(const std::string& name, unsigned long seed = 0) {
  return run_scenario(default_scenario(name), seed);
}

}  // namespace surfcover

#endif  // SURFCOVER_SCENARIO_HPP
