#ifndef SURFCOVER_SCENARIO_CHECKS_HPP
#define SURFCOVER_SCENARIO_CHECKS_HPP

// Scenario reports and the checks every construction shares: singularities,
// intersection budgets, linear systems, branch data of the bidouble cover and
// the (-1)-curves on it.

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/covers.hpp"
#include "surfcover/factor_count.hpp"
#include "surfcover/scenario_spec.hpp"
#include "surfcover/transversality.hpp"

namespace surfcover {

enum class CheckStatus { Pass, Fail, Assumed };

inline std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Assumed:
      return "ASSUMED";
  }
  return "?";
}

struct CheckEntry {
  std::string id;
  std::string anchor;  // where the construction states the fact
  std::string description;
  CheckStatus status = CheckStatus::Fail;
  json values = json::object();

  json to_json() const {
    return {{"id", id}, {"anchor", anchor}, {"description", description}, {"status", status_name(status)},
            {"values", values}};
  }
};

struct ScenarioReport {
  std::string scenario;
  unsigned long seed = 0;
  std::vector<CheckEntry> checks;
  json invariants = json::object();  // chi, pg, Ksq_min
  std::vector<std::string> assumptions;
  json covers = json::object();
  json choices = json::object();

  bool passed() const {
    for (const auto& c : checks) {
      if (c.status == CheckStatus::Fail) return false;
    }
    return !checks.empty();
  }
  int exit_code() const { return passed() ? 0 : 1; }

  const CheckEntry* find(const std::string& id) const {
    for (const auto& c : checks) {
      if (c.id == id) return &c;
    }
    return nullptr;
  }
  bool check_passed(const std::string& id) const {
    const CheckEntry* c = find(id);
    return c && c->status == CheckStatus::Pass;
  }

  json to_json() const {
    json cs = json::array();
    for (const auto& c : checks) cs.push_back(c.to_json());
    return {{"scenario", scenario}, {"seed", seed},       {"checks", cs},       {"invariants", invariants},
            {"assumptions", assumptions}, {"covers", covers}, {"choices", choices}, {"passed", passed()}};
  }

  /// One line per check, then the verdict.
  std::string summary() const {
    std::string out;
    for (const auto& c : checks) out += status_name(c.status) + "  " + c.id + "  (" + c.anchor + ")\n";
    out += std::string(passed() ? "PASS" : "FAIL") + " " + scenario + " invariants " + invariants.dump() + "\n";
    return out;
  }
};

struct CheckOutcome {
  bool ok = false;
  json values = json::object();
};

/// Runs one check. Errors become a failed entry, except DegenerateChoice,
/// which aborts the run so that the caller can pick another seed.
inline void run_check(ScenarioReport& r, std::string id, std::string anchor, std::string description,
                      const std::function<CheckOutcome()>& body) {
  CheckEntry e{std::move(id), std::move(anchor), std::move(description)};
  try {
    CheckOutcome o = body();
    e.status = o.ok ? CheckStatus::Pass : CheckStatus::Fail;
    e.values = std::move(o.values);
  } catch (const DegenerateChoice&) {
    throw;
  } catch (const std::exception& ex) {
    e.status = CheckStatus::Fail;
    e.values = {{"error", ex.what()}};
  }
  r.checks.push_back(std::move(e));
}

inline void record_assumption(ScenarioReport& r, std::string id, std::string anchor, std::string description,
                              json values = json::object()) {
  r.assumptions.push_back(description);
  r.checks.push_back({std::move(id), std::move(anchor), std::move(description), CheckStatus::Assumed, std::move(values)});
}

inline bool same_line(const MultiPoly& a, const MultiPoly& b) { return a.monic() == b.monic(); }

// ---------------------------------------------------------------------------
// Curves

inline void check_irreducible(ScenarioContext& ctx, ScenarioReport& r, const std::string& anchor) {
  for (const auto& name : ctx.section("irreducible")) {
    const std::string c = name.get<std::string>();
    run_check(r, "irreducible:" + c, anchor, c + " is absolutely irreducible", [&] {
      const std::size_t n = absolute_factor_count(ctx.curve(c));
      return CheckOutcome{n == 1, {{"absolute_factors", n}}};
    });
  }
}

inline std::string kind_name(SingularityKind k) {
  switch (k) {
    case SingularityKind::Smooth:
      return "Smooth";
    case SingularityKind::Node:
      return "Node";
    case SingularityKind::Tacnode:
      return "Tacnode";
    case SingularityKind::OrdinaryMultiple:
      return "OrdinaryMultiple";
    case SingularityKind::TypePoint:
      return "TypePoint";
    case SingularityKind::General:
      return "General";
  }
  return "?";
}

/// Each expectation {curve, point, kind, m?, tangent?} against classify_singularity.
inline void check_singularities(ScenarioContext& ctx, ScenarioReport& r, const std::string& anchor) {
  for (const auto& s : ctx.section("singularities")) {
    const std::string c = s.at("curve").get<std::string>(), p = s.at("point").get<std::string>();
    const std::string kind = s.at("kind").get<std::string>();
    std::string expected = kind;
    if (s.contains("m")) expected += "(" + std::to_string(s["m"].get<int>()) + ")";
    if (s.contains("tangent")) expected += " along " + s["tangent"].get<std::string>();
    run_check(r, "singularity:" + c + "@" + p, anchor, c + " at " + p + ": " + expected, [&] {
      SingularityClass k = classify_singularity(ctx.curve(c), ctx.point(p));
      bool ok = kind_name(k.kind) == kind;
      if (s.contains("m")) ok = ok && k.m1 == s["m"].get<int>();
      if (s.contains("tangent")) ok = ok && k.tangent && same_line(*k.tangent, ctx.curve(s["tangent"].get<std::string>()));
      return CheckOutcome{ok, {{"found", k.str()}, {"expected", expected}, {"delta", delta_invariant(k.tree)}}};
    });
  }
}

/// Full singular locus of a curve or product: the listed points, plus a count
/// of further points by kind.
inline void check_singular_sets(ScenarioContext& ctx, ScenarioReport& r, const std::string& anchor) {
  for (const auto& s : ctx.section("singular_sets")) {
    const std::string c = s.at("curve").get<std::string>();
    run_check(r, "singular-set:" + c, anchor, "all singular points of " + c, [&] {
      std::vector<MultiPoly> parts;
      std::string rest = c;
      for (std::size_t star; (star = rest.find('*')) != std::string::npos; rest = rest.substr(star + 1)) {
        parts.push_back(ctx.curve(rest.substr(0, star)));
      }
      parts.push_back(ctx.curve(rest));
      SingularPoints sp = rational_singular_points(parts);
      std::vector<PlanePoint> listed;
      for (const auto& p : s.at("points")) listed.push_back(ctx.point(p.get<std::string>()));
      std::map<std::string, long> extra;
      json found = json::array();
      long delta = 0;
      bool ok = sp.complete;
      std::size_t hit = 0;
      for (const auto& [p, k] : sp.points) {
        found.push_back({{"point", p.str()}, {"kind", k.str()}});
        delta += delta_invariant(k.tree);
        if (std::find(listed.begin(), listed.end(), p) != listed.end()) {
          ++hit;
        } else {
          ++extra[kind_name(k.kind)];
        }
      }
      ok = ok && hit == listed.size();
      std::map<std::string, long> want;
      if (s.contains("extra")) want = s["extra"].get<std::map<std::string, long>>();
      ok = ok && want == extra;
      json v{{"points", found}, {"complete", sp.complete}, {"extra", extra}, {"delta_sum", delta}};
      if (s.contains("delta_sum")) ok = ok && delta == s["delta_sum"].get<long>();
      return CheckOutcome{ok, v};
    });
  }
}

/// Local intersection numbers at listed points and the residual Bezout budget.
inline void check_intersections(ScenarioContext& ctx, ScenarioReport& r, const std::string& anchor) {
  for (const auto& s : ctx.section("intersections")) {
    const auto names = s.at("curves").get<std::vector<std::string>>();
    run_check(r, "intersection:" + names[0] + "." + names[1], anchor,
              "intersection numbers of " + names[0] + " and " + names[1], [&] {
                const MultiPoly &F = ctx.curve(names[0]), &G = ctx.curve(names[1]);
                const auto expected = s.at("values").get<std::vector<long>>();
                std::vector<long> values;
                long sum = 0;
                bool ok = true;
                for (const auto& p : s.at("points")) {
                  IntersectionNumber I = intersection_multiplicity(F, G, ctx.point(p.get<std::string>()));
                  ok = ok && !I.infinite;
                  values.push_back(I.value);
                  sum += I.value;
                }
                const long bezout = static_cast<long>(F.degree()) * G.degree();
                ok = ok && values == expected && bezout - sum == s.at("residual").get<long>();
                return CheckOutcome{ok, {{"values", values}, {"sum", sum}, {"bezout", bezout}, {"residual", bezout - sum}}};
              });
  }
}

/// Linear systems: rows, rank and dimension, and the member when unique.
inline void check_systems(ScenarioContext& ctx, ScenarioReport& r, const std::string& anchor) {
  for (const auto& s : ctx.section("systems")) {
    const std::string key = s.value("curve", std::string("system")) + "-system";
    run_check(r, "linear-system:" + s.value("curve", std::string("system")), anchor,
              "degree " + std::to_string(s.at("degree").get<int>()) + " curves with the stated base conditions", [&] {
                const LinearSystemResult& sys = ctx.system(key, s);
                json v = sys.to_json();
                bool ok = true;
                if (s.contains("rows")) ok = ok && sys.matrix.rows() == s["rows"].get<std::size_t>();
                if (s.contains("rank")) ok = ok && sys.rank() == s["rank"].get<std::size_t>();
                if (s.contains("dimension")) ok = ok && sys.dimension() == s["dimension"].get<long>();
                if (s.contains("min_dimension")) ok = ok && sys.dimension() >= s["min_dimension"].get<long>();
                if (s.contains("curve") && sys.dimension() == 0) {
                  const bool same = find_member(sys) == ctx.curve(s["curve"].get<std::string>()).monic();
                  v["member_matches"] = same;
                  ok = ok && same;
                }
                return CheckOutcome{ok, v};
              });
  }
}

// ---------------------------------------------------------------------------
// Branch data

struct BranchComponent {
  std::string name;
  int branch = 0;
  DivisorClass cls;
  std::optional<std::string> curve;  // plane curve components
  int center = -1;                   // exceptional components
};

struct BranchData {
  std::vector<BranchComponent> components;
  std::array<DivisorClass, 3> D;  // sums of the components
  std::array<DivisorClass, 3> L;
};

inline BranchData branch_data(ScenarioContext& ctx) {
  const ConfigPtr& cfg = ctx.config();
  BranchData b;
  const json& br = ctx.section("branch");
  if (br.size() != 3) throw FixtureError("the branch section needs three divisors");
  for (int g = 0; g < 3; ++g) {
    b.D[g] = DivisorClass::zero(cfg);
    for (const auto& c : br[g].at("components")) {
      BranchComponent comp;
      comp.branch = g;
      if (c.contains("curve")) {
        comp.name = c["curve"].get<std::string>();
        comp.curve = comp.name;
        comp.cls = strict_transform_class(ctx.curve(comp.name), cfg);
      } else {
        comp.name = c.at("exceptional").get<std::string>();
        comp.center = cfg->index_of(comp.name);
        comp.cls = exceptional_strict_transform(cfg, comp.center);
      }
      b.D[g] += comp.cls;
      b.components.push_back(std::move(comp));
    }
  }
  const json& half = ctx.section("half_sums");
  if (half.size() != 3) throw FixtureError("the half_sums section needs three classes");
  for (int g = 0; g < 3; ++g) b.L[g] = ctx.cls(half[g].get<std::string>());
  return b;
}

inline std::vector<CatalogCurve> scenario_catalog(ScenarioContext& ctx) {
  std::vector<CatalogCurve> out;
  for (const auto& n : ctx.section("catalog")) {
    const std::string name = n.get<std::string>();
    out.push_back({name, strict_transform_class(ctx.curve(name), ctx.config())});
  }
  return out;
}

/// How a branch component A of D_g lifts to the bidouble cover. Its reduced
/// preimage is a double cover of A branched at A.(D_j + D_k) points: for a
/// smooth rational A with no branch points it splits into two curves of
/// square A^2/2, with two it stays rational of square A^2.
struct ComponentFate {
  std::string name;
  int branch = 0;
  long self = 0;
  long branch_points = 0;
  bool rational = false;
  std::string fate;
  long minus_one_curves = 0;

  json to_json() const {
    return {{"component", name}, {"branch", branch + 1}, {"self_intersection", self}, {"branch_points", branch_points},
            {"rational", rational}, {"fate", fate}, {"minus_one_curves", minus_one_curves}};
  }
};

inline std::vector<ComponentFate> component_fates(const BranchData& b) {
  std::vector<ComponentFate> out;
  for (const auto& c : b.components) {
    ComponentFate f;
    f.name = c.name;
    f.branch = c.branch;
    f.self = self_intersection(c.cls);
    for (int g = 0; g < 3; ++g) {
      if (g != c.branch) f.branch_points += intersection_number(c.cls, b.D[g]);
    }
    f.rational = c.curve ? arithmetic_genus(c.cls) == 0 : true;
    if (f.rational && f.branch_points == 0) {
      f.fate = "splits";
      f.minus_one_curves = f.self == -2 ? 2 : 0;
    } else if (f.rational && f.branch_points == 2) {
      f.fate = "rational";
      f.minus_one_curves = f.self == -1 ? 1 : 0;
    } else {
      f.fate = "positive genus cover";
    }
    out.push_back(std::move(f));
  }
  return out;
}

/// D_g built from components equals the stated table.
inline void check_branch_classes(ScenarioContext& ctx, ScenarioReport& r, const BranchData& b, const std::string& anchor) {
  for (int g = 0; g < 3; ++g) {
    run_check(r, "branch-class:D" + std::to_string(g + 1), anchor,
              "D" + std::to_string(g + 1) + " from its components equals the stated class", [&] {
                DivisorClass stated = ctx.cls(ctx.section("branch")[g].at("class").get<std::string>());
                json parts = json::array();
                for (const auto& c : b.components) {
                  if (c.branch == g) parts.push_back({{"component", c.name}, {"class", c.cls.str()}});
                }
                return CheckOutcome{b.D[g] == stated, {{"computed", b.D[g].str()}, {"stated", stated.str()}, {"components", parts}}};
              });
  }
}

/// Every branch divisor is smooth: plane components have no singularity left
/// on X (delta sum equals the part absorbed by the centers) and components of
/// one divisor are disjoint.
inline void check_branch_smooth(ScenarioContext& ctx, ScenarioReport& r, const BranchData& b, const std::string& anchor) {
  run_check(r, "branch-smooth", anchor, "each D_g is a disjoint union of smooth curves", [&] {
    const ConfigPtr& cfg = ctx.config();
    json v = json::array();
    bool ok = true;
    for (const auto& c : b.components) {
      if (!c.curve) continue;
      const MultiPoly& F = ctx.curve(*c.curve);
      long absorbed = 0;
      for (long m : center_multiplicities(F, *cfg)) absorbed += m * (m - 1) / 2;
      SingularPoints sp = rational_singular_points(F);
      long delta = 0;
      for (const auto& [p, k] : sp.points) delta += delta_invariant(k.tree);
      const bool smooth = sp.complete && delta == absorbed;
      ok = ok && smooth;
      v.push_back({{"component", c.name}, {"delta_sum", delta}, {"absorbed_by_centers", absorbed}, {"smooth_on_X", smooth}});
    }
    json meets = json::array();
    for (std::size_t i = 0; i < b.components.size(); ++i) {
      for (std::size_t j = i + 1; j < b.components.size(); ++j) {
        const auto &x = b.components[i], &y = b.components[j];
        if (x.branch != y.branch) continue;
        const long n = intersection_number(x.cls, y.cls);
        if (n != 0) {
          ok = false;
          meets.push_back({{"components", x.name + " . " + y.name}, {"pairing", n}});
        }
      }
    }
    return CheckOutcome{ok, {{"plane_components", v}, {"meeting_components", meets}}};
  });
}

/// Pairwise transverse intersections and no common point of D_1, D_2, D_3.
/// Off the centers this is the resultant certificate. Over a center, two plane
/// components meet on X exactly when their pairing exceeds the certified
/// residual count; a plane component meets a last exceptional curve in the
/// directions of its tangent cone, which must be distinct from each other and
/// from those of the other divisors.
inline void check_branch_transversality(ScenarioContext& ctx, ScenarioReport& r, const BranchData& b,
                                        const std::string& anchor) {
  run_check(r, "branch-transversality", anchor, "D_1, D_2, D_3 meet transversally with no common point", [&] {
    const ConfigPtr& cfg = ctx.config();
    std::vector<PlaneSupport> supports;
    for (const auto& c : b.components) {
      if (c.curve) supports.push_back({c.name, c.branch, ctx.curve(*c.curve)});
    }
    TransversalityReport cert = transversality_certificate(supports, ctx.center_points(), ctx.seed());
    bool ok = cert.certified();
    json problems = json::array();
    auto residual_of = [&](const std::string& a, const std::string& c) -> long {
      for (const auto& p : cert.pairs) {
        if ((p.a == a && p.b == c) || (p.a == c && p.b == a)) return p.residual;
      }
      throw Error("no certificate for " + a + " and " + c);
    };
    long total = 0;
    for (std::size_t i = 0; i < b.components.size(); ++i) {
      for (std::size_t j = i + 1; j < b.components.size(); ++j) {
        const auto &x = b.components[i], &y = b.components[j];
        if (x.branch == y.branch) continue;
        const long n = intersection_number(x.cls, y.cls);
        total += n;
        if (n == 0) continue;
        if (x.curve && y.curve) {
          if (n != residual_of(x.name, y.name)) {
            ok = false;
            problems.push_back(x.name + " and " + y.name + " meet over a center");
          }
          continue;
        }
        if (!x.curve && !y.curve) {
          if (n != 1) {
            ok = false;
            problems.push_back(x.name + " and " + y.name + " pair to " + std::to_string(n));
          }
          continue;
        }
        const BranchComponent& e = x.curve ? y : x;
        const BranchComponent& c = x.curve ? x : y;
        const Center& center = cfg->center(e.center);
        if (!center.point || !cfg->proximate_to(e.center).empty()) {
          ok = false;
          problems.push_back(c.name + " meets " + e.name + ", which is not a last exceptional curve over a plane point");
          continue;
        }
        BinaryForm cone = tangent_cone_at(ctx.curve(*c.curve), *center.point);
        if (!binary_form_squarefree(cone) || cone.degree() != n) {
          ok = false;
          problems.push_back(c.name + " is not transverse to " + e.name);
        }
      }
    }
    // On a last exceptional curve in one divisor, the plane components of the
    // others must have pairwise distinct tangents.
    for (const auto& e : b.components) {
      if (e.curve) continue;
      const Center& center = cfg->center(e.center);
      if (!center.point || !cfg->proximate_to(e.center).empty()) continue;
      MultiPoly product = MultiPoly::constant(projective_vars(), GR(1));
      bool any = false;
      for (const auto& c : b.components) {
        if (!c.curve || c.branch == e.branch || !on_curve(ctx.curve(*c.curve), *center.point)) continue;
        product = product * ctx.curve(*c.curve);
        any = true;
      }
      if (any && !binary_form_squarefree(tangent_cone_at(product, *center.point))) {
        ok = false;
        problems.push_back("branch curves share a direction on " + e.name);
      }
    }
    return CheckOutcome{ok, {{"certificate", cert.to_json()}, {"pairings_total", total}, {"problems", problems}}};
  });
}

inline void check_bidouble_relations(ScenarioReport& r, const BranchData& b, const std::string& anchor) {
  run_check(r, "bidouble-relations", anchor, "L_g + D_g = L_j + L_k and 2L_g = D_j + D_k", [&] {
    BidoubleCheck c = check_bidouble_data(b.D, b.L);
    return CheckOutcome{c.all_hold(), c.to_json()};
  });
}

struct CoverSummary {
  std::optional<BidoubleInvariants> invariants;
  std::vector<ComponentFate> fates;
  long minus_one_curves = 0;
};

/// chi, p_g, K^2 of the cover and of its minimal model against "expected".
inline CoverSummary check_cover_invariants(ScenarioContext& ctx, ScenarioReport& r, const BranchData& b,
                                           const std::string& anchor, const std::string& minimal_anchor) {
  CoverSummary out;
  const json& want = ctx.section("expected");
  run_check(r, "cover-invariants", anchor, "chi, p_g and K^2 of the bidouble cover", [&] {
    out.invariants = bidouble_invariants(b.D, b.L, scenario_catalog(ctx));
    const auto& inv = out.invariants->invariants;
    json adj = json::array();
    for (int i = 0; i < 3; ++i) {
      adj.push_back({{"class", out.invariants->adjoint_classes[i].str()},
                     {"L_times_K_plus_L", out.invariants->adjoint_products[i]},
                     {"h0", out.invariants->h0[i]}});
    }
    r.covers["bidouble"] = inv.to_json();
    r.covers["adjoint"] = adj;
    const bool ok = inv.chi == want.at("chi").get<long>() && inv.pg == want.at("pg").get<long>() &&
                    inv.Ksq == want.at("Ksq").get<long>();
    return CheckOutcome{ok, {{"computed", inv.to_json()}, {"adjoint", adj}, {"canonical_double", out.invariants->canonical_double.str()}}};
  });
  run_check(r, "minimal-model", minimal_anchor, "(-1)-curves over the branch divisors and K^2 of the minimal model", [&] {
    out.fates = component_fates(b);
    json fates = json::array();
    for (const auto& f : out.fates) {
      out.minus_one_curves += f.minus_one_curves;
      fates.push_back(f.to_json());
    }
    if (!out.invariants) throw Error("cover invariants unavailable");
    const long k = minimal_model_Ksq(out.invariants->invariants.Ksq, out.minus_one_curves);
    r.covers["minimal_model_Ksq"] = k;
    const bool ok = out.minus_one_curves == want.at("minus_one_curves").get<long>() && k == want.at("Ksq_min").get<long>();
    return CheckOutcome{ok, {{"minus_one_curves", out.minus_one_curves}, {"Ksq_min", k}, {"components", fates}}};
  });
  return out;
}

}  // namespace surfcover

#endif  // SURFCOVER_SCENARIO_CHECKS_HPP
