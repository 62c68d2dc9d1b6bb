// Command line front end: scenario verification and the single-curve tools.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

#include <nlohmann/json.hpp>

#include "surfcover/scenario.hpp"

using namespace surfcover;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitDegenerate = 2;
constexpr int kExitError = 3;

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

int verify(const std::string& name, unsigned long seed, const std::string& fixture, const std::string& json_path) {
  ScenarioSpec spec = fixture.empty() ? default_scenario(name) : ScenarioSpec::load(fixture);
  if (spec.name != name) throw FixtureError("fixture " + fixture + " describes " + spec.name + ", not " + name);
  ScenarioReport r;
  try {
    r = run_scenario(spec, seed);
  } catch (const DegenerateChoice& e) {
    std::cerr << e.what() << "\n";
    return kExitDegenerate;
  }
  std::cout << r.summary();
  if (!json_path.empty()) {
    std::ofstream out(json_path);
    if (!out) throw Error("cannot write " + json_path);
    out << r.to_json().dump(2) << "\n";
  }
  return r.exit_code();
}

int resolve(const std::string& curve, const std::string& point) {
  const MultiPoly F = read_poly_file(curve);
  const PlanePoint p = parse_plane_point(point);
  SingularityClass k = classify_singularity(F, p);
  print({{"point", p.str()},
         {"multiplicity", multiplicity_at(F, p)},
         {"classification", k.str()},
         {"delta", delta_invariant(k.tree)},
         {"multiplicity_sequence", k.tree.multiplicity_sequence()},
         {"tree", k.tree.to_json()}});
  return 0;
}

int irreducible(const std::string& curve) {
  const MultiPoly F = read_poly_file(curve);
  const std::size_t n = absolute_factor_count(F);
  print({{"degree", F.degree()}, {"absolute_factors", n}, {"absolutely_irreducible", n == 1}});
  return n == 1 ? 0 : kExitFail;
}

int intersect(const std::string& a, const std::string& b, const std::string& point) {
  const MultiPoly F = read_poly_file(a), G = read_poly_file(b);
  const PlanePoint p = parse_plane_point(point);
  IntersectionNumber I = intersection_multiplicity(F, G, p);
  json out{{"point", p.str()}, {"bezout", static_cast<long>(F.degree()) * G.degree()}, {"infinite", I.infinite}};
  if (!I.infinite) out["I"] = I.value;
  print(out);
  return 0;
}

/// Conditions: [{"point": "x,y,z", "mult": m, "tangent": "line"}], where a
/// tangent line adds multiplicity m at the infinitely near point along it.
int linsys(int degree, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FixtureError("cannot open " + path);
  const json list = json::parse(in);
  std::vector<BaseCondition> conds;
  for (const auto& c : list) {
    const PlanePoint p = parse_plane_point(c.at("point").get<std::string>());
    const int m = c.value("mult", 1);
    if (c.contains("tangent")) {
      auto t = tangent_cluster(p, parse_poly(c["tangent"].get<std::string>()), m);
      conds.insert(conds.end(), t.begin(), t.end());
    } else {
      conds.push_back({p, {}, m});
    }
  }
  LinearSystemResult r = solve_system(degree, conds);
  json out = r.to_json();
  if (r.dimension() == 0) out["member"] = find_member(r).str();
  print(out);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for bidouble cover constructions of surfaces with chi = 1, K^2 = 7"};
  app.require_subcommand(1);

  std::string name, fixture, json_path;
  unsigned long seed = 0;
  auto* v = app.add_subcommand("verify", "run every check of a scenario");
  v->add_option("scenario", name, "pgq0, pgq1 or pgq2")->required()->check(CLI::IsMember(scenario_names()));
  v->add_option("--seed", seed, "seed for the seeded choices");
  v->add_option("--json", json_path, "write the JSON report here");
  v->add_option("--fixture", fixture, "fixture file instead of the bundled one")->check(CLI::ExistingFile);

  std::string curve, curve_b, point;
  auto* res = app.add_subcommand("resolve", "resolve a singular point of a plane curve");
  res->add_option("--curve", curve, "polynomial file")->required()->check(CLI::ExistingFile);
  res->add_option("--point", point, "\"x,y,z\"")->required();

  auto* irr = app.add_subcommand("irreducible", "count absolute irreducible factors");
  irr->add_option("--curve", curve, "polynomial file")->required()->check(CLI::ExistingFile);

  auto* isect = app.add_subcommand("intersect", "local intersection number at a point");
  isect->add_option("--curve-a", curve, "polynomial file")->required()->check(CLI::ExistingFile);
  isect->add_option("--curve-b", curve_b, "polynomial file")->required()->check(CLI::ExistingFile);
  isect->add_option("--point", point, "\"x,y,z\"")->required();

  int degree = 0;
  std::string conditions;
  auto* ls = app.add_subcommand("linsys", "plane curves of a degree through base conditions");
  ls->add_option("--degree", degree, "degree")->required()->check(CLI::PositiveNumber);
  ls->add_option("--conditions", conditions, "JSON list of conditions")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*v) return verify(name, seed, fixture, json_path);
    if (*res) return resolve(curve, point);
    if (*irr) return irreducible(curve);
    if (*isect) return intersect(curve, curve_b, point);
    if (*ls) return linsys(degree, conditions);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
