#ifndef SURFCOVER_SCENARIO_SPEC_HPP
#define SURFCOVER_SCENARIO_SPEC_HPP

// Scenario fixtures and their resolution into points, curves and classes.
//
// A fixture is a JSON document with these keys, all optional except name:
//   parameters   name -> {"seeded": [lo, hi]} or a number string; nonzero rationals
//   points       name -> "x,y,z" | {"seeded": [lo, hi]} | {"meet": [A, B], "index": k}
//   curves       name -> {"file": path} | {"poly": text} | {"line": [P, Q]}
//                      | {"tangent": {"curve": C, "at": P}} | {"system": recipe}
//   centers      [{"label", "point"} | {"label", "parent", "along": line}]
//   singularities, intersections, systems, branch, half_sums, catalog, expected
// Polynomial texts may use {parameter} placeholders. A curve name "A*B" means
// the product of A and B. Files are relative to the fixture's directory.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/linsys.hpp"
#include "surfcover/parse.hpp"
#include "surfcover/points.hpp"

namespace surfcover {

using nlohmann::json;

struct ScenarioSpec {
  std::string name;
  json fixture;
  std::filesystem::path base_dir;  // where relative curve files live

  static ScenarioSpec from_json(json j, std::filesystem::path base_dir) {
    if (!j.contains("name") || !j["name"].is_string()) throw FixtureError("fixture has no name");
    ScenarioSpec s;
    s.name = j["name"].get<std::string>();
    s.fixture = std::move(j);
    s.base_dir = std::move(base_dir);
    return s;
  }

  static ScenarioSpec load(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw FixtureError("cannot open fixture " + path.string());
    json j;
    try {
      j = json::parse(in);
    } catch (const json::exception& e) {
      throw FixtureError("fixture " + path.string() + ": " + e.what());
    }
    return from_json(std::move(j), path.parent_path());
  }
};

namespace detail {

/// FNV-1a, so that seeded choices do not depend on the standard library's hash.
inline std::uint64_t stable_hash(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::mt19937_64 item_rng(unsigned long seed, const std::string& item) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stable_hash(item)), static_cast<std::uint32_t>(stable_hash(item) >> 32)};
  return std::mt19937_64(seq);
}

inline std::pair<long, long> seeded_range(const json& j) {
  if (!j.is_array() || j.size() != 2) throw FixtureError("a seeded range is [lo, hi]");
  auto lo = j[0].get<long>(), hi = j[1].get<long>();
  if (lo > hi) throw FixtureError("empty seeded range");
  return {lo, hi};
}

/// A nonzero rational n/d with n in [lo, hi] and 1 <= d <= 3.
inline GR seeded_rational(std::mt19937_64& rng, std::pair<long, long> range, bool nonzero) {
  std::uniform_int_distribution<long> num(range.first, range.second), den(1, 3);
  for (int tries = 0; tries < 1000; ++tries) {
    long n = num(rng), d = den(rng);
    if (nonzero && n == 0) continue;
    return GR(Rational(n, d));
  }
  throw FixtureError("seeded range admits no nonzero value");
}

}  // namespace detail

/// Resolves a fixture for one seed. Every lookup is memoized, and seeded
/// choices depend only on the seed and the item's name.
class ScenarioContext {
 public:
  ScenarioContext(ScenarioSpec spec, unsigned long seed) : spec_(std::move(spec)), seed_(seed) {}

  const ScenarioSpec& spec() const { return spec_; }
  const json& fixture() const { return spec_.fixture; }
  unsigned long seed() const { return seed_; }

  /// Values of seeded items, for the report.
  const json& choices() const { return choices_; }

  const GR& parameter(const std::string& name) {
    if (auto it = params_.find(name); it != params_.end()) return it->second;
    const json& src = section("parameters").at(name);
    GR v;
    if (src.is_object() && src.contains("seeded")) {
      auto rng = detail::item_rng(seed_, "parameter " + name);
      v = detail::seeded_rational(rng, detail::seeded_range(src["seeded"]), true);
      choices_["parameters"][name] = v.str();
    } else {
      v = parse_gr(src.get<std::string>());
    }
    return params_[name] = v;
  }

  const PlanePoint& point(const std::string& name) {
    if (auto it = points_.find(name); it != points_.end()) return it->second;
    Visit visit(this, "point " + name);
    const json& sections = section("points");
    if (!sections.contains(name)) throw FixtureError("no point named " + name);
    const json& src = sections[name];
    PlanePoint p;
    if (src.is_string()) {
      p = parse_point(src.get<std::string>());
    } else if (src.contains("seeded")) {
      auto rng = detail::item_rng(seed_, "point " + name);
      auto range = detail::seeded_range(src["seeded"]);
      p = PlanePoint::affine(detail::seeded_rational(rng, range, false), detail::seeded_rational(rng, range, false));
      choices_["points"][name] = p.str();
    } else if (src.contains("meet")) {
      const auto names = src["meet"].get<std::vector<std::string>>();
      if (names.size() != 2) throw FixtureError("meet needs two curves");
      PointSearch s = rational_intersection_points(curve(names[0]), curve(names[1]));
      std::map<std::string, PlanePoint> by_key;
      for (const auto& q : s.points) by_key.emplace(q.str(), q);
      const std::size_t total = static_cast<std::size_t>(curve(names[0]).degree() * curve(names[1]).degree());
      if (!s.complete || by_key.size() != total) {
        throw DegenerateChoice(names[0] + " and " + names[1] + " do not meet in " + std::to_string(total) +
                               " distinct points of Q(i)");
      }
      const std::size_t k = src.value("index", 0);
      if (k >= by_key.size()) throw FixtureError("meet index out of range for " + name);
      p = std::next(by_key.begin(), static_cast<long>(k))->second;
    } else {
      throw FixtureError("unknown point source for " + name);
    }
    return points_[name] = p.normalized();
  }

  const MultiPoly& curve(const std::string& name) {
    if (auto it = curves_.find(name); it != curves_.end()) return it->second;
    if (auto star = name.find('*'); star != std::string::npos) {
      MultiPoly prod = curve(name.substr(0, star)) * curve(name.substr(star + 1));
      return curves_[name] = prod;
    }
    Visit visit(this, "curve " + name);
    const json& sections = section("curves");
    if (!sections.contains(name)) throw FixtureError("no curve named " + name);
    const json& src = sections[name];
    MultiPoly F;
    if (src.contains("file")) {
      F = read_poly_file((spec_.base_dir / src["file"].get<std::string>()).string());
    } else if (src.contains("poly")) {
      F = parse_poly(substitute_parameters(src["poly"].get<std::string>()));
    } else if (src.contains("line")) {
      const auto ends = src["line"].get<std::vector<std::string>>();
      if (ends.size() != 2) throw FixtureError("a line needs two points");
      if (point(ends[0]) == point(ends[1])) throw DegenerateChoice("line " + name + " through a doubled point");
      F = line_through_points(point(ends[0]), point(ends[1]));
    } else if (src.contains("tangent")) {
      const MultiPoly& C = curve(src["tangent"].at("curve").get<std::string>());
      const PlanePoint& p = point(src["tangent"].at("at").get<std::string>());
      if (multiplicity_at(C, p) != 1) throw FixtureError("tangent line " + name + " needs a smooth point");
      auto dirs = tangent_directions(tangent_cone_at(C, p));
      F = line_in_direction(p, dirs.rational.at(0).first);
    } else if (src.contains("system")) {
      const LinearSystemResult& r = system(name, src["system"]);
      F = src["system"].value("member", std::string("unique")) == "seeded"
              ? random_member(r, detail::stable_hash("member " + name) ^ seed_)
              : find_member(r);
      choices_["curves"][name] = F.str();
    } else {
      throw FixtureError("unknown curve source for " + name);
    }
    if (F.nvars() != 3 || F.degree() < 1) throw FixtureError("curve " + name + " is not a plane curve");
    if (!is_squarefree_projective(F)) {
      // A member of a system is only as general as the seeded base points.
      if (src.contains("system")) throw DegenerateChoice("the chosen member " + name + " has a repeated component");
      throw FixtureError("curve " + name + " has a repeated component");
    }
    return curves_[name] = F;
  }

  /// The linear system behind a curve defined by a recipe, or any recipe.
  const LinearSystemResult& system(const std::string& key, const json& recipe) {
    if (auto it = systems_.find(key); it != systems_.end()) return it->second;
    return systems_[key] = solve_system(recipe.at("degree").get<int>(), conditions(recipe.at("conditions")));
  }
  const std::map<std::string, LinearSystemResult>& systems() const { return systems_; }

  std::vector<BaseCondition> conditions(const json& list) {
    std::vector<BaseCondition> out;
    for (const auto& c : list) {
      const PlanePoint& p = point(c.at("point").get<std::string>());
      const int m = c.value("mult", 1);
      if (c.contains("tangent")) {
        auto t = tangent_cluster(p, curve(c["tangent"].get<std::string>()), m);
        out.insert(out.end(), t.begin(), t.end());
      } else {
        out.push_back({p, {}, m});
      }
    }
    return out;
  }

  const ConfigPtr& config() {
    if (config_) return config_;
    auto cfg = std::make_shared<BlowupConfiguration>();
    for (const auto& c : section("centers")) {
      const std::string label = c.at("label").get<std::string>();
      if (c.contains("point")) {
        cfg->add_point(label, point(c["point"].get<std::string>()));
      } else if (c.contains("parent") && c.contains("along")) {
        const int parent = cfg->index_of(c["parent"].get<std::string>());
        const MultiPoly& L = curve(c["along"].get<std::string>());
        if (!on_curve(L, *cfg->center(parent).point)) {
          throw FixtureError(label + ": the line " + c["along"].get<std::string>() + " misses its parent point");
        }
        cfg->add_along_line(label, parent, L);
      } else {
        throw FixtureError("center " + label + " needs a point or a parent and a line");
      }
    }
    config_ = std::move(cfg);
    return config_;
  }

  /// Plane points of the configuration, in order.
  std::vector<PlanePoint> center_points() {
    std::vector<PlanePoint> out;
    for (const auto& c : config()->centers()) {
      if (c.point) out.push_back(*c.point);
    }
    return out;
  }

  DivisorClass cls(const std::string& text) { return parse_class(config(), text); }

  const json& section(const std::string& key) const {
    static const json empty = json::object();
    return spec_.fixture.contains(key) ? spec_.fixture[key] : empty;
  }

 private:
  static PlanePoint parse_point(const std::string& text) {
    std::vector<GR> c;
    std::size_t start = 0;
    while (true) {
      std::size_t comma = text.find(',', start);
      c.push_back(parse_gr(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (c.size() != 3) throw FixtureError("a point has three coordinates: " + text);
    return {c[0], c[1], c[2]};
  }

  std::string substitute_parameters(std::string text) {
    for (std::size_t open; (open = text.find('{')) != std::string::npos;) {
      std::size_t close = text.find('}', open);
      if (close == std::string::npos) throw FixtureError("unclosed parameter in " + text);
      const std::string v = "(" + parameter(text.substr(open + 1, close - open - 1)).str() + ")";
      text.replace(open, close - open + 1, v);
    }
    return text;
  }

  // Marks an item as being resolved, to report cycles instead of recursing.
  struct Visit {
    Visit(ScenarioContext* c, std::string item) : ctx(c), key(std::move(item)) {
      if (!ctx->resolving_.insert(key).second) throw FixtureError("fixture refers to " + key + " in its own definition");
    }
    ~Visit() { ctx->resolving_.erase(key); }
    Visit(const Visit&) = delete;
    Visit& operator=(const Visit&) = delete;
    ScenarioContext* ctx;
    std::string key;
  };

  ScenarioSpec spec_;
  unsigned long seed_;
  json choices_ = json::object();
  std::map<std::string, GR> params_;
  std::map<std::string, PlanePoint> points_;
  std::map<std::string, MultiPoly> curves_;
  std::map<std::string, LinearSystemResult> systems_;
  std::set<std::string> resolving_;
  ConfigPtr config_;
};

/// Parses "x,y,z" with Gaussian rational coordinates.
inline PlanePoint parse_plane_point(const std::string& text) {
  ScenarioSpec s = ScenarioSpec::from_json({{"name", "point"}, {"points", {{"p", text}}}}, {});
  ScenarioContext ctx(s, 0);
  return ctx.point("p");
}

}  // namespace surfcover

#endif  // SURFCOVER_SCENARIO_SPEC_HPP
