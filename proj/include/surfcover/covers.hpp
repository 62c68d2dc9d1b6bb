#ifndef SURFCOVER_COVERS_HPP
#define SURFCOVER_COVERS_HPP

// Invariants of double and bidouble covers of a rational surface X, the
// double-cover formulas over surfaces with K numerically trivial, and an
// intersection lattice on a cover spanned by declared generators.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfcover/linsys.hpp"

namespace surfcover {

struct SurfaceInvariants {
  long chi = 0;
  std::optional<long> pg;
  long Ksq = 0;

  nlohmann::json to_json() const {
    nlohmann::json j{{"chi", chi}, {"Ksq", Ksq}};
    j["pg"] = pg ? nlohmann::json(*pg) : nlohmann::json(nullptr);
    return j;
  }
};

enum class Ambient { Abelian, K3, Enriques };

inline std::string ambient_name(Ambient a) {
  switch (a) {
    case Ambient::Abelian:
      return "abelian";
    case Ambient::K3:
      return "K3";
    case Ambient::Enriques:
      return "Enriques";
  }
  return "?";
}

/// Double cover of a surface with numerically trivial K, branched along
/// B + A_1 + ... + A_n = 2L where the A_i are disjoint (-2)-curves and B has
/// exactly one singular point of type (3,3).
struct DoubleCoverInput {
  Ambient ambient = Ambient::Abelian;
  long chi_X = 0;
  long n = 0;
  long L_sq = 0;
  long L_dot_K = 0;
  long B_sq = 0;
  bool branch_even = false;
  bool B_disjoint_from_A = false;
  long triple_triple_points = 0;
};

/// (chi, K^2) of the minimal model of the cover. The (3,3)-point lowers both by one.
inline SurfaceInvariants prop1_invariants(const DoubleCoverInput& in) {
  auto violated = [](const std::string& what) { throw BranchContractViolated(what); };
  const long expected_chi = in.ambient == Ambient::Abelian ? 0 : in.ambient == Ambient::K3 ? 2 : 1;
  const long expected_n = in.ambient == Ambient::Abelian ? 0 : in.ambient == Ambient::K3 ? 16 : 8;
  if (in.chi_X != expected_chi) violated("chi of the " + ambient_name(in.ambient) + " surface must be " + std::to_string(expected_chi));
  if (in.n != expected_n) violated("a " + ambient_name(in.ambient) + " surface needs n = " + std::to_string(expected_n));
  if (!in.branch_even) violated("the branch divisor is not even");
  if (!in.B_disjoint_from_A) violated("B meets some A_i");
  if (in.triple_triple_points != 1) violated("B must have exactly one (3,3)-point");
  if (in.B_sq != 16) violated("B^2 = " + std::to_string(in.B_sq) + ", not 16");
  if (4 * in.L_sq != 16 - 2 * in.n) violated("(2L)^2 differs from B^2 - 2n");
  const long adjoint = in.L_sq + in.L_dot_K;  // L(K + L)
  if (adjoint % 2 != 0) violated("L(K + L) is odd");
  const long adjoint_sq = in.L_sq + 2 * in.L_dot_K;  // (K + L)^2 with K^2 = 0
  return {2 * in.chi_X + adjoint / 2 - 1, std::nullopt, 2 * adjoint_sq + in.n - 1};
}

/// Double cover of the rational surface X branched along a smooth divisor 2L.
inline SurfaceInvariants double_cover_invariants(const DivisorClass& L, const std::vector<CatalogCurve>& catalog) {
  const DivisorClass KL = canonical_class(L.config()) + L;
  const long adjoint = intersection_number(L, KL);
  if (adjoint % 2 != 0) throw BranchContractViolated("L(K + L) is odd");
  return {2 + adjoint / 2, h0_class(KL, catalog), 2 * self_intersection(KL)};
}

struct BidoubleInvariants {
  SurfaceInvariants invariants;
  std::array<long, 3> adjoint_products{};  // L_i(K + L_i)
  std::array<long, 3> h0{};                // h0(K + L_i)
  std::array<DivisorClass, 3> adjoint_classes;
  DivisorClass canonical_double;  // 2K + L_1 + L_2 + L_3
};

inline BidoubleInvariants bidouble_invariants(const std::array<DivisorClass, 3>& D, const std::array<DivisorClass, 3>& L,
                                              const std::vector<CatalogCurve>& catalog) {
  if (!check_bidouble_data(D, L).all_hold()) throw BranchContractViolated("the relations L_g + D_g = L_j + L_k fail");
  const DivisorClass K = canonical_class(L[0].config());
  BidoubleInvariants out;
  long sum = 0, pg = 0;
  for (int i = 0; i < 3; ++i) {
    out.adjoint_classes[i] = K + L[i];
    out.adjoint_products[i] = intersection_number(L[i], out.adjoint_classes[i]);
    out.h0[i] = h0_class(out.adjoint_classes[i], catalog);
    sum += out.adjoint_products[i];
    pg += out.h0[i];
  }
  if (sum % 2 != 0) throw BranchContractViolated("sum of L_i(K + L_i) is odd");
  out.canonical_double = 2 * K + L[0] + L[1] + L[2];
  out.invariants = {4 + sum / 2, pg, self_intersection(out.canonical_double)};
  return out;
}

inline long minimal_model_Ksq(long Ksq, long contracted) {
  if (contracted < 0) throw Error("negative number of contracted curves");
  return Ksq + contracted;
}

// ---------------------------------------------------------------------------
// Lattice on a cover pi: V -> X of degree deg.
//
// Pullback:      pi^*(A).
// BranchReduced: the reduced preimage of a branch curve A, pi^*(A) = 2 * it.
// SplitPiece:    one of k disjoint pieces of another generator, each carrying
//                1/k of its intersections with everything outside its siblings.
// Pairings follow from pi^*A . pi^*B = deg * A.B.

enum class GeneratorKind { Pullback, BranchReduced, SplitPiece };

struct CoverGenerator {
  std::string label;
  GeneratorKind kind = GeneratorKind::Pullback;
  DivisorClass base;  // Pullback, BranchReduced
  int parent = -1;    // SplitPiece
  int pieces = 1;     // SplitPiece
  bool contracted = false;
  std::optional<long> declared_square;

  static CoverGenerator pullback(std::string label, DivisorClass a) {
    return {std::move(label), GeneratorKind::Pullback, std::move(a)};
  }
  static CoverGenerator branch_reduced(std::string label, DivisorClass a) {
    return {std::move(label), GeneratorKind::BranchReduced, std::move(a)};
  }
  static CoverGenerator split_piece(std::string label, int parent, int pieces) {
    CoverGenerator g;
    g.label = std::move(label);
    g.kind = GeneratorKind::SplitPiece;
    g.parent = parent;
    g.pieces = pieces;
    return g;
  }
};

/// Integer combination of generators.
using CoverClass = std::vector<long>;

class CoverLattice {
 public:
  CoverLattice(std::vector<CoverGenerator> gens, std::vector<std::vector<long>> gram, long degree)
      : gens_(std::move(gens)), gram_(std::move(gram)), degree_(degree) {}

  const std::vector<CoverGenerator>& generators() const { return gens_; }
  const std::vector<std::vector<long>>& gram() const { return gram_; }
  long degree() const { return degree_; }
  std::size_t size() const { return gens_.size(); }

  int index_of(const std::string& label) const {
    for (std::size_t k = 0; k < gens_.size(); ++k) {
      if (gens_[k].label == label) return static_cast<int>(k);
    }
    throw Error("no cover generator labelled " + label);
  }

  CoverClass combo(const std::vector<std::pair<std::string, long>>& terms) const {
    CoverClass c(size(), 0);
    for (const auto& [label, coef] : terms) c[index_of(label)] += coef;
    return c;
  }
  CoverClass unit(const std::string& label) const { return combo({{label, 1}}); }

  long pairing(const CoverClass& a, const CoverClass& b) const {
    long s = 0;
    for (std::size_t i = 0; i < size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < size(); ++j) s += a[i] * gram_[i][j] * b[j];
    }
    return s;
  }

  std::vector<int> contracted() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < size(); ++k) {
      if (gens_[k].contracted) out.push_back(static_cast<int>(k));
    }
    return out;
  }

  nlohmann::json to_json() const {
    nlohmann::json labels = nlohmann::json::array();
    for (const auto& g : gens_) labels.push_back(g.label);
    return {{"degree", degree_}, {"generators", labels}, {"gram", gram_}};
  }

 private:
  std::vector<CoverGenerator> gens_;
  std::vector<std::vector<long>> gram_;
  long degree_;
};

namespace detail {

/// The class on X a generator is a fraction of, and that fraction as 1/den.
inline std::pair<const DivisorClass*, long> cover_fraction(const std::vector<CoverGenerator>& g, int k) {
  const CoverGenerator& x = g[k];
  switch (x.kind) {
    case GeneratorKind::Pullback:
      return {&x.base, 1};
    case GeneratorKind::BranchReduced:
      return {&x.base, 2};
    case GeneratorKind::SplitPiece: {
      auto [base, den] = cover_fraction(g, x.parent);
      return {base, den * x.pieces};
    }
  }
  return {nullptr, 1};
}

}  // namespace detail

inline CoverLattice cover_gram(const std::vector<CoverGenerator>& gens, long degree) {
  if (degree != 2 && degree != 4) throw InconsistentDeclaration("cover degree must be 2 or 4");
  const std::size_t n = gens.size();
  for (std::size_t k = 0; k < n; ++k) {
    const auto& g = gens[k];
    if (g.kind == GeneratorKind::SplitPiece) {
      if (g.parent < 0 || static_cast<std::size_t>(g.parent) >= k) {
        throw InconsistentDeclaration(g.label + ": a split piece must follow its parent");
      }
      if (g.pieces < 2) throw InconsistentDeclaration(g.label + ": a split needs at least two pieces");
      long siblings = 0;
      for (const auto& h : gens) siblings += h.kind == GeneratorKind::SplitPiece && h.parent == g.parent;
      if (siblings > g.pieces) throw InconsistentDeclaration(g.label + ": more pieces declared than the split allows");
    }
  }
  std::vector<std::vector<long>> G(n, std::vector<long>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) {
      const auto& a = gens[i];
      const auto& b = gens[j];
      long value;
      const bool siblings = a.kind == GeneratorKind::SplitPiece && b.kind == GeneratorKind::SplitPiece &&
                            a.parent == b.parent;
      if (siblings && i != j) {
        value = 0;
      } else {
        auto [da, na] = detail::cover_fraction(gens, static_cast<int>(i));
        auto [db, nb] = detail::cover_fraction(gens, static_cast<int>(j));
        long num = degree * intersection_number(*da, *db);
        long den = na * nb;
        if (i == j && a.kind == GeneratorKind::SplitPiece) den /= a.pieces;  // disjoint siblings
        if (num % den != 0) {
          throw InconsistentDeclaration("pairing of " + a.label + " and " + b.label + " is " + std::to_string(num) +
                                        "/" + std::to_string(den));
        }
        value = num / den;
      }
      G[i][j] = G[j][i] = value;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (gens[k].declared_square && *gens[k].declared_square != G[k][k]) {
      throw InconsistentDeclaration(gens[k].label + " has square " + std::to_string(G[k][k]) + ", declared " +
                                    std::to_string(*gens[k].declared_square));
    }
  }
  CoverLattice lat(gens, std::move(G), degree);
  auto c = lat.contracted();
  for (int a : c) {
    if (lat.gram()[a][a] != -1) throw InconsistentDeclaration(gens[a].label + " is contracted but is not a (-1)-curve");
    for (int b : c) {
      if (a != b && lat.gram()[a][b] != 0) {
        throw InconsistentDeclaration(gens[a].label + " and " + gens[b].label + " are contracted but meet");
      }
    }
  }
  return lat;
}

/// Multiplicity of the image at each contracted curve: the pairing with it.
using ContractionRecord = std::vector<std::pair<std::string, long>>;

inline ContractionRecord contraction_record(const CoverLattice& lat, const CoverClass& c) {
  ContractionRecord r;
  for (int k : lat.contracted()) {
    long m = lat.pairing(c, lat.unit(lat.generators()[k].label));
    if (m != 0) r.emplace_back(lat.generators()[k].label, m);
  }
  return r;
}

/// Self-intersection after contracting disjoint (-1)-curves: c^2 + sum m^2.
inline long contracted_self_intersection(const CoverLattice& lat, const CoverClass& c, const ContractionRecord& record) {
  long s = lat.pairing(c, c);
  for (const auto& [label, m] : record) s += m * m;
  return s;
}

inline long contracted_pairing(const CoverLattice& lat, const CoverClass& a, const CoverClass& b) {
  long s = lat.pairing(a, b);
  for (int k : lat.contracted()) {
    CoverClass e = lat.unit(lat.generators()[k].label);
    s += lat.pairing(a, e) * lat.pairing(b, e);
  }
  return s;
}

/// Both sides pair equally with every generator.
inline bool verify_class_identity(const CoverLattice& lat, const CoverClass& lhs, const CoverClass& rhs) {
  for (const auto& g : lat.generators()) {
    CoverClass e = lat.unit(g.label);
    if (lat.pairing(lhs, e) != lat.pairing(rhs, e)) return false;
  }
  return true;
}

}  // namespace surfcover

#endif  // SURFCOVER_COVERS_HPP
