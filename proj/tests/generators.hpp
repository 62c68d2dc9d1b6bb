#ifndef SURFCOVER_TESTS_GENERATORS_HPP
#define SURFCOVER_TESTS_GENERATORS_HPP

// Seeded random inputs shared by the property tests and the acceptance run.

#include <cctype>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "surfcover/exactfield.hpp"
#include "surfcover/parse.hpp"

namespace testdata {

/// The polynomial text of a data file with whitespace, "NAME:=" and ';' removed.
inline std::string listing_text(const char* file) {
  std::ifstream in(std::string(SURFCOVER_DATA_DIR) + "/" + file);
  std::stringstream buf;
  buf << in.rdbuf();
  std::string s;
  for (char c : buf.str()) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  s = s.substr(s.find(":=") + 2);
  s.pop_back();
  return s;
}

inline surfcover::GR random_gr(std::mt19937_64& rng) {
  using surfcover::make_rational;
  long a = static_cast<long>(rng() % 41) - 20, b = static_cast<long>(rng() % 41) - 20;
  long d = static_cast<long>(rng() % 5) + 1;
  return rng() % 3 == 0 ? surfcover::GR(make_rational(a, d), make_rational(b, 1)) : surfcover::GR(make_rational(a, d));
}

inline surfcover::MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
  surfcover::MultiPoly p(vars);
  for (int t = 0; t < terms; ++t) {
    surfcover::Exponents e(vars.size(), 0);
    for (auto& x : e) x = static_cast<int>(rng() % static_cast<unsigned>(max_deg + 1));
    p.add_term(e, random_gr(rng));
  }
  return p;
}

/// A curve through the origin of the local chart made of branches
/// y = s x + c x^k with rational tangents, so that every infinitely near point
/// two such curves share is defined over Q(i). Sometimes a higher order term
/// glues the branches into one curve.
inline surfcover::MultiPoly random_branch_curve(std::mt19937_64& rng) {
  using surfcover::GR;
  using surfcover::MultiPoly;
  const auto& v = surfcover::local_vars();
  const MultiPoly x = MultiPoly::variable(v, 0), y = MultiPoly::variable(v, 1);
  MultiPoly f = MultiPoly::constant(v, GR(1));
  const int parts = 1 + static_cast<int>(rng() % 3);
  for (int k = 0; k < parts; ++k) {
    const int slope = static_cast<int>(rng() % 3) - 1;
    const unsigned order = 2 + static_cast<unsigned>(rng() % 3);
    const int c = 1 + static_cast<int>(rng() % 5);
    f = f * (y - x * GR(slope) - x.pow(order) * GR(c));
  }
  if (rng() % 4 == 0) f = f + x.pow(7) * GR(3) + y.pow(6);
  return f;
}

}  // namespace testdata

#endif  // SURFCOVER_TESTS_GENERATORS_HPP
