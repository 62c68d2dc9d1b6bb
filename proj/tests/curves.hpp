#ifndef SURFCOVER_TESTS_CURVES_HPP
#define SURFCOVER_TESTS_CURVES_HPP

#include <vector>

#include "surfcover/parse.hpp"

namespace testdata {

inline const surfcover::MultiPoly& sextic() {
  static const surfcover::MultiPoly f = surfcover::read_poly_file(SURFCOVER_DATA_DIR "/f6.txt");
  return f;
}

inline const surfcover::MultiPoly& septic() {
  static const surfcover::MultiPoly f = surfcover::read_poly_file(SURFCOVER_DATA_DIR "/f7.txt");
  return f;
}

/// (0:0:1), (-2:1:1), (2:1:1), (-1:2:1), (1:2:1), (3:2i:1).
inline const std::vector<surfcover::PlanePoint>& base_points() {
  using surfcover::GR;
  static const std::vector<surfcover::PlanePoint> p{
      {GR(0), GR(0), GR(1)},  {GR(-2), GR(1), GR(1)}, {GR(2), GR(1), GR(1)},
      {GR(-1), GR(2), GR(1)}, {GR(1), GR(2), GR(1)},  {GR(3), GR(0, 2), GR(1)}};
  return p;
}

}  // namespace testdata

#endif  // SURFCOVER_TESTS_CURVES_HPP
