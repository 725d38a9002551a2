#pragma once

#include "morsecert/complex.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing_support {

using namespace morsecert;

/// One-vertex complex with loop edges named e1..eN and the given faces,
/// each a list of (edge number, sign) with edge numbers 1-based.
inline PolygonalComplex rose(std::size_t edges, const std::vector<std::vector<int>>& faces) {
  std::vector<Edge> es;
  for (std::size_t i = 1; i <= edges; ++i) es.push_back({"e" + std::to_string(i), "v", "v"});
  std::vector<Face> fs;
  for (std::size_t f = 0; f < faces.size(); ++f) {
    Face face{"f" + std::to_string(f + 1), {}};
    for (int x : faces[f]) face.boundary.push_back({"e" + std::to_string(x > 0 ? x : -x), x > 0 ? Sign::plus : Sign::minus});
    fs.push_back(std::move(face));
  }
  return PolygonalComplex({"v"}, std::move(es), std::move(fs));
}

}  // namespace testing_support
