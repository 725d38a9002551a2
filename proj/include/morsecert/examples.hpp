#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/morse.hpp"
#include "morsecert/symmetry.hpp"

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace morsecert {

/// Boundary word of face i as offsets into Z/8: letter (d, s) is edge
/// i + d with sign s. Shifting i by one shifts every letter.
struct HexagonFaceFamily {
  std::vector<std::pair<int, Sign>> letters;
};

/// x_i x_{i+3} x_i x_{i+1}^-1 x_i^-1 x_{i+1}^-1.
HexagonFaceFamily default_hexagon_family();

/// Empty iff the link at the vertex (weights all +1) has 16 vertices and
/// exactly the 48 corners: i- to (i+1)-, i+ to (i+1)+, and i+ to (i+-1)-,
/// (i+-3)-, each once. Here i- is the tail end and i+ the head end of
/// edge i.
std::vector<std::string> check_hexagon_link(const PolygonalComplex& c);

/// n-fold product of wedges of two circles a, b, weights +1, sigma
/// swapping a and b.
Situation raag_example(std::size_t n);

/// One vertex, edges 1..8, eight hexagons, weights +1, sigma the shift
/// i -> i+1, right-angled hyperbolic faces.
Situation hexagon_example(const HexagonFaceFamily& family = default_hexagon_family());

/// Product of two hexagon complexes with the diagonal shift.
Situation hexagon_product_example();

struct ExampleSpec {
  enum class Kind { raag, hexagon, hexagon_product, custom };
  Kind kind = Kind::hexagon;
  std::size_t n = 1;
  std::string path;
};

/// Accepts "raag-N", "hexagon", "hexagon-product". Throws InvalidInput.
ExampleSpec parse_example_spec(const std::string& name);

/// Builds the situation; custom specs are read from a JSON bundle.
Situation build_example(const ExampleSpec& spec);

}  // namespace morsecert
