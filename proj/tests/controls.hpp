#pragma once

#include "morsecert/examples.hpp"

namespace testing_support {

using namespace morsecert;

/// Each control breaks exactly one model-situation hypothesis.

/// Face i becomes x_i x_{i+3} x_i x_{i+1} x_i^-1 x_{i+1}^-1: same link,
/// boundary weights sum to 2.
inline Situation control_zero_sum() {
  HexagonFaceFamily f{{{0, Sign::plus}, {3, Sign::plus}, {0, Sign::plus}, {1, Sign::plus}, {0, Sign::minus},
                       {1, Sign::minus}}};
  auto s = hexagon_example(f);
  s.name = "control-zero-sum";
  return s;
}

inline Situation control_not_equivariant() {
  auto s = raag_example(1);
  s.factors[0].weights.weights["b"] = 2;
  s.name = "control-not-equivariant";
  return s;
}

inline Situation control_invariant_simplex() {
  auto s = hexagon_example();
  s.factors[0].sigma = CellularAutomorphism::identity(s.factors[0].complex);
  s.name = "control-invariant-simplex";
  return s;
}

inline Situation control_not_epi() {
  auto s = hexagon_example();
  s.factors[0].weights = MorseWeighting::constant(s.factors[0].complex, 2);
  s.name = "control-not-epi";
  return s;
}

}  // namespace testing_support
