#include "morsecert/simplicial.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace morsecert {

namespace {

using Matrix = std::vector<std::vector<BigInt>>;

BigInt abs_value(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Finds the nonzero entry of least absolute value in the trailing block.
bool find_pivot(const Matrix& m, std::size_t t, std::size_t& pr, std::size_t& pc) {
  bool found = false;
  BigInt best;
  for (std::size_t i = t; i < m.size(); ++i) {
    for (std::size_t j = t; j < m[i].size(); ++j) {
      if (m[i][j] == 0) continue;
      const BigInt a = abs_value(m[i][j]);
      if (!found || a < best) {
        found = true;
        best = a;
        pr = i;
        pc = j;
        if (best == 1) return true;
      }
    }
  }
  return found;
}

}  // namespace

std::vector<BigInt> smith_invariants(Matrix m) {
  std::vector<BigInt> diag;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  const std::size_t limit = std::min(rows, cols);
  for (std::size_t t = 0; t < limit; ++t) {
    std::size_t pr = 0, pc = 0;
    if (!find_pivot(m, t, pr, pc)) break;
    std::swap(m[t], m[pr]);
    for (auto& row : m) std::swap(row[t], row[pc]);

    for (;;) {
      bool dirty = false;
      // Clear column t below the pivot.
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (m[i][t] == 0) continue;
        const BigInt q = m[i][t] / m[t][t];
        for (std::size_t j = t; j < cols; ++j) {
          if (m[t][j] != 0) m[i][j] -= q * m[t][j];
        }
        if (m[i][t] != 0) {
          std::swap(m[t], m[i]);
          dirty = true;
        }
      }
      // Clear row t right of the pivot.
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (m[t][j] == 0) continue;
        const BigInt q = m[t][j] / m[t][t];
        for (std::size_t i = t; i < rows; ++i) {
          if (m[i][t] != 0) m[i][j] -= q * m[i][t];
        }
        if (m[t][j] != 0) {
          for (auto& row : m) std::swap(row[t], row[j]);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility: the pivot must divide the whole trailing block.
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i) {
        for (std::size_t j = t + 1; j < cols; ++j) {
          if (m[i][j] % m[t][t] != 0) {
            for (std::size_t k = t; k < cols; ++k) m[t][k] += m[i][k];
            fixed = true;
            break;
          }
        }
      }
      if (!fixed) break;
    }
    diag.push_back(abs_value(m[t][t]));
  }
  return diag;
}

const HomologyGroup& HomologyProfile::at(int dim) const {
  static const HomologyGroup zero{};
  if (dim < 0 || static_cast<std::size_t>(dim) >= groups.size()) return zero;
  return groups[static_cast<std::size_t>(dim)];
}

std::string describe(const HomologyGroup& g) {
  if (g.vanishes()) return "0";
  std::ostringstream out;
  bool first = true;
  if (g.betti > 0) {
    out << "Z";
    if (g.betti > 1) out << "^" << g.betti;
    first = false;
  }
  for (const auto& t : g.torsion) {
    if (!first) out << " + ";
    out << "Z/" << t;
    first = false;
  }
  return out.str();
}

std::string HomologyProfile::describe() const {
  std::ostringstream out;
  for (std::size_t d = 0; d < groups.size(); ++d) {
    if (d > 0) out << " | ";
    out << "H" << d << "=" << morsecert::describe(groups[d]);
  }
  return out.str();
}

HomologyProfile homology(const SimplicialComplex& s) {
  const int dim = s.dimension();
  HomologyProfile profile;
  if (dim < 0) return profile;

  std::vector<std::vector<SimplicialComplex::Simplex>> cells(static_cast<std::size_t>(dim) + 1);
  for (int d = 0; d <= dim; ++d) cells[static_cast<std::size_t>(d)] = s.simplices(d);

  // invariants[k] holds the invariant factors of the boundary C_k -> C_{k-1},
  // with the augmentation C_0 -> Z at k = 0.
  std::vector<std::vector<BigInt>> invariants(static_cast<std::size_t>(dim) + 2);
  invariants[0] = cells[0].empty() ? std::vector<BigInt>{} : std::vector<BigInt>{BigInt(1)};
  for (int k = 1; k <= dim; ++k) {
    const auto& lower = cells[static_cast<std::size_t>(k - 1)];
    const auto& upper = cells[static_cast<std::size_t>(k)];
    std::map<SimplicialComplex::Simplex, std::size_t> index;
    for (std::size_t i = 0; i < lower.size(); ++i) index.emplace(lower[i], i);
    Matrix m(lower.size(), std::vector<BigInt>(upper.size()));
    for (std::size_t j = 0; j < upper.size(); ++j) {
      for (std::size_t drop = 0; drop < upper[j].size(); ++drop) {
        SimplicialComplex::Simplex face = upper[j];
        face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
        m[index.at(face)][j] = (drop % 2 == 0) ? 1 : -1;
      }
    }
    invariants[static_cast<std::size_t>(k)] = smith_invariants(std::move(m));
  }

  for (int k = 0; k <= dim; ++k) {
    const auto n = cells[static_cast<std::size_t>(k)].size();
    const auto& out_boundary = invariants[static_cast<std::size_t>(k)];
    const auto& in_boundary = invariants[static_cast<std::size_t>(k) + 1];
    HomologyGroup g;
    g.betti = n - out_boundary.size() - in_boundary.size();
    for (const auto& d : in_boundary) {
      if (d > 1) g.torsion.push_back(d);
    }
    profile.groups.push_back(std::move(g));
  }
  return profile;
}

}  // namespace morsecert
