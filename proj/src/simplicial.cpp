#include "morsecert/simplicial.hpp"

#include "morsecert/complex.hpp"

#include <algorithm>
#include <set>
#include <unordered_set>

namespace morsecert {

namespace {

bool is_subset(const SimplicialComplex::Simplex& small, const SimplicialComplex::Simplex& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

void subsets_of_size(const SimplicialComplex::Simplex& s, std::size_t k,
                     std::set<SimplicialComplex::Simplex>& out) {
  if (k > s.size()) return;
  std::vector<bool> pick(s.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(k), true);
  do {
    SimplicialComplex::Simplex sub;
    sub.reserve(k);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (pick[i]) sub.push_back(s[i]);
    }
    out.insert(std::move(sub));
  } while (std::prev_permutation(pick.begin(), pick.end()));
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> labels, std::vector<Simplex> generators)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  for (auto& s : generators) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    for (int v : s) {
      if (v < 0 || v >= n) throw InvalidInput("simplex vertex index out of range");
    }
  }
  for (int v = 0; v < n; ++v) generators.push_back({v});
  // Larger simplices first so that a single pass removes dominated ones.
  std::sort(generators.begin(), generators.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  for (auto& s : generators) {
    if (s.empty()) continue;
    const bool dominated = std::any_of(maximal_.begin(), maximal_.end(),
                                       [&](const Simplex& m) { return is_subset(s, m); });
    if (!dominated) maximal_.push_back(std::move(s));
  }
  if (maximal_.empty()) maximal_.push_back({});
  std::sort(maximal_.begin(), maximal_.end());
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (const auto& m : maximal_) d = std::max(d, static_cast<int>(m.size()) - 1);
  return d;
}

std::vector<SimplicialComplex::Simplex> SimplicialComplex::simplices(int dim) const {
  std::set<Simplex> out;
  if (dim < -1) return {};
  for (const auto& m : maximal_) subsets_of_size(m, static_cast<std::size_t>(dim + 1), out);
  return {out.begin(), out.end()};
}

std::vector<std::size_t> SimplicialComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (int d = 0; d <= dimension(); ++d) f.push_back(simplices(d).size());
  return f;
}

bool SimplicialComplex::contains(const Simplex& s) const {
  Simplex sorted = s;
  std::sort(sorted.begin(), sorted.end());
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](const Simplex& m) { return is_subset(sorted, m); });
}

std::vector<std::vector<int>> SimplicialComplex::adjacency() const {
  std::vector<std::set<int>> sets(labels_.size());
  for (const auto& m : maximal_) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        sets[m[i]].insert(m[j]);
        sets[m[j]].insert(m[i]);
      }
    }
  }
  std::vector<std::vector<int>> adj;
  adj.reserve(sets.size());
  for (const auto& s : sets) adj.emplace_back(s.begin(), s.end());
  return adj;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::unordered_set<std::string> left(a.labels().begin(), a.labels().end());
  const bool collide = std::any_of(b.labels().begin(), b.labels().end(),
                                   [&](const std::string& l) { return left.count(l) > 0; });
  std::vector<std::string> labels;
  labels.reserve(a.vertex_count() + b.vertex_count());
  for (const auto& l : a.labels()) labels.push_back(collide ? "L." + l : l);
  for (const auto& l : b.labels()) labels.push_back(collide ? "R." + l : l);

  const int shift = static_cast<int>(a.vertex_count());
  std::vector<SimplicialComplex::Simplex> maximal;
  maximal.reserve(a.maximal().size() * b.maximal().size());
  for (const auto& s : a.maximal()) {
    for (const auto& t : b.maximal()) {
      SimplicialComplex::Simplex u = s;
      for (int v : t) u.push_back(v + shift);
      maximal.push_back(std::move(u));
    }
  }
  return SimplicialComplex(std::move(labels), std::move(maximal));
}

SimplicialComplex relabel(const SimplicialComplex& s, const std::vector<int>& perm,
                          std::vector<std::string> new_labels) {
  if (perm.size() != s.vertex_count() || new_labels.size() != s.vertex_count()) {
    throw InvalidInput("relabel: size mismatch");
  }
  std::vector<SimplicialComplex::Simplex> maximal;
  for (const auto& m : s.maximal()) {
    SimplicialComplex::Simplex t;
    for (int v : m) t.push_back(perm.at(static_cast<std::size_t>(v)));
    maximal.push_back(std::move(t));
  }
  return SimplicialComplex(std::move(new_labels), std::move(maximal));
}

}  // namespace morsecert
