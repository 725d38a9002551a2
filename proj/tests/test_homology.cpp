#include "morsecert/simplicial.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

using namespace morsecert;
using Simplex = SimplicialComplex::Simplex;

namespace {

std::vector<std::string> names(std::size_t n, const std::string& prefix = "v") {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

SimplicialComplex cycle(std::size_t n, const std::string& prefix = "v") {
  std::vector<Simplex> edges;
  for (int i = 0; i < static_cast<int>(n); ++i) {
    int j = (i + 1) % static_cast<int>(n);
    edges.push_back({std::min(i, j), std::max(i, j)});
  }
  return SimplicialComplex(names(n, prefix), edges);
}

SimplicialComplex rp2() {
  return SimplicialComplex(names(6), {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                                      {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

SimplicialComplex torus7() {
  std::vector<Simplex> t;
  for (int i = 0; i < 7; ++i) {
    Simplex a{i, (i + 1) % 7, (i + 3) % 7};
    Simplex b{i, (i + 2) % 7, (i + 3) % 7};
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    t.push_back(a);
    t.push_back(b);
  }
  return SimplicialComplex(names(7), t);
}

/// Finitely generated abelian group as rank plus prime-power cyclic orders.
struct Group {
  std::size_t rank = 0;
  std::multiset<long> prime_powers;
  bool operator==(const Group&) const = default;
};

std::multiset<long> split_prime_powers(long n) {
  std::multiset<long> out;
  for (long p = 2; p * p <= n; ++p) {
    long q = 1;
    while (n % p == 0) {
      n /= p;
      q *= p;
    }
    if (q > 1) out.insert(q);
  }
  if (n > 1) out.insert(n);
  return out;
}

Group canonical(const HomologyGroup& h) {
  Group g{h.betti, {}};
  for (const auto& t : h.torsion) {
    for (long q : split_prime_powers(t.convert_to<long>())) g.prime_powers.insert(q);
  }
  return g;
}

Group group_at(const HomologyProfile& h, int d) {
  if (d < 0 || d >= static_cast<int>(h.groups.size())) return {};
  return canonical(h.groups[static_cast<std::size_t>(d)]);
}

Group tensor(const Group& a, const Group& b) {
  Group out{a.rank * b.rank, {}};
  for (long q : a.prime_powers) {
    for (std::size_t i = 0; i < b.rank; ++i) out.prime_powers.insert(q);
  }
  for (long q : b.prime_powers) {
    for (std::size_t i = 0; i < a.rank; ++i) out.prime_powers.insert(q);
  }
  for (long p : a.prime_powers) {
    for (long q : b.prime_powers) {
      for (long x : split_prime_powers(std::gcd(p, q))) out.prime_powers.insert(x);
    }
  }
  return out;
}

Group tor(const Group& a, const Group& b) {
  Group out;
  for (long p : a.prime_powers) {
    for (long q : b.prime_powers) {
      for (long x : split_prime_powers(std::gcd(p, q))) out.prime_powers.insert(x);
    }
  }
  return out;
}

void add_into(Group& acc, const Group& g) {
  acc.rank += g.rank;
  acc.prime_powers.insert(g.prime_powers.begin(), g.prime_powers.end());
}

/// Reduced homology of A * B in dimension r + 1 from that of A and B.
Group join_formula(const HomologyProfile& a, const HomologyProfile& b, int r) {
  Group out;
  for (int i = 0; i <= r; ++i) add_into(out, tensor(group_at(a, i), group_at(b, r - i)));
  for (int i = 0; i <= r - 1; ++i) add_into(out, tor(group_at(a, i), group_at(b, r - 1 - i)));
  return out;
}

SimplicialComplex random_complex(std::mt19937& rng, std::size_t n) {
  std::vector<Simplex> gens;
  for (int i = 0; i < static_cast<int>(n); ++i) gens.push_back({i});
  std::uniform_int_distribution<int> vert(0, static_cast<int>(n) - 1);
  std::uniform_int_distribution<int> count(0, 2 * static_cast<int>(n));
  const int m = count(rng);
  for (int k = 0; k < m; ++k) {
    Simplex s{vert(rng), vert(rng), vert(rng)};
    if (k % 2 == 0) s.pop_back();
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    gens.push_back(s);
  }
  return SimplicialComplex(names(n), gens);
}

}  // namespace

TEST_SUITE("homology") {
  TEST_CASE("smith invariants") {
    CHECK(smith_invariants({{2, 4}, {6, 8}}) == std::vector<BigInt>{2, 4});
    CHECK(smith_invariants({{0, 0}, {0, 0}}).empty());
    CHECK(smith_invariants({{1, 1, 1}, {1, 1, 1}}) == std::vector<BigInt>{1});
    CHECK(smith_invariants({{2, 0}, {0, 3}}) == std::vector<BigInt>{1, 6});
  }

  TEST_CASE("known spaces") {
    const auto s2 = SimplicialComplex(names(4), {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
    CHECK(homology(s2).describe() == "H0=0 | H1=0 | H2=Z");
    CHECK(homology(cycle(5)).at(1).betti == 1);
    const auto p = homology(rp2());
    CHECK(p.at(1).betti == 0);
    CHECK(p.at(1).torsion == std::vector<BigInt>{2});
    CHECK(p.at(2).vanishes());
    const auto t = homology(torus7());
    CHECK(t.at(1).betti == 2);
    CHECK(t.at(2).betti == 1);
    const auto s0 = SimplicialComplex(names(2), {{0}, {1}});
    CHECK(homology(s0).at(0).betti == 1);
    const auto point = SimplicialComplex(names(1), {{0}});
    CHECK(homology(point).at(0).vanishes());
  }

  TEST_CASE("join of two 8-cycles is a 3-sphere") {
    const auto j = join(cycle(8, "a"), cycle(8, "b"));
    CHECK(j.f_vector() == std::vector<std::size_t>{16, 80, 128, 64});
    const auto h = homology(j);
    CHECK(h.at(0).vanishes());
    CHECK(h.at(1).vanishes());
    CHECK(h.at(2).vanishes());
    CHECK(h.at(3).betti == 1);
    CHECK(h.at(3).torsion.empty());
  }

  TEST_CASE("join labels collide only when needed") {
    const auto a = cycle(3, "a");
    CHECK(join(a, cycle(3, "b")).labels().front() == "a0");
    CHECK(join(a, a).labels().front() == "L.a0");
    CHECK(join(a, a).labels().back() == "R.a2");
  }

  TEST_CASE("join homology agrees with the Kunneth formula") {
    std::mt19937 rng(20261016);
    std::vector<std::pair<SimplicialComplex, SimplicialComplex>> pairs = {
        {rp2(), rp2()}, {rp2(), cycle(4)}, {torus7(), SimplicialComplex(names(2), {{0}, {1}})}};
    for (int i = 0; i < 12; ++i) {
      std::uniform_int_distribution<std::size_t> size(1, 8);
      pairs.push_back({random_complex(rng, size(rng)), random_complex(rng, size(rng))});
    }
    for (const auto& [a, b] : pairs) {
      REQUIRE(a.vertex_count() + b.vertex_count() <= 20);
      const auto ha = homology(a);
      const auto hb = homology(b);
      const auto hj = homology(join(a, b));
      // Dimension 0 of a join of nonempty complexes always vanishes.
      CHECK(group_at(hj, 0) == Group{});
      const int top = static_cast<int>(hj.groups.size()) - 1;
      for (int r = 0; r + 1 <= top; ++r) {
        CAPTURE(r);
        CHECK(group_at(hj, r + 1) == join_formula(ha, hb, r));
      }
    }
  }

  TEST_CASE("rp2 join rp2 has torsion in dimensions 3 and 4") {
    const auto h = homology(join(rp2(), rp2()));
    CHECK(h.at(3).torsion == std::vector<BigInt>{2});
    CHECK(h.at(4).torsion == std::vector<BigInt>{2});
    CHECK(h.at(5).vanishes());
  }

  TEST_CASE("homology is invariant under relabelling") {
    std::mt19937 rng(7);
    for (int i = 0; i < 20; ++i) {
      const auto s = random_complex(rng, 7);
      std::vector<int> perm(7);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      const auto r = relabel(s, perm, names(7, "w"));
      CHECK(homology(r) == homology(s));
      CHECK(r.f_vector() == s.f_vector());
    }
  }

  TEST_CASE("constructor normalizes generators") {
    const SimplicialComplex s(names(3), {{0, 1}, {0, 1, 2}, {1}, {0, 1}});
    CHECK(s.maximal() == std::vector<Simplex>{{0, 1, 2}});
    CHECK(s.contains({0, 2}));
    CHECK_FALSE(s.contains({0, 3}));
    CHECK_THROWS(SimplicialComplex(names(2), {{0, 5}}));
  }
}
