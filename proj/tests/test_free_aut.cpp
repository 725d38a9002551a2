#include "morsecert/complex.hpp"
#include "morsecert/free_aut.hpp"
#include "morsecert/pingpong.hpp"

#include <doctest.h>

#include <random>

using namespace morsecert;

namespace {

const Alphabet xs = Alphabet::indexed("x");

FreeWord w(const std::string& s) { return FreeWord::parse(s, xs); }

FreeWord random_word(std::mt19937& rng, std::size_t k, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> gen(1, static_cast<int>(k)), sign(0, 1);
  std::vector<int> letters;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) letters.push_back(sign(rng) ? gen(rng) : -gen(rng));
  return FreeWord(letters);
}

FreeGroupEndo random_endo(std::mt19937& rng, std::size_t k) {
  FreeGroupEndo e;
  e.rank = k;
  for (std::size_t i = 0; i < k; ++i) e.images.push_back(random_word(rng, k, 4));
  return e;
}

IntMatrix m2(long a, long b, long c, long d) { return {{a, b}, {c, d}}; }

}  // namespace

TEST_SUITE("free_aut") {
  TEST_CASE("generator images") {
    CHECK(apply(phi(1, 2), w("x1")) == w("x1 x1 x2"));
    CHECK(apply(phi(1, 2), w("x2")) == w("x1 x2"));
    CHECK(apply(psi(1, 2), w("x1")) == w("x2 x1"));
    CHECK(apply(psi(1, 2), w("x2")) == w("x2 x2 x1"));
    CHECK(apply(sigma(2), w("x1")) == w("x2"));
    CHECK(apply(sigma(3), w("x3")) == w("x3"));
    CHECK(phi(2, 4).images[0] == w("x1"));
    CHECK(phi(2, 4).images[1] == w("x2"));
    CHECK(phi(2, 4).images[2] == w("x3^2 x4"));
    CHECK(apply(FreeGroupEndo::identity(3), w("x1 x3^-2 x2")) == w("x1 x3^-2 x2"));
    CHECK_THROWS_AS(phi(0, 4), InvalidInput);
    CHECK_THROWS_AS(psi(3, 5), InvalidInput);
    CHECK_THROWS_AS(apply(phi(1, 2), w("x3")), InvalidInput);
  }

  TEST_CASE("inverses of the generators") {
    for (std::size_t k : {2u, 5u}) {
      for (std::size_t i = 1; i <= k / 2; ++i) {
        CHECK(compose(phi(i, k), phi_inverse(i, k)).is_identity());
        CHECK(compose(phi_inverse(i, k), phi(i, k)).is_identity());
        CHECK(compose(psi(i, k), psi_inverse(i, k)).is_identity());
        CHECK(compose(psi_inverse(i, k), psi(i, k)).is_identity());
      }
      CHECK(compose(sigma(k), sigma(k)).is_identity());
    }
  }

  TEST_CASE("composition is functorial") {
    std::mt19937 rng(5);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t k = 2 + static_cast<std::size_t>(i % 3);
      const auto e1 = random_endo(rng, k);
      const auto e2 = random_endo(rng, k);
      const auto x = random_word(rng, k, 6);
      REQUIRE(apply(compose(e1, e2), x) == apply(e1, apply(e2, x)));
    }
    CHECK_THROWS_AS(compose(phi(1, 2), phi(1, 4)), InvalidInput);
  }

  TEST_CASE("abelianization") {
    CHECK(abelianization(phi(1, 2)) == m2(2, 1, 1, 1));
    CHECK(abelianization(psi(1, 2)) == m2(1, 1, 1, 2));
    CHECK(abelianization(FreeGroupEndo::identity(3)) == identity_matrix(3));
    CHECK(abelianization(sigma(2)) == m2(0, 1, 1, 0));
    std::mt19937 rng(6);
    for (int i = 0; i < 300; ++i) {
      const std::size_t k = 2 + static_cast<std::size_t>(i % 3);
      const auto e1 = random_endo(rng, k);
      const auto e2 = random_endo(rng, k);
      REQUIRE(abelianization(compose(e1, e2)) == matrix_product(abelianization(e1), abelianization(e2)));
    }
  }

  TEST_CASE("relations") {
    for (std::size_t k : {2u, 3u, 4u, 6u}) {
      const auto r = verify_relations(k);
      CHECK(r.all_hold());
      const std::size_t pairs = k / 2;
      CHECK(r.checks.size() == 1 + pairs + 2 * pairs * (pairs - 1));
    }
    CHECK_THROWS_AS(verify_relations(1), InvalidInput);
    auto perturbed = psi(1, 2);
    perturbed.images[1] = w("x2 x1");
    const auto bad = check_relation("sigma phi_1 sigma = psi_1", compose(sigma(2), compose(phi(1, 2), sigma(2))), perturbed);
    CHECK_FALSE(bad.holds);
    CHECK(bad.detail == "x2: x2 x2 x1 vs x2 x1");
  }

  TEST_CASE("nielsen inverses") {
    const auto f = compose(phi(1, 4), compose(psi(2, 4), sigma(4)));
    const auto inv = nielsen_inverse(f);
    REQUIRE(inv.has_value());
    CHECK(compose(f, *inv).is_identity());
    const auto c = FreeGroupEndo::conjugation(3, w("x2 x1^-1 x3"));
    const auto ci = nielsen_inverse(c);
    REQUIRE(ci.has_value());
    CHECK(*ci == FreeGroupEndo::conjugation(3, w("x2 x1^-1 x3").inverse()));
    FreeGroupEndo square = FreeGroupEndo::identity(2);
    square.images[0] = w("x1 x1");
    CHECK_FALSE(nielsen_inverse(square).has_value());
  }

  TEST_CASE("inner automorphisms") {
    const auto c = FreeGroupEndo::conjugation(2, w("x1 x2"));
    const auto r = is_inner(c);
    CHECK(r.inner);
    CHECK(r.conjugator == w("x1 x2"));
    CHECK(abelianization(c) == identity_matrix(2));
    const auto id = is_inner(FreeGroupEndo::identity(4));
    CHECK(id.inner);
    CHECK(id.conjugator.empty());
    CHECK_FALSE(is_inner(phi(1, 2)).inner);
    CHECK_FALSE(is_inner(psi(1, 2)).inner);
    CHECK_FALSE(is_inner(sigma(4)).inner);
    // Conjugation by a power of x1 composed with something that fixes x1.
    const auto pw = FreeGroupEndo::conjugation(3, w("x1^-3"));
    CHECK(is_inner(pw).conjugator == w("x1^-3"));
    FreeGroupEndo square = FreeGroupEndo::identity(2);
    square.images[0] = w("x1 x1");
    CHECK_THROWS_AS(is_inner(square), InvalidInput);
    CHECK_THROWS_AS(is_inner(phi(1, 2), psi_inverse(1, 2)), InvalidInput);
    CHECK_FALSE(is_inner(phi(1, 2), phi_inverse(1, 2)).inner);
  }

  TEST_CASE("projective arcs") {
    const Arc unit{Rational(0), Rational(1)};
    CHECK(arc_contains(unit, Rational(1, 2)));
    CHECK_FALSE(arc_contains(unit, Rational(2)));
    CHECK_FALSE(arc_contains(unit, std::nullopt));
    const Arc wrap = arc_complement(unit);
    CHECK(arc_contains(wrap, std::nullopt));
    CHECK(arc_contains(wrap, Rational(-5)));
    CHECK(arc_contains(wrap, Rational(7)));
    CHECK_FALSE(arc_contains(wrap, Rational(1, 2)));
    CHECK(arc_subset(Arc{Rational(1, 4), Rational(1, 2)}, unit));
    CHECK_FALSE(arc_subset(Arc{Rational(1, 2), Rational(1, 4)}, unit));
    CHECK(arc_subset(Arc{Rational(3), Rational(-3)}, wrap));
    CHECK(arcs_disjoint(unit, Arc{Rational(2), Rational(3)}));
    CHECK_FALSE(arcs_disjoint(unit, Arc{Rational(1, 2), Rational(3)}));
    CHECK_FALSE(arcs_disjoint(unit, wrap));
    CHECK(mobius(m2(2, 1, 1, 1), std::nullopt) == ProjectivePoint(Rational(2)));
    CHECK(mobius(m2(2, 1, 1, 1), Rational(-1)) == ProjectivePoint{});
    CHECK(mobius(m2(1, 1, 1, 2), Rational(1)) == ProjectivePoint(Rational(2, 3)));
  }

  TEST_CASE("ping-pong search") {
    const auto a = m2(2, 1, 1, 1);
    const auto b = m2(1, 1, 1, 2);
    const auto cert = pingpong_search(a, b, 16);
    REQUIRE(cert.has_value());
    CHECK(cert->n == 2);
    CHECK(pingpong_verify(*cert));
    CHECK(pingpong_verify(a, b, cert->n, cert->x_a, cert->x_b));
    CHECK_FALSE(pingpong_verify(a, b, 1, cert->x_a, cert->x_b));
    CHECK_FALSE(pingpong_verify(a, b, cert->n, cert->x_b, cert->x_a));
    CHECK_FALSE(pingpong_search(a, a, 16).has_value());
    CHECK_THROWS_AS(pingpong_search(m2(2, 0, 0, 2), b, 4), InvalidInput);
    const auto centres = fixed_point_centres(a);
    REQUIRE(centres.has_value());
    // Attracting fixed point of A is the golden ratio.
    CHECK(centres->first > Rational(1618, 1000));
    CHECK(centres->first < Rational(1619, 1000));
    CHECK_FALSE(fixed_point_centres(m2(1, 1, 0, 1)).has_value());
  }

  TEST_CASE("freeness chain") {
    const auto cert = pingpong_search(abelianization(phi(1, 2)), abelianization(psi(1, 2)), 16);
    const auto chain = freeness_chain(cert);
    REQUIRE(chain.size() == cert->inclusions.size() + 5);
    CHECK(chain.front().rfind("verified: ", 0) == 0);
    CHECK(chain[chain.size() - 2] == "free groups are Hopfian, so the composite is injective, hence so is the first map");
    CHECK(chain.back() == "conclusion: <phi_1^2, psi_1^2> < Aut(F_2) is free of rank 2");
    CHECK_THROWS_AS(freeness_chain(std::nullopt), InvalidInput);
    auto broken = *cert;
    broken.n = 1;
    CHECK_THROWS_AS(freeness_chain(broken), InvalidInput);
  }
}
