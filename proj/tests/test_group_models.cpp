#include "morsecert/group_models.hpp"

#include <stdexcept>
#include <doctest.h>

#include <random>

using namespace morsecert;

namespace {

FreeWord random_word(std::mt19937& rng, std::size_t max_len) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> letter(0, 3);
  static const int letters[] = {1, -1, 2, -2};
  std::vector<int> w;
  const std::size_t n = len(rng);
  for (std::size_t i = 0; i < n; ++i) w.push_back(letters[letter(rng)]);
  return FreeWord(w);
}

DoubledFreeElement random_element(std::mt19937& rng, std::size_t rank, std::size_t max_len) {
  DoubledFreeElement g;
  for (std::size_t i = 0; i < rank; ++i) g.coords.push_back(random_word(rng, max_len));
  g.flip = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
  return g;
}

/// Random g = (u sigma(u)^-1, flip) with known iota.
DoubledFreeElement random_flip_element(std::mt19937& rng, std::size_t rank) {
  DoubledFreeElement g;
  for (std::size_t i = 0; i < rank; ++i) {
    const auto u = random_word(rng, 6);
    g.coords.push_back(u * swap_ab(u).inverse());
  }
  g.flip = true;
  return g;
}

const Alphabet ab = Alphabet::letters_ab();

DoubledFreeElement t_element(std::size_t rank) {
  auto t = DoubledFreeElement::identity(rank);
  t.coords[0] = FreeWord::generator(1);
  return t;
}

}  // namespace

TEST_SUITE("group_models") {
  TEST_CASE("multiplication is associative with identity and inverses") {
    std::mt19937 rng(1);
    for (int i = 0; i < 10000; ++i) {
      const std::size_t rank = 1 + static_cast<std::size_t>(i % 3);
      const auto g = random_element(rng, rank, 6);
      const auto h = random_element(rng, rank, 6);
      const auto k = random_element(rng, rank, 6);
      REQUIRE(multiply(multiply(g, h), k) == multiply(g, multiply(h, k)));
      REQUIRE(multiply(g, invert(g)).is_identity());
      REQUIRE(multiply(DoubledFreeElement::identity(rank), g) == g);
    }
    CHECK_THROWS_AS(multiply(DoubledFreeElement::identity(1), DoubledFreeElement::identity(2)), std::runtime_error);
  }

  TEST_CASE("sigma is an involution acting by the swap") {
    const auto s = DoubledFreeElement::sigma(2);
    CHECK(multiply(s, s).is_identity());
    CHECK(element_order(s, 10) == std::optional<std::size_t>(2));
    DoubledFreeElement g{{FreeWord::parse("a^2 b", ab), FreeWord::parse("b^-1", ab)}, false};
    const auto c = conjugate(s, g);
    CHECK(c.coords[0] == FreeWord::parse("b^2 a", ab));
    CHECK(c.coords[1] == FreeWord::parse("a^-1", ab));
    CHECK_FALSE(element_order(t_element(1), 50).has_value());
  }

  TEST_CASE("witnesses have the closed form (a^n b^-n, sigma)") {
    for (long n = 0; n <= 6; ++n) {
      const auto w = witness(n, t_element(2));
      CHECK(w.flip);
      CHECK(w.coords[0] == FreeWord::generator(1).pow(n) * FreeWord::generator(2).pow(-n));
      CHECK(w.coords[1].empty());
      CHECK(element_order(w, 4) == std::optional<std::size_t>(2));
      CHECK(iota(w) == n);
    }
    CHECK(to_string(witness(3, t_element(1))) == "(a^3 b^-3; σ)");
    CHECK_THROWS_AS(witness(1, DoubledFreeElement::sigma(1)), std::runtime_error);
    auto t2 = t_element(1);
    t2.coords[0] = FreeWord::parse("a^2", ab);
    CHECK_THROWS_AS(witness(1, t2), std::runtime_error);
  }

  TEST_CASE("twisted square roots") {
    std::mt19937 rng(2);
    for (int i = 0; i < 2000; ++i) {
      const auto u = random_word(rng, 8);
      const auto w = u * swap_ab(u).inverse();
      CHECK(w.length() == 2 * u.length());
      const auto r = twisted_sqrt(w);
      REQUIRE(r.has_value());
      CHECK(*r == u);
    }
    CHECK_FALSE(twisted_sqrt(FreeWord::parse("a", ab)).has_value());
    CHECK_FALSE(twisted_sqrt(FreeWord::parse("a b", ab)).has_value());
    CHECK(iota(DoubledFreeElement::sigma(2)) == 0);
    CHECK_THROWS_AS(iota(DoubledFreeElement::identity(1)), std::runtime_error);
  }

  TEST_CASE("the sigma-fixed subgroup of F_2 is trivial up to length 10") {
    std::size_t fixed = 0;
    for (std::size_t len = 1; len <= 10; ++len) {
      for (const auto& w : reduced_words_ab(len)) {
        if (swap_ab(w) == w) ++fixed;
      }
    }
    CHECK(fixed == 0);
    CHECK(reduced_words_ab(3).size() == 36);
    CHECK(reduced_words_ab(0).size() == 1);
  }

  TEST_CASE("iota shifts by the degree of the conjugator") {
    std::mt19937 rng(3);
    for (int i = 0; i < 1000; ++i) {
      const std::size_t rank = 1 + static_cast<std::size_t>(i % 3);
      const auto g = random_flip_element(rng, rank);
      const auto c = random_element(rng, rank, 7);
      CHECK(iota(conjugate(c, g)) == iota(g) + morse_degree(c));
    }
  }

  TEST_CASE("conjugacy oracle") {
    const auto t = t_element(1);
    const auto w1 = witness(1, t);
    const auto w2 = witness(2, t);
    const auto none = conjugacy_oracle(w1, w2, 4, true);
    CHECK_FALSE(none.conjugate);
    CHECK(none.candidates_examined > 0);
    // Planted: c of degree 0.
    const DoubledFreeElement c{{FreeWord::parse("a b^-1", ab)}, false};
    REQUIRE(morse_degree(c) == 0);
    const auto found = conjugacy_oracle(w1, conjugate(c, w1), 4, true);
    REQUIRE(found.conjugate);
    CHECK(conjugate(*found.conjugator, w1) == conjugate(c, w1));
    // Without the kernel restriction t itself conjugates w1 to w2.
    const auto free = conjugacy_oracle(w1, w2, 2, false);
    REQUIRE(free.conjugate);
    CHECK(conjugate(*free.conjugator, w1) == w2);
    CHECK_THROWS_AS(conjugacy_oracle(w1, w2, 9, true), std::runtime_error);
    CHECK_THROWS_AS(conjugacy_oracle(witness(0, t_element(3)), witness(1, t_element(3)), 2, true), std::runtime_error);
  }
}
