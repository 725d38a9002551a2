#include "helpers.hpp"
#include "morsecert/curvature.hpp"
#include "morsecert/examples.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace morsecert;
using testing_support::rose;

namespace {

/// Least total angle over simple cycles of the link multigraph, by
/// depth-first enumeration with pruning.
std::optional<Rational> brute_force_min_cycle(const PolygonalComplex& c, const LinkComplex& l,
                                              const CornerAngleAssignment& a) {
  const auto& edges = l.edges();
  std::optional<Rational> best;
  auto angle_of = [&](std::size_t e) { return a.at(c.faces()[edges[e].corner.face].id, edges[e].corner.corner); };
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].a == edges[e].b && (!best || angle_of(e) < *best)) best = angle_of(e);
  }
  const std::size_t n = l.vertex_count();
  std::vector<bool> on_path(n, false);
  std::vector<bool> used(edges.size(), false);
  std::function<void(std::size_t, std::size_t, Rational)> dfs = [&](std::size_t start, std::size_t at, Rational sum) {
    if (best && sum >= *best) return;
    for (std::size_t e = 0; e < edges.size(); ++e) {
      if (used[e] || edges[e].a == edges[e].b) continue;
      std::size_t next;
      if (edges[e].a == at) next = edges[e].b;
      else if (edges[e].b == at) next = edges[e].a;
      else continue;
      const Rational total = sum + angle_of(e);
      if (next == start) {
        if (!best || total < *best) best = total;
        continue;
      }
      if (next < start || on_path[next]) continue;
      used[e] = true;
      on_path[next] = true;
      dfs(start, next, total);
      on_path[next] = false;
      used[e] = false;
    }
  };
  for (std::size_t s = 0; s < n; ++s) {
    on_path[s] = true;
    dfs(s, s, Rational(0));
    on_path[s] = false;
  }
  return best;
}

PolygonalComplex random_rose(std::mt19937& rng) {
  std::uniform_int_distribution<int> edge(1, 3), sign(0, 1), len(3, 5), faces(1, 3);
  std::vector<std::vector<int>> fs;
  const int m = faces(rng);
  for (int f = 0; f < m; ++f) {
    std::vector<int> w;
    const int n = len(rng);
    for (int k = 0; k < n; ++k) w.push_back(sign(rng) ? edge(rng) : -edge(rng));
    fs.push_back(w);
  }
  return rose(3, fs);
}

CornerAngleAssignment random_angles(std::mt19937& rng, const PolygonalComplex& c) {
  const std::vector<Rational> choices = {Rational(1, 2), Rational(1, 3), Rational(2, 5), Rational(3, 4)};
  std::uniform_int_distribution<std::size_t> pick(0, choices.size() - 1);
  CornerAngleAssignment a;
  for (const auto& f : c.faces()) {
    for (std::size_t k = 0; k < f.boundary.size(); ++k) a.angles[f.id].push_back(choices[pick(rng)]);
  }
  return a;
}

}  // namespace

TEST_SUITE("curvature") {
  TEST_CASE("hexagon link has girth 4 and minimum angle 2 pi") {
    const auto h = hexagon_example().factors.front();
    const auto link = vertex_link(h.complex, "v");
    CHECK(link.vertex_count() == 16);
    CHECK(link.edge_count() == 48);
    const auto cyc = min_link_cycle_angle(h.complex, link, h.angles);
    REQUIRE(cyc.has_value());
    CHECK(cyc->angle == 2);
    CHECK(cyc->vertices.size() == 4);
    CHECK(replay_cycle(h.complex, link, h.angles, *cyc) == Rational(2));
    // Unit angles count cycle length: the girth.
    const auto unit = CornerAngleAssignment::uniform(h.complex, Rational(1));
    CHECK(min_link_cycle_angle(h.complex, link, unit)->angle == 4);
    const auto cert = certify_2complex(h.complex, h.angles, h.geometry);
    CHECK(cert.verdict == CurvatureCertificate::Verdict::cat_minus_one);
    CHECK(cert.min_cycle_angle == Rational(2));
  }

  TEST_CASE("exact minimum agrees with brute-force cycle search") {
    std::mt19937 rng(99);
    for (int i = 0; i < 60; ++i) {
      const auto c = random_rose(rng);
      const auto a = random_angles(rng, c);
      const auto link = vertex_link(c, "v");
      const auto fast = min_link_cycle_angle(c, link, a);
      const auto slow = brute_force_min_cycle(c, link, a);
      REQUIRE(fast.has_value() == slow.has_value());
      if (fast) {
        CHECK(fast->angle == *slow);
        CHECK(replay_cycle(c, link, a, *fast) == *slow);
      }
    }
    const auto h = hexagon_example().factors.front();
    CHECK(brute_force_min_cycle(h.complex, vertex_link(h.complex, "v"), h.angles) == Rational(2));
  }

  TEST_CASE("square complexes") {
    const auto torus = rose(2, {{1, 2, -1, -2}});
    const auto quarter = CornerAngleAssignment::uniform(torus, Rational(1, 2));
    const auto ok = certify_2complex(torus, quarter, FaceGeometry::euclidean_square);
    CHECK(ok.verdict == CurvatureCertificate::Verdict::npc);
    CHECK(ok.min_cycle_angle == Rational(2));

    const auto bad = rose(2, {{1, 2, 1, 2}});
    const auto cert = certify_2complex(bad, CornerAngleAssignment::uniform(bad, Rational(1, 2)),
                                       FaceGeometry::euclidean_square);
    CHECK(cert.verdict == CurvatureCertificate::Verdict::fail);
    REQUIRE(cert.witness.has_value());
    CHECK(cert.witness->cycle.angle == 1);
    CHECK(cert.witness->labels.size() == 2);
  }

  TEST_CASE("graphs without faces have no link cycles") {
    const auto wedge = rose(2, {});
    const auto cert = certify_2complex(wedge, {}, FaceGeometry::euclidean_square);
    CHECK(cert.verdict == CurvatureCertificate::Verdict::npc);
    CHECK_FALSE(cert.min_cycle_angle.has_value());
  }

  TEST_CASE("geometry declarations must match the faces") {
    const auto h = hexagon_example().factors.front();
    CHECK_THROWS_WITH_AS(certify_2complex(h.complex, h.angles, FaceGeometry::euclidean_square),
                         doctest::Contains("unsupported geometry declaration"), InvalidInput);
    const auto torus = rose(2, {{1, 2, -1, -2}});
    CHECK_THROWS_AS(certify_2complex(torus, CornerAngleAssignment::uniform(torus, Rational(1, 2)),
                                     FaceGeometry::hyperbolic_regular_right_angled),
                    InvalidInput);
    CHECK_THROWS_AS(certify_2complex(torus, CornerAngleAssignment::uniform(torus, Rational(1, 3)),
                                     FaceGeometry::euclidean_square),
                    InvalidInput);
    CHECK_THROWS_AS(parse_face_geometry("spherical"), InvalidInput);
    CHECK_FALSE(validate_angles(torus, CornerAngleAssignment::uniform(torus, Rational(1))).empty());
    CHECK_FALSE(validate_angles(torus, CornerAngleAssignment{}).empty());
  }

  TEST_CASE("product rule") {
    const auto h = hexagon_example().factors.front();
    const auto hc = certify_2complex(h.complex, h.angles, h.geometry);
    const ProductComplex single({h.complex});
    CHECK(certify_product(single, {hc}).verdict == CurvatureCertificate::Verdict::cat_minus_one);
    const ProductComplex two({h.complex, h.complex});
    const auto pc = certify_product(two, {hc, hc});
    CHECK(pc.verdict == CurvatureCertificate::Verdict::npc);
    CHECK(pc.rule == CurvatureCertificate::Rule::product_of_npc);
    const auto bad = rose(2, {{1, 2, 1, 2}});
    const auto bc = certify_2complex(bad, CornerAngleAssignment::uniform(bad, Rational(1, 2)),
                                     FaceGeometry::euclidean_square);
    const ProductComplex mixed({h.complex, bad});
    const auto mc = certify_product(mixed, {hc, bc});
    CHECK(mc.verdict == CurvatureCertificate::Verdict::fail);
    REQUIRE(mc.witness.has_value());
    CHECK(mc.witness->factor == 1);
    CHECK_THROWS_AS(certify_product(two, {hc}), InvalidInput);
  }

  TEST_CASE("flag complexes") {
    const SimplicialComplex hollow({"a", "b", "c"}, {{0, 1}, {1, 2}, {0, 2}});
    const auto r = is_flag(hollow);
    CHECK_FALSE(r.flag);
    CHECK(r.witness == std::vector<int>{0, 1, 2});
    CHECK(is_flag(SimplicialComplex({"a", "b", "c"}, {{0, 1, 2}})).flag);
    CHECK(is_flag(SimplicialComplex({"a", "b", "c", "d"}, {{0, 1}, {1, 2}, {2, 3}, {0, 3}})).flag);
  }
}
