#include "helpers.hpp"
#include "morsecert/link.hpp"

#include <doctest.h>

#include <algorithm>
#include <map>

using namespace morsecert;
using testing_support::rose;

namespace {

/// Independent corner enumeration: walk each face as a polygon whose
/// vertices p_0..p_{n-1} carry the two edge-ends meeting there.
std::multiset<std::pair<std::string, std::string>> corner_pairs_by_walk(const PolygonalComplex& c,
                                                                        const std::string& v) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& f : c.faces()) {
    const auto& w = f.boundary;
    const std::size_t n = w.size();
    // Polygon vertex p_k is where side k-1 stops and side k starts.
    for (std::size_t k = 0; k < n; ++k) {
      const auto& before = w[(k + n - 1) % n];
      const auto& after = w[k];
      const auto& eb = c.edges()[c.edge_index(before.edge)];
      const auto& ea = c.edges()[c.edge_index(after.edge)];
      const std::string at = after.sign == Sign::plus ? ea.tail : ea.head;
      if (at != v) continue;
      const std::string x = before.edge + (before.sign == Sign::plus ? "-head" : "-tail");
      const std::string y = after.edge + (after.sign == Sign::plus ? "-tail" : "-head");
      out.insert({x, y});
    }
  }
  return out;
}

std::multiset<std::pair<std::string, std::string>> corner_pairs_from_link(const LinkComplex& l) {
  std::multiset<std::pair<std::string, std::string>> out;
  for (const auto& e : l.edges()) out.insert({l.vertices()[e.a].label, l.vertices()[e.b].label});
  return out;
}

}  // namespace

TEST_SUITE("complex") {
  TEST_CASE("validation reports every broken invariant") {
    PolygonalComplex bad({"v", "v"}, {{"a", "v", "w"}, {"a", "v", "v"}},
                         {{"f", {{"a", Sign::plus}, {"b", Sign::plus}}}});
    const auto d = validate_complex(bad);
    auto has = [&](const std::string& needle) {
      return std::any_of(d.begin(), d.end(), [&](const std::string& s) { return s.find(needle) != std::string::npos; });
    };
    CHECK(has("duplicate vertex id 'v'"));
    CHECK(has("duplicate edge id 'a'"));
    CHECK(has("unknown head 'w'"));
    CHECK(has("face length < 3"));
    CHECK(has("unknown edge 'b'"));
    CHECK_THROWS_AS(require_valid(bad), InvalidInput);
  }

  TEST_CASE("boundary words must close up") {
    PolygonalComplex c({"u", "w"}, {{"a", "u", "w"}, {"b", "u", "w"}},
                       {{"f", {{"a", Sign::plus}, {"a", Sign::plus}, {"b", Sign::minus}}}});
    const auto d = validate_complex(c);
    REQUIRE_FALSE(d.empty());
    CHECK(d.front().find("boundary breaks") != std::string::npos);
  }

  TEST_CASE("euler characteristic and connectivity") {
    const auto torus = rose(2, {{1, 2, -1, -2}});
    CHECK(euler_characteristic(torus) == 0);
    CHECK(is_connected(torus));
    PolygonalComplex two({"u", "w"}, {}, {});
    CHECK_FALSE(is_connected(two));
    CHECK(euler_characteristic(two) == 2);
    CHECK_FALSE(is_connected(PolygonalComplex{}));
  }

  TEST_CASE("product complex rejects empty and invalid factors") {
    CHECK_THROWS_AS(ProductComplex({}), InvalidInput);
    PolygonalComplex bad({"v"}, {{"a", "v", "x"}}, {});
    CHECK_THROWS_AS(ProductComplex({bad}), InvalidInput);
  }

  TEST_CASE("vertex link matches a polygon walk") {
    const std::vector<PolygonalComplex> samples = {
        rose(2, {{1, 2, -1, -2}}),
        rose(2, {{1, 2, 1, 2}}),
        rose(3, {{1, 2, 3}, {1, -3, -2}, {2, 2, -1}}),
        rose(8, {{1, 4, 1, -2, -1, -2}, {2, 5, 2, -3, -2, -3}}),
    };
    for (const auto& c : samples) {
      const auto link = vertex_link(c, "v");
      CHECK(link.vertex_count() == 2 * c.edges().size());
      CHECK(corner_pairs_from_link(link) == corner_pairs_by_walk(c, "v"));
    }
  }

  TEST_CASE("links at distinct vertices split the corners") {
    // A square with four distinct vertices.
    PolygonalComplex sq({"p", "q", "r", "s"}, {{"a", "p", "q"}, {"b", "q", "r"}, {"c", "r", "s"}, {"d", "s", "p"}},
                        {{"f", {{"a", Sign::plus}, {"b", Sign::plus}, {"c", Sign::plus}, {"d", Sign::plus}}}});
    std::size_t total = 0;
    for (const auto& v : sq.vertices()) {
      const auto link = vertex_link(sq, v);
      CHECK(link.vertex_count() == 2);
      CHECK(link.edge_count() == 1);
      CHECK(corner_pairs_from_link(link) == corner_pairs_by_walk(sq, v));
      total += link.edge_count();
    }
    CHECK(total == 4);
    const auto lp = vertex_link(sq, "p");
    CHECK(corner_pairs_from_link(lp) ==
          std::multiset<std::pair<std::string, std::string>>{{"d-head", "a-tail"}});
    CHECK_THROWS_AS(vertex_link(sq, "nowhere"), InvalidInput);
  }

  TEST_CASE("loops and multi-edges make a link non-simplicial") {
    const auto c = rose(2, {{1, 1, 2, -1, -1, -2}});
    const auto link = vertex_link(c, "v");
    CHECK_FALSE(link.is_simplicial());
    const auto t = rose(2, {{1, 2, -1, -2}});
    CHECK(vertex_link(t, "v").is_simplicial());
  }

  TEST_CASE("product link labels and arity checks") {
    const auto c = rose(2, {});
    ProductComplex p({c, c});
    const auto l = product_link(p, {"v", "v"});
    CHECK(l.kind() == LinkComplex::Kind::join);
    CHECK(l.vertex_count() == 8);
    CHECK(l.vertices().front().label.rfind("1:", 0) == 0);
    CHECK(l.vertices().back().label.rfind("2:", 0) == 0);
    CHECK_THROWS_AS(product_link(p, {"v"}), InvalidInput);
    ProductComplex single({c});
    CHECK(product_link(single, {"v"}).kind() == LinkComplex::Kind::graph);
  }
}
