#include "morsecert/examples.hpp"

#include "morsecert/json_io.hpp"

#include <map>
#include <set>

namespace morsecert {

namespace {

int mod8(int i) { return ((i % 8) + 8) % 8; }
std::string hex_edge(int i) { return std::to_string(mod8(i - 1) + 1); }
std::string hex_face(int i) { return "f" + hex_edge(i); }

}  // namespace

HexagonFaceFamily default_hexagon_family() {
  return {{{0, Sign::plus}, {3, Sign::plus}, {0, Sign::plus}, {1, Sign::minus}, {0, Sign::minus}, {1, Sign::minus}}};
}

std::vector<std::string> check_hexagon_link(const PolygonalComplex& c) {
  std::vector<std::string> out;
  if (c.vertices().size() != 1 || c.edges().size() != 8) return {"expected one vertex and eight edges"};
  const LinkComplex link = vertex_link(c, c.vertices().front());
  if (link.vertex_count() != 16) out.push_back("link has " + std::to_string(link.vertex_count()) + " vertices");
  if (link.edge_count() != 48) out.push_back("link has " + std::to_string(link.edge_count()) + " edges");

  auto end_label = [](int i, End e) { return hex_edge(i) + (e == End::tail ? "-tail" : "-head"); };
  std::map<std::set<std::string>, int> expected;
  for (int i = 1; i <= 8; ++i) {
    expected[{end_label(i, End::tail), end_label(i + 1, End::tail)}] += 1;
    expected[{end_label(i, End::head), end_label(i + 1, End::head)}] += 1;
    for (int d : {1, -1, 3, -3}) expected[{end_label(i, End::head), end_label(i + d, End::tail)}] += 1;
  }
  std::map<std::set<std::string>, int> found;
  for (const auto& e : link.edges()) {
    found[{link.vertices()[e.a].label, link.vertices()[e.b].label}] += 1;
  }
  for (const auto& [pair, count] : expected) {
    const auto it = found.find(pair);
    const int seen = it == found.end() ? 0 : it->second;
    if (seen != count) {
      out.push_back("corner " + *pair.begin() + " -- " + *pair.rbegin() + " occurs " + std::to_string(seen) +
                    " times, expected " + std::to_string(count));
    }
  }
  for (const auto& [pair, count] : found) {
    if (!expected.count(pair)) out.push_back("unexpected corner " + *pair.begin() + " -- " + *pair.rbegin());
  }
  return out;
}

Situation raag_example(std::size_t n) {
  if (n < 1) throw InvalidInput("raag example needs n >= 1");
  Situation s;
  s.name = "raag-" + std::to_string(n);
  for (std::size_t k = 0; k < n; ++k) {
    SituationFactor f;
    f.complex = PolygonalComplex({"v"}, {{"a", "v", "v"}, {"b", "v", "v"}}, {});
    f.weights.weights = {{"a", 1}, {"b", 1}};
    f.sigma.vertex_map = {{"v", "v"}};
    f.sigma.edge_map = {{"a", {"b", Sign::plus}}, {"b", {"a", Sign::plus}}};
    f.geometry = FaceGeometry::euclidean_square;
    f.vertex = "v";
    s.factors.push_back(std::move(f));
  }
  return s;
}

Situation hexagon_example(const HexagonFaceFamily& family) {
  std::vector<Edge> edges;
  std::vector<Face> faces;
  for (int i = 1; i <= 8; ++i) edges.push_back({hex_edge(i), "v", "v"});
  for (int i = 1; i <= 8; ++i) {
    Face f{hex_face(i), {}};
    for (const auto& [d, sign] : family.letters) f.boundary.push_back({hex_edge(i + d), sign});
    faces.push_back(std::move(f));
  }
  SituationFactor f;
  f.complex = PolygonalComplex({"v"}, std::move(edges), std::move(faces));
  f.weights = MorseWeighting::constant(f.complex, 1);
  f.sigma.vertex_map = {{"v", "v"}};
  for (int i = 1; i <= 8; ++i) {
    f.sigma.edge_map[hex_edge(i)] = {hex_edge(i + 1), Sign::plus};
    f.sigma.face_map[hex_face(i)] = {hex_face(i + 1), 0, false};
  }
  f.angles = CornerAngleAssignment::uniform(f.complex, Rational(1, 2));
  f.geometry = FaceGeometry::hyperbolic_regular_right_angled;
  f.vertex = "v";

  Situation s;
  s.name = "hexagon";
  s.notes = "face word family is a candidate reconstructed from the stated link; any family with the same link is "
            "equally valid";
  s.factors.push_back(std::move(f));
  return s;
}

Situation hexagon_product_example() {
  const Situation h = hexagon_example();
  Situation s;
  s.name = "hexagon-product";
  s.notes = h.notes;
  s.factors = {h.factors.front(), h.factors.front()};
  return s;
}

ExampleSpec parse_example_spec(const std::string& name) {
  if (name == "hexagon") return {ExampleSpec::Kind::hexagon, 1, {}};
  if (name == "hexagon-product") return {ExampleSpec::Kind::hexagon_product, 2, {}};
  if (name.rfind("raag-", 0) == 0) {
    const std::string digits = name.substr(5);
    if (digits.empty() || digits.size() > 3 || digits.find_first_not_of("0123456789") != std::string::npos) {
      throw InvalidInput("bad raag size in '" + name + "'");
    }
    const std::size_t n = std::stoul(digits);
    if (n < 1) throw InvalidInput("raag size must be at least 1");
    return {ExampleSpec::Kind::raag, n, {}};
  }
  throw InvalidInput("unknown example '" + name + "' (expected raag-N, hexagon or hexagon-product)");
}

Situation build_example(const ExampleSpec& spec) {
  switch (spec.kind) {
    case ExampleSpec::Kind::raag:
      return raag_example(spec.n);
    case ExampleSpec::Kind::hexagon:
      return hexagon_example();
    case ExampleSpec::Kind::hexagon_product:
      return hexagon_product_example();
    case ExampleSpec::Kind::custom:
      return read_situation_file(spec.path);
  }
  throw InvalidInput("unknown example kind");
}

}  // namespace morsecert
