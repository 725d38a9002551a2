#include "morsecert/json_io.hpp"

#include <fstream>
#include <sstream>

namespace morsecert {

namespace {

template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidInput(std::string("malformed ") + what + ": " + e.what());
  }
}

Sign sign_from(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return Sign::plus;
  if (s == "-") return Sign::minus;
  throw InvalidInput("sign must be \"+\" or \"-\", got \"" + s + "\"");
}

Json big_to_json(const BigInt& n) {
  if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max()) {
    return n.convert_to<long long>();
  }
  return to_string(n);
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<long long>());
}

Json optional_string(const std::optional<std::string>& s) { return s ? Json(*s) : Json(nullptr); }

}  // namespace

Json to_json(const PolygonalComplex& c) {
  Json edges = Json::array();
  for (const auto& e : c.edges()) edges.push_back({{"id", e.id}, {"tail", e.tail}, {"head", e.head}});
  Json faces = Json::array();
  for (const auto& f : c.faces()) {
    Json boundary = Json::array();
    for (const auto& s : f.boundary) boundary.push_back({s.edge, to_token(s.sign)});
    faces.push_back({{"id", f.id}, {"boundary", boundary}});
  }
  return {{"vertices", c.vertices()}, {"edges", edges}, {"faces", faces}};
}

PolygonalComplex complex_from_json(const Json& j) {
  return guarded("complex", [&] {
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      edges.push_back({e.at("id").get<std::string>(), e.at("tail").get<std::string>(), e.at("head").get<std::string>()});
    }
    std::vector<Face> faces;
    for (const auto& f : j.value("faces", Json::array())) {
      Face face{f.at("id").get<std::string>(), {}};
      for (const auto& s : f.at("boundary")) face.boundary.push_back({s.at(0).get<std::string>(), sign_from(s.at(1))});
      faces.push_back(std::move(face));
    }
    return PolygonalComplex(j.at("vertices").get<std::vector<std::string>>(), std::move(edges), std::move(faces));
  });
}

Json to_json(const MorseWeighting& w) { return Json(w.weights); }

MorseWeighting weights_from_json(const Json& j) {
  return guarded("weights", [&] {
    const Json& body = j.contains("weights") && j.at("weights").is_object() ? j.at("weights") : j;
    return MorseWeighting{body.get<std::map<std::string, long>>()};
  });
}

Json to_json(const CellularAutomorphism& s) {
  Json edges = Json::object();
  for (const auto& [e, img] : s.edge_map) edges[e] = {img.edge, to_token(img.sign)};
  Json faces = Json::object();
  for (const auto& [f, img] : s.face_map) {
    faces[f] = {{"face", img.face}, {"rotation", img.rotation}, {"reflect", img.reflected}};
  }
  return {{"vertices", s.vertex_map}, {"edges", edges}, {"faces", faces}};
}

CellularAutomorphism automorphism_from_json(const Json& j) {
  return guarded("automorphism", [&] {
    CellularAutomorphism s;
    s.vertex_map = j.at("vertices").get<std::map<std::string, std::string>>();
    for (const auto& [e, img] : j.at("edges").items()) s.edge_map[e] = {img.at(0).get<std::string>(), sign_from(img.at(1))};
    const Json faces = j.value("faces", Json::object());
    for (const auto& [f, img] : faces.items()) {
      s.face_map[f] = {img.at("face").get<std::string>(), img.value("rotation", std::size_t{0}),
                       img.value("reflect", false)};
    }
    return s;
  });
}

Json to_json(const CornerAngleAssignment& a) {
  Json out = Json::object();
  for (const auto& [f, angles] : a.angles) {
    Json list = Json::array();
    for (const auto& r : angles) list.push_back(to_string(r));
    out[f] = list;
  }
  return out;
}

CornerAngleAssignment angles_from_json(const Json& j) {
  return guarded("angles", [&] {
    CornerAngleAssignment a;
    for (const auto& [f, list] : j.items()) {
      for (const auto& r : list) a.angles[f].push_back(parse_rational(r.get<std::string>()));
    }
    return a;
  });
}

Json to_json(const Situation& s) {
  Json factors = Json::array();
  for (const auto& f : s.factors) {
    factors.push_back({{"complex", to_json(f.complex)},
                       {"weights", to_json(f.weights)},
                       {"automorphism", to_json(f.sigma)},
                       {"angles", to_json(f.angles)},
                       {"geometry", to_string(f.geometry)},
                       {"vertex", f.vertex}});
  }
  return {{"name", s.name}, {"notes", s.notes}, {"factors", factors}};
}

Situation situation_from_json(const Json& j) {
  return guarded("situation", [&] {
    Situation s;
    s.name = j.value("name", std::string("custom"));
    s.notes = j.value("notes", std::string());
    for (const auto& f : j.at("factors")) {
      SituationFactor factor;
      factor.complex = complex_from_json(f.at("complex"));
      factor.weights = weights_from_json(f.at("weights"));
      factor.sigma = automorphism_from_json(f.at("automorphism"));
      factor.angles = angles_from_json(f.value("angles", Json::object()));
      factor.geometry = parse_face_geometry(f.value("geometry", std::string("euclidean-square")));
      factor.vertex = f.at("vertex").get<std::string>();
      s.factors.push_back(std::move(factor));
    }
    if (s.factors.empty()) throw InvalidInput("situation has no factors");
    return s;
  });
}

Json to_json(const HomologyProfile& h) {
  Json out = Json::array();
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    Json torsion = Json::array();
    for (const auto& t : h.groups[d].torsion) torsion.push_back(big_to_json(t));
    out.push_back({{"dim", d}, {"betti", h.groups[d].betti}, {"torsion", torsion}, {"group", describe(h.groups[d])}});
  }
  return out;
}

Json to_json(const LinkComplex& l) {
  Json vertices = Json::array();
  for (const auto& v : l.vertices()) vertices.push_back({{"label", v.label}, {"polarity", to_string(v.polarity)}});
  Json out = {{"kind", l.kind() == LinkComplex::Kind::graph ? "graph" : "join"},
              {"vertices", vertices},
              {"vertex_count", l.vertex_count()},
              {"edge_count", l.edge_count()},
              {"dimension", l.dimension()},
              {"simplicial", l.is_simplicial()},
              {"f_vector", l.complex().f_vector()}};
  if (l.kind() == LinkComplex::Kind::graph) {
    Json edges = Json::array();
    for (const auto& e : l.edges()) {
      edges.push_back({{"a", l.vertices()[e.a].label},
                       {"b", l.vertices()[e.b].label},
                       {"face", e.corner.face},
                       {"corner", e.corner.corner}});
    }
    out["edges"] = edges;
  } else {
    Json maximal = Json::array();
    for (const auto& s : l.complex().maximal()) {
      Json simplex = Json::array();
      for (int v : s) simplex.push_back(l.complex().labels()[static_cast<std::size_t>(v)]);
      maximal.push_back(simplex);
    }
    out["maximal_simplices"] = maximal;
  }
  return out;
}

Json to_json(const LinkAnalysis& a) {
  return {{"connected", a.connected},
          {"simply_connected", to_string(a.simply_connected)},
          {"connectivity", a.connectivity == kContractible ? Json("contractible") : Json(a.connectivity)},
          {"homology", to_json(a.homology)},
          {"reasoning", a.reasoning}};
}

Json to_json(const FinitenessReport& r) {
  return {{"kind", to_string(r.kind)}, {"m", r.m},          {"rule", r.rule},
          {"conclusion", r.conclusion}, {"ascending", to_json(r.ascending)}, {"descending", to_json(r.descending)}};
}

Json to_json(const CurvatureCertificate& c) {
  Json out = {{"verdict", to_string(c.verdict)},
              {"rule", to_string(c.rule)},
              {"min_cycle_angle", c.min_cycle_angle ? Json(to_string(*c.min_cycle_angle)) : Json("inf")}};
  if (c.witness) {
    Json corners = Json::array();
    for (const auto& r : c.witness->cycle.corners) corners.push_back({{"face", r.face}, {"corner", r.corner}});
    out["witness"] = {{"factor", c.witness->factor},
                      {"vertex", c.witness->vertex},
                      {"labels", c.witness->labels},
                      {"corners", corners},
                      {"angle", to_string(c.witness->cycle.angle)}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const FreeActionReport& r) {
  Json powers = Json::array();
  for (const auto& [k, free] : r.powers) powers.push_back({{"k", k}, {"free", free}});
  return {{"fixes_vertex", r.fixes_vertex},
          {"free", r.free},
          {"witness", optional_string(r.witness)},
          {"simplices_checked", r.simplices_checked},
          {"powers", powers}};
}

Json to_json(const Situation& s, const ModelSituationCertificate& c) {
  Json checks = Json::array();
  for (const auto& check : c.checks) {
    checks.push_back({{"name", check.name}, {"passed", check.passed}, {"detail", check.detail}});
  }
  Json t = Json::array();
  for (const auto& l : c.chosen_t) t.push_back({qualified_edge(s, l), to_token(l.letter.sign)});
  Json out = {{"situation", s.name},
              {"checks", checks},
              {"all_passed", c.all_passed()},
              {"failed_checks", c.failed_checks()},
              {"order", c.order},
              {"t", t},
              {"conclusion", optional_string(c.conclusion)},
              {"curvature", c.curvature ? to_json(*c.curvature) : Json(nullptr)},
              {"action", c.action ? to_json(*c.action) : Json(nullptr)}};
  if (c.witness_family) {
    out["witness_family"] = {{"formula", c.witness_family->formula},
                             {"height_rule", c.witness_family->height_rule},
                             {"sample_heights", c.witness_family->sample_heights}};
  } else {
    out["witness_family"] = nullptr;
  }
  return out;
}

Json to_json(const DoubledFreeElement& g) {
  Json coords = Json::array();
  for (const auto& w : g.coords) coords.push_back(w.to_power_string(Alphabet::letters_ab()));
  return {{"coords", coords}, {"flip", g.flip}};
}

DoubledFreeElement element_from_json(const Json& j) {
  return guarded("element", [&] {
    DoubledFreeElement g;
    for (const auto& w : j.at("coords")) g.coords.push_back(FreeWord::parse(w.get<std::string>(), Alphabet::letters_ab()));
    g.flip = j.value("flip", false);
    for (const auto& w : g.coords) {
      if (w.max_generator() > 2) throw InvalidInput("coordinates must be words in a and b");
    }
    return g;
  });
}

Json to_json(const ConjugacyVerdict& v) {
  return {{"conjugate", v.conjugate},
          {"conjugator", v.conjugator ? to_json(*v.conjugator) : Json(nullptr)},
          {"max_length", v.max_length},
          {"candidates_examined", v.candidates_examined}};
}

Json to_json(const FreeGroupEndo& e) {
  const auto alphabet = Alphabet::indexed("x");
  Json images = Json::object();
  for (std::size_t g = 0; g < e.rank; ++g) images["x" + std::to_string(g + 1)] = e.images[g].to_letter_string(alphabet);
  return {{"rank", e.rank}, {"images", images}};
}

FreeGroupEndo endo_from_json(const Json& j) {
  return guarded("endomorphism", [&] {
    const auto alphabet = Alphabet::indexed("x");
    FreeGroupEndo e = FreeGroupEndo::identity(j.at("rank").get<std::size_t>());
    for (const auto& [name, word] : j.at("images").items()) {
      const int g = alphabet.generator(name);
      if (g < 1 || static_cast<std::size_t>(g) > e.rank) throw InvalidInput("unknown generator " + name);
      e.images[static_cast<std::size_t>(g - 1)] = FreeWord::parse(word.get<std::string>(), alphabet);
    }
    for (const auto& w : e.images) {
      if (static_cast<std::size_t>(w.max_generator()) > e.rank) throw InvalidInput("image uses a generator beyond the rank");
    }
    return e;
  });
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(big_to_json(x));
    out.push_back(r);
  }
  return out;
}

IntMatrix matrix_from_json(const Json& j) {
  return guarded("matrix", [&] {
    IntMatrix m;
    for (const auto& row : j) {
      std::vector<BigInt> r;
      for (const auto& x : row) r.push_back(big_from_json(x));
      m.push_back(std::move(r));
    }
    for (const auto& r : m) {
      if (r.size() != m.size()) throw InvalidInput("matrix must be square");
    }
    return m;
  });
}

Json to_json(const RelationReport& r) {
  Json checks = Json::array();
  for (const auto& c : r.checks) checks.push_back({{"relation", c.relation}, {"holds", c.holds}, {"detail", c.detail}});
  return {{"rank", r.rank}, {"all_hold", r.all_hold()}, {"checks", checks}};
}

namespace {

Json arc_to_json(const Arc& a) { return Json::array({to_string(a.start), to_string(a.end)}); }

ProjectivePoint point_from_json(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "inf") return std::nullopt;
  return parse_rational(s);
}

Arc arc_from_json(const Json& j) { return {point_from_json(j.at(0)), point_from_json(j.at(1))}; }

Json domain_to_json(const PingPongDomain& d) {
  return {{"attracting", arc_to_json(d.attracting)}, {"repelling", arc_to_json(d.repelling)}};
}

PingPongDomain domain_from_json(const Json& j) {
  return {arc_from_json(j.at("attracting")), arc_from_json(j.at("repelling"))};
}

}  // namespace

Json to_json(const PingPongCertificate& c) {
  return {{"A", to_json(c.a)},
          {"B", to_json(c.b)},
          {"N", c.n},
          {"X_A", domain_to_json(c.x_a)},
          {"X_B", domain_to_json(c.x_b)},
          {"inclusions", c.inclusions}};
}

PingPongCertificate pingpong_from_json(const Json& j) {
  return guarded("ping-pong certificate", [&] {
    return PingPongCertificate{matrix_from_json(j.at("A")),
                               matrix_from_json(j.at("B")),
                               j.at("N").get<long>(),
                               domain_from_json(j.at("X_A")),
                               domain_from_json(j.at("X_B")),
                               j.at("inclusions").get<std::vector<std::string>>()};
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

Situation read_situation_file(const std::string& path) { return situation_from_json(read_json_file(path)); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace morsecert
