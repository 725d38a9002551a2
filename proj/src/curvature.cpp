#include "morsecert/curvature.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace morsecert {

CornerAngleAssignment CornerAngleAssignment::uniform(const PolygonalComplex& c, const Rational& angle) {
  CornerAngleAssignment a;
  for (const auto& f : c.faces()) a.angles[f.id] = std::vector<Rational>(f.boundary.size(), angle);
  return a;
}

const Rational& CornerAngleAssignment::at(const std::string& face, std::size_t corner) const {
  const auto it = angles.find(face);
  if (it == angles.end() || corner >= it->second.size()) {
    throw InvalidInput("missing angle at corner " + std::to_string(corner) + " of face '" + face + "'");
  }
  return it->second[corner];
}

std::vector<std::string> validate_angles(const PolygonalComplex& c, const CornerAngleAssignment& a) {
  std::vector<std::string> out;
  for (const auto& f : c.faces()) {
    const auto it = a.angles.find(f.id);
    if (it == a.angles.end()) {
      out.push_back("face '" + f.id + "' has no angles");
      continue;
    }
    if (it->second.size() != f.boundary.size()) {
      out.push_back("face '" + f.id + "' has " + std::to_string(it->second.size()) + " angles for " +
                    std::to_string(f.boundary.size()) + " corners");
    }
    for (std::size_t k = 0; k < it->second.size(); ++k) {
      const auto& x = it->second[k];
      if (x <= 0 || x >= 1) {
        out.push_back("face '" + f.id + "' corner " + std::to_string(k) + ": angle " + to_string(x) +
                      " pi not in (0, pi)");
      }
    }
  }
  return out;
}

const char* to_string(FaceGeometry g) {
  return g == FaceGeometry::euclidean_square ? "euclidean-square" : "hyperbolic-right-angled";
}

FaceGeometry parse_face_geometry(const std::string& s) {
  if (s == "euclidean-square") return FaceGeometry::euclidean_square;
  if (s == "hyperbolic-right-angled") return FaceGeometry::hyperbolic_regular_right_angled;
  throw InvalidInput("unsupported geometry declaration '" + s + "'");
}

const char* to_string(CurvatureCertificate::Verdict v) {
  switch (v) {
    case CurvatureCertificate::Verdict::npc: return "NPC";
    case CurvatureCertificate::Verdict::cat_minus_one: return "CAT(-1)";
    case CurvatureCertificate::Verdict::fail: break;
  }
  return "fail";
}

const char* to_string(CurvatureCertificate::Rule r) {
  switch (r) {
    case CurvatureCertificate::Rule::girth_2pi: return "girth-2pi";
    case CurvatureCertificate::Rule::flag: return "flag";
    case CurvatureCertificate::Rule::product_of_npc: break;
  }
  return "product-of-npc";
}

namespace {

const Rational& corner_angle(const PolygonalComplex& c, const CornerAngleAssignment& a, const CornerRef& r) {
  return a.at(c.faces().at(r.face).id, r.corner);
}

// Dijkstra from `source` to `target` in the link multigraph, skipping one edge.
std::optional<std::pair<Rational, std::vector<std::size_t>>> shortest_path(
    const PolygonalComplex& c, const LinkComplex& link, const CornerAngleAssignment& a,
    const std::vector<std::vector<std::size_t>>& incident, std::size_t source, std::size_t target,
    std::size_t skip) {
  const std::size_t n = link.vertex_count();
  std::vector<std::optional<Rational>> dist(n);
  std::vector<std::size_t> via(n, SIZE_MAX);
  std::vector<bool> done(n, false);
  using Item = std::pair<Rational, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  dist[source] = Rational(0);
  queue.push({Rational(0), source});
  while (!queue.empty()) {
    const auto [d, x] = queue.top();
    queue.pop();
    if (done[x]) continue;
    done[x] = true;
    if (x == target) break;
    for (std::size_t ei : incident[x]) {
      if (ei == skip) continue;
      const auto& e = link.edges()[ei];
      if (e.a == e.b) continue;
      const std::size_t y = e.a == x ? e.b : e.a;
      const Rational nd = d + corner_angle(c, a, e.corner);
      if (!dist[y] || nd < *dist[y]) {
        dist[y] = nd;
        via[y] = ei;
        queue.push({nd, y});
      }
    }
  }
  if (!dist[target]) return std::nullopt;
  std::vector<std::size_t> edges;
  for (std::size_t x = target; x != source;) {
    const auto& e = link.edges()[via[x]];
    edges.push_back(via[x]);
    x = e.a == x ? e.b : e.a;
  }
  std::reverse(edges.begin(), edges.end());
  return std::make_pair(*dist[target], edges);
}

}  // namespace

std::optional<LinkCycle> min_link_cycle_angle(const PolygonalComplex& c, const LinkComplex& link,
                                             const CornerAngleAssignment& a) {
  if (link.kind() != LinkComplex::Kind::graph) {
    throw InvalidInput("cycle angles are defined for graph links of 2-complexes");
  }
  std::vector<std::vector<std::size_t>> incident(link.vertex_count());
  for (std::size_t i = 0; i < link.edges().size(); ++i) {
    const auto& e = link.edges()[i];
    (void)corner_angle(c, a, e.corner);  // surface missing angles up front
    incident[e.a].push_back(i);
    if (e.b != e.a) incident[e.b].push_back(i);
  }

  std::optional<LinkCycle> best;
  for (std::size_t i = 0; i < link.edges().size(); ++i) {
    const auto& e = link.edges()[i];
    const Rational w = corner_angle(c, a, e.corner);
    if (best && w >= best->angle) continue;
    LinkCycle cycle;
    if (e.a == e.b) {
      cycle.vertices = {e.a};
      cycle.corners = {e.corner};
      cycle.angle = w;
    } else {
      const auto path = shortest_path(c, link, a, incident, e.b, e.a, i);
      if (!path) continue;
      cycle.angle = w + path->first;
      cycle.vertices = {e.a, e.b};
      cycle.corners = {e.corner};
      std::size_t at = e.b;
      for (std::size_t pi : path->second) {
        const auto& pe = link.edges()[pi];
        cycle.corners.push_back(pe.corner);
        at = pe.a == at ? pe.b : pe.a;
        if (at != e.a) cycle.vertices.push_back(at);
      }
    }
    if (!best || cycle.angle < best->angle) best = std::move(cycle);
  }
  return best;
}

std::optional<Rational> replay_cycle(const PolygonalComplex& c, const LinkComplex& link,
                                     const CornerAngleAssignment& a, const LinkCycle& cycle) {
  const std::size_t n = cycle.vertices.size();
  if (n == 0 || cycle.corners.size() != n) return std::nullopt;
  std::set<CornerRef> used;
  Rational total = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& r = cycle.corners[i];
    if (!used.insert(r).second) return std::nullopt;
    const auto it = std::find_if(link.edges().begin(), link.edges().end(),
                                 [&](const LinkEdge& e) { return e.corner == r; });
    if (it == link.edges().end()) return std::nullopt;
    const std::size_t u = cycle.vertices[i];
    const std::size_t v = cycle.vertices[(i + 1) % n];
    if (!((it->a == u && it->b == v) || (it->a == v && it->b == u))) return std::nullopt;
    total += corner_angle(c, a, r);
  }
  return total;
}

CurvatureCertificate certify_2complex(const PolygonalComplex& c, const CornerAngleAssignment& a,
                                      FaceGeometry geometry) {
  require_valid(c);
  CurvatureCertificate cert;
  cert.rule = CurvatureCertificate::Rule::girth_2pi;
  if (!c.faces().empty()) {
    const auto diagnostics = validate_angles(c, a);
    if (!diagnostics.empty()) throw InvalidInput(diagnostics.front());
    const Rational right(1, 2);
    for (const auto& f : c.faces()) {
      const auto& angles = a.angles.at(f.id);
      const bool right_angled =
          std::all_of(angles.begin(), angles.end(), [&](const Rational& x) { return x == right; });
      const bool sides_ok = geometry == FaceGeometry::euclidean_square ? f.boundary.size() == 4
                                                                       : f.boundary.size() >= 5;
      if (!right_angled || !sides_ok) {
        throw InvalidInput(std::string("unsupported geometry declaration: face '") + f.id +
                           "' is not a " + to_string(geometry) + " cell");
      }
    }
  }

  for (const auto& v : c.vertices()) {
    const LinkComplex link = vertex_link(c, v);
    const auto cycle = min_link_cycle_angle(c, link, a);
    if (!cycle) continue;
    if (!cert.min_cycle_angle || cycle->angle < *cert.min_cycle_angle) cert.min_cycle_angle = cycle->angle;
    if (cycle->angle < 2 && !cert.witness) {
      CurvatureCertificate::Witness w{0, v, *cycle, {}};
      for (auto x : cycle->vertices) w.labels.push_back(link.vertices()[x].label);
      cert.witness = std::move(w);
    }
  }
  if (cert.witness) {
    cert.verdict = CurvatureCertificate::Verdict::fail;
  } else if (!c.faces().empty() && geometry == FaceGeometry::hyperbolic_regular_right_angled) {
    cert.verdict = CurvatureCertificate::Verdict::cat_minus_one;
  } else {
    cert.verdict = CurvatureCertificate::Verdict::npc;
  }
  return cert;
}

CurvatureCertificate certify_product(const ProductComplex& p,
                                     const std::vector<CurvatureCertificate>& factor_certs) {
  if (factor_certs.size() != p.arity()) {
    throw InvalidInput("need one curvature certificate per factor");
  }
  if (p.arity() == 1) return factor_certs.front();
  CurvatureCertificate out;
  out.rule = CurvatureCertificate::Rule::product_of_npc;
  std::size_t nontrivial = 0;
  std::size_t last_nontrivial = 0;
  for (std::size_t i = 0; i < p.arity(); ++i) {
    const auto& cert = factor_certs[i];
    if (!p.factors()[i].edges().empty()) {
      ++nontrivial;
      last_nontrivial = i;
    }
    if (cert.min_cycle_angle && (!out.min_cycle_angle || *cert.min_cycle_angle < *out.min_cycle_angle)) {
      out.min_cycle_angle = cert.min_cycle_angle;
    }
    if (cert.verdict == CurvatureCertificate::Verdict::fail && !out.witness) {
      out.witness = cert.witness;
      if (out.witness) out.witness->factor = i;
    }
  }
  if (out.witness) {
    out.verdict = CurvatureCertificate::Verdict::fail;
  } else if (nontrivial == 1 &&
             factor_certs[last_nontrivial].verdict == CurvatureCertificate::Verdict::cat_minus_one) {
    out.verdict = CurvatureCertificate::Verdict::cat_minus_one;
  } else {
    out.verdict = CurvatureCertificate::Verdict::npc;
  }
  return out;
}

FlagResult is_flag(const SimplicialComplex& s) {
  const auto adj = s.adjacency();
  const int n = static_cast<int>(s.vertex_count());
  auto adjacent = [&](int u, int v) { return std::binary_search(adj[u].begin(), adj[u].end(), v); };

  std::vector<std::vector<int>> level;
  for (int u = 0; u < n; ++u) {
    for (int v : adj[u]) {
      if (v > u) level.push_back({u, v});
    }
  }
  while (!level.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& clique : level) {
      for (int w = clique.back() + 1; w < n; ++w) {
        if (std::all_of(clique.begin(), clique.end(), [&](int u) { return adjacent(u, w); })) {
          auto bigger = clique;
          bigger.push_back(w);
          next.push_back(std::move(bigger));
        }
      }
    }
    // Cliques are examined by size, so the first failure is minimal.
    for (const auto& clique : next) {
      if (!s.contains(clique)) return {false, clique};
    }
    level = std::move(next);
  }
  return {};
}

}  // namespace morsecert
