#include "morsecert/symmetry.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace morsecert {

CellularAutomorphism CellularAutomorphism::identity(const PolygonalComplex& c) {
  CellularAutomorphism s;
  for (const auto& v : c.vertices()) s.vertex_map[v] = v;
  for (const auto& e : c.edges()) s.edge_map[e.id] = {e.id, Sign::plus};
  for (const auto& f : c.faces()) s.face_map[f.id] = {f.id, 0, false};
  return s;
}

namespace {

template <typename Value, typename Key>
void check_bijection(const std::map<std::string, Value>& map, const std::vector<Key>& domain,
                     auto&& id_of, auto&& target_of, auto&& exists, const std::string& what,
                     std::vector<std::string>& out) {
  std::set<std::string> targets;
  for (const auto& x : domain) {
    const auto it = map.find(id_of(x));
    if (it == map.end()) {
      out.push_back(what + " '" + id_of(x) + "' has no image");
      continue;
    }
    const std::string& t = target_of(it->second);
    if (!exists(t)) out.push_back(what + " '" + id_of(x) + "' maps to unknown " + what + " '" + t + "'");
    if (!targets.insert(t).second) out.push_back(what + " map is not injective at '" + t + "'");
  }
  if (map.size() != domain.size()) out.push_back(what + " map has entries outside the complex");
}

SignedEdge apply(const CellularAutomorphism& s, const SignedEdge& x) {
  const auto& img = s.edge_map.at(x.edge);
  return {img.edge, img.sign * x.sign};
}

std::size_t mod(long a, std::size_t n) {
  const long m = static_cast<long>(n);
  return static_cast<std::size_t>(((a % m) + m) % m);
}

}  // namespace

std::vector<std::string> validate_automorphism(const PolygonalComplex& c, const CellularAutomorphism& s) {
  std::vector<std::string> out;
  check_bijection(
      s.vertex_map, c.vertices(), [](const std::string& v) { return v; },
      [](const std::string& t) -> const std::string& { return t; },
      [&](const std::string& t) { return c.find_vertex(t).has_value(); }, "vertex", out);
  check_bijection(
      s.edge_map, c.edges(), [](const Edge& e) { return e.id; },
      [](const EdgeImage& t) -> const std::string& { return t.edge; },
      [&](const std::string& t) { return c.find_edge(t).has_value(); }, "edge", out);
  check_bijection(
      s.face_map, c.faces(), [](const Face& f) { return f.id; },
      [](const FaceImage& t) -> const std::string& { return t.face; },
      [&](const std::string& t) { return c.find_face(t).has_value(); }, "face", out);
  if (!out.empty()) return out;

  for (const auto& e : c.edges()) {
    const auto& img = s.edge_map.at(e.id);
    const auto& target = c.edges()[c.edge_index(img.edge)];
    const auto& want_tail = img.sign == Sign::plus ? target.tail : target.head;
    const auto& want_head = img.sign == Sign::plus ? target.head : target.tail;
    if (s.vertex_map.at(e.tail) != want_tail || s.vertex_map.at(e.head) != want_head) {
      out.push_back("edge '" + e.id + "': incidence not preserved (maps to " + img.edge +
                    to_token(img.sign) + ")");
    }
  }
  for (const auto& f : c.faces()) {
    const auto& img = s.face_map.at(f.id);
    const auto& target = c.faces()[c.face_index(img.face)];
    const std::size_t n = f.boundary.size();
    if (target.boundary.size() != n) {
      out.push_back("face '" + f.id + "' maps to face '" + img.face + "' of different length");
      continue;
    }
    if (img.rotation >= n) {
      out.push_back("face '" + f.id + "': rotation offset out of range");
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      const SignedEdge got = apply(s, f.boundary[k]);
      const SignedEdge want =
          img.reflected ? inverse(target.boundary[mod(static_cast<long>(img.rotation) - static_cast<long>(k) - 1, n)])
                        : target.boundary[(k + img.rotation) % n];
      if (!(got == want)) {
        out.push_back("face '" + f.id + "': boundary letter " + std::to_string(k) +
                      " does not map onto face '" + img.face + "'");
        break;
      }
    }
  }
  return out;
}

namespace {

void require_automorphism(const PolygonalComplex& c, const CellularAutomorphism& s) {
  const auto d = validate_automorphism(c, s);
  if (!d.empty()) throw InvalidInput("invalid automorphism: " + d.front());
}

std::size_t corner_index(const FaceImage& img, std::size_t k, std::size_t n) {
  return img.reflected ? mod(static_cast<long>(img.rotation) - static_cast<long>(k), n)
                       : (k + img.rotation) % n;
}

}  // namespace

EdgeEnd end_image(const PolygonalComplex& c, const CellularAutomorphism& s, const EdgeEnd& e) {
  const auto& img = s.edge_map.at(c.edges().at(e.edge).id);
  return {c.edge_index(img.edge), img.sign == Sign::plus ? e.end : opposite(e.end)};
}

CornerRef corner_image(const PolygonalComplex& c, const CellularAutomorphism& s, const CornerRef& r) {
  const auto& f = c.faces().at(r.face);
  const auto& img = s.face_map.at(f.id);
  return {c.face_index(img.face), corner_index(img, r.corner, f.boundary.size())};
}

CellularAutomorphism compose(const PolygonalComplex& c, const CellularAutomorphism& a,
                             const CellularAutomorphism& b) {
  require_automorphism(c, a);
  require_automorphism(c, b);
  CellularAutomorphism out;
  for (const auto& [v, w] : b.vertex_map) out.vertex_map[v] = a.vertex_map.at(w);
  for (const auto& [e, img] : b.edge_map) {
    const auto& second = a.edge_map.at(img.edge);
    out.edge_map[e] = {second.edge, img.sign * second.sign};
  }
  for (std::size_t f = 0; f < c.faces().size(); ++f) {
    const std::size_t n = c.faces()[f].boundary.size();
    const CornerRef c0 = corner_image(c, a, corner_image(c, b, {f, 0}));
    const CornerRef c1 = corner_image(c, a, corner_image(c, b, {f, 1}));
    const bool reflected = c1.corner != (c0.corner + 1) % n;
    out.face_map[c.faces()[f].id] = {c.faces()[c0.face].id, c0.corner, reflected};
  }
  return out;
}

CellularAutomorphism power(const PolygonalComplex& c, const CellularAutomorphism& s, std::size_t k) {
  CellularAutomorphism out = CellularAutomorphism::identity(c);
  for (std::size_t i = 0; i < k; ++i) out = compose(c, s, out);
  return out;
}

std::size_t order_of(const PolygonalComplex& c, const CellularAutomorphism& s) {
  require_automorphism(c, s);
  std::vector<std::vector<std::size_t>> perms;

  std::vector<std::size_t> vp;
  for (const auto& v : c.vertices()) vp.push_back(c.vertex_index(s.vertex_map.at(v)));
  perms.push_back(std::move(vp));

  std::vector<std::size_t> ep;
  for (const auto& e : c.edges()) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      const auto img = apply(s, {e.id, sign});
      ep.push_back(2 * c.edge_index(img.edge) + (img.sign == Sign::plus ? 0 : 1));
    }
  }
  perms.push_back(std::move(ep));

  std::vector<std::size_t> offset(c.faces().size() + 1, 0);
  for (std::size_t f = 0; f < c.faces().size(); ++f) offset[f + 1] = offset[f] + c.faces()[f].boundary.size();
  std::vector<std::size_t> cp;
  for (std::size_t f = 0; f < c.faces().size(); ++f) {
    for (std::size_t k = 0; k < c.faces()[f].boundary.size(); ++k) {
      const auto r = corner_image(c, s, {f, k});
      cp.push_back(offset[r.face] + r.corner);
    }
  }
  perms.push_back(std::move(cp));

  std::size_t order = 1;
  for (const auto& p : perms) {
    std::vector<bool> seen(p.size(), false);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen[i]) continue;
      std::size_t len = 0;
      for (std::size_t j = i; !seen[j]; j = p[j]) {
        seen[j] = true;
        ++len;
      }
      order = std::lcm(order, len);
    }
  }
  return order;
}

bool is_weight_equivariant(const CellularAutomorphism& s, const MorseWeighting& w) {
  for (const auto& [e, img] : s.edge_map) {
    const auto a = w.weights.find(e);
    const auto b = w.weights.find(img.edge);
    if (a == w.weights.end() || b == w.weights.end()) return false;
    if (b->second != to_int(img.sign) * a->second) return false;
  }
  return true;
}

ProductComplex Situation::product() const {
  std::vector<PolygonalComplex> complexes;
  for (const auto& f : factors) complexes.push_back(f.complex);
  return ProductComplex(std::move(complexes));
}

std::vector<MorseWeighting> Situation::weightings() const {
  std::vector<MorseWeighting> out;
  for (const auto& f : factors) out.push_back(f.weights);
  return out;
}

std::vector<std::string> Situation::vertex() const {
  std::vector<std::string> out;
  for (const auto& f : factors) out.push_back(f.vertex);
  return out;
}

namespace {

// The link of one factor at its base vertex with the induced permutation of
// its cells (vertices first, then corner edges).
struct FactorAction {
  LinkComplex link;
  std::vector<std::size_t> image;  // cell -> cell
  std::vector<Polarity> polarity;  // per cell; edges inherit a shared polarity or none

  std::size_t vertex_cells() const { return link.vertex_count(); }
  std::size_t cells() const { return image.size(); }
};

FactorAction factor_action(const SituationFactor& f, bool polarize) {
  const auto& c = f.complex;
  FactorAction a{polarize ? polarized_link(c, f.weights, f.vertex) : vertex_link(c, f.vertex), {}, {}};
  const auto& lv = a.link.vertices();
  const auto& le = a.link.edges();
  std::map<EdgeEnd, std::size_t> end_index;
  for (std::size_t i = 0; i < lv.size(); ++i) end_index.emplace(lv[i].end, i);
  std::map<CornerRef, std::size_t> corner_index_of;
  for (std::size_t i = 0; i < le.size(); ++i) corner_index_of.emplace(le[i].corner, i);

  for (std::size_t i = 0; i < lv.size(); ++i) {
    a.image.push_back(end_index.at(end_image(c, f.sigma, lv[i].end)));
    a.polarity.push_back(lv[i].polarity);
  }
  for (std::size_t i = 0; i < le.size(); ++i) {
    a.image.push_back(lv.size() + corner_index_of.at(corner_image(c, f.sigma, le[i].corner)));
    const auto pa = lv[le[i].a].polarity;
    a.polarity.push_back(pa == lv[le[i].b].polarity ? pa : Polarity::none);
  }
  return a;
}

// Enumerates every nonempty join simplex, calling visit(tuple) where each
// coordinate is a cell index or SIZE_MAX for "empty".
template <typename Visit>
void for_each_join_simplex(const std::vector<FactorAction>& actions, std::optional<Polarity> only,
                           Visit&& visit) {
  std::vector<std::vector<std::size_t>> choices(actions.size());
  for (std::size_t i = 0; i < actions.size(); ++i) {
    choices[i].push_back(SIZE_MAX);
    for (std::size_t cell = 0; cell < actions[i].cells(); ++cell) {
      if (!only || actions[i].polarity[cell] == *only) choices[i].push_back(cell);
    }
  }
  std::vector<std::size_t> pick(actions.size(), 0);
  std::vector<std::size_t> tuple(actions.size());
  for (;;) {
    bool nonempty = false;
    for (std::size_t i = 0; i < actions.size(); ++i) {
      tuple[i] = choices[i][pick[i]];
      nonempty = nonempty || tuple[i] != SIZE_MAX;
    }
    if (nonempty) visit(tuple);
    std::size_t i = 0;
    while (i < actions.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == actions.size()) return;
  }
}

std::vector<std::size_t> image_of(const std::vector<FactorAction>& actions,
                                  const std::vector<std::vector<std::size_t>>& images,
                                  const std::vector<std::size_t>& tuple) {
  std::vector<std::size_t> out(tuple.size());
  for (std::size_t i = 0; i < tuple.size(); ++i) out[i] = tuple[i] == SIZE_MAX ? SIZE_MAX : images[i][tuple[i]];
  (void)actions;
  return out;
}

std::string describe_tuple(const Situation& s, const std::vector<FactorAction>& actions,
                           const std::vector<std::size_t>& tuple) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] == SIZE_MAX) continue;
    if (!first) out << " * ";
    first = false;
    if (s.factors.size() > 1) out << (i + 1) << ":";
    const auto& link = actions[i].link;
    if (tuple[i] < actions[i].vertex_cells()) {
      out << link.vertices()[tuple[i]].label;
    } else {
      const auto& e = link.edges()[tuple[i] - actions[i].vertex_cells()];
      out << "{" << link.vertices()[e.a].label << "," << link.vertices()[e.b].label << "} (face "
          << s.factors[i].complex.faces()[e.corner.face].id << " corner " << e.corner.corner << ")";
    }
  }
  return out.str();
}

std::vector<std::vector<std::size_t>> compose_images(const std::vector<std::vector<std::size_t>>& a,
                                                     const std::vector<std::vector<std::size_t>>& b) {
  std::vector<std::vector<std::size_t>> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i].resize(a[i].size());
    for (std::size_t j = 0; j < a[i].size(); ++j) out[i][j] = a[i][b[i][j]];
  }
  return out;
}

bool moves_base_vertex(const Situation& s) {
  return std::any_of(s.factors.begin(), s.factors.end(), [](const SituationFactor& f) {
    const auto it = f.sigma.vertex_map.find(f.vertex);
    return it == f.sigma.vertex_map.end() || it->second != f.vertex;
  });
}

std::size_t situation_order(const Situation& s) {
  std::size_t d = 1;
  for (const auto& f : s.factors) d = std::lcm(d, order_of(f.complex, f.sigma));
  return d;
}

}  // namespace

FreeActionReport acts_freely_on_link(const Situation& s) {
  FreeActionReport report;
  for (const auto& f : s.factors) require_automorphism(f.complex, f.sigma);
  if (moves_base_vertex(s)) {
    report.fixes_vertex = false;
    report.free = false;
    report.witness = "base vertex is not fixed";
    return report;
  }
  std::vector<FactorAction> actions;
  for (const auto& f : s.factors) actions.push_back(factor_action(f, false));
  std::vector<std::vector<std::size_t>> sigma;
  for (const auto& a : actions) sigma.push_back(a.image);

  report.free = true;
  for_each_join_simplex(actions, std::nullopt, [&](const std::vector<std::size_t>& t) {
    ++report.simplices_checked;
    if (report.witness) return;
    if (image_of(actions, sigma, t) == t) {
      report.free = false;
      report.witness = describe_tuple(s, actions, t);
    }
  });

  const std::size_t d = situation_order(s);
  auto current = sigma;
  for (std::size_t k = 1; k < d; ++k) {
    bool free_k = true;
    for_each_join_simplex(actions, std::nullopt, [&](const std::vector<std::size_t>& t) {
      if (free_k && image_of(actions, current, t) == t) free_k = false;
    });
    report.powers.emplace_back(k, free_k);
    current = compose_images(sigma, current);
  }
  return report;
}

FreeActionReport acts_freely_on_link(const PolygonalComplex& c, const CellularAutomorphism& sigma,
                                     const std::string& v) {
  const auto it = sigma.vertex_map.find(v);
  if (it == sigma.vertex_map.end() || it->second != v) throw InvalidInput("vertex '" + v + "' is not fixed");
  Situation s;
  s.factors.push_back({c, MorseWeighting::constant(c), sigma, {}, FaceGeometry::euclidean_square, v});
  return acts_freely_on_link(s);
}

std::map<std::size_t, std::size_t> link_orbit_sizes(const Situation& s, std::optional<Polarity> only) {
  for (const auto& f : s.factors) require_automorphism(f.complex, f.sigma);
  if (moves_base_vertex(s)) throw InvalidInput("base vertex is not fixed");
  std::vector<FactorAction> actions;
  for (const auto& f : s.factors) actions.push_back(factor_action(f, only.has_value()));
  std::vector<std::vector<std::size_t>> sigma;
  for (const auto& a : actions) sigma.push_back(a.image);

  std::map<std::size_t, std::size_t> histogram;
  for_each_join_simplex(actions, only, [&](const std::vector<std::size_t>& t) {
    std::size_t size = 1;
    for (auto x = image_of(actions, sigma, t); x != t; x = image_of(actions, sigma, x)) ++size;
    ++histogram[size];
  });
  return histogram;
}

bool ModelSituationCertificate::all_passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::vector<std::string> ModelSituationCertificate::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& c : checks) {
    if (!c.passed) out.push_back(c.name);
  }
  return out;
}

const CheckResult& ModelSituationCertificate::check(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) return c;
  }
  throw InvalidInput("no check named '" + name + "'");
}

std::string qualified_edge(const Situation& s, const ProductLetter& l) {
  if (s.factors.size() == 1) return l.letter.edge;
  return std::to_string(l.factor + 1) + ":" + l.letter.edge;
}

namespace {

std::vector<ProductLetter> choose_t(const Situation& s) {
  std::optional<std::vector<ProductLetter>> best;
  std::vector<std::string> best_key;
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto& f = s.factors[i];
    const auto loop = degree_one_loop(f.complex, f.weights, f.vertex);
    if (!loop) continue;
    std::vector<ProductLetter> word;
    std::vector<std::string> key;
    for (const auto& l : loop->letters) {
      word.push_back({i, l});
      key.push_back(qualified_edge(s, word.back()) + to_token(l.sign));
    }
    if (!best || word.size() < best->size() || (word.size() == best->size() && key < best_key)) {
      best = std::move(word);
      best_key = std::move(key);
    }
  }
  return best.value_or(std::vector<ProductLetter>{});
}

}  // namespace

ModelSituationCertificate certify_model_situation(const Situation& s) {
  if (s.factors.empty()) throw InvalidInput("situation has no factors");
  ModelSituationCertificate cert;
  auto add = [&](const std::string& name, bool ok, std::string detail) {
    cert.checks.push_back({name, ok, std::move(detail)});
  };

  bool complexes_ok = true;
  for (const auto& f : s.factors) complexes_ok = complexes_ok && validate_complex(f.complex).empty();
  if (!complexes_ok) {
    for (const char* name : kCheckNames) add(name, false, "invalid complex");
    return cert;
  }

  // npc
  try {
    std::vector<CurvatureCertificate> certs;
    for (const auto& f : s.factors) certs.push_back(certify_2complex(f.complex, f.angles, f.geometry));
    cert.curvature = certify_product(s.product(), certs);
    const bool ok = cert.curvature->verdict != CurvatureCertificate::Verdict::fail;
    std::string detail = std::string(to_string(cert.curvature->verdict)) + " via " +
                         to_string(cert.curvature->rule);
    if (cert.curvature->witness) {
      detail += "; short link cycle at vertex " + cert.curvature->witness->vertex + " of angle " +
                to_string(cert.curvature->witness->cycle.angle) + " pi";
    }
    add("npc", ok, detail);
  } catch (const InvalidInput& e) {
    add("npc", false, e.what());
  }

  // morse_valid
  {
    std::string detail;
    for (std::size_t i = 0; i < s.factors.size() && detail.empty(); ++i) {
      const auto d = validate_morse(s.factors[i].complex, s.factors[i].weights);
      if (!d.empty()) detail = d.front();
    }
    add("morse_valid", detail.empty(), detail.empty() ? "weights nonzero, faces zero-sum and unimodal" : detail);
  }

  // epi_onto_Z
  try {
    const long index = morse_image_index(s.product(), s.weightings());
    add("epi_onto_Z", index == 1, "image of f_* has index " + std::to_string(index) + " in Z");
  } catch (const InvalidInput& e) {
    add("epi_onto_Z", false, e.what());
  }

  bool automorphisms_ok = true;
  std::string automorphism_problem;
  for (const auto& f : s.factors) {
    const auto d = validate_automorphism(f.complex, f.sigma);
    if (!d.empty() && automorphisms_ok) {
      automorphisms_ok = false;
      automorphism_problem = "invalid automorphism: " + d.front();
    }
  }

  // equivariant
  {
    bool ok = automorphisms_ok;
    for (const auto& f : s.factors) ok = ok && is_weight_equivariant(f.sigma, f.weights);
    add("equivariant", ok, !automorphisms_ok ? automorphism_problem
                                             : (ok ? "w(sigma e) = +-w(e) on every edge"
                                                   : "some edge weight is not preserved by sigma"));
  }

  // fixes_v
  const bool fixed = !moves_base_vertex(s);
  add("fixes_v", fixed, fixed ? "sigma fixes the base vertex" : "sigma moves the base vertex");

  // free_on_link
  if (!automorphisms_ok) {
    add("free_on_link", false, automorphism_problem);
  } else {
    cert.action = acts_freely_on_link(s);
    std::string detail = cert.action->free ? "no invariant simplex among " +
                                                 std::to_string(cert.action->simplices_checked)
                                           : "invariant simplex: " + cert.action->witness.value_or("?");
    add("free_on_link", cert.action->free, detail);
  }

  // finite_order
  if (!automorphisms_ok) {
    add("finite_order", false, automorphism_problem);
  } else {
    cert.order = situation_order(s);
    add("finite_order", true, "sigma has order " + std::to_string(cert.order));
  }

  if (!cert.all_passed()) return cert;

  cert.chosen_t = choose_t(s);
  long degree = 0;
  for (const auto& l : cert.chosen_t) degree += signed_weight(s.factors[l.factor].weights, l.letter);
  if (cert.chosen_t.empty() || degree != 1) {
    cert.checks[2].passed = false;
    cert.checks[2].detail += "; no loop of degree 1 found";
    return cert;
  }

  WitnessFamily family;
  family.formula = "n -> t^n sigma t^-n";
  family.height_rule = "unique fixed vertex t^n(x0) at height f(x0) + n";
  for (long n = 0; n < 6; ++n) family.sample_heights.push_back(n * degree);
  cert.witness_family = std::move(family);
  cert.conclusion = "K ⋊ ⟨σ⟩ contains infinitely many conjugacy classes of elements of order " +
                    std::to_string(cert.order);
  return cert;
}

bool replay_certificate(const Situation& s, const ModelSituationCertificate& cert) {
  const auto again = certify_model_situation(s);
  if (again.checks.size() != cert.checks.size()) return false;
  for (std::size_t i = 0; i < cert.checks.size(); ++i) {
    if (again.checks[i].name != cert.checks[i].name || again.checks[i].passed != cert.checks[i].passed) {
      return false;
    }
  }
  if (again.order != cert.order || again.conclusion != cert.conclusion) return false;
  long degree = 0;
  for (const auto& l : cert.chosen_t) {
    if (l.factor >= s.factors.size()) return false;
    degree += signed_weight(s.factors[l.factor].weights, l.letter);
  }
  if (cert.conclusion && degree != 1) return false;
  if (cert.witness_family) {
    std::set<long> heights(cert.witness_family->sample_heights.begin(), cert.witness_family->sample_heights.end());
    if (heights.size() != cert.witness_family->sample_heights.size()) return false;
  }
  return true;
}

}  // namespace morsecert
