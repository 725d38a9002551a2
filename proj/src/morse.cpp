#include "morsecert/morse.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace morsecert {

long MorseWeighting::at(const std::string& edge) const {
  const auto it = weights.find(edge);
  if (it == weights.end()) throw InvalidInput("edge '" + edge + "' has no weight");
  return it->second;
}

MorseWeighting MorseWeighting::constant(const PolygonalComplex& c, long value) {
  MorseWeighting w;
  for (const auto& e : c.edges()) w.weights[e.id] = value;
  return w;
}

MorseWeighting MorseWeighting::negated() const {
  MorseWeighting w;
  for (const auto& [e, x] : weights) w.weights[e] = -x;
  return w;
}

long signed_weight(const MorseWeighting& w, const SignedEdge& s) {
  return to_int(s.sign) * w.at(s.edge);
}

std::vector<std::string> validate_morse(const PolygonalComplex& c, const MorseWeighting& w) {
  std::vector<std::string> out;
  for (const auto& e : c.edges()) {
    const auto it = w.weights.find(e.id);
    if (it == w.weights.end()) {
      out.push_back("edge '" + e.id + "' has no weight");
    } else if (it->second == 0) {
      out.push_back("edge '" + e.id + "' has weight 0");
    }
  }
  for (const auto& [id, x] : w.weights) {
    if (!c.find_edge(id)) out.push_back("weight given for unknown edge '" + id + "'");
  }
  if (!out.empty()) return out;

  for (const auto& f : c.faces()) {
    long sum = 0;
    std::size_t falls = 0;
    const std::size_t n = f.boundary.size();
    for (std::size_t k = 0; k < n; ++k) {
      const long here = signed_weight(w, f.boundary[k]);
      const long next = signed_weight(w, f.boundary[(k + 1) % n]);
      sum += here;
      if (here > 0 && next < 0) ++falls;
    }
    if (sum != 0) {
      out.push_back("face '" + f.id + "': weights sum to " + std::to_string(sum) + ", not 0");
    }
    if (falls != 1) {
      out.push_back("face '" + f.id + "': sign pattern has " + std::to_string(falls) +
                    " rise/fall pairs, need exactly 1 (heights must be unimodal)");
    }
  }
  return out;
}

CornerHeights corner_heights(const PolygonalComplex& c, const MorseWeighting& w) {
  CornerHeights h;
  for (const auto& f : c.faces()) {
    std::vector<long> row;
    long height = 0;
    for (const auto& s : f.boundary) {
      row.push_back(height);
      height += signed_weight(w, s);
    }
    h.heights.push_back(std::move(row));
  }
  return h;
}

bool ascends(const PolygonalComplex& c, const MorseWeighting& w, const EdgeEnd& e) {
  const long x = w.at(c.edges().at(e.edge).id);
  return e.end == End::tail ? x > 0 : x < 0;
}

namespace {

void require_morse(const PolygonalComplex& c, const MorseWeighting& w) {
  require_valid(c);
  const auto d = validate_morse(c, w);
  if (!d.empty()) throw InvalidInput("invalid Morse data: " + d.front());
}

}  // namespace

LinkComplex polarized_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v) {
  require_morse(c, w);
  LinkComplex l = vertex_link(c, v);
  l.set_polarity([&](std::size_t, const EdgeEnd& e) {
    return ascends(c, w, e) ? Polarity::ascending : Polarity::descending;
  });
  return l;
}

LinkComplex ascending_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v) {
  return polarized_link(c, w, v).restrict_to(Polarity::ascending);
}

LinkComplex descending_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v) {
  return polarized_link(c, w, v).restrict_to(Polarity::descending);
}

LinkComplex polarized_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                           const std::vector<std::string>& v) {
  if (w.size() != p.arity()) throw InvalidInput("one weighting per factor required");
  for (std::size_t i = 0; i < p.arity(); ++i) require_morse(p.factors()[i], w[i]);
  LinkComplex l = product_link(p, v);
  l.set_polarity([&](std::size_t factor, const EdgeEnd& e) {
    return ascends(p.factors()[factor], w[factor], e) ? Polarity::ascending : Polarity::descending;
  });
  return l;
}

LinkComplex ascending_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                           const std::vector<std::string>& v) {
  return polarized_link(p, w, v).restrict_to(Polarity::ascending);
}

LinkComplex descending_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                            const std::vector<std::string>& v) {
  return polarized_link(p, w, v).restrict_to(Polarity::descending);
}

namespace {

struct SpanningTree {
  std::size_t root = 0;
  std::vector<long> potential;                 // degree of the tree path root -> x
  std::vector<std::vector<SignedEdge>> path;  // tree path root -> x
  std::vector<bool> tree_edge;
};

SpanningTree spanning_tree(const PolygonalComplex& c, const MorseWeighting& w, std::size_t root) {
  require_valid(c);
  const std::size_t n = c.vertices().size();
  std::vector<std::vector<std::pair<std::size_t, SignedEdge>>> adj(n);
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    const auto& e = c.edges()[i];
    const auto t = c.vertex_index(e.tail);
    const auto h = c.vertex_index(e.head);
    adj[t].push_back({h, {e.id, Sign::plus}});
    adj[h].push_back({t, {e.id, Sign::minus}});
  }
  SpanningTree tree;
  tree.root = root;
  tree.potential.assign(n, 0);
  tree.path.assign(n, {});
  tree.tree_edge.assign(c.edges().size(), false);
  std::vector<bool> seen(n, false);
  seen[root] = true;
  std::deque<std::size_t> queue{root};
  while (!queue.empty()) {
    const auto x = queue.front();
    queue.pop_front();
    for (const auto& [y, s] : adj[x]) {
      if (seen[y]) continue;
      seen[y] = true;
      tree.tree_edge[c.edge_index(s.edge)] = true;
      tree.potential[y] = tree.potential[x] + signed_weight(w, s);
      tree.path[y] = tree.path[x];
      tree.path[y].push_back(s);
      queue.push_back(y);
    }
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end()) {
    throw InvalidInput("complex is disconnected");
  }
  return tree;
}

std::vector<SignedEdge> inverse_word(const std::vector<SignedEdge>& word) {
  std::vector<SignedEdge> out;
  out.reserve(word.size());
  for (auto it = word.rbegin(); it != word.rend(); ++it) out.push_back(inverse(*it));
  return out;
}

void append_reduced(std::vector<SignedEdge>& word, const std::vector<SignedEdge>& tail) {
  for (const auto& s : tail) {
    if (!word.empty() && word.back().edge == s.edge && word.back().sign != s.sign) {
      word.pop_back();
    } else {
      word.push_back(s);
    }
  }
}

std::vector<SignedEdge> power(const std::vector<SignedEdge>& word, long k) {
  const auto base = k < 0 ? inverse_word(word) : word;
  std::vector<SignedEdge> out;
  for (long i = 0; i < std::abs(k); ++i) append_reduced(out, base);
  return out;
}

struct FundamentalLoop {
  std::string edge;
  std::vector<SignedEdge> word;
  long degree = 0;
};

std::vector<FundamentalLoop> fundamental_loops(const PolygonalComplex& c, const MorseWeighting& w,
                                               const SpanningTree& tree) {
  std::vector<FundamentalLoop> loops;
  for (std::size_t i = 0; i < c.edges().size(); ++i) {
    if (tree.tree_edge[i]) continue;
    const auto& e = c.edges()[i];
    const auto t = c.vertex_index(e.tail);
    const auto h = c.vertex_index(e.head);
    FundamentalLoop loop;
    loop.edge = e.id;
    loop.word = tree.path[t];
    append_reduced(loop.word, {{e.id, Sign::plus}});
    append_reduced(loop.word, inverse_word(tree.path[h]));
    loop.degree = tree.potential[t] + w.at(e.id) - tree.potential[h];
    loops.push_back(std::move(loop));
  }
  return loops;
}

}  // namespace

long morse_image_index(const PolygonalComplex& c, const MorseWeighting& w) {
  if (c.vertices().empty()) throw InvalidInput("complex is disconnected");
  const auto tree = spanning_tree(c, w, 0);
  long g = 0;
  for (const auto& loop : fundamental_loops(c, w, tree)) g = std::gcd(g, std::abs(loop.degree));
  return g;
}

long morse_image_index(const ProductComplex& p, const std::vector<MorseWeighting>& w) {
  if (w.size() != p.arity()) throw InvalidInput("one weighting per factor required");
  long g = 0;
  for (std::size_t i = 0; i < p.arity(); ++i) g = std::gcd(g, morse_image_index(p.factors()[i], w[i]));
  return g;
}

long word_degree(const MorseWeighting& w, const std::vector<SignedEdge>& word) {
  long d = 0;
  for (const auto& s : word) d += signed_weight(w, s);
  return d;
}

std::optional<LoopWord> degree_one_loop(const PolygonalComplex& c, const MorseWeighting& w,
                                        const std::string& base) {
  const auto tree = spanning_tree(c, w, c.vertex_index(base));
  auto loops = fundamental_loops(c, w, tree);

  const FundamentalLoop* best = nullptr;
  for (const auto& loop : loops) {
    if (std::abs(loop.degree) != 1) continue;
    if (best == nullptr || loop.word.size() < best->word.size() ||
        (loop.word.size() == best->word.size() && loop.edge < best->edge)) {
      best = &loop;
    }
  }
  if (best != nullptr) {
    LoopWord out{best->degree == 1 ? best->word : inverse_word(best->word), 1};
    return out;
  }

  // Bezout combination: keep a word whose degree is the running gcd.
  std::sort(loops.begin(), loops.end(),
            [](const FundamentalLoop& a, const FundamentalLoop& b) { return a.edge < b.edge; });
  std::vector<SignedEdge> acc;
  long g = 0;
  for (const auto& loop : loops) {
    if (loop.degree == 0) continue;
    if (g == 0) {
      acc = loop.word;
      g = loop.degree;
      continue;
    }
    // Extended Euclid on (g, d).
    long old_r = g, r = loop.degree, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    auto next = power(acc, old_s);
    append_reduced(next, power(loop.word, old_t));
    acc = std::move(next);
    g = old_r;
  }
  if (std::abs(g) != 1) return std::nullopt;
  if (g == -1) acc = inverse_word(acc);
  return LoopWord{acc, 1};
}

const char* to_string(Answer a) {
  switch (a) {
    case Answer::yes: return "yes";
    case Answer::no: return "no";
    case Answer::unknown: break;
  }
  return "unknown";
}

const char* to_string(FinitenessReport::Kind k) {
  switch (k) {
    case FinitenessReport::Kind::sharp: return "sharp";
    case FinitenessReport::Kind::lower_bound: return "lower_bound";
    case FinitenessReport::Kind::infinite: return "infinite";
    case FinitenessReport::Kind::inconclusive: break;
  }
  return "inconclusive";
}

namespace {

// First dimension with nonvanishing reduced homology, or -1 if acyclic.
int first_nonvanishing(const HomologyProfile& h) {
  for (std::size_t d = 0; d < h.groups.size(); ++d) {
    if (!h.groups[d].vanishes()) return static_cast<int>(d);
  }
  return -1;
}

}  // namespace

LinkAnalysis analyze_link(const LinkComplex& l) {
  LinkAnalysis a;
  a.homology = link_homology(l);
  if (l.vertex_count() == 0) {
    a.connectivity = -2;
    a.simply_connected = Answer::no;
    a.reasoning = "empty link";
    return a;
  }
  a.connected = a.homology.at(0).vanishes();
  if (!a.connected) {
    a.connectivity = -1;
    a.simply_connected = Answer::no;
    a.reasoning = "disconnected";
    return a;
  }

  if (l.kind() == LinkComplex::Kind::graph) {
    if (l.edge_count() + 1 == l.vertex_count()) {
      a.connectivity = kContractible;
      a.simply_connected = Answer::yes;
      a.reasoning = "connected graph that is a tree";
    } else {
      a.connectivity = 0;
      a.simply_connected = Answer::no;
      a.reasoning = "connected graph with cycles (free nontrivial fundamental group)";
    }
    return a;
  }

  // Join: conn(A * B) >= conn(A) + conn(B) + 2.
  int bound = -2;
  bool contractible_part = false;
  for (const auto& part : l.parts()) {
    const auto pa = analyze_link(part);
    if (pa.connectivity == kContractible) contractible_part = true;
    bound += pa.connectivity + 2;
  }
  if (contractible_part) {
    a.connectivity = kContractible;
    a.simply_connected = Answer::yes;
    a.reasoning = "join with a contractible factor";
    return a;
  }
  std::ostringstream why;
  why << "join connectivity bound " << bound;
  if (bound >= 1) {
    a.simply_connected = Answer::yes;
    const int first = first_nonvanishing(a.homology);
    if (first < 0) {
      a.connectivity = kContractible;
      why << "; simply connected and acyclic, hence contractible";
    } else {
      a.connectivity = std::max(bound, first - 1);
      why << "; simply connected, Hurewicz gives " << a.connectivity << "-connected";
    }
  } else if (!a.homology.at(1).vanishes()) {
    a.connectivity = 0;
    a.simply_connected = Answer::no;
    why << "; H1 nonzero so not simply connected";
  } else {
    a.connectivity = 0;
    a.simply_connected = Answer::unknown;
    why << "; simple connectivity not decided";
  }
  a.reasoning = why.str();
  return a;
}

FinitenessReport finiteness_report(const LinkComplex& ascending, const LinkComplex& descending) {
  FinitenessReport r;
  r.ascending = analyze_link(ascending);
  r.descending = analyze_link(descending);
  const int ca = r.ascending.connectivity;
  const int cd = r.descending.connectivity;
  const std::string contingent =
      " (contingent on the Bestvina-Brady finiteness theorem; the link topology is mechanically "
      "verified)";

  if (ca == -2 || cd == -2) {
    r.kind = FinitenessReport::Kind::inconclusive;
    r.rule = "empty ascending or descending link";
    r.conclusion = "no conclusion drawn";
    return r;
  }
  const int c = std::min(ca, cd);
  if (c == kContractible) {
    r.kind = FinitenessReport::Kind::infinite;
    r.m = -1;
    r.rule = "both links contractible";
    r.conclusion = "kernel is of type F_infinity" + contingent;
    return r;
  }
  r.m = c + 1;
  const bool sharp = !r.ascending.homology.at(r.m).vanishes() && !r.descending.homology.at(r.m).vanishes();
  const std::string fm = "F_" + std::to_string(r.m);
  const std::string fnext = "F_" + std::to_string(r.m + 1);
  if (sharp) {
    r.kind = FinitenessReport::Kind::sharp;
    r.rule = "both links " + std::to_string(r.m - 1) + "-connected with nonzero reduced H_" +
             std::to_string(r.m);
    r.conclusion = "kernel is of type " + fm + " but not " + fnext + contingent;
    return r;
  }
  r.kind = FinitenessReport::Kind::lower_bound;
  r.rule = "both links " + std::to_string(r.m - 1) + "-connected";
  r.conclusion = "kernel is of type " + fm + " at least" + contingent;
  if (r.ascending.simply_connected == Answer::unknown || r.descending.simply_connected == Answer::unknown) {
    auto first_or_never = [](int f) { return f < 0 ? kContractible : f; };
    const int lo = std::min(first_or_never(first_nonvanishing(r.ascending.homology)),
                            first_or_never(first_nonvanishing(r.descending.homology)));
    std::ostringstream note;
    note << "; homologically, reduced homology of both links vanishes below dimension ";
    if (lo == kContractible) {
      note << "infinity (both acyclic)";
    } else {
      note << lo;
    }
    r.conclusion += note.str();
  }
  return r;
}

}  // namespace morsecert
