#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/link.hpp"
#include "morsecert/simplicial.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace morsecert {

/// Circle-valued Morse function given by the integer degree with which each
/// edge wraps the circle.
struct MorseWeighting {
  std::map<std::string, long> weights;

  long at(const std::string& edge) const;
  /// Every edge weighted 1.
  static MorseWeighting constant(const PolygonalComplex& c, long value = 1);
  MorseWeighting negated() const;
};

/// Signed weight of a boundary letter.
long signed_weight(const MorseWeighting& w, const SignedEdge& s);

/// Per-face corner heights, anchored at 0 on corner 0. heights[f][k] is the
/// height of corner k of face f.
struct CornerHeights {
  std::vector<std::vector<long>> heights;
};

/// Empty iff every edge has a nonzero weight, every face sums to zero and
/// every face's cyclic sign pattern is unimodal (one rise run, one fall run).
std::vector<std::string> validate_morse(const PolygonalComplex& c, const MorseWeighting& w);

CornerHeights corner_heights(const PolygonalComplex& c, const MorseWeighting& w);

/// Whether f increases when leaving the base vertex along this edge-end.
bool ascends(const PolygonalComplex& c, const MorseWeighting& w, const EdgeEnd& e);

/// Full link at v with polarity tags set.
LinkComplex polarized_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v);
LinkComplex ascending_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v);
LinkComplex descending_link(const PolygonalComplex& c, const MorseWeighting& w, const std::string& v);

/// Product versions under the sum weighting.
LinkComplex polarized_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                           const std::vector<std::string>& v);
LinkComplex ascending_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                           const std::vector<std::string>& v);
LinkComplex descending_link(const ProductComplex& p, const std::vector<MorseWeighting>& w,
                            const std::vector<std::string>& v);

/// Index of f_*(pi_1) in Z, computed from a spanning tree: the gcd of the
/// degrees of the fundamental loops. 0 means the image is trivial. Throws
/// InvalidInput on a disconnected complex.
long morse_image_index(const PolygonalComplex& c, const MorseWeighting& w);
long morse_image_index(const ProductComplex& p, const std::vector<MorseWeighting>& w);

/// A loop at a base vertex, as a word of signed edges, with its degree.
struct LoopWord {
  std::vector<SignedEdge> letters;
  long degree = 0;
};

/// Shortest fundamental loop at `base` of degree exactly 1 (a degree -1
/// loop is inverted); ties broken by the non-tree edge id. Falls back to a
/// Bezout combination of fundamental loops when no single loop has degree
/// +-1. Empty when the image index is not 1.
std::optional<LoopWord> degree_one_loop(const PolygonalComplex& c, const MorseWeighting& w,
                                        const std::string& base);

/// Degree of an arbitrary signed-edge word.
long word_degree(const MorseWeighting& w, const std::vector<SignedEdge>& word);

enum class Answer { yes, no, unknown };
const char* to_string(Answer a);

struct LinkAnalysis {
  bool connected = false;
  Answer simply_connected = Answer::unknown;
  HomologyProfile homology;
  /// Verified lower bound on connectivity: -2 empty, -1 nonempty,
  /// 0 connected, k >= 1 k-connected. kContractible when acyclic and
  /// simply connected.
  int connectivity = -2;
  std::string reasoning;
};

inline constexpr int kContractible = 1 << 20;

LinkAnalysis analyze_link(const LinkComplex& l);

struct FinitenessReport {
  enum class Kind { sharp, lower_bound, infinite, inconclusive };

  LinkAnalysis ascending;
  LinkAnalysis descending;
  Kind kind = Kind::inconclusive;
  /// Sharp: type F_m but not F_{m+1}. Lower bound: at least F_m.
  int m = 0;
  std::string rule;
  std::string conclusion;
};

const char* to_string(FinitenessReport::Kind k);

FinitenessReport finiteness_report(const LinkComplex& ascending, const LinkComplex& descending);

}  // namespace morsecert
