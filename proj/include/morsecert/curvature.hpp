#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/link.hpp"
#include "morsecert/numbers.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace morsecert {

/// Corner angles as rational multiples of pi, keyed by face id; angles[f][k]
/// is the angle at corner k of face f.
struct CornerAngleAssignment {
  std::map<std::string, std::vector<Rational>> angles;

  /// The same angle at every corner of every face.
  static CornerAngleAssignment uniform(const PolygonalComplex& c, const Rational& angle);
  const Rational& at(const std::string& face, std::size_t corner) const;
};

/// Diagnostics for missing, non-positive or >= pi angles.
std::vector<std::string> validate_angles(const PolygonalComplex& c, const CornerAngleAssignment& a);

/// The two supported metric families.
enum class FaceGeometry {
  euclidean_square,              // unit Euclidean squares, right angles
  hyperbolic_regular_right_angled  // regular right-angled hyperbolic n-gons, n >= 5
};

const char* to_string(FaceGeometry g);
FaceGeometry parse_face_geometry(const std::string& s);

/// A closed walk in a link graph: vertices v0..v_{n-1} and the corner edges
/// joining v_i to v_{i+1 mod n}.
struct LinkCycle {
  std::vector<std::size_t> vertices;
  std::vector<CornerRef> corners;
  Rational angle;  // total angle, multiple of pi
};

/// Minimal total angle over the cycles of a graph link, exactly. Empty when
/// the link is a forest. Throws InvalidInput on a join link or a missing
/// angle.
std::optional<LinkCycle> min_link_cycle_angle(const PolygonalComplex& c, const LinkComplex& link,
                                             const CornerAngleAssignment& a);

/// Re-checks that a cycle is a closed walk in the link using distinct
/// corners, and recomputes its angle.
std::optional<Rational> replay_cycle(const PolygonalComplex& c, const LinkComplex& link,
                                     const CornerAngleAssignment& a, const LinkCycle& cycle);

struct CurvatureCertificate {
  enum class Verdict { npc, cat_minus_one, fail };
  enum class Rule { girth_2pi, flag, product_of_npc };

  Verdict verdict = Verdict::fail;
  Rule rule = Rule::girth_2pi;
  /// Minimum over vertices; empty means no cycle anywhere (infinity).
  std::optional<Rational> min_cycle_angle;
  /// Present iff verdict == fail.
  struct Witness {
    std::size_t factor = 0;
    std::string vertex;
    LinkCycle cycle;
    std::vector<std::string> labels;  // link vertex labels along the cycle
  };
  std::optional<Witness> witness;
};

const char* to_string(CurvatureCertificate::Verdict v);
const char* to_string(CurvatureCertificate::Rule r);

/// Link condition at every vertex: NPC iff every link cycle has angle >= 2pi;
/// upgraded to CAT(-1) for regular right-angled hyperbolic faces. Throws
/// InvalidInput when the declared geometry does not match the faces.
CurvatureCertificate certify_2complex(const PolygonalComplex& c, const CornerAngleAssignment& a,
                                      FaceGeometry geometry);

/// Product rule: NPC iff every factor is NPC; never CAT(-1) with two or more
/// nontrivial factors. Throws InvalidInput on an arity mismatch.
CurvatureCertificate certify_product(const ProductComplex& p,
                                     const std::vector<CurvatureCertificate>& factor_certs);

struct FlagResult {
  bool flag = true;
  std::vector<int> witness;  // minimal clique not spanning a simplex
};

FlagResult is_flag(const SimplicialComplex& s);

}  // namespace morsecert
