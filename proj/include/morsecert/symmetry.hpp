#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/curvature.hpp"
#include "morsecert/link.hpp"
#include "morsecert/morse.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace morsecert {

struct EdgeImage {
  std::string edge;
  Sign sign = Sign::plus;
  friend bool operator==(const EdgeImage&, const EdgeImage&) = default;
};

/// Image of a face. With reflected == false, corner k goes to corner
/// (k + rotation) mod n and the image of boundary letter k is letter
/// (k + rotation) of the target. With reflected == true, corner k goes to
/// corner (rotation - k) mod n and the image of letter k is the inverse of
/// target letter (rotation - k - 1) mod n.
struct FaceImage {
  std::string face;
  std::size_t rotation = 0;
  bool reflected = false;
  friend bool operator==(const FaceImage&, const FaceImage&) = default;
};

struct CellularAutomorphism {
  std::map<std::string, std::string> vertex_map;
  std::map<std::string, EdgeImage> edge_map;
  std::map<std::string, FaceImage> face_map;

  static CellularAutomorphism identity(const PolygonalComplex& c);
  friend bool operator==(const CellularAutomorphism&, const CellularAutomorphism&) = default;
};

std::vector<std::string> validate_automorphism(const PolygonalComplex& c, const CellularAutomorphism& s);

/// a after b. Both must be valid on c.
CellularAutomorphism compose(const PolygonalComplex& c, const CellularAutomorphism& a,
                             const CellularAutomorphism& b);
CellularAutomorphism power(const PolygonalComplex& c, const CellularAutomorphism& s, std::size_t k);

/// Least d >= 1 with s^d the identity on vertices, oriented edges and face
/// corners. Throws InvalidInput for an invalid automorphism.
std::size_t order_of(const PolygonalComplex& c, const CellularAutomorphism& s);

bool is_weight_equivariant(const CellularAutomorphism& s, const MorseWeighting& w);

EdgeEnd end_image(const PolygonalComplex& c, const CellularAutomorphism& s, const EdgeEnd& e);
CornerRef corner_image(const PolygonalComplex& c, const CellularAutomorphism& s, const CornerRef& r);

/// One factor of a (possibly single-factor) model situation.
struct SituationFactor {
  PolygonalComplex complex;
  MorseWeighting weights;
  CellularAutomorphism sigma;
  CornerAngleAssignment angles;
  FaceGeometry geometry = FaceGeometry::euclidean_square;
  std::string vertex;
};

/// Everything Proposition-style certification needs: a formal product of
/// factors with the sum weighting, the diagonal symmetry, and the base
/// vertex tuple. A plain 2-complex is the one-factor case.
struct Situation {
  std::string name;
  std::vector<SituationFactor> factors;
  std::string notes;

  ProductComplex product() const;
  std::vector<MorseWeighting> weightings() const;
  std::vector<std::string> vertex() const;
};

/// Simplex of a product link: per factor, either nothing or one cell of the
/// factor's graph link (a vertex, or a corner edge).
struct LinkCell {
  enum class Kind { vertex, edge };
  Kind kind = Kind::vertex;
  std::size_t index = 0;
  friend bool operator==(const LinkCell&, const LinkCell&) = default;
  friend auto operator<=>(const LinkCell&, const LinkCell&) = default;
};
using JoinSimplex = std::vector<std::optional<LinkCell>>;

struct FreeActionReport {
  bool fixes_vertex = true;
  bool free = false;
  std::optional<std::string> witness;  // description of an invariant simplex
  std::size_t simplices_checked = 0;
  /// Informational: (k, whether sigma^k acts freely) for 1 <= k < order.
  std::vector<std::pair<std::size_t, bool>> powers;
};

/// Whether the diagonal symmetry leaves no simplex of the link at the base
/// vertex setwise invariant. Requires a valid automorphism in each factor.
FreeActionReport acts_freely_on_link(const Situation& s);

/// Single 2-complex convenience form. Throws InvalidInput if v is not fixed.
FreeActionReport acts_freely_on_link(const PolygonalComplex& c, const CellularAutomorphism& sigma,
                                     const std::string& v);

/// Histogram orbit size -> number of simplices over all nonempty simplices
/// of the link at the base vertex (optionally only the ascending or
/// descending sub-link).
std::map<std::size_t, std::size_t> link_orbit_sizes(const Situation& s,
                                                    std::optional<Polarity> only = std::nullopt);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct ProductLetter {
  std::size_t factor = 0;
  SignedEdge letter;
};

struct WitnessFamily {
  std::string formula;
  std::string height_rule;
  std::vector<long> sample_heights;  // height offsets for n = 0, 1, ...
};

struct ModelSituationCertificate {
  std::vector<CheckResult> checks;  // npc, morse_valid, epi_onto_Z, equivariant, fixes_v, free_on_link, finite_order
  std::size_t order = 0;
  std::vector<ProductLetter> chosen_t;
  std::optional<std::string> conclusion;
  std::optional<WitnessFamily> witness_family;
  std::optional<CurvatureCertificate> curvature;
  std::optional<FreeActionReport> action;

  bool all_passed() const;
  std::vector<std::string> failed_checks() const;
  const CheckResult& check(const std::string& name) const;
};

inline constexpr const char* kCheckNames[] = {"npc",         "morse_valid",  "epi_onto_Z",  "equivariant",
                                             "fixes_v",     "free_on_link", "finite_order"};

/// Runs every hypothesis check; the conclusion and witness family are
/// emitted only when all pass.
ModelSituationCertificate certify_model_situation(const Situation& s);

/// Re-runs each recorded check and the choice of t; true iff everything
/// reproduces.
bool replay_certificate(const Situation& s, const ModelSituationCertificate& cert);

/// Qualified edge name: the plain id for one factor, "k:id" (1-based) for more.
std::string qualified_edge(const Situation& s, const ProductLetter& l);

}  // namespace morsecert
