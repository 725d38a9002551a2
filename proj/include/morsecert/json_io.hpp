#pragma once

#include "morsecert/complex.hpp"
#include "morsecert/curvature.hpp"
#include "morsecert/free_aut.hpp"
#include "morsecert/group_models.hpp"
#include "morsecert/link.hpp"
#include "morsecert/morse.hpp"
#include "morsecert/pingpong.hpp"
#include "morsecert/symmetry.hpp"

#include <json.hpp>

#include <string>

namespace morsecert {

using Json = nlohmann::json;

/// All readers throw InvalidInput on malformed documents.

Json to_json(const PolygonalComplex& c);
PolygonalComplex complex_from_json(const Json& j);

Json to_json(const MorseWeighting& w);  // {"a": 1, ...}
MorseWeighting weights_from_json(const Json& j);

Json to_json(const CellularAutomorphism& s);
CellularAutomorphism automorphism_from_json(const Json& j);

Json to_json(const CornerAngleAssignment& a);
CornerAngleAssignment angles_from_json(const Json& j);

Json to_json(const Situation& s);
Situation situation_from_json(const Json& j);

Json to_json(const HomologyProfile& h);
Json to_json(const LinkComplex& l);
Json to_json(const LinkAnalysis& a);
Json to_json(const FinitenessReport& r);
Json to_json(const CurvatureCertificate& c);
Json to_json(const FreeActionReport& r);
Json to_json(const Situation& s, const ModelSituationCertificate& c);

Json to_json(const DoubledFreeElement& g);  // {"coords": ["a^3 b^-3", "1"], "flip": true}
DoubledFreeElement element_from_json(const Json& j);
Json to_json(const ConjugacyVerdict& v);

Json to_json(const FreeGroupEndo& e);  // {"rank": k, "images": {"x1": "x1 x1 x2", ...}}
FreeGroupEndo endo_from_json(const Json& j);
Json to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);
Json to_json(const RelationReport& r);
Json to_json(const PingPongCertificate& c);
PingPongCertificate pingpong_from_json(const Json& j);

/// Parses a file; InvalidInput on IO or syntax errors.
Json read_json_file(const std::string& path);
Situation read_situation_file(const std::string& path);

/// Stable rendering: sorted keys, two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace morsecert
