#pragma once

#include <json.hpp>

#include "macut/homology.hpp"
#include "macut/isotopy.hpp"
#include "macut/moment_angle.hpp"
#include "macut/polytope.hpp"
#include "macut/simplicial_complex.hpp"
#include "macut/surgery.hpp"

namespace macut {

/// Key order follows insertion, so dumps are byte-stable.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"vertices": m, "maximal_faces": [[...], ...]}
Json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const Json& j);

// {"dim": n, "facets": m, "vertex_facets": [[...], ...]}
Json to_json(const SimplePolytope& polytope);
SimplePolytope polytope_from_json(const Json& j);

// {"<degree>": {"rank": r, "torsion": [...]}, ...}
Json to_json(const GradedGroups& groups);
GradedGroups graded_groups_from_json(const Json& j);

Json to_json(const Group& group);
Json to_json(const TheoremReport& report);
Json to_json(const isotopy::ProbeReport& report);

/// Torsion list as "2;4" (empty string when torsion-free).
std::string torsion_string(const Group& group);

}  // namespace macut
