#include "macut/serialize.hpp"

#include <string>

#include "macut/errors.hpp"

namespace macut {

namespace {

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InvariantError("schema", std::string("missing key \"") + key + "\"");
  return j.at(key);
}

std::vector<Simplex> simplex_list(const Json& j, const char* key) {
  const Json& list = require(j, key);
  if (!list.is_array()) throw InvariantError("schema", std::string(key) + " must be an array");
  std::vector<Simplex> out;
  for (const auto& face : list) {
    if (!face.is_array()) throw InvariantError("schema", std::string(key) + " entries must be arrays");
    out.push_back(face.get<Simplex>());
  }
  return out;
}

Json integer_to_json(const Integer& x) {
  if (x.fits_slong_p()) return x.get_si();
  return x.get_str();
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw InvariantError("schema", "torsion coefficients must be integers");
}

}  // namespace

Json to_json(const SimplicialComplex& complex) {
  return Json{{"vertices", complex.vertex_count()}, {"maximal_faces", complex.maximal_faces()}};
}

SimplicialComplex complex_from_json(const Json& j) {
  const Json& vertices = require(j, "vertices");
  if (!vertices.is_number_integer()) throw InvariantError("schema", "vertices must be an integer");
  return SimplicialComplex(vertices.get<int>(), simplex_list(j, "maximal_faces"));
}

Json to_json(const SimplePolytope& polytope) {
  return Json{{"dim", polytope.dim()},
              {"facets", polytope.facet_count()},
              {"vertex_facets", polytope.vertex_facets()}};
}

SimplePolytope polytope_from_json(const Json& j) {
  const Json& dim = require(j, "dim");
  const Json& facets = require(j, "facets");
  if (!dim.is_number_integer() || !facets.is_number_integer())
    throw InvariantError("schema", "dim and facets must be integers");
  return {dim.get<int>(), facets.get<int>(), simplex_list(j, "vertex_facets")};
}

Json to_json(const Group& group) {
  Json torsion = Json::array();
  for (const auto& t : group.torsion) torsion.push_back(integer_to_json(t));
  return Json{{"rank", group.rank}, {"torsion", torsion}};
}

Json to_json(const GradedGroups& groups) {
  Json out = Json::object();
  for (const auto& [degree, g] : groups.degrees()) out[std::to_string(degree)] = to_json(g);
  return out;
}

GradedGroups graded_groups_from_json(const Json& j) {
  if (!j.is_object()) throw InvariantError("schema", "graded groups must be an object");
  GradedGroups out;
  for (const auto& [key, value] : j.items()) {
    Group g;
    g.rank = require(value, "rank").get<long>();
    std::vector<Integer> torsion;
    for (const auto& t : require(value, "torsion")) torsion.push_back(integer_from_json(t));
    g.torsion = normalize_torsion(std::move(torsion));
    out.add(std::stoi(key), g);
  }
  return out;
}

Json to_json(const TheoremReport& report) {
  Json diff = Json::object();
  for (const auto& [degree, d] : report.diff)
    diff[std::to_string(degree)] = Json{{"lhs", to_json(d.lhs)}, {"rhs", to_json(d.rhs)}};
  return Json{{"polytope", to_json(report.polytope)},
              {"vertex", report.vertex},
              {"level", "cohomology"},
              {"lhs", to_json(report.lhs)},
              {"rhs", to_json(report.rhs)},
              {"match", report.match},
              {"diff", diff}};
}

Json to_json(const isotopy::ProbeReport& report) {
  return Json{{"samples", report.samples},
              {"violations", report.violations},
              {"min_separation", report.min_separation},
              {"passed", report.passed()}};
}

std::string torsion_string(const Group& group) {
  std::string out;
  for (const auto& t : group.torsion) {
    if (!out.empty()) out += ';';
    out += t.get_str();
  }
  return out;
}

}  // namespace macut
