#include "macut/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "macut/errors.hpp"

namespace macut {

SimplePolytope::SimplePolytope(int dim, int facet_count, std::vector<Simplex> vertex_facets)
    : dim_(dim), facet_count_(facet_count), vertex_facets_(std::move(vertex_facets)) {
  if (dim_ < 1) throw InvariantError("dimension", "dim must be >= 1");
  if (facet_count_ < dim_ + 1)
    throw InvariantError("facet_count_bound", "need m >= n + 1, got m = " +
                                                  std::to_string(facet_count_) +
                                                  ", n = " + std::to_string(dim_));

  std::vector<bool> covered(static_cast<std::size_t>(facet_count_), false);
  for (auto& record : vertex_facets_) {
    std::sort(record.begin(), record.end());
    if (std::adjacent_find(record.begin(), record.end()) != record.end() ||
        static_cast<int>(record.size()) != dim_)
      throw InvariantError("simplicity", "every vertex must lie on exactly " +
                                             std::to_string(dim_) + " distinct facets");
    for (int f : record) {
      if (f < 0 || f >= facet_count_)
        throw InvariantError("facet_range", "facet index " + std::to_string(f) + " out of range");
      covered[static_cast<std::size_t>(f)] = true;
    }
  }
  if (std::set<Simplex>(vertex_facets_.begin(), vertex_facets_.end()).size() !=
      vertex_facets_.size())
    throw InvariantError("distinct_vertices", "vertex records must be pairwise distinct");
  if (std::find(covered.begin(), covered.end(), false) != covered.end())
    throw InvariantError("facet_coverage", "every facet must contain a vertex");
}

const Simplex& SimplePolytope::vertex(int v) const {
  if (v < 0 || v >= vertex_count())
    throw std::out_of_range("vertex index " + std::to_string(v) + " out of range");
  return vertex_facets_[static_cast<std::size_t>(v)];
}

SimplePolytope simplex_polytope(int n) {
  if (n < 1) throw std::invalid_argument("simplex_polytope: n must be >= 1");
  std::vector<Simplex> vertices;
  for (int omit = 0; omit <= n; ++omit) {
    Simplex record;
    for (int f = 0; f <= n; ++f)
      if (f != omit) record.push_back(f);
    vertices.push_back(std::move(record));
  }
  return {n, n + 1, std::move(vertices)};
}

SimplePolytope polygon(int m) {
  if (m < 3) throw std::invalid_argument("polygon: m must be >= 3");
  std::vector<Simplex> vertices;
  for (int i = 0; i < m; ++i) vertices.push_back({i, (i + 1) % m});
  return {2, m, std::move(vertices)};
}

SimplePolytope product(const SimplePolytope& lhs, const SimplePolytope& rhs) {
  std::vector<Simplex> vertices;
  for (const auto& a : lhs.vertex_facets()) {
    for (const auto& b : rhs.vertex_facets()) {
      Simplex record = a;
      for (int f : b) record.push_back(f + lhs.facet_count());
      vertices.push_back(std::move(record));
    }
  }
  return {lhs.dim() + rhs.dim(), lhs.facet_count() + rhs.facet_count(), std::move(vertices)};
}

SimplePolytope cube(int n) {
  if (n < 1) throw std::invalid_argument("cube: n must be >= 1");
  auto result = simplex_polytope(1);
  for (int i = 1; i < n; ++i) result = product(result, simplex_polytope(1));
  return result;
}

SimplicialComplex dual_complex(const SimplePolytope& polytope) {
  return SimplicialComplex(polytope.facet_count(), polytope.vertex_facets());
}

SimplePolytope cut_vertex(const SimplePolytope& polytope, int v) {
  const Simplex& cut = polytope.vertex(v);
  if (polytope.dim() < 2)
    throw std::invalid_argument("cut_vertex: truncating a segment adds no facet; need dim >= 2");
  const int new_facet = polytope.facet_count();

  std::vector<Simplex> vertices;
  for (int u = 0; u < polytope.vertex_count(); ++u)
    if (u != v) vertices.push_back(polytope.vertex(u));
  for (int dropped : cut) {
    Simplex record;
    for (int f : cut)
      if (f != dropped) record.push_back(f);
    record.push_back(new_facet);
    vertices.push_back(std::move(record));
  }
  return {polytope.dim(), new_facet + 1, std::move(vertices)};
}

}  // namespace macut
