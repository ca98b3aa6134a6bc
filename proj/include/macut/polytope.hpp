#pragma once

#include <vector>

#include "macut/simplicial_complex.hpp"

namespace macut {

/**
 * Combinatorial simple polytope: each vertex is recorded by the sorted set of
 * the n facets that meet there. No coordinates are kept.
 *
 * The constructor checks simplicity, distinct vertex records, facet coverage
 * and m >= n + 1; violations raise InvariantError naming the broken rule.
 * Realizability as an actual convex polytope is not checked.
 */
class SimplePolytope {
 public:
  SimplePolytope(int dim, int facet_count, std::vector<Simplex> vertex_facets);

  int dim() const noexcept { return dim_; }
  int facet_count() const noexcept { return facet_count_; }
  int vertex_count() const noexcept { return static_cast<int>(vertex_facets_.size()); }
  const std::vector<Simplex>& vertex_facets() const noexcept { return vertex_facets_; }
  const Simplex& vertex(int v) const;

  friend bool operator==(const SimplePolytope&, const SimplePolytope&) = default;

 private:
  int dim_;
  int facet_count_;
  std::vector<Simplex> vertex_facets_;
};

/// Δⁿ; vertex i lies on every facet except facet i.
SimplePolytope simplex_polytope(int n);

/// Convex m-gon; vertex i lies on facets i and i+1 (mod m).
SimplePolytope polygon(int m);

/// P × Q. Vertices are pairs in row-major order, Q's facets shifted by m_P.
SimplePolytope product(const SimplePolytope& lhs, const SimplePolytope& rhs);

/// I^n as the n-fold product of segments.
SimplePolytope cube(int n);

/// K_P: vertices are facets of P, maximal faces are P's vertex records.
SimplicialComplex dual_complex(const SimplePolytope& polytope);

/// Truncate vertex v. The new facet gets index m; v's record is replaced by
/// n new vertices (appended after the untouched ones, in the order of the
/// facets they drop). Requires dim >= 2.
SimplePolytope cut_vertex(const SimplePolytope& polytope, int v);

}  // namespace macut
