#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace macut {

/// Sorted, duplicate-free list of vertex indices.
using Simplex = std::vector<int>;

/**
 * Finite abstract simplicial complex stored by its maximal faces.
 *
 * Two degenerate complexes are kept apart: the void complex has no faces at
 * all (no maximal faces), while the (-1)-sphere has exactly the empty face
 * (maximal faces == {{}}). Vertices that appear in no face are allowed.
 *
 * Construction canonicalizes: faces are sorted and deduplicated, faces that
 * sit inside another face are pruned, and the list of maximal faces is sorted
 * lexicographically. Two complexes compare equal iff they have the same
 * vertex count and face set.
 */
class SimplicialComplex {
 public:
  SimplicialComplex() = default;
  SimplicialComplex(int vertex_count, std::vector<Simplex> faces);

  int vertex_count() const noexcept { return vertex_count_; }
  const std::vector<Simplex>& maximal_faces() const noexcept { return maximal_faces_; }

  bool is_void() const noexcept { return maximal_faces_.empty(); }

  /// Largest face dimension; -1 for the (-1)-sphere, -2 for the void complex.
  int dimension() const noexcept;

  /// Maximal faces as vertex bitmasks. Requires vertex_count() <= 64.
  std::vector<std::uint64_t> maximal_face_masks() const;

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  int vertex_count_ = 0;
  std::vector<Simplex> maximal_faces_;
};

/// Δⁿ with its interior: one maximal face on n+1 vertices.
SimplicialComplex full_simplex(int n);

/// ∂Δⁿ, a triangulated (n-1)-sphere. Requires n >= 1.
SimplicialComplex boundary_complex(int n);

bool is_face(const SimplicialComplex& complex, std::span<const int> simplex);

/// All faces with d+1 vertices in lexicographic order.
std::vector<Simplex> faces_of_dimension(const SimplicialComplex& complex, int d);

/// Every face of every dimension, grouped by dimension starting at -1.
/// Entry 0 holds the empty face (absent for the void complex).
std::vector<std::vector<Simplex>> all_faces(const SimplicialComplex& complex);

/// Restriction K_J, relabeled 0..|J|-1 preserving order. J = {} gives the
/// void complex; a J that meets no face gives the (-1)-sphere on |J| ghosts.
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, std::span<const int> subset);

/// Same as above with J given as a bitmask (vertex_count() <= 64).
SimplicialComplex full_subcomplex(const SimplicialComplex& complex, std::uint64_t subset_mask);

/// K ♯_σ ∂Δⁿ: replace the maximal face σ by the cone over ∂σ on a new vertex
/// numbered vertex_count(). This is the dual of cutting off a polytope vertex.
/// K must be pure.
SimplicialComplex connected_sum_at_facet(const SimplicialComplex& complex,
                                         std::span<const int> facet);

/// K1 * K2 with K2's vertices shifted past K1's.
SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs);

}  // namespace macut
