#pragma once

#include <map>
#include <utility>
#include <vector>

#include "macut/integer_matrix.hpp"
#include "macut/simplicial_complex.hpp"

namespace macut {

/// One finitely generated abelian group: Z^rank ⊕ Z/t1 ⊕ ... ⊕ Z/tk with
/// t1 | t2 | ... | tk and every ti > 1.
struct Group {
  long rank = 0;
  std::vector<Integer> torsion;

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  friend bool operator==(const Group&, const Group&) = default;
};

/// Rewrites a list of cyclic orders as invariant factors of their direct sum.
std::vector<Integer> normalize_torsion(std::vector<Integer> orders);

/**
 * Graded abelian group, degree -> Group. Degree -1 is allowed. Zero groups
 * are never stored, so two values are equal iff they agree in every degree.
 */
class GradedGroups {
 public:
  GradedGroups() = default;

  const Group& at(int degree) const;
  long rank(int degree) const { return at(degree).rank; }
  const std::map<int, Group>& degrees() const& noexcept { return groups_; }
  std::map<int, Group> degrees() && { return std::move(groups_); }
  bool empty() const noexcept { return groups_.empty(); }

  /// Direct-sum `g` into the given degree.
  void add(int degree, const Group& g);
  void add_rank(int degree, long r) { add(degree, Group{r, {}}); }
  /// Removes `r` free summands; throws if the degree has fewer.
  void remove_rank(int degree, long r);

  GradedGroups& operator+=(const GradedGroups& other);

  friend bool operator==(const GradedGroups&, const GradedGroups&) = default;

 private:
  std::map<int, Group> groups_;
};

/// ∂_d from d-faces to (d-1)-faces, both in lexicographic order. Removing
/// the i-th vertex (0-based) contributes (-1)^i. d = 0 is the augmentation.
IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int d);

/// Reduced integral homology in degrees >= -1. The void complex is treated
/// like the (-1)-sphere: Z in degree -1.
GradedGroups reduced_homology(const SimplicialComplex& complex);

/// Reduced integral cohomology by universal coefficients: free ranks stay in
/// the same degree, torsion of H̃_q moves to H̃^{q+1}.
GradedGroups reduced_cohomology(const SimplicialComplex& complex);
GradedGroups cohomology_from_homology(const GradedGroups& homology);

}  // namespace macut
