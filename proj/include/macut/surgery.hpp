#pragma once

#include <map>
#include <string>
#include <vector>

#include "macut/homology.hpp"
#include "macut/moment_angle.hpp"
#include "macut/polytope.hpp"

namespace macut {

/// Cohomology of W = ∂[(Z − int Dᵈ) × D²] from that of a closed orientable
/// d-manifold Z: Hᵏ(W) = Hᵏ(Z) ⊕ Hᵏ⁻¹(Z) less one free class in degree 1
/// and one in degree d.
GradedGroups boundary_product_groups(const GradedGroups& closed_manifold, int d);

/// ♯_{j=1}^{m-n} C(m-n, j) S^{j+2} × S^{m+n-j-1}.
GradedGroups sphere_product_sum_groups(int m, int n);

/// Connected sum of closed orientable d-manifolds.
GradedGroups connected_sum_groups(const std::vector<GradedGroups>& parts, int d);

/// Predicted H*(Z(P_v)) built only from P's own data.
GradedGroups predict_cut_betti(const SimplePolytope& polytope, const SweepOptions& options = {});

struct DegreeDiff {
  Group lhs;
  Group rhs;
  friend bool operator==(const DegreeDiff&, const DegreeDiff&) = default;
};

/// Degrees where the two sides differ in rank or torsion.
std::map<int, DegreeDiff> degree_diff(const GradedGroups& lhs, const GradedGroups& rhs);

/// Cohomology-level comparison of Z(P_v) with the surgery prediction.
struct TheoremReport {
  SimplePolytope polytope;
  int vertex;
  GradedGroups lhs;  // computed from K_{P_v}
  GradedGroups rhs;  // predicted from P
  bool match;
  std::map<int, DegreeDiff> diff;  // only degrees that disagree
};

TheoremReport verify_cut_theorem(const SimplePolytope& polytope, int vertex,
                                 const SweepOptions& options = {});

}  // namespace macut
