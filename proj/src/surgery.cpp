#include "macut/surgery.hpp"

#include <set>
#include <stdexcept>
#include <string>

namespace macut {

namespace {

void require_closed_orientable(const GradedGroups& g, int d, const char* who) {
  if (d < 2) throw std::invalid_argument(std::string(who) + ": dimension must be >= 2");
  for (int degree : {0, d}) {
    if (g.at(degree) != Group{1, {}})
      throw std::invalid_argument(std::string(who) + ": expected Z in degree " +
                                  std::to_string(degree));
  }
}

std::vector<long> binomial_row(int n) {
  std::vector<long> row(static_cast<std::size_t>(n) + 1, 1);
  for (int k = 1; k < n; ++k) row[static_cast<std::size_t>(k)] = row[static_cast<std::size_t>(k) - 1] * (n - k + 1) / k;
  return row;
}

}  // namespace

GradedGroups boundary_product_groups(const GradedGroups& closed_manifold, int d) {
  require_closed_orientable(closed_manifold, d, "boundary_product_groups");
  if (!closed_manifold.at(1).torsion.empty())
    throw std::invalid_argument("boundary_product_groups: torsion in degree 1");

  GradedGroups out;
  for (const auto& [degree, g] : closed_manifold.degrees()) {
    out.add(degree, g);
    out.add(degree + 1, g);
  }
  out.remove_rank(1, 1);  // 1 ⊗ [S¹]
  out.remove_rank(d, 1);  // [Z] ⊗ 1
  return out;
}

GradedGroups sphere_product_sum_groups(int m, int n) {
  if (n < 1 || m <= n) throw std::invalid_argument("sphere_product_sum_groups: need m > n >= 1");
  const int k = m - n;
  const auto binom = binomial_row(k);
  GradedGroups out;
  out.add_rank(0, 1);
  out.add_rank(m + n + 1, 1);
  for (int j = 1; j <= k; ++j) {
    const long copies = binom[static_cast<std::size_t>(j)];
    out.add_rank(j + 2, copies);
    out.add_rank(m + n - j - 1, copies);
  }
  return out;
}

GradedGroups connected_sum_groups(const std::vector<GradedGroups>& parts, int d) {
  if (parts.empty()) throw std::invalid_argument("connected_sum_groups: empty list");
  GradedGroups out;
  out.add_rank(0, 1);
  out.add_rank(d, 1);
  for (const auto& part : parts) {
    require_closed_orientable(part, d, "connected_sum_groups");
    for (const auto& [degree, g] : part.degrees()) {
      if (degree < 0 || degree > d)
        throw std::invalid_argument("connected_sum_groups: degree " + std::to_string(degree) +
                                    " outside [0, " + std::to_string(d) + "]");
      if (degree != 0 && degree != d) out.add(degree, g);
    }
  }
  return out;
}

GradedGroups predict_cut_betti(const SimplePolytope& polytope, const SweepOptions& options) {
  const int m = polytope.facet_count();
  const int n = polytope.dim();
  if (m <= n) throw std::invalid_argument("predict_cut_betti: need m > n");
  const auto z = moment_angle_cohomology(dual_complex(polytope), options);
  return connected_sum_groups(
      {boundary_product_groups(z, m + n), sphere_product_sum_groups(m, n)}, m + n + 1);
}

std::map<int, DegreeDiff> degree_diff(const GradedGroups& lhs, const GradedGroups& rhs) {
  std::set<int> degrees;
  for (const auto& [d, g] : lhs.degrees()) degrees.insert(d);
  for (const auto& [d, g] : rhs.degrees()) degrees.insert(d);
  std::map<int, DegreeDiff> out;
  for (int d : degrees)
    if (lhs.at(d) != rhs.at(d)) out[d] = {lhs.at(d), rhs.at(d)};
  return out;
}

TheoremReport verify_cut_theorem(const SimplePolytope& polytope, int vertex,
                                 const SweepOptions& options) {
  const auto cut = cut_vertex(polytope, vertex);
  TheoremReport report{polytope, vertex,
                       moment_angle_cohomology(dual_complex(cut), options),
                       predict_cut_betti(polytope, options), false, {}};
  report.diff = degree_diff(report.lhs, report.rhs);
  report.match = report.diff.empty();
  return report;
}

}  // namespace macut
