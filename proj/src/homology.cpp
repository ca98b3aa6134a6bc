#include "macut/homology.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace macut {

namespace {

const Group kZeroGroup{};

IntegerMatrix boundary_between(const std::vector<Simplex>& rows, const std::vector<Simplex>& cols) {
  IntegerMatrix out = IntegerMatrix::Zero(static_cast<Eigen::Index>(rows.size()),
                                          static_cast<Eigen::Index>(cols.size()));
  Simplex facet;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    const Simplex& s = cols[c];
    for (std::size_t drop = 0; drop < s.size(); ++drop) {
      facet.assign(s.begin(), s.end());
      facet.erase(facet.begin() + static_cast<std::ptrdiff_t>(drop));
      const auto it = std::lower_bound(rows.begin(), rows.end(), facet);
      out(it - rows.begin(), static_cast<Eigen::Index>(c)) = (drop % 2 == 0) ? 1 : -1;
    }
  }
  return out;
}

}  // namespace

std::vector<Integer> normalize_torsion(std::vector<Integer> orders) {
  std::erase_if(orders, [](const Integer& x) { return abs(x) <= 1; });
  for (auto& x : orders) x = abs(x);
  // Z/a ⊕ Z/b ≅ Z/gcd(a,b) ⊕ Z/lcm(a,b); sweeping pairs yields a divisibility chain.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      Integer g = gcd(orders[i], orders[j]);
      Integer l = orders[i] / g * orders[j];
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  }
  std::erase_if(orders, [](const Integer& x) { return x == 1; });
  std::sort(orders.begin(), orders.end());
  return orders;
}

const Group& GradedGroups::at(int degree) const {
  const auto it = groups_.find(degree);
  return it == groups_.end() ? kZeroGroup : it->second;
}

void GradedGroups::add(int degree, const Group& g) {
  if (g.rank < 0) throw std::invalid_argument("negative rank");
  if (g.is_zero()) return;
  Group& slot = groups_[degree];
  slot.rank += g.rank;
  if (!g.torsion.empty()) {
    slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
    slot.torsion = normalize_torsion(std::move(slot.torsion));
  }
  if (slot.is_zero()) groups_.erase(degree);
}

void GradedGroups::remove_rank(int degree, long r) {
  const auto it = groups_.find(degree);
  if (r < 0 || it == groups_.end() || it->second.rank < r)
    throw std::invalid_argument("cannot remove rank " + std::to_string(r) + " from degree " +
                                std::to_string(degree));
  it->second.rank -= r;
  if (it->second.is_zero()) groups_.erase(it);
}

GradedGroups& GradedGroups::operator+=(const GradedGroups& other) {
  for (const auto& [degree, g] : other.groups_) add(degree, g);
  return *this;
}

IntegerMatrix boundary_matrix(const SimplicialComplex& complex, int d) {
  if (d < 0) throw std::invalid_argument("boundary_matrix: d must be >= 0");
  return boundary_between(faces_of_dimension(complex, d - 1), faces_of_dimension(complex, d));
}

GradedGroups reduced_homology(const SimplicialComplex& complex) {
  GradedGroups out;
  if (complex.is_void()) {
    out.add_rank(-1, 1);
    return out;
  }
  // faces[i] holds the faces of dimension i - 1.
  const auto faces = all_faces(complex);
  const int top = static_cast<int>(faces.size()) - 1;

  // ranks[i], torsion[i] describe ∂ out of faces[i]; ∂ out of the empty face is zero.
  std::vector<Eigen::Index> ranks(faces.size() + 1, 0);
  std::vector<std::vector<Integer>> torsion(faces.size() + 1);
  for (int i = 1; i <= top; ++i) {
    const auto snf = smith_normal_form(boundary_between(faces[static_cast<std::size_t>(i - 1)],
                                                        faces[static_cast<std::size_t>(i)]));
    ranks[static_cast<std::size_t>(i)] = snf.rank;
    torsion[static_cast<std::size_t>(i)] = snf.diagonal;
  }
  for (int i = 0; i <= top; ++i) {
    const auto idx = static_cast<std::size_t>(i);
    Group g;
    g.rank = static_cast<long>(faces[idx].size()) - static_cast<long>(ranks[idx]) -
             static_cast<long>(ranks[idx + 1]);
    g.torsion = normalize_torsion(torsion[idx + 1]);
    out.add(i - 1, g);
  }
  return out;
}

GradedGroups cohomology_from_homology(const GradedGroups& homology) {
  GradedGroups out;
  for (const auto& [degree, g] : homology.degrees()) {
    out.add_rank(degree, g.rank);
    if (!g.torsion.empty()) out.add(degree + 1, Group{0, g.torsion});
  }
  return out;
}

GradedGroups reduced_cohomology(const SimplicialComplex& complex) {
  return cohomology_from_homology(reduced_homology(complex));
}

}  // namespace macut
