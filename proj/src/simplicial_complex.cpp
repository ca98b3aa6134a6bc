#include "macut/simplicial_complex.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>
#include <string>

#include "macut/errors.hpp"

namespace macut {

namespace {

void canonicalize(Simplex& s) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
}

void check_range(int vertex_count, std::span<const int> simplex) {
  for (int v : simplex) {
    if (v < 0 || v >= vertex_count) {
      throw InvariantError("vertex_range", "vertex " + std::to_string(v) +
                                               " outside [0, " + std::to_string(vertex_count) +
                                               ")");
    }
  }
}

// Drops every face contained in another and sorts the survivors.
std::vector<Simplex> prune_to_maximal(std::vector<Simplex> faces) {
  std::sort(faces.begin(), faces.end(), [](const Simplex& a, const Simplex& b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  std::vector<Simplex> kept;
  for (auto& f : faces) {
    const bool covered = std::any_of(kept.begin(), kept.end(), [&](const Simplex& g) {
      return std::includes(g.begin(), g.end(), f.begin(), f.end());
    });
    if (!covered) kept.push_back(std::move(f));
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

std::vector<std::uint64_t> prune_masks(std::vector<std::uint64_t> masks) {
  std::sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
    const int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<std::uint64_t> kept;
  for (auto m : masks) {
    const bool covered =
        std::any_of(kept.begin(), kept.end(), [m](std::uint64_t g) { return (m & ~g) == 0; });
    if (!covered) kept.push_back(m);
  }
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<Simplex> faces)
    : vertex_count_(vertex_count) {
  if (vertex_count < 0) throw InvariantError("vertex_range", "negative vertex count");
  for (auto& f : faces) {
    canonicalize(f);
    check_range(vertex_count, f);
  }
  maximal_faces_ = prune_to_maximal(std::move(faces));
}

int SimplicialComplex::dimension() const noexcept {
  int dim = -2;
  for (const auto& f : maximal_faces_) dim = std::max(dim, static_cast<int>(f.size()) - 1);
  return dim;
}

std::vector<std::uint64_t> SimplicialComplex::maximal_face_masks() const {
  if (vertex_count_ > 64) throw std::length_error("bitmask view needs at most 64 vertices");
  std::vector<std::uint64_t> masks;
  masks.reserve(maximal_faces_.size());
  for (const auto& f : maximal_faces_) {
    std::uint64_t m = 0;
    for (int v : f) m |= std::uint64_t{1} << v;
    masks.push_back(m);
  }
  return masks;
}

SimplicialComplex full_simplex(int n) {
  if (n < 0) throw std::invalid_argument("full_simplex: n must be >= 0");
  Simplex all(n + 1);
  for (int i = 0; i <= n; ++i) all[i] = i;
  return SimplicialComplex(n + 1, {all});
}

SimplicialComplex boundary_complex(int n) {
  if (n < 1) throw std::invalid_argument("boundary_complex: n must be >= 1");
  std::vector<Simplex> faces;
  for (int skip = 0; skip <= n; ++skip) {
    Simplex f;
    for (int i = 0; i <= n; ++i)
      if (i != skip) f.push_back(i);
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(n + 1, std::move(faces));
}

bool is_face(const SimplicialComplex& complex, std::span<const int> simplex) {
  check_range(complex.vertex_count(), simplex);
  Simplex s(simplex.begin(), simplex.end());
  canonicalize(s);
  return std::any_of(complex.maximal_faces().begin(), complex.maximal_faces().end(),
                     [&](const Simplex& f) {
                       return std::includes(f.begin(), f.end(), s.begin(), s.end());
                     });
}

std::vector<Simplex> faces_of_dimension(const SimplicialComplex& complex, int d) {
  if (d < -1) throw std::invalid_argument("faces_of_dimension: d must be >= -1");
  const std::size_t size = static_cast<std::size_t>(d + 1);
  std::set<Simplex> found;
  for (const auto& f : complex.maximal_faces()) {
    if (f.size() < size) continue;
    // Walk all size-subsets of f via a selector permutation.
    std::vector<bool> pick(f.size(), false);
    std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(size), true);
    do {
      Simplex s;
      s.reserve(size);
      for (std::size_t i = 0; i < f.size(); ++i)
        if (pick[i]) s.push_back(f[i]);
      found.insert(std::move(s));
    } while (std::prev_permutation(pick.begin(), pick.end()));
  }
  return {found.begin(), found.end()};
}

std::vector<std::vector<Simplex>> all_faces(const SimplicialComplex& complex) {
  std::vector<std::vector<Simplex>> out;
  for (int d = -1; d <= complex.dimension(); ++d) out.push_back(faces_of_dimension(complex, d));
  return out;
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, std::span<const int> subset) {
  Simplex j(subset.begin(), subset.end());
  canonicalize(j);
  check_range(complex.vertex_count(), j);
  if (j.empty()) return {};

  std::vector<int> relabel(static_cast<std::size_t>(complex.vertex_count()), -1);
  for (std::size_t i = 0; i < j.size(); ++i) relabel[static_cast<std::size_t>(j[i])] = static_cast<int>(i);

  std::vector<Simplex> faces;
  for (const auto& f : complex.maximal_faces()) {
    Simplex g;
    for (int v : f)
      if (relabel[static_cast<std::size_t>(v)] >= 0) g.push_back(relabel[static_cast<std::size_t>(v)]);
    faces.push_back(std::move(g));
  }
  // A nonempty J always has the empty face even if it meets no maximal face.
  if (faces.empty()) faces.emplace_back();
  return SimplicialComplex(static_cast<int>(j.size()), std::move(faces));
}

SimplicialComplex full_subcomplex(const SimplicialComplex& complex, std::uint64_t subset_mask) {
  const auto masks = complex.maximal_face_masks();
  if (subset_mask == 0) return {};
  if (complex.vertex_count() < 64 && (subset_mask >> complex.vertex_count()) != 0)
    throw InvariantError("vertex_range", "subset mask exceeds vertex count");

  std::vector<std::uint64_t> restricted;
  restricted.reserve(masks.size());
  for (auto m : masks) restricted.push_back(m & subset_mask);
  restricted = prune_masks(std::move(restricted));

  // Compress the surviving bits to 0..|J|-1.
  std::vector<Simplex> faces;
  faces.reserve(restricted.size());
  for (auto m : restricted) {
    Simplex f;
    int label = 0;
    for (std::uint64_t bits = subset_mask; bits != 0; bits &= bits - 1, ++label) {
      if (m & bits & (~bits + 1)) f.push_back(label);
    }
    faces.push_back(std::move(f));
  }
  return SimplicialComplex(std::popcount(subset_mask), std::move(faces));
}

SimplicialComplex connected_sum_at_facet(const SimplicialComplex& complex,
                                         std::span<const int> facet) {
  Simplex s(facet.begin(), facet.end());
  canonicalize(s);
  check_range(complex.vertex_count(), s);
  const auto& maximal = complex.maximal_faces();
  const auto it = std::find(maximal.begin(), maximal.end(), s);
  if (it == maximal.end() || s.empty())
    throw InvariantError("maximal_face", "connected sum needs a nonempty maximal face of K");
  if (maximal.size() < 2)
    throw InvariantError("maximal_face_count", "connected sum needs at least two maximal faces");
  for (const auto& f : maximal)
    if (f.size() != s.size()) throw InvariantError("purity", "connected sum needs a pure complex");

  const int apex = complex.vertex_count();
  std::vector<Simplex> faces;
  for (const auto& f : maximal)
    if (f != s) faces.push_back(f);
  for (std::size_t drop = 0; drop < s.size(); ++drop) {
    Simplex g;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (i != drop) g.push_back(s[i]);
    g.push_back(apex);
    faces.push_back(std::move(g));
  }
  return SimplicialComplex(apex + 1, std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& lhs, const SimplicialComplex& rhs) {
  if (lhs.is_void() || rhs.is_void()) throw std::invalid_argument("join: both complexes must be nonempty");
  const int shift = lhs.vertex_count();
  std::vector<Simplex> faces;
  for (const auto& f1 : lhs.maximal_faces()) {
    for (const auto& f2 : rhs.maximal_faces()) {
      Simplex g = f1;
      for (int v : f2) g.push_back(v + shift);
      faces.push_back(std::move(g));
    }
  }
  return SimplicialComplex(lhs.vertex_count() + rhs.vertex_count(), std::move(faces));
}

}  // namespace macut
