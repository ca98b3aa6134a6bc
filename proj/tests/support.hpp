// Test-only oracles and fixtures. Nothing here calls into the Hochster or
// Smith-form code paths it is used to check.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "macut/moment_angle.hpp"
#include "macut/polytope.hpp"
#include "macut/simplicial_complex.hpp"

namespace macut::testing {

inline SimplicialComplex four_cycle() { return SimplicialComplex(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }

inline SimplicialComplex five_cycle() {
  return SimplicialComplex(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
}

/// Minimal 6-vertex triangulation of the real projective plane.
inline SimplicialComplex rp2() {
  return SimplicialComplex(6, {{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 1, 5},
                               {1, 2, 4}, {2, 3, 5}, {1, 3, 4}, {2, 4, 5}, {1, 3, 5}});
}

inline SimplicialComplex relabel(const SimplicialComplex& k, const std::vector<int>& perm) {
  std::vector<Simplex> faces;
  for (const auto& f : k.maximal_faces()) {
    Simplex g;
    for (int v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
    faces.push_back(g);
  }
  return SimplicialComplex(k.vertex_count(), faces);
}

/// Brute force over all vertex permutations; fine for <= 8 vertices.
inline bool isomorphic(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.vertex_count() != b.vertex_count() || a.maximal_faces().size() != b.maximal_faces().size())
    return false;
  std::vector<int> perm(static_cast<std::size_t>(a.vertex_count()));
  std::iota(perm.begin(), perm.end(), 0);
  do {
    if (relabel(a, perm) == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline bool isomorphic(const SimplePolytope& a, const SimplePolytope& b) {
  return a.dim() == b.dim() && a.vertex_count() == b.vertex_count() &&
         isomorphic(dual_complex(a), dual_complex(b));
}

/// Rank of an integer matrix over F_p by plain elimination.
inline long rank_mod_p(std::vector<std::vector<std::int64_t>> a, std::int64_t p = 1000000007) {
  const auto pow_mod = [p](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) r = static_cast<std::int64_t>((__int128)r * b % p);
      b = static_cast<std::int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return r;
  };
  for (auto& row : a)
    for (auto& x : row) x = ((x % p) + p) % p;
  long rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && static_cast<std::size_t>(rank) < a.size(); ++c) {
    std::size_t pivot = static_cast<std::size_t>(rank);
    while (pivot < a.size() && a[pivot][c] == 0) ++pivot;
    if (pivot == a.size()) continue;
    std::swap(a[pivot], a[static_cast<std::size_t>(rank)]);
    auto& prow = a[static_cast<std::size_t>(rank)];
    const std::int64_t inv = pow_mod(prow[c], p - 2);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == static_cast<std::size_t>(rank) || a[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[r][c] * inv % p);
      for (std::size_t j = c; j < cols; ++j)
        a[r][j] = static_cast<std::int64_t>(((a[r][j] - (__int128)f * prow[j]) % p + p) % p);
    }
    ++rank;
  }
  return rank;
}

/**
 * Betti numbers of Z_K from its cellular chains: each coordinate disk is a
 * 0-cell 1, a 1-cell T and a 2-cell D with ∂D = T. A cell of Z_K picks D on a
 * face σ of K, T on a set disjoint from σ, and 1 elsewhere; the boundary is
 * the Leibniz rule with Koszul signs. Cost is 3^m, so keep m small.
 */
inline PoincarePolynomial cellular_betti(const SimplicialComplex& k) {
  const int m = k.vertex_count();
  const auto masks = k.maximal_face_masks();
  const auto is_face_mask = [&](std::uint32_t s) {
    return std::any_of(masks.begin(), masks.end(), [s](std::uint64_t f) { return (s & ~f) == 0; });
  };
  struct Cell {
    std::uint32_t disk, circle;
  };
  std::map<int, std::vector<Cell>> by_degree;
  for (std::uint32_t disk = 0; disk < (1u << m); ++disk) {
    if (!is_face_mask(disk)) continue;
    const std::uint32_t rest = ((1u << m) - 1) & ~disk;
    for (std::uint32_t circle = rest;; circle = (circle - 1) & rest) {
      by_degree[2 * __builtin_popcount(disk) + __builtin_popcount(circle)].push_back({disk, circle});
      if (circle == 0) break;
    }
  }
  const auto index_of = [&](int degree) {
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::size_t> idx;
    for (std::size_t i = 0; i < by_degree[degree].size(); ++i)
      idx[{by_degree[degree][i].disk, by_degree[degree][i].circle}] = i;
    return idx;
  };
  std::map<int, long> boundary_rank;
  for (const auto& [degree, cells] : by_degree) {
    if (degree == 0 || !by_degree.count(degree - 1)) continue;
    const auto idx = index_of(degree - 1);
    std::vector<std::vector<std::int64_t>> mat(by_degree[degree - 1].size(),
                                               std::vector<std::int64_t>(cells.size(), 0));
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const auto [disk, circle] = cells[c];
      int preceding = 0;
      for (int i = 0; i < m; ++i) {
        const std::uint32_t bit = 1u << i;
        if (disk & bit) {
          const int sign = (preceding % 2 == 0) ? 1 : -1;
          mat[idx.at({disk & ~bit, circle | bit})][c] += sign;
          preceding += 2;
        } else if (circle & bit) {
          preceding += 1;
        }
      }
    }
    boundary_rank[degree] = rank_mod_p(mat);
  }
  PoincarePolynomial out;
  for (const auto& [degree, cells] : by_degree) {
    const long kernel = static_cast<long>(cells.size()) - boundary_rank[degree];
    const long image = boundary_rank.count(degree + 1) ? boundary_rank[degree + 1] : 0;
    out.add(degree, kernel - image);
  }
  return out;
}

/// Poincaré polynomial of S^a × S^b.
inline PoincarePolynomial sphere_product(int a, int b) {
  return PoincarePolynomial{{0, 1}, {a, 1}} * PoincarePolynomial{{0, 1}, {b, 1}};
}

/// Connected sum at the level of Poincaré polynomials of closed d-manifolds.
inline PoincarePolynomial connected_sum(const std::vector<PoincarePolynomial>& parts, int d) {
  PoincarePolynomial out{{0, 1}, {d, 1}};
  for (const auto& p : parts)
    for (const auto& [deg, c] : p.coefficients())
      if (deg != 0 && deg != d) out.add(deg, c);
  return out;
}

}  // namespace macut::testing
