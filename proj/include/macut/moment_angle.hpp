#pragma once

#include <map>
#include <string>
#include <utility>

#include "macut/homology.hpp"
#include "macut/simplicial_complex.hpp"

namespace macut {

/// Betti numbers of a space, degree -> rank. Zero coefficients are not stored.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  PoincarePolynomial(std::initializer_list<std::pair<const int, long>> terms);

  long operator[](int degree) const;
  void add(int degree, long coefficient);
  const std::map<int, long>& coefficients() const& noexcept { return coefficients_; }
  std::map<int, long> coefficients() && { return std::move(coefficients_); }

  /// Alternating sum of coefficients.
  long euler_characteristic() const;
  int top_degree() const;

  /// e.g. "1 + 2t^3 + t^6"; the zero polynomial prints as "0".
  std::string to_string() const;

  friend PoincarePolynomial operator*(const PoincarePolynomial&, const PoincarePolynomial&);
  friend bool operator==(const PoincarePolynomial&, const PoincarePolynomial&) = default;

 private:
  std::map<int, long> coefficients_;
};

/// Ranks of `groups` in nonnegative degrees.
PoincarePolynomial betti(const GradedGroups& groups);

struct SweepOptions {
  int workers = 1;
  /// Refuse complexes with more than 2^max_exponent vertex subsets.
  int max_exponent = 22;
};

/// H*(Z_K) = ⊕_{J ⊆ [m]} H̃^{*-|J|-1}(K_J), summed over all 2^m vertex subsets.
/// Output does not depend on the worker count.
GradedGroups moment_angle_cohomology(const SimplicialComplex& complex,
                                     const SweepOptions& options = {});

/// (|J|, p) -> rank contributed to H^p(Z_K) by subsets of size |J|.
using BigradedTable = std::map<std::pair<int, int>, long>;
BigradedTable bigraded_table(const SimplicialComplex& complex, const SweepOptions& options = {});

}  // namespace macut
