#include "macut/moment_angle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <exception>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "macut/errors.hpp"

namespace macut {

PoincarePolynomial::PoincarePolynomial(std::initializer_list<std::pair<const int, long>> terms) {
  for (const auto& [degree, c] : terms) add(degree, c);
}

long PoincarePolynomial::operator[](int degree) const {
  const auto it = coefficients_.find(degree);
  return it == coefficients_.end() ? 0 : it->second;
}

void PoincarePolynomial::add(int degree, long coefficient) {
  long& slot = coefficients_[degree];
  slot += coefficient;
  if (slot == 0) coefficients_.erase(degree);
}

long PoincarePolynomial::euler_characteristic() const {
  long chi = 0;
  for (const auto& [degree, c] : coefficients_) chi += (degree % 2 == 0) ? c : -c;
  return chi;
}

int PoincarePolynomial::top_degree() const {
  return coefficients_.empty() ? -1 : coefficients_.rbegin()->first;
}

std::string PoincarePolynomial::to_string() const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [degree, c] : coefficients_) {
    long shown = c;
    if (!first) {
      os << (c < 0 ? " - " : " + ");
      shown = c < 0 ? -c : c;
    }
    first = false;
    if (degree == 0) {
      os << shown;
      continue;
    }
    if (shown != 1) os << shown;
    os << 't';
    if (degree != 1) os << '^' << degree;
  }
  return os.str();
}

PoincarePolynomial operator*(const PoincarePolynomial& lhs, const PoincarePolynomial& rhs) {
  PoincarePolynomial out;
  for (const auto& [a, ca] : lhs.coefficients_)
    for (const auto& [b, cb] : rhs.coefficients_) out.add(a + b, ca * cb);
  return out;
}

PoincarePolynomial betti(const GradedGroups& groups) {
  PoincarePolynomial out;
  for (const auto& [degree, g] : groups.degrees())
    if (degree >= 0) out.add(degree, g.rank);
  return out;
}

namespace {

// Per-(|J|, p) groups, merged by direct sum. Direct sum is commutative, so the
// merged result is the same for any partition of the subsets among workers.
using Contributions = std::map<std::pair<int, int>, Group>;

void merge_into(Contributions& into, const Contributions& from) {
  for (const auto& [key, g] : from) {
    Group& slot = into[key];
    slot.rank += g.rank;
    if (!g.torsion.empty()) {
      slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
      slot.torsion = normalize_torsion(std::move(slot.torsion));
    }
  }
}

void sweep_range(const SimplicialComplex& complex, std::uint64_t begin, std::uint64_t end,
                 Contributions& out) {
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    const int size = std::popcount(mask);
    const auto coh = reduced_cohomology(full_subcomplex(complex, mask));
    for (const auto& [q, g] : coh.degrees()) {
      Group& slot = out[{size, q + size + 1}];
      slot.rank += g.rank;
      if (!g.torsion.empty()) {
        slot.torsion.insert(slot.torsion.end(), g.torsion.begin(), g.torsion.end());
        slot.torsion = normalize_torsion(std::move(slot.torsion));
      }
    }
  }
}

Contributions sweep_subsets(const SimplicialComplex& complex, const SweepOptions& options) {
  if (complex.is_void()) throw std::invalid_argument("moment-angle complex of the void complex");
  if (options.workers < 1) throw std::invalid_argument("worker count must be >= 1");
  const int m = complex.vertex_count();
  const int cap = std::min(options.max_exponent, 62);
  if (m > cap) {
    throw ResourceLimitError("complex has " + std::to_string(m) + " vertices: 2^" +
                             std::to_string(m) + " subsets exceeds the limit of 2^" +
                             std::to_string(cap));
  }

  const std::uint64_t total = std::uint64_t{1} << m;
  const auto workers = static_cast<std::uint64_t>(std::min<std::uint64_t>(
      static_cast<std::uint64_t>(options.workers), total));
  std::vector<Contributions> partial(workers);
  if (workers == 1) {
    sweep_range(complex, 0, total, partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::jthread> pool;
    const std::uint64_t chunk = (total + workers - 1) / workers;
    for (std::uint64_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          sweep_range(complex, w * chunk, std::min(total, (w + 1) * chunk), partial[w]);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
    pool.clear();
    for (const auto& e : errors)
      if (e) std::rethrow_exception(e);
  }

  Contributions merged;
  for (const auto& p : partial) merge_into(merged, p);
  return merged;
}

}  // namespace

GradedGroups moment_angle_cohomology(const SimplicialComplex& complex, const SweepOptions& options) {
  GradedGroups out;
  for (const auto& [key, g] : sweep_subsets(complex, options)) out.add(key.second, g);
  return out;
}

BigradedTable bigraded_table(const SimplicialComplex& complex, const SweepOptions& options) {
  BigradedTable out;
  for (const auto& [key, g] : sweep_subsets(complex, options))
    if (g.rank != 0) out[key] = g.rank;
  return out;
}

}  // namespace macut
