#include <doctest.h>

#include <cmath>
#include <numbers>

#include "macut/isotopy.hpp"

using namespace macut::isotopy;
using std::numbers::pi;

namespace {

// Torus formulas written out by hand for k = 2, 3.
Eigen::VectorXd torus2(double a1, double a2) {
  const double r1 = 1.0 + 0.5 * std::sin(a2);
  Eigen::VectorXd p(3);
  p << r1 * std::sin(a1), r1 * std::cos(a1), 0.5 * std::cos(a2);
  return p;
}

Eigen::VectorXd torus3(double a1, double a2, double a3) {
  const double r2 = 1.0 + 0.5 * std::sin(a3);
  const double r1 = 1.0 + 0.5 * r2 * std::sin(a2);
  Eigen::VectorXd p(4);
  p << r1 * std::sin(a1), r1 * std::cos(a1), 0.5 * r2 * std::cos(a2), 0.25 * std::cos(a3);
  return p;
}

Eigen::VectorXd isotopy2(double a1, double a2, double t) {
  const double s = std::sin(a2);
  const double r1 = 1.0 + 0.5 * t * s;
  Eigen::VectorXd p(4);
  p << r1 * std::sin(a1), r1 * std::cos(a1), 0.5 * std::cos(a2), 0.5 * ((1 - t) * s + t * std::fabs(s));
  return p;
}

double max_abs_diff(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  REQUIRE(a.size() == b.size());
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("standard torus examples") {
  const std::vector<double> quarter{pi / 2};
  const auto p = standard_torus_point(quarter);
  CHECK(p(0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::fabs(p(1)) < 1e-15);

  const std::vector<double> a{0.0, pi / 2};
  const auto q = standard_torus_point(a);
  REQUIRE(q.size() == 3);
  CHECK(std::fabs(q(0)) < 1e-15);
  CHECK(q(1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::fabs(q(2)) < 1e-15);
  CHECK_THROWS_AS(standard_torus_point(std::vector<double>{}), std::invalid_argument);
}

TEST_CASE("standard torus matches the nested formula written out") {
  for (const auto& a : sample_angles(3, 500, 11)) {
    CHECK(max_abs_diff(standard_torus_point(std::span(a).first(2)), torus2(a[0], a[1])) < 1e-14);
    CHECK(max_abs_diff(standard_torus_point(a), torus3(a[0], a[1], a[2])) < 1e-14);
  }
}

TEST_CASE("nesting: the k-torus rides on a rescaled (k-1)-torus") {
  for (int k = 2; k <= 5; ++k) {
    for (const auto& a : sample_angles(k, 200, 5 + k)) {
      const auto full = standard_torus_point(a);
      const auto inner = scaled_torus_point(std::span(a).first(a.size() - 1), 1.0 + 0.5 * std::sin(a.back()));
      CHECK(max_abs_diff(full.head(k), inner) < 1e-15);
      CHECK(full(k) == doctest::Approx(std::ldexp(std::cos(a.back()), 1 - k)).epsilon(1e-15));
      CHECK(full.norm() <= 2.0);
    }
  }
}

TEST_CASE("isotopy examples") {
  const std::vector<double> a{0.0, pi / 2};
  const auto p = isotopy_point(a, 1.0);
  REQUIRE(p.size() == 4);
  CHECK(std::fabs(p(0)) < 1e-15);
  CHECK(p(1) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(std::fabs(p(2)) < 1e-15);
  CHECK(p(3) == doctest::Approx(0.5).epsilon(1e-15));

  for (const auto& b : sample_angles(2, 300, 3))
    for (double t : {0.0, 0.25, 0.5, 1.0}) CHECK(max_abs_diff(isotopy_point(b, t), isotopy2(b[0], b[1], t)) < 1e-14);

  CHECK(isotopy_point(TorusChart{a, 1.0}) == p);
  CHECK_THROWS_AS(isotopy_point(std::vector<double>{}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(isotopy_point(a, 1.5), std::invalid_argument);
}

TEST_CASE("the one-dimensional isotopy is F1") {
  for (const auto& a : sample_angles(1, 100, 8))
    for (double t : {0.0, 0.3, 1.0}) CHECK(isotopy_point(a, t) == Eigen::VectorXd(f1_point(a[0], t)));
}

TEST_CASE("f1_point") {
  for (double alpha : {0.0, 1.0, 2.5, 4.0}) {
    const auto p = f1_point(alpha, 0.0);
    CHECK(p(0) == 0.0);
    CHECK(p(1) == std::cos(alpha));
    CHECK(p(2) == std::sin(alpha));
  }
  // t = 1 gives (sin α, cos α, |sin α|).
  for (double alpha : {0.0, pi / 2, pi, 3 * pi / 2}) {
    const auto p = f1_point(alpha, 1.0);
    CHECK(p(0) == std::sin(alpha));
    CHECK(p(1) == std::cos(alpha));
    CHECK(p(2) == std::fabs(std::sin(alpha)));
  }
  const auto top = f1_point(pi / 2, 1.0);
  CHECK(top(0) == 1.0);
  CHECK(std::fabs(top(1)) < 1e-16);
  CHECK(top(2) == 1.0);
  const auto bottom = f1_point(3 * pi / 2, 1.0);
  CHECK(bottom(0) == -1.0);
  CHECK(std::fabs(bottom(1)) < 1e-15);
  CHECK(bottom(2) == 1.0);

  for (const auto& a : sample_angles(1, 200, 2))
    for (double t : {0.0, 0.1, 0.7, 1.0}) CHECK(f1_point(a[0], t)(1) == std::cos(a[0]));
  CHECK_THROWS_AS(f1_point(0.0, -0.1), std::invalid_argument);
}

TEST_CASE("endpoint identities and Lipschitz bound") {
  for (int k = 1; k <= 4; ++k) {
    const auto check = check_endpoints(k, 10000, 42);
    CHECK(check.identity_a_error <= 1e-12);
    CHECK(check.identity_b_radius_error <= 1e-12);
    CHECK(check.identity_b_drift <= 1e-12);
    CHECK(check.lipschitz <= 2.0);
    CHECK(check.lipschitz > 0.0);
  }
  CHECK_THROWS_AS(check_endpoints(0, 10, 1), std::invalid_argument);
}

TEST_CASE("injectivity probes") {
  const ProbeOptions options{10000, 42, 1e-2, 1e-6, 1};
  CHECK(injectivity_probe({MapKind::F1, 1, 0.0}, options).violations == 0);
  CHECK(injectivity_probe({MapKind::F1, 1, 1.0}, options).violations == 0);
  CHECK(injectivity_probe({MapKind::Isotopy, 2, 0.5}, options).violations == 0);
  CHECK(injectivity_probe({MapKind::StandardTorus, 2, 1.0}, options).violations == 0);

  const auto report = injectivity_probe({MapKind::F1, 1, 1.0}, options);
  CHECK(report.samples == 10000);
  CHECK(report.passed());
  CHECK(report.min_separation > 1e-6);
}

TEST_CASE("injectivity probe catches a non-injective map") {
  // δ_out larger than the image diameter flags every far-apart pair.
  const ProbeOptions loose{500, 1, 1e-2, 10.0, 1};
  const auto report = injectivity_probe({MapKind::StandardTorus, 1, 1.0}, loose);
  CHECK(report.violations > 0);
  CHECK_FALSE(report.passed());
}

TEST_CASE("injectivity probe is seeded and worker independent") {
  const ProbeTarget target{MapKind::Isotopy, 3, 0.5};
  ProbeOptions options{4000, 9, 1e-2, 1e-6, 1};
  const auto reference = injectivity_probe(target, options);
  for (int workers : {2, 3, 8}) {
    options.workers = workers;
    const auto r = injectivity_probe(target, options);
    CHECK(r.violations == reference.violations);
    CHECK(r.min_separation == reference.min_separation);
  }
  CHECK(sample_angles(2, 10, 4) == sample_angles(2, 10, 4));
  CHECK(sample_angles(2, 10, 4) != sample_angles(2, 10, 5));
  CHECK_THROWS_AS(injectivity_probe(target, {1, 0, 1e-2, 1e-6, 1}), std::invalid_argument);
  CHECK_THROWS_AS(injectivity_probe({MapKind::Isotopy, 0, 0.5}, {10, 0, 1e-2, 1e-6, 1}), std::invalid_argument);
}

TEST_CASE("angle helpers") {
  CHECK(normalize_angle(-pi / 2) == doctest::Approx(3 * pi / 2));
  CHECK(normalize_angle(kTwoPi) == 0.0);
  CHECK(normalize_angle(5 * pi) == doctest::Approx(pi));
  CHECK(circle_distance(0.1, kTwoPi - 0.1) == doctest::Approx(0.2));
  CHECK(circle_distance(1.0, 1.0) == 0.0);
}
