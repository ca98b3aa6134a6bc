#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <span>
#include <vector>

namespace macut::isotopy {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Point of the k-torus given by k angles and a deformation time t in [0, 1].
struct TorusChart {
  std::vector<double> angles;
  double t = 1.0;

  int k() const noexcept { return static_cast<int>(angles.size()); }
};

/// Maps an angle into [0, 2π).
double normalize_angle(double alpha);

/// Distance between two angles measured along the circle.
double circle_distance(double a, double b);

/**
 * Nested-tube torus with its innermost circle scaled by `scale`.
 *
 * With scale 1 this is the standard embedding T^k ⊂ R^{k+1}:
 *   k = 1:  (ρ sin α₁, ρ cos α₁)
 *   k > 1:  [scaled_torus_point(α₁..α_{k-1}, 1 + ½ρ sin α_k), 2^{1-k} ρ cos α_k]
 * so each extra circle factor rides on a tube around the previous torus.
 */
Eigen::VectorXd scaled_torus_point(std::span<const double> angles, double scale);

/// Standard torus T^k ⊂ R^{k+1}, k = angles.size() >= 1.
Eigen::VectorXd standard_torus_point(std::span<const double> angles);

/**
 * Isotopy F(α, t) ∈ R^{k+2}. The innermost sin α_k of the standard torus is
 * damped to t·sin α_k, coordinate k+1 is 2^{1-k} cos α_k and coordinate k+2
 * is 2^{1-k}((1-t) sin α_k + t|sin α_k|). At t = 0 the first k coordinates
 * forget α_k; for k = 1 this is exactly f1_point.
 */
Eigen::VectorXd isotopy_point(std::span<const double> angles, double t);
Eigen::VectorXd isotopy_point(const TorusChart& chart);

/// F₁(cos α, sin α, t) = (t sin α, cos α, (1-t) sin α + t|sin α|).
Eigen::Vector3d f1_point(double alpha, double t);

enum class MapKind { StandardTorus, Isotopy, F1 };

/// One of the maps above with k and t frozen.
struct ProbeTarget {
  MapKind kind = MapKind::StandardTorus;
  int k = 1;
  double t = 1.0;

  int domain_dim() const noexcept { return kind == MapKind::F1 ? 1 : k; }
  Eigen::VectorXd operator()(std::span<const double> angles) const;
};

struct ProbeOptions {
  long samples = 10000;
  std::uint64_t seed = 0;
  double min_angle_distance = 1e-2;   // δ_in
  double min_image_distance = 1e-6;   // δ_out
  int workers = 1;
};

struct ProbeReport {
  long samples = 0;
  long violations = 0;
  /// Smallest image distance among sample pairs farther apart than δ_in.
  double min_separation = 0.0;
  bool passed() const noexcept { return violations == 0; }
};

/// Seeded search for pairs of distinct parameters with (nearly) equal images.
/// A probe, not a proof of injectivity.
ProbeReport injectivity_probe(const ProbeTarget& target, const ProbeOptions& options);

/// Uniform random angles in [0, 2π), `count` charts of dimension k.
std::vector<std::vector<double>> sample_angles(int k, long count, std::uint64_t seed);

struct EndpointCheck {
  /// max |F(α,1)_{1..k+1} - T^k(α)|
  double identity_a_error = 0.0;
  /// max | |F(α,0)_{k+1..k+2}| - 2^{1-k} |
  double identity_b_radius_error = 0.0;
  /// max change of F(α,0)_{1..k} when α_k alone is perturbed
  double identity_b_drift = 0.0;
  /// max over coordinates and sampled t-steps of |ΔF| / Δt
  double lipschitz = 0.0;
};

EndpointCheck check_endpoints(int k, long samples, std::uint64_t seed);

}  // namespace macut::isotopy
