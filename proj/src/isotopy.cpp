#include "macut/isotopy.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <thread>

namespace macut::isotopy {

namespace {

void require_angles(std::span<const double> angles) {
  if (angles.empty()) throw std::invalid_argument("torus dimension k must be >= 1");
}

void require_time(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw std::invalid_argument("deformation time must lie in [0, 1]");
}

double tube_radius(int k) { return std::ldexp(1.0, 1 - k); }

double angle_distance(std::span<const double> a, std::span<const double> b) {
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = circle_distance(a[i], b[i]);
    sum += d * d;
  }
  return std::sqrt(sum);
}

}  // namespace

double normalize_angle(double alpha) {
  double r = std::fmod(alpha, kTwoPi);
  if (r < 0.0) r += kTwoPi;
  return r >= kTwoPi ? 0.0 : r;
}

double circle_distance(double a, double b) {
  const double d = std::fabs(normalize_angle(a) - normalize_angle(b));
  return std::min(d, kTwoPi - d);
}

Eigen::VectorXd scaled_torus_point(std::span<const double> angles, double scale) {
  require_angles(angles);
  const int k = static_cast<int>(angles.size());
  const double last = angles.back();
  if (k == 1) {
    Eigen::VectorXd p(2);
    p << scale * std::sin(last), scale * std::cos(last);
    return p;
  }
  const Eigen::VectorXd inner =
      scaled_torus_point(angles.first(angles.size() - 1), 1.0 + 0.5 * scale * std::sin(last));
  Eigen::VectorXd p(k + 1);
  p << inner, tube_radius(k) * scale * std::cos(last);
  return p;
}

Eigen::VectorXd standard_torus_point(std::span<const double> angles) {
  return scaled_torus_point(angles, 1.0);
}

Eigen::VectorXd isotopy_point(std::span<const double> angles, double t) {
  require_angles(angles);
  require_time(t);
  const int k = static_cast<int>(angles.size());
  if (k == 1) return f1_point(angles[0], t);

  const double s = std::sin(angles.back());
  const double r = tube_radius(k);
  Eigen::VectorXd p(k + 2);
  p << scaled_torus_point(angles.first(angles.size() - 1), 1.0 + 0.5 * t * s),
      r * std::cos(angles.back()), r * ((1.0 - t) * s + t * std::fabs(s));
  return p;
}

Eigen::VectorXd isotopy_point(const TorusChart& chart) { return isotopy_point(chart.angles, chart.t); }

Eigen::Vector3d f1_point(double alpha, double t) {
  require_time(t);
  const double s = std::sin(alpha);
  return {t * s, std::cos(alpha), (1.0 - t) * s + t * std::fabs(s)};
}

Eigen::VectorXd ProbeTarget::operator()(std::span<const double> angles) const {
  switch (kind) {
    case MapKind::StandardTorus:
      return standard_torus_point(angles);
    case MapKind::Isotopy:
      return isotopy_point(angles, t);
    case MapKind::F1:
      return f1_point(angles[0], t);
  }
  return {};
}

std::vector<std::vector<double>> sample_angles(int k, long count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> uniform(0.0, kTwoPi);
  std::vector<std::vector<double>> out(static_cast<std::size_t>(count), std::vector<double>(static_cast<std::size_t>(k)));
  for (auto& chart : out)
    for (auto& a : chart) a = normalize_angle(uniform(rng));
  return out;
}

ProbeReport injectivity_probe(const ProbeTarget& target, const ProbeOptions& options) {
  if (options.samples < 2) throw std::invalid_argument("injectivity probe needs at least 2 samples");
  if (target.kind != MapKind::F1 && target.k < 1) throw std::invalid_argument("torus dimension k must be >= 1");
  if (target.kind == MapKind::F1 || target.kind == MapKind::Isotopy) require_time(target.t);

  const auto params = sample_angles(target.domain_dim(), options.samples, options.seed);
  std::vector<Eigen::VectorXd> images;
  images.reserve(params.size());
  for (const auto& a : params) images.push_back(target(a));

  // Sweep along the coordinate with the widest spread.
  const Eigen::Index dims = images.front().size();
  Eigen::Index axis = 0;
  double widest = -1.0;
  for (Eigen::Index c = 0; c < dims; ++c) {
    double lo = images.front()(c), hi = lo;
    for (const auto& p : images) {
      lo = std::min(lo, p(c));
      hi = std::max(hi, p(c));
    }
    if (hi - lo > widest) {
      widest = hi - lo;
      axis = c;
    }
  }
  std::vector<std::size_t> order(images.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return images[a](axis) < images[b](axis); });

  struct Partial {
    double best = std::numeric_limits<double>::infinity();
    long violations = 0;
  };
  const auto scan = [&](std::size_t from, std::size_t to, Partial& out) {
    for (std::size_t i = from; i < to; ++i) {
      const auto& pi = images[order[i]];
      for (std::size_t j = i + 1; j < order.size(); ++j) {
        const auto& pj = images[order[j]];
        const double window = std::max(out.best, options.min_image_distance);
        if (pj(axis) - pi(axis) >= window) break;
        if (angle_distance(params[order[i]], params[order[j]]) <= options.min_angle_distance) continue;
        const double d = (pi - pj).norm();
        out.best = std::min(out.best, d);
        if (d < options.min_image_distance) ++out.violations;
      }
    }
  };

  const std::size_t workers = static_cast<std::size_t>(std::max(1, options.workers));
  std::vector<Partial> partial(workers);
  if (workers == 1) {
    scan(0, order.size(), partial[0]);
  } else {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (order.size() + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w)
      pool.emplace_back([&, w] { scan(std::min(order.size(), w * chunk), std::min(order.size(), (w + 1) * chunk), partial[w]); });
  }

  ProbeReport report;
  report.samples = options.samples;
  report.min_separation = std::numeric_limits<double>::infinity();
  for (const auto& p : partial) {
    report.min_separation = std::min(report.min_separation, p.best);
    report.violations += p.violations;
  }
  return report;
}

EndpointCheck check_endpoints(int k, long samples, std::uint64_t seed) {
  if (k < 1) throw std::invalid_argument("torus dimension k must be >= 1");
  const auto charts = sample_angles(k, samples, seed);
  const auto partners = sample_angles(1, samples, seed ^ 0x9e3779b97f4a7c15ULL);
  const double radius = tube_radius(k);
  constexpr int kSteps = 16;

  EndpointCheck out;
  for (std::size_t s = 0; s < charts.size(); ++s) {
    const auto& alpha = charts[s];

    const Eigen::VectorXd torus = standard_torus_point(alpha);
    const Eigen::VectorXd at_one = isotopy_point(alpha, 1.0);
    out.identity_a_error = std::max(out.identity_a_error, (at_one.head(k + 1) - torus).cwiseAbs().maxCoeff());

    const Eigen::VectorXd at_zero = isotopy_point(alpha, 0.0);
    out.identity_b_radius_error =
        std::max(out.identity_b_radius_error, std::fabs(at_zero.tail(2).norm() - radius));

    auto moved = alpha;
    moved.back() = partners[s][0];
    const Eigen::VectorXd shifted = isotopy_point(moved, 0.0);
    out.identity_b_drift = std::max(out.identity_b_drift, (shifted.head(k) - at_zero.head(k)).cwiseAbs().maxCoeff());

    Eigen::VectorXd prev = at_zero;
    for (int step = 1; step <= kSteps; ++step) {
      const double t = static_cast<double>(step) / kSteps;
      const Eigen::VectorXd next = isotopy_point(alpha, t);
      out.lipschitz = std::max(out.lipschitz, (next - prev).cwiseAbs().maxCoeff() * kSteps);
      prev = next;
    }
  }
  return out;
}

}  // namespace macut::isotopy
