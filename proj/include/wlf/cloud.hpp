#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wlf/error.hpp"

namespace wlf {

// Empirical measure: N points in R^d, each with weight 1/N.
// Immutable after construction; cheap to copy, safe to share across threads.
class ParticleCloud {
 public:
  ParticleCloud() = default;

  // Takes row-major coordinates (n * dim doubles).
  ParticleCloud(std::vector<double> coords, int dim) : data_(std::move(coords)), dim_(dim) {
    if (dim_ < 1) raise(errc::dimension_error, "dim must be >= 1");
    if (data_.empty()) raise(errc::empty_input, "cloud has no points");
    if (data_.size() % static_cast<size_t>(dim_) != 0)
      raise(errc::dimension_mismatch, "coordinate count not divisible by dim");
    for (double c : data_)
      if (!std::isfinite(c)) raise(errc::non_finite_coordinate, "coordinate is NaN or Inf");
  }

  static ParticleCloud from_points(const std::vector<std::vector<double>>& points) {
    if (points.empty()) raise(errc::empty_input, "no points given");
    const size_t d = points.front().size();
    if (d == 0) raise(errc::dimension_error, "zero-dimensional point");
    std::vector<double> flat;
    flat.reserve(points.size() * d);
    for (const auto& p : points) {
      if (p.size() != d) raise(errc::dimension_mismatch, "points have mixed dimensions");
      flat.insert(flat.end(), p.begin(), p.end());
    }
    return ParticleCloud(std::move(flat), static_cast<int>(d));
  }

  long n() const { return static_cast<long>(data_.size()) / dim_; }
  int dim() const { return dim_; }

  double operator()(long i, int axis) const { return data_[static_cast<size_t>(i) * dim_ + axis]; }

  std::span<const double> point(long i) const {
    return {data_.data() + static_cast<size_t>(i) * dim_, static_cast<size_t>(dim_)};
  }

  const std::vector<double>& coords() const { return data_; }

  // Coordinates of one axis, in particle order.
  std::vector<double> axis(int a) const {
    std::vector<double> out(static_cast<size_t>(n()));
    for (long i = 0; i < n(); ++i) out[static_cast<size_t>(i)] = (*this)(i, a);
    return out;
  }

  double squared_distance(long i, const ParticleCloud& other, long j) const {
    double s = 0.0;
    for (int a = 0; a < dim_; ++a) {
      const double d = (*this)(i, a) - other(j, a);
      s += d * d;
    }
    return s;
  }

  ParticleCloud translated(std::span<const double> shift) const {
    std::vector<double> out(data_);
    for (size_t i = 0; i < out.size(); ++i) out[i] += shift[i % dim_];
    return ParticleCloud(std::move(out), dim_);
  }

  bool operator==(const ParticleCloud& o) const { return dim_ == o.dim_ && data_ == o.data_; }

 private:
  std::vector<double> data_;
  int dim_ = 1;
};

inline ParticleCloud empirical_from_points(const std::vector<std::vector<double>>& points) {
  return ParticleCloud::from_points(points);
}

// Axis-aligned box domain, the same interval on every axis.
struct Box {
  double lo = 0.0;
  double hi = 0.0;

  bool contains(double x) const { return x >= lo && x <= hi; }
};

// Reflect a coordinate across the nearest boundary, repeating as needed.
// The loop is capped; pathological inputs are clamped and counted.
inline double reflect_into(double x, const Box& b, long* clamped = nullptr) {
  for (int it = 0; it < 100; ++it) {
    if (x > b.hi)
      x = 2.0 * b.hi - x;
    else if (x < b.lo)
      x = 2.0 * b.lo - x;
    else
      return x;
  }
  if (clamped) ++*clamped;
  return x > b.hi ? b.hi : b.lo;
}

}  // namespace wlf
