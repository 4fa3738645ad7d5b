#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "wlf/cloud.hpp"
#include "wlf/error.hpp"

namespace wlf {

// Fixed-width 1-D histogram. Bins are half-open [lo + i*w, lo + (i+1)*w),
// except the last bin, which is closed on the right.
struct Histogram {
  double bin_width = 0.0;
  double lo = 0.0;
  double hi = 0.0;
  std::vector<long> counts;
  long out_of_range = 0;
  bool warning = false;  // set when no data fell inside the range

  long in_range() const {
    long s = 0;
    for (long c : counts) s += c;
    return s;
  }
};

inline Histogram histogram(const ParticleCloud& cloud, double bin_width, double lo, double hi,
                           int axis = 0) {
  if (!(bin_width > 0.0)) raise(errc::bad_bin_width, "bin_width must be > 0");
  if (!(lo < hi)) raise(errc::bad_range, "range must satisfy lo < hi");
  if (axis < 0 || axis >= cloud.dim()) raise(errc::dimension_error, "axis out of range");

  Histogram h;
  h.bin_width = bin_width;
  h.lo = lo;
  h.hi = hi;
  const long nbins = static_cast<long>(std::ceil((hi - lo) / bin_width));
  h.counts.assign(static_cast<size_t>(nbins), 0);

  for (long i = 0; i < cloud.n(); ++i) {
    const double x = cloud(i, axis);
    if (x < lo || x > hi) {
      ++h.out_of_range;
      continue;
    }
    long b = static_cast<long>(std::floor((x - lo) / bin_width));
    if (b >= nbins) b = nbins - 1;  // right edge of the last bin is closed
    ++h.counts[static_cast<size_t>(b)];
  }
  h.warning = (h.in_range() == 0);
  return h;
}

}  // namespace wlf
