#pragma once

#include <cmath>
#include <cstdint>
#include <utility>

namespace wlf {

// Counter-based randomness: every value is a pure function of
// (seed, stream, counter, slot). There is no mutable generator state, so
//   - per-particle substreams are independent of the particle count,
//   - draws can be evaluated in any order and from any thread,
//   - two runs that visit the same (stream, counter, slot) see the same
//     value even if they take different code paths in between.
// Streams index particles, counters index micro steps, slots separate the
// independent draws a single step needs.

namespace detail {

inline uint64_t mix64(uint64_t z) {
  z ^= z >> 30;
  z *= 0xbf58476d1ce4e5b9ULL;
  z ^= z >> 27;
  z *= 0x94d049bb133111ebULL;
  z ^= z >> 31;
  return z;
}

inline uint64_t keyed_hash(uint64_t seed, uint64_t stream, uint64_t counter, uint64_t slot) {
  uint64_t h = mix64(seed + 0x9e3779b97f4a7c15ULL);
  h = mix64(h ^ (stream * 0xbf58476d1ce4e5b9ULL + 0x94d049bb133111ebULL));
  h = mix64(h ^ (counter * 0x2545f4914f6cdd1dULL + 0x9e3779b97f4a7c15ULL));
  h = mix64(h ^ (slot * 0xd6e8feb86659fd93ULL + 0xca5a826395121157ULL));
  return h;
}

}  // namespace detail

// One particle's view of the generator.
class RngStream {
 public:
  RngStream(uint64_t seed, uint64_t stream) : seed_(seed), stream_(stream) {}

  uint64_t raw(uint64_t counter, uint64_t slot = 0) const {
    return detail::keyed_hash(seed_, stream_, counter, slot);
  }

  // uniform in [0, 1)
  double uniform(uint64_t counter, uint64_t slot = 0) const {
    return static_cast<double>(raw(counter, slot) >> 11) * 0x1.0p-53;
  }

  // Box-Muller pair of independent standard normals; consumes slots
  // `slot` and `slot + 1`.
  std::pair<double, double> normal_pair(uint64_t counter, uint64_t slot = 0) const {
    double u1 = uniform(counter, slot);
    double u2 = uniform(counter, slot + 1);
    if (u1 < 0x1.0p-53) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    return {r * std::cos(a), r * std::sin(a)};
  }

  uint64_t seed() const { return seed_; }
  uint64_t stream() const { return stream_; }

 private:
  uint64_t seed_;
  uint64_t stream_;
};

// Splittable root: hands out per-particle substreams.
class Rng {
 public:
  explicit Rng(uint64_t seed) : seed_(seed) {}

  RngStream stream(uint64_t id) const { return RngStream(seed_, id); }
  uint64_t seed() const { return seed_; }

 private:
  uint64_t seed_;
};

}  // namespace wlf
