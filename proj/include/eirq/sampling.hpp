#ifndef EIRQ_SAMPLING_HPP
#define EIRQ_SAMPLING_HPP

#include <cstddef>
#include <cstdint>
#include <random>

#include "eirq/element.hpp"

namespace eirq {

/// Seeded generator with platform-independent draws (mt19937_64 bits are
/// specified; the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  double normal();

  /// Uniform point in the closed Euclidean ball of the given radius.
  Point in_ball(std::size_t dim, double radius);

 private:
  std::mt19937_64 engine_;
};

}  // namespace eirq

#endif
