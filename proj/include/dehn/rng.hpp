#ifndef DEHN_RNG_HPP
#define DEHN_RNG_HPP

#include <cstdint>
#include <random>

namespace dehn {

// Thin wrapper over mt19937_64 producing doubles from the high 53 bits, so
// sequences depend only on the seed and the call sequence, not on the
// standard library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed), seed_(seed) {}

  std::uint64_t bits() { return eng_(); }

  // uniform in [0,1)
  double unit() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double range(double lo, double hi) { return lo + (hi - lo) * unit(); }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) return 0;
    std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x = bits();
    while (x >= limit) x = bits();
    return x % n;
  }

  // Deterministic derived stream; independent stages of one run get their
  // own cursor.
  Rng fork(std::uint64_t stream) const {
    return Rng(seed_ ^ (0x9e3779b97f4a7c15ULL * (stream + 1)));
  }

 private:
  std::mt19937_64 eng_;
  std::uint64_t seed_;
};

}  // namespace dehn

#endif
