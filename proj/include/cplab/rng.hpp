#pragma once

#include <cstdint>

namespace cplab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Counter-based generator: the i-th output is a pure function of
// (key, i), so streams keyed by (seed, worker index) never share state
// and results do not depend on thread scheduling.
class Rng {
 public:
  explicit Rng(std::uint64_t key) : key_(key), counter_(0) {}

  static Rng keyed(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(splitmix64(seed) ^ (stream * 0x9e3779b97f4a7c15ULL)));
  }

  std::uint64_t next_u64() { return splitmix64(key_ ^ counter_++); }

  // uniform in [0, 1) with 53 random bits
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in {0, ..., bound-1}
  int next_int(int bound) {
    return static_cast<int>(next_u64() % static_cast<std::uint64_t>(bound));
  }

 private:
  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace cplab
