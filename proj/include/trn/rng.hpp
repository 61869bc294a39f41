#pragma once

#include <cstdint>
#include <utility>

namespace trn {

// splitmix64 mix function. Tiny and identical on every platform, which keeps
// seeded campaigns byte-reproducible.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Split rule for per-instance streams: never share generator state between
// workers, derive an independent seed per instance index instead.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 0x5851F42D4C957F2Dull));
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t x = state_;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
  }

  bool coin() { return next_u64() >> 63; }

  // Uniform in [0, n). Rejection sampling, no modulo bias.
  int below(int n) {
    auto un = static_cast<std::uint64_t>(n);
    std::uint64_t threshold = (0 - un) % un;
    std::uint64_t r;
    do {
      r = next_u64();
    } while (r < threshold);
    return static_cast<int>(r % un);
  }

  template <class It>
  void shuffle(It first, It last) {
    auto n = static_cast<int>(last - first);
    for (int i = n - 1; i > 0; --i) {
      int j = below(i + 1);
      std::swap(first[i], first[j]);
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace trn
