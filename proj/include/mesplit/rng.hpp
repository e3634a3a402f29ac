#pragma once

#include <cstdint>

namespace mesplit::rng {

// splitmix64; bit-identical output on every platform, which keeps seeded
// reports byte-reproducible.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Per-case seed from (master seed, case index); cases can then be evaluated
// in any order, or in parallel, with identical results.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master ^ (0x9e3779b97f4a7c15ULL * (index + 1));
  splitmix64(s);
  return splitmix64(s);
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() { return splitmix64(state_); }

  // uniform in [0, 1)
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // uniform in [0, n)
  int next_int(int n) {
    int k = static_cast<int>(next_double() * n);
    return k >= n ? n - 1 : k;
  }

 private:
  std::uint64_t state_;
};

}  // namespace mesplit::rng
