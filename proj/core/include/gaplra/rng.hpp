#pragma once

#include <cstdint>

namespace gaplra {

// xoshiro256++ seeded through splitmix64. Self-contained so that streams are
// bit-identical across platforms and standard library versions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform in [0, 1).
  double uniform01();

  // Standard normal via Box-Muller (one spare cached).
  double normal();

  // Uniform integer in [0, n).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Deterministic seed derivation: one root seed, split per component/phase.
// Streams for distinct tags are independent for all practical purposes.
std::uint64_t derive_seed(std::uint64_t root, std::uint64_t tag);

}  // namespace gaplra
