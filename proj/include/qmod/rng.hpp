#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace qmod {

// MT19937-64 with portable rejection sampling for bounded draws; the standard
// distributions are implementation-defined, so they are not used anywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, n); n > 0.
  std::uint64_t below(std::uint64_t n);

 private:
  std::mt19937_64 engine_;
};

// Derives a child seed from a base seed and a textual tag (FNV-1a 64 over the
// tag, mixed with the base through the SplitMix64 finalizer).
std::uint64_t derive_seed(std::uint64_t base, std::string_view tag);

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace qmod
