#ifndef GRAM_RNG_HPP
#define GRAM_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace gram {

using Rng = std::mt19937_64;

// Derives an independent stream from the root seed and a purpose label, so
// changing one knob (placement, workload, epsilon, nonces) does not perturb
// the others.
inline Rng derive_stream(std::uint64_t root_seed, std::string_view purpose) {
  std::uint64_t h = 1469598103934665603ull;
  for (char c : purpose) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  std::seed_seq seq{root_seed, h};
  return Rng(seq);
}

}  // namespace gram

#endif  // GRAM_RNG_HPP
