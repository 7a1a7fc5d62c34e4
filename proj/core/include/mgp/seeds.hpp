#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>

namespace mgp {

using Rng = std::mt19937_64;

// Finalizer of the splitmix64 generator; bijective on 64-bit words.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Mixes a tuple of values into one 64-bit seed. Order-sensitive.
inline std::uint64_t seed_hash(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6d9f0a57c1283e45ULL;
  for (const std::uint64_t p : parts) {
    h = splitmix64(h ^ splitmix64(p));
  }
  return h;
}

// Portable draws. The std distributions are implementation-defined, so all
// randomized components go through these helpers instead.

/// Uniform index in [0, n). n must be > 0.
inline std::uint64_t rand_index(Rng &rng, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(rng()) * n) >> 64);
}

/// Uniform real in [0, 1).
inline double rand_unit(Rng &rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline bool rand_coin(Rng &rng) { return (rng() & 1ULL) != 0; }

} // namespace mgp
