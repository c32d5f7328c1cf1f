// Global numeric tolerances and size limits.

#pragma once

#include <atomic>
#include <cstdint>

namespace finrep {

// Matrix identities (homomorphism checks, PVM axioms, covariance, round trips)
// are expected to hold to this precision.  All entries at desk scale are short
// sums of roots of unity, so accumulated error stays far below it.
inline constexpr double kMatrixTol = 1e-9;

// Quantities that must be integers (Hom dimensions, degrees) are rounded; the
// residual has to stay below this.
inline constexpr double kRoundTol = 1e-6;

// Singular-value cutoff for rank detection (fixed spaces, stalk bases).
// Spectra of the projectors involved are {0,1}, so the gap is huge.
inline constexpr double kRankCutoff = 1e-8;

// Exhaustive operations refuse groups larger than this unless overridden.
inline constexpr std::int64_t kDefaultGroupLimit = 10000;

// Default seed for every randomized step.
inline constexpr std::uint64_t kDefaultSeed = 0;

// Runtime switch for the OpenMP kernel variants.  On by default when the
// build has OpenMP; the serial reference path is always available.
struct ParallelConfig {
  static std::atomic<bool>& enabled();
};

// Deterministically derive a fresh seed for retry attempt `attempt`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t attempt) {
  std::uint64_t x = seed ^ (0x9e3779b97f4a7c15ULL + attempt);
  x ^= x >> 30; x *= 0xbf58476d1ce4e5b9ULL;
  x ^= x >> 27; x *= 0x94d049bb133111ebULL;
  x ^= x >> 31;
  return x;
}

}  // namespace finrep
