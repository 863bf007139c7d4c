// Seeded RNG substreams.
//
// Every random draw in the library comes from a named substream whose seed is
// derived from (master seed, replica index, purpose tag) with the splitmix64
// finalizer.  Replicas therefore have disjoint, scheduling-independent
// lineages, and coupled runs can share one event stream while analysis code
// draws from its own.
#pragma once

#include <cstdint>
#include <random>

namespace boltzlab::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer (Steele, Lea, Flood 2014).
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

enum class Stream : std::uint64_t {
  kInit = 1,      // initial-law sampling
  kArrival = 2,   // exponential inter-arrival times
  kTarget = 3,    // which particle jumps
  kPartner = 4,   // collision partner
  kAngle = 5,     // mass coordinate z (angle via g)
  kThinning = 6,  // acceptance variable u / cemetery coin
  kMollify = 7,   // Gaussian mollification
  kBootstrap = 8  // resampling in measure_lab
};

inline std::uint64_t substream_seed(std::uint64_t master, std::uint64_t replica,
                                    Stream purpose) {
  std::uint64_t h = mix64(master + kGolden * (replica + 1));
  return mix64(h + kGolden * static_cast<std::uint64_t>(purpose));
}

inline std::mt19937_64 make_stream(std::uint64_t master, std::uint64_t replica,
                                   Stream purpose) {
  return std::mt19937_64(substream_seed(master, replica, purpose));
}

}  // namespace boltzlab::rng
