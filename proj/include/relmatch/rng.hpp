#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>

namespace relmatch::rng {

/// SplitMix64 finalizer. Bijective mixing of a 64-bit word; the basis of all
/// randomness in the library. Counter-based draws keep every consumer a pure
/// function of (seed, stream, indices), which is what makes runs replayable.
inline std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Derive a draw key from a seed, a stream tag and up to three indices.
inline std::uint64_t key(std::uint64_t seed, std::uint64_t stream,
                         std::uint64_t a = 0, std::uint64_t b = 0,
                         std::uint64_t c = 0) {
  std::uint64_t h = mix(seed);
  h = mix(h ^ stream);
  h = mix(h ^ a);
  h = mix(h ^ b);
  return mix(h ^ c);
}

/// Uniform double in the open interval (0, 1); never 0, safe under log().
inline double u01(std::uint64_t k) {
  return (static_cast<double>(k >> 11) + 0.5) * 0x1p-53;
}

/// Standard normal deviate via Box-Muller on two decorrelated substreams.
inline double gauss(std::uint64_t k) {
  const double u1 = u01(mix(k ^ 0x5851f42d4c957f2dULL));
  const double u2 = u01(mix(k ^ 0x14057b7ef767814fULL));
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(6.283185307179586476925286766559 * u2);
}

/// Sequential counter stream for code that wants a plain reproducible
/// sequence (initialization, batch sampling, test data).
class Stream {
 public:
  Stream(std::uint64_t seed, std::uint64_t stream_id)
      : key_(key(seed, stream_id)) {}

  std::uint64_t next_u64() { return mix(key_ ^ n_++); }
  double next_u01() { return u01(next_u64()); }
  double next_gauss() { return gauss(next_u64()); }

  /// Uniform index in [0, bound). bound must be positive.
  std::size_t next_index(std::size_t bound) {
    return static_cast<std::size_t>(next_u64() % bound);
  }

 private:
  std::uint64_t key_;
  std::uint64_t n_ = 0;
};

}  // namespace relmatch::rng
