#ifndef WSD_RNG_HPP
#define WSD_RNG_HPP

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace wsd {

/// Deterministic 64-bit stream (splitmix64). All randomness in the toolkit
/// flows through this so runs are reproducible across platforms and standard
/// library implementations.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Unbiased draw in [0, n). n must be > 0.
  std::size_t uniform_index(std::size_t n) {
    std::uint64_t bound = static_cast<std::uint64_t>(n);
    std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      std::uint64_t r = next();
      if (r >= threshold) return static_cast<std::size_t>(r % bound);
    }
  }

  /// Uniform double in [0, 1).
  double uniform_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value);
std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag);

/// Stream for one test query, derived from (run seed, target word, query
/// index) so per-query tie-breaking is independent of evaluation order.
RandomStream query_stream(std::uint64_t run_seed, std::string_view word,
                          std::size_t query_index);

}  // namespace wsd

#endif
