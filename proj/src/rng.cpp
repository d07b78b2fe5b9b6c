#include "wsd/rng.hpp"

namespace wsd {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t value) {
  RandomStream s(seed ^ (value + 0x9e3779b97f4a7c15ULL));
  return s.next();
}

std::uint64_t mix_seed(std::uint64_t seed, std::string_view tag) {
  // FNV-1a over the tag bytes, then fold into the seed.
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return mix_seed(seed, h);
}

RandomStream query_stream(std::uint64_t run_seed, std::string_view word,
                          std::size_t query_index) {
  return RandomStream(
      mix_seed(mix_seed(run_seed, word), static_cast<std::uint64_t>(query_index)));
}

}  // namespace wsd
