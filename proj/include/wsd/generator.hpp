#ifndef WSD_GENERATOR_HPP
#define WSD_GENERATOR_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "wsd/corpus.hpp"

namespace wsd {

/// Synthetic sense-tagged corpus generator for benchmarking. Per instance a
/// true sense is drawn from a skewed prior; each of the four context
/// positions carries a sense-revealing marker token with probability
/// `informativeness`, otherwise a token from a shared noise vocabulary. The
/// recorded gold label equals the true sense except with probability
/// `noise_rate`, where it is resampled uniformly over the senses. With
/// informativeness 0 the features are independent of the labels.
struct GeneratorConfig {
  int words = 5;
  int senses = 4;
  double prior_skew = 0.6;  // prior(rank) proportional to skew^(rank-1); 1 = uniform
  double informativeness = 0.9;
  double noise_rate = 0.1;
  int train_per_word = 500;
  int test_per_word = 200;
  int noise_vocab = 50;
  std::uint64_t seed = 0;
};

/// Throws std::invalid_argument on out-of-range parameters. Deterministic in
/// the config (including the seed).
std::pair<std::map<std::string, Dataset>, std::map<std::string, Dataset>>
generate_datasets(const GeneratorConfig& config);

}  // namespace wsd

#endif
