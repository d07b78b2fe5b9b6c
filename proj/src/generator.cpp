#include "wsd/generator.hpp"

#include <stdexcept>
#include <vector>

#include "wsd/rng.hpp"

namespace wsd {

namespace {

void validate(const GeneratorConfig& c) {
  if (c.words < 1) throw std::invalid_argument("words must be >= 1");
  if (c.senses < 1) throw std::invalid_argument("senses must be >= 1");
  if (!(c.prior_skew > 0.0) || c.prior_skew > 1.0)
    throw std::invalid_argument("prior skew must be in (0, 1]");
  if (c.informativeness < 0.0 || c.informativeness > 1.0)
    throw std::invalid_argument("informativeness must be in [0, 1]");
  if (c.noise_rate < 0.0 || c.noise_rate > 1.0)
    throw std::invalid_argument("noise rate must be in [0, 1]");
  if (c.train_per_word < 1) throw std::invalid_argument("train size must be >= 1");
  if (c.test_per_word < 0) throw std::invalid_argument("test size must be >= 0");
  if (c.noise_vocab < 1) throw std::invalid_argument("noise vocab must be >= 1");
}

std::vector<double> prior_cdf(int senses, double skew) {
  std::vector<double> weights(static_cast<std::size_t>(senses));
  double w = 1.0, sum = 0.0;
  for (auto& x : weights) {
    x = w;
    sum += w;
    w *= skew;
  }
  double acc = 0.0;
  for (auto& x : weights) {
    acc += x / sum;
    x = acc;
  }
  weights.back() = 1.0;
  return weights;
}

int draw_sense(const std::vector<double>& cdf, RandomStream& rng) {
  double u = rng.uniform_unit();
  for (std::size_t i = 0; i < cdf.size(); ++i)
    if (u < cdf[i]) return static_cast<int>(i + 1);
  return static_cast<int>(cdf.size());
}

Instance make_instance(const std::string& word, int sense,
                       const GeneratorConfig& c, RandomStream& rng) {
  Instance inst;
  inst.word = word;
  auto token = [&](const char* pos) -> std::string {
    if (rng.uniform_unit() < c.informativeness)
      return word + ":s" + std::to_string(sense) + ":" + pos;
    return "n" + std::to_string(rng.uniform_index(
                     static_cast<std::size_t>(c.noise_vocab)));
  };
  inst.left = {token("l2"), token("l1")};
  inst.right = {token("r1"), token("r2")};
  inst.label = sense;
  if (rng.uniform_unit() < c.noise_rate)
    inst.label =
        1 + static_cast<int>(rng.uniform_index(static_cast<std::size_t>(c.senses)));
  return inst;
}

}  // namespace

std::pair<std::map<std::string, Dataset>, std::map<std::string, Dataset>>
generate_datasets(const GeneratorConfig& config) {
  validate(config);
  const std::vector<double> cdf = prior_cdf(config.senses, config.prior_skew);

  std::map<std::string, Dataset> train, test;
  for (int w = 0; w < config.words; ++w) {
    std::string word = "word" + std::to_string(w);
    RandomStream rng(mix_seed(mix_seed(config.seed, "gen"), word));

    Dataset& tr = train[word];
    tr.word = word;
    tr.sense_count = config.senses;
    for (int i = 0; i < config.train_per_word; ++i)
      tr.instances.push_back(
          make_instance(word, draw_sense(cdf, rng), config, rng));

    Dataset& te = test[word];
    te.word = word;
    te.sense_count = config.senses;
    for (int i = 0; i < config.test_per_word; ++i)
      te.instances.push_back(
          make_instance(word, draw_sense(cdf, rng), config, rng));
  }
  if (config.test_per_word == 0) test.clear();
  return {std::move(train), std::move(test)};
}

}  // namespace wsd
