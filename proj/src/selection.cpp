#include "wsd/selection.hpp"

#include <algorithm>

#include "wsd/collocation.hpp"
#include "wsd/knn.hpp"
#include "wsd/rng.hpp"

namespace wsd {

std::vector<int> default_k_grid() {
  std::vector<int> grid = {1};
  for (int k = 5; k <= 100; k += 5) grid.push_back(k);
  return grid;
}

CVResult cross_validate_k(const Dataset& dataset, const std::vector<int>& grid,
                          int m, std::uint64_t seed, bool lowercase) {
  if (grid.empty()) throw std::invalid_argument("empty k grid");
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 1) throw std::invalid_argument("k grid values must be >= 1");
    if (i > 0 && grid[i] <= grid[i - 1])
      throw std::invalid_argument("k grid must be strictly increasing");
  }
  if (dataset.instances.empty())
    throw std::invalid_argument("empty dataset");

  const std::vector<int> folds = assign_folds(dataset, m, seed);
  const std::size_t n = dataset.size();

  std::vector<FeatureVector> features;
  features.reserve(n);
  for (const Instance& inst : dataset.instances)
    features.push_back(extract_collocations(inst, lowercase));

  std::map<int, int> errors;
  for (int k : grid) errors[k] = 0;

  for (int fold = 0; fold < m; ++fold) {
    std::vector<LabeledExample> training;
    training.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
      if (folds[i] != fold)
        training.emplace_back(features[i], dataset.instances[i].label);
    ExemplarStore store = ExemplarStore::train(std::move(training));
    const std::size_t train_size = store.size();

    for (std::size_t q = 0; q < n; ++q) {
      if (folds[q] != fold) continue;
      // One full distance sort per query; grid prefixes reuse it.
      std::vector<Neighbor> ordered = store.nearest(features[q], train_size);
      std::map<SenseLabel, int> tally;
      std::size_t consumed = 0;
      for (int k : grid) {
        std::size_t clamped = std::min<std::size_t>(
            static_cast<std::size_t>(k), train_size);
        while (consumed < clamped) {
          tally[store.example(ordered[consumed].index).second]++;
          ++consumed;
        }
        RandomStream rng = query_stream(seed, dataset.word, q);
        SenseLabel chosen = pick_majority(tally, rng);
        if (chosen != dataset.instances[q].label) errors[k]++;
      }
    }
  }

  CVResult result;
  int best_errors = static_cast<int>(n) + 1;
  for (int k : grid) {
    KStat stat;
    stat.errors = errors[k];
    stat.total = static_cast<int>(n);
    stat.error_rate = static_cast<double>(stat.errors) / stat.total;
    result.per_k.emplace(k, stat);
    if (stat.errors < best_errors) {
      best_errors = stat.errors;
      result.best_k = k;
    }
  }
  return result;
}

}  // namespace wsd
