#ifndef WSD_SELECTION_HPP
#define WSD_SELECTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "wsd/corpus.hpp"

namespace wsd {

/// The default neighbor-count grid: 1, 5, 10, 15, ..., 95, 100 (21 values).
std::vector<int> default_k_grid();

struct KStat {
  int errors = 0;
  int total = 0;
  double error_rate = 0.0;
};

struct CVResult {
  std::map<int, KStat> per_k;
  int best_k = 0;  // smallest k attaining the minimal error rate
};

/// m-fold cross validation of the exemplar classifier over a k grid, on
/// training data only. Folds come from assign_folds(dataset, m, seed); for
/// each fold the distance model and exemplar store are rebuilt on the other
/// m-1 folds, every held-out instance is classified for each k in the grid
/// (k clamped down to the training-portion size when it exceeds it), and
/// errors are pooled over all folds. Per held-out query the full sorted
/// neighbor list is computed once and its prefixes are reused across the
/// grid; tie-breaking streams are re-derived per (seed, word, query index)
/// for every k, so tallies match independent classify calls exactly.
///
/// Throws std::invalid_argument when the grid is empty or not strictly
/// increasing positive, m < 2, or the dataset has fewer than m instances.
CVResult cross_validate_k(const Dataset& dataset, const std::vector<int>& grid,
                          int m, std::uint64_t seed, bool lowercase);

}  // namespace wsd

#endif
