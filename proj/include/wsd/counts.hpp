#ifndef WSD_COUNTS_HPP
#define WSD_COUNTS_HPP

#include <cstddef>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "wsd/collocation.hpp"
#include "wsd/corpus.hpp"

namespace wsd {

using LabeledExample = std::pair<FeatureVector, SenseLabel>;

/// Per-value class-occurrence counts for one feature value.
struct ValueClassCounts {
  std::vector<int> per_class;  // index = sense rank - 1
  int total = 0;               // sum of per_class

  int count(SenseLabel label) const {
    std::size_t i = static_cast<std::size_t>(label - 1);
    return i < per_class.size() ? per_class[i] : 0;
  }
};

class ModelFormatError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact integer co-occurrence counts shared by the distance metric and the
/// Naive-Bayes tables: per feature, value -> class counts, plus the overall
/// class histogram. Immutable after construction.
struct ClassCountTable {
  std::vector<int> class_counts;  // index = sense rank - 1
  std::array<std::unordered_map<std::string, ValueClassCounts>, kFeatureCount>
      per_feature;
  std::size_t training_size = 0;

  int sense_count() const { return static_cast<int>(class_counts.size()); }

  const ValueClassCounts* find(std::size_t feature,
                               const std::string& value) const {
    auto it = per_feature[feature].find(value);
    return it == per_feature[feature].end() ? nullptr : &it->second;
  }

  /// Throws std::invalid_argument on an empty example sequence.
  static ClassCountTable from_examples(const std::vector<LabeledExample>& examples);

  /// Structured-text dump: versioned header line, then the class histogram
  /// and one line per (feature, value). Values are whitespace-free by
  /// construction, so fields are space-separated. Reload is count-exact and
  /// therefore reproduces bit-identical probabilities.
  void save(std::ostream& out, std::string_view version) const;
  static ClassCountTable load(std::istream& in, std::string_view version);
};

}  // namespace wsd

#endif
