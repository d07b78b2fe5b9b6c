#ifndef WSD_BAYES_HPP
#define WSD_BAYES_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "wsd/counts.hpp"

namespace wsd {

/// Naive-Bayes over the 7 collocation features. Scores are Bayes-numerator
/// log-scores: log P(Ci) + sum_j log q(vj|Ci), where q is the observed
/// conditional P(vj|Ci) when the (value, class) pair occurred in training and
/// the zero-count replacement P(Ci)/N otherwise (N = training size). The
/// evidence denominator is never computed. Deterministic; argmax ties go to
/// the smallest sense rank.
class NBModel {
 public:
  /// Throws std::invalid_argument on an empty example sequence.
  static NBModel train(const std::vector<LabeledExample>& examples);

  /// Returns the chosen label and the per-class log-scores (one entry per
  /// training-observed class). Total: the replacement keeps every score
  /// finite.
  std::pair<SenseLabel, std::map<SenseLabel, double>> classify(
      const FeatureVector& query) const;

  double prior(SenseLabel label) const;
  /// q(value|label) with the zero-count replacement applied.
  double conditional(std::size_t feature, const std::string& value,
                     SenseLabel label) const;
  std::size_t training_size() const { return table_.training_size; }
  int sense_count() const { return table_.sense_count(); }

  /// Versioned structured-text dump (`nb-v1`); count-exact round trip.
  void save(std::ostream& out) const;
  static NBModel load(std::istream& in);

 private:
  explicit NBModel(ClassCountTable table) : table_(std::move(table)) {}

  ClassCountTable table_;
};

}  // namespace wsd

#endif
