#ifndef WSD_MVDM_HPP
#define WSD_MVDM_HPP

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "wsd/counts.hpp"

namespace wsd {

/// The modified value difference metric: the distance between two symbolic
/// values of a feature is the L1 distance between their class-conditional
/// probability vectors, estimated from raw training counts. Values never seen
/// in training fall back to the class prior distribution, so every value maps
/// to a genuine probability vector and the metric axioms hold; two unseen
/// values are at distance 0 from each other.
class DistanceModel {
 public:
  /// Throws std::invalid_argument on an empty example sequence.
  static DistanceModel train(const std::vector<LabeledExample>& examples);

  /// d(v1, v2) = sum_i |P(Ci|v1) - P(Ci|v2)|, in [0, 2].
  double value_distance(std::size_t feature, const std::string& v1,
                        const std::string& v2) const;

  /// Sum of value_distance over the 7 features, in [0, 14].
  double example_distance(const FeatureVector& a, const FeatureVector& b) const;

  int sense_count() const { return table_.sense_count(); }
  std::size_t training_size() const { return table_.training_size; }
  double class_prior(SenseLabel label) const;
  const ValueClassCounts* find_value(std::size_t feature,
                                     const std::string& value) const {
    return table_.find(feature, value);
  }
  const ClassCountTable& counts() const { return table_; }

  /// Versioned structured-text dump (`mvdm-v1`). Reload reproduces
  /// bit-identical distances. load throws ModelFormatError on bad input.
  void save(std::ostream& out) const;
  static DistanceModel load(std::istream& in);

 private:
  explicit DistanceModel(ClassCountTable table);

  ClassCountTable table_;
  std::vector<double> prior_;  // index = sense rank - 1
};

}  // namespace wsd

#endif
