#ifndef WSD_KNN_HPP
#define WSD_KNN_HPP

#include <cstddef>
#include <iosfwd>
#include <map>
#include <vector>

#include "wsd/mvdm.hpp"
#include "wsd/rng.hpp"

namespace wsd {

struct Neighbor {
  std::size_t index;  // training index
  double distance;

  bool operator==(const Neighbor&) const = default;
};

struct Vote {
  std::vector<std::size_t> neighbor_indices;  // exactly k, (distance, index) order
  std::map<SenseLabel, int> tallies;          // sums to k
  SenseLabel chosen = 0;
};

/// Picks the maximal-tally label; ties among maximal labels are drawn
/// uniformly from the tied set (ascending rank order) using `rng`. The stream
/// is only consumed when a tie actually occurs.
SenseLabel pick_majority(const std::map<SenseLabel, int>& tallies,
                         RandomStream& rng);

/// The exemplar classifier: a query is compared against every stored training
/// example under the trained distance metric, and the majority label of the k
/// nearest decides. Immutable after training; classify is safe for concurrent
/// queries as long as each query uses its own random stream.
class ExemplarStore {
 public:
  /// Trains the distance model on exactly these examples, kept in order.
  static ExemplarStore train(std::vector<LabeledExample> examples);

  std::size_t size() const { return examples_.size(); }
  const LabeledExample& example(std::size_t index) const {
    return examples_[index];
  }
  const DistanceModel& model() const { return model_; }

  /// The first k training examples under the total order (distance, training
  /// index), ascending. Exact linear scan. Throws std::invalid_argument when
  /// k is 0 or exceeds the store size.
  std::vector<Neighbor> nearest(const FeatureVector& query, std::size_t k) const;

  /// Majority vote over nearest(query, k); majority ties broken randomly
  /// via `rng`.
  Vote classify(const FeatureVector& query, std::size_t k,
                RandomStream& rng) const;

  /// Persistence: the `mvdm-v1` model dump followed by the ordered example
  /// list. Reload reproduces bit-identical behavior.
  void save(std::ostream& out) const;
  static ExemplarStore load(std::istream& in);

 private:
  ExemplarStore(std::vector<LabeledExample> examples, DistanceModel model)
      : examples_(std::move(examples)), model_(std::move(model)) {}

  std::vector<LabeledExample> examples_;
  DistanceModel model_;
};

}  // namespace wsd

#endif
