#include "wsd/bayes.hpp"

#include <cmath>
#include <istream>
#include <ostream>

namespace wsd {

namespace {
constexpr const char* kVersion = "nb-v1";
}

NBModel NBModel::train(const std::vector<LabeledExample>& examples) {
  return NBModel(ClassCountTable::from_examples(examples));
}

double NBModel::prior(SenseLabel label) const {
  std::size_t i = static_cast<std::size_t>(label - 1);
  if (i >= table_.class_counts.size()) return 0.0;
  return static_cast<double>(table_.class_counts[i]) /
         static_cast<double>(table_.training_size);
}

double NBModel::conditional(std::size_t feature, const std::string& value,
                            SenseLabel label) const {
  std::size_t i = static_cast<std::size_t>(label - 1);
  if (i >= table_.class_counts.size() || table_.class_counts[i] == 0) return 0.0;
  const ValueClassCounts* vc = table_.find(feature, value);
  int count = vc ? vc->per_class[i] : 0;
  if (count > 0)
    return static_cast<double>(count) /
           static_cast<double>(table_.class_counts[i]);
  return prior(label) / static_cast<double>(table_.training_size);
}

std::pair<SenseLabel, std::map<SenseLabel, double>> NBModel::classify(
    const FeatureVector& query) const {
  std::map<SenseLabel, double> scores;
  SenseLabel best_label = 0;
  double best_score = 0.0;
  for (std::size_t i = 0; i < table_.class_counts.size(); ++i) {
    if (table_.class_counts[i] == 0) continue;
    SenseLabel label = static_cast<SenseLabel>(i + 1);
    double score = std::log(prior(label));
    for (std::size_t f = 0; f < kFeatureCount; ++f)
      score += std::log(conditional(f, query[f], label));
    scores.emplace(label, score);
    if (best_label == 0 || score > best_score) {  // ties keep the smaller rank
      best_label = label;
      best_score = score;
    }
  }
  return {best_label, std::move(scores)};
}

void NBModel::save(std::ostream& out) const { table_.save(out, kVersion); }

NBModel NBModel::load(std::istream& in) {
  return NBModel(ClassCountTable::load(in, kVersion));
}

}  // namespace wsd
