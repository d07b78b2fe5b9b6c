#include "wsd/mvdm.hpp"

#include <cmath>
#include <istream>
#include <ostream>

namespace wsd {

namespace {
constexpr const char* kVersion = "mvdm-v1";
}

DistanceModel::DistanceModel(ClassCountTable table) : table_(std::move(table)) {
  prior_.reserve(table_.class_counts.size());
  for (int c : table_.class_counts)
    prior_.push_back(static_cast<double>(c) /
                     static_cast<double>(table_.training_size));
}

DistanceModel DistanceModel::train(const std::vector<LabeledExample>& examples) {
  return DistanceModel(ClassCountTable::from_examples(examples));
}

double DistanceModel::class_prior(SenseLabel label) const {
  std::size_t i = static_cast<std::size_t>(label - 1);
  return i < prior_.size() ? prior_[i] : 0.0;
}

double DistanceModel::value_distance(std::size_t feature, const std::string& v1,
                                     const std::string& v2) const {
  const ValueClassCounts* c1 = table_.find(feature, v1);
  const ValueClassCounts* c2 = table_.find(feature, v2);
  double sum = 0.0;
  const std::size_t n = prior_.size();
  for (std::size_t i = 0; i < n; ++i) {
    double p1 = c1 ? static_cast<double>(c1->per_class[i]) / c1->total : prior_[i];
    double p2 = c2 ? static_cast<double>(c2->per_class[i]) / c2->total : prior_[i];
    sum += std::fabs(p1 - p2);
  }
  return sum;
}

double DistanceModel::example_distance(const FeatureVector& a,
                                       const FeatureVector& b) const {
  double sum = 0.0;
  for (std::size_t f = 0; f < kFeatureCount; ++f)
    sum += value_distance(f, a[f], b[f]);
  return sum;
}

void DistanceModel::save(std::ostream& out) const { table_.save(out, kVersion); }

DistanceModel DistanceModel::load(std::istream& in) {
  return DistanceModel(ClassCountTable::load(in, kVersion));
}

}  // namespace wsd
