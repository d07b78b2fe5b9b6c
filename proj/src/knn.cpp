#include "wsd/knn.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace wsd {

namespace {
constexpr const char* kExamplesHeader = "examples-v1";
}

SenseLabel pick_majority(const std::map<SenseLabel, int>& tallies,
                         RandomStream& rng) {
  int best = 0;
  for (const auto& [label, count] : tallies) best = std::max(best, count);
  std::vector<SenseLabel> tied;
  for (const auto& [label, count] : tallies)
    if (count == best) tied.push_back(label);
  if (tied.size() == 1) return tied.front();
  return tied[rng.uniform_index(tied.size())];
}

ExemplarStore ExemplarStore::train(std::vector<LabeledExample> examples) {
  DistanceModel model = DistanceModel::train(examples);
  return ExemplarStore(std::move(examples), std::move(model));
}

std::vector<Neighbor> ExemplarStore::nearest(const FeatureVector& query,
                                             std::size_t k) const {
  if (k < 1 || k > examples_.size())
    throw std::invalid_argument("k must be in [1, store size]");
  std::vector<Neighbor> all;
  all.reserve(examples_.size());
  for (std::size_t i = 0; i < examples_.size(); ++i)
    all.push_back({i, model_.example_distance(query, examples_[i].first)});
  std::sort(all.begin(), all.end(), [](const Neighbor& a, const Neighbor& b) {
    if (a.distance != b.distance) return a.distance < b.distance;
    return a.index < b.index;
  });
  all.resize(k);
  return all;
}

Vote ExemplarStore::classify(const FeatureVector& query, std::size_t k,
                             RandomStream& rng) const {
  Vote vote;
  for (const Neighbor& nb : nearest(query, k)) {
    vote.neighbor_indices.push_back(nb.index);
    vote.tallies[examples_[nb.index].second]++;
  }
  vote.chosen = pick_majority(vote.tallies, rng);
  return vote;
}

void ExemplarStore::save(std::ostream& out) const {
  model_.save(out);
  out << kExamplesHeader << ' ' << examples_.size() << '\n';
  for (const auto& [fv, label] : examples_) {
    for (const std::string& v : fv) out << v << ' ';
    out << label << '\n';
  }
}

ExemplarStore ExemplarStore::load(std::istream& in) {
  DistanceModel model = DistanceModel::load(in);
  std::string line;
  if (!std::getline(in, line))
    throw ModelFormatError("truncated store, expected example list header");
  std::istringstream hs(line);
  std::string header;
  std::size_t count = 0;
  if (!(hs >> header >> count) || header != kExamplesHeader)
    throw ModelFormatError("bad example list header");
  std::vector<LabeledExample> examples;
  examples.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    if (!std::getline(in, line)) throw ModelFormatError("truncated example list");
    std::istringstream ls(line);
    LabeledExample ex;
    for (std::string& v : ex.first)
      if (!(ls >> v)) throw ModelFormatError("malformed example line");
    if (!(ls >> ex.second) || ex.second < 1)
      throw ModelFormatError("malformed example label");
    examples.push_back(std::move(ex));
  }
  if (examples.empty()) throw ModelFormatError("store has no examples");
  return ExemplarStore(std::move(examples), std::move(model));
}

}  // namespace wsd
