#include <doctest.h>

#include <sstream>
#include <vector>

#include "wsd/knn.hpp"

using namespace wsd;

namespace {

FeatureVector uniform_fv(const std::string& v) {
  return {v, v, v, v, v, v, v};
}

LabeledExample example_at3(const std::string& value, SenseLabel label) {
  FeatureVector fv = uniform_fv("x");
  fv[3] = value;
  return {fv, label};
}

FeatureVector query_at3(const std::string& value) {
  FeatureVector fv = uniform_fv("x");
  fv[3] = value;
  return fv;
}

std::vector<LabeledExample> random_store_examples(RandomStream& rng,
                                                  std::size_t n, int senses,
                                                  int vocab) {
  std::vector<LabeledExample> examples;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector fv;
    for (auto& v : fv) v = "v" + std::to_string(rng.uniform_index(vocab));
    examples.emplace_back(fv, 1 + static_cast<int>(rng.uniform_index(senses)));
  }
  return examples;
}

FeatureVector random_query(RandomStream& rng, int vocab) {
  FeatureVector fv;
  for (auto& v : fv) v = "v" + std::to_string(rng.uniform_index(vocab));
  return fv;
}

}  // namespace

TEST_CASE("nearest: a globally unique self-match comes first at distance 0") {
  std::vector<LabeledExample> examples;
  for (int i = 0; i < 8; ++i)
    examples.push_back({uniform_fv("u" + std::to_string(i)), i + 1});
  ExemplarStore store = ExemplarStore::train(examples);
  auto nb = store.nearest(examples[5].first, 1);
  REQUIRE(nb.size() == 1);
  CHECK(nb[0].index == 5);
  CHECK(nb[0].distance == 0.0);
}

TEST_CASE("nearest: k equal to store size returns every index") {
  std::vector<LabeledExample> examples = {
      example_at3("a", 1), example_at3("b", 2), example_at3("c", 1)};
  ExemplarStore store = ExemplarStore::train(examples);
  auto nb = store.nearest(query_at3("a"), 3);
  std::vector<std::size_t> indices;
  for (const auto& n : nb) indices.push_back(n.index);
  std::sort(indices.begin(), indices.end());
  CHECK(indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("nearest: equal distances break by training index") {
  // feature-3 values [b, a, a, c], labels [1, 2, 2, 1]; a query carrying `a`
  // sits at distance 0 from indices 1 and 2 and at 2 from the pure-class
  // values b and c.
  std::vector<LabeledExample> examples = {
      example_at3("b", 1), example_at3("a", 2), example_at3("a", 2),
      example_at3("c", 1)};
  ExemplarStore store = ExemplarStore::train(examples);
  auto nb = store.nearest(query_at3("a"), 3);
  REQUIRE(nb.size() == 3);
  CHECK(nb[0].index == 1);
  CHECK(nb[0].distance == 0.0);
  CHECK(nb[1].index == 2);
  CHECK(nb[1].distance == 0.0);
  CHECK(nb[2].index == 0);  // distance tie with index 3, smaller index wins
  CHECK(nb[2].distance == doctest::Approx(2.0));
}

TEST_CASE("nearest/classify: k out of range") {
  ExemplarStore store = ExemplarStore::train({example_at3("a", 1)});
  RandomStream rng(0);
  CHECK_THROWS_AS(store.nearest(query_at3("a"), 0), std::invalid_argument);
  CHECK_THROWS_AS(store.nearest(query_at3("a"), 2), std::invalid_argument);
  CHECK_THROWS_AS(store.classify(query_at3("a"), 2, rng), std::invalid_argument);
}

TEST_CASE("classify: k=1 returns the nearest neighbor's label") {
  RandomStream rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    auto examples = random_store_examples(rng, 5 + rng.uniform_index(46), 4, 4);
    ExemplarStore store = ExemplarStore::train(examples);
    FeatureVector q = random_query(rng, 5);

    // independent linear-scan oracle over (distance, index)
    std::size_t best = 0;
    double best_d = store.model().example_distance(q, examples[0].first);
    for (std::size_t i = 1; i < examples.size(); ++i) {
      double d = store.model().example_distance(q, examples[i].first);
      if (d < best_d) {
        best = i;
        best_d = d;
      }
    }
    RandomStream tie(7);
    CHECK(store.classify(q, 1, tie).chosen == examples[best].second);
  }
}

TEST_CASE("classify: majority of three") {
  std::vector<LabeledExample> examples = {
      example_at3("q", 1), example_at3("q", 1), example_at3("q", 2),
      example_at3("far", 2), example_at3("far", 1)};
  ExemplarStore store = ExemplarStore::train(examples);
  RandomStream rng(0);
  Vote vote = store.classify(query_at3("q"), 3, rng);
  CHECK(vote.chosen == 1);
  CHECK(vote.tallies.at(1) == 2);
  CHECK(vote.tallies.at(2) == 1);
  CHECK(vote.neighbor_indices == std::vector<std::size_t>{0, 1, 2});
}

TEST_CASE("classify: k = store size picks the modal training label") {
  RandomStream rng(32);
  for (int trial = 0; trial < 25; ++trial) {
    auto examples = random_store_examples(rng, 10 + rng.uniform_index(40), 3, 4);
    // force a unique modal label
    for (std::size_t i = 0; i < examples.size() / 2 + 1; ++i)
      examples[i].second = 2;
    SenseLabel modal = 2;

    ExemplarStore store = ExemplarStore::train(examples);
    FeatureVector q = random_query(rng, 5);
    RandomStream tie(9);
    CHECK(store.classify(q, store.size(), tie).chosen == modal);
  }
}

TEST_CASE("classify: monotone neighbor prefixes") {
  RandomStream rng(33);
  auto examples = random_store_examples(rng, 40, 3, 3);
  ExemplarStore store = ExemplarStore::train(examples);
  for (int trial = 0; trial < 10; ++trial) {
    FeatureVector q = random_query(rng, 4);
    auto full = store.nearest(q, store.size());
    for (std::size_t k = 1; k < store.size(); ++k) {
      auto prefix = store.nearest(q, k);
      for (std::size_t i = 0; i < k; ++i) CHECK(prefix[i] == full[i]);
    }
  }
}

TEST_CASE("classify: two-way majority ties split evenly and reproducibly") {
  std::vector<LabeledExample> examples = {example_at3("a", 1),
                                          example_at3("a", 2)};
  ExemplarStore store = ExemplarStore::train(examples);
  int picked_one = 0;
  const int draws = 2000;
  for (int i = 0; i < draws; ++i) {
    RandomStream rng(query_stream(99, "tie", static_cast<std::size_t>(i)));
    Vote vote = store.classify(query_at3("a"), 2, rng);
    if (vote.chosen == 1) picked_one++;
    RandomStream again(query_stream(99, "tie", static_cast<std::size_t>(i)));
    CHECK(store.classify(query_at3("a"), 2, again).chosen == vote.chosen);
  }
  double frac = static_cast<double>(picked_one) / draws;
  CHECK(frac > 0.45);
  CHECK(frac < 0.55);
}

TEST_CASE("persistence: store round trip preserves behavior") {
  RandomStream rng(34);
  auto examples = random_store_examples(rng, 25, 3, 4);
  ExemplarStore store = ExemplarStore::train(examples);
  std::ostringstream out;
  store.save(out);
  std::istringstream in(out.str());
  ExemplarStore reloaded = ExemplarStore::load(in);

  REQUIRE(reloaded.size() == store.size());
  for (int trial = 0; trial < 20; ++trial) {
    FeatureVector q = random_query(rng, 5);
    CHECK(store.nearest(q, 7) == reloaded.nearest(q, 7));
    RandomStream a(5), b(5);
    CHECK(store.classify(q, 10, a).chosen == reloaded.classify(q, 10, b).chosen);
  }
}
