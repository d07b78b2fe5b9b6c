#include <doctest.h>

#include <cmath>
#include <sstream>
#include <vector>

#include "wsd/mvdm.hpp"
#include "wsd/rng.hpp"

using namespace wsd;

namespace {

FeatureVector uniform_fv(const std::string& v) {
  return {v, v, v, v, v, v, v};
}

// All features constant except feature 3, which carries `value`.
LabeledExample example_at3(const std::string& value, SenseLabel label) {
  FeatureVector fv = uniform_fv("x");
  fv[3] = value;
  return {fv, label};
}

std::vector<LabeledExample> random_examples(RandomStream& rng, std::size_t n,
                                            int senses, int vocab) {
  std::vector<LabeledExample> examples;
  for (std::size_t i = 0; i < n; ++i) {
    FeatureVector fv;
    for (auto& v : fv) v = "v" + std::to_string(rng.uniform_index(vocab));
    examples.emplace_back(fv,
                          1 + static_cast<int>(rng.uniform_index(senses)));
  }
  return examples;
}

}  // namespace

TEST_CASE("train: exact counts and priors") {
  std::vector<LabeledExample> examples = {
      example_at3("bank", 1), example_at3("bank", 1), example_at3("loan", 2)};
  DistanceModel model = DistanceModel::train(examples);

  const ValueClassCounts* bank = model.find_value(3, "bank");
  REQUIRE(bank != nullptr);
  CHECK(bank->count(1) == 2);
  CHECK(bank->count(2) == 0);
  CHECK(bank->total == 2);
  const ValueClassCounts* loan = model.find_value(3, "loan");
  REQUIRE(loan != nullptr);
  CHECK(loan->count(2) == 1);
  CHECK(loan->total == 1);

  CHECK(model.class_prior(1) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(model.class_prior(2) == doctest::Approx(1.0 / 3).epsilon(1e-15));
  CHECK(model.sense_count() == 2);
  CHECK(model.training_size() == 3);
}

TEST_CASE("train: singleton training set") {
  DistanceModel model = DistanceModel::train({example_at3("solo", 1)});
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    const ValueClassCounts* vc =
        model.find_value(f, f == 3 ? "solo" : "x");
    REQUIRE(vc != nullptr);
    CHECK(vc->total == 1);
    CHECK(vc->count(1) == 1);
  }
}

TEST_CASE("train: empty example sequence is an error") {
  CHECK_THROWS_AS(DistanceModel::train({}), std::invalid_argument);
}

TEST_CASE("value_distance: hand-computed cases") {
  // v1 counts {1:2, 2:1} (N=3), v2 counts {1:1, 2:1} (N=2)
  std::vector<LabeledExample> examples = {
      example_at3("v1", 1), example_at3("v1", 1), example_at3("v1", 2),
      example_at3("v2", 1), example_at3("v2", 2)};
  DistanceModel model = DistanceModel::train(examples);
  CHECK(model.value_distance(3, "v1", "v2") ==
        doctest::Approx(1.0 / 3).epsilon(1e-12));
  CHECK(model.value_distance(3, "v1", "v1") == 0.0);
}

TEST_CASE("value_distance: maximal separation is 2") {
  std::vector<LabeledExample> examples = {
      example_at3("a", 1), example_at3("a", 1), example_at3("b", 2)};
  DistanceModel model = DistanceModel::train(examples);
  CHECK(model.value_distance(3, "a", "b") == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("value_distance: unseen values use the class prior") {
  std::vector<LabeledExample> examples = {
      example_at3("a", 1), example_at3("a", 1), example_at3("b", 2)};
  DistanceModel model = DistanceModel::train(examples);
  // two unseen values share the prior distribution
  CHECK(model.value_distance(3, "never1", "never2") == 0.0);
  // unseen vs pure-class-1 value: |2/3-1| + |1/3-0| = 2/3
  CHECK(model.value_distance(3, "never", "a") ==
        doctest::Approx(2.0 / 3).epsilon(1e-12));
}

TEST_CASE("example_distance: additivity and identity") {
  // every feature carries the {1:2,2:1} vs {1:1,2:1} pattern
  std::vector<LabeledExample> examples = {
      {uniform_fv("v1"), 1}, {uniform_fv("v1"), 1}, {uniform_fv("v1"), 2},
      {uniform_fv("v2"), 1}, {uniform_fv("v2"), 2}};
  DistanceModel model = DistanceModel::train(examples);
  CHECK(model.example_distance(uniform_fv("v1"), uniform_fv("v1")) == 0.0);
  CHECK(model.example_distance(uniform_fv("v1"), uniform_fv("v2")) ==
        doctest::Approx(7.0 / 3).epsilon(1e-12));
}

TEST_CASE("stored distributions are proper and totals add up") {
  RandomStream rng(21);
  auto examples = random_examples(rng, 80, 4, 6);
  DistanceModel model = DistanceModel::train(examples);
  const ClassCountTable& table = model.counts();
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    long long feature_total = 0;
    for (const auto& [value, vc] : table.per_feature[f]) {
      REQUIRE(vc.total >= 1);
      long long sum = 0;
      double prob_sum = 0.0;
      for (int c : vc.per_class) {
        sum += c;
        prob_sum += static_cast<double>(c) / vc.total;
      }
      CHECK(sum == vc.total);
      CHECK(std::fabs(prob_sum - 1.0) <= 1e-12);
      feature_total += vc.total;
    }
    CHECK(feature_total == static_cast<long long>(examples.size()));
  }
  double prior_sum = 0.0;
  for (int c = 1; c <= model.sense_count(); ++c) prior_sum += model.class_prior(c);
  CHECK(std::fabs(prior_sum - 1.0) <= 1e-12);
}

TEST_CASE("metric axioms on random models") {
  RandomStream rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    auto examples =
        random_examples(rng, 10 + rng.uniform_index(60),
                        2 + static_cast<int>(rng.uniform_index(5)), 5);
    DistanceModel model = DistanceModel::train(examples);
    std::vector<std::string> values = {"v0", "v1", "v2", "v3", "v4", "nope"};
    for (const auto& a : values)
      for (const auto& b : values) {
        double d = model.value_distance(2, a, b);
        CHECK(d >= 0.0);
        CHECK(d <= 2.0 + 1e-12);
        CHECK(d == model.value_distance(2, b, a));
        if (a == b) CHECK(d == 0.0);
        for (const auto& c : values)
          CHECK(model.value_distance(2, a, c) <=
                model.value_distance(2, a, b) + model.value_distance(2, b, c) +
                    1e-12);
      }
  }
}

TEST_CASE("persistence: reload reproduces bit-identical distances") {
  RandomStream rng(23);
  auto examples = random_examples(rng, 60, 3, 5);
  DistanceModel model = DistanceModel::train(examples);

  std::ostringstream out;
  model.save(out);
  std::istringstream in(out.str());
  DistanceModel reloaded = DistanceModel::load(in);

  std::vector<std::string> values = {"v0", "v1", "v2", "v3", "v4", "unseen"};
  for (std::size_t f = 0; f < kFeatureCount; ++f)
    for (const auto& a : values)
      for (const auto& b : values)
        CHECK(model.value_distance(f, a, b) == reloaded.value_distance(f, a, b));

  // dump is byte-stable
  std::ostringstream out2;
  reloaded.save(out2);
  CHECK(out.str() == out2.str());
}

TEST_CASE("persistence: malformed dumps are rejected") {
  std::istringstream bad_header("nope-v9\nsenses 1\n");
  CHECK_THROWS_AS(DistanceModel::load(bad_header), ModelFormatError);
  std::istringstream truncated("mvdm-v1\nsenses 2\nexamples 3\n");
  CHECK_THROWS_AS(DistanceModel::load(truncated), ModelFormatError);
}
