#include "wsd/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "wsd/bayes.hpp"
#include "wsd/collocation.hpp"
#include "wsd/knn.hpp"
#include "wsd/rng.hpp"
#include "wsd/selection.hpp"

namespace wsd {

namespace {

std::vector<LabeledExample> to_examples(const Dataset& dataset, bool lowercase) {
  std::vector<LabeledExample> examples;
  examples.reserve(dataset.size());
  for (const Instance& inst : dataset.instances)
    examples.emplace_back(extract_collocations(inst, lowercase), inst.label);
  return examples;
}

WordReport evaluate_word(const Dataset* train, const Dataset& test,
                         const ExperimentConfig& config) {
  WordReport report;
  report.test_count = test.size();

  const bool needs_training = config.algorithm != Algorithm::kSense1;
  if (needs_training && (train == nullptr || train->instances.empty())) {
    report.error = "no training data for test word '" + test.word + "'";
    return report;
  }

  std::vector<SenseLabel> predictions;
  switch (config.algorithm) {
    case Algorithm::kSense1:
      predictions = baseline_sense1(test);
      break;
    case Algorithm::kMostFrequent:
      predictions = baseline_most_frequent(*train, test);
      break;
    case Algorithm::kNaiveBayes: {
      NBModel model = NBModel::train(to_examples(*train, config.lowercase));
      predictions.reserve(test.size());
      for (const Instance& inst : test.instances)
        predictions.push_back(
            model.classify(extract_collocations(inst, config.lowercase)).first);
      break;
    }
    case Algorithm::kPebls: {
      ExemplarStore store =
          ExemplarStore::train(to_examples(*train, config.lowercase));
      std::size_t k;
      if (config.k.has_value()) {
        k = std::min<std::size_t>(static_cast<std::size_t>(*config.k),
                                  store.size());
      } else {
        CVResult cv = cross_validate_k(*train, default_k_grid(), config.folds,
                                       config.seed, config.lowercase);
        report.chosen_k = cv.best_k;
        k = std::min<std::size_t>(static_cast<std::size_t>(cv.best_k),
                                  store.size());
      }
      predictions.reserve(test.size());
      for (std::size_t i = 0; i < test.size(); ++i) {
        RandomStream rng = query_stream(config.seed, test.word, i);
        predictions.push_back(
            store
                .classify(extract_collocations(test.instances[i],
                                               config.lowercase),
                          k, rng)
                .chosen);
      }
      break;
    }
  }

  for (std::size_t i = 0; i < test.size(); ++i)
    if (predictions[i] == test.instances[i].label) report.correct++;
  if (report.test_count > 0)
    report.accuracy = static_cast<double>(report.correct) / report.test_count;
  return report;
}

std::string format_accuracy(const std::optional<double>& accuracy) {
  if (!accuracy.has_value()) return "-";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.4f", *accuracy);
  return buf;
}

double round4(double x) { return std::round(x * 10000.0) / 10000.0; }

}  // namespace

std::vector<SenseLabel> baseline_sense1(const Dataset& test) {
  return std::vector<SenseLabel>(test.size(), 1);
}

SenseLabel modal_label(const Dataset& train) {
  if (train.instances.empty())
    throw std::invalid_argument("most-frequent baseline needs training data");
  std::map<SenseLabel, int> counts;
  for (const Instance& inst : train.instances) counts[inst.label]++;
  SenseLabel best = 0;
  int best_count = 0;
  for (const auto& [label, count] : counts) {  // ascending rank: ties keep smallest
    if (count > best_count) {
      best = label;
      best_count = count;
    }
  }
  return best;
}

std::vector<SenseLabel> baseline_most_frequent(const Dataset& train,
                                               const Dataset& test) {
  return std::vector<SenseLabel>(test.size(), modal_label(train));
}

Report run_experiment(const std::map<std::string, Dataset>& train,
                      const std::map<std::string, Dataset>& test,
                      const ExperimentConfig& config) {
  if (config.folds < 2) throw std::invalid_argument("folds must be >= 2");
  if (config.k.has_value() && *config.k < 1)
    throw std::invalid_argument("k must be >= 1");
  if (!config.k.has_value() && config.algorithm != Algorithm::kPebls)
    throw std::invalid_argument("k selection is only available for pebls");

  struct Job {
    const std::string* word;
    const Dataset* train;
    const Dataset* test;
    WordReport result;
  };
  std::vector<Job> jobs;
  jobs.reserve(test.size());
  for (const auto& [word, test_ds] : test) {
    auto it = train.find(word);
    jobs.push_back({&word, it == train.end() ? nullptr : &it->second, &test_ds, {}});
  }

  // Words are independent; results are merged in word order, so the schedule
  // never changes the report.
  unsigned workers = config.workers > 0
                         ? static_cast<unsigned>(config.workers)
                         : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max<std::size_t>(jobs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= jobs.size()) return;
      try {
        jobs[i].result = evaluate_word(jobs[i].train, *jobs[i].test, config);
      } catch (const std::exception& e) {
        jobs[i].result = WordReport{};
        jobs[i].result.test_count = jobs[i].test->size();
        jobs[i].result.error = e.what();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < workers; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  Report report;
  for (Job& job : jobs) {
    if (job.result.failed()) {
      report.partial_failure = true;
    } else {
      report.test_count += job.result.test_count;
      report.correct += job.result.correct;
    }
    report.per_word.emplace(*job.word, std::move(job.result));
  }
  if (report.test_count > 0)
    report.micro_accuracy =
        static_cast<double>(report.correct) / report.test_count;
  return report;
}

Report run_experiment(const ExperimentConfig& config) {
  std::map<std::string, Dataset> train;
  if (config.algorithm != Algorithm::kSense1 || !config.train_path.empty())
    train = parse_corpus_file(config.train_path);
  std::map<std::string, Dataset> test = parse_corpus_file(config.test_path);
  return run_experiment(train, test, config);
}

std::string format_report(const Report& report, ReportFormat format) {
  if (format == ReportFormat::kTsv) {
    std::ostringstream out;
    out << "word\ttest\tcorrect\taccuracy\tchosenK\n";
    for (const auto& [word, wr] : report.per_word) {
      out << word << '\t' << wr.test_count << '\t' << wr.correct << '\t'
          << format_accuracy(wr.accuracy) << '\t';
      if (wr.chosen_k.has_value())
        out << *wr.chosen_k;
      else
        out << '-';
      out << '\n';
    }
    out << "OVERALL\t" << report.test_count << '\t' << report.correct << '\t'
        << format_accuracy(report.micro_accuracy) << "\t-\n";
    return out.str();
  }

  nlohmann::ordered_json j;
  j["words"] = nlohmann::ordered_json::object();
  for (const auto& [word, wr] : report.per_word) {
    nlohmann::ordered_json w;
    w["test"] = wr.test_count;
    w["correct"] = wr.correct;
    w["accuracy"] =
        wr.accuracy.has_value() ? nlohmann::ordered_json(round4(*wr.accuracy))
                                : nlohmann::ordered_json(nullptr);
    w["chosenK"] = wr.chosen_k.has_value()
                       ? nlohmann::ordered_json(*wr.chosen_k)
                       : nlohmann::ordered_json(nullptr);
    if (wr.failed()) w["error"] = wr.error;
    j["words"][word] = std::move(w);
  }
  j["overall"] = {
      {"test", report.test_count},
      {"correct", report.correct},
      {"microAccuracy", report.micro_accuracy.has_value()
                            ? nlohmann::ordered_json(round4(*report.micro_accuracy))
                            : nlohmann::ordered_json(nullptr)}};
  return j.dump(2) + "\n";
}

}  // namespace wsd
