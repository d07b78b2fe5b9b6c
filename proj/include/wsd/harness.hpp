#ifndef WSD_HARNESS_HPP
#define WSD_HARNESS_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wsd/corpus.hpp"

namespace wsd {

enum class Algorithm { kPebls, kNaiveBayes, kSense1, kMostFrequent };
enum class ReportFormat { kTsv, kJson };

struct ExperimentConfig {
  std::string train_path;
  std::string test_path;
  Algorithm algorithm = Algorithm::kPebls;
  std::optional<int> k = 1;  // nullopt = select by cross validation (pebls only)
  int folds = 10;
  std::uint64_t seed = 0;
  bool lowercase = false;
  ReportFormat format = ReportFormat::kTsv;
  int workers = 0;  // 0 = hardware concurrency
};

struct WordReport {
  std::size_t test_count = 0;
  std::size_t correct = 0;
  std::optional<double> accuracy;   // empty when test_count is 0 or on failure
  std::optional<int> chosen_k;      // set by pebls with k selection
  std::string error;                // non-empty = word failed, excluded from totals

  bool failed() const { return !error.empty(); }
};

struct Report {
  std::map<std::string, WordReport> per_word;
  std::size_t test_count = 0;  // over non-failed words
  std::size_t correct = 0;
  std::optional<double> micro_accuracy;
  bool partial_failure = false;
};

/// Predicts sense rank 1 for every test instance; needs no training data.
std::vector<SenseLabel> baseline_sense1(const Dataset& test);

/// Modal training label for every test instance; modal ties go to the
/// smallest sense rank. Throws std::invalid_argument on an empty training set.
std::vector<SenseLabel> baseline_most_frequent(const Dataset& train,
                                               const Dataset& test);
SenseLabel modal_label(const Dataset& train);

/// Trains one per-word model per test word and scores exact label matches,
/// aggregated as micro accuracy. Words missing from the training corpus (for
/// algorithms that need one) are recorded as per-word errors, excluded from
/// the aggregate, and flagged via Report::partial_failure. Words run in
/// parallel; all randomness derives from the config seed, so reports are
/// byte-identical across runs and schedules.
Report run_experiment(const std::map<std::string, Dataset>& train,
                      const std::map<std::string, Dataset>& test,
                      const ExperimentConfig& config);
/// Same, reading the corpora from config.train_path / config.test_path.
Report run_experiment(const ExperimentConfig& config);

/// TSV: header + one line per word (sorted) + an OVERALL line, columns
/// word/test/correct/accuracy/chosenK, accuracy with 4 decimals, `-` for
/// absent values. JSON mirrors the same fields. Both are byte-stable.
std::string format_report(const Report& report, ReportFormat format);

}  // namespace wsd

#endif
