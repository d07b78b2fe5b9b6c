// Experiment CLI for the word-sense-disambiguation toolkit.
//
// Subcommands:
//   run       full train/test experiment with one of the four algorithms
//   cv-select cross-validated k selection for a single word
//   distance  debug: distance between two training instances of a word
//   gen       synthetic corpus generator
//
// Exit codes: 0 success, 1 partial per-word failures, 2 configuration or
// parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wsd/collocation.hpp"
#include "wsd/generator.hpp"
#include "wsd/harness.hpp"
#include "wsd/knn.hpp"
#include "wsd/mvdm.hpp"
#include "wsd/selection.hpp"

namespace {

struct RunOptions {
  std::string train, test, algo = "pebls", k = "1", format = "tsv", out;
  int folds = 10;
  std::uint64_t seed = 0;
  bool lowercase = false;
};

int do_run(const RunOptions& opt) {
  wsd::ExperimentConfig config;
  config.train_path = opt.train;
  config.test_path = opt.test;
  config.folds = opt.folds;
  config.seed = opt.seed;
  config.lowercase = opt.lowercase;

  if (opt.algo == "pebls")
    config.algorithm = wsd::Algorithm::kPebls;
  else if (opt.algo == "nb")
    config.algorithm = wsd::Algorithm::kNaiveBayes;
  else if (opt.algo == "sense1")
    config.algorithm = wsd::Algorithm::kSense1;
  else if (opt.algo == "mfs")
    config.algorithm = wsd::Algorithm::kMostFrequent;
  else {
    std::cerr << "unknown algorithm: " << opt.algo << "\n";
    return 2;
  }

  if (opt.k == "auto") {
    if (config.algorithm != wsd::Algorithm::kPebls) {
      std::cerr << "--k auto is only valid with --algo pebls\n";
      return 2;
    }
    config.k = std::nullopt;
  } else {
    try {
      config.k = std::stoi(opt.k);
    } catch (const std::exception&) {
      std::cerr << "--k expects a positive integer or 'auto'\n";
      return 2;
    }
    if (*config.k < 1) {
      std::cerr << "--k must be >= 1\n";
      return 2;
    }
  }

  config.format = opt.format == "json" ? wsd::ReportFormat::kJson
                                       : wsd::ReportFormat::kTsv;

  wsd::Report report = wsd::run_experiment(config);
  std::string text = wsd::format_report(report, config.format);
  if (opt.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(opt.out, std::ios::binary);
    if (!f) {
      std::cerr << "cannot write " << opt.out << "\n";
      return 2;
    }
    f << text;
  }
  if (report.partial_failure) {
    for (const auto& [word, wr] : report.per_word)
      if (wr.failed()) std::cerr << word << ": " << wr.error << "\n";
    return 1;
  }
  return 0;
}

const wsd::Dataset& require_word(const std::map<std::string, wsd::Dataset>& corpus,
                                 const std::string& word) {
  auto it = corpus.find(word);
  if (it == corpus.end())
    throw std::runtime_error("word '" + word + "' not present in corpus");
  return it->second;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exemplar-based and Naive-Bayes word sense disambiguation"};
  app.require_subcommand(1);

  RunOptions run_opt;
  CLI::App* run = app.add_subcommand("run", "run a train/test experiment");
  run->add_option("--train", run_opt.train, "training corpus TSV");
  run->add_option("--test", run_opt.test, "test corpus TSV")->required();
  run->add_option("--algo", run_opt.algo, "pebls | nb | sense1 | mfs");
  run->add_option("--k", run_opt.k, "neighbor count, or 'auto' (pebls only)");
  run->add_option("--folds", run_opt.folds, "cross-validation folds");
  run->add_option("--seed", run_opt.seed, "run seed; sole source of randomness");
  run->add_flag("--lowercase", run_opt.lowercase, "case-fold tokens");
  run->add_option("--format", run_opt.format, "tsv | json");
  run->add_option("--out", run_opt.out, "write the report here instead of stdout");

  std::string cv_train, cv_word;
  int cv_folds = 10;
  std::uint64_t cv_seed = 0;
  bool cv_lower = false;
  CLI::App* cv = app.add_subcommand("cv-select", "cross-validated k selection");
  cv->add_option("--train", cv_train, "training corpus TSV")->required();
  cv->add_option("--word", cv_word, "target word")->required();
  cv->add_option("--folds", cv_folds, "cross-validation folds");
  cv->add_option("--seed", cv_seed, "seed");
  cv->add_flag("--lowercase", cv_lower, "case-fold tokens");

  std::string d_train, d_word;
  std::size_t d_first = 0, d_second = 0;
  bool d_lower = false;
  CLI::App* dist = app.add_subcommand("distance",
                                      "distance between two instances of a word");
  dist->add_option("--train", d_train, "training corpus TSV")->required();
  dist->add_option("--word", d_word, "target word")->required();
  dist->add_option("--first", d_first, "first instance index")->required();
  dist->add_option("--second", d_second, "second instance index")->required();
  dist->add_flag("--lowercase", d_lower, "case-fold tokens");

  wsd::GeneratorConfig gen_cfg;
  std::string gen_train_out, gen_test_out;
  CLI::App* gen = app.add_subcommand("gen", "generate a synthetic corpus");
  gen->add_option("--train-out", gen_train_out, "training TSV path")->required();
  gen->add_option("--test-out", gen_test_out, "test TSV path");
  gen->add_option("--words", gen_cfg.words, "number of target words");
  gen->add_option("--senses", gen_cfg.senses, "senses per word");
  gen->add_option("--skew", gen_cfg.prior_skew, "prior skew in (0,1]; 1 = uniform");
  gen->add_option("--informativeness", gen_cfg.informativeness,
                  "probability a context token reveals the sense");
  gen->add_option("--noise", gen_cfg.noise_rate, "label noise rate");
  gen->add_option("--train-size", gen_cfg.train_per_word,
                  "training occurrences per word");
  gen->add_option("--test-size", gen_cfg.test_per_word,
                  "test occurrences per word");
  gen->add_option("--noise-vocab", gen_cfg.noise_vocab, "noise vocabulary size");
  gen->add_option("--seed", gen_cfg.seed, "generator seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (run->parsed()) return do_run(run_opt);

    if (cv->parsed()) {
      auto corpus = wsd::parse_corpus_file(cv_train);
      const wsd::Dataset& ds = require_word(corpus, cv_word);
      wsd::CVResult result = wsd::cross_validate_k(ds, wsd::default_k_grid(),
                                                   cv_folds, cv_seed, cv_lower);
      std::cout << "k\terrors\ttotal\terrorRate\n";
      for (const auto& [k, stat] : result.per_k) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), "%.4f", stat.error_rate);
        std::cout << k << '\t' << stat.errors << '\t' << stat.total << '\t'
                  << buf << '\n';
      }
      std::cout << "bestK\t" << result.best_k << '\n';
      return 0;
    }

    if (dist->parsed()) {
      auto corpus = wsd::parse_corpus_file(d_train);
      const wsd::Dataset& ds = require_word(corpus, d_word);
      if (d_first >= ds.size() || d_second >= ds.size())
        throw std::runtime_error("instance index out of range for '" + d_word +
                                 "' (size " + std::to_string(ds.size()) + ")");
      std::vector<wsd::LabeledExample> examples;
      for (const wsd::Instance& inst : ds.instances)
        examples.emplace_back(wsd::extract_collocations(inst, d_lower),
                              inst.label);
      wsd::DistanceModel model = wsd::DistanceModel::train(examples);
      const wsd::FeatureVector& a = examples[d_first].first;
      const wsd::FeatureVector& b = examples[d_second].first;
      for (std::size_t f = 0; f < wsd::kFeatureCount; ++f)
        std::cout << wsd::kFeatureNames[f] << '\t' << a[f] << '\t' << b[f]
                  << '\t' << model.value_distance(f, a[f], b[f]) << '\n';
      std::cout << "total\t\t\t" << model.example_distance(a, b) << '\n';
      return 0;
    }

    if (gen->parsed()) {
      auto [train, test] = wsd::generate_datasets(gen_cfg);
      std::ofstream tr(gen_train_out, std::ios::binary);
      if (!tr) throw std::runtime_error("cannot write " + gen_train_out);
      wsd::write_corpus(tr, train);
      if (!gen_test_out.empty()) {
        std::ofstream te(gen_test_out, std::ios::binary);
        if (!te) throw std::runtime_error("cannot write " + gen_test_out);
        wsd::write_corpus(te, test);
      }
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
