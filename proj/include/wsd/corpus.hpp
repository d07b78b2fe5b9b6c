#ifndef WSD_CORPUS_HPP
#define WSD_CORPUS_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace wsd {

/// 1-based sense rank. Rank 1 is the dictionary-first (most frequent) sense.
using SenseLabel = int;

/// Reserved symbol for context positions beyond the sentence boundary.
/// Never a legal corpus token.
inline constexpr const char* kBoundarySentinel = "<S>";

/// One sense-tagged occurrence of an ambiguous word.
struct Instance {
  std::string word;
  std::vector<std::string> left;   // left context, nearest token last
  std::vector<std::string> right;  // right context, nearest token first
  SenseLabel label = 1;

  bool operator==(const Instance&) const = default;
};

/// All occurrences of one target word, in file order. Immutable after
/// construction; safe to share across concurrent readers.
struct Dataset {
  std::string word;
  std::vector<Instance> instances;
  int sense_count = 0;  // >= max rank appearing in instances

  std::size_t size() const { return instances.size(); }
  bool operator==(const Dataset&) const = default;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Corpus TSV: one instance per line,
///   word \t senseRank \t left tokens (space-separated) \t right tokens
/// `#`-prefixed and blank lines are skipped. Throws ParseError with the
/// offending line number on malformed input; an empty file yields an empty
/// table.
std::map<std::string, Dataset> parse_corpus(std::istream& in);
std::map<std::string, Dataset> parse_corpus_file(const std::string& path);

/// Serializes back to the same TSV format; re-parsing reproduces the input.
void write_corpus(std::ostream& out, const Dataset& dataset);
void write_corpus(std::ostream& out, const std::map<std::string, Dataset>& corpus);

/// Assigns each instance a fold in [0, folds). Seeded uniform shuffle of the
/// instance indices, then contiguous blocks; fold sizes differ by at most 1.
/// Deterministic in (instance order, folds, seed).
/// Throws std::invalid_argument when folds < 2 or folds > dataset size.
std::vector<int> assign_folds(const Dataset& dataset, int folds,
                              std::uint64_t seed);

}  // namespace wsd

#endif
