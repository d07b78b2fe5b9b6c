#include "wsd/corpus.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "wsd/rng.hpp"

namespace wsd {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    std::size_t pos = s.find(sep, start);
    if (pos == std::string::npos) {
      parts.push_back(s.substr(start));
      return parts;
    }
    parts.push_back(s.substr(start, pos - start));
    start = pos + 1;
  }
}

std::vector<std::string> parse_tokens(const std::string& field,
                                      std::size_t line_no) {
  std::vector<std::string> tokens;
  for (auto& t : split(field, ' ')) {
    if (t.empty()) continue;  // tolerate repeated spaces
    if (t == kBoundarySentinel)
      throw ParseError(line_no, "reserved token '" + t + "' in context");
    tokens.push_back(std::move(t));
  }
  return tokens;
}

}  // namespace

std::map<std::string, Dataset> parse_corpus(std::istream& in) {
  std::map<std::string, Dataset> corpus;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;

    auto fields = split(line, '\t');
    if (fields.size() != 4)
      throw ParseError(line_no, "expected 4 tab-separated fields, got " +
                                    std::to_string(fields.size()));
    const std::string& word = fields[0];
    if (word.empty()) throw ParseError(line_no, "empty target word");

    int rank = 0;
    const std::string& rank_field = fields[1];
    auto [ptr, ec] = std::from_chars(
        rank_field.data(), rank_field.data() + rank_field.size(), rank);
    if (ec != std::errc{} || ptr != rank_field.data() + rank_field.size())
      throw ParseError(line_no, "sense rank is not an integer: '" + rank_field + "'");
    if (rank < 1)
      throw ParseError(line_no, "sense rank must be >= 1, got " + rank_field);

    Instance inst;
    inst.word = word;
    inst.left = parse_tokens(fields[2], line_no);
    inst.right = parse_tokens(fields[3], line_no);
    inst.label = rank;

    Dataset& ds = corpus[word];
    ds.word = word;
    ds.sense_count = std::max(ds.sense_count, rank);
    ds.instances.push_back(std::move(inst));
  }
  return corpus;
}

std::map<std::string, Dataset> parse_corpus_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open corpus file: " + path);
  return parse_corpus(in);
}

void write_corpus(std::ostream& out, const Dataset& dataset) {
  for (const Instance& inst : dataset.instances) {
    out << inst.word << '\t' << inst.label << '\t';
    for (std::size_t i = 0; i < inst.left.size(); ++i) {
      if (i) out << ' ';
      out << inst.left[i];
    }
    out << '\t';
    for (std::size_t i = 0; i < inst.right.size(); ++i) {
      if (i) out << ' ';
      out << inst.right[i];
    }
    out << '\n';
  }
}

void write_corpus(std::ostream& out, const std::map<std::string, Dataset>& corpus) {
  for (const auto& [word, ds] : corpus) write_corpus(out, ds);
}

std::vector<int> assign_folds(const Dataset& dataset, int folds,
                              std::uint64_t seed) {
  const std::size_t n = dataset.size();
  if (folds < 2) throw std::invalid_argument("fold count must be >= 2");
  if (static_cast<std::size_t>(folds) > n)
    throw std::invalid_argument("fold count exceeds dataset size");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  RandomStream rng(mix_seed(seed, static_cast<std::uint64_t>(folds)));
  for (std::size_t i = n; i > 1; --i) {  // Fisher-Yates
    std::size_t j = rng.uniform_index(i);
    std::swap(order[i - 1], order[j]);
  }

  // Contiguous blocks over the shuffled order; the remainder goes to the
  // first (n mod folds) folds.
  const std::size_t base = n / folds;
  const std::size_t extra = n % folds;
  std::vector<int> assignment(n);
  std::size_t pos = 0;
  for (int f = 0; f < folds; ++f) {
    std::size_t sz = base + (static_cast<std::size_t>(f) < extra ? 1 : 0);
    for (std::size_t i = 0; i < sz; ++i) assignment[order[pos++]] = f;
  }
  return assignment;
}

}  // namespace wsd
