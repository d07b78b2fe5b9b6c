#include "wsd/counts.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>

namespace wsd {

ClassCountTable ClassCountTable::from_examples(
    const std::vector<LabeledExample>& examples) {
  if (examples.empty())
    throw std::invalid_argument("cannot build model from zero examples");

  int senses = 0;
  for (const auto& [fv, label] : examples) {
    if (label < 1) throw std::invalid_argument("sense rank must be >= 1");
    senses = std::max(senses, label);
  }

  ClassCountTable table;
  table.class_counts.assign(static_cast<std::size_t>(senses), 0);
  table.training_size = examples.size();
  for (const auto& [fv, label] : examples) {
    table.class_counts[static_cast<std::size_t>(label - 1)]++;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      ValueClassCounts& vc = table.per_feature[f][fv[f]];
      if (vc.per_class.empty())
        vc.per_class.assign(static_cast<std::size_t>(senses), 0);
      vc.per_class[static_cast<std::size_t>(label - 1)]++;
      vc.total++;
    }
  }
  return table;
}

void ClassCountTable::save(std::ostream& out, std::string_view version) const {
  out << version << '\n';
  out << "senses " << sense_count() << '\n';
  out << "examples " << training_size << '\n';
  out << "classcounts";
  for (int c : class_counts) out << ' ' << c;
  out << '\n';
  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    // sorted for byte-stable dumps
    std::vector<const std::string*> values;
    values.reserve(per_feature[f].size());
    for (const auto& [value, counts] : per_feature[f]) values.push_back(&value);
    std::sort(values.begin(), values.end(),
              [](const std::string* a, const std::string* b) { return *a < *b; });
    out << "feature " << f << ' ' << values.size() << '\n';
    for (const std::string* v : values) {
      out << *v;
      for (int c : per_feature[f].at(*v).per_class) out << ' ' << c;
      out << '\n';
    }
  }
}

namespace {

std::string next_line(std::istream& in, const char* what) {
  std::string line;
  if (!std::getline(in, line))
    throw ModelFormatError(std::string("truncated model file, expected ") + what);
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return line;
}

}  // namespace

ClassCountTable ClassCountTable::load(std::istream& in,
                                      std::string_view version) {
  std::string header = next_line(in, "version header");
  if (header != version)
    throw ModelFormatError("bad model header '" + header + "', expected '" +
                           std::string(version) + "'");

  auto read_kv = [&](const char* key) -> long long {
    std::istringstream ls(next_line(in, key));
    std::string k;
    long long v = 0;
    if (!(ls >> k >> v) || k != key)
      throw ModelFormatError(std::string("expected '") + key + "' line");
    return v;
  };

  long long senses = read_kv("senses");
  long long examples = read_kv("examples");
  if (senses < 1 || examples < 1)
    throw ModelFormatError("model must contain at least one class and example");

  ClassCountTable table;
  table.training_size = static_cast<std::size_t>(examples);
  {
    std::istringstream ls(next_line(in, "classcounts"));
    std::string k;
    if (!(ls >> k) || k != "classcounts")
      throw ModelFormatError("expected 'classcounts' line");
    int c;
    while (ls >> c) {
      if (c < 0) throw ModelFormatError("negative class count");
      table.class_counts.push_back(c);
    }
    if (static_cast<long long>(table.class_counts.size()) != senses)
      throw ModelFormatError("classcounts length does not match sense count");
  }

  for (std::size_t f = 0; f < kFeatureCount; ++f) {
    std::istringstream ls(next_line(in, "feature header"));
    std::string k;
    std::size_t index = 0, value_count = 0;
    if (!(ls >> k >> index >> value_count) || k != "feature" || index != f)
      throw ModelFormatError("expected 'feature " + std::to_string(f) + "' header");
    for (std::size_t i = 0; i < value_count; ++i) {
      std::istringstream vs(next_line(in, "value line"));
      std::string value;
      if (!(vs >> value)) throw ModelFormatError("empty value line");
      ValueClassCounts vc;
      int c;
      while (vs >> c) {
        if (c < 0) throw ModelFormatError("negative value count");
        vc.per_class.push_back(c);
        vc.total += c;
      }
      if (static_cast<long long>(vc.per_class.size()) != senses)
        throw ModelFormatError("value line length does not match sense count");
      if (vc.total < 1)
        throw ModelFormatError("stored value '" + value + "' has zero total");
      table.per_feature[f].emplace(std::move(value), std::move(vc));
    }
  }
  return table;
}

}  // namespace wsd
