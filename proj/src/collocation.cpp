#include "wsd/collocation.hpp"

#include <cctype>

namespace wsd {

namespace {

std::string fold(const std::string& token, bool lowercase) {
  if (!lowercase) return token;
  std::string out = token;
  for (char& c : out)
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

std::string position(const std::vector<std::string>& context,
                     std::size_t offset, bool nearest_last, bool lowercase) {
  // offset 0 = nearest token to the target
  if (offset >= context.size()) return kBoundarySentinel;
  const std::string& tok =
      nearest_last ? context[context.size() - 1 - offset] : context[offset];
  return fold(tok, lowercase);
}

}  // namespace

FeatureVector extract_collocations(const Instance& instance, bool lowercase) {
  std::string l1 = position(instance.left, 0, /*nearest_last=*/true, lowercase);
  std::string l2 = position(instance.left, 1, /*nearest_last=*/true, lowercase);
  std::string r1 = position(instance.right, 0, /*nearest_last=*/false, lowercase);
  std::string r2 = position(instance.right, 1, /*nearest_last=*/false, lowercase);
  return {l2 + "_" + l1, l1 + "_" + r1, r1 + "_" + r2, l1, r1, l2, r2};
}

}  // namespace wsd
