#ifndef WSD_COLLOCATION_HPP
#define WSD_COLLOCATION_HPP

#include <array>
#include <cstddef>
#include <string>

#include "wsd/corpus.hpp"

namespace wsd {

inline constexpr std::size_t kFeatureCount = 7;

/// The seven local-collocation features of an instance, in fixed order:
///   [0] l2_l1  [1] l1_r1  [2] r1_r2  [3] l1  [4] r1  [5] l2  [6] r2
/// where l1/l2 are the first/second tokens left of the target and r1/r2 the
/// first/second on the right; positions past the sentence boundary hold the
/// sentinel `<S>`. Pair features join the two position values with `_`.
using FeatureVector = std::array<std::string, kFeatureCount>;

inline constexpr std::array<const char*, kFeatureCount> kFeatureNames = {
    "l2_l1", "l1_r1", "r1_r2", "l1", "r1", "l2", "r2"};

/// Pure and label-independent. When `lowercase` is set, tokens (never the
/// sentinel) are ASCII case-folded before joining.
FeatureVector extract_collocations(const Instance& instance,
                                   bool lowercase = false);

}  // namespace wsd

#endif
