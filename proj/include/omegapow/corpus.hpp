#pragma once

// Deterministic word corpora. Enumerations run by size so that the first
// failing case of a suite is a smallest one.

#include <cstdint>
#include <functional>
#include <vector>

#include "omegapow/word.hpp"

namespace omegapow
{

using LassoFilter = std::function<bool(const LassoWord&)>;

/// Every word of length <= max_length, by length then lexicographically.
std::vector<FiniteWord> all_words(Alphabet alphabet, std::size_t max_length);

/// Every canonical lasso with |u| <= max_spoke and 1 <= |v| <= max_cycle,
/// ordered by |u|+|v|, then |u|, then lexicographically.
std::vector<LassoWord> corpus_lassos(Alphabet alphabet, std::size_t max_spoke, std::size_t max_cycle,
                                     const LassoFilter& filter = {});

/// `count` normalized lassos drawn from a seeded generator (|u| <= max_spoke,
/// 1 <= |v| <= max_cycle), rejection-sampled through `filter`.
std::vector<LassoWord> random_lassos(Alphabet alphabet, std::size_t max_spoke, std::size_t max_cycle,
                                     std::size_t count, std::uint64_t seed, const LassoFilter& filter = {});

} // namespace omegapow
