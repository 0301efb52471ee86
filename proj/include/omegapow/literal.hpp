#pragma once

// Word literals:
//   finite   [0-3]+ or ε
//   lasso    [0-3]*([0-3]+)
//   K word   [0-3]*K[N,j]<binary lasso>     (the optional digits are a head)

#include <optional>
#include <string_view>
#include <variant>

#include "omegapow/word.hpp"

namespace omegapow
{

using WordLiteral = std::variant<FiniteWord, LassoWord, KnjWord>;

/// Parses with the given alphabet for finite words and lassos; K words are
/// always over four letters with a binary code. Without an alphabet the
/// smallest one holding every digit (at least binary) is used.
WordLiteral parse_word_literal(std::string_view text, std::optional<Alphabet> alphabet = std::nullopt);

std::string literal_str(const WordLiteral& w);

} // namespace omegapow
