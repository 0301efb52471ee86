#include "omegapow/literal.hpp"

#include <algorithm>
#include <charconv>

#include "omegapow/pairs.hpp"

namespace omegapow
{

namespace
{

constexpr std::string_view epsilon = "ε";

Alphabet smallest_alphabet(std::string_view digits)
{
    int top = 1;
    for (char c : digits)
        if (c >= '0' && c <= '3')
            top = std::max(top, c - '0');
    return Alphabet(top + 1);
}

std::uint64_t parse_number(std::string_view text, std::size_t offset)
{
    std::uint64_t value = 0;
    const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || end != text.data() + text.size())
        throw syntax_error("expected a natural number", offset);
    return value;
}

KnjWord parse_knj(std::string_view text, std::size_t k)
{
    const FiniteWord head = FiniteWord::parse(text.substr(0, k), Alphabet::quaternary());
    if (k + 1 >= text.size() || text[k + 1] != '[')
        throw syntax_error("expected '[' after K", k + 1);
    const std::size_t comma = text.find(',', k + 2);
    const std::size_t close = text.find(']', k + 2);
    if (comma == std::string_view::npos || close == std::string_view::npos || comma > close)
        throw syntax_error("expected K[N,j]", k);
    const std::uint64_t n = parse_number(text.substr(k + 2, comma - k - 2), k + 2);
    const std::uint64_t j = parse_number(text.substr(comma + 1, close - comma - 1), comma + 1);
    if (j > kMaxPairLength)
        throw index_overflow("j = " + std::to_string(j) + " is beyond 64-bit offsets");
    const std::string_view code = text.substr(close + 1);
    if (code.find('(') == std::string_view::npos)
        throw syntax_error("K words need a binary lasso code", close + 1);
    LassoWord m = [&] {
        try {
            return LassoWord::parse(code, Alphabet::binary());
        } catch (const syntax_error& e) {
            throw syntax_error("bad lasso code", close + 1 + e.position());
        }
    }();
    return KnjWord(head, n, j, std::move(m));
}

} // namespace

WordLiteral parse_word_literal(std::string_view text, std::optional<Alphabet> alphabet)
{
    if (text == epsilon || text.empty())
        return FiniteWord(alphabet.value_or(Alphabet::binary()));
    if (const std::size_t k = text.find('K'); k != std::string_view::npos)
        return parse_knj(text, k);
    const Alphabet a = alphabet.value_or(smallest_alphabet(text));
    if (text.find('(') != std::string_view::npos || text.find(')') != std::string_view::npos)
        return LassoWord::parse(text, a);
    return FiniteWord::parse(text, a);
}

std::string literal_str(const WordLiteral& w)
{
    return std::visit([](const auto& x) { return x.str(); }, w);
}

} // namespace omegapow
