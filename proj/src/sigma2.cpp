#include "omegapow/sigma2.hpp"

#include <algorithm>
#include <array>
#include <deque>

namespace omegapow
{

namespace
{

void require_ternary(Alphabet a)
{
    if (a != Alphabet::ternary())
        throw alphabet_mismatch("expected a word over {0,1,2}");
}

int balance_step(Letter l)
{
    return l == 1 ? 1 : l == 2 ? -1 : 0;
}

// Length of the E word starting at `from` (first return of the balance to 0),
// looking at most `window` letters past the opening 1.
template <class At>
std::optional<std::size_t> e_atom_length(At at, std::size_t from, std::size_t window)
{
    if (at(from) != 1)
        return std::nullopt;
    long balance = 1;
    for (std::size_t k = 1; k <= window; ++k) {
        balance += balance_step(at(from + k));
        if (balance == 0)
            return k + 1;
    }
    return std::nullopt;
}

} // namespace

std::uint64_t count_letter(const FiniteWord& s, Letter j)
{
    return static_cast<std::uint64_t>(std::count(s.begin(), s.end(), j));
}

bool t_member(const FiniteWord& w)
{
    require_ternary(w.alphabet());
    long balance = 0;
    for (Letter l : w)
        if ((balance += balance_step(l)) < 0)
            return false;
    return true;
}

bool t_member(const LassoWord& w)
{
    require_ternary(w.alphabet());
    if (count_letter(w.cycle(), 2) > count_letter(w.cycle(), 1))
        return false;
    return t_member(w.prefix(w.spoke().size() + 2 * w.cycle().size()));
}

void EraseState::feed(Letter l)
{
    if (l == 2) {
        if (live_ones_.empty())
            throw not_in_t("a 2 with no 1 left to erase");
        emitted_[live_ones_.back()] = 0;
        live_ones_.pop_back();
        return;
    }
    if (l > 2)
        throw invalid_letter("letter outside {0,1,2}");
    if (l == 1)
        live_ones_.push_back(emitted_.size());
    emitted_.push_back(l);
}

FiniteWord erase_fin(const FiniteWord& s)
{
    require_ternary(s.alphabet());
    EraseState state;
    for (Letter l : s)
        state.feed(l);
    return state.word();
}

std::optional<LassoWord> erase_lasso(const LassoWord& a, std::uint64_t budget)
{
    if (!t_member(a))
        throw not_in_t(a.str() + " leaves T");
    const std::size_t u = a.spoke().size();
    const std::size_t v = a.cycle().size();
    if (budget < u + 2 * v)
        return std::nullopt;
    const auto at = [&](std::size_t i) { return a.at(i); };
    std::vector<Letter> spoke, cycle;
    for (std::size_t x = 0; x < u + v; ++x) {
        const Letter l = a.at(x);
        if (l == 2)
            continue;
        Letter out = l;
        if (l == 1) {
            const std::size_t window = (x + 1 < u ? u - x - 1 : 0) + v;
            if (e_atom_length(at, x, window))
                out = 0;
        }
        (x < u ? spoke : cycle).push_back(out);
    }
    return normalize(FiniteWord(std::move(spoke), Alphabet::binary()),
                     FiniteWord(std::move(cycle), Alphabet::binary()));
}

bool e_def_member(const FiniteWord& s)
{
    require_ternary(s.alphabet());
    if (s.empty() || !t_member(s) || count_letter(s, 1) != count_letter(s, 2))
        return false;
    const FiniteWord head = erase_fin(s.prefix(s.size() - 1));
    return !head.empty() && head[0] == 1;
}

bool e_counter_member(const FiniteWord& s)
{
    require_ternary(s.alphabet());
    if (s.empty() || s[0] != 1 || s.back() != 2)
        return false;
    long balance = 0;
    for (std::size_t l = 0; l < s.size(); ++l) {
        balance += balance_step(s[l]);
        if (l + 1 < s.size() && balance <= 0)
            return false;
    }
    return balance == 0;
}

namespace
{

// Positions inside an A word of the third kind:
//   start: nothing read; c0: inside a non-empty c_0; later: past the first
//   separating 1, so the next separating 1 may close the word.
enum GrammarState : std::size_t { start, c0, later, grammar_states };

struct Token
{
    std::size_t to;
    bool closes; // the word read since the last cut is in A
};

// Grammar moves on an atom (0 or E word) and on a separating 1.
std::vector<Token> on_atom(std::size_t g)
{
    if (g == start)
        return {{start, true}, {c0, false}};
    return {{g, false}};
}

std::vector<Token> on_separator(std::size_t g)
{
    if (g == start)
        return {{later, false}};
    return {{start, true}, {later, false}};
}

} // namespace

bool a3_member(const FiniteWord& s)
{
    require_ternary(s.alphabet());
    const std::size_t n = s.size();
    const auto at = [&](std::size_t i) { return s[i]; };
    // reach[i][g]: the prefix of length i is an unfinished word in state g.
    // The state `start` is only ever reached at i = 0.
    std::vector<std::array<bool, grammar_states>> reach(n + 1);
    reach[0][start] = true;
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::pair<std::size_t, bool>> tokens; // (length, is separator)
        if (s[i] == 0)
            tokens.push_back({1, false});
        if (s[i] == 1)
            tokens.push_back({1, true});
        if (auto len = e_atom_length(at, i, n - i - 1))
            tokens.push_back({*len, false});
        for (std::size_t g = 0; g < grammar_states; ++g) {
            if (!reach[i][g])
                continue;
            for (const auto& [len, sep] : tokens)
                for (const Token& t : sep ? on_separator(g) : on_atom(g)) {
                    if (!t.closes)
                        reach[i + len][t.to] = true;
                    else if (i + len == n)
                        return true;
                }
        }
    }
    return false;
}

bool b2_omega_member(const LassoWord& w)
{
    if (w.alphabet() != Alphabet::binary())
        throw alphabet_mismatch("B^ω is a set of binary ω-words");
    return w != LassoWord::parse("1(0)", Alphabet::binary());
}

Decision a3_omega_member(const LassoWord& a, std::uint64_t budget)
{
    if (!t_member(a))
        throw not_in_t(a.str() + " leaves T");
    const std::size_t u = a.spoke().size();
    const std::size_t v = a.cycle().size();
    if (budget < u + 2 * v + 1)
        return Decision::inconclusive;
    const std::size_t span = u + v;
    const auto at = [&](std::size_t i) { return a.at(i); };
    const auto node = [&](std::size_t phase, std::size_t g) { return phase * grammar_states + g; };

    struct Edge
    {
        std::size_t to;
        bool closes;
    };
    std::vector<std::vector<Edge>> edges(span * grammar_states);
    for (std::size_t x = 0; x < span; ++x) {
        std::vector<std::pair<std::size_t, bool>> tokens; // (length, is separator)
        if (a.at(x) == 0)
            tokens.push_back({1, false});
        if (a.at(x) == 1)
            tokens.push_back({1, true});
        const std::size_t window = (x + 1 < u ? u - x - 1 : 0) + v;
        if (auto len = e_atom_length(at, x, window))
            tokens.push_back({*len, false});
        for (std::size_t g = 0; g < grammar_states; ++g)
            for (const auto& [len, sep] : tokens)
                for (const Token& t : sep ? on_separator(g) : on_atom(g))
                    edges[node(x, g)].push_back({node(a.phase(x + len), t.to), t.closes});
    }

    const auto reachable_from = [&](std::size_t from) {
        std::vector<bool> seen(edges.size(), false);
        std::deque<std::size_t> queue{from};
        seen[from] = true;
        while (!queue.empty()) {
            const std::size_t cur = queue.front();
            queue.pop_front();
            for (const Edge& e : edges[cur])
                if (!seen[e.to]) {
                    seen[e.to] = true;
                    queue.push_back(e.to);
                }
        }
        return seen;
    };
    const auto live = reachable_from(node(0, start));
    for (std::size_t p = 0; p < edges.size(); ++p) {
        if (!live[p])
            continue;
        for (const Edge& e : edges[p])
            if (e.closes && reachable_from(e.to)[p])
                return Decision::yes;
    }
    return Decision::no;
}

Decision e_preimage_check(const LassoWord& a, std::uint64_t budget)
{
    const auto image = erase_lasso(a, budget);
    if (!image)
        return Decision::inconclusive;
    return decide(b2_omega_member(*image));
}

} // namespace omegapow
