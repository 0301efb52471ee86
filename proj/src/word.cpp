#include "omegapow/word.hpp"

#include <algorithm>

#include "omegapow/pairs.hpp"

namespace omegapow
{

// ---------------------------------------------------------------- FiniteWord

FiniteWord::FiniteWord(std::vector<Letter> letters, Alphabet alphabet)
    : letters_(std::move(letters)), alphabet_(alphabet)
{
    for (std::size_t i = 0; i < letters_.size(); ++i)
        if (!alphabet_.contains(letters_[i]))
            throw invalid_letter("letter " + std::to_string(int(letters_[i])) + " at position "
                                 + std::to_string(i) + " outside alphabet of size "
                                 + std::to_string(alphabet_.size()));
}

FiniteWord FiniteWord::parse(std::string_view digits, Alphabet alphabet)
{
    if (digits == "ε")
        return FiniteWord(alphabet);
    std::vector<Letter> letters;
    letters.reserve(digits.size());
    for (std::size_t i = 0; i < digits.size(); ++i) {
        const char c = digits[i];
        if (c < '0' || c > '9')
            throw syntax_error(std::string("unexpected character '") + c + "'", i);
        const auto l = static_cast<Letter>(c - '0');
        if (!alphabet.contains(l))
            throw invalid_letter("letter " + std::string(1, c) + " at position " + std::to_string(i)
                                 + " outside alphabet of size " + std::to_string(alphabet.size()));
        letters.push_back(l);
    }
    return FiniteWord(std::move(letters), alphabet);
}

FiniteWord FiniteWord::repeat(Letter letter, std::size_t count, Alphabet alphabet)
{
    return FiniteWord(std::vector<Letter>(count, letter), alphabet);
}

FiniteWord FiniteWord::slice(std::size_t from, std::size_t to) const
{
    to = std::min(to, size());
    from = std::min(from, to);
    return FiniteWord(std::vector<Letter>(letters_.begin() + from, letters_.begin() + to), alphabet_);
}

bool FiniteWord::is_prefix_of(const FiniteWord& other) const
{
    return size() <= other.size() && std::equal(begin(), end(), other.begin());
}

FiniteWord FiniteWord::widen(Alphabet alphabet) const
{
    return FiniteWord(letters_, alphabet);
}

std::string FiniteWord::str() const
{
    if (empty())
        return "ε";
    std::string out;
    out.reserve(size());
    for (Letter l : letters_)
        out.push_back(static_cast<char>('0' + l));
    return out;
}

FiniteWord concat(const FiniteWord& u, const FiniteWord& v)
{
    if (u.alphabet() != v.alphabet())
        throw alphabet_mismatch("cannot concatenate words over alphabets of size "
                                + std::to_string(u.alphabet().size()) + " and "
                                + std::to_string(v.alphabet().size()));
    std::vector<Letter> letters(u.begin(), u.end());
    letters.insert(letters.end(), v.begin(), v.end());
    return FiniteWord(std::move(letters), u.alphabet());
}

// ----------------------------------------------------------------- LassoWord

namespace
{

std::vector<Letter> primitive_root(std::span<const Letter> v)
{
    const std::size_t n = v.size();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0)
            continue;
        bool periodic = true;
        for (std::size_t i = p; i < n && periodic; ++i)
            periodic = v[i] == v[i - p];
        if (periodic)
            return {v.begin(), v.begin() + p};
    }
    return {v.begin(), v.end()};
}

} // namespace

LassoWord normalize(const FiniteWord& spoke, const FiniteWord& cycle)
{
    if (cycle.empty())
        throw error("lasso cycle must be non-empty");
    if (spoke.alphabet() != cycle.alphabet())
        throw alphabet_mismatch("lasso spoke and cycle over different alphabets");

    std::vector<Letter> u(spoke.begin(), spoke.end());
    std::vector<Letter> v = primitive_root(cycle.letters());
    // u·a·(v'a)^ω = u·(a v')^ω
    while (!u.empty() && u.back() == v.back()) {
        std::rotate(v.rbegin(), v.rbegin() + 1, v.rend());
        u.pop_back();
    }
    return LassoWord(FiniteWord(std::move(u), spoke.alphabet()), FiniteWord(std::move(v), spoke.alphabet()));
}

LassoWord::LassoWord(const FiniteWord& spoke, const FiniteWord& cycle) : spoke_(spoke), cycle_(cycle)
{
    if (cycle_.empty())
        throw error("lasso cycle must be non-empty");
    if (spoke_.alphabet() != cycle_.alphabet())
        throw alphabet_mismatch("lasso spoke and cycle over different alphabets");
    const bool canonical = primitive_root(cycle_.letters()).size() == cycle_.size()
        && (spoke_.empty() || spoke_.back() != cycle_.back());
    if (!canonical)
        *this = normalize(spoke, cycle);
}

LassoWord LassoWord::parse(std::string_view text, Alphabet alphabet)
{
    const auto open = text.find('(');
    if (open == std::string_view::npos)
        throw syntax_error("lasso literal needs '('", text.size());
    if (text.empty() || text.back() != ')')
        throw syntax_error("lasso literal must end with ')'", text.size());
    const auto close = text.size() - 1;
    if (close == open + 1)
        throw syntax_error("empty lasso cycle", close);
    const auto spoke_text = text.substr(0, open);
    const auto cycle_text = text.substr(open + 1, close - open - 1);
    if (auto bad = cycle_text.find_first_of("()"); bad != std::string_view::npos)
        throw syntax_error("unexpected parenthesis", open + 1 + bad);
    FiniteWord u(alphabet);
    if (!spoke_text.empty())
        u = FiniteWord::parse(spoke_text, alphabet);
    FiniteWord v(alphabet);
    try {
        v = FiniteWord::parse(cycle_text, alphabet);
    } catch (const syntax_error& e) {
        throw syntax_error("bad cycle letter", open + 1 + e.position());
    }
    return LassoWord(u, v);
}

Letter LassoWord::at(std::size_t i) const
{
    if (i < spoke_.size())
        return spoke_[i];
    return cycle_[(i - spoke_.size()) % cycle_.size()];
}

FiniteWord LassoWord::prefix(std::size_t n) const
{
    std::vector<Letter> letters(n);
    for (std::size_t i = 0; i < n; ++i)
        letters[i] = at(i);
    return FiniteWord(std::move(letters), alphabet());
}

std::size_t LassoWord::phase(std::size_t i) const noexcept
{
    if (i < spoke_.size())
        return i;
    return spoke_.size() + (i - spoke_.size()) % cycle_.size();
}

LassoWord LassoWord::drop(std::size_t n) const
{
    if (n <= spoke_.size())
        return LassoWord(spoke_.slice(n, spoke_.size()), cycle_);
    const std::size_t shift = (n - spoke_.size()) % cycle_.size();
    std::vector<Letter> v(cycle_.begin(), cycle_.end());
    std::rotate(v.begin(), v.begin() + shift, v.end());
    return LassoWord(FiniteWord(alphabet()), FiniteWord(std::move(v), alphabet()));
}

LassoWord LassoWord::widen(Alphabet alphabet) const
{
    return LassoWord(spoke_.widen(alphabet), cycle_.widen(alphabet));
}

std::string LassoWord::str() const
{
    const std::string u = spoke_.empty() ? std::string() : spoke_.str();
    return u + "(" + cycle_.str() + ")";
}

// ------------------------------------------------------------------- KnjWord

KnjWord::KnjWord(std::uint64_t n, std::uint64_t j, LassoWord m)
    : KnjWord(FiniteWord(Alphabet::quaternary()), n, j, std::move(m))
{}

KnjWord::KnjWord(FiniteWord head, std::uint64_t n, std::uint64_t j, LassoWord m)
    : head_(std::move(head)), n_(n), j_(j), m_(std::move(m))
{
    if (head_.alphabet() != Alphabet::quaternary())
        head_ = head_.widen(Alphabet::quaternary());
    if (m_.alphabet() != Alphabet::binary())
        throw alphabet_mismatch("K_{N,j} code word must be binary");
    if (n_ > m_offset(j_))
        throw invalid_address("K_{" + std::to_string(n_) + "," + std::to_string(j_)
                              + "} requires N <= M_j = " + std::to_string(m_offset(j_)));
    // A head made of 2s only is absorbed into N when the address stays valid.
    const bool all_twos = std::all_of(head_.begin(), head_.end(), [](Letter l) { return l == 2; });
    if (!head_.empty() && all_twos && n_ + head_.size() <= m_offset(j_)) {
        n_ += head_.size();
        head_ = FiniteWord(Alphabet::quaternary());
    }
}

std::uint64_t KnjWord::block_run(std::size_t k) const
{
    return m_offset(j_ + k + 1);
}

std::uint64_t KnjWord::block_start(std::size_t k) const
{
    std::uint64_t pos = head_.size() + n_;
    for (std::size_t i = 0; i < k; ++i)
        pos += block_length(i);
    return pos;
}

Letter KnjWord::at(std::uint64_t i) const
{
    if (i < head_.size())
        return head_[i];
    i -= head_.size();
    if (i < n_)
        return 2;
    i -= n_;
    for (std::size_t k = 0;; ++k) {
        const std::uint64_t run = block_run(k);
        const std::uint64_t len = 2 * run + 2;
        if (i < len) {
            if (i == 0)
                return m_.at(k);
            if (i == run + 1)
                return 3;
            return 2;
        }
        i -= len;
    }
}

FiniteWord KnjWord::prefix(std::size_t n) const
{
    std::vector<Letter> letters;
    letters.reserve(n);
    for (std::size_t i = 0; i < n && i < head_.size(); ++i)
        letters.push_back(head_[i]);
    for (std::uint64_t i = 0; letters.size() < n && i < n_; ++i)
        letters.push_back(2);
    for (std::size_t k = 0; letters.size() < n; ++k) {
        const std::uint64_t run = block_run(k);
        letters.push_back(m_.at(k));
        for (std::uint64_t i = 0; i < run && letters.size() < n; ++i)
            letters.push_back(2);
        if (letters.size() < n)
            letters.push_back(3);
        for (std::uint64_t i = 0; i < run && letters.size() < n; ++i)
            letters.push_back(2);
    }
    return FiniteWord(std::move(letters), Alphabet::quaternary());
}

std::string KnjWord::str() const
{
    const std::string head = head_.empty() ? std::string() : head_.str();
    return head + "K[" + std::to_string(n_) + "," + std::to_string(j_) + "]" + m_.str();
}

// ------------------------------------------------------------- SyntheticWord

Alphabet SyntheticWord::alphabet() const
{
    return is_lasso() ? lasso().alphabet() : Alphabet::quaternary();
}

Letter SyntheticWord::at(std::uint64_t i) const
{
    return is_lasso() ? lasso().at(i) : knj().at(i);
}

FiniteWord SyntheticWord::prefix(std::size_t n) const
{
    return is_lasso() ? lasso().prefix(n) : knj().prefix(n);
}

std::string SyntheticWord::str() const
{
    return is_lasso() ? lasso().str() : knj().str();
}

namespace
{

LassoWord shift_code(const LassoWord& m, std::size_t k)
{
    return m.drop(k);
}

} // namespace

SyntheticWord suffix_from(const SyntheticWord& w, const FiniteWord& s)
{
    for (std::size_t i = 0; i < s.size(); ++i)
        if (w.at(i) != s[i])
            throw not_a_prefix(s.str() + " is not a prefix of " + w.str());

    if (w.is_lasso())
        return w.lasso().drop(s.size());

    const KnjWord& k = w.knj();
    std::uint64_t cut = s.size();
    if (cut <= k.head().size())
        return KnjWord(k.head().slice(cut, k.head().size()), k.n(), k.j(), k.m());
    cut -= k.head().size();
    if (cut <= k.n())
        return KnjWord(k.n() - cut, k.j(), k.m());
    cut -= k.n();
    std::size_t block = 0;
    while (cut >= k.block_length(block)) {
        cut -= k.block_length(block);
        ++block;
    }
    // Whole blocks consumed: the rest is K_{0, j+block} on the shifted code.
    if (cut == 0)
        return KnjWord(0, k.j() + block, shift_code(k.m(), block));
    // Mid-block: the rest of this block becomes the head.
    std::vector<Letter> rest;
    const std::uint64_t run = k.block_run(block);
    for (std::uint64_t i = cut; i < 2 * run + 2; ++i)
        rest.push_back(i == run + 1 ? Letter{3} : Letter{2});
    return KnjWord(FiniteWord(std::move(rest), Alphabet::quaternary()), 0, k.j() + block + 1,
                   shift_code(k.m(), block + 1));
}

// ---------------------------------------------------------------- run split

std::vector<RunSegment> run_decompose(const FiniteWord& s)
{
    std::vector<RunSegment> out;
    std::size_t i = 0;
    std::size_t lead = 0;
    while (i < s.size() && s[i] == 2) {
        ++lead;
        ++i;
    }
    if (lead > 0)
        out.push_back({std::nullopt, lead});
    while (i < s.size()) {
        RunSegment seg{s[i], 0};
        ++i;
        while (i < s.size() && s[i] == 2) {
            ++seg.run;
            ++i;
        }
        out.push_back(seg);
    }
    return out;
}

FiniteWord run_recompose(std::span<const RunSegment> segments, Alphabet alphabet)
{
    std::vector<Letter> letters;
    for (const RunSegment& seg : segments) {
        if (seg.delimiter)
            letters.push_back(*seg.delimiter);
        letters.insert(letters.end(), seg.run, Letter{2});
    }
    return FiniteWord(std::move(letters), alphabet);
}

} // namespace omegapow
