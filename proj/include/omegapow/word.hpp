#pragma once

// Finite words, lasso (ultimately periodic) ω-words and the synthetic
// ω-words used to probe the K_{N,j} carriers.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "omegapow/errors.hpp"

namespace omegapow
{

using Letter = std::uint8_t;

/// Alphabet {0, ..., size-1} with size in {2, 3, 4}. Letters 2 and 3 are the
/// boldface letters of the 3- and 4-letter constructions.
class Alphabet
{
public:
    explicit Alphabet(int size) : size_(size)
    {
        if (size < 2 || size > 4)
            throw invalid_alphabet("alphabet size must be 2, 3 or 4, got " + std::to_string(size));
    }

    static Alphabet binary() { return Alphabet(2); }
    static Alphabet ternary() { return Alphabet(3); }
    static Alphabet quaternary() { return Alphabet(4); }

    int size() const noexcept { return size_; }
    bool contains(Letter l) const noexcept { return l < size_; }

    bool operator==(const Alphabet&) const = default;

private:
    int size_;
};

class FiniteWord
{
public:
    explicit FiniteWord(Alphabet alphabet = Alphabet::binary()) : alphabet_(alphabet) {}
    FiniteWord(std::vector<Letter> letters, Alphabet alphabet);

    /// Digits "0".."3"; the empty string and "ε" both denote the empty word.
    static FiniteWord parse(std::string_view digits, Alphabet alphabet);
    static FiniteWord repeat(Letter letter, std::size_t count, Alphabet alphabet);

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    Letter back() const { return letters_.back(); }
    std::span<const Letter> letters() const noexcept { return letters_; }
    Alphabet alphabet() const noexcept { return alphabet_; }

    auto begin() const noexcept { return letters_.begin(); }
    auto end() const noexcept { return letters_.end(); }

    /// Letters [from, to).
    FiniteWord slice(std::size_t from, std::size_t to) const;
    FiniteWord prefix(std::size_t n) const { return slice(0, n); }
    bool is_prefix_of(const FiniteWord& other) const;

    /// Same letters over a larger alphabet.
    FiniteWord widen(Alphabet alphabet) const;

    /// Digit string; "ε" for the empty word.
    std::string str() const;

    bool operator==(const FiniteWord&) const = default;

private:
    std::vector<Letter> letters_;
    Alphabet alphabet_;
};

FiniteWord concat(const FiniteWord& u, const FiniteWord& v);

/// Ultimately periodic ω-word spoke·cycle^ω, always held in canonical form:
/// the cycle is primitive and the spoke cannot be shortened by rotating the
/// cycle. Two lassos denote the same ω-word iff they compare equal.
class LassoWord
{
public:
    LassoWord(const FiniteWord& spoke, const FiniteWord& cycle);

    /// Literal "u(v)" with digit strings u and v.
    static LassoWord parse(std::string_view text, Alphabet alphabet);

    const FiniteWord& spoke() const noexcept { return spoke_; }
    const FiniteWord& cycle() const noexcept { return cycle_; }
    Alphabet alphabet() const noexcept { return spoke_.alphabet(); }

    Letter at(std::size_t i) const;
    FiniteWord prefix(std::size_t n) const;

    /// Position i folded into [0, |u|+|v|): two positions with the same phase
    /// start the same suffix.
    std::size_t phase(std::size_t i) const noexcept;
    std::size_t period_span() const noexcept { return spoke_.size() + cycle_.size(); }

    /// The ω-word with its first n letters removed.
    LassoWord drop(std::size_t n) const;

    LassoWord widen(Alphabet alphabet) const;

    std::string str() const;

    bool operator==(const LassoWord&) const = default;

private:
    FiniteWord spoke_;
    FiniteWord cycle_;
};

/// Canonical lasso for spoke·cycle^ω. Throws if the cycle is empty.
LassoWord normalize(const FiniteWord& spoke, const FiniteWord& cycle);

/// Element of K_{N,j} (possibly behind a finite head):
///   head · 2^N · [ m_0 2^{M_{j+1}} 3 2^{M_{j+1}} ] [ m_1 2^{M_{j+2}} 3 2^{M_{j+2}} ] ...
/// With an empty head this is φ_{N,j}^{-1}(m). Requires N <= M_j.
class KnjWord
{
public:
    KnjWord(std::uint64_t n, std::uint64_t j, LassoWord m);
    KnjWord(FiniteWord head, std::uint64_t n, std::uint64_t j, LassoWord m);

    const FiniteWord& head() const noexcept { return head_; }
    std::uint64_t n() const noexcept { return n_; }
    std::uint64_t j() const noexcept { return j_; }
    const LassoWord& m() const noexcept { return m_; }
    bool has_head() const noexcept { return !head_.empty(); }

    /// Run length of the letter 2 on each side of the 3 in block k: M_{j+k+1}.
    std::uint64_t block_run(std::size_t k) const;
    /// Length of block k: m_k, 2^{M}, 3, 2^{M}.
    std::uint64_t block_length(std::size_t k) const { return 2 * block_run(k) + 2; }
    /// Offset of m_k from the start of the word, head included.
    std::uint64_t block_start(std::size_t k) const;

    Letter at(std::uint64_t i) const;
    FiniteWord prefix(std::size_t n) const;

    std::string str() const;

    bool operator==(const KnjWord&) const = default;

private:
    FiniteWord head_;
    std::uint64_t n_;
    std::uint64_t j_;
    LassoWord m_;
};

/// A finitely presented ω-word: a lasso or a K_{N,j}-carried word.
class SyntheticWord
{
public:
    SyntheticWord(LassoWord w) : value_(std::move(w)) {}
    SyntheticWord(KnjWord w) : value_(std::move(w)) {}

    bool is_lasso() const noexcept { return std::holds_alternative<LassoWord>(value_); }
    bool is_knj() const noexcept { return std::holds_alternative<KnjWord>(value_); }
    const LassoWord& lasso() const { return std::get<LassoWord>(value_); }
    const KnjWord& knj() const { return std::get<KnjWord>(value_); }

    Alphabet alphabet() const;
    Letter at(std::uint64_t i) const;
    FiniteWord prefix(std::size_t n) const;
    std::string str() const;

    bool operator==(const SyntheticWord&) const = default;

private:
    std::variant<LassoWord, KnjWord> value_;
};

/// w - s: the ω-word w with the prefix s removed. Throws not_a_prefix.
SyntheticWord suffix_from(const SyntheticWord& w, const FiniteWord& s);

/// One segment of the alternation decomposition of a word into runs of the
/// letter 2 separated by other letters. The leading run (if non-empty) has no
/// delimiter; every other segment is a delimiter followed by its run of 2s.
struct RunSegment
{
    std::optional<Letter> delimiter;
    std::size_t run = 0;

    bool operator==(const RunSegment&) const = default;
};

std::vector<RunSegment> run_decompose(const FiniteWord& s);
FiniteWord run_recompose(std::span<const RunSegment> segments, Alphabet alphabet);

} // namespace omegapow
