#pragma once

// Enumeration of Q = { (s,t) in 2^{<ω} x 2^{<ω} : |s| = |t| }.
//
// Pairs are listed by length, then lexicographically with the β-part as the
// major key and the α-part as the minor key: q_0 = (∅,∅), q_1 = (0,0),
// q_2 = (0,1), q_3 = (1,0), q_4 = (1,1), q_5 = (00,00), q_6 = (00,01), ...
// The pairs of length L occupy indices [(4^L-1)/3, (4^{L+1}-1)/3), so the
// last one is M_L = Σ_{i<L} 4^{i+1}.
//
// Indices are 64-bit; pairs of length up to kMaxPairLength are addressable
// and M_j is representable for j <= kMaxPairLength. Anything larger throws
// index_overflow.

#include <array>
#include <compare>
#include <cstdint>
#include <optional>

#include "omegapow/word.hpp"

namespace omegapow
{

inline constexpr unsigned kMaxPairLength = 31;

struct PairIndex
{
    std::uint64_t value = 0;

    auto operator<=>(const PairIndex&) const = default;
};

/// (β-part, α-part): the guessed β-prefix and the α-prefix read so far.
struct QPair
{
    FiniteWord beta;
    FiniteWord alpha;

    QPair(FiniteWord beta_part, FiniteWord alpha_part);

    std::size_t length() const noexcept { return beta.size(); }
    bool operator==(const QPair&) const = default;
};

/// Bit-packed pair; bit i of `beta` (counting from the most significant of
/// `length` bits) is β(i).
struct PackedPair
{
    unsigned length = 0;
    std::uint64_t beta = 0;
    std::uint64_t alpha = 0;

    bool beta_at(unsigned i) const noexcept { return (beta >> (length - 1 - i)) & 1U; }
    bool alpha_at(unsigned i) const noexcept { return (alpha >> (length - 1 - i)) & 1U; }

    bool operator==(const PackedPair&) const = default;
};

PackedPair unpack(PairIndex n);
PairIndex pack(const PackedPair& p);

QPair q_of_index(PairIndex n);
PairIndex index_of_q(const QPair& p);

/// |q⁰_n| = |q¹_n|.
unsigned pair_length(PairIndex n);

/// M_j = Σ_{i<j} 4^{i+1}.
std::uint64_t m_offset(std::uint64_t j);
/// The j with M_j = value, if any.
std::optional<std::uint64_t> m_index_of(std::uint64_t value);

/// The two p with n →^m p, ordered by the appended β-bit (0 first).
std::array<PairIndex, 2> successors(PairIndex n, Letter m);
bool is_transition(PairIndex n, Letter m, PairIndex p);

} // namespace omegapow
