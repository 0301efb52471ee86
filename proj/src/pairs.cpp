#include "omegapow/pairs.hpp"

#include <string>

namespace omegapow
{

namespace
{

// (4^L - 1) / 3: index of the first pair of length L.
std::uint64_t class_start(unsigned length)
{
    if (length > kMaxPairLength)
        throw index_overflow("pair length " + std::to_string(length) + " exceeds 64-bit index range");
    return ((std::uint64_t{1} << (2 * length)) - 1) / 3;
}

} // namespace

QPair::QPair(FiniteWord beta_part, FiniteWord alpha_part)
    : beta(std::move(beta_part)), alpha(std::move(alpha_part))
{
    if (beta.size() != alpha.size())
        throw error("pair components differ in length: " + beta.str() + " / " + alpha.str());
    if (beta.alphabet() != Alphabet::binary() || alpha.alphabet() != Alphabet::binary())
        throw alphabet_mismatch("pair components must be binary words");
}

unsigned pair_length(PairIndex n)
{
    unsigned length = 0;
    while (length < kMaxPairLength && class_start(length + 1) <= n.value)
        ++length;
    if (length == kMaxPairLength && n.value >= class_start(kMaxPairLength) + (std::uint64_t{1} << 62))
        throw index_overflow("pair index " + std::to_string(n.value) + " out of range");
    return length;
}

PackedPair unpack(PairIndex n)
{
    PackedPair p;
    p.length = pair_length(n);
    const std::uint64_t within = n.value - class_start(p.length);
    p.beta = within >> p.length;
    p.alpha = within & ((std::uint64_t{1} << p.length) - 1);
    return p;
}

PairIndex pack(const PackedPair& p)
{
    const std::uint64_t start = class_start(p.length);
    return PairIndex{start + ((p.beta << p.length) | p.alpha)};
}

QPair q_of_index(PairIndex n)
{
    const PackedPair p = unpack(n);
    std::vector<Letter> beta(p.length), alpha(p.length);
    for (unsigned i = 0; i < p.length; ++i) {
        beta[i] = p.beta_at(i);
        alpha[i] = p.alpha_at(i);
    }
    return QPair(FiniteWord(std::move(beta), Alphabet::binary()),
                 FiniteWord(std::move(alpha), Alphabet::binary()));
}

PairIndex index_of_q(const QPair& q)
{
    if (q.beta.size() != q.alpha.size())
        throw error("pair components differ in length");
    if (q.length() > kMaxPairLength)
        throw index_overflow("pair of length " + std::to_string(q.length()) + " has no 64-bit index");
    PackedPair p;
    p.length = static_cast<unsigned>(q.length());
    for (std::size_t i = 0; i < q.length(); ++i) {
        p.beta = (p.beta << 1) | q.beta[i];
        p.alpha = (p.alpha << 1) | q.alpha[i];
    }
    return pack(p);
}

std::uint64_t m_offset(std::uint64_t j)
{
    if (j > kMaxPairLength)
        throw index_overflow("M_" + std::to_string(j) + " exceeds 64 bits");
    // 4 (4^j - 1) / 3
    return 4 * (((std::uint64_t{1} << (2 * j)) - 1) / 3);
}

std::optional<std::uint64_t> m_index_of(std::uint64_t value)
{
    for (std::uint64_t j = 0; j <= kMaxPairLength; ++j) {
        const std::uint64_t m = m_offset(j);
        if (m == value)
            return j;
        if (m > value)
            break;
    }
    return std::nullopt;
}

std::array<PairIndex, 2> successors(PairIndex n, Letter m)
{
    if (m > 1)
        throw invalid_letter("transition letter must be 0 or 1");
    const PackedPair from = unpack(n);
    if (from.length + 1 > kMaxPairLength)
        throw index_overflow("successor of pair of length " + std::to_string(from.length));
    std::array<PairIndex, 2> out;
    for (unsigned b = 0; b < 2; ++b) {
        PackedPair to{from.length + 1, (from.beta << 1) | b, (from.alpha << 1) | m};
        out[b] = pack(to);
    }
    return out;
}

bool is_transition(PairIndex n, Letter m, PairIndex p)
{
    if (m > 1)
        return false;
    const PackedPair from = unpack(n);
    const PackedPair to = unpack(p);
    return to.length == from.length + 1 && (to.beta >> 1) == from.beta
        && to.alpha == ((from.alpha << 1) | m);
}

} // namespace omegapow
