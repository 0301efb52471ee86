#include <doctest.h>

#include <algorithm>

#include "omegapow/pairs.hpp"

using namespace omegapow;

namespace
{

QPair q(const char* beta, const char* alpha)
{
    return QPair(FiniteWord::parse(beta, Alphabet::binary()), FiniteWord::parse(alpha, Alphabet::binary()));
}

// All pairs up to `max_len` listed by length, then β, then α.
std::vector<QPair> listing(unsigned max_len)
{
    std::vector<QPair> out;
    for (unsigned len = 0; len <= max_len; ++len)
        for (std::uint64_t b = 0; b < (1ULL << len); ++b)
            for (std::uint64_t a = 0; a < (1ULL << len); ++a) {
                std::vector<Letter> bw(len), aw(len);
                for (unsigned i = 0; i < len; ++i) {
                    bw[i] = (b >> (len - 1 - i)) & 1U;
                    aw[i] = (a >> (len - 1 - i)) & 1U;
                }
                out.emplace_back(FiniteWord(bw, Alphabet::binary()), FiniteWord(aw, Alphabet::binary()));
            }
    return out;
}

} // namespace

TEST_CASE("listed pairs")
{
    CHECK(q_of_index(PairIndex{0}) == q("", ""));
    CHECK(q_of_index(PairIndex{1}) == q("0", "0"));
    CHECK(q_of_index(PairIndex{2}) == q("0", "1"));
    CHECK(q_of_index(PairIndex{3}) == q("1", "0"));
    CHECK(q_of_index(PairIndex{4}) == q("1", "1"));
    CHECK(q_of_index(PairIndex{5}) == q("00", "00"));
    CHECK(q_of_index(PairIndex{6}) == q("00", "01"));
    CHECK(index_of_q(q("0", "1")).value == 2);
    CHECK(index_of_q(q("1", "1")).value == 4);
    CHECK(index_of_q(q("11", "11")).value == 20);
}

TEST_CASE("enumeration agrees with an explicit listing")
{
    const auto all = listing(6);
    for (std::uint64_t n = 0; n < all.size(); ++n) {
        CHECK(q_of_index(PairIndex{n}) == all[n]);
        CHECK(index_of_q(all[n]).value == n);
    }
}

TEST_CASE("M_j")
{
    CHECK(m_offset(0) == 0);
    CHECK(m_offset(1) == 4);
    CHECK(m_offset(2) == 20);
    for (std::uint64_t j = 0; j <= 6; ++j) {
        CHECK(pair_length(PairIndex{m_offset(j)}) == j);
        CHECK(pair_length(PairIndex{m_offset(j) + 1}) == j + 1);
        CHECK(m_index_of(m_offset(j)) == j);
    }
    CHECK_FALSE(m_index_of(5).has_value());
    CHECK(m_offset(kMaxPairLength) > m_offset(kMaxPairLength - 1));
    CHECK_THROWS_AS(m_offset(kMaxPairLength + 1), index_overflow);
    CHECK_THROWS_AS(q_of_index(PairIndex{~std::uint64_t{0}}), index_overflow);
}

TEST_CASE("transitions")
{
    auto as_sorted = [](std::array<PairIndex, 2> a) {
        std::vector<std::uint64_t> v{a[0].value, a[1].value};
        std::sort(v.begin(), v.end());
        return v;
    };
    CHECK(as_sorted(successors(PairIndex{0}, 1)) == std::vector<std::uint64_t>{2, 4});
    CHECK(as_sorted(successors(PairIndex{1}, 0)) == std::vector<std::uint64_t>{5, 9});
    CHECK(as_sorted(successors(PairIndex{0}, 0)) == std::vector<std::uint64_t>{1, 3});
    CHECK(is_transition(PairIndex{0}, 1, PairIndex{4}));
    CHECK_FALSE(is_transition(PairIndex{0}, 1, PairIndex{3}));
    CHECK_FALSE(is_transition(PairIndex{1}, 0, PairIndex{1}));

    // n →^m p iff p extends n by one letter in each component, the α-letter being m.
    const auto all = listing(3);
    for (std::uint64_t n = 0; n < 21; ++n)
        for (Letter m : {0, 1})
            for (std::uint64_t p = 0; p < all.size(); ++p) {
                const QPair& a = all[n];
                const QPair& b = all[p];
                const bool want = b.length() == a.length() + 1 && a.beta.is_prefix_of(b.beta)
                                  && a.alpha.is_prefix_of(b.alpha) && b.alpha.back() == m;
                CHECK(is_transition(PairIndex{n}, m, PairIndex{p}) == want);
            }
}
