#include <doctest.h>

#include "omegapow/corpus.hpp"
#include "omegapow/sigma2.hpp"

using namespace omegapow;

namespace
{

FiniteWord fw(const char* s) { return FiniteWord::parse(s, Alphabet::ternary()); }
LassoWord lw(const char* s) { return LassoWord::parse(s, Alphabet::ternary()); }
LassoWord bw(const char* s) { return LassoWord::parse(s, Alphabet::binary()); }

// s ↪ straight from the inductive clauses: copy 0 and 1; on 2, turn the last
// 1 not yet turned into 0 and drop the 2.
std::string erase_by_rewriting(const std::string& s)
{
    std::string out;
    for (char c : s) {
        if (c != '2') {
            out += c;
            continue;
        }
        const auto pos = out.rfind('1');
        REQUIRE(pos != std::string::npos);
        out[pos] = '0';
    }
    return out;
}

} // namespace

TEST_CASE("letter counts and T")
{
    CHECK(count_letter(fw("112"), 2) == 1);
    CHECK(count_letter(fw("112"), 1) == 2);
    CHECK(count_letter(fw(""), 0) == 0);
    CHECK(t_member(fw("12")));
    CHECK_FALSE(t_member(fw("21")));
    CHECK(t_member(lw("1(12)")));
    CHECK_FALSE(t_member(lw("(122)")));
    CHECK_FALSE(t_member(lw("(2)")));
}

TEST_CASE("finite erasing")
{
    CHECK(erase_fin(fw("12")).str() == "0");
    CHECK(erase_fin(fw("112")).str() == "10");
    CHECK(erase_fin(fw("")).empty());
    CHECK_THROWS_AS(erase_fin(fw("2")), not_in_t);
    for (const auto& w : all_words(Alphabet::ternary(), 9))
        if (t_member(w))
            CHECK(erase_fin(w).str() == erase_by_rewriting(w.str()));
}

TEST_CASE("erasing lassos")
{
    CHECK(erase_lasso(lw("1(12)"), 1000) == bw("1(0)"));
    CHECK(erase_lasso(lw("(1122)"), 1000) == bw("(0)"));
    CHECK(erase_lasso(lw("(1)"), 1000) == bw("(1)"));
    CHECK_FALSE(erase_lasso(lw("1(12)"), 1).has_value());
    CHECK_THROWS_AS(erase_lasso(lw("(2)"), 1000), not_in_t);

    // The limit agrees with erasing long prefixes: every letter of the limit
    // is final once the prefix runs far enough past it.
    for (const auto& a : corpus_lassos(Alphabet::ternary(), 3, 3, [](const LassoWord& w) { return t_member(w); })) {
        const auto limit = erase_lasso(a, 10000);
        REQUIRE(limit.has_value());
        const FiniteWord long_prefix = erase_fin(a.prefix(400));
        const FiniteWord head = limit->prefix(40);
        for (std::size_t i = 0; i < head.size(); ++i)
            CHECK(long_prefix[i] == head[i]);
    }
}

TEST_CASE("E")
{
    CHECK(e_def_member(fw("12")));
    CHECK(e_def_member(fw("1122")));
    CHECK_FALSE(e_def_member(fw("0")));
    CHECK(e_counter_member(fw("12")));
    CHECK_FALSE(e_counter_member(fw("1212")));
    CHECK(e_counter_member(fw("1122")));
    for (const auto& w : all_words(Alphabet::ternary(), 8))
        CHECK(e_def_member(w) == e_counter_member(w));
}

TEST_CASE("A")
{
    CHECK(a3_member(fw("0")));
    CHECK(a3_member(fw("11")));
    CHECK_FALSE(a3_member(fw("1")));
    CHECK(a3_member(fw("12")));
    CHECK(a3_member(fw("0121")));
    CHECK_FALSE(a3_member(fw("")));
    CHECK_FALSE(a3_member(fw("2")));
}

TEST_CASE("B^ω and the two A^ω deciders")
{
    CHECK_FALSE(b2_omega_member(bw("1(0)")));
    CHECK(b2_omega_member(bw("(0)")));
    CHECK(b2_omega_member(bw("(10)")));

    CHECK(a3_omega_member(lw("(0)"), 1000) == Decision::yes);
    CHECK(a3_omega_member(lw("(1122)"), 1000) == Decision::yes);
    CHECK(a3_omega_member(lw("1(12)"), 1000) == Decision::no);
    CHECK(e_preimage_check(lw("(1122)"), 1000) == Decision::yes);
    CHECK(e_preimage_check(lw("1(12)"), 1000) == Decision::no);
    CHECK(e_preimage_check(lw("(1)"), 1000) == Decision::yes);
    CHECK(a3_omega_member(lw("1(12)"), 2) == Decision::inconclusive);
}
