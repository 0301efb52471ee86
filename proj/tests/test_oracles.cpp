#include <doctest.h>

#include "omegapow/corpus.hpp"
#include "omegapow/oracles.hpp"

using namespace omegapow;

namespace
{

LassoWord lw(const char* s) { return LassoWord::parse(s, Alphabet::quaternary()); }
LassoWord code(const char* s) { return LassoWord::parse(s, Alphabet::binary()); }

} // namespace

TEST_CASE("factor search on the witness languages")
{
    CHECK(omega_power_bruteforce(singleton_zero(), LassoWord::parse("(0)", Alphabet::binary())));
    CHECK_FALSE(omega_power_bruteforce(singleton_zero(), LassoWord::parse("1(0)", Alphabet::binary())));
    CHECK_FALSE(omega_power_bruteforce(xi1_sigma_witness(), LassoWord::parse("1(0)", Alphabet::binary())));
    CHECK(omega_power_bruteforce(zero_star_one(), LassoWord::parse("0(001)", Alphabet::binary())));
}

TEST_CASE("direct A factorization")
{
    CHECK(direct_a_factorization(lw("(1222232222122223)"), RTree::full(), 10000) == Decision::yes);
    CHECK(direct_a_factorization(lw("(2)"), RTree::full(), 10000) == Decision::no);
    CHECK(direct_a_factorization(KnjWord(0, 0, code("(1)")), RTree::diagonal(), 10000) == Decision::yes);
    CHECK(direct_a_factorization(KnjWord(0, 0, code("1(0)")), RTree::diagonal(), 10000) == Decision::no);
    // 2^1 m 2^4 3 2^4: P-shaped, but no single factor fits within the horizon.
    CHECK(direct_a_factorization(lw("2(1222232222)"), RTree::full(), 1) == Decision::inconclusive);
}

TEST_CASE("direct factorization agrees with A^ω on small lassos")
{
    for (const RTree& r : {RTree::full(), RTree::diagonal()})
        for (const auto& w : corpus_lassos(Alphabet::quaternary(), 1, 3)) {
            const Decision d = direct_a_factorization(w, r, 10000);
            const Decision a = a_omega_member(w, r, 10000);
            if (d != Decision::inconclusive && a != Decision::inconclusive)
                CHECK(d == a);
        }
}
