#include <doctest.h>

#include <vector>

#include "omegapow/corpus.hpp"
#include "omegapow/oracles.hpp"
#include "omegapow/regular.hpp"

using namespace omegapow;

namespace
{

LassoWord lw(const char* s) { return LassoWord::parse(s, Alphabet::binary()); }
FiniteWord fw(const char* s) { return FiniteWord::parse(s, Alphabet::binary()); }

bool in_power(const FiniteAutomaton& v, const char* w)
{
    return lasso_accepts(omega_power_automaton(v), lw(w));
}

} // namespace

TEST_CASE("finite acceptance")
{
    const auto b = xi1_sigma_witness();
    CHECK(b.accepts(fw("01")));
    CHECK(b.accepts(fw("1001")));
    CHECK_FALSE(b.accepts(fw("10")));
    CHECK_FALSE(b.accepts(fw("")));
    CHECK(zero_star_one().accepts(fw("0001")));
    CHECK_FALSE(zero_star_one().accepts(fw("010")));
    CHECK_FALSE(empty_language(Alphabet::binary()).accepts(fw("")));
}

TEST_CASE("ω-powers of the witness languages")
{
    CHECK(in_power(singleton_zero(), "(0)"));
    CHECK_FALSE(in_power(singleton_zero(), "1(0)"));
    CHECK(in_power(zero_star_one(), "(01)"));
    CHECK_FALSE(in_power(zero_star_one(), "1(0)"));
    CHECK(in_power(zero_star_one(), "(1)"));
    CHECK_FALSE(in_power(xi1_sigma_witness(), "1(0)"));
    CHECK(in_power(xi1_sigma_witness(), "(0)"));
    CHECK(in_power(xi1_sigma_witness(), "11(0)"));
    for (const auto& w : corpus_lassos(Alphabet::binary(), 3, 3))
        CHECK_FALSE(lasso_accepts(omega_power_automaton(empty_language(Alphabet::binary())), w));
}

TEST_CASE("P_∞ and the Baire embedding")
{
    CHECK(pinf_member(lw("(01)")));
    CHECK_FALSE(pinf_member(lw("111(0)")));
    CHECK(pinf_member(lw("(1)")));
    CHECK(baire_embed_prefix(std::vector<std::uint64_t>{0}).str() == "1");
    CHECK(baire_embed_prefix(std::vector<std::uint64_t>{2, 0}).str() == "0011");
    CHECK(baire_embed_prefix(std::vector<std::uint64_t>{}).empty());
}

TEST_CASE("accepting runs replay")
{
    const auto b = omega_power_automaton(xi1_sigma_witness());
    for (const auto& w : corpus_lassos(Alphabet::binary(), 3, 3)) {
        const auto run = accepting_run(b, w);
        CHECK(run.has_value() == (w.str() != "1(0)"));
        if (run) {
            CHECK(check_run(b, w, *run));
            LassoRun broken = *run;
            broken.states[0] = broken.states[0] == 0 ? 1 : 0;
            CHECK_FALSE(check_run(b, w, broken));
        }
    }
}

// Random small automata against factorization search with subset simulation.
TEST_CASE("ω-power automaton agrees with factor search")
{
    std::uint64_t x = 12345;
    auto next = [&] { x = x * 6364136223846793005ULL + 1442695040888963407ULL; return x >> 33; };
    const auto corpus = corpus_lassos(Alphabet::binary(), 3, 3);
    for (int round = 0; round < 60; ++round) {
        const std::size_t n = 1 + next() % 3;
        FiniteAutomaton v(Alphabet::binary(), n, 0);
        for (State s = 0; s < n; ++s) {
            for (Letter a : {0, 1})
                for (State t = 0; t < n; ++t)
                    if (next() % 3 == 0)
                        v.add_transition(s, a, t);
            if (next() % 2)
                v.set_accepting(s);
        }
        const auto b = omega_power_automaton(v);
        for (const auto& w : corpus)
            CHECK(lasso_accepts(b, w) == omega_power_bruteforce(v, w));
    }
}

TEST_CASE("automaton validation")
{
    FiniteAutomaton a(Alphabet::binary(), 2, 0);
    CHECK_THROWS_AS(a.add_transition(0, 0, 2), invalid_automaton);
    CHECK_THROWS_AS(a.add_transition(0, 2, 1), invalid_letter);
    CHECK_THROWS_AS(FiniteAutomaton(Alphabet::binary(), 2, 2), invalid_automaton);
    CHECK_THROWS_AS(lasso_accepts(omega_power_automaton(a), LassoWord::parse("(2)", Alphabet::ternary())),
                    alphabet_mismatch);
}
