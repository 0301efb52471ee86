#include <doctest.h>

#include <algorithm>

#include "omegapow/corpus.hpp"
#include "omegapow/io.hpp"
#include "omegapow/literal.hpp"
#include "omegapow/regular.hpp"
#include "omegapow/sigma2.hpp"

using namespace omegapow;

TEST_CASE("word literals")
{
    const auto lasso = parse_word_literal("1(12)");
    REQUIRE(std::holds_alternative<LassoWord>(lasso));
    CHECK(std::get<LassoWord>(lasso).spoke().str() == "1");
    CHECK(std::get<LassoWord>(lasso).cycle().str() == "12");
    CHECK(std::get<LassoWord>(lasso).alphabet() == Alphabet::ternary());

    const auto k = parse_word_literal("K[0,0]1(0)");
    REQUIRE(std::holds_alternative<KnjWord>(k));
    CHECK(std::get<KnjWord>(k) == KnjWord(0, 0, LassoWord::parse("1(0)", Alphabet::binary())));

    const auto headed = parse_word_literal("0223K[1,1](1)");
    REQUIRE(std::holds_alternative<KnjWord>(headed));
    CHECK(std::get<KnjWord>(headed).head().str() == "0223");

    CHECK(std::get<FiniteWord>(parse_word_literal("ε")).empty());
    CHECK(std::get<FiniteWord>(parse_word_literal("0110")).alphabet() == Alphabet::binary());
    CHECK(std::get<FiniteWord>(parse_word_literal("01", Alphabet::quaternary())).alphabet()
          == Alphabet::quaternary());

    CHECK_THROWS_AS(parse_word_literal("1(12"), syntax_error);
    CHECK_THROWS_AS(parse_word_literal("1()"), syntax_error);
    CHECK_THROWS_AS(parse_word_literal("K[5,1](1)"), invalid_address);
    CHECK_THROWS_AS(parse_word_literal("K[0,0](2)"), error);
    CHECK_THROWS_AS(parse_word_literal("3", Alphabet::binary()), error);
    try {
        parse_word_literal("01(1x)");
        FAIL("expected a syntax error");
    } catch (const syntax_error& e) {
        CHECK(e.position() == 4);
    }
}

TEST_CASE("literals round-trip")
{
    for (const auto& w : corpus_lassos(Alphabet::ternary(), 2, 2)) {
        const auto back = parse_word_literal(w.str(), Alphabet::ternary());
        CHECK(std::get<LassoWord>(back) == w);
    }
    for (const char* text : {"K[0,0](1)", "K[3,1]1(0)", "0122223K[0,0](01)"})
        CHECK(literal_str(parse_word_literal(text)) == text);
}

TEST_CASE("corpus order and filters")
{
    const auto small = corpus_lassos(Alphabet::binary(), 0, 1);
    REQUIRE(small.size() == 2);
    CHECK(small[0].str() == "(0)");
    CHECK(small[1].str() == "(1)");

    std::vector<std::string> names;
    for (const auto& w : corpus_lassos(Alphabet::binary(), 1, 1))
        names.push_back(w.str());
    CHECK(std::find(names.begin(), names.end(), "0(1)") != names.end());
    CHECK(std::find(names.begin(), names.end(), "1(0)") != names.end());
    CHECK(std::find(names.begin(), names.end(), "0(0)") == names.end());

    names.clear();
    for (const auto& w : corpus_lassos(Alphabet::ternary(), 0, 2, [](const LassoWord& w) { return t_member(w); }))
        names.push_back(w.str());
    CHECK(std::find(names.begin(), names.end(), "(12)") != names.end());
    CHECK(std::find(names.begin(), names.end(), "(21)") == names.end());

    CHECK(random_lassos(Alphabet::ternary(), 8, 8, 50, 7) == random_lassos(Alphabet::ternary(), 8, 8, 50, 7));
    CHECK(random_lassos(Alphabet::ternary(), 8, 8, 50, 7) != random_lassos(Alphabet::ternary(), 8, 8, 50, 8));
}

TEST_CASE("R-tree files")
{
    const RTree diag = rtree_from_json(rtree_to_json(RTree::diagonal()));
    CHECK(diag.names() == RTree::diagonal().names());
    CHECK(diag.step(0, 1, 0) == RTree::diagonal().step(0, 1, 0));
    CHECK(load_rtree("full").state_count() == 1);

    const char* bad = R"({"states":["a","b"],"initial":"a","live":["a"],
        "delta":{"a":{"00":"a","01":"b","10":"b","11":"a"},"b":{"00":"a","01":"b","10":"b","11":"b"}}})";
    CHECK_THROWS_AS(rtree_from_json(bad), invalid_rtree);
    CHECK_THROWS_AS(rtree_from_json("{"), error);
    CHECK_THROWS_AS(rtree_from_json(R"({"states":["a"],"initial":"z","live":["a"],"delta":{}})"), error);
}

TEST_CASE("automaton files")
{
    const auto a = automaton_from_json(automaton_to_json(xi1_sigma_witness()));
    CHECK(a.state_count() == 3);
    for (const auto& w : all_words(Alphabet::binary(), 6))
        CHECK(a.accepts(w) == xi1_sigma_witness().accepts(w));
    const char* nfa = R"({"alphabet":2,"states":["p","q"],"initial":"p","accepting":["q"],
        "delta":{"p":{"0":["p","q"]},"q":{}}})";
    const auto b = automaton_from_json(nfa);
    CHECK(b.accepts(FiniteWord::parse("000", Alphabet::binary())));
    CHECK_FALSE(b.accepts(FiniteWord::parse("01", Alphabet::binary())));
    CHECK_THROWS_AS(automaton_from_json(R"({"alphabet":5,"states":["p"],"initial":"p","accepting":[],"delta":{}})"),
                    error);
}
