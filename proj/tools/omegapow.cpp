// omegapow command-line front end. Every command prints one line of JSON.
// Exit status: 0 true/pass, 1 false/fail, 2 usage or input error, 3 inconclusive.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "omegapow/construction.hpp"
#include "omegapow/io.hpp"
#include "omegapow/knj.hpp"
#include "omegapow/literal.hpp"
#include "omegapow/pairs.hpp"
#include "omegapow/regular.hpp"
#include "omegapow/sigma2.hpp"
#include "omegapow/suites.hpp"

using namespace omegapow;
using json = nlohmann::ordered_json;

namespace
{

enum Exit : int { exit_true = 0, exit_false = 1, exit_usage = 2, exit_inconclusive = 3 };

int emit(const json& j, int code)
{
    std::cout << j.dump() << '\n';
    return code;
}

int exit_of(Decision d)
{
    switch (d) {
    case Decision::yes: return exit_true;
    case Decision::no: return exit_false;
    case Decision::inconclusive: return exit_inconclusive;
    }
    return exit_inconclusive;
}

json pair_json(PairIndex n)
{
    const QPair q = q_of_index(n);
    return {{"index", n.value}, {"length", q.length()}, {"beta", q.beta.str()}, {"alpha", q.alpha.str()}};
}

template <class T>
T literal_as(const std::string& text, std::optional<Alphabet> alphabet, const char* what)
{
    const WordLiteral w = parse_word_literal(text, alphabet);
    if (!std::holds_alternative<T>(w))
        throw syntax_error(std::string("expected ") + what, 0);
    return std::get<T>(w);
}

json run_json(const BuchiAutomaton& b, const LassoRun& run)
{
    auto states = json::array();
    for (State s : run.states)
        states.push_back(b.names().empty() ? json(s) : json(b.names()[s]));
    return {{"states", states}, {"loop_start", run.loop_start}};
}

// omega-member for a finite automaton V: w ∈ V^ω.
int regular_omega(const FiniteAutomaton& v, const std::string& construction, const std::string& input)
{
    const LassoWord w = literal_as<LassoWord>(input, v.alphabet(), "a lasso literal");
    BuchiAutomaton b = omega_power_automaton(v);
    if (!v.names().empty()) {
        auto names = v.names();
        names.push_back("boundary");
        b.set_names(names);
    }
    const auto run = accepting_run(b, w);
    json j{{"construction", construction}, {"input", w.str()}, {"verdict", run ? "yes" : "no"}};
    if (run)
        j["run"] = run_json(b, *run);
    return emit(j, run ? exit_true : exit_false);
}

struct Options
{
    std::uint64_t index = 0;
    std::uint64_t j = 0;
    std::string word, lasso, lang, rtree = "full", construction, input, automaton, suite, out;
    std::uint64_t budget = 10000;
    std::optional<std::uint64_t> bound, jmax, samples;
    std::uint64_t seed = 1;
    std::optional<std::string> verify_rtree;
    std::optional<std::uint64_t> verify_budget;
    bool timing = false;
};

int cmd_enum_q(const Options& o)
{
    return emit(pair_json(PairIndex{o.index}), exit_true);
}

int cmd_enum_m(const Options& o)
{
    const std::uint64_t m = m_offset(o.j);
    return emit({{"j", o.j}, {"M", m}, {"pair", pair_json(PairIndex{m})}}, exit_true);
}

int cmd_erase(const Options& o)
{
    if (o.word.empty() == o.lasso.empty())
        throw syntax_error("give exactly one of --word and --lasso", 0);
    if (!o.word.empty()) {
        const FiniteWord s = literal_as<FiniteWord>(o.word, Alphabet::ternary(), "a finite word");
        return emit({{"input", s.empty() ? "ε" : s.str()}, {"erased", erase_fin(s).str()}}, exit_true);
    }
    const LassoWord a = literal_as<LassoWord>(o.lasso, Alphabet::ternary(), "a lasso literal");
    const auto limit = erase_lasso(a, o.budget);
    if (!limit)
        return emit({{"input", a.str()}, {"erased", nullptr}, {"verdict", "inconclusive"}}, exit_inconclusive);
    return emit({{"input", a.str()}, {"erased", limit->str()}}, exit_true);
}

int cmd_member(const Options& o)
{
    json j{{"lang", o.lang}};
    bool member = false;
    if (o.lang == "E" || o.lang == "A3" || o.lang == "T") {
        const FiniteWord s = literal_as<FiniteWord>(o.word, Alphabet::ternary(), "a finite word");
        j["word"] = s.empty() ? "ε" : s.str();
        member = o.lang == "E" ? e_counter_member(s) : o.lang == "A3" ? a3_member(s) : t_member(s);
    } else if (o.lang == "B2") {
        const FiniteWord s = literal_as<FiniteWord>(o.word, Alphabet::binary(), "a finite word");
        j["word"] = s.empty() ? "ε" : s.str();
        member = xi1_sigma_witness().accepts(s);
    } else {
        const FiniteWord s = literal_as<FiniteWord>(o.word, Alphabet::quaternary(), "a finite word");
        j["word"] = s.empty() ? "ε" : s.str();
        if (o.lang == "mu")
            member = mu_member(s);
        else if (o.lang == "mu0")
            member = mu0_member(s);
        else if (o.lang == "mu1")
            member = mu1_member(s);
        else {
            const RTree r = load_rtree(o.rtree);
            j["rtree"] = o.rtree;
            if (o.lang == "pi") {
                const auto d = pi_member(s, r);
                member = d.has_value();
                if (d) {
                    auto blocks = json::array();
                    for (const auto& b : d->blocks)
                        blocks.push_back({{"n", b.n.value}, {"m", b.m}, {"p", b.p.value}, {"r", b.r}});
                    j["decomposition"] = {{"j", d->j}, {"blocks", blocks}};
                }
            } else {
                member = a_member(s, r);
            }
        }
    }
    j["member"] = member;
    return emit(j, member ? exit_true : exit_false);
}

int cmd_omega_member(const Options& o)
{
    const std::string& c = o.construction;
    if (c == "xi1-sigma")
        return regular_omega(xi1_sigma_witness(), c, o.input);
    if (c == "xi1-pi")
        return regular_omega(singleton_zero(), c, o.input);
    if (c == "xi2-pi")
        return regular_omega(zero_star_one(), c, o.input);
    if (c == "regular") {
        if (o.automaton.empty())
            throw syntax_error("--automaton is required for the regular construction", 0);
        return regular_omega(load_automaton(o.automaton), c, o.input);
    }
    if (c == "sigma2") {
        const LassoWord a = literal_as<LassoWord>(o.input, Alphabet::ternary(), "a lasso literal");
        const Decision d = a3_omega_member(a, o.budget);
        const Decision e = e_preimage_check(a, o.budget);
        return emit({{"construction", c}, {"input", a.str()}, {"budget", o.budget},
                     {"verdict", to_string(d)}, {"e_preimage", to_string(e)}},
                    exit_of(d));
    }
    if (c == "theorem2") {
        const WordLiteral lit = parse_word_literal(o.input, Alphabet::quaternary());
        if (std::holds_alternative<FiniteWord>(lit))
            throw syntax_error("expected a lasso or K literal", 0);
        const SyntheticWord w = std::holds_alternative<LassoWord>(lit) ? SyntheticWord(std::get<LassoWord>(lit))
                                                                       : SyntheticWord(std::get<KnjWord>(lit));
        const RTree r = load_rtree(o.rtree);
        const Decision d = a_omega_member(w, r, o.budget);
        return emit({{"construction", c}, {"input", w.str()}, {"rtree", o.rtree}, {"budget", o.budget},
                     {"verdict", to_string(d)}},
                    exit_of(d));
    }
    throw syntax_error("unknown construction '" + c + "'", 0);
}

int cmd_verify(const Options& o)
{
    SuiteParams p;
    p.bound = o.bound;
    p.seed = o.seed;
    p.rtree = o.verify_rtree;
    p.budget = o.verify_budget;
    p.jmax = o.jmax;
    p.samples = o.samples;
    p.timing = o.timing;
    const SuiteReport report = run_suite(o.suite, p);
    const json j = report_to_json(report);
    std::ofstream file(o.out);
    if (!file)
        throw invalid_parameter("cannot write " + o.out);
    file << j.dump() << '\n';
    switch (report.verdict()) {
    case Verdict::pass: return emit(j, exit_true);
    case Verdict::fail: return emit(j, exit_false);
    case Verdict::inconclusive: return emit(j, exit_inconclusive);
    }
    return exit_inconclusive;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"ω-powers of finitary languages: deciders and verification suites"};
    app.require_subcommand(1);
    Options o;

    auto* en = app.add_subcommand("enum", "pair enumeration");
    en->require_subcommand(1);
    auto* en_q = en->add_subcommand("q", "the pair q_N");
    en_q->add_option("--index", o.index, "N")->required();
    auto* en_m = en->add_subcommand("m", "M_j and the pair q_{M_j}");
    en_m->add_option("--j", o.j, "j")->required()->check(CLI::Range(0u, kMaxPairLength));

    auto* erase = app.add_subcommand("erase", "the erasing map on a word or lasso");
    auto* erase_word = erase->add_option("--word", o.word, "finite ternary word");
    erase->add_option("--lasso", o.lasso, "ternary lasso in T")->excludes(erase_word);
    erase->add_option("--budget", o.budget, "prefix letters");

    auto* member = app.add_subcommand("member", "membership of a finite word");
    member->add_option("--lang", o.lang)->required()->check(
        CLI::IsMember({"E", "A3", "B2", "T", "pi", "mu", "mu0", "mu1", "A4"}));
    member->add_option("--rtree", o.rtree, "full, diag or an R-tree file");
    member->add_option("--word", o.word)->required();

    auto* om = app.add_subcommand("omega-member", "membership of an ω-word in an ω-power");
    om->add_option("--construction", o.construction)->required()->check(
        CLI::IsMember({"sigma2", "xi1-sigma", "xi1-pi", "xi2-pi", "theorem2", "regular"}));
    om->add_option("--input", o.input, "lasso or K literal")->required();
    om->add_option("--rtree", o.rtree, "full, diag or an R-tree file");
    om->add_option("--automaton", o.automaton, "automaton file for the regular construction");
    om->add_option("--budget", o.budget, "prefix letters");

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", o.suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--bound", o.bound);
    verify->add_option("--seed", o.seed);
    verify->add_option("--rtree", o.verify_rtree, "full, diag or an R-tree file; default both built-ins");
    verify->add_option("--budget", o.verify_budget);
    verify->add_option("--jmax", o.jmax);
    verify->add_option("--samples", o.samples, "random lassos for sigma2-main");
    verify->add_flag("--timing", o.timing, "include runtime_ms in the report");
    verify->add_option("--out", o.out)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (en_q->parsed())
            return cmd_enum_q(o);
        if (en_m->parsed())
            return cmd_enum_m(o);
        if (erase->parsed())
            return cmd_erase(o);
        if (member->parsed())
            return cmd_member(o);
        if (om->parsed())
            return cmd_omega_member(o);
        if (verify->parsed())
            return cmd_verify(o);
    } catch (const error& e) {
        std::cerr << json{{"error", e.what()}}.dump() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
