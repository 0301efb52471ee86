#include "omegapow/suites.hpp"

#include <chrono>
#include <functional>
#include <map>

#include "omegapow/construction.hpp"
#include "omegapow/corpus.hpp"
#include "omegapow/io.hpp"
#include "omegapow/knj.hpp"
#include "omegapow/oracles.hpp"
#include "omegapow/pairs.hpp"
#include "omegapow/regular.hpp"
#include "omegapow/sigma2.hpp"
#include "omegapow/transition_system.hpp"

namespace omegapow
{

std::string_view to_string(Verdict v) noexcept
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

Verdict SuiteReport::verdict() const
{
    if (cases_failed > 0)
        return Verdict::fail;
    if (cases_total == 0)
        return Verdict::inconclusive;
    const double rate = static_cast<double>(cases_inconclusive) / static_cast<double>(cases_total);
    return rate > inconclusive_threshold ? Verdict::inconclusive : Verdict::pass;
}

namespace
{

constexpr std::size_t kMaxCounterexamples = 10;

class Tally
{
public:
    explicit Tally(SuiteReport& report) : report_(report) {}

    void check(bool ok, const std::string& input, const std::string& expected, const std::string& got)
    {
        ++report_.cases_total;
        if (ok)
            return;
        ++report_.cases_failed;
        if (report_.counterexamples.size() < kMaxCounterexamples)
            report_.counterexamples.push_back({input, expected, got});
    }

    void check(bool ok, const std::string& input) { check(ok, input, "true", "false"); }

    /// Two deciders: conclusive answers must agree.
    void compare(Decision expected, Decision got, const std::string& input)
    {
        if (expected == Decision::inconclusive || got == Decision::inconclusive) {
            ++report_.cases_total;
            ++report_.cases_inconclusive;
            return;
        }
        check(expected == got, input, std::string(to_string(expected)), std::string(to_string(got)));
    }

    void error(const std::string& input, const std::string& what) { check(false, input, "no error", what); }

private:
    SuiteReport& report_;
};

std::uint64_t param_or(const std::optional<std::uint64_t>& v, std::uint64_t fallback)
{
    return v.value_or(fallback);
}

struct NamedTree
{
    std::string name;
    RTree tree;
};

std::vector<NamedTree> trees_of(const SuiteParams& p)
{
    if (p.rtree)
        return {{*p.rtree, load_rtree(*p.rtree)}};
    return {{"full", RTree::full()}, {"diag", RTree::diagonal()}};
}

nlohmann::ordered_json tree_names(const std::vector<NamedTree>& trees)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& t : trees)
        out.push_back(t.name);
    return out;
}

FiniteWord bits(std::uint64_t value, unsigned length)
{
    std::vector<Letter> out(length);
    for (unsigned i = 0; i < length; ++i)
        out[i] = (value >> (length - 1 - i)) & 1U;
    return FiniteWord(std::move(out), Alphabet::binary());
}

std::string pair_str(const QPair& q)
{
    return "(" + q.beta.str() + "," + q.alpha.str() + ")";
}

// ---------------------------------------------------------------------------

void pair_enum_roundtrip(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 100000);
    report.parameters["bound"] = bound;
    Tally tally(report);

    const char* listed[][2] = {{"0", "0"}, {"0", "1"}, {"1", "0"}, {"1", "1"}, {"00", "00"}, {"00", "01"}};
    for (std::uint64_t i = 0; i < 6; ++i) {
        const QPair want(FiniteWord::parse(listed[i][0], Alphabet::binary()),
                         FiniteWord::parse(listed[i][1], Alphabet::binary()));
        const QPair got = q_of_index(PairIndex{i + 1});
        tally.check(got == want, "q" + std::to_string(i + 1), pair_str(want), pair_str(got));
    }

    // Independent listing: length, then β, then α.
    std::uint64_t n = 0;
    for (unsigned len = 0; n < bound; ++len)
        for (std::uint64_t b = 0; b < (1ULL << len) && n < bound; ++b)
            for (std::uint64_t a = 0; a < (1ULL << len) && n < bound; ++a, ++n) {
                const QPair want(bits(b, len), bits(a, len));
                const QPair got = q_of_index(PairIndex{n});
                const PairIndex back = index_of_q(got);
                const bool ok = got == want && back.value == n && pack(unpack(PairIndex{n})).value == n
                                && pair_length(PairIndex{n}) == len;
                tally.check(ok, "q" + std::to_string(n), pair_str(want),
                            pair_str(got) + " -> " + std::to_string(back.value));
            }

    for (unsigned j = 0; j <= 6; ++j) {
        const std::uint64_t mj = m_offset(j);
        const QPair last = q_of_index(PairIndex{mj});
        const std::uint64_t ones = (1ULL << j) - 1;
        const bool ok = last == QPair(bits(ones, j), bits(ones, j)) && pair_length(PairIndex{mj + 1}) == j + 1;
        tally.check(ok, "M_" + std::to_string(j), "last pair of length " + std::to_string(j), pair_str(last));
    }
}

void erase_homomorphism(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 8);
    report.parameters["bound"] = bound;
    Tally tally(report);

    std::vector<FiniteWord> words;
    for (auto& w : all_words(Alphabet::ternary(), bound))
        if (t_member(w))
            words.push_back(std::move(w));
    std::vector<FiniteWord> erased;
    std::vector<EraseState> states;
    for (const auto& w : words) {
        EraseState st;
        for (Letter l : w)
            st.feed(l);
        erased.push_back(st.word());
        states.push_back(std::move(st));
    }

    std::vector<Letter> expected;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t k = 0; k < words.size(); ++k) {
            EraseState st = states[i];
            for (Letter l : words[k])
                st.feed(l);
            expected.assign(erased[i].begin(), erased[i].end());
            expected.insert(expected.end(), erased[k].begin(), erased[k].end());
            const bool ok = st.emitted() == expected;
            if (ok)
                tally.check(true, {});
            else
                tally.check(false, words[i].str() + "·" + words[k].str(),
                            concat(erased[i], erased[k]).str(), st.word().str());
        }
}

void e_dual_characterization(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 12);
    report.parameters["bound"] = bound;
    Tally tally(report);
    for (const auto& w : all_words(Alphabet::ternary(), bound)) {
        const bool def = e_def_member(w), counter = e_counter_member(w);
        tally.check(def == counter, w.empty() ? "ε" : w.str(), def ? "in E" : "not in E",
                    counter ? "in E" : "not in E");
    }
}

void sigma2_main(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 4);
    const std::uint64_t samples = param_or(p.samples, 10000);
    const std::uint64_t budget = param_or(p.budget, 10000);
    report.parameters["bound"] = bound;
    report.parameters["samples"] = samples;
    report.parameters["random_bound"] = 8;
    report.parameters["seed"] = p.seed;
    report.parameters["budget"] = budget;
    Tally tally(report);

    const LassoFilter in_t = [](const LassoWord& w) { return t_member(w); };
    auto corpus = corpus_lassos(Alphabet::ternary(), bound, bound, in_t);
    auto random = random_lassos(Alphabet::ternary(), 8, 8, samples, p.seed, in_t);
    corpus.insert(corpus.end(), random.begin(), random.end());
    for (const auto& w : corpus)
        tally.compare(e_preimage_check(w, budget), a3_omega_member(w, budget), w.str());
}

void xi_low_witnesses(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 5);
    report.parameters["bound"] = bound;
    Tally tally(report);

    struct Witness
    {
        const char* name;
        FiniteAutomaton v;
        std::function<bool(const LassoWord&)> expected;
    };
    const std::vector<Witness> witnesses{
        {"xi1-pi", singleton_zero(), [](const LassoWord& w) { return w.str() == "(0)"; }},
        {"xi2-pi", zero_star_one(), [](const LassoWord& w) { return pinf_member(w); }},
        {"xi1-sigma", xi1_sigma_witness(), [](const LassoWord& w) { return w.str() != "1(0)"; }},
    };
    for (const auto& wit : witnesses) {
        const BuchiAutomaton b = omega_power_automaton(wit.v);
        for (const auto& w : corpus_lassos(Alphabet::binary(), bound, bound)) {
            const bool want = wit.expected(w);
            const bool got = lasso_accepts(b, w);
            const bool brute = omega_power_bruteforce(wit.v, w);
            tally.check(got == want && brute == want, std::string(wit.name) + ":" + w.str(),
                        want ? "member" : "non-member",
                        std::string(got ? "member" : "non-member") + (brute ? " (factor search: member)"
                                                                            : " (factor search: non-member)"));
        }
    }
}

struct GridPoint
{
    KnjAddress addr;
    LassoWord m;
};

std::vector<GridPoint> knj_grid(std::uint64_t jmax, std::uint64_t bound)
{
    const auto codes = corpus_lassos(Alphabet::binary(), bound, bound);
    std::vector<GridPoint> out;
    for (std::uint64_t j = 0; j <= jmax; ++j)
        for (std::uint64_t n = 0; n <= m_offset(j); ++n)
            for (const auto& m : codes)
                out.push_back({{n, j}, m});
    return out;
}

std::string knj_str(const KnjAddress& a, const LassoWord& m)
{
    return "K[" + std::to_string(a.n) + "," + std::to_string(a.j) + "]" + m.str();
}

// 2^N [m_0 2^{M_{j+1}} 3 2^{M_{j+1}}] ... straight from the definition.
std::vector<Letter> knj_letters(const KnjAddress& a, const LassoWord& m, std::size_t length)
{
    std::vector<Letter> out(std::min<std::uint64_t>(a.n, length), 2);
    for (std::size_t k = 0; out.size() < length; ++k) {
        const std::uint64_t run = m_offset(a.j + k + 1);
        out.push_back(m.at(k));
        for (std::uint64_t i = 0; i < run && out.size() < length; ++i)
            out.push_back(2);
        if (out.size() < length)
            out.push_back(3);
        for (std::uint64_t i = 0; i < run && out.size() < length; ++i)
            out.push_back(2);
    }
    out.resize(length);
    return out;
}

std::uint64_t code_position(const KnjAddress& a, std::size_t k)
{
    std::uint64_t pos = a.n;
    for (std::size_t i = 0; i < k; ++i)
        pos += 2 * m_offset(a.j + i + 1) + 2;
    return pos;
}

void knj_roundtrip(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 4);
    const std::uint64_t jmax = param_or(p.jmax, 2);
    constexpr std::size_t prefix_length = 2000;
    report.parameters["bound"] = bound;
    report.parameters["jmax"] = jmax;
    report.parameters["prefix_length"] = prefix_length;
    Tally tally(report);

    const auto grid = knj_grid(jmax, bound);
    for (const auto& [addr, m] : grid) {
        const std::string input = knj_str(addr, m);
        const SyntheticWord w = phi_inverse(m, addr);
        const LassoWord back = phi(w);
        tally.check(back == m, input + " φ∘φ⁻¹", m.str(), back.str());

        const FiniteWord pre = w.prefix(prefix_length);
        const FiniteWord want(knj_letters(addr, m, prefix_length), Alphabet::quaternary());
        tally.check(pre == want, input + " prefix", want.str().substr(0, 64), pre.str().substr(0, 64));

        KnjPrefixChecker checker(addr);
        for (Letter l : pre)
            checker.feed(l);
        tally.check(checker.ok() && checker.consumed() == prefix_length && knj_prefix_consistent(pre, addr),
                    input + " prefix consistent");

        std::vector<Letter> bad(pre.begin(), pre.end());
        bad.back() = bad.back() == 2 ? 3 : 2;
        tally.check(!knj_prefix_consistent(FiniteWord(bad, Alphabet::quaternary()), addr),
                    input + " altered prefix rejected");
    }

    // Distinct codes give words differing at the first differing code letter.
    std::map<std::pair<std::uint64_t, std::uint64_t>, std::vector<LassoWord>> by_address;
    for (const auto& [addr, m] : grid)
        by_address[{addr.n, addr.j}].push_back(m);
    for (const auto& [key, codes] : by_address) {
        const KnjAddress addr{key.first, key.second};
        std::vector<SyntheticWord> words;
        for (const auto& m : codes)
            words.push_back(phi_inverse(m, addr));
        bool ok = true;
        std::string where;
        for (std::size_t a = 0; a < codes.size() && ok; ++a)
            for (std::size_t b = a + 1; b < codes.size() && ok; ++b) {
                std::size_t k = 0;
                while (codes[a].at(k) == codes[b].at(k))
                    ++k;
                const std::uint64_t pos = code_position(addr, k);
                if (words[a].at(pos) == words[b].at(pos)) {
                    ok = false;
                    where = codes[a].str() + " vs " + codes[b].str();
                }
            }
        tally.check(ok, "K[" + std::to_string(addr.n) + "," + std::to_string(addr.j) + "] injective",
                    "distinct words", where);
    }
}

void key_equality(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 4);
    const std::uint64_t jmax = param_or(p.jmax, 2);
    const auto trees = trees_of(p);
    report.parameters["bound"] = bound;
    report.parameters["jmax"] = jmax;
    report.parameters["rtree"] = tree_names(trees);
    Tally tally(report);

    const auto grid = knj_grid(jmax, bound);
    for (const auto& [name, r] : trees)
        for (const auto& [addr, m] : grid) {
            const std::string input = name + ":" + knj_str(addr, m);
            try {
                const bool ts = ts_lasso_accepts(r, PairIndex{addr.n}, m);
                const bool pi = pi_omega_knj_member(KnjWord(addr.n, addr.j, m), r);
                tally.check(ts == pi, input, ts ? "accepted" : "rejected", pi ? "in π^ω" : "not in π^ω");
            } catch (const error& e) {
                tally.error(input, e.what());
            }
        }
}

void mu_knj_disjoint(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 4);
    const std::uint64_t jmax = param_or(p.jmax, 2);
    const std::uint64_t budget = param_or(p.budget, 10000);
    report.parameters["bound"] = bound;
    report.parameters["jmax"] = jmax;
    report.parameters["budget"] = budget;
    Tally tally(report);

    for (const auto& [addr, m] : knj_grid(jmax, bound)) {
        const std::string input = knj_str(addr, m);
        const KnjWord w(addr.n, addr.j, m);
        const Decision d = mu_omega_member(w, budget);
        tally.check(d == Decision::no, input, "no", std::string(to_string(d)));

        const auto profile = BlockProfile::of(w);
        bool clean = profile && !profile->last_violation();
        for (std::size_t end = 1; clean && end <= 3; ++end)
            clean = !mu_member(profile->prefix_blocks(end));
        tally.check(clean, input + " blocks", "no violation and no μ prefix", "violation or μ prefix");
    }
}

// 2^lead [m 2^P 3 2^R]...
RunWord blocks_word(std::uint64_t lead, const std::vector<Block>& blocks)
{
    RunWord w;
    w.twos(lead);
    for (const auto& b : blocks)
        w.letter(b.m).twos(b.p).letter(3).twos(b.r);
    return w;
}

std::vector<std::vector<Block>> block_lists(const std::vector<std::uint64_t>& ps, const std::vector<std::uint64_t>& rs)
{
    std::vector<Block> single;
    for (Letter m : {0, 1})
        for (auto pv : ps)
            for (auto rv : rs)
                single.push_back({m, pv, rv});
    std::vector<std::vector<Block>> out;
    for (const auto& b : single)
        out.push_back({b});
    for (const auto& b : single)
        for (const auto& c : single)
            out.push_back({b, c});
    return out;
}

void a_omega_decomposition(const SuiteParams& p, SuiteReport& report)
{
    const std::uint64_t bound = param_or(p.bound, 2);
    const std::uint64_t budget = param_or(p.budget, 10000);
    const auto trees = trees_of(p);
    report.parameters["bound"] = bound;
    report.parameters["budget"] = budget;
    report.parameters["rtree"] = tree_names(trees);
    report.inconclusive_threshold = 0.05;
    Tally tally(report);

    std::vector<SyntheticWord> corpus;
    for (const auto& [addr, m] : knj_grid(1, 3))
        corpus.emplace_back(KnjWord(addr.n, addr.j, m));

    const std::vector<std::string> tails{"(0)", "(1)", "1(0)", "(01)"};
    for (std::uint64_t lead : {0, 1})
        for (const auto& blocks : block_lists({0, 4}, {0, 1, 4}))
            for (std::uint64_t j : {0, 1})
                for (std::uint64_t n = 0; n <= std::min<std::uint64_t>(1, m_offset(j)); ++n)
                    for (const auto& code : tails)
                        corpus.emplace_back(KnjWord(blocks_word(lead, blocks).materialize(), n, j,
                                                    LassoWord::parse(code, Alphabet::binary())));

    for (const auto& w : corpus_lassos(Alphabet::quaternary(), bound, bound))
        corpus.emplace_back(w);
    for (std::uint64_t lead : {0, 1})
        for (const auto& blocks : block_lists({0, 4}, {0, 1, 4}))
            corpus.emplace_back(LassoWord(FiniteWord::repeat(2, lead, Alphabet::quaternary()),
                                          blocks_word(0, blocks).materialize()));

    for (const auto& [name, r] : trees)
        for (const auto& w : corpus) {
            const std::string input = name + ":" + w.str();
            try {
                tally.compare(direct_a_factorization(w, r, budget), a_omega_member(w, r, budget), input);
            } catch (const error& e) {
                tally.error(input, e.what());
            }
        }
}

using SuiteFn = void (*)(const SuiteParams&, SuiteReport&);

const std::vector<std::pair<std::string, SuiteFn>>& registry()
{
    static const std::vector<std::pair<std::string, SuiteFn>> suites{
        {"pair-enum-roundtrip", pair_enum_roundtrip},
        {"erase-homomorphism", erase_homomorphism},
        {"E-dual-characterization", e_dual_characterization},
        {"sigma2-main", sigma2_main},
        {"xi-low-witnesses", xi_low_witnesses},
        {"knj-roundtrip", knj_roundtrip},
        {"theorem2-key-equality", key_equality},
        {"mu-knj-disjoint", mu_knj_disjoint},
        {"a-omega-decomposition", a_omega_decomposition},
    };
    return suites;
}

} // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [name, fn] : registry())
            out.push_back(name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params)
{
    SuiteFn fn = nullptr;
    for (const auto& [n, f] : registry())
        if (n == name)
            fn = f;
    if (!fn)
        throw invalid_parameter("unknown suite '" + name + "'");
    if (params.bound && *params.bound > 1000000000)
        throw invalid_parameter("bound too large");
    if (params.jmax && *params.jmax > 8)
        throw invalid_parameter("jmax must be at most 8");

    SuiteReport report;
    report.suite = name;
    const auto start = std::chrono::steady_clock::now();
    fn(params, report);
    if (params.timing)
        report.runtime_ms = static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
    return report;
}

nlohmann::ordered_json report_to_json(const SuiteReport& report)
{
    nlohmann::ordered_json j;
    j["format"] = kReportFormat;
    j["tool_version"] = kToolVersion;
    j["suite"] = report.suite;
    j["parameters"] = report.parameters;
    j["cases_total"] = report.cases_total;
    j["cases_failed"] = report.cases_failed;
    j["cases_inconclusive"] = report.cases_inconclusive;
    j["verdict"] = std::string(to_string(report.verdict()));
    auto ces = nlohmann::ordered_json::array();
    for (const auto& c : report.counterexamples)
        ces.push_back({{"input", c.input}, {"expected", c.expected}, {"got", c.got}});
    j["counterexamples"] = ces;
    if (report.runtime_ms)
        j["runtime_ms"] = *report.runtime_ms;
    return j;
}

} // namespace omegapow
