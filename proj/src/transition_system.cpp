#include "omegapow/transition_system.hpp"

#include <deque>

namespace omegapow
{

RTree::RTree(std::vector<std::string> names, State initial, std::vector<bool> live,
             std::vector<std::array<State, 4>> delta)
    : names_(std::move(names)), initial_(initial), live_(std::move(live)), delta_(std::move(delta))
{
    const std::size_t n = delta_.size();
    if (n == 0)
        throw invalid_rtree("tree automaton has no states");
    if (names_.size() != n || live_.size() != n)
        throw invalid_rtree("names, live flags and transitions disagree on the state count");
    if (initial_ >= n)
        throw invalid_rtree("initial state out of range");
    if (!live_[initial_])
        throw invalid_rtree("initial state must be live: the empty pair word is in R");
    for (State s = 0; s < n; ++s)
        for (State t : delta_[s]) {
            if (t >= n)
                throw invalid_rtree("transition from " + names_[s] + " leaves the state set");
            if (!live_[s] && live_[t])
                throw invalid_rtree("non-live state " + names_[s] + " reaches live state " + names_[t]
                                    + ": R would not be closed under initial segments");
        }
}

RTree RTree::full()
{
    return RTree({"all"}, 0, {true}, {{0, 0, 0, 0}});
}

RTree RTree::diagonal()
{
    // "00" and "11" keep the components equal.
    return RTree({"diag", "dead"}, 0, {true, false}, {{0, 1, 1, 0}, {1, 1, 1, 1}});
}

State RTree::run(const QPair& q) const
{
    State s = initial_;
    for (std::size_t i = 0; i < q.length(); ++i)
        s = step(s, q.beta[i], q.alpha[i]);
    return s;
}

State RTree::run(PairIndex n) const
{
    const PackedPair p = unpack(n);
    State s = initial_;
    for (unsigned i = 0; i < p.length; ++i)
        s = step(s, p.beta_at(i), p.alpha_at(i));
    return s;
}

bool r_contains(const RTree& r, const QPair& p)
{
    return r.live(r.run(p));
}

bool qf_member(const RTree& r, PairIndex n)
{
    const PackedPair p = unpack(n);
    if (p.length == 0 || !p.beta_at(p.length - 1))
        return false;
    return r.live(r.run(n));
}

BuchiAutomaton transition_system_automaton(const RTree& r, PairIndex start)
{
    BuchiAutomaton b(Alphabet::binary(), 2 * r.state_count(), 2 * r.run(start));
    for (State d = 0; d < r.state_count(); ++d) {
        for (Letter last = 0; last < 2; ++last) {
            const State from = 2 * d + last;
            if (last == 1 && r.live(d))
                b.set_accepting(from);
            for (Letter a = 0; a < 2; ++a)
                for (Letter beta = 0; beta < 2; ++beta)
                    b.add_transition(from, a, 2 * r.step(d, beta, a) + beta);
        }
    }
    std::vector<std::string> names;
    for (State d = 0; d < r.state_count(); ++d) {
        names.push_back(r.name(d) + "/0");
        names.push_back(r.name(d) + "/1");
    }
    b.set_names(std::move(names));
    return b;
}

std::optional<LassoRun> ts_witness(const RTree& r, PairIndex start, const LassoWord& alpha)
{
    return accepting_run(transition_system_automaton(r, start), alpha);
}

bool ts_lasso_accepts(const RTree& r, PairIndex start, const LassoWord& alpha)
{
    return lasso_accepts(transition_system_automaton(r, start), alpha);
}

bool derived_b_member(const RTree& r, const LassoWord& alpha)
{
    return ts_lasso_accepts(r, PairIndex{0}, alpha);
}

} // namespace omegapow
