#pragma once

// The countable transition system built from a prefix-closed tree
// R ⊆ (2x2)^{<ω}: states are pair indices, n →^m p are the transitions and
// Q_f = { (t,s) in R : t ends in 1 } is the Büchi condition.
//
// R is given by a deterministic automaton over the pair letters
// (β-bit, α-bit); a pair word is in R iff its run stays in live states.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "omegapow/pairs.hpp"
#include "omegapow/regular.hpp"

namespace omegapow
{

class RTree
{
public:
    /// delta[s][2*β + α] is the successor of s on the pair letter (β, α).
    RTree(std::vector<std::string> names, State initial, std::vector<bool> live,
          std::vector<std::array<State, 4>> delta);

    /// One live state looping on every letter: R is everything.
    static RTree full();
    /// R = { (t,s) : t = s }.
    static RTree diagonal();

    std::size_t state_count() const noexcept { return delta_.size(); }
    State initial() const noexcept { return initial_; }
    bool live(State s) const { return live_.at(s); }
    State step(State s, Letter beta, Letter alpha) const { return delta_.at(s).at(2 * beta + alpha); }
    const std::string& name(State s) const { return names_.at(s); }
    const std::vector<std::string>& names() const noexcept { return names_; }

    /// The state reached on zip(q⁰, q¹).
    State run(const QPair& q) const;
    State run(PairIndex n) const;

private:
    std::vector<std::string> names_;
    State initial_;
    std::vector<bool> live_;
    std::vector<std::array<State, 4>> delta_;
};

bool r_contains(const RTree& r, const QPair& p);
bool qf_member(const RTree& r, PairIndex n);

/// Büchi automaton over {0,1} accepting E_start: the α read from q_start
/// along →-transitions with infinitely many Q_f visits. A state s encodes the
/// R-automaton state s/2 and the last guessed β-bit s%2; it is accepting iff
/// that bit is 1 and the R-state is live.
BuchiAutomaton transition_system_automaton(const RTree& r, PairIndex start);

bool ts_lasso_accepts(const RTree& r, PairIndex start, const LassoWord& alpha);
/// The accepting run, if any, for display and replay.
std::optional<LassoRun> ts_witness(const RTree& r, PairIndex start, const LassoWord& alpha);

/// α in B iff accepted from q_0.
bool derived_b_member(const RTree& r, const LassoWord& alpha);

} // namespace omegapow
