#pragma once

// Regular finitary languages, their ω-powers, and membership of lasso words
// in Büchi-recognized ω-languages.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "omegapow/word.hpp"

namespace omegapow
{

using State = std::size_t;

namespace detail
{

class AutomatonBase
{
public:
    Alphabet alphabet() const noexcept { return alphabet_; }
    std::size_t state_count() const noexcept { return delta_.size(); }
    State initial() const noexcept { return initial_; }
    bool accepting(State s) const { return accepting_.at(s); }
    const std::vector<State>& next(State s, Letter a) const { return delta_.at(s).at(a); }

    void add_transition(State from, Letter a, State to);
    void set_accepting(State s, bool value = true) { accepting_.at(s) = value; }

    /// Optional display names, one per state.
    const std::vector<std::string>& names() const noexcept { return names_; }
    void set_names(std::vector<std::string> names);

protected:
    AutomatonBase(Alphabet alphabet, std::size_t states, State initial);

private:
    Alphabet alphabet_;
    State initial_;
    std::vector<bool> accepting_;
    std::vector<std::vector<std::vector<State>>> delta_;
    std::vector<std::string> names_;
};

} // namespace detail

/// Nondeterministic recognizer of a finitary language.
class FiniteAutomaton : public detail::AutomatonBase
{
public:
    FiniteAutomaton(Alphabet alphabet, std::size_t states, State initial)
        : AutomatonBase(alphabet, states, initial)
    {}

    bool accepts(const FiniteWord& w) const;
};

/// Same shape as FiniteAutomaton; `accepting` is read as a Büchi condition.
class BuchiAutomaton : public detail::AutomatonBase
{
public:
    BuchiAutomaton(Alphabet alphabet, std::size_t states, State initial)
        : AutomatonBase(alphabet, states, initial)
    {}
};

/// An accepting run on a lasso word, as a finite stem plus a loop.
/// `states[i]` is the state before reading letter i; after reading letter
/// states.size()-1 the run is back in states[loop_start] at the same phase.
struct LassoRun
{
    std::vector<State> states;
    std::size_t loop_start = 0;
};

/// Büchi automaton for { u_1 u_2 ... : u_i in V \ {ε} }.
BuchiAutomaton omega_power_automaton(const FiniteAutomaton& v);

bool lasso_accepts(const BuchiAutomaton& b, const LassoWord& w);
std::optional<LassoRun> accepting_run(const BuchiAutomaton& b, const LassoWord& w);
/// Replays `run` against `b` and `w`.
bool check_run(const BuchiAutomaton& b, const LassoWord& w, const LassoRun& run);

/// {s in 2^{<ω} : 0 ≺ s or 10^k1 ≺ s for some k}; its ω-power is 2^ω \ {10^ω}.
FiniteAutomaton xi1_sigma_witness();
/// {0}; its ω-power is {0^ω}.
FiniteAutomaton singleton_zero();
/// {0^k 1 : k in ω}; its ω-power is P_∞.
FiniteAutomaton zero_star_one();
/// The empty language.
FiniteAutomaton empty_language(Alphabet alphabet);

/// P_∞ membership: infinitely many 1s.
bool pinf_member(const LassoWord& w);

/// 0^{b(0)} 1 0^{b(1)} 1 ... 0^{b(k)} 1.
FiniteWord baire_embed_prefix(std::span<const std::uint64_t> b);

} // namespace omegapow
