#pragma once

// Brute-force deciders used to cross-check the library's deciders. They share
// no search code with the routines they check.

#include <cstdint>

#include "omegapow/construction.hpp"
#include "omegapow/decision.hpp"
#include "omegapow/regular.hpp"

namespace omegapow
{

/// w in V^ω by factorization: from each cut phase, every non-empty factor of
/// length <= |Q|·(|u|+|v|) is tested with subset simulation. Longer factors
/// repeat a (state, phase) pair and can be shortened to the same end phase.
bool omega_power_bruteforce(const FiniteAutomaton& v, const LassoWord& w);

/// A^ω by searching factorizations into words tested with a_member.
/// Lassos: cuts are phases, factors at most min(budget, 2|u|+6|v|+8) letters.
/// K-carried words: cuts (block, 2s carried into the next factor) are explored
/// explicitly up to the block after the last violation; from there on only
/// π factors fit, and the remainder is handed to pi_omega_knj_member.
Decision direct_a_factorization(const SyntheticWord& w, const RTree& r, std::uint64_t budget);

} // namespace omegapow
