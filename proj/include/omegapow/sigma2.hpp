#pragma once

// The three-letter Σ⁰₂ witness: the tree T of words whose prefixes never
// hold more 2s than 1s, the erasing map s ↦ s↪ (each 2 turns the last
// surviving 1 into 0), the languages E and A, and A^ω = e⁻¹(B^ω) where
// B^ω = 2^ω \ {10^ω}.

#include <cstdint>
#include <optional>
#include <vector>

#include "omegapow/decision.hpp"
#include "omegapow/word.hpp"

namespace omegapow
{

std::uint64_t count_letter(const FiniteWord& s, Letter j);

bool t_member(const FiniteWord& w);
bool t_member(const LassoWord& w);

/// Incremental s ↦ s↪.
class EraseState
{
public:
    /// Throws not_in_t on a 2 with no surviving 1.
    void feed(Letter l);

    const std::vector<Letter>& emitted() const noexcept { return emitted_; }
    /// Positions in emitted() holding a 1 that a later 2 may still erase.
    const std::vector<std::size_t>& live_ones() const noexcept { return live_ones_; }
    FiniteWord word() const { return FiniteWord(emitted_, Alphabet::binary()); }

private:
    std::vector<Letter> emitted_;
    std::vector<std::size_t> live_ones_;
};

FiniteWord erase_fin(const FiniteWord& s);

/// α↪ for α in T. A 1 at position x survives iff the balance n₁ - n₂ counted
/// from x never returns to 0; for a lasso that is settled within
/// max(0, |u|-x-1) + |v| further letters, so the limit is again a lasso.
/// Absent only when the budget is below |u| + 2|v|.
std::optional<LassoWord> erase_lasso(const LassoWord& a, std::uint64_t budget);

/// E by its definition through ↪.
bool e_def_member(const FiniteWord& s);
/// E as the one-counter language: starts with 1, ends with 2, balanced, and
/// strictly positive on every proper non-empty prefix.
bool e_counter_member(const FiniteWord& s);

/// A = {0} ∪ E ∪ { (c_0 1) ... (c_k 1) : c_j in ({0} ∪ E)*, k > 0 or c_0 ≠ ∅ }.
bool a3_member(const FiniteWord& s);

/// B^ω = 2^ω \ {10^ω}.
bool b2_omega_member(const LassoWord& w);

/// A^ω by factorization search, without going through ↪. Factors are read as
/// tokens: the letter 0, an E word (unique once its first 1 is fixed), and a
/// separating 1. Cuts are (phase, position in the factor grammar); the lasso
/// is accepted iff a reachable cycle closes a factor.
Decision a3_omega_member(const LassoWord& a, std::uint64_t budget);

/// b2_omega_member(erase_lasso(a)).
Decision e_preimage_check(const LassoWord& a, std::uint64_t budget);

} // namespace omegapow
