#pragma once

// The four-letter languages π, μ⁰, μ¹, μ and A = μ ∪ π, the set P of block
// shaped ω-words, the map F and the decomposition of A^ω.
//
// Every word in A has the shape 2^N [m_0 2^{P_0} 3 2^{R_0}] ... [m_l 2^{P_l} 3 2^{R_l}]
// with m_i in {0,1}. Runs of 2 may be astronomically long (M_j grows like
// 4^j), so the deciders work on run-length encoded words.

#include <cstdint>
#include <optional>
#include <vector>

#include "omegapow/decision.hpp"
#include "omegapow/pairs.hpp"
#include "omegapow/transition_system.hpp"
#include "omegapow/word.hpp"

namespace omegapow
{

/// A four-letter word stored as 2^lead d_0 2^{r_0} d_1 2^{r_1} ... with d_i != 2.
struct RunWord
{
    struct Segment
    {
        Letter delimiter;
        std::uint64_t run;

        bool operator==(const Segment&) const = default;
    };

    std::uint64_t lead = 0;
    std::vector<Segment> segments;

    static RunWord of(const FiniteWord& s);

    RunWord& twos(std::uint64_t n);
    RunWord& letter(Letter d);
    RunWord& append(const RunWord& w);

    std::uint64_t length() const;
    FiniteWord materialize() const;

    bool operator==(const RunWord&) const = default;
};

/// One block m 2^P 3 2^R.
struct Block
{
    Letter m;
    std::uint64_t p;
    std::uint64_t r;

    bool operator==(const Block&) const = default;
};

/// 2^lead followed by blocks; absent if the word is not of that form.
struct Shape
{
    std::uint64_t lead = 0;
    std::vector<Block> blocks;
};

std::optional<Shape> block_shape(const RunWord& w);
/// The common form of A-words: at least one block and every P_i some M_j.
bool common_shape(const RunWord& w);

struct PiBlock
{
    PairIndex n;
    Letter m;
    PairIndex p;
    std::uint64_t r;

    bool operator==(const PiBlock&) const = default;
};

struct PiDecomposition
{
    std::uint64_t j = 0;
    std::vector<PiBlock> blocks;

    bool operator==(const PiDecomposition&) const = default;
};

/// The decomposition witnessing s in π, if any. Decompositions are unique:
/// the runs fix j and every p_i, and p_l pins the whole state chain.
std::optional<PiDecomposition> pi_member(const RunWord& s, const RTree& r);
std::optional<PiDecomposition> pi_member(const FiniteWord& s, const RTree& r);
/// Checks every defining clause of π against `d` and `s`.
bool check_pi_decomposition(const RunWord& s, const RTree& r, const PiDecomposition& d);

bool mu0_member(const RunWord& s);
bool mu1_member(const RunWord& s);
bool mu_member(const RunWord& s);
bool mu0_member(const FiniteWord& s);
bool mu1_member(const FiniteWord& s);
bool mu_member(const FiniteWord& s);

bool a_member(const RunWord& s, const RTree& r);
bool a_member(const FiniteWord& s, const RTree& r);

/// Membership in π^ω of a word of K_{N,j} (no head), by searching
/// factorizations of the block string itself.
bool pi_omega_knj_member(const KnjWord& w, const RTree& r);

/// Whether a lasso over four letters lies in P.
bool p_shaped(const LassoWord& w);

/// μ^ω. Lassos: search for a cycle of μ-factor cuts whose factors are at most
/// min(budget, 2|u|+6|v|+8) letters long. K-carried words have finitely many
/// block violations, hence never lie in μ^ω.
Decision mu_omega_member(const SyntheticWord& w, std::uint64_t budget);

/// Blocks of a headed K_{N,j} word: the explicit blocks coming from the head,
/// then the K blocks. Blocks past the head never violate.
class BlockProfile
{
public:
    /// Absent if head·2^N·(K blocks) is not in P.
    static std::optional<BlockProfile> of(const KnjWord& w);

    std::uint64_t lead() const noexcept { return lead_; }
    std::size_t explicit_blocks() const noexcept { return explicit_.size(); }
    Block block(std::size_t i) const;

    /// P_i != R_i, or P_i = M_k and P_{i+1} != M_{k+1}.
    bool violation(std::size_t i) const;
    std::optional<std::size_t> last_violation() const;

    /// The code m_i m_{i+1} ...
    LassoWord code_from(std::size_t i) const;

    /// 2^lead followed by blocks [0, end).
    RunWord prefix_blocks(std::size_t end) const;

private:
    BlockProfile(const KnjWord& w) : word_(w) {}

    KnjWord word_;
    std::uint64_t lead_ = 0;
    std::vector<Block> explicit_;
};

struct Triple
{
    RunWord t; // empty, or a word of μ ending in 3
    std::uint64_t s = 0;
    std::uint64_t j = 0;

    bool empty_t() const noexcept { return t.lead == 0 && t.segments.empty(); }
    bool operator==(const Triple&) const = default;
};

/// S <= M_j if t = ∅; t in μ ends in 3; t 2^S m 2^{M_{j+1}} 3 ∉ μ for m in {0,1}.
/// μ does not look at m or at the final run, so the tree plays no part.
bool is_suitable(const Triple& triple);

/// F on P \ μ^ω. Throws not_in_p, in_mu_omega, or f_undefined when no
/// maximal violation exists although γ is outside K_{N,j₀-1}.
Triple f_map(const SyntheticWord& w, std::uint64_t budget);

/// A^ω via μ^ω ∪ ⋃ A_{t,S,j,N}.
Decision a_omega_member(const SyntheticWord& w, const RTree& r, std::uint64_t budget);

} // namespace omegapow
