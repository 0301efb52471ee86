#include "omegapow/oracles.hpp"

#include <deque>
#include <map>
#include <set>

namespace omegapow
{

namespace
{

// Cycle reachable from `root` in an explicit graph over small integers.
bool cycle_from(std::size_t root, const std::vector<std::vector<std::size_t>>& adj)
{
    std::vector<int> color(adj.size(), 0);
    std::vector<std::pair<std::size_t, std::size_t>> stack{{root, 0}};
    color[root] = 1;
    while (!stack.empty()) {
        auto& [node, next] = stack.back();
        if (next == adj[node].size()) {
            color[node] = 2;
            stack.pop_back();
            continue;
        }
        const std::size_t to = adj[node][next++];
        if (color[to] == 1)
            return true;
        if (color[to] == 0) {
            color[to] = 1;
            stack.push_back({to, 0});
        }
    }
    return false;
}

template <class IsFactor>
std::vector<std::vector<std::size_t>> factor_graph(const LassoWord& w, std::uint64_t max_len, IsFactor is_factor)
{
    std::vector<std::vector<std::size_t>> adj(w.period_span());
    for (std::size_t x = 0; x < w.period_span(); ++x) {
        std::set<std::size_t> ends;
        is_factor(x, max_len, [&](std::size_t len) { ends.insert(w.phase(x + len)); });
        adj[x].assign(ends.begin(), ends.end());
    }
    return adj;
}

Decision lasso_factorization(const LassoWord& lasso, const RTree& r, std::uint64_t budget)
{
    const LassoWord w = lasso.widen(Alphabet::quaternary());
    const std::uint64_t horizon =
        std::min<std::uint64_t>(budget, 2 * w.spoke().size() + 6 * w.cycle().size() + 8);
    const auto adj = factor_graph(w, horizon, [&](std::size_t x, std::uint64_t max_len, auto emit) {
        RunWord factor;
        for (std::uint64_t len = 1; len <= max_len; ++len) {
            factor.letter(w.at(x + len - 1));
            if (a_member(factor, r))
                emit(len);
        }
    });
    if (cycle_from(0, adj))
        return Decision::yes;
    // Every A word has the block form with P-runs in {M_j}, and so does every
    // concatenation of them.
    return p_shaped(w) ? Decision::inconclusive : Decision::no;
}

Decision knj_factorization(const KnjWord& w, const RTree& r)
{
    const auto profile = BlockProfile::of(w);
    if (!profile)
        return Decision::no;
    const auto v = profile->last_violation();
    // From block `tail` on there is no violation: P_i = R_i and the P_i are
    // consecutive offsets, so no μ word starts there.
    const std::size_t tail = v ? *v + 1 : 0;

    const auto hand_off = [&](std::size_t b, std::uint64_t n) {
        const auto k = m_index_of(profile->block(b).p);
        if (!k || *k == 0 || n > m_offset(*k - 1))
            return false;
        return pi_omega_knj_member(KnjWord(n, *k - 1, profile->code_from(b)), r);
    };

    std::set<std::pair<std::size_t, std::uint64_t>> seen{{0, profile->lead()}};
    std::deque<std::pair<std::size_t, std::uint64_t>> queue{{0, profile->lead()}};
    while (!queue.empty()) {
        const auto [b, n] = queue.front();
        queue.pop_front();
        if (b >= tail) {
            if (hand_off(b, n))
                return Decision::yes;
            continue;
        }
        // A factor starting at or before the last violation ends at most two
        // blocks after it (μ words), π words stop at the violation's next block.
        for (std::size_t end = b + 1; end <= *v + 2; ++end) {
            const std::uint64_t last_r = profile->block(end - 1).r;
            for (std::uint64_t carry = 0; carry <= last_r; ++carry) {
                RunWord factor;
                factor.twos(n);
                for (std::size_t i = b; i < end; ++i) {
                    const Block blk = profile->block(i);
                    factor.letter(blk.m).twos(blk.p).letter(3).twos(i + 1 == end ? blk.r - carry : blk.r);
                }
                if (a_member(factor, r) && seen.insert({end, carry}).second)
                    queue.push_back({end, carry});
            }
        }
    }
    return Decision::no;
}

} // namespace

bool omega_power_bruteforce(const FiniteAutomaton& v, const LassoWord& w)
{
    if (v.alphabet() != w.alphabet())
        throw alphabet_mismatch("lasso and automaton alphabets differ");
    const std::uint64_t bound = v.state_count() * w.period_span();
    const auto adj = factor_graph(w, bound, [&](std::size_t x, std::uint64_t max_len, auto emit) {
        std::vector<bool> current(v.state_count(), false), next(v.state_count());
        current[v.initial()] = true;
        for (std::uint64_t len = 1; len <= max_len; ++len) {
            std::fill(next.begin(), next.end(), false);
            for (State s = 0; s < v.state_count(); ++s)
                if (current[s])
                    for (State t : v.next(s, w.at(x + len - 1)))
                        next[t] = true;
            current.swap(next);
            bool accepted = false;
            for (State s = 0; s < v.state_count(); ++s)
                accepted = accepted || (current[s] && v.accepting(s));
            if (accepted)
                emit(len);
        }
    });
    return cycle_from(0, adj);
}

Decision direct_a_factorization(const SyntheticWord& w, const RTree& r, std::uint64_t budget)
{
    if (w.is_lasso())
        return lasso_factorization(w.lasso(), r, budget);
    return knj_factorization(w.knj(), r);
}

} // namespace omegapow
