#include "omegapow/regular.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace omegapow
{

namespace detail
{

AutomatonBase::AutomatonBase(Alphabet alphabet, std::size_t states, State initial)
    : alphabet_(alphabet), initial_(initial), accepting_(states, false),
      delta_(states, std::vector<std::vector<State>>(alphabet.size()))
{
    if (states == 0 || initial >= states)
        throw invalid_automaton("initial state out of range");
}

void AutomatonBase::add_transition(State from, Letter a, State to)
{
    if (from >= state_count() || to >= state_count())
        throw invalid_automaton("transition references an undeclared state");
    if (!alphabet_.contains(a))
        throw invalid_letter("transition letter outside alphabet");
    auto& targets = delta_[from][a];
    if (std::find(targets.begin(), targets.end(), to) == targets.end())
        targets.push_back(to);
}

void AutomatonBase::set_names(std::vector<std::string> names)
{
    if (names.size() != state_count())
        throw invalid_automaton("one name per state required");
    names_ = std::move(names);
}

} // namespace detail

bool FiniteAutomaton::accepts(const FiniteWord& w) const
{
    if (w.alphabet() != alphabet())
        throw alphabet_mismatch("word and automaton alphabets differ");
    std::vector<bool> current(state_count(), false), next_set(state_count());
    current[initial()] = true;
    for (Letter a : w) {
        std::fill(next_set.begin(), next_set.end(), false);
        for (State s = 0; s < state_count(); ++s)
            if (current[s])
                for (State t : next(s, a))
                    next_set[t] = true;
        current.swap(next_set);
    }
    for (State s = 0; s < state_count(); ++s)
        if (current[s] && accepting(s))
            return true;
    return false;
}

BuchiAutomaton omega_power_automaton(const FiniteAutomaton& v)
{
    // States of V plus a fresh boundary state f (initial, accepting) that
    // behaves like V's initial state and is entered whenever a letter
    // completes a non-empty factor.
    const std::size_t n = v.state_count();
    const State boundary = n;
    BuchiAutomaton b(v.alphabet(), n + 1, boundary);
    b.set_accepting(boundary);
    for (State s = 0; s <= n; ++s) {
        const State from_v = s == boundary ? v.initial() : s;
        for (Letter a = 0; a < v.alphabet().size(); ++a) {
            for (State t : v.next(from_v, a)) {
                b.add_transition(s, a, t);
                if (v.accepting(t))
                    b.add_transition(s, a, boundary);
            }
        }
    }
    return b;
}

namespace
{

struct ProductNode
{
    State state;
    std::size_t phase;

    auto operator<=>(const ProductNode&) const = default;
};

class LassoProduct
{
public:
    LassoProduct(const BuchiAutomaton& b, const LassoWord& w) : b_(b), w_(w)
    {
        if (b.alphabet() != w.alphabet())
            throw alphabet_mismatch("lasso and automaton alphabets differ");
    }

    std::size_t index(const ProductNode& n) const { return n.state * w_.period_span() + n.phase; }
    std::size_t size() const { return b_.state_count() * w_.period_span(); }

    std::vector<ProductNode> successors(const ProductNode& n) const
    {
        std::vector<ProductNode> out;
        const std::size_t next_phase = w_.phase(n.phase + 1);
        for (State t : b_.next(n.state, w_.at(n.phase)))
            out.push_back({t, next_phase});
        return out;
    }

    /// Shortest path from `from` to `to` (at least one edge when `nonempty`).
    std::optional<std::vector<ProductNode>> path(ProductNode from, ProductNode to, bool nonempty) const
    {
        std::vector<std::optional<ProductNode>> parent(size());
        std::vector<bool> seen(size(), false);
        std::deque<ProductNode> queue;
        if (!nonempty && from == to)
            return std::vector<ProductNode>{from};
        queue.push_back(from);
        if (!nonempty)
            seen[index(from)] = true;
        bool found = false;
        while (!queue.empty() && !found) {
            const ProductNode cur = queue.front();
            queue.pop_front();
            for (const ProductNode& nxt : successors(cur)) {
                if (seen[index(nxt)])
                    continue;
                seen[index(nxt)] = true;
                parent[index(nxt)] = cur;
                if (nxt == to) {
                    found = true;
                    break;
                }
                queue.push_back(nxt);
            }
        }
        if (!found)
            return std::nullopt;
        std::vector<ProductNode> out{to};
        ProductNode cur = to;
        // Walk back until we hit `from` as the first node of the path.
        while (true) {
            const ProductNode p = *parent[index(cur)];
            out.push_back(p);
            if (p == from)
                break;
            cur = p;
        }
        std::reverse(out.begin(), out.end());
        return out;
    }

    std::vector<ProductNode> reachable(ProductNode start) const
    {
        std::vector<bool> seen(size(), false);
        std::vector<ProductNode> order{start}, stack{start};
        seen[index(start)] = true;
        while (!stack.empty()) {
            const ProductNode cur = stack.back();
            stack.pop_back();
            for (const ProductNode& nxt : successors(cur))
                if (!seen[index(nxt)]) {
                    seen[index(nxt)] = true;
                    order.push_back(nxt);
                    stack.push_back(nxt);
                }
        }
        return order;
    }

private:
    const BuchiAutomaton& b_;
    const LassoWord& w_;
};

} // namespace

std::optional<LassoRun> accepting_run(const BuchiAutomaton& b, const LassoWord& w)
{
    const LassoProduct product(b, w);
    const ProductNode start{b.initial(), 0};
    for (const ProductNode& x : product.reachable(start)) {
        if (!b.accepting(x.state))
            continue;
        auto loop = product.path(x, x, true);
        if (!loop)
            continue;
        auto stem = product.path(start, x, false);
        LassoRun run;
        for (std::size_t i = 0; i + 1 < stem->size(); ++i)
            run.states.push_back((*stem)[i].state);
        run.loop_start = run.states.size();
        for (std::size_t i = 0; i + 1 < loop->size(); ++i)
            run.states.push_back((*loop)[i].state);
        return run;
    }
    return std::nullopt;
}

bool lasso_accepts(const BuchiAutomaton& b, const LassoWord& w)
{
    return accepting_run(b, w).has_value();
}

bool check_run(const BuchiAutomaton& b, const LassoWord& w, const LassoRun& run)
{
    const std::size_t len = run.states.size();
    if (len == 0 || run.loop_start >= len || run.states[0] != b.initial())
        return false;
    if (w.phase(len) != w.phase(run.loop_start))
        return false;
    for (std::size_t i = 0; i < len; ++i) {
        const State target = i + 1 < len ? run.states[i + 1] : run.states[run.loop_start];
        const auto& succ = b.next(run.states[i], w.at(i));
        if (std::find(succ.begin(), succ.end(), target) == succ.end())
            return false;
    }
    for (std::size_t i = run.loop_start; i < len; ++i)
        if (b.accepting(run.states[i]))
            return true;
    return false;
}

FiniteAutomaton xi1_sigma_witness()
{
    // start -0-> accept, start -1-> one, one -0-> one, one -1-> accept.
    enum : State { start, one, accept };
    FiniteAutomaton a(Alphabet::binary(), 3, start);
    a.add_transition(start, 0, accept);
    a.add_transition(start, 1, one);
    a.add_transition(one, 0, one);
    a.add_transition(one, 1, accept);
    a.add_transition(accept, 0, accept);
    a.add_transition(accept, 1, accept);
    a.set_accepting(accept);
    a.set_names({"start", "one", "accept"});
    return a;
}

FiniteAutomaton singleton_zero()
{
    FiniteAutomaton a(Alphabet::binary(), 2, 0);
    a.add_transition(0, 0, 1);
    a.set_accepting(1);
    a.set_names({"start", "done"});
    return a;
}

FiniteAutomaton zero_star_one()
{
    FiniteAutomaton a(Alphabet::binary(), 2, 0);
    a.add_transition(0, 0, 0);
    a.add_transition(0, 1, 1);
    a.set_accepting(1);
    a.set_names({"zeros", "done"});
    return a;
}

FiniteAutomaton empty_language(Alphabet alphabet)
{
    return FiniteAutomaton(alphabet, 1, 0);
}

bool pinf_member(const LassoWord& w)
{
    if (w.alphabet() != Alphabet::binary())
        throw alphabet_mismatch("P_∞ is a set of binary ω-words");
    return std::find(w.cycle().begin(), w.cycle().end(), Letter{1}) != w.cycle().end();
}

FiniteWord baire_embed_prefix(std::span<const std::uint64_t> b)
{
    std::vector<Letter> letters;
    for (std::uint64_t k : b) {
        letters.insert(letters.end(), k, Letter{0});
        letters.push_back(1);
    }
    return FiniteWord(std::move(letters), Alphabet::binary());
}

} // namespace omegapow
