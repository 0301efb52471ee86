#include "omegapow/construction.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace omegapow
{

// ------------------------------------------------------------------ RunWord

RunWord RunWord::of(const FiniteWord& s)
{
    RunWord w;
    for (Letter l : s)
        w.letter(l);
    return w;
}

RunWord& RunWord::twos(std::uint64_t n)
{
    if (segments.empty())
        lead += n;
    else
        segments.back().run += n;
    return *this;
}

RunWord& RunWord::letter(Letter d)
{
    if (d == 2)
        return twos(1);
    segments.push_back({d, 0});
    return *this;
}

RunWord& RunWord::append(const RunWord& w)
{
    twos(w.lead);
    segments.insert(segments.end(), w.segments.begin(), w.segments.end());
    return *this;
}

std::uint64_t RunWord::length() const
{
    std::uint64_t n = lead;
    for (const Segment& s : segments)
        n += 1 + s.run;
    return n;
}

FiniteWord RunWord::materialize() const
{
    std::vector<Letter> letters(lead, Letter{2});
    for (const Segment& s : segments) {
        letters.push_back(s.delimiter);
        letters.insert(letters.end(), s.run, Letter{2});
    }
    return FiniteWord(std::move(letters), Alphabet::quaternary());
}

// -------------------------------------------------------------------- shape

std::optional<Shape> block_shape(const RunWord& w)
{
    if (w.segments.size() % 2 != 0)
        return std::nullopt;
    Shape shape{w.lead, {}};
    for (std::size_t i = 0; i < w.segments.size(); i += 2) {
        const auto& head = w.segments[i];
        const auto& mark = w.segments[i + 1];
        if (head.delimiter > 1 || mark.delimiter != 3)
            return std::nullopt;
        shape.blocks.push_back({head.delimiter, head.run, mark.run});
    }
    return shape;
}

namespace
{

bool all_p_in_m(const Shape& shape)
{
    return std::all_of(shape.blocks.begin(), shape.blocks.end(),
                       [](const Block& b) { return m_index_of(b.p).has_value(); });
}

std::optional<Shape> mu_shape(const RunWord& s)
{
    auto shape = block_shape(s);
    if (!shape || shape->blocks.size() < 2 || !all_p_in_m(*shape))
        return std::nullopt;
    return shape;
}

// Is P_{i+1} the M following P_i? Both are known to be in the M set.
bool m_successor(std::uint64_t p, std::uint64_t next)
{
    return *m_index_of(next) == *m_index_of(p) + 1;
}

} // namespace

bool common_shape(const RunWord& w)
{
    auto shape = block_shape(w);
    return shape && !shape->blocks.empty() && all_p_in_m(*shape);
}

// ----------------------------------------------------------------------- π

std::optional<PiDecomposition> pi_member(const RunWord& s, const RTree& r)
{
    const auto shape = block_shape(s);
    if (!shape || shape->blocks.empty())
        return std::nullopt;
    const auto& blocks = shape->blocks;
    const std::size_t l = blocks.size() - 1;

    // P_0 = p_0 + r_0 = M_{j+1} fixes j.
    const auto k0 = m_index_of(blocks[0].p);
    if (!k0 || *k0 == 0)
        return std::nullopt;
    const std::uint64_t j = *k0 - 1;
    for (std::size_t i = 0; i <= l; ++i) {
        const auto k = m_index_of(blocks[i].p);
        if (!k || *k != j + i + 1)
            return std::nullopt;
        // Interior: the run after 3 is r_i + n_{i+1} = r_i + p_i = M_{j+i+1}.
        if (i < l && blocks[i].r != blocks[i].p)
            return std::nullopt;
    }
    if (shape->lead > m_offset(j) || blocks[l].r > blocks[l].p)
        return std::nullopt;

    const PackedPair start = unpack(PairIndex{shape->lead});
    const PairIndex last{blocks[l].p - blocks[l].r};
    const PackedPair end = unpack(last);
    if (end.length != start.length + l + 1)
        return std::nullopt;
    std::uint64_t alpha = start.alpha;
    for (const Block& b : blocks)
        alpha = (alpha << 1) | b.m;
    if (end.alpha != alpha || (end.beta >> (l + 1)) != start.beta)
        return std::nullopt;
    if (!qf_member(r, last))
        return std::nullopt;

    PiDecomposition d{j, {}};
    PairIndex n{shape->lead};
    for (std::size_t i = 0; i <= l; ++i) {
        const unsigned len = start.length + static_cast<unsigned>(i) + 1;
        const PackedPair pp{len, end.beta >> (l - i), end.alpha >> (l - i)};
        const PairIndex p = pack(pp);
        d.blocks.push_back({n, blocks[i].m, p, m_offset(j + i + 1) - p.value});
        n = p;
    }
    return d;
}

std::optional<PiDecomposition> pi_member(const FiniteWord& s, const RTree& r)
{
    return pi_member(RunWord::of(s), r);
}

bool check_pi_decomposition(const RunWord& s, const RTree& r, const PiDecomposition& d)
{
    if (d.blocks.empty() || d.blocks[0].n.value > m_offset(d.j))
        return false;
    RunWord built;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const PiBlock& b = d.blocks[i];
        if (!is_transition(b.n, b.m, b.p) || b.p.value + b.r != m_offset(d.j + i + 1))
            return false;
        if (i + 1 < d.blocks.size() && d.blocks[i + 1].n != b.p)
            return false;
        built.twos(b.n.value).letter(b.m).twos(b.p.value).twos(b.r).letter(3).twos(b.r);
    }
    return qf_member(r, d.blocks.back().p) && built == s;
}

// ----------------------------------------------------------------------- μ

bool mu0_member(const RunWord& s)
{
    const auto shape = mu_shape(s);
    if (!shape)
        return false;
    const Block& b = shape->blocks[shape->blocks.size() - 2];
    return b.p != b.r;
}

bool mu1_member(const RunWord& s)
{
    const auto shape = mu_shape(s);
    if (!shape)
        return false;
    const std::size_t l = shape->blocks.size() - 2;
    return !m_successor(shape->blocks[l].p, shape->blocks[l + 1].p);
}

bool mu_member(const RunWord& s)
{
    return mu0_member(s) || mu1_member(s);
}

bool mu0_member(const FiniteWord& s) { return mu0_member(RunWord::of(s)); }
bool mu1_member(const FiniteWord& s) { return mu1_member(RunWord::of(s)); }
bool mu_member(const FiniteWord& s) { return mu_member(RunWord::of(s)); }

bool a_member(const RunWord& s, const RTree& r)
{
    return mu_member(s) || pi_member(s, r).has_value();
}

bool a_member(const FiniteWord& s, const RTree& r)
{
    return a_member(RunWord::of(s), r);
}

// ------------------------------------------------------- π^ω on K_{N,j}

namespace
{

// Shortest pair word reaching each R-state, in zip order.
std::vector<std::optional<PairIndex>> residue_representatives(const RTree& r)
{
    std::vector<std::optional<PairIndex>> rep(r.state_count());
    std::deque<std::pair<State, PackedPair>> queue{{r.initial(), PackedPair{}}};
    rep[r.initial()] = PairIndex{0};
    while (!queue.empty()) {
        auto [s, q] = queue.front();
        queue.pop_front();
        if (q.length == kMaxPairLength)
            continue;
        for (Letter beta = 0; beta < 2; ++beta)
            for (Letter alpha = 0; alpha < 2; ++alpha) {
                const State t = r.step(s, beta, alpha);
                if (rep[t])
                    continue;
                const PackedPair next{q.length + 1, (q.beta << 1) | beta, (q.alpha << 1) | alpha};
                rep[t] = pack(next);
                queue.push_back({t, next});
            }
    }
    return rep;
}

struct CutKey
{
    State residue;
    std::size_t phase;

    auto operator<=>(const CutKey&) const = default;
};

class PiFactorSearch
{
public:
    PiFactorSearch(const LassoWord& code, const RTree& r) : code_(code), r_(r), rep_(residue_representatives(r)) {}

    // Cuts reachable by one π factor read from state n over the K blocks
    // whose first has run M_{j+1} and code letter code_(k).
    std::set<CutKey> factors_from(PairIndex n, std::uint64_t j, std::size_t k) const
    {
        std::set<CutKey> out;
        std::map<State, PairIndex> frontier;
        const State start = r_.run(n);
        if (r_.live(start))
            frontier[start] = n;
        std::set<std::pair<std::vector<State>, std::size_t>> seen;
        for (std::size_t d = 0; !frontier.empty(); ++d) {
            std::vector<State> residues;
            for (const auto& [res, idx] : frontier)
                residues.push_back(res);
            if (!seen.insert({residues, code_.phase(k + d)}).second)
                break;
            const Letter m = code_.at(k + d);
            std::map<State, PairIndex> next;
            for (const auto& [res, idx] : frontier) {
                for (PairIndex p : successors(idx, m)) {
                    const State res_p = r_.run(p);
                    if (!r_.live(res_p))
                        continue;
                    if (qf_member(r_, p) && verify(n, j, k, d, p))
                        out.insert({res_p, code_.phase(k + d + 1)});
                    next.emplace(res_p, p);
                }
            }
            frontier = std::move(next);
        }
        return out;
    }

    PairIndex representative(State residue) const { return *rep_.at(residue); }

private:
    // The candidate factor 2^n [m_i 2^{M} 3 2^{M}]_{i<d} m_d 2^{M} 3 2^{M-p}
    // must parse as a π word ending in state p.
    bool verify(PairIndex n, std::uint64_t j, std::size_t k, std::size_t d, PairIndex p) const
    {
        RunWord w;
        w.twos(n.value);
        for (std::size_t i = 0; i <= d; ++i) {
            const std::uint64_t run = m_offset(j + i + 1);
            w.letter(code_.at(k + i)).twos(run).letter(3).twos(i < d ? run : run - p.value);
        }
        const auto parsed = pi_member(w, r_);
        return parsed && parsed->blocks.back().p == p;
    }

    const LassoWord& code_;
    const RTree& r_;
    std::vector<std::optional<PairIndex>> rep_;
};

// Does the graph reachable from `roots` contain a cycle? Every reachable key
// must have an entry in `edges`.
template <class Key>
bool has_reachable_cycle(const std::vector<Key>& roots, const std::map<Key, std::set<Key>>& edges)
{
    enum class Mark { fresh, active, done };
    std::map<Key, Mark> mark;
    using Iter = typename std::set<Key>::const_iterator;
    for (const Key& root : roots) {
        if (mark[root] != Mark::fresh)
            continue;
        std::vector<std::pair<Key, Iter>> stack{{root, edges.at(root).begin()}};
        mark[root] = Mark::active;
        while (!stack.empty()) {
            auto& [key, it] = stack.back();
            if (it == edges.at(key).end()) {
                mark[key] = Mark::done;
                stack.pop_back();
                continue;
            }
            const Key next = *it++;
            if (mark[next] == Mark::active)
                return true;
            if (mark[next] == Mark::fresh) {
                mark[next] = Mark::active;
                stack.push_back({next, edges.at(next).begin()});
            }
        }
    }
    return false;
}

} // namespace

bool pi_omega_knj_member(const KnjWord& w, const RTree& r)
{
    if (w.has_head())
        throw not_in_knj("π^ω ∩ K_{N,j} is decided for unheaded K words only: " + w.str());
    const PiFactorSearch search(w.m(), r);

    // Later cuts are identified up to (R-residue, code phase); all words in a
    // class admit the same factor continuations.
    std::map<CutKey, std::set<CutKey>> edges;
    std::deque<CutKey> queue;
    std::vector<CutKey> roots;
    for (const CutKey& c : search.factors_from(PairIndex{w.n()}, w.j(), 0)) {
        roots.push_back(c);
        queue.push_back(c);
    }
    std::set<CutKey> visited(roots.begin(), roots.end());
    while (!queue.empty()) {
        const CutKey c = queue.front();
        queue.pop_front();
        const PairIndex n = search.representative(c.residue);
        const std::uint64_t j = pair_length(n);
        auto& out = edges[c];
        out = search.factors_from(n, j, c.phase);
        for (const CutKey& next : out)
            if (visited.insert(next).second)
                queue.push_back(next);
    }
    return has_reachable_cycle(roots, edges);
}

// ------------------------------------------------------------------- P, μ^ω

bool p_shaped(const LassoWord& w)
{
    const auto& v = w.cycle();
    if (std::all_of(v.begin(), v.end(), [](Letter l) { return l == 2; }))
        return false;
    // Every delimiter before |u|+2|v| has its following run closed within
    // |u|+3|v|, and the delimiter pattern after |u| repeats every |v| letters.
    const std::size_t limit = w.spoke().size() + 2 * v.size();
    const RunWord rw = RunWord::of(w.prefix(limit + v.size()).widen(Alphabet::quaternary()));
    std::size_t pos = rw.lead;
    for (std::size_t i = 0; i < rw.segments.size() && pos < limit; ++i) {
        const auto& seg = rw.segments[i];
        const bool expect_m = i % 2 == 0;
        if (expect_m ? seg.delimiter > 1 : seg.delimiter != 3)
            return false;
        if (expect_m && !m_index_of(seg.run))
            return false;
        pos += 1 + seg.run;
    }
    return true;
}

Decision mu_omega_member(const SyntheticWord& w, std::uint64_t budget)
{
    if (w.is_knj())
        return Decision::no;
    const LassoWord lasso = w.lasso().widen(Alphabet::quaternary());
    const std::uint64_t horizon =
        std::min<std::uint64_t>(budget, 2 * lasso.spoke().size() + 6 * lasso.cycle().size() + 8);

    std::map<std::size_t, std::set<std::size_t>> edges;
    std::deque<std::size_t> queue{0};
    std::set<std::size_t> visited{0};
    while (!queue.empty()) {
        const std::size_t x = queue.front();
        queue.pop_front();
        auto& out = edges[x];
        RunWord factor;
        for (std::uint64_t len = 1; len <= horizon; ++len) {
            factor.letter(lasso.at(x + len - 1));
            if (mu_member(factor))
                out.insert(lasso.phase(x + len));
        }
        for (std::size_t y : out)
            if (visited.insert(y).second)
                queue.push_back(y);
    }
    if (has_reachable_cycle(std::vector<std::size_t>{0}, edges))
        return Decision::yes;
    return p_shaped(lasso) ? Decision::inconclusive : Decision::no;
}

// ------------------------------------------------------------ BlockProfile

std::optional<BlockProfile> BlockProfile::of(const KnjWord& w)
{
    RunWord head = RunWord::of(w.head());
    head.twos(w.n());
    const auto shape = block_shape(head);
    if (!shape || !all_p_in_m(*shape))
        return std::nullopt;
    BlockProfile profile(w);
    profile.lead_ = shape->lead;
    profile.explicit_ = shape->blocks;
    return profile;
}

Block BlockProfile::block(std::size_t i) const
{
    if (i < explicit_.size())
        return explicit_[i];
    const std::size_t k = i - explicit_.size();
    const std::uint64_t run = word_.block_run(k);
    return {word_.m().at(k), run, run};
}

bool BlockProfile::violation(std::size_t i) const
{
    const Block b = block(i);
    return b.p != b.r || !m_successor(b.p, block(i + 1).p);
}

std::optional<std::size_t> BlockProfile::last_violation() const
{
    for (std::size_t i = explicit_.size(); i-- > 0;)
        if (violation(i))
            return i;
    return std::nullopt;
}

LassoWord BlockProfile::code_from(std::size_t i) const
{
    if (i >= explicit_.size())
        return word_.m().drop(i - explicit_.size());
    std::vector<Letter> bits;
    for (std::size_t k = i; k < explicit_.size(); ++k)
        bits.push_back(explicit_[k].m);
    const FiniteWord prefix(std::move(bits), Alphabet::binary());
    return LassoWord(concat(prefix, word_.m().spoke()), word_.m().cycle());
}

RunWord BlockProfile::prefix_blocks(std::size_t end) const
{
    RunWord w;
    w.twos(lead_);
    for (std::size_t i = 0; i < end; ++i) {
        const Block b = block(i);
        w.letter(b.m).twos(b.p).letter(3).twos(b.r);
    }
    return w;
}

// ---------------------------------------------------------------- F and A^ω

bool is_suitable(const Triple& triple)
{
    if (triple.empty_t())
        return triple.s <= m_offset(triple.j);
    const auto& segs = triple.t.segments;
    if (segs.empty() || segs.back().delimiter != 3 || segs.back().run != 0 || !mu_member(triple.t))
        return false;
    for (Letter m = 0; m < 2; ++m) {
        RunWord x = triple.t;
        x.twos(triple.s).letter(m).twos(m_offset(triple.j + 1)).letter(3);
        if (mu_member(x))
            return false;
    }
    return true;
}

namespace
{

struct Classified
{
    Triple triple;
    std::size_t k_start; // first block of γ - t 2^S
};

Classified classify(const BlockProfile& profile)
{
    const auto v = profile.last_violation();
    if (!v) {
        const std::uint64_t j0 = *m_index_of(profile.block(0).p);
        if (j0 >= 1 && profile.lead() <= m_offset(j0 - 1))
            return {{RunWord{}, profile.lead(), j0}, 0};
        throw f_undefined("no block violation, yet the word is not in K_{N,j0-1}");
    }
    RunWord t = profile.prefix_blocks(*v + 1);
    const Block next = profile.block(*v + 1);
    t.letter(next.m).twos(next.p).letter(3);
    const std::uint64_t j1 = *m_index_of(profile.block(*v + 2).p);
    return {{std::move(t), next.r, j1}, *v + 2};
}

} // namespace

Triple f_map(const SyntheticWord& w, std::uint64_t budget)
{
    if (w.is_lasso()) {
        switch (mu_omega_member(w, budget)) {
        case Decision::yes: throw in_mu_omega(w.str() + " is in μ^ω");
        case Decision::no: throw not_in_p(w.str() + " is not block shaped");
        case Decision::inconclusive: throw budget_exceeded("μ^ω membership of " + w.str() + " undecided");
        }
    }
    const auto profile = BlockProfile::of(w.knj());
    if (!profile)
        throw not_in_p(w.str() + " is not block shaped");
    return classify(*profile).triple;
}

Decision a_omega_member(const SyntheticWord& w, const RTree& r, std::uint64_t budget)
{
    const Decision mu = mu_omega_member(w, budget);
    if (mu != Decision::no)
        return mu;
    // A^ω lies inside P, and a block shaped lasso is in μ^ω.
    if (w.is_lasso())
        return Decision::no;
    const auto profile = BlockProfile::of(w.knj());
    if (!profile)
        return Decision::no;
    Classified c;
    try {
        c = classify(*profile);
    } catch (const f_undefined&) {
        return Decision::no;
    }
    if (c.triple.j == 0)
        return Decision::no;
    const std::uint64_t j = c.triple.j - 1;
    const Triple suitable{c.triple.t, c.triple.s, j};
    if (!is_suitable(suitable))
        return Decision::no;
    const LassoWord code = profile->code_from(c.k_start);
    const std::uint64_t hi = std::min(m_offset(j), c.triple.s);
    const std::uint64_t lo = suitable.empty_t() ? c.triple.s : 0;
    for (std::uint64_t n = lo; n <= hi; ++n)
        if (pi_omega_knj_member(KnjWord(n, j, code), r))
            return Decision::yes;
    return Decision::no;
}

} // namespace omegapow
