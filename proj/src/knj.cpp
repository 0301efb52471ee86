#include "omegapow/knj.hpp"

#include <string>

namespace omegapow
{

void KnjAddress::validate() const
{
    if (n > m_offset(j))
        throw invalid_address("K_{" + std::to_string(n) + "," + std::to_string(j)
                              + "} requires N <= M_j = " + std::to_string(m_offset(j)));
}

SyntheticWord phi_inverse(const LassoWord& m, KnjAddress addr)
{
    addr.validate();
    return KnjWord(addr.n, addr.j, m);
}

LassoWord phi(const SyntheticWord& w)
{
    if (w.is_lasso())
        throw not_in_knj("ultimately periodic words have bounded 2-runs: " + w.str());
    if (w.knj().has_head())
        throw not_in_knj("word has a head outside the K_{N,j} pattern: " + w.str());
    return w.knj().m();
}

KnjPrefixChecker::KnjPrefixChecker(KnjAddress addr)
    : addr_(addr), lead_left_(addr.n), run_(m_offset(addr.j + 1))
{
    addr.validate();
}

bool KnjPrefixChecker::feed(Letter l)
{
    if (!ok_)
        return false;
    ++consumed_;
    if (lead_left_ > 0) {
        --lead_left_;
        return ok_ = l == 2;
    }
    bool good;
    if (offset_ == 0)
        good = l < 2;
    else if (offset_ == run_ + 1)
        good = l == 3;
    else
        good = l == 2;
    if (++offset_ == 2 * run_ + 2) {
        offset_ = 0;
        ++block_;
        run_ = m_offset(addr_.j + block_ + 1);
    }
    return ok_ = good;
}

bool knj_prefix_consistent(const FiniteWord& s, KnjAddress addr)
{
    if (s.alphabet() != Alphabet::quaternary())
        throw alphabet_mismatch("K_{N,j} prefixes are words over 4 letters");
    KnjPrefixChecker checker(addr);
    for (Letter l : s)
        if (!checker.feed(l))
            return false;
    return true;
}

} // namespace omegapow
