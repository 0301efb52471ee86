#pragma once

// The compact carriers
//   K_{N,j} = { 2^N [m_0 2^{M_{j+1}} 3 2^{M_{j+1}}] [m_1 2^{M_{j+2}} 3 2^{M_{j+2}}] ... : m in 2^ω }
// and the coding φ_{N,j} : K_{N,j} → 2^ω, γ ↦ m_0 m_1 ...

#include <cstdint>

#include "omegapow/pairs.hpp"
#include "omegapow/word.hpp"

namespace omegapow
{

struct KnjAddress
{
    std::uint64_t n = 0;
    std::uint64_t j = 0;

    /// Throws invalid_address unless N <= M_j.
    void validate() const;
    bool operator==(const KnjAddress&) const = default;
};

SyntheticWord phi_inverse(const LassoWord& m, KnjAddress addr);
/// The code of a K_{N,j} word. Throws not_in_knj for lassos and headed words.
LassoWord phi(const SyntheticWord& w);

/// Letter-at-a-time recognizer of the prefixes of K_{N,j}.
class KnjPrefixChecker
{
public:
    explicit KnjPrefixChecker(KnjAddress addr);

    /// Consumes one letter; false once the input stops being a prefix.
    bool feed(Letter l);
    bool ok() const noexcept { return ok_; }
    std::uint64_t consumed() const noexcept { return consumed_; }

private:
    KnjAddress addr_;
    bool ok_ = true;
    std::uint64_t consumed_ = 0;
    std::uint64_t lead_left_;
    std::uint64_t block_ = 0;
    std::uint64_t offset_ = 0; // position inside the current block
    std::uint64_t run_;        // M_{j+block+1}
};

bool knj_prefix_consistent(const FiniteWord& s, KnjAddress addr);

} // namespace omegapow
