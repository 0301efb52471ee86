#pragma once

#include <string_view>

namespace omegapow
{

/// Outcome of a bounded semi-decision.
enum class Decision
{
    yes,
    no,
    inconclusive
};

constexpr std::string_view to_string(Decision d) noexcept
{
    switch (d) {
    case Decision::yes: return "yes";
    case Decision::no: return "no";
    case Decision::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

constexpr Decision decide(bool b) noexcept { return b ? Decision::yes : Decision::no; }

} // namespace omegapow
