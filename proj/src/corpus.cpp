#include "omegapow/corpus.hpp"

#include <random>

namespace omegapow
{

namespace
{

// Words of exactly `length` letters in lexicographic order.
std::vector<FiniteWord> words_of_length(Alphabet alphabet, std::size_t length)
{
    std::vector<FiniteWord> out;
    std::vector<Letter> w(length, 0);
    const auto k = static_cast<Letter>(alphabet.size());
    while (true) {
        out.emplace_back(w, alphabet);
        std::size_t i = length;
        while (i > 0 && w[i - 1] + 1 == k)
            w[--i] = 0;
        if (i == 0)
            return out;
        ++w[i - 1];
    }
}

} // namespace

std::vector<FiniteWord> all_words(Alphabet alphabet, std::size_t max_length)
{
    std::vector<FiniteWord> out;
    for (std::size_t len = 0; len <= max_length; ++len) {
        auto layer = words_of_length(alphabet, len);
        out.insert(out.end(), layer.begin(), layer.end());
    }
    return out;
}

std::vector<LassoWord> corpus_lassos(Alphabet alphabet, std::size_t max_spoke, std::size_t max_cycle,
                                     const LassoFilter& filter)
{
    std::vector<std::vector<FiniteWord>> by_length;
    for (std::size_t len = 0; len <= std::max(max_spoke, max_cycle); ++len)
        by_length.push_back(words_of_length(alphabet, len));

    std::vector<LassoWord> out;
    for (std::size_t total = 1; total <= max_spoke + max_cycle; ++total) {
        for (std::size_t u = 0; u <= std::min(max_spoke, total - 1); ++u) {
            const std::size_t v = total - u;
            if (v > max_cycle)
                continue;
            for (const FiniteWord& spoke : by_length[u])
                for (const FiniteWord& cycle : by_length[v]) {
                    LassoWord w(spoke, cycle);
                    // Keep only pairs already in canonical form.
                    if (w.spoke() != spoke || w.cycle() != cycle)
                        continue;
                    if (!filter || filter(w))
                        out.push_back(std::move(w));
                }
        }
    }
    return out;
}

std::vector<LassoWord> random_lassos(Alphabet alphabet, std::size_t max_spoke, std::size_t max_cycle,
                                     std::size_t count, std::uint64_t seed, const LassoFilter& filter)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> spoke_len(0, max_spoke), cycle_len(1, max_cycle);
    std::uniform_int_distribution<int> letter(0, alphabet.size() - 1);
    const auto draw = [&](std::size_t n) {
        std::vector<Letter> w(n);
        for (auto& l : w)
            l = static_cast<Letter>(letter(rng));
        return FiniteWord(std::move(w), alphabet);
    };
    std::vector<LassoWord> out;
    while (out.size() < count) {
        const std::size_t u = spoke_len(rng);
        const std::size_t v = cycle_len(rng);
        const FiniteWord spoke = draw(u);
        LassoWord w(spoke, draw(v));
        if (!filter || filter(w))
            out.push_back(std::move(w));
    }
    return out;
}

} // namespace omegapow
