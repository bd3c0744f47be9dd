#include "subcyc/corpus.hpp"

#include "subcyc/errors.hpp"

namespace subcyc {

namespace {

bool comparable(std::uint32_t a, std::uint32_t b) {
    return (a & b) == a || (a & b) == b;
}

void antichain_dfs(int nvars, std::uint32_t first_candidate, std::vector<std::uint32_t>& chosen,
                   std::vector<MonomialIdeal>& out) {
    if (!chosen.empty()) {
        std::vector<Monomial> gens;
        gens.reserve(chosen.size());
        for (std::uint32_t m : chosen) gens.push_back(Monomial::from_support(nvars, m));
        out.emplace_back(nvars, std::move(gens));
    }
    const std::uint32_t limit = std::uint32_t(1) << nvars;
    for (std::uint32_t candidate = first_candidate; candidate < limit; ++candidate) {
        bool ok = true;
        for (std::uint32_t m : chosen) {
            if (comparable(m, candidate)) { ok = false; break; }
        }
        if (!ok) continue;
        chosen.push_back(candidate);
        antichain_dfs(nvars, candidate + 1, chosen, out);
        chosen.pop_back();
    }
}

// SplitMix64: tiny, deterministic across platforms.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return next() % bound; }
};

} // namespace

std::vector<MonomialIdeal> all_squarefree_ideals(int nvars) {
    if (nvars < 1 || nvars > 5) {
        throw InputError("exhaustive squarefree corpus supported for 1 <= n <= 5");
    }
    std::vector<MonomialIdeal> out;
    std::vector<std::uint32_t> chosen;
    antichain_dfs(nvars, 1, chosen, out);
    return out;
}

std::vector<MonomialIdeal> random_squarefree_ideals(int nvars, std::size_t count,
                                                    std::uint64_t seed) {
    if (nvars < 1 || nvars > kHardMaxVars) throw InputError("variable count out of range");
    SplitMix64 rng{seed};
    const std::uint32_t full = (std::uint32_t(1) << nvars) - 1;
    std::vector<MonomialIdeal> out;
    out.reserve(count);
    while (out.size() < count) {
        const std::size_t picks = 2 + rng.below(5); // 2..6 candidate supports
        std::vector<Monomial> gens;
        for (std::size_t i = 0; i < picks; ++i) {
            gens.push_back(Monomial::from_support(nvars, 1 + static_cast<std::uint32_t>(rng.below(full))));
        }
        out.emplace_back(nvars, std::move(gens)); // minimalized by the constructor
    }
    return out;
}

} // namespace subcyc
