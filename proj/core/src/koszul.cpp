#include "subcyc/koszul.hpp"

#include <bit>
#include <set>

#include "subcyc/cech.hpp"
#include "subcyc/errors.hpp"
#include "subcyc/invariants.hpp"
#include "subcyc/poset.hpp"

namespace subcyc {

namespace {

// Koszul fiber in multidegree alpha: level k lists the k-subsets S of the
// variables with alpha - e_S >= 0 and x^(alpha - e_S) in the ideal.
struct KoszulFiber {
    int nvars;
    std::vector<std::vector<std::uint32_t>> on; // per level

    KoszulFiber(const MonomialIdeal& ideal, const Multidegree& alpha) : nvars(ideal.nvars()) {
        on.assign(nvars + 1, {});
        const std::uint32_t limit = std::uint32_t(1) << nvars;
        std::vector<int> exps(nvars);
        for (std::uint32_t s = 0; s < limit; ++s) {
            bool ok = true;
            for (int i = 0; i < nvars && ok; ++i) {
                exps[i] = alpha[i] - static_cast<int>((s >> i) & 1u);
                if (exps[i] < 0) ok = false;
            }
            if (ok && ideal.contains(Monomial(exps))) {
                on[std::popcount(s)].push_back(s);
            }
        }
    }

    std::size_t term_count(int level) const {
        if (level < 0 || level > nvars) return 0;
        return on[level].size();
    }

    // Homological differential from level k to level k-1.
    Matrix differential(int level) const {
        const auto& cols = (level >= 0 && level <= nvars) ? on[level] : kEmptySubsets;
        const auto& rows = (level - 1 >= 0 && level - 1 <= nvars) ? on[level - 1] : kEmptySubsets;
        Matrix d(rows.size(), cols.size());
        std::map<std::uint32_t, std::size_t> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const std::uint32_t s = cols[c];
            for (int j = 0; j < nvars; ++j) {
                if (!((s >> j) & 1u)) continue;
                auto it = row_index.find(s & ~(1u << j));
                if (it == row_index.end()) continue;
                const int position = std::popcount(s & ((1u << j) - 1));
                d.set(it->second, c, Rational(position % 2 == 0 ? 1 : -1));
            }
        }
        return d;
    }

    static const std::vector<std::uint32_t> kEmptySubsets;
};

const std::vector<std::uint32_t> KoszulFiber::kEmptySubsets;

} // namespace

BettiTable graded_betti(const MonomialIdeal& ideal, const FieldSpec& f, int max_enum_vars) {
    if (ideal.nvars() > max_enum_vars) {
        throw InputError("graded_betti enumerates 2^n Koszul terms; n = " +
                         std::to_string(ideal.nvars()) + " exceeds the cap " +
                         std::to_string(max_enum_vars));
    }
    const auto& gens = ideal.generators();
    if (static_cast<int>(gens.size()) > kMaxCechGenerators) {
        throw InputError("graded_betti enumerates lcms of 2^s generator subsets; s = " +
                         std::to_string(gens.size()) + " exceeds the cap " +
                         std::to_string(kMaxCechGenerators));
    }

    // Tor can only be nonzero in degrees realized as lcms of generator
    // subsets (the degrees of the Taylor complex).
    std::set<Multidegree> candidates;
    const std::uint32_t limit = std::uint32_t(1) << gens.size();
    for (std::uint32_t s = 1; s < limit; ++s) {
        const std::uint32_t low = s & (~s + 1);
        Monomial m = gens[std::countr_zero(low)];
        for (std::uint32_t rest = s ^ low; rest != 0; rest &= rest - 1) {
            m = m.lcm(gens[std::countr_zero(rest)]);
        }
        candidates.insert(m.exponents());
    }

    BettiTable table;
    table.nvars = ideal.nvars();
    for (const auto& alpha : candidates) {
        const KoszulFiber fiber(ideal, alpha);
        for (int i = 0; i <= ideal.nvars(); ++i) {
            if (fiber.term_count(i) == 0) continue;
            const std::size_t dim = homology_dim(fiber.differential(i + 1), fiber.differential(i), f);
            if (dim > 0) table.entries[{i, alpha}] = dim;
        }
    }
    return table;
}

DualIdentityReport verify_dual_identity(const MonomialIdeal& ideal, const FieldSpec& f,
                                        int max_enum_vars) {
    if (!ideal.is_squarefree()) {
        throw InputError("verify_dual_identity requires a squarefree ideal");
    }
    const int n = ideal.nvars();
    const BettiTable betti = graded_betti(ideal.alexander_dual(max_enum_vars), f, max_enum_vars);
    const IntersectionPoset poset = IntersectionPoset::from_ideal(ideal, max_enum_vars);
    const MultiplicityTable mult = multiplicities(poset, f);

    DualIdentityReport report;
    for (const auto& [key, value] : betti.entries) {
        bool squarefree = true;
        for (int e : key.second) {
            if (e > 1) squarefree = false;
        }
        if (!squarefree) {
            report.pass = false;
            report.mismatches.push_back("Betti entry at non-squarefree degree " +
                                        multidegree_to_string(key.second) + " (i=" +
                                        std::to_string(key.first) + ", value " +
                                        std::to_string(value) + ")");
        }
    }
    for (const auto& alpha : all_sign_vectors(n)) {
        const int weight = alpha.weight();
        Multidegree exponent(n, 0);
        for (int i = 0; i < n; ++i) exponent[i] = alpha.entry(i) == -1 ? 1 : 0;
        for (int i = 0; i <= n; ++i) {
            const std::size_t lhs = betti.at(i, exponent);
            const std::size_t rhs = (weight - i >= 0) ? mult.at_sign(weight - i, alpha) : 0;
            ++report.entries_checked;
            if (lhs != rhs) {
                report.pass = false;
                report.mismatches.push_back(
                    "beta_{" + std::to_string(i) + "," + multidegree_to_string(exponent) +
                    "}(dual) = " + std::to_string(lhs) + " but multiplicity m_{" +
                    std::to_string(weight - i) + "," + alpha.to_string() + "} = " +
                    std::to_string(rhs));
            }
        }
    }
    return report;
}

} // namespace subcyc
