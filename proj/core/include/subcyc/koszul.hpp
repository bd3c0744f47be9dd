#ifndef SUBCYC_KOSZUL_HPP
#define SUBCYC_KOSZUL_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subcyc/linalg.hpp"
#include "subcyc/monomial_ideal.hpp"

namespace subcyc {

// Multigraded Betti numbers of an ideal: entry (i, alpha) is the dimension of
// the degree-alpha piece of the i-th Tor of the ideal against the residue
// field. Only nonzero entries are stored.
struct BettiTable {
    int nvars = 0;
    std::map<std::pair<int, Multidegree>, std::size_t> entries;

    std::size_t at(int i, const Multidegree& alpha) const {
        auto it = entries.find({i, alpha});
        return it == entries.end() ? 0 : it->second;
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [k, v] : entries) t += v;
        return t;
    }
};

// Betti numbers computed one multidegree at a time as homology of the Koszul
// complex on x_1..x_n tensored with the ideal. Only degrees that occur as
// lcms of generator subsets can contribute, so those are the only fibers
// materialized.
BettiTable graded_betti(const MonomialIdeal& ideal, const FieldSpec& f,
                        int max_enum_vars = kDefaultMaxEnumVars);

struct DualIdentityReport {
    bool pass = true;
    std::size_t entries_checked = 0;
    std::vector<std::string> mismatches;
};

// Checks, entry by entry, that the graded Betti numbers of the Alexander dual
// equal the multiplicities of the ideal's arrangement: beta_{i,-alpha}(dual)
// must match the multiplicity at (|alpha|-i, alpha) for every sign vector
// alpha, and no Betti entry may sit in a non-squarefree degree. Both sides
// are computed by independent engines, so a mismatch means one of them is
// wrong.
DualIdentityReport verify_dual_identity(const MonomialIdeal& ideal, const FieldSpec& f,
                                        int max_enum_vars = kDefaultMaxEnumVars);

} // namespace subcyc

#endif
