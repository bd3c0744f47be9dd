#include "subcyc/poset.hpp"

#include <algorithm>
#include <set>

#include "subcyc/errors.hpp"

namespace subcyc {

std::string PosetNode::label() const {
    if (sign) {
        std::string vars;
        for (int i = 0; i < sign->nvars(); ++i) {
            if (sign->entry(i) == -1) {
                if (!vars.empty()) vars += ',';
                vars += 'x' + std::to_string(i + 1);
            }
        }
        return "V(" + vars + ")";
    }
    return "S" + std::to_string(id);
}

IntersectionPoset IntersectionPoset::from_ideal(const MonomialIdeal& ideal, int max_enum_vars) {
    const MonomialIdeal reduced = ideal.is_squarefree() ? ideal : ideal.radical();
    const auto primes = reduced.minimal_primes(max_enum_vars);

    // Close the component supports under union (sum of face ideals).
    std::set<std::uint32_t> masks;
    for (const auto& p : primes) masks.insert(p.support());
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::uint32_t> current(masks.begin(), masks.end());
        for (std::size_t i = 0; i < current.size(); ++i) {
            for (std::size_t j = i + 1; j < current.size(); ++j) {
                if (masks.insert(current[i] | current[j]).second) grew = true;
            }
        }
    }

    IntersectionPoset poset;
    poset.coordinate_ = true;
    poset.ambient_dim_ = ideal.nvars();
    std::vector<SignVector> signs;
    for (std::uint32_t m : masks) signs.emplace_back(ideal.nvars(), m);
    std::sort(signs.begin(), signs.end(), [](const SignVector& a, const SignVector& b) {
        if (a.weight() != b.weight()) return a.weight() < b.weight();
        return a.support() < b.support();
    });
    for (const auto& s : signs) {
        PosetNode node;
        node.id = poset.nodes_.size();
        node.height = s.weight();
        node.sign = s;
        poset.nodes_.push_back(std::move(node));
    }
    poset.less_.assign(poset.nodes_.size(), std::vector<bool>(poset.nodes_.size(), false));
    for (std::size_t p = 0; p < poset.nodes_.size(); ++p) {
        for (std::size_t q = 0; q < poset.nodes_.size(); ++q) {
            const auto& sp = *poset.nodes_[p].sign;
            const auto& sq = *poset.nodes_[q].sign;
            // X_p strictly inside X_q <=> support(p) strictly contains support(q)
            poset.less_[p][q] = (p != q) && sp.supports(sq);
        }
    }
    poset.finish();
    return poset;
}

IntersectionPoset IntersectionPoset::from_subspaces(const std::vector<AffineSubspace>& components,
                                                    std::vector<std::string>* warnings) {
    if (components.empty()) throw InputError("no components given");

    // Keep only maximal inputs; the rest are not irreducible components.
    std::vector<AffineSubspace> maximal;
    for (std::size_t i = 0; i < components.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < components.size() && !redundant; ++j) {
            if (i == j) continue;
            if (components[i].contained_in(components[j])) {
                if (components[j].contained_in(components[i]) && j > i) continue; // duplicate, keep first
                redundant = true;
            }
        }
        if (redundant) {
            if (warnings) {
                warnings->push_back("input subspace " + std::to_string(i + 1) +
                                    " is contained in another input; discarded");
            }
        } else {
            maximal.push_back(components[i]);
        }
    }

    // Closure under pairwise intersection, keyed by canonical form.
    std::vector<AffineSubspace> closure = maximal;
    std::set<std::string> seen;
    for (const auto& s : closure) seen.insert(s.canonical_key());
    for (std::size_t i = 0; i < closure.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
            auto meet = AffineSubspace::intersect(closure[i], closure[j]);
            if (!meet) continue;
            if (seen.insert(meet->canonical_key()).second) {
                closure.push_back(std::move(*meet));
            }
        }
    }

    std::sort(closure.begin(), closure.end(), [](const AffineSubspace& a, const AffineSubspace& b) {
        if (a.codim() != b.codim()) return a.codim() < b.codim();
        return a.canonical_key() < b.canonical_key();
    });

    IntersectionPoset poset;
    poset.coordinate_ = false;
    poset.ambient_dim_ = closure.front().ambient_dim();
    for (const auto& s : closure) {
        PosetNode node;
        node.id = poset.nodes_.size();
        node.height = s.codim();
        node.affine = s;
        poset.nodes_.push_back(std::move(node));
    }
    poset.less_.assign(poset.nodes_.size(), std::vector<bool>(poset.nodes_.size(), false));
    for (std::size_t p = 0; p < poset.nodes_.size(); ++p) {
        for (std::size_t q = 0; q < poset.nodes_.size(); ++q) {
            if (p == q) continue;
            const auto& sp = *poset.nodes_[p].affine;
            const auto& sq = *poset.nodes_[q].affine;
            poset.less_[p][q] = sp.contained_in(sq) && !(sp == sq);
        }
    }
    poset.finish();
    return poset;
}

void IntersectionPoset::finish() {
    // p < q must shrink the subspace, i.e. raise the codimension.
    for (std::size_t p = 0; p < nodes_.size(); ++p) {
        for (std::size_t q = 0; q < nodes_.size(); ++q) {
            if (less_[p][q] && nodes_[p].height <= nodes_[q].height) {
                throw InternalError("poset order violates heights");
            }
        }
    }
}

std::vector<std::size_t> IntersectionPoset::maximal_node_ids() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < nodes_.size(); ++p) {
        bool maximal = true;
        for (std::size_t q = 0; q < nodes_.size() && maximal; ++q) {
            if (less_[p][q]) maximal = false;
        }
        if (maximal) out.push_back(p);
    }
    return out;
}

std::optional<std::size_t> IntersectionPoset::find_sign(const SignVector& alpha) const {
    for (const auto& node : nodes_) {
        if (node.sign && *node.sign == alpha) return node.id;
    }
    return std::nullopt;
}

SimplicialComplex IntersectionPoset::strict_upset_complex(std::size_t p) const {
    if (p >= nodes_.size()) throw InputError("poset node out of range");
    std::vector<std::size_t> upset;
    for (std::size_t q = 0; q < nodes_.size(); ++q) {
        if (less_[p][q]) upset.push_back(q);
    }
    if (upset.empty()) return SimplicialComplex::empty();

    const std::size_t m = upset.size();
    std::vector<std::size_t> position(nodes_.size(), m);
    for (std::size_t i = 0; i < m; ++i) position[upset[i]] = i;

    // Covering relation within the upset.
    std::vector<std::vector<std::size_t>> covers(m);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = 0; b < m; ++b) {
            if (!less_[upset[a]][upset[b]]) continue;
            bool direct = true;
            for (std::size_t z = 0; z < m && direct; ++z) {
                if (less_[upset[a]][upset[z]] && less_[upset[z]][upset[b]]) direct = false;
            }
            if (direct) covers[a].push_back(b);
        }
    }

    // Facets of the order complex are the maximal chains: Hasse paths from
    // minimal to maximal elements of the upset.
    std::vector<bool> has_lower(m, false);
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b : covers[a]) has_lower[b] = true;
    }
    std::vector<std::vector<int>> facets;
    std::vector<int> chain;
    auto dfs = [&](auto&& self, std::size_t v) -> void {
        chain.push_back(static_cast<int>(v));
        if (covers[v].empty()) {
            facets.push_back(chain);
        } else {
            for (std::size_t w : covers[v]) self(self, w);
        }
        chain.pop_back();
    };
    for (std::size_t a = 0; a < m; ++a) {
        if (!has_lower[a]) dfs(dfs, a);
    }
    return SimplicialComplex(static_cast<int>(m), std::move(facets));
}

} // namespace subcyc
