#include "subcyc/invariants.hpp"

#include "subcyc/errors.hpp"
#include "subcyc/koszul.hpp"

namespace subcyc {

MultiplicityTable multiplicities(const IntersectionPoset& poset, const FieldSpec& f) {
    MultiplicityTable table;
    for (const auto& node : poset.nodes()) {
        const auto hdims = reduced_homology_dims(poset.strict_upset_complex(node.id), f);
        for (const auto& [degree, count] : hdims) {
            const int r = node.height - degree - 1;
            if (r < 0) throw InternalError("upset complex homology above the node height");
            table.by_node[{r, node.id}] = count;
            if (node.sign) table.by_sign[{r, *node.sign}] = count;
        }
    }
    return table;
}

CharacteristicCycle characteristic_cycle(const IntersectionPoset& poset) {
    const MultiplicityTable table = multiplicities(poset, FieldSpec::rationals());
    CharacteristicCycle cc;
    for (const auto& [key, count] : table.by_node) {
        const auto& node = poset.node(key.second);
        CharacteristicCycle::Term term;
        term.node = node.id;
        term.height = node.height;
        term.label = node.label();
        term.sign = node.sign;
        term.multiplicity = count;
        cc.by_degree[key.first].push_back(std::move(term));
    }
    return cc;
}

CharacteristicCycle characteristic_cycle(const MonomialIdeal& ideal, int max_enum_vars) {
    return characteristic_cycle(IntersectionPoset::from_ideal(ideal, max_enum_vars));
}

std::vector<std::size_t> complement_betti(const IntersectionPoset& poset, ComplementFlavor flavor) {
    const MultiplicityTable table = multiplicities(poset, FieldSpec::rationals());
    const int n = poset.ambient_dim();
    std::vector<std::size_t> betti(flavor == ComplementFlavor::real ? n : 2 * n, 0);
    for (const auto& [key, count] : table.by_node) {
        const int r = key.first;
        const int h = poset.node(key.second).height;
        const int i = flavor == ComplementFlavor::real ? r - 1 : r + h - 1;
        if (i >= 0 && i < static_cast<int>(betti.size())) betti[i] += count;
    }
    return betti;
}

Hypercube hypercube(const MonomialIdeal& ideal, int r, const FieldSpec& f, int max_enum_vars) {
    if (r < 0) throw InputError("cohomological degree must be non-negative");
    const int n = ideal.nvars();
    if (n > max_enum_vars) {
        throw InputError("hypercube enumerates 2^n vertices; n = " + std::to_string(n) +
                         " exceeds the cap " + std::to_string(max_enum_vars));
    }
    Hypercube cube;
    cube.r = r;
    cube.nvars = n;
    for (const auto& alpha : all_sign_vectors(n)) {
        cube.vertex_dims[alpha] = graded_lc_dim(ideal, r, alpha.to_multidegree(), f);
    }

    // Cross-route consistency: the graded dimensions must be the poset
    // multiplicities, vertex by vertex.
    const IntersectionPoset poset = IntersectionPoset::from_ideal(ideal, max_enum_vars);
    const MultiplicityTable table = multiplicities(poset, f);
    for (const auto& [alpha, dim] : cube.vertex_dims) {
        const std::size_t expected = table.at_sign(r, alpha);
        if (dim != expected) {
            throw ValidationError("hypercube vertex " + alpha.to_string() + " in degree " +
                                  std::to_string(r) + " has Cech dimension " + std::to_string(dim) +
                                  " but poset multiplicity " + std::to_string(expected));
        }
    }

    for (const auto& alpha : all_sign_vectors(n)) {
        if (cube.vertex_dims.at(alpha) == 0) continue;
        for (int i = 0; i < n; ++i) {
            if (alpha.entry(i) != -1) continue;
            const SignVector target(n, alpha.support() & ~(std::uint32_t(1) << i));
            if (cube.vertex_dims.at(target) == 0) continue;
            cube.maps[{alpha, i}] =
                multiplication_map(ideal, r, alpha.to_multidegree(), i, f);
        }
    }
    return cube;
}

ExtensionReport extension_analysis(const MonomialIdeal& ideal, int r, const FieldSpec& f,
                                   int max_enum_vars) {
    const Hypercube cube = hypercube(ideal, r, f, max_enum_vars);
    ExtensionReport report;
    report.r = r;
    for (int j = 1; j <= cube.nvars; ++j) {
        ExtensionReport::Level level;
        level.level = j;
        for (const auto& [alpha, dim] : cube.vertex_dims) {
            if (alpha.weight() == j) level.quotient_dim += dim;
        }
        for (const auto& [key, matrix] : cube.maps) {
            if (key.first.weight() != j) continue;
            if (!reduce_matrix(matrix, f).is_zero()) {
                level.splits = false;
                level.nonzero_maps.push_back("x" + std::to_string(key.second + 1) + " on " +
                                             key.first.to_string() + " (rank " +
                                             std::to_string(rank(matrix, f)) + ")");
            }
        }
        report.levels.push_back(std::move(level));
    }
    return report;
}

CrossValidationReport cross_validate(const MonomialIdeal& ideal, const FieldSpec& f,
                                     int max_enum_vars) {
    CrossValidationReport report;
    MonomialIdeal reduced = ideal;
    if (!ideal.is_squarefree()) {
        reduced = ideal.radical();
        report.radicalized = true;
    }
    const int n = reduced.nvars();
    const IntersectionPoset poset = IntersectionPoset::from_ideal(reduced, max_enum_vars);
    const MultiplicityTable table = multiplicities(poset, f);

    // (a) multiplicities against graded dimensions, over all of Omega.
    for (int r = 0; r <= n; ++r) {
        for (const auto& alpha : all_sign_vectors(n)) {
            const std::size_t from_poset = table.at_sign(r, alpha);
            const std::size_t from_cech = graded_lc_dim(reduced, r, alpha.to_multidegree(), f);
            ++report.entries_checked;
            if (from_poset != from_cech) {
                report.pass = false;
                report.diffs.push_back("m_{" + std::to_string(r) + "," + alpha.to_string() +
                                       "} = " + std::to_string(from_poset) +
                                       " (poset) vs " + std::to_string(from_cech) + " (Cech)");
            }
        }
    }

    // (b) Betti numbers of the Alexander dual.
    const DualIdentityReport dual = verify_dual_identity(reduced, f, max_enum_vars);
    report.entries_checked += dual.entries_checked;
    if (!dual.pass) {
        report.pass = false;
        report.diffs.insert(report.diffs.end(), dual.mismatches.begin(), dual.mismatches.end());
    }

    // (c) hypercube assembly for every degree (revalidates vertices and
    // exercises the multiplication maps).
    for (int r = 0; r <= n; ++r) {
        try {
            const Hypercube cube = hypercube(reduced, r, f, max_enum_vars);
            report.entries_checked += cube.vertex_dims.size();
        } catch (const ValidationError& e) {
            report.pass = false;
            report.diffs.push_back(e.what());
        }
    }
    return report;
}

} // namespace subcyc
