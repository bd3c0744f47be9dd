#include <doctest.h>

#include "subcyc/corpus.hpp"
#include "subcyc/errors.hpp"
#include "subcyc/invariants.hpp"

using namespace subcyc;

namespace {
const FieldSpec q = FieldSpec::rationals();

MultiplicityTable table_of(const std::string& text, int n) {
    return multiplicities(IntersectionPoset::from_ideal(parse_ideal(text, n)), q);
}
} // namespace

TEST_CASE("multiplicities of the maximal ideal") {
    for (int n = 1; n <= 5; ++n) {
        std::string text;
        for (int i = 1; i <= n; ++i) text += (i > 1 ? ", x" : "x") + std::to_string(i);
        const auto table = table_of(text, n);
        CHECK(table.by_node.size() == 1);
        CHECK(table.at_sign(n, SignVector(n, (1u << n) - 1)) == 1);
    }
}

TEST_CASE("multiplicities of the worked example") {
    const auto table = table_of("x1*x2, x1*x3", 3);
    CHECK(table.at_sign(1, SignVector(3, 0b001)) == 1); // V(x1)
    CHECK(table.at_sign(2, SignVector(3, 0b110)) == 1); // V(x2,x3)
    CHECK(table.at_sign(2, SignVector(3, 0b111)) == 1); // origin
    CHECK(table.at_sign(3, SignVector(3, 0b111)) == 0);
    CHECK(table.total() == 3);
    // Reindexed view: zero off the poset.
    CHECK(table.at_sign(1, SignVector(3, 0b010)) == 0);
}

TEST_CASE("multiplicities of the three axes") {
    const auto table = table_of("x1*x2, x2*x3, x1*x3", 3);
    CHECK(table.at_sign(2, SignVector(3, 0b011)) == 1);
    CHECK(table.at_sign(2, SignVector(3, 0b101)) == 1);
    CHECK(table.at_sign(2, SignVector(3, 0b110)) == 1);
    CHECK(table.at_sign(2, SignVector(3, 0b111)) == 2); // three points, reduced H_0
    CHECK(table.at_sign(3, SignVector(3, 0b111)) == 0);
    CHECK(table.total() == 5);
}

TEST_CASE("characteristic cycles of the worked examples") {
    const auto cc = characteristic_cycle(parse_ideal("x1*x2, x1*x3", 3));
    REQUIRE(cc.by_degree.count(1) == 1);
    REQUIRE(cc.by_degree.count(2) == 1);
    CHECK(cc.by_degree.at(1).size() == 1);
    CHECK(cc.by_degree.at(1)[0].label == "V(x1)");
    CHECK(cc.by_degree.at(2).size() == 2);
    CHECK(cc.by_degree.at(2)[0].label == "V(x2,x3)");
    CHECK(cc.by_degree.at(2)[1].label == "V(x1,x2,x3)");

    // Principal squarefree ideal in the plane: all three conormals in H^1.
    const auto plane = characteristic_cycle(parse_ideal("x1*x2", 2));
    REQUIRE(plane.by_degree.count(1) == 1);
    CHECK(plane.by_degree.at(1).size() == 3);
    for (const auto& term : plane.by_degree.at(1)) CHECK(term.multiplicity == 1);

    const auto origin = characteristic_cycle(parse_ideal("x1, x2", 2));
    REQUIRE(origin.by_degree.size() == 1);
    CHECK(origin.by_degree.at(2).size() == 1);
    CHECK(origin.by_degree.at(2)[0].label == "V(x1,x2)");
}

TEST_CASE("complement Betti numbers") {
    const auto hyperplane = IntersectionPoset::from_ideal(parse_ideal("x1", 1));
    CHECK(complement_betti(hyperplane, ComplementFlavor::real) == std::vector<std::size_t>{1});
    CHECK(complement_betti(hyperplane, ComplementFlavor::complex) ==
          std::vector<std::size_t>{0, 1});

    const auto axes = IntersectionPoset::from_ideal(parse_ideal("x1*x2, x2*x3, x1*x3", 3));
    CHECK(complement_betti(axes, ComplementFlavor::real) == std::vector<std::size_t>{0, 5, 0});

    // Complex flavor counts every multiplicity exactly once.
    for (const auto& ideal : all_squarefree_ideals(3)) {
        const auto poset = IntersectionPoset::from_ideal(ideal);
        const auto betti = complement_betti(poset, ComplementFlavor::complex);
        std::size_t total = 0;
        for (std::size_t b : betti) total += b;
        CHECK(total == multiplicities(poset, q).total());
        CHECK(complement_betti(poset, ComplementFlavor::real).size() == 3);
        CHECK(betti.size() == 6);
    }
}

TEST_CASE("hypercube of a face ideal has a single vertex and no maps") {
    const SignVector alpha(3, 0b101);
    const auto cube = hypercube(MonomialIdeal::face_ideal(alpha), 2, q);
    for (const auto& [beta, dim] : cube.vertex_dims) {
        CHECK(dim == (beta == alpha ? 1 : 0));
    }
    CHECK(cube.maps.empty());
}

TEST_CASE("hypercube of the worked example") {
    const auto cube = hypercube(parse_ideal("x1*x2, x1*x3", 3), 2, q);
    CHECK(cube.dim(SignVector(3, 0b110)) == 1);
    CHECK(cube.dim(SignVector(3, 0b111)) == 1);
    std::size_t nonzero = 0;
    for (const auto& [alpha, dim] : cube.vertex_dims) {
        if (dim > 0) ++nonzero;
    }
    CHECK(nonzero == 2);
    REQUIRE(cube.maps.size() == 1);
    const auto& [key, matrix] = *cube.maps.begin();
    CHECK(key.first == SignVector(3, 0b111));
    CHECK(key.second == 0);
    CHECK(rank(matrix, q) == 1);

    const auto cube1 = hypercube(parse_ideal("x1*x2, x1*x3", 3), 1, q);
    std::size_t nonzero1 = 0;
    for (const auto& [alpha, dim] : cube1.vertex_dims) {
        if (dim > 0) ++nonzero1;
    }
    CHECK(nonzero1 == 1);
    CHECK(cube1.dim(SignVector(3, 0b001)) == 1);
    CHECK(cube1.maps.empty());
}

TEST_CASE("hypercube maps commute across the corpus") {
    for (const auto& ideal : all_squarefree_ideals(3)) {
        for (int r = 0; r <= 3; ++r) {
            const auto cube = hypercube(ideal, r, q);
            for (const auto& alpha : all_sign_vectors(3)) {
                for (int i = 0; i < 3; ++i) {
                    for (int j = i + 1; j < 3; ++j) {
                        if (alpha.entry(i) != -1 || alpha.entry(j) != -1) continue;
                        const auto mi = multiplication_map(ideal, r, alpha.to_multidegree(), i, q);
                        const auto mj = multiplication_map(ideal, r, alpha.to_multidegree(), j, q);
                        Multidegree via_i = alpha.to_multidegree();
                        via_i[i] += 1;
                        Multidegree via_j = alpha.to_multidegree();
                        via_j[j] += 1;
                        const auto then_j = multiplication_map(ideal, r, via_i, j, q);
                        const auto then_i = multiplication_map(ideal, r, via_j, i, q);
                        CHECK(then_j * mi == then_i * mj);
                    }
                }
            }
        }
    }
}

TEST_CASE("extension analysis of the worked examples") {
    const auto report = extension_analysis(parse_ideal("x1*x2, x1*x3", 3), 2, q);
    REQUIRE(report.levels.size() == 3);
    CHECK(report.levels[0].quotient_dim == 0);
    CHECK(report.levels[0].splits);
    CHECK(report.levels[1].quotient_dim == 1);
    CHECK(report.levels[1].splits);
    CHECK(report.levels[2].quotient_dim == 1);
    CHECK_FALSE(report.levels[2].splits);
    REQUIRE(report.levels[2].nonzero_maps.size() == 1);

    // Face ideals split at every level.
    const auto face = extension_analysis(MonomialIdeal::face_ideal(SignVector(3, 0b011)), 2, q);
    for (const auto& level : face.levels) CHECK(level.splits);

    // Principal plane curve: level 2 glues onto level 1.
    const auto plane = extension_analysis(parse_ideal("x1*x2", 2), 1, q);
    REQUIRE(plane.levels.size() == 2);
    CHECK(plane.levels[0].quotient_dim == 2);
    CHECK(plane.levels[0].splits);
    CHECK(plane.levels[1].quotient_dim == 1);
    CHECK_FALSE(plane.levels[1].splits);
    CHECK(plane.levels[1].nonzero_maps.size() == 2);
}

TEST_CASE("splitting verdicts are permutation equivariant") {
    const std::vector<std::vector<int>> perms3 = {{1, 2, 0}, {2, 1, 0}, {0, 2, 1}};
    for (const auto& ideal : all_squarefree_ideals(3)) {
        for (const auto& perm : perms3) {
            const auto image = ideal.permuted(perm);
            for (int r = 0; r <= 3; ++r) {
                const auto lhs = extension_analysis(ideal, r, q);
                const auto rhs = extension_analysis(image, r, q);
                REQUIRE(lhs.levels.size() == rhs.levels.size());
                for (std::size_t j = 0; j < lhs.levels.size(); ++j) {
                    CHECK(lhs.levels[j].quotient_dim == rhs.levels[j].quotient_dim);
                    CHECK(lhs.levels[j].splits == rhs.levels[j].splits);
                }
            }
        }
    }
}

TEST_CASE("multiplicities are permutation equivariant") {
    const std::vector<int> perm = {2, 0, 1};
    for (const auto& ideal : all_squarefree_ideals(3)) {
        const auto base = multiplicities(IntersectionPoset::from_ideal(ideal), q);
        const auto image = multiplicities(IntersectionPoset::from_ideal(ideal.permuted(perm)), q);
        for (int r = 0; r <= 3; ++r) {
            for (const auto& alpha : all_sign_vectors(3)) {
                std::uint32_t mapped = 0;
                for (int i = 0; i < 3; ++i) {
                    if (alpha.entry(i) == -1) mapped |= (1u << perm[i]);
                }
                CHECK(base.at_sign(r, alpha) == image.at_sign(r, SignVector(3, mapped)));
            }
        }
        CHECK(complement_betti(IntersectionPoset::from_ideal(ideal), ComplementFlavor::real) ==
              complement_betti(IntersectionPoset::from_ideal(ideal.permuted(perm)),
                               ComplementFlavor::real));
    }
}

TEST_CASE("cross validation passes on the corpus and is radical-invariant") {
    const auto direct = cross_validate(parse_ideal("x1*x2, x1*x3", 3), q);
    CHECK(direct.pass);
    CHECK_FALSE(direct.radicalized);

    const auto fat = cross_validate(parse_ideal("x1^2*x2, x1*x3^3", 3), q);
    CHECK(fat.pass);
    CHECK(fat.radicalized);
    const auto thin = cross_validate(parse_ideal("x1*x2, x1*x3", 3), q);
    CHECK(fat.entries_checked == thin.entries_checked);

    for (const auto& ideal : all_squarefree_ideals(3)) {
        CHECK(cross_validate(ideal, q).pass);
    }
}

TEST_CASE("cross validation over a prime field") {
    const FieldSpec f5 = FieldSpec::prime_field(5);
    for (const auto& ideal : all_squarefree_ideals(3)) {
        CHECK(cross_validate(ideal, f5).pass);
    }
}
