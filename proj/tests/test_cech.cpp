#include <doctest.h>

#include "subcyc/cech.hpp"
#include "subcyc/corpus.hpp"
#include "subcyc/errors.hpp"

using namespace subcyc;

namespace {
const FieldSpec q = FieldSpec::rationals();
}

TEST_CASE("fiber terms of the worked example") {
    const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
    // At (-1,-1,-1) only the full localization survives: 0 -> 0 -> k.
    const CechFiber all_neg(ideal, {-1, -1, -1});
    CHECK(all_neg.term_count(0) == 0);
    CHECK(all_neg.term_count(1) == 0);
    CHECK(all_neg.term_count(2) == 1);
    // At (-1,0,0) both single localizations are alive.
    const CechFiber fiber(ideal, {-1, 0, 0});
    CHECK(fiber.term_count(0) == 0);
    CHECK(fiber.term_count(1) == 2);
    CHECK(fiber.term_count(2) == 1);
    const Matrix d1 = fiber.differential(1);
    CHECK(rank(d1, q) == 1);
}

TEST_CASE("differentials compose to zero across the corpus") {
    for (const auto& ideal : all_squarefree_ideals(3)) {
        for (const auto& alpha : all_sign_vectors(3)) {
            const CechFiber fiber(ideal, alpha.to_multidegree());
            for (int k = 0; k < fiber.generator_count(); ++k) {
                CHECK((fiber.differential(k + 1) * fiber.differential(k)).is_zero());
            }
        }
    }
}

TEST_CASE("graded dimensions of the worked example") {
    const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
    CHECK(graded_lc_dim(ideal, 1, {-1, 0, 0}, q) == 1);
    CHECK(graded_lc_dim(ideal, 2, {0, -1, -1}, q) == 1);
    CHECK(graded_lc_dim(ideal, 2, {-1, -1, -1}, q) == 1);
    for (const auto& alpha : all_sign_vectors(3)) {
        CHECK(graded_lc_dim(ideal, 3, alpha.to_multidegree(), q) == 0);
    }
}

TEST_CASE("face ideals realize the graded dichotomy") {
    for (int n = 2; n <= 4; ++n) {
        for (const auto& alpha : all_sign_vectors(n)) {
            if (alpha.empty_support()) continue;
            const auto face = MonomialIdeal::face_ideal(alpha);
            for (const auto& beta : all_sign_vectors(n)) {
                const std::size_t expected = (beta == alpha) ? 1 : 0;
                CHECK(graded_lc_dim(face, alpha.weight(), beta.to_multidegree(), q) == expected);
            }
        }
    }
}

TEST_CASE("non-negative degrees carry no local cohomology") {
    const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
    for (int r = 0; r <= 3; ++r) {
        CHECK(graded_lc_dim(ideal, r, {0, 0, 0}, q) == 0);
        CHECK(graded_lc_dim(ideal, r, {2, 1, 3}, q) == 0);
    }
}

TEST_CASE("fiber Euler characteristic matches the homology alternating sum") {
    for (const auto& ideal : all_squarefree_ideals(3)) {
        for (const auto& alpha : all_sign_vectors(3)) {
            const CechFiber fiber(ideal, alpha.to_multidegree());
            long long chi = 0;
            for (int r = 0; r <= fiber.generator_count(); ++r) {
                const long long h =
                    static_cast<long long>(graded_lc_dim(ideal, r, alpha.to_multidegree(), q));
                chi += (r % 2 == 0) ? h : -h;
            }
            CHECK(chi == fiber.euler_characteristic());
        }
    }
}

TEST_CASE("multiplication maps of the worked example") {
    const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
    const Matrix m = multiplication_map(ideal, 2, {-1, -1, -1}, 0, q);
    REQUIRE(m.rows() == 1);
    REQUIRE(m.cols() == 1);
    CHECK(rank(m, q) == 1);

    // Zero source: the empty matrix.
    const auto principal = parse_ideal("x1", 2);
    const Matrix empty = multiplication_map(principal, 1, {-1, -1}, 1, q);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
}

TEST_CASE("principal ideal multiplication maps carry the extension data") {
    const auto ideal = parse_ideal("x1*x2", 2);
    // Vertices (-1,0), (0,-1), (-1,-1) are all one-dimensional in H^1.
    CHECK(graded_lc_dim(ideal, 1, {-1, 0}, q) == 1);
    CHECK(graded_lc_dim(ideal, 1, {0, -1}, q) == 1);
    CHECK(graded_lc_dim(ideal, 1, {-1, -1}, q) == 1);
    // Both maps out of the deep vertex are isomorphisms.
    CHECK(rank(multiplication_map(ideal, 1, {-1, -1}, 0, q), q) == 1);
    CHECK(rank(multiplication_map(ideal, 1, {-1, -1}, 1, q), q) == 1);
}

TEST_CASE("straightness survey") {
    const auto worked = parse_ideal("x1*x2, x1*x3", 3);
    const auto report = straightness_check(worked, 2, 2, q);
    CHECK(report.pass);
    CHECK(report.violations.empty());
    CHECK(report.degrees_checked == 125);

    // Top local cohomology of the maximal ideal: dimension 1 exactly on the
    // strictly negative orthant pattern.
    const auto maximal = parse_ideal("x1, x2, x3", 3);
    CHECK(straightness_check(maximal, 3, 2, q).pass);
    CHECK(graded_lc_dim(maximal, 3, {-1, -2, -1}, q) == 1);
    CHECK(graded_lc_dim(maximal, 3, {-1, 0, -1}, q) == 0);

    // Degrees above the number of generators vanish identically.
    CHECK(straightness_check(maximal, 4, 2, q).pass);
    CHECK(straightness_check(maximal, 7, 1, q).pass);
}

TEST_CASE("graded dimensions are field independent on the corpus") {
    const FieldSpec f2 = FieldSpec::prime_field(2);
    for (const auto& ideal : all_squarefree_ideals(3)) {
        for (int r = 0; r <= 3; ++r) {
            for (const auto& alpha : all_sign_vectors(3)) {
                CHECK(graded_lc_dim(ideal, r, alpha.to_multidegree(), q) ==
                      graded_lc_dim(ideal, r, alpha.to_multidegree(), f2));
            }
        }
    }
}

TEST_CASE("generator cap is enforced") {
    CHECK_THROWS_AS(graded_lc_dim(parse_ideal("x1", 1), -1, {-1}, q), InputError);
}
