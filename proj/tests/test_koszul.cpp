#include <doctest.h>

#include "subcyc/corpus.hpp"
#include "subcyc/koszul.hpp"

using namespace subcyc;

namespace {
const FieldSpec q = FieldSpec::rationals();
}

TEST_CASE("Betti table of (x1, x2)") {
    const auto table = graded_betti(parse_ideal("x1, x2", 2), q);
    CHECK(table.entries.size() == 3);
    CHECK(table.at(0, {1, 0}) == 1);
    CHECK(table.at(0, {0, 1}) == 1);
    CHECK(table.at(1, {1, 1}) == 1);
}

TEST_CASE("Betti table of (x1, x2*x3)") {
    const auto table = graded_betti(parse_ideal("x1, x2*x3", 3), q);
    CHECK(table.entries.size() == 3);
    CHECK(table.at(0, {1, 0, 0}) == 1);
    CHECK(table.at(0, {0, 1, 1}) == 1);
    CHECK(table.at(1, {1, 1, 1}) == 1);
}

TEST_CASE("principal ideals are free") {
    const auto table = graded_betti(parse_ideal("x1^2*x3", 3), q);
    CHECK(table.entries.size() == 1);
    CHECK(table.at(0, {2, 0, 1}) == 1);
}

TEST_CASE("beta_0 counts the minimal generators") {
    for (const auto& ideal : all_squarefree_ideals(4)) {
        const auto table = graded_betti(ideal, q);
        std::size_t gens = 0;
        for (const auto& [key, value] : table.entries) {
            if (key.first == 0) gens += value;
        }
        CHECK(gens == ideal.generators().size());
        // Squarefree ideals only have squarefree Betti degrees.
        for (const auto& [key, value] : table.entries) {
            for (int e : key.second) CHECK(e <= 1);
        }
    }
}

TEST_CASE("non-squarefree Betti numbers work directly") {
    // Tor of (x^2, xy) over k[x,y]: one linear syzygy in degree (2,1).
    const auto table = graded_betti(parse_ideal("x1^2, x1*x2", 2), q);
    CHECK(table.at(0, {2, 0}) == 1);
    CHECK(table.at(0, {1, 1}) == 1);
    CHECK(table.at(1, {2, 1}) == 1);
    CHECK(table.total() == 3);
}

TEST_CASE("characteristic semicontinuity, spot check over F_2") {
    const FieldSpec f2 = FieldSpec::prime_field(2);
    for (const auto& ideal : all_squarefree_ideals(3)) {
        const auto over_q = graded_betti(ideal, q);
        const auto over_2 = graded_betti(ideal, f2);
        for (const auto& [key, value] : over_q.entries) {
            CHECK(over_2.at(key.first, key.second) >= value);
        }
        CHECK(over_2.total() >= over_q.total());
    }
}

TEST_CASE("dual identity on worked examples") {
    const auto worked = verify_dual_identity(parse_ideal("x1*x2, x1*x3", 3), q);
    CHECK(worked.pass);
    CHECK(worked.mismatches.empty());

    const auto maximal = verify_dual_identity(parse_ideal("x1, x2, x3, x4", 4), q);
    CHECK(maximal.pass);
}

TEST_CASE("dual identity across the exhaustive n = 3 corpus") {
    for (const auto& ideal : all_squarefree_ideals(3)) {
        const auto report = verify_dual_identity(ideal, q);
        CHECK(report.pass);
        if (!report.pass) {
            for (const auto& m : report.mismatches) MESSAGE(m);
        }
    }
}
