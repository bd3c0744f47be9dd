#include <doctest.h>

#include <algorithm>
#include <set>

#include "subcyc/corpus.hpp"
#include "subcyc/errors.hpp"
#include "subcyc/monomial_ideal.hpp"

using namespace subcyc;

TEST_CASE("parsing removes divisibility-redundant generators") {
    const auto ideal = parse_ideal("x1*x2, x1*x2*x3", 3);
    REQUIRE(ideal.generators().size() == 1);
    CHECK(ideal.generators()[0].to_string() == "x1*x2");
}

TEST_CASE("parsing exponents and inferring nvars") {
    const auto ideal = parse_ideal("x1^2*x2");
    CHECK(ideal.nvars() == 2);
    CHECK(ideal.to_string() == "x1^2*x2");
    CHECK(parse_ideal(" x2 ").nvars() == 2);
}

TEST_CASE("unit and zero ideals are rejected") {
    CHECK_THROWS_AS(parse_ideal("1", 2), InputError);
    CHECK_THROWS_AS(parse_ideal("x1^0", 1), InputError);
    CHECK_THROWS_AS(parse_ideal("", 2), InputError);
    CHECK_THROWS_AS(parse_ideal("x1, 1", 2), InputError);
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_ideal("x1**x2", 2), ParseError);
    CHECK_THROWS_AS(parse_ideal("y1", 2), ParseError);
    CHECK_THROWS_AS(parse_ideal("x1*", 2), ParseError);
    CHECK_THROWS_AS(parse_ideal("x0", 2), ParseError);
    CHECK_THROWS_AS(parse_ideal("x3", 2), InputError); // index above nvars
}

TEST_CASE("radical") {
    CHECK(parse_ideal("x1^2*x2, x2^3", 2).radical().to_string() == "x2");
    const auto sqfree = parse_ideal("x1*x2, x1*x3", 3);
    CHECK(sqfree.radical() == sqfree);
    CHECK(parse_ideal("x1^3", 1).radical().to_string() == "x1");
    // Idempotence across the n = 3 corpus.
    for (const auto& ideal : all_squarefree_ideals(3)) {
        CHECK(ideal.radical() == ideal);
    }
}

TEST_CASE("membership") {
    const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
    CHECK_FALSE(ideal.contains(Monomial({0, 1, 1}))); // x2*x3
    CHECK(ideal.contains(Monomial({1, 1, 1})));
    CHECK(parse_ideal("x1", 2).contains(Monomial({2, 1})));
    CHECK_FALSE(parse_ideal("x1*x2", 2).contains(Monomial({1, 0})));
}

TEST_CASE("minimal primes of worked examples") {
    const auto primes = parse_ideal("x1*x2, x1*x3", 3).minimal_primes();
    REQUIRE(primes.size() == 2);
    CHECK(primes[0].support() == 0b001); // (x1)
    CHECK(primes[1].support() == 0b110); // (x2,x3)

    const auto point = parse_ideal("x1, x2, x3", 3).minimal_primes();
    REQUIRE(point.size() == 1);
    CHECK(point[0].support() == 0b111);

    // Triangle edge ideal: the minimal vertex covers are the three pairs.
    const auto triangle = parse_ideal("x1*x2, x2*x3, x1*x3", 3).minimal_primes();
    REQUIRE(triangle.size() == 3);
    std::set<std::uint32_t> supports;
    for (const auto& p : triangle) supports.insert(p.support());
    CHECK(supports == std::set<std::uint32_t>{0b011, 0b101, 0b110});
}

TEST_CASE("minimal primes form an antichain and are radical-invariant") {
    for (const auto& ideal : all_squarefree_ideals(4)) {
        const auto primes = ideal.minimal_primes();
        for (std::size_t i = 0; i < primes.size(); ++i) {
            for (std::size_t j = 0; j < primes.size(); ++j) {
                if (i != j) CHECK_FALSE(primes[i].supports(primes[j]));
            }
        }
    }
    const auto fat = parse_ideal("x1^2*x2, x1*x3^3", 3);
    const auto a = fat.radical().minimal_primes();
    const auto b = fat.minimal_primes(); // support-based test works unreduced too
    CHECK(a == b);
}

TEST_CASE("Alexander dual worked examples") {
    CHECK(parse_ideal("x1*x2, x1*x3", 3).alexander_dual().to_string() == "x1, x2*x3");
    CHECK(parse_ideal("x1, x2, x3", 3).alexander_dual().to_string() == "x1*x2*x3");
    CHECK_THROWS_AS(parse_ideal("x1^2", 1).alexander_dual(), InputError);
}

// Independent route: dual generators are the supports of the minimal primes.
static MonomialIdeal dual_via_minimal_primes(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& prime : ideal.minimal_primes()) {
        gens.push_back(Monomial::from_support(ideal.nvars(), prime.support()));
    }
    return MonomialIdeal(ideal.nvars(), std::move(gens));
}

TEST_CASE("dual: involution and the two-route equality, exhaustively") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& ideal : all_squarefree_ideals(n)) {
            const auto dual = ideal.alexander_dual();
            CHECK(dual.alexander_dual() == ideal);
            CHECK(dual == dual_via_minimal_primes(ideal));
        }
    }
}

TEST_CASE("face ideals and sign vectors are mutually inverse") {
    const SignVector alpha(3, 0b101);
    const auto ideal = MonomialIdeal::face_ideal(alpha);
    CHECK(ideal.to_string() == "x1, x3");
    REQUIRE(ideal.sign_of().has_value());
    CHECK(*ideal.sign_of() == alpha);

    for (int n = 1; n <= 5; ++n) {
        for (const auto& a : all_sign_vectors(n)) {
            if (a.empty_support()) {
                CHECK_THROWS_AS(MonomialIdeal::face_ideal(a), InputError);
            } else {
                CHECK(*MonomialIdeal::face_ideal(a).sign_of() == a);
            }
        }
    }
    CHECK_FALSE(parse_ideal("x1*x2", 2).sign_of().has_value());
}

TEST_CASE("corpus sizes match the antichain counts") {
    CHECK(all_squarefree_ideals(1).size() == 1);
    CHECK(all_squarefree_ideals(2).size() == 4);
    CHECK(all_squarefree_ideals(3).size() == 18);
    CHECK(all_squarefree_ideals(4).size() == 166);
}

TEST_CASE("random corpus is deterministic per seed") {
    const auto a = random_squarefree_ideals(6, 10, 42);
    const auto b = random_squarefree_ideals(6, 10, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    const auto c = random_squarefree_ideals(6, 10, 43);
    bool all_equal = true;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!(a[i] == c[i])) all_equal = false;
    }
    CHECK_FALSE(all_equal);
}

TEST_CASE("multidegree parsing") {
    CHECK(parse_multidegree("-1,0,-1", 3) == Multidegree{-1, 0, -1});
    CHECK(parse_multidegree(" 2 , -3 ", 2) == Multidegree{2, -3});
    CHECK_THROWS_AS(parse_multidegree("1,2", 3), ParseError);
    CHECK_THROWS_AS(parse_multidegree("1,,2", 3), ParseError);
}
