#include <doctest.h>

#include "subcyc/corpus.hpp"
#include "subcyc/poset.hpp"
#include "subcyc/simplicial_complex.hpp"

using namespace subcyc;

namespace {

struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
};

SimplicialComplex random_complex(SplitMix64& rng, int vertices, int facets) {
    std::vector<std::vector<int>> fs;
    for (int i = 0; i < facets; ++i) {
        std::vector<int> f;
        const int size = rng.range(1, std::min(vertices, 4));
        for (int j = 0; j < size; ++j) f.push_back(rng.range(0, vertices - 1));
        fs.push_back(std::move(f));
    }
    return SimplicialComplex(vertices, std::move(fs));
}

long long homology_euler(const std::map<int, std::size_t>& dims) {
    long long chi = 0;
    for (const auto& [d, count] : dims) {
        const long long sign = ((d % 2 + 2) % 2 == 0) ? 1 : -1;
        chi += sign * static_cast<long long>(count);
    }
    return chi;
}

} // namespace

TEST_CASE("boundary conventions") {
    const SimplicialComplex vertex(1, {{0}});
    const Matrix aug = boundary_matrix(vertex, 0);
    CHECK(aug.rows() == 1);
    CHECK(aug.cols() == 1);
    CHECK(aug.get(0, 0) == 1);

    const SimplicialComplex edge(2, {{0, 1}});
    const Matrix d1 = boundary_matrix(edge, 1);
    REQUIRE(d1.rows() == 2);
    REQUIRE(d1.cols() == 1);
    CHECK(d1.get(0, 0) == -1); // face {1} drops vertex 0 with sign +, {0} gets -
    CHECK(d1.get(1, 0) == 1);
}

TEST_CASE("boundary of boundary vanishes on random complexes") {
    SplitMix64 rng{99};
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialComplex k = random_complex(rng, rng.range(2, 7), rng.range(1, 5));
        for (int d = 1; d <= k.dim(); ++d) {
            CHECK((boundary_matrix(k, d - 1) * boundary_matrix(k, d)).is_zero());
        }
    }
}

TEST_CASE("reduced homology conventions") {
    const FieldSpec q = FieldSpec::rationals();
    const auto empty = reduced_homology_dims(SimplicialComplex::empty(), q);
    CHECK(empty == std::map<int, std::size_t>{{-1, 1}});

    const SimplicialComplex two_points(2, {{0}, {1}});
    CHECK(reduced_homology_dims(two_points, q) == std::map<int, std::size_t>{{0, 1}});

    const SimplicialComplex hollow_triangle(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(reduced_homology_dims(hollow_triangle, q) == std::map<int, std::size_t>{{1, 1}});

    const SimplicialComplex filled_triangle(3, {{0, 1, 2}});
    CHECK(reduced_homology_dims(filled_triangle, q).empty());
}

TEST_CASE("Euler characteristic identity on random complexes") {
    SplitMix64 rng{2024};
    const FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 40; ++trial) {
        const SimplicialComplex k = random_complex(rng, rng.range(2, 7), rng.range(1, 6));
        CHECK(k.reduced_euler_characteristic() == homology_euler(reduced_homology_dims(k, q)));
    }
}

TEST_CASE("cones are acyclic") {
    SplitMix64 rng{7};
    const FieldSpec q = FieldSpec::rationals();
    for (int trial = 0; trial < 30; ++trial) {
        const int vertices = rng.range(2, 6);
        const SimplicialComplex base = random_complex(rng, vertices, rng.range(1, 4));
        std::vector<std::vector<int>> coned;
        for (auto f : base.facets()) {
            f.push_back(vertices); // apex in every facet
            coned.push_back(std::move(f));
        }
        const SimplicialComplex cone(vertices + 1, std::move(coned));
        CHECK(reduced_homology_dims(cone, q).empty());
    }
}

TEST_CASE("homology over Q and F_p agree on small order complexes") {
    // Order complexes of the n <= 4 corpus posets have no torsion at this
    // scale; any disagreement would still have to satisfy dim_Fp >= dim_Q.
    const FieldSpec q = FieldSpec::rationals();
    for (int n = 3; n <= 4; ++n) {
        for (const auto& ideal : all_squarefree_ideals(n)) {
            const auto poset = IntersectionPoset::from_ideal(ideal);
            for (std::size_t p = 0; p < poset.size(); ++p) {
                const auto k = poset.strict_upset_complex(p);
                const auto over_q = reduced_homology_dims(k, q);
                for (std::uint64_t prime : {2ull, 3ull}) {
                    const auto over_p = reduced_homology_dims(k, FieldSpec::prime_field(prime));
                    for (const auto& [d, count] : over_q) {
                        auto it = over_p.find(d);
                        const std::size_t count_p = it == over_p.end() ? 0 : it->second;
                        CHECK(count_p >= count);
                    }
                    CHECK(over_p == over_q);
                }
            }
        }
    }
}
