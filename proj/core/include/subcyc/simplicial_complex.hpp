#ifndef SUBCYC_SIMPLICIAL_COMPLEX_HPP
#define SUBCYC_SIMPLICIAL_COMPLEX_HPP

#include <map>
#include <vector>

#include "subcyc/linalg.hpp"

namespace subcyc {

// A finite simplicial complex given by its facets (an antichain of vertex
// sets); the complex is their downward closure. The empty complex (no facets)
// carries only the empty simplex; its reduced homology is one-dimensional in
// degree -1, which is the convention the multiplicity formulas rely on.
class SimplicialComplex {
public:
    SimplicialComplex() = default; // the empty complex
    SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets);

    static SimplicialComplex empty() { return SimplicialComplex(); }

    bool is_empty() const { return facets_.empty(); }
    int vertex_count() const { return vertex_count_; }
    const std::vector<std::vector<int>>& facets() const { return facets_; }

    // Dimension of the complex; -1 for the empty complex.
    int dim() const;

    // All d-simplices as sorted vertex lists, in lexicographic order.
    std::vector<std::vector<int>> simplices(int d) const;

    // Euler characteristic of the augmented chain complex,
    // sum_{d >= -1} (-1)^d #(d-simplices); equals -1 for the empty complex.
    long long reduced_euler_characteristic() const;

private:
    int vertex_count_ = 0;
    std::vector<std::vector<int>> facets_;
};

// Matrix of the boundary map from d-simplices to (d-1)-simplices with the
// alternating sign convention on lexicographically sorted simplices. d = 0
// gives the augmentation row onto the empty simplex, so homology computed
// from these matrices is reduced.
Matrix boundary_matrix(const SimplicialComplex& k, int d);

// Reduced homology dimensions over f, for degrees -1 and up; only the
// nonzero dimensions are present in the result.
std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& k, const FieldSpec& f);

} // namespace subcyc

#endif
