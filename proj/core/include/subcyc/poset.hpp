#ifndef SUBCYC_POSET_HPP
#define SUBCYC_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "subcyc/affine_subspace.hpp"
#include "subcyc/monomial_ideal.hpp"
#include "subcyc/simplicial_complex.hpp"

namespace subcyc {

// One intersection of irreducible components of the arrangement. The height
// is the codimension of the subspace (the weight of the sign vector in the
// coordinate case).
struct PosetNode {
    std::size_t id = 0;
    int height = 0;
    std::optional<SignVector> sign;       // coordinate arrangements
    std::optional<AffineSubspace> affine; // general arrangements

    // "V(x1,x3)" in the coordinate case, "S<id>" otherwise.
    std::string label() const;
};

// The intersection poset of an arrangement: one node per distinct nonempty
// intersection of irreducible components, ordered by inclusion of subspaces.
//
// Order convention: p < q means X_p is strictly contained in X_q, so smaller
// elements are smaller subspaces. In the coordinate case that reads
// support(p) strictly contains support(q). Consequently the strict upset
// K(>p) collects the subspaces strictly containing X_p; an irreducible
// component has empty strict upset. The convention is pinned by the exact
// identity between multiplicities and graded local cohomology dimensions:
// for the ideal (x1*x2) the hyperplane node V(x1) must contribute in
// cohomological degree 1 with an empty upset complex, which forces this
// direction of the order.
class IntersectionPoset {
public:
    // Closure of the minimal primes of (the radical of) the ideal under
    // pairwise sums, i.e. of the component subspaces under intersection.
    static IntersectionPoset from_ideal(const MonomialIdeal& ideal,
                                        int max_enum_vars = kDefaultMaxEnumVars);

    // Closure of the given components under pairwise intersection, dropping
    // empty intersections. Inputs contained in other inputs are discarded and
    // reported through `warnings`.
    static IntersectionPoset from_subspaces(const std::vector<AffineSubspace>& components,
                                            std::vector<std::string>* warnings = nullptr);

    std::size_t size() const { return nodes_.size(); }
    const PosetNode& node(std::size_t i) const { return nodes_.at(i); }
    const std::vector<PosetNode>& nodes() const { return nodes_; }

    bool less(std::size_t p, std::size_t q) const { return less_.at(p).at(q); }

    std::vector<std::size_t> maximal_node_ids() const; // the irreducible components
    std::optional<std::size_t> find_sign(const SignVector& alpha) const;

    // Order complex of { q : q > p }: vertices are those nodes, simplices are
    // the chains among them. Possibly the empty complex.
    SimplicialComplex strict_upset_complex(std::size_t p) const;

    bool is_coordinate() const { return coordinate_; }
    int ambient_dim() const { return ambient_dim_; }

private:
    IntersectionPoset() = default;
    void finish(); // derive the order matrix sanity checks

    bool coordinate_ = true;
    int ambient_dim_ = 0;
    std::vector<PosetNode> nodes_;
    std::vector<std::vector<bool>> less_; // less_[p][q] : X_p strictly inside X_q
};

} // namespace subcyc

#endif
