#ifndef SUBCYC_INVARIANTS_HPP
#define SUBCYC_INVARIANTS_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subcyc/cech.hpp"
#include "subcyc/poset.hpp"

namespace subcyc {

// Multiplicities m_{r,p}: the coefficient of the conormal to X_p in the
// characteristic cycle of the r-th local cohomology module, computed from
// the poset as the dimension of reduced homology of the strict upset complex
// in degree height(p) - r - 1. Zero entries are not stored; the sign-vector
// view returns zero for sign vectors that are not poset nodes.
struct MultiplicityTable {
    std::map<std::pair<int, std::size_t>, std::size_t> by_node;   // (r, node id)
    std::map<std::pair<int, SignVector>, std::size_t> by_sign;    // coordinate posets only

    std::size_t at_node(int r, std::size_t node) const {
        auto it = by_node.find({r, node});
        return it == by_node.end() ? 0 : it->second;
    }
    std::size_t at_sign(int r, const SignVector& alpha) const {
        auto it = by_sign.find({r, alpha});
        return it == by_sign.end() ? 0 : it->second;
    }
    std::size_t total() const {
        std::size_t t = 0;
        for (const auto& [k, v] : by_node) t += v;
        return t;
    }
};

MultiplicityTable multiplicities(const IntersectionPoset& poset, const FieldSpec& f);

// CC(H^r) = sum of m_{r,p} T*_{X_p}, one term list per cohomological degree.
// Characteristic cycles live in characteristic zero; multiplicities are
// always taken over Q here.
struct CharacteristicCycle {
    struct Term {
        std::size_t node = 0;
        int height = 0;
        std::string label; // "V(x2,x3)" or "S3"
        std::optional<SignVector> sign;
        std::size_t multiplicity = 0;
    };
    std::map<int, std::vector<Term>> by_degree; // degrees with nonempty term lists
};

CharacteristicCycle characteristic_cycle(const IntersectionPoset& poset);
CharacteristicCycle characteristic_cycle(const MonomialIdeal& ideal,
                                         int max_enum_vars = kDefaultMaxEnumVars);

enum class ComplementFlavor { real, complex };

// Reduced Betti numbers of the complement of the arrangement, from the
// multiplicities over Q: entry i sums m_{i+1,p} over nodes in the real case
// and m_{i+1-h(p),p} in the complex case. Length n (real) or 2n (complex).
std::vector<std::size_t> complement_betti(const IntersectionPoset& poset, ComplementFlavor flavor);

// The finite linear-algebra shadow of the r-th local cohomology module: one
// vector space per sign vector (dimension = graded dimension = multiplicity)
// and the multiplication maps x_i between adjacent vertices. Maps are stored
// for sources with alpha_i = -1 whenever source and target are both nonzero.
struct Hypercube {
    int r = 0;
    int nvars = 0;
    std::map<SignVector, std::size_t> vertex_dims;            // all 2^n vertices
    std::map<std::pair<SignVector, int>, Matrix> maps;        // (source, variable)

    std::size_t dim(const SignVector& alpha) const { return vertex_dims.at(alpha); }
};

// Builds the hypercube from the Cech engine and checks every vertex
// dimension against the poset multiplicities; a mismatch throws
// ValidationError, since the two routes must agree exactly.
Hypercube hypercube(const MonomialIdeal& ideal, int r,
                    const FieldSpec& f = FieldSpec::rationals(),
                    int max_enum_vars = kDefaultMaxEnumVars);

// Filtration levels of the r-th local cohomology module. Level j has
// quotient dimension sum of m_{r,alpha} over |alpha| = j; it splits off the
// lower levels exactly when every multiplication map out of a weight-j
// vertex vanishes.
struct ExtensionReport {
    struct Level {
        int level = 0;
        std::size_t quotient_dim = 0;
        bool splits = true;
        std::vector<std::string> nonzero_maps; // "x1 on -1,-1,-1 (rank 1)"
    };
    int r = 0;
    std::vector<Level> levels; // j = 1..n
};

ExtensionReport extension_analysis(const MonomialIdeal& ideal, int r,
                                   const FieldSpec& f = FieldSpec::rationals(),
                                   int max_enum_vars = kDefaultMaxEnumVars);

struct CrossValidationReport {
    bool pass = true;
    bool radicalized = false;      // input was replaced by its radical
    std::size_t entries_checked = 0;
    std::vector<std::string> diffs;
};

// The full agreement check between the three engines on one ideal:
//  (a) poset multiplicities = Cech graded dimensions on every (r, alpha);
//  (b) graded Betti numbers of the Alexander dual match the multiplicities;
//  (c) hypercube assembly is consistent for every r.
CrossValidationReport cross_validate(const MonomialIdeal& ideal, const FieldSpec& f,
                                     int max_enum_vars = kDefaultMaxEnumVars);

} // namespace subcyc

#endif
