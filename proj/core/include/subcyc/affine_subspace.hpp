#ifndef SUBCYC_AFFINE_SUBSPACE_HPP
#define SUBCYC_AFFINE_SUBSPACE_HPP

#include <string>
#include <string_view>
#include <vector>

#include "subcyc/linalg.hpp"

namespace subcyc {

// A nonempty affine subspace of Q^n given by a consistent linear system
// A x = b. Instances are kept in a canonical form (the RREF of the augmented
// matrix [A | b]), so equal subspaces compare equal entrywise.
class AffineSubspace {
public:
    AffineSubspace(const Matrix& equations, const std::vector<Rational>& constants);

    int ambient_dim() const { return ambient_dim_; }
    int codim() const { return static_cast<int>(rows_.size()); } // rank of A

    // Solution-set containment; both sides must share the ambient dimension.
    bool contained_in(const AffineSubspace& other) const;

    // Intersection, or nullopt when empty.
    static std::optional<AffineSubspace> intersect(const AffineSubspace& a, const AffineSubspace& b);

    // Canonical equations, one row per string "c1 c2 ... cn | b".
    std::vector<std::string> equation_strings() const;
    std::string canonical_key() const;

    friend bool operator==(const AffineSubspace& a, const AffineSubspace& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.rows_ == b.rows_;
    }

private:
    AffineSubspace() = default;

    int ambient_dim_ = 0;
    // RREF rows of [A | b]; column ambient_dim_ holds the constant.
    std::vector<std::vector<Rational>> rows_;
};

// Input format: one subspace per blank-line-separated block; each line is
// "a1 a2 ... an | b" with exact rational entries like "-3/2".
std::vector<AffineSubspace> parse_subspace_blocks(std::string_view text);

} // namespace subcyc

#endif
