#ifndef SUBCYC_CECH_HPP
#define SUBCYC_CECH_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "subcyc/linalg.hpp"
#include "subcyc/monomial_ideal.hpp"

namespace subcyc {

// Cap on the number of minimal generators: the fiber enumerates 2^s subsets.
inline constexpr int kMaxCechGenerators = 20;

// The multidegree-alpha slice of the Cech complex on the minimal generators
// g_1..g_s of an ideal:
//
//   0 -> R -> (+) R_{g_j} -> (+) R_{g_j g_k} -> ... -> R_{g_1...g_s} -> 0.
//
// Every localization is multigraded with each graded piece of dimension 0 or
// 1, so the slice is a complex of based vector spaces: level k lists the
// k-subsets S whose localization is nonzero in degree alpha, which happens
// exactly when alpha_i >= 0 for every i outside the union of the supports of
// {g_j : j in S}. Differentials carry the alternating inclusion signs.
// Cohomology of the slice is the degree-alpha piece of local cohomology.
class CechFiber {
public:
    CechFiber(const MonomialIdeal& ideal, const Multidegree& alpha);

    int generator_count() const { return num_generators_; }
    std::size_t term_count(int level) const;
    const std::vector<std::uint32_t>& terms(int level) const;

    // d^k : C^k -> C^{k+1}; rows index level k+1, columns level k.
    // Well-defined for all k (empty matrix outside [0, s]).
    Matrix differential(int level) const;

    // sum_k (-1)^k #terms(k); equals sum_r (-1)^r dim H^r.
    long long euler_characteristic() const;

private:
    int num_generators_ = 0;
    std::vector<std::vector<std::uint32_t>> on_; // per level, ascending subset masks
};

// dim_k H^r_I(R)_alpha, computed from the degree-alpha Cech fiber.
std::size_t graded_lc_dim(const MonomialIdeal& ideal, int r, const Multidegree& alpha,
                          const FieldSpec& f);

// Matrix of multiplication by x_i from H^r_I(R)_alpha to H^r_I(R)_{alpha+e_i},
// in the canonical homology bases (only rank and zero pattern are
// contractual). The chain map is the identity-or-zero on each localization.
Matrix multiplication_map(const MonomialIdeal& ideal, int r, const Multidegree& alpha,
                          int var, const FieldSpec& f);

struct StraightnessReport {
    bool pass = true;
    std::size_t degrees_checked = 0;
    std::size_t maps_checked = 0;
    std::vector<std::string> violations;
};

// Exhaustive check over [-box, box]^n that graded dimensions depend only on
// the sign pattern of the degree and that every multiplication map
// x_i : M_alpha -> M_{alpha+e_i} with alpha_i != -1 is bijective. A failure
// indicates an implementation bug, not a property of the input.
StraightnessReport straightness_check(const MonomialIdeal& ideal, int r, int box,
                                      const FieldSpec& f);

} // namespace subcyc

#endif
