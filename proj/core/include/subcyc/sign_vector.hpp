#ifndef SUBCYC_SIGN_VECTOR_HPP
#define SUBCYC_SIGN_VECTOR_HPP

#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subcyc {

// A multidegree in Z^n.
using Multidegree = std::vector<int>;

std::string multidegree_to_string(const Multidegree& alpha); // "-1,0,-1"
Multidegree parse_multidegree(std::string_view text, int nvars);

// An element of {-1,0}^n, stored as the set of coordinates equal to -1.
// One object plays three roles: the face ideal generated by {x_i : i in
// support}, the coordinate subspace it cuts out, and the multidegree with
// -1 on the support.
class SignVector {
public:
    SignVector(int nvars, std::uint32_t support_mask);

    int nvars() const { return nvars_; }
    std::uint32_t support() const { return mask_; }
    int entry(int i) const { return (mask_ >> i) & 1u ? -1 : 0; }
    int weight() const { return std::popcount(mask_); } // |alpha| = number of -1 entries
    bool empty_support() const { return mask_ == 0; }

    // Support containment: true iff every -1 of other is a -1 of *this.
    bool supports(const SignVector& other) const {
        return (mask_ & other.mask_) == other.mask_;
    }

    Multidegree to_multidegree() const;
    std::string to_string() const; // "-1,0,-1"

    friend bool operator==(const SignVector& a, const SignVector& b) {
        return a.nvars_ == b.nvars_ && a.mask_ == b.mask_;
    }
    friend bool operator<(const SignVector& a, const SignVector& b) {
        if (a.nvars_ != b.nvars_) return a.nvars_ < b.nvars_;
        return a.mask_ < b.mask_;
    }

private:
    int nvars_;
    std::uint32_t mask_;
};

// The sign pattern of an arbitrary multidegree: -1 where alpha_i < 0, else 0.
SignVector omega_pattern(const Multidegree& alpha);

// All 2^n sign vectors, ordered by ascending support mask.
std::vector<SignVector> all_sign_vectors(int nvars);

} // namespace subcyc

#endif
