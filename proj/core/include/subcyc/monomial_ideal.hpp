#ifndef SUBCYC_MONOMIAL_IDEAL_HPP
#define SUBCYC_MONOMIAL_IDEAL_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subcyc/sign_vector.hpp"

namespace subcyc {

// Number of variables accepted by the 2^n enumerations (minimal primes,
// Alexander duality, per-sign-vector scans). Callers may raise it explicitly;
// the hard ceiling is the 32-bit support mask.
inline constexpr int kDefaultMaxEnumVars = 16;
inline constexpr int kHardMaxVars = 30;

class Monomial {
public:
    explicit Monomial(std::vector<int> exponents);
    static Monomial variable(int nvars, int index); // x_{index}
    static Monomial from_support(int nvars, std::uint32_t mask);

    int nvars() const { return static_cast<int>(exponents_.size()); }
    int exponent(int i) const { return exponents_[i]; }
    const std::vector<int>& exponents() const { return exponents_; }

    bool is_unit() const;       // all exponents zero
    bool is_squarefree() const;
    std::uint32_t support() const;
    int total_degree() const;

    bool divides(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;

    std::string to_string() const; // "x1^2*x3", "1" for the unit

    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.exponents_ == b.exponents_;
    }
    // Descending lexicographic on exponent vectors; gives the printing order.
    friend bool operator<(const Monomial& a, const Monomial& b) {
        return a.exponents_ > b.exponents_;
    }

private:
    std::vector<int> exponents_;
};

// A monomial ideal, held by its minimal generating set (an antichain under
// divisibility). The unit ideal and the zero ideal are rejected.
class MonomialIdeal {
public:
    MonomialIdeal(int nvars, std::vector<Monomial> generators);

    int nvars() const { return nvars_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool contains(const Monomial& m) const;
    bool is_squarefree() const;

    // Squarefree ideal on the generator supports; defines the same arrangement.
    MonomialIdeal radical() const;

    // Minimal face ideals containing this ideal, i.e. the irreducible
    // components of the arrangement it defines. Expects a squarefree ideal
    // (callers radicalize first). Enumerates all 2^n sign vectors.
    std::vector<SignVector> minimal_primes(int max_enum_vars = kDefaultMaxEnumVars) const;

    // Alexander dual of a squarefree ideal: generated by prod_{i in S} x_i
    // over the subsets S whose complementary squarefree monomial lies
    // outside the ideal. Rejects non-squarefree input.
    MonomialIdeal alexander_dual(int max_enum_vars = kDefaultMaxEnumVars) const;

    // If every generator is a single variable, the sign vector with -1 at
    // exactly those variables; otherwise nullopt. Inverse of face_ideal.
    std::optional<SignVector> sign_of() const;
    static MonomialIdeal face_ideal(const SignVector& alpha);

    // Apply a permutation of the variables: new variable perm[i] carries the
    // exponent of old variable i.
    MonomialIdeal permuted(const std::vector<int>& perm) const;

    std::string to_string() const; // parseable by parse_ideal

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.nvars_ == b.nvars_ && a.gens_ == b.gens_;
    }

private:
    int nvars_;
    std::vector<Monomial> gens_;
};

// Grammar: comma-separated monomials; a monomial is "1" or factors xK / xK^E
// joined by '*'; whitespace is ignored. Variables are x1..xn. With no nvars
// given, n is inferred from the highest variable index.
MonomialIdeal parse_ideal(std::string_view text, std::optional<int> nvars = std::nullopt);

} // namespace subcyc

#endif
