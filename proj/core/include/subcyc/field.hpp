#ifndef SUBCYC_FIELD_HPP
#define SUBCYC_FIELD_HPP

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subcyc {

// Exact scalar types used throughout. All arithmetic is arbitrary precision;
// there is no floating point anywhere in the library.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime_u64(std::uint64_t n);

// Coefficient field: the rationals or a prime field F_p.
struct FieldSpec {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    std::uint64_t characteristic = 0; // prime p, meaningful for prime_field only

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec prime_field(std::uint64_t p); // throws InputError unless p is prime

    // "q" or "fp:<prime>", the CLI syntax.
    static FieldSpec parse(std::string_view text);
    std::string to_string() const;

    bool is_rationals() const { return kind == Kind::rationals; }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && (a.kind == Kind::rationals || a.characteristic == b.characteristic);
    }
};

// Canonical representative of a scalar in the given field. Over Q this is the
// value itself; over F_p it is the integer in [0, p) congruent to num/den
// (throws InputError if the denominator vanishes mod p).
Rational reduce_scalar(const Rational& value, const FieldSpec& f);

// Parse an exact rational written as "p", "-p" or "p/q".
Rational parse_rational(std::string_view text);

std::string rational_to_string(const Rational& value);

} // namespace subcyc

#endif
