#include "subcyc/field.hpp"

#include <charconv>

#include "subcyc/errors.hpp"

namespace subcyc {

namespace {

std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod_u64(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1) result = mulmod_u64(result, base, m);
        base = mulmod_u64(base, base, m);
        exp >>= 1;
    }
    return result;
}

} // namespace

// Deterministic Miller-Rabin; the listed bases decide primality for all n < 2^64.
bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod_u64(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod_u64(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint64_t p) {
    if (!is_prime_u64(p)) {
        throw InputError("field characteristic must be prime, got " + std::to_string(p));
    }
    FieldSpec f;
    f.kind = Kind::prime_field;
    f.characteristic = p;
    return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
    if (text == "q" || text == "Q") return rationals();
    constexpr std::string_view prefix = "fp:";
    if (text.substr(0, prefix.size()) == prefix) {
        std::string_view num = text.substr(prefix.size());
        std::uint64_t p = 0;
        auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), p);
        if (ec != std::errc{} || ptr != num.data() + num.size()) {
            throw ParseError("cannot parse field '" + std::string(text) + "' (expected q or fp:<prime>)");
        }
        return prime_field(p);
    }
    throw ParseError("unknown field '" + std::string(text) + "' (expected q or fp:<prime>)");
}

std::string FieldSpec::to_string() const {
    if (is_rationals()) return "q";
    return "fp:" + std::to_string(characteristic);
}

Rational reduce_scalar(const Rational& value, const FieldSpec& f) {
    if (f.is_rationals()) return value;
    const Int p(f.characteristic);
    Int num = numerator(value) % p;
    if (num < 0) num += p;
    Int den = denominator(value) % p;
    if (den < 0) den += p;
    if (den == 0) {
        throw InputError("denominator divisible by " + std::to_string(f.characteristic) +
                         " cannot be reduced into F_" + std::to_string(f.characteristic));
    }
    // den^(p-2) mod p inverts den (Fermat).
    Int inv = powm(den, p - 2, p);
    return Rational((num * inv) % p);
}

Rational parse_rational(std::string_view text) {
    auto parse_int = [](std::string_view s) -> Int {
        if (s.empty()) throw ParseError("empty integer literal");
        std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
        if (start == s.size()) throw ParseError("bare sign is not a number");
        for (std::size_t i = start; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') {
                throw ParseError("bad integer literal '" + std::string(s) + "'");
            }
        }
        return Int(std::string(s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    Int num = parse_int(text.substr(0, slash));
    Int den = parse_int(text.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
}

std::string rational_to_string(const Rational& value) {
    return value.str();
}

} // namespace subcyc
