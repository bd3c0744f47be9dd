#include "subcyc/monomial_ideal.hpp"

#include <algorithm>
#include <cctype>
#include <map>

#include "subcyc/errors.hpp"

namespace subcyc {

// --- sign vectors ------------------------------------------------------------

SignVector::SignVector(int nvars, std::uint32_t support_mask)
    : nvars_(nvars), mask_(support_mask) {
    if (nvars < 1 || nvars > kHardMaxVars) {
        throw InputError("variable count " + std::to_string(nvars) + " out of range [1, " +
                         std::to_string(kHardMaxVars) + "]");
    }
    if (nvars < 32 && (support_mask >> nvars) != 0) {
        throw InputError("sign vector support exceeds variable count");
    }
}

Multidegree SignVector::to_multidegree() const {
    Multidegree alpha(nvars_, 0);
    for (int i = 0; i < nvars_; ++i) {
        if ((mask_ >> i) & 1u) alpha[i] = -1;
    }
    return alpha;
}

std::string SignVector::to_string() const {
    return multidegree_to_string(to_multidegree());
}

SignVector omega_pattern(const Multidegree& alpha) {
    std::uint32_t mask = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) mask |= (1u << i);
    }
    return SignVector(static_cast<int>(alpha.size()), mask);
}

std::vector<SignVector> all_sign_vectors(int nvars) {
    std::vector<SignVector> out;
    out.reserve(std::size_t(1) << nvars);
    for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << nvars); ++mask) {
        out.emplace_back(nvars, mask);
    }
    return out;
}

std::string multidegree_to_string(const Multidegree& alpha) {
    std::string out;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(alpha[i]);
    }
    return out;
}

Multidegree parse_multidegree(std::string_view text, int nvars) {
    Multidegree alpha;
    std::string cur;
    auto flush = [&]() {
        if (cur.empty()) throw ParseError("empty component in multidegree '" + std::string(text) + "'");
        try {
            alpha.push_back(std::stoi(cur));
        } catch (const std::exception&) {
            throw ParseError("bad multidegree component '" + cur + "'");
        }
        cur.clear();
    };
    for (char ch : text) {
        if (ch == ',') {
            flush();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    flush();
    if (static_cast<int>(alpha.size()) != nvars) {
        throw ParseError("multidegree has " + std::to_string(alpha.size()) + " components, expected " +
                         std::to_string(nvars));
    }
    return alpha;
}

// --- monomials ---------------------------------------------------------------

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
    if (exponents_.empty()) throw InputError("monomial needs at least one variable");
    for (int e : exponents_) {
        if (e < 0) throw InputError("monomial exponents must be non-negative");
    }
}

Monomial Monomial::variable(int nvars, int index) {
    std::vector<int> exps(nvars, 0);
    exps.at(index) = 1;
    return Monomial(std::move(exps));
}

Monomial Monomial::from_support(int nvars, std::uint32_t mask) {
    std::vector<int> exps(nvars, 0);
    for (int i = 0; i < nvars; ++i) {
        if ((mask >> i) & 1u) exps[i] = 1;
    }
    return Monomial(std::move(exps));
}

bool Monomial::is_unit() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e == 0; });
}

bool Monomial::is_squarefree() const {
    return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

std::uint32_t Monomial::support() const {
    std::uint32_t mask = 0;
    for (int i = 0; i < nvars(); ++i) {
        if (exponents_[i] > 0) mask |= (1u << i);
    }
    return mask;
}

int Monomial::total_degree() const {
    int d = 0;
    for (int e : exponents_) d += e;
    return d;
}

bool Monomial::divides(const Monomial& other) const {
    for (int i = 0; i < nvars(); ++i) {
        if (exponents_[i] > other.exponents_[i]) return false;
    }
    return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
    std::vector<int> exps(exponents_.size());
    for (int i = 0; i < nvars(); ++i) exps[i] = std::max(exponents_[i], other.exponents_[i]);
    return Monomial(std::move(exps));
}

std::string Monomial::to_string() const {
    std::string out;
    for (int i = 0; i < nvars(); ++i) {
        if (exponents_[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += 'x' + std::to_string(i + 1);
        if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
    }
    return out.empty() ? "1" : out;
}

// --- ideals ------------------------------------------------------------------

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> minimal;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : gens) {
            if (!(h == g) && h.divides(g)) { redundant = true; break; }
        }
        if (!redundant) minimal.push_back(g);
    }
    return minimal;
}

} // namespace

MonomialIdeal::MonomialIdeal(int nvars, std::vector<Monomial> generators) : nvars_(nvars) {
    if (nvars < 1 || nvars > kHardMaxVars) {
        throw InputError("variable count " + std::to_string(nvars) + " out of range [1, " +
                         std::to_string(kHardMaxVars) + "]");
    }
    if (generators.empty()) throw InputError("the zero ideal is not supported");
    for (const auto& g : generators) {
        if (g.nvars() != nvars) throw InputError("generator variable count mismatch");
        if (g.is_unit()) throw InputError("the unit ideal is not supported");
    }
    gens_ = minimalize(std::move(generators));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != nvars_) throw InputError("monomial variable count mismatch");
    for (const auto& g : gens_) {
        if (g.divides(m)) return true;
    }
    return false;
}

bool MonomialIdeal::is_squarefree() const {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& g) { return g.is_squarefree(); });
}

MonomialIdeal MonomialIdeal::radical() const {
    std::vector<Monomial> supports;
    supports.reserve(gens_.size());
    for (const auto& g : gens_) supports.push_back(Monomial::from_support(nvars_, g.support()));
    return MonomialIdeal(nvars_, std::move(supports));
}

std::vector<SignVector> MonomialIdeal::minimal_primes(int max_enum_vars) const {
    if (nvars_ > max_enum_vars) {
        throw InputError("minimal_primes enumerates 2^n sign vectors; n = " + std::to_string(nvars_) +
                         " exceeds the cap " + std::to_string(max_enum_vars));
    }
    std::vector<std::uint32_t> gen_supports;
    gen_supports.reserve(gens_.size());
    for (const auto& g : gens_) gen_supports.push_back(g.support());

    auto covers = [&gen_supports](std::uint32_t mask) {
        for (std::uint32_t s : gen_supports) {
            if ((s & mask) == 0) return false;
        }
        return true;
    };

    // Covering masks are an up-set, so minimality is a local test.
    std::vector<SignVector> minimal;
    for (std::uint32_t mask = 1; mask < (std::uint32_t(1) << nvars_); ++mask) {
        if (!covers(mask)) continue;
        bool is_minimal = true;
        for (int i = 0; i < nvars_ && is_minimal; ++i) {
            if (((mask >> i) & 1u) && covers(mask & ~(1u << i))) is_minimal = false;
        }
        if (is_minimal) minimal.emplace_back(nvars_, mask);
    }
    return minimal;
}

MonomialIdeal MonomialIdeal::alexander_dual(int max_enum_vars) const {
    if (!is_squarefree()) {
        throw InputError("alexander_dual requires a squarefree ideal; apply radical first");
    }
    if (nvars_ > max_enum_vars) {
        throw InputError("alexander_dual enumerates 2^n subsets; n = " + std::to_string(nvars_) +
                         " exceeds the cap " + std::to_string(max_enum_vars));
    }
    const std::uint32_t full = (std::uint32_t(1) << nvars_) - 1;
    std::vector<Monomial> dual_gens;
    for (std::uint32_t s = 0; s <= full; ++s) {
        if (!contains(Monomial::from_support(nvars_, full & ~s))) {
            if (s == 0) throw InputError("alexander_dual: ideal does not contain the full product");
            dual_gens.push_back(Monomial::from_support(nvars_, s));
        }
    }
    return MonomialIdeal(nvars_, std::move(dual_gens));
}

std::optional<SignVector> MonomialIdeal::sign_of() const {
    std::uint32_t mask = 0;
    for (const auto& g : gens_) {
        if (g.total_degree() != 1) return std::nullopt;
        mask |= g.support();
    }
    return SignVector(nvars_, mask);
}

MonomialIdeal MonomialIdeal::face_ideal(const SignVector& alpha) {
    if (alpha.empty_support()) {
        throw InputError("face ideal of the zero sign vector is the zero ideal");
    }
    std::vector<Monomial> gens;
    for (int i = 0; i < alpha.nvars(); ++i) {
        if (alpha.entry(i) == -1) gens.push_back(Monomial::variable(alpha.nvars(), i));
    }
    return MonomialIdeal(alpha.nvars(), std::move(gens));
}

MonomialIdeal MonomialIdeal::permuted(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != nvars_) throw InputError("permutation size mismatch");
    std::vector<Monomial> gens;
    gens.reserve(gens_.size());
    for (const auto& g : gens_) {
        std::vector<int> exps(nvars_, 0);
        for (int i = 0; i < nvars_; ++i) exps.at(perm[i]) = g.exponent(i);
        gens.emplace_back(std::move(exps));
    }
    return MonomialIdeal(nvars_, std::move(gens));
}

std::string MonomialIdeal::to_string() const {
    std::string out;
    for (const auto& g : gens_) {
        if (!out.empty()) out += ", ";
        out += g.to_string();
    }
    return out;
}

// --- parsing -----------------------------------------------------------------

namespace {

struct ParsedMonomial {
    std::map<int, int> exps; // 1-based variable index -> exponent
    bool is_one = false;
};

ParsedMonomial parse_monomial_text(std::string_view text) {
    ParsedMonomial result;
    std::size_t pos = 0;
    auto fail = [&](const std::string& what) {
        throw ParseError(what + " at position " + std::to_string(pos) + " in monomial '" +
                         std::string(text) + "'");
    };
    auto read_number = [&]() -> long {
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return std::stol(std::string(text.substr(start, pos - start)));
    };
    bool expect_factor = true;
    while (pos < text.size()) {
        if (expect_factor) {
            if (text[pos] == 'x' || text[pos] == 'X') {
                ++pos;
                long index = read_number();
                if (index < 1) fail("variable index must be at least 1");
                long exp = 1;
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    exp = read_number();
                }
                result.exps[static_cast<int>(index)] += static_cast<int>(exp);
            } else if (text[pos] == '1') {
                ++pos;
                result.is_one = true;
            } else {
                fail("expected a factor (xK, xK^E or 1)");
            }
            expect_factor = false;
        } else {
            if (text[pos] != '*') fail("expected '*'");
            ++pos;
            expect_factor = true;
        }
    }
    if (expect_factor) fail("dangling '*'");
    return result;
}

} // namespace

MonomialIdeal parse_ideal(std::string_view text, std::optional<int> nvars) {
    std::vector<std::string> pieces;
    std::string cur;
    for (char ch : text) {
        if (ch == ',') {
            pieces.push_back(cur);
            cur.clear();
        } else if (!std::isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    pieces.push_back(cur);

    std::vector<ParsedMonomial> parsed;
    int max_index = 0;
    for (const auto& piece : pieces) {
        if (piece.empty()) {
            if (pieces.size() == 1) throw InputError("empty input: the zero ideal is not supported");
            throw ParseError("empty generator in ideal '" + std::string(text) + "'");
        }
        ParsedMonomial pm = parse_monomial_text(piece);
        if (!pm.exps.empty()) {
            max_index = std::max(max_index, pm.exps.rbegin()->first);
        }
        parsed.push_back(std::move(pm));
    }

    const int n = nvars.value_or(max_index);
    if (n < 1) throw InputError("cannot infer a variable count from '" + std::string(text) + "'");
    if (max_index > n) {
        throw InputError("variable x" + std::to_string(max_index) + " exceeds nvars = " + std::to_string(n));
    }

    std::vector<Monomial> gens;
    for (const auto& pm : parsed) {
        std::vector<int> exps(n, 0);
        for (const auto& [idx, e] : pm.exps) exps[idx - 1] = e;
        gens.emplace_back(std::move(exps)); // a unit generator trips the constructor
    }
    return MonomialIdeal(n, std::move(gens));
}

} // namespace subcyc
