#include "subcyc/affine_subspace.hpp"

#include <sstream>

#include "subcyc/errors.hpp"

namespace subcyc {

namespace {

// RREF rows of [A | b] as dense vectors; throws if the system is inconsistent.
std::vector<std::vector<Rational>> canonical_rows(const Matrix& equations,
                                                  const std::vector<Rational>& constants) {
    const std::size_t n = equations.cols();
    Matrix aug(equations.rows(), n + 1);
    for (const auto& [rc, v] : equations.entries()) aug.set(rc.first, rc.second, v);
    for (std::size_t i = 0; i < constants.size(); ++i) {
        if (constants[i] != 0) aug.set(i, n, constants[i]);
    }
    const RrefResult r = rref(aug, FieldSpec::rationals());
    std::vector<std::vector<Rational>> rows;
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == n) {
            throw InputError("inconsistent linear system: the subspace is empty");
        }
        std::vector<Rational> row(n + 1, Rational(0));
        for (const auto& [c, v] : r.reduced_rows[i]) row[c] = v;
        rows.push_back(std::move(row));
    }
    return rows;
}

} // namespace

AffineSubspace::AffineSubspace(const Matrix& equations, const std::vector<Rational>& constants) {
    if (equations.rows() != constants.size()) {
        throw InputError("equation/constant count mismatch");
    }
    if (equations.cols() == 0) throw InputError("ambient dimension must be positive");
    ambient_dim_ = static_cast<int>(equations.cols());
    rows_ = canonical_rows(equations, constants);
}

bool AffineSubspace::contained_in(const AffineSubspace& other) const {
    if (ambient_dim_ != other.ambient_dim_) throw InputError("ambient dimension mismatch");
    // this \subseteq other iff adding other's equations to ours changes nothing:
    // the rank of the stacked augmented system equals our codim.
    const std::size_t n = static_cast<std::size_t>(ambient_dim_);
    Matrix stacked(rows_.size() + other.rows_.size(), n + 1);
    std::size_t r = 0;
    for (const auto& row : rows_) {
        for (std::size_t c = 0; c <= n; ++c) {
            if (row[c] != 0) stacked.set(r, c, row[c]);
        }
        ++r;
    }
    for (const auto& row : other.rows_) {
        for (std::size_t c = 0; c <= n; ++c) {
            if (row[c] != 0) stacked.set(r, c, row[c]);
        }
        ++r;
    }
    return rank(stacked, FieldSpec::rationals()) == rows_.size();
}

std::optional<AffineSubspace> AffineSubspace::intersect(const AffineSubspace& a,
                                                        const AffineSubspace& b) {
    if (a.ambient_dim_ != b.ambient_dim_) throw InputError("ambient dimension mismatch");
    const std::size_t n = static_cast<std::size_t>(a.ambient_dim_);
    Matrix eqs(a.rows_.size() + b.rows_.size(), n);
    std::vector<Rational> consts;
    consts.reserve(a.rows_.size() + b.rows_.size());
    std::size_t r = 0;
    for (const auto* side : {&a.rows_, &b.rows_}) {
        for (const auto& row : *side) {
            for (std::size_t c = 0; c < n; ++c) {
                if (row[c] != 0) eqs.set(r, c, row[c]);
            }
            consts.push_back(row[n]);
            ++r;
        }
    }
    try {
        return AffineSubspace(eqs, consts);
    } catch (const InputError&) {
        return std::nullopt; // empty intersection
    }
}

std::vector<std::string> AffineSubspace::equation_strings() const {
    std::vector<std::string> out;
    for (const auto& row : rows_) {
        std::ostringstream os;
        for (int c = 0; c < ambient_dim_; ++c) {
            if (c > 0) os << ' ';
            os << rational_to_string(row[c]);
        }
        os << " | " << rational_to_string(row[ambient_dim_]);
        out.push_back(os.str());
    }
    return out;
}

std::string AffineSubspace::canonical_key() const {
    std::string key;
    for (const auto& line : equation_strings()) {
        key += line;
        key += ';';
    }
    return key;
}

std::vector<AffineSubspace> parse_subspace_blocks(std::string_view text) {
    std::vector<std::vector<std::string>> blocks(1);
    std::string line;
    std::istringstream input{std::string(text)};
    while (std::getline(input, line)) {
        std::string trimmed;
        for (char ch : line) {
            if (ch == '#') break; // comment to end of line
            trimmed += ch;
        }
        const bool blank = trimmed.find_first_not_of(" \t\r") == std::string::npos;
        if (blank) {
            if (!blocks.back().empty()) blocks.emplace_back();
        } else {
            blocks.back().push_back(trimmed);
        }
    }
    if (blocks.back().empty()) blocks.pop_back();
    if (blocks.empty()) throw InputError("no subspaces in input");

    std::vector<AffineSubspace> out;
    for (const auto& block : blocks) {
        std::vector<std::vector<Rational>> coeff_rows;
        std::vector<Rational> consts;
        std::size_t n = 0;
        for (const auto& row_text : block) {
            const auto bar = row_text.find('|');
            if (bar == std::string::npos) {
                throw ParseError("subspace row '" + row_text + "' is missing '|'");
            }
            std::vector<Rational> coeffs;
            std::istringstream lhs(row_text.substr(0, bar));
            std::string tok;
            while (lhs >> tok) coeffs.push_back(parse_rational(tok));
            if (coeffs.empty()) throw ParseError("subspace row '" + row_text + "' has no coefficients");
            std::istringstream rhs(row_text.substr(bar + 1));
            if (!(rhs >> tok)) throw ParseError("subspace row '" + row_text + "' has no constant");
            consts.push_back(parse_rational(tok));
            if (rhs >> tok) throw ParseError("trailing junk in subspace row '" + row_text + "'");
            if (n == 0) n = coeffs.size();
            if (coeffs.size() != n) {
                throw ParseError("inconsistent coefficient count in subspace block");
            }
            coeff_rows.push_back(std::move(coeffs));
        }
        Matrix eqs(coeff_rows.size(), n);
        for (std::size_t r = 0; r < coeff_rows.size(); ++r) {
            for (std::size_t c = 0; c < n; ++c) {
                if (coeff_rows[r][c] != 0) eqs.set(r, c, coeff_rows[r][c]);
            }
        }
        out.emplace_back(eqs, consts);
    }
    for (const auto& s : out) {
        if (s.ambient_dim() != out.front().ambient_dim()) {
            throw InputError("subspace blocks disagree on the ambient dimension");
        }
    }
    return out;
}

} // namespace subcyc
