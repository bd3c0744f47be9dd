#include "subcyc/linalg.hpp"

#include <algorithm>

#include "subcyc/errors.hpp"

namespace subcyc {

namespace {

using SparseIntRow = std::map<std::size_t, Int>;

constexpr std::size_t kDenseLimit = 64;

// --- elimination over Q ----------------------------------------------------
//
// Rows are scaled to integer vectors up front (scaling a row does not change
// the row space, the rank or the kernel). Elimination is fraction-free:
// row_i <- pivot * row_i - row_i[col] * pivot_row, followed by stripping the
// integer content of the row. All matrices seen here have small entries, so
// this keeps coefficients tiny without any rational arithmetic in the loop.

std::vector<SparseIntRow> integer_rows(const Matrix& m) {
    std::vector<SparseIntRow> rows(m.rows());
    std::vector<Int> scale(m.rows(), Int(1));
    for (const auto& [rc, v] : m.entries()) {
        scale[rc.first] = lcm(scale[rc.first], denominator(v));
    }
    for (const auto& [rc, v] : m.entries()) {
        Int value = numerator(v) * (scale[rc.first] / denominator(v));
        if (value != 0) rows[rc.first][rc.second] = value;
    }
    return rows;
}

void strip_content(SparseIntRow& row) {
    Int g(0);
    for (const auto& [c, v] : row) g = gcd(g, v);
    if (g > 1) {
        for (auto& [c, v] : row) v /= g;
    }
}

struct EchelonQ {
    std::vector<SparseIntRow> pivot_rows; // pivot column ascending
    std::vector<std::size_t> pivot_cols;
};

EchelonQ forward_eliminate_q_sparse(std::vector<SparseIntRow> rows, std::size_t cols) {
    EchelonQ out;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pr = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && rows[i].count(col)) { pr = i; break; }
        }
        if (pr == rows.size()) continue;
        used[pr] = true;
        const Int pivot = rows[pr].at(col);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i]) continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end()) continue;
            const Int coef = it->second;
            SparseIntRow next;
            auto a = rows[i].begin();
            auto b = rows[pr].begin();
            while (a != rows[i].end() || b != rows[pr].end()) {
                if (b == rows[pr].end() || (a != rows[i].end() && a->first < b->first)) {
                    next[a->first] = pivot * a->second;
                    ++a;
                } else if (a == rows[i].end() || b->first < a->first) {
                    next[b->first] = -coef * b->second;
                    ++b;
                } else {
                    Int v = pivot * a->second - coef * b->second;
                    if (v != 0) next[a->first] = std::move(v);
                    ++a; ++b;
                }
            }
            strip_content(next);
            rows[i] = std::move(next);
        }
        out.pivot_cols.push_back(col);
        out.pivot_rows.push_back(std::move(rows[pr]));
    }
    return out;
}

// Dense variant for small matrices, same pivot rule, same output shape.
EchelonQ forward_eliminate_q_dense(const std::vector<SparseIntRow>& sparse_rows, std::size_t cols) {
    std::vector<std::vector<Int>> rows(sparse_rows.size(), std::vector<Int>(cols, Int(0)));
    for (std::size_t i = 0; i < sparse_rows.size(); ++i) {
        for (const auto& [c, v] : sparse_rows[i]) rows[i][c] = v;
    }
    EchelonQ out;
    std::vector<bool> used(rows.size(), false);
    for (std::size_t col = 0; col < cols; ++col) {
        std::size_t pr = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && rows[i][col] != 0) { pr = i; break; }
        }
        if (pr == rows.size()) continue;
        used[pr] = true;
        const Int pivot = rows[pr][col];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (used[i] || rows[i][col] == 0) continue;
            const Int coef = rows[i][col];
            Int g(0);
            for (std::size_t c = col; c < cols; ++c) {
                rows[i][c] = pivot * rows[i][c] - coef * rows[pr][c];
                g = gcd(g, rows[i][c]);
            }
            if (g > 1) {
                for (std::size_t c = col; c < cols; ++c) rows[i][c] /= g;
            }
        }
        SparseIntRow prow;
        for (std::size_t c = col; c < cols; ++c) {
            if (rows[pr][c] != 0) prow[c] = rows[pr][c];
        }
        out.pivot_cols.push_back(col);
        out.pivot_rows.push_back(std::move(prow));
    }
    return out;
}

EchelonQ forward_eliminate_q(const Matrix& m) {
    auto rows = integer_rows(m);
    if (m.rows() < kDenseLimit && m.cols() < kDenseLimit) {
        return forward_eliminate_q_dense(rows, m.cols());
    }
    return forward_eliminate_q_sparse(std::move(rows), m.cols());
}

RrefResult rref_q(const Matrix& m) {
    EchelonQ ech = forward_eliminate_q(m);
    RrefResult out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.pivot_cols = ech.pivot_cols;
    out.reduced_rows.resize(ech.pivot_rows.size());
    for (std::size_t i = 0; i < ech.pivot_rows.size(); ++i) {
        const Rational pivot(ech.pivot_rows[i].at(ech.pivot_cols[i]));
        for (const auto& [c, v] : ech.pivot_rows[i]) {
            out.reduced_rows[i][c] = Rational(v) / pivot;
        }
    }
    // Clear above each pivot, bottom pivot first.
    for (std::size_t i = out.reduced_rows.size(); i-- > 0;) {
        const std::size_t pc = out.pivot_cols[i];
        for (std::size_t j = 0; j < i; ++j) {
            auto it = out.reduced_rows[j].find(pc);
            if (it == out.reduced_rows[j].end()) continue;
            const Rational coef = it->second;
            for (const auto& [c, v] : out.reduced_rows[i]) {
                Rational next(0);
                auto jt = out.reduced_rows[j].find(c);
                if (jt != out.reduced_rows[j].end()) next = jt->second;
                next -= coef * v;
                if (next == 0) {
                    if (jt != out.reduced_rows[j].end()) out.reduced_rows[j].erase(jt);
                } else {
                    out.reduced_rows[j][c] = std::move(next);
                }
            }
        }
    }
    return out;
}

// --- elimination over F_p ---------------------------------------------------

using SparseModRow = std::map<std::size_t, std::uint64_t>;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) r = mulmod(r, base, p);
        base = mulmod(base, base, p);
        exp >>= 1;
    }
    return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::vector<SparseModRow> mod_rows(const Matrix& m, std::uint64_t p) {
    std::vector<SparseModRow> rows(m.rows());
    FieldSpec f = FieldSpec::prime_field(p);
    for (const auto& [rc, v] : m.entries()) {
        Rational r = reduce_scalar(v, f);
        const std::uint64_t value = static_cast<std::uint64_t>(numerator(r));
        if (value != 0) rows[rc.first][rc.second] = value;
    }
    return rows;
}

RrefResult rref_p(const Matrix& m, std::uint64_t p) {
    auto rows = mod_rows(m, p);
    std::vector<bool> used(rows.size(), false);
    std::vector<std::size_t> pivot_cols;
    std::vector<std::size_t> pivot_row_of;
    for (std::size_t col = 0; col < m.cols(); ++col) {
        std::size_t pr = rows.size();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (!used[i] && rows[i].count(col)) { pr = i; break; }
        }
        if (pr == rows.size()) continue;
        used[pr] = true;
        const std::uint64_t inv = invmod(rows[pr].at(col), p);
        for (auto& [c, v] : rows[pr]) v = mulmod(v, inv, p);
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == pr) continue;
            auto it = rows[i].find(col);
            if (it == rows[i].end()) continue;
            const std::uint64_t coef = it->second;
            for (const auto& [c, v] : rows[pr]) {
                const std::uint64_t sub = mulmod(coef, v, p);
                auto jt = rows[i].find(c);
                std::uint64_t cur = jt == rows[i].end() ? 0 : jt->second;
                cur = (cur + p - sub) % p;
                if (cur == 0) {
                    if (jt != rows[i].end()) rows[i].erase(jt);
                } else {
                    rows[i][c] = cur;
                }
            }
        }
        pivot_cols.push_back(col);
        pivot_row_of.push_back(pr);
    }
    RrefResult out;
    out.rows = m.rows();
    out.cols = m.cols();
    out.pivot_cols = pivot_cols;
    out.reduced_rows.resize(pivot_cols.size());
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
        for (const auto& [c, v] : rows[pivot_row_of[i]]) {
            out.reduced_rows[i][c] = Rational(v);
        }
    }
    return out;
}

bool vector_is_zero(const std::vector<Rational>& v, const FieldSpec& f) {
    for (const auto& x : v) {
        if (reduce_scalar(x, f) != 0) return false;
    }
    return true;
}

} // namespace

RrefResult rref(const Matrix& m, const FieldSpec& f) {
    if (f.is_rationals()) return rref_q(m);
    return rref_p(m, f.characteristic);
}

std::size_t rank(const Matrix& m, const FieldSpec& f) {
    if (f.is_rationals()) return forward_eliminate_q(m).pivot_cols.size();
    return rref_p(m, f.characteristic).rank();
}

std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, const FieldSpec& f) {
    const RrefResult r = rref(m, f);
    std::vector<bool> is_pivot(m.cols(), false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;
    std::vector<std::vector<Rational>> basis;
    for (std::size_t free_col = 0; free_col < m.cols(); ++free_col) {
        if (is_pivot[free_col]) continue;
        std::vector<Rational> v(m.cols(), Rational(0));
        v[free_col] = Rational(1);
        for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
            auto it = r.reduced_rows[i].find(free_col);
            if (it != r.reduced_rows[i].end()) {
                v[r.pivot_cols[i]] = reduce_scalar(-it->second, f);
            }
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b,
                                           const FieldSpec& f) {
    if (b.size() != a.rows()) throw InternalError("solve: rhs length mismatch");
    Matrix aug(a.rows(), a.cols() + 1);
    for (const auto& [rc, v] : a.entries()) aug.set(rc.first, rc.second, v);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i] != 0) aug.set(i, a.cols(), b[i]);
    }
    const RrefResult r = rref(aug, f);
    std::vector<Rational> x(a.cols(), Rational(0));
    for (std::size_t i = 0; i < r.pivot_cols.size(); ++i) {
        if (r.pivot_cols[i] == a.cols()) return std::nullopt; // pivot in the rhs column
        auto it = r.reduced_rows[i].find(a.cols());
        if (it != r.reduced_rows[i].end()) x[r.pivot_cols[i]] = it->second;
    }
    return x;
}

Matrix reduce_matrix(const Matrix& m, const FieldSpec& f) {
    if (f.is_rationals()) return m;
    Matrix out(m.rows(), m.cols());
    for (const auto& [rc, v] : m.entries()) {
        Rational r = reduce_scalar(v, f);
        if (r != 0) out.set(rc.first, rc.second, std::move(r));
    }
    return out;
}

std::size_t homology_dim(const Matrix& d_top, const Matrix& d_bot, const FieldSpec& f) {
    if (d_top.rows() != d_bot.cols()) {
        throw InternalError("homology_dim: middle term dimension mismatch");
    }
    const std::size_t middle = d_bot.cols();
    const std::size_t r_bot = rank(d_bot, f);
    const std::size_t r_top = rank(d_top, f);
    if (middle < r_bot + r_top) throw InternalError("homology_dim: not a complex");
    return middle - r_bot - r_top;
}

Matrix induced_map_on_homology(const Matrix& d_in_top, const Matrix& d_in_bot,
                               const Matrix& d_out_top, const Matrix& d_out_bot,
                               const Matrix& chain_map, const FieldSpec& f) {
    const std::size_t mid_in = d_in_bot.cols();
    const std::size_t mid_out = d_out_bot.cols();
    if (d_in_top.rows() != mid_in || d_out_top.rows() != mid_out ||
        chain_map.cols() != mid_in || chain_map.rows() != mid_out) {
        throw InternalError("induced_map_on_homology: shape mismatch");
    }
    if (!reduce_matrix(d_in_bot * d_in_top, f).is_zero() ||
        !reduce_matrix(d_out_bot * d_out_top, f).is_zero()) {
        throw InternalError("induced_map_on_homology: differentials do not compose to zero");
    }

    // Canonical homology basis: pivot columns of [boundaries | kernel basis]
    // that land in the kernel block.
    auto pick_basis = [&f](const Matrix& d_top, const Matrix& d_bot)
        -> std::pair<Matrix, std::size_t> {
        const auto kernel = kernel_basis(d_bot, f);
        const std::size_t mid = d_bot.cols();
        Matrix combined(mid, d_top.cols() + kernel.size());
        for (const auto& [rc, v] : d_top.entries()) combined.set(rc.first, rc.second, v);
        for (std::size_t k = 0; k < kernel.size(); ++k) {
            for (std::size_t r = 0; r < mid; ++r) {
                if (kernel[k][r] != 0) combined.set(r, d_top.cols() + k, kernel[k][r]);
            }
        }
        const RrefResult rr = rref(combined, f);
        std::vector<std::vector<Rational>> selected;
        for (std::size_t c : rr.pivot_cols) {
            if (c >= d_top.cols()) selected.push_back(kernel[c - d_top.cols()]);
        }
        Matrix sel = Matrix::from_columns(mid, selected);
        return {std::move(sel), selected.size()};
    };

    auto [h_in, dim_in] = pick_basis(d_in_top, d_in_bot);
    auto [h_out, dim_out] = pick_basis(d_out_top, d_out_bot);

    // Chain map must send cycles to cycles and boundaries to boundaries;
    // that is exactly what makes the induced map well defined.
    for (const auto& kv : kernel_basis(d_in_bot, f)) {
        if (!vector_is_zero(d_out_bot.apply(chain_map.apply(kv)), f)) {
            throw InternalError("induced_map_on_homology: chain map does not preserve cycles");
        }
    }
    for (std::size_t c = 0; c < d_in_top.cols(); ++c) {
        const auto image = chain_map.apply(d_in_top.column(c));
        if (!solve(d_out_top, image, f)) {
            throw InternalError("induced_map_on_homology: chain map does not preserve boundaries");
        }
    }

    // Express chain_map(h_j) in the output homology basis: solve against
    // [out boundaries | out homology basis]; the coefficient of a homology
    // class is unique even though the boundary part is not.
    Matrix coords(mid_out, d_out_top.cols() + dim_out);
    for (const auto& [rc, v] : d_out_top.entries()) coords.set(rc.first, rc.second, v);
    for (const auto& [rc, v] : h_out.entries()) coords.set(rc.first, d_out_top.cols() + rc.second, v);

    Matrix result(dim_out, dim_in);
    for (std::size_t j = 0; j < dim_in; ++j) {
        const auto w = chain_map.apply(h_in.column(j));
        const auto u = solve(coords, w, f);
        if (!u) throw InternalError("induced_map_on_homology: image is not a cycle");
        for (std::size_t i = 0; i < dim_out; ++i) {
            Rational v = reduce_scalar((*u)[d_out_top.cols() + i], f);
            if (v != 0) result.set(i, j, std::move(v));
        }
    }
    return result;
}

} // namespace subcyc
