#include "subcyc/matrix.hpp"

#include "subcyc/errors.hpp"

namespace subcyc {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, Rational(1));
    return m;
}

void Matrix::set(std::size_t r, std::size_t c, Rational value) {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    if (value == 0) {
        entries_.erase({r, c});
    } else {
        entries_[{r, c}] = std::move(value);
    }
}

Rational Matrix::get(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw InternalError("matrix index out of range");
    auto it = entries_.find({r, c});
    return it == entries_.end() ? Rational(0) : it->second;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (const auto& [rc, v] : entries_) t.set(rc.second, rc.first, v);
    return t;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
    if (cols_ != rhs.rows_) throw InternalError("matrix product shape mismatch");
    Matrix out(rows_, rhs.cols_);
    std::map<std::pair<std::size_t, std::size_t>, Rational> acc;
    for (const auto& [rc, v] : entries_) {
        const auto [i, k] = rc;
        auto lo = rhs.entries_.lower_bound({k, 0});
        auto hi = rhs.entries_.upper_bound({k, rhs.cols_});
        for (auto it = lo; it != hi; ++it) {
            acc[{i, it->first.second}] += v * it->second;
        }
    }
    for (auto& [rc, v] : acc) {
        if (v != 0) out.set(rc.first, rc.second, std::move(v));
    }
    return out;
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
    if (v.size() != cols_) throw InternalError("matrix apply shape mismatch");
    std::vector<Rational> out(rows_, Rational(0));
    for (const auto& [rc, e] : entries_) {
        if (v[rc.second] != 0) out[rc.first] += e * v[rc.second];
    }
    return out;
}

Matrix Matrix::from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        if (cols[c].size() != rows) throw InternalError("column length mismatch");
        for (std::size_t r = 0; r < rows; ++r) {
            if (cols[c][r] != 0) m.set(r, c, cols[c][r]);
        }
    }
    return m;
}

std::vector<Rational> Matrix::column(std::size_t c) const {
    std::vector<Rational> out(rows_, Rational(0));
    for (std::size_t r = 0; r < rows_; ++r) {
        auto it = entries_.find({r, c});
        if (it != entries_.end()) out[r] = it->second;
    }
    return out;
}

std::vector<std::vector<std::string>> Matrix::to_string_rows() const {
    std::vector<std::vector<std::string>> out(rows_, std::vector<std::string>(cols_, "0"));
    for (const auto& [rc, v] : entries_) {
        out[rc.first][rc.second] = rational_to_string(v);
    }
    return out;
}

} // namespace subcyc
