#ifndef SUBCYC_MATRIX_HPP
#define SUBCYC_MATRIX_HPP

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "subcyc/field.hpp"

namespace subcyc {

// Sparse exact matrix. Entries are stored as rationals; a FieldSpec passed to
// the linear-algebra routines decides how they are interpreted (as-is over Q,
// reduced mod p over F_p). Absent entries are zero.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    void set(std::size_t r, std::size_t c, Rational value);
    Rational get(std::size_t r, std::size_t c) const;

    const std::map<std::pair<std::size_t, std::size_t>, Rational>& entries() const { return entries_; }
    std::size_t nonzero_count() const { return entries_.size(); }
    bool is_zero() const { return entries_.empty(); }

    Matrix transpose() const;
    Matrix operator*(const Matrix& rhs) const;
    std::vector<Rational> apply(const std::vector<Rational>& v) const;

    static Matrix from_columns(std::size_t rows, const std::vector<std::vector<Rational>>& cols);
    std::vector<Rational> column(std::size_t c) const;

    bool operator==(const Matrix& rhs) const {
        return rows_ == rhs.rows_ && cols_ == rhs.cols_ && entries_ == rhs.entries_;
    }

    // Row-major entry strings, for structured output.
    std::vector<std::vector<std::string>> to_string_rows() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::map<std::pair<std::size_t, std::size_t>, Rational> entries_;
};

} // namespace subcyc

#endif
