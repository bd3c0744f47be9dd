#ifndef SUBCYC_LINALG_HPP
#define SUBCYC_LINALG_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "subcyc/field.hpp"
#include "subcyc/matrix.hpp"

namespace subcyc {

// Reduced row echelon form over the chosen field. RREF is unique for a given
// matrix and field, so everything derived from it (ranks, kernel bases,
// homology bases) is canonical. Pivot search is leftmost column first,
// lowest row index first. Entries of prime-field results are the canonical
// representatives in [0, p).
struct RrefResult {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> pivot_cols;                 // ascending
    std::vector<std::map<std::size_t, Rational>> reduced_rows; // one per pivot, leading 1

    std::size_t rank() const { return pivot_cols.size(); }
};

RrefResult rref(const Matrix& m, const FieldSpec& f);

std::size_t rank(const Matrix& m, const FieldSpec& f);

// Canonical kernel basis, one vector per non-pivot column of the RREF,
// ordered by ascending free column.
std::vector<std::vector<Rational>> kernel_basis(const Matrix& m, const FieldSpec& f);

// One solution of A x = b over f, or nullopt if the system is inconsistent.
// The solution is the canonical one with all free variables zero.
std::optional<std::vector<Rational>> solve(const Matrix& a, const std::vector<Rational>& b,
                                           const FieldSpec& f);

// Entrywise canonical form over f (identity over Q, mod-p reduction over F_p).
Matrix reduce_matrix(const Matrix& m, const FieldSpec& f);

// dim ker(d_bot) - rank(d_top) for a three-term complex  . --d_top--> M --d_bot--> .
std::size_t homology_dim(const Matrix& d_top, const Matrix& d_bot, const FieldSpec& f);

// Matrix of the map induced on middle homology by a chain map between two
// three-term complexes, in the canonical homology bases (a subset of the
// canonical kernel basis, chosen greedily modulo boundaries). Only the rank
// and zero pattern of the result are contractual; the bases themselves are an
// internal convention. Throws InternalError if the differentials do not
// compose to zero or the chain map fails to send cycles to cycles and
// boundaries to boundaries.
Matrix induced_map_on_homology(const Matrix& d_in_top, const Matrix& d_in_bot,
                               const Matrix& d_out_top, const Matrix& d_out_bot,
                               const Matrix& chain_map, const FieldSpec& f);

} // namespace subcyc

#endif
