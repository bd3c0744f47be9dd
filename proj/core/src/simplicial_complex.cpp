#include "subcyc/simplicial_complex.hpp"

#include <algorithm>
#include <set>

#include "subcyc/errors.hpp"

namespace subcyc {

SimplicialComplex::SimplicialComplex(int vertex_count, std::vector<std::vector<int>> facets)
    : vertex_count_(vertex_count) {
    std::set<std::vector<int>> cleaned;
    for (auto f : facets) {
        std::sort(f.begin(), f.end());
        f.erase(std::unique(f.begin(), f.end()), f.end());
        if (f.empty()) continue;
        for (int v : f) {
            if (v < 0 || v >= vertex_count) throw InputError("facet vertex out of range");
        }
        cleaned.insert(std::move(f));
    }
    // Keep only maximal faces.
    for (const auto& f : cleaned) {
        bool contained = false;
        for (const auto& g : cleaned) {
            if (f != g && std::includes(g.begin(), g.end(), f.begin(), f.end())) {
                contained = true;
                break;
            }
        }
        if (!contained) facets_.push_back(f);
    }
    std::sort(facets_.begin(), facets_.end());
}

int SimplicialComplex::dim() const {
    int d = -1;
    for (const auto& f : facets_) d = std::max(d, static_cast<int>(f.size()) - 1);
    return d;
}

std::vector<std::vector<int>> SimplicialComplex::simplices(int d) const {
    if (d < 0) return {};
    std::set<std::vector<int>> out;
    const std::size_t need = static_cast<std::size_t>(d) + 1;
    for (const auto& f : facets_) {
        if (f.size() < need) continue;
        // All (d+1)-subsets of the facet.
        std::vector<std::size_t> idx(need);
        for (std::size_t i = 0; i < need; ++i) idx[i] = i;
        while (true) {
            std::vector<int> simplex(need);
            for (std::size_t i = 0; i < need; ++i) simplex[i] = f[idx[i]];
            out.insert(std::move(simplex));
            std::size_t i = need;
            while (i-- > 0) {
                if (idx[i] != i + f.size() - need) break;
                if (i == 0) { i = need; break; }
            }
            if (i == need) break;
            ++idx[i];
            for (std::size_t j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    return {out.begin(), out.end()};
}

long long SimplicialComplex::reduced_euler_characteristic() const {
    long long chi = -1; // the empty simplex in degree -1
    for (int d = 0; d <= dim(); ++d) {
        const long long count = static_cast<long long>(simplices(d).size());
        chi += (d % 2 == 0) ? count : -count;
    }
    return chi;
}

Matrix boundary_matrix(const SimplicialComplex& k, int d) {
    if (d < 0) throw InputError("boundary_matrix needs d >= 0");
    const auto cols_simplices = k.simplices(d);
    if (d == 0) {
        // Augmentation onto the empty simplex.
        Matrix m(1, cols_simplices.size());
        for (std::size_t c = 0; c < cols_simplices.size(); ++c) m.set(0, c, Rational(1));
        return m;
    }
    const auto rows_simplices = k.simplices(d - 1);
    std::map<std::vector<int>, std::size_t> row_index;
    for (std::size_t i = 0; i < rows_simplices.size(); ++i) row_index[rows_simplices[i]] = i;

    Matrix m(rows_simplices.size(), cols_simplices.size());
    for (std::size_t c = 0; c < cols_simplices.size(); ++c) {
        const auto& simplex = cols_simplices[c];
        for (std::size_t j = 0; j < simplex.size(); ++j) {
            std::vector<int> face;
            face.reserve(simplex.size() - 1);
            for (std::size_t t = 0; t < simplex.size(); ++t) {
                if (t != j) face.push_back(simplex[t]);
            }
            m.set(row_index.at(face), c, Rational(j % 2 == 0 ? 1 : -1));
        }
    }
    return m;
}

std::map<int, std::size_t> reduced_homology_dims(const SimplicialComplex& k, const FieldSpec& f) {
    std::map<int, std::size_t> dims;
    if (k.is_empty()) {
        dims[-1] = 1;
        return dims;
    }
    const int top = k.dim();
    std::vector<std::size_t> ranks(top + 2, 0); // ranks[d] = rank of boundary_d, d in [0, top+1]
    std::vector<std::size_t> counts(top + 2, 0);
    for (int d = 0; d <= top; ++d) {
        const Matrix bd = boundary_matrix(k, d);
        counts[d] = bd.cols();
        ranks[d] = rank(bd, f);
    }
    // H_{-1}: the empty simplex modulo the augmentation image.
    if (ranks[0] == 0) dims[-1] = 1;
    for (int d = 0; d <= top; ++d) {
        if (ranks[d] + ranks[d + 1] > counts[d]) {
            throw InternalError("boundary maps do not form a complex");
        }
        const std::size_t h = counts[d] - ranks[d] - ranks[d + 1];
        if (h > 0) dims[d] = h;
    }
    return dims;
}

} // namespace subcyc
