#include "subcyc/cech.hpp"

#include <algorithm>
#include <bit>

#include "subcyc/errors.hpp"

namespace subcyc {

namespace {

std::vector<std::uint32_t> generator_supports(const MonomialIdeal& ideal) {
    std::vector<std::uint32_t> supports;
    supports.reserve(ideal.generators().size());
    for (const auto& g : ideal.generators()) supports.push_back(g.support());
    return supports;
}

} // namespace

CechFiber::CechFiber(const MonomialIdeal& ideal, const Multidegree& alpha) {
    if (static_cast<int>(alpha.size()) != ideal.nvars()) {
        throw InputError("multidegree length does not match the variable count");
    }
    const auto supports = generator_supports(ideal);
    num_generators_ = static_cast<int>(supports.size());
    if (num_generators_ > kMaxCechGenerators) {
        throw InputError("Cech fiber needs 2^s subsets; s = " + std::to_string(num_generators_) +
                         " generators exceeds the cap " + std::to_string(kMaxCechGenerators));
    }
    std::uint32_t negative = 0;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
        if (alpha[i] < 0) negative |= (1u << i);
    }
    on_.assign(num_generators_ + 1, {});
    const std::uint32_t limit = std::uint32_t(1) << num_generators_;
    std::vector<std::uint32_t> union_support(limit, 0);
    for (std::uint32_t s = 0; s < limit; ++s) {
        if (s != 0) {
            const std::uint32_t low = s & (~s + 1);
            union_support[s] = union_support[s ^ low] | supports[std::countr_zero(low)];
        }
        // The localization is nonzero in degree alpha iff all negative
        // coordinates are inverted, i.e. lie in the union of supports.
        if ((negative & ~union_support[s]) == 0) {
            on_[std::popcount(s)].push_back(s);
        }
    }
}

std::size_t CechFiber::term_count(int level) const {
    if (level < 0 || level > num_generators_) return 0;
    return on_[level].size();
}

const std::vector<std::uint32_t>& CechFiber::terms(int level) const {
    static const std::vector<std::uint32_t> kEmpty;
    if (level < 0 || level > num_generators_) return kEmpty;
    return on_[level];
}

Matrix CechFiber::differential(int level) const {
    const auto& cols = terms(level);
    const auto& rows = terms(level + 1);
    Matrix d(rows.size(), cols.size());
    std::map<std::uint32_t, std::size_t> row_index;
    for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = i;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const std::uint32_t s = cols[c];
        for (int j = 0; j < num_generators_; ++j) {
            if ((s >> j) & 1u) continue;
            const std::uint32_t t = s | (1u << j);
            auto it = row_index.find(t);
            if (it == row_index.end()) continue;
            const int position = std::popcount(t & ((1u << j) - 1));
            d.set(it->second, c, Rational(position % 2 == 0 ? 1 : -1));
        }
    }
    return d;
}

long long CechFiber::euler_characteristic() const {
    long long chi = 0;
    for (int k = 0; k <= num_generators_; ++k) {
        const long long count = static_cast<long long>(on_[k].size());
        chi += (k % 2 == 0) ? count : -count;
    }
    return chi;
}

std::size_t graded_lc_dim(const MonomialIdeal& ideal, int r, const Multidegree& alpha,
                          const FieldSpec& f) {
    if (r < 0) throw InputError("cohomological degree must be non-negative");
    const CechFiber fiber(ideal, alpha);
    if (fiber.term_count(r) == 0) return 0;
    return homology_dim(fiber.differential(r - 1), fiber.differential(r), f);
}

Matrix multiplication_map(const MonomialIdeal& ideal, int r, const Multidegree& alpha,
                          int var, const FieldSpec& f) {
    if (var < 0 || var >= ideal.nvars()) throw InputError("variable index out of range");
    Multidegree target = alpha;
    target[var] += 1;
    const CechFiber src(ideal, alpha);
    const CechFiber dst(ideal, target);

    // Multiplication by x_var preserves each localization and is the identity
    // on every graded piece that stays nonzero; a piece that is on in the
    // source is automatically on in the larger target degree.
    const auto& src_terms = src.terms(r);
    const auto& dst_terms = dst.terms(r);
    Matrix chain(dst_terms.size(), src_terms.size());
    std::map<std::uint32_t, std::size_t> dst_index;
    for (std::size_t i = 0; i < dst_terms.size(); ++i) dst_index[dst_terms[i]] = i;
    for (std::size_t c = 0; c < src_terms.size(); ++c) {
        auto it = dst_index.find(src_terms[c]);
        if (it != dst_index.end()) chain.set(it->second, c, Rational(1));
    }
    return induced_map_on_homology(src.differential(r - 1), src.differential(r),
                                   dst.differential(r - 1), dst.differential(r), chain, f);
}

StraightnessReport straightness_check(const MonomialIdeal& ideal, int r, int box,
                                      const FieldSpec& f) {
    if (box < 1) throw InputError("straightness box must be at least 1");
    StraightnessReport report;
    const int n = ideal.nvars();
    std::map<SignVector, std::size_t> pattern_dim;
    for (const auto& alpha : all_sign_vectors(n)) {
        pattern_dim[alpha] = graded_lc_dim(ideal, r, alpha.to_multidegree(), f);
    }

    Multidegree alpha(n, -box);
    while (true) {
        const std::size_t dim = graded_lc_dim(ideal, r, alpha, f);
        ++report.degrees_checked;
        const std::size_t expected = pattern_dim.at(omega_pattern(alpha));
        if (dim != expected) {
            report.pass = false;
            report.violations.push_back("dim at " + multidegree_to_string(alpha) + " is " +
                                        std::to_string(dim) + ", sign pattern predicts " +
                                        std::to_string(expected));
        }
        for (int i = 0; i < n; ++i) {
            if (alpha[i] == -1 || alpha[i] >= box) continue; // -1 steps carry extension data
            Multidegree next = alpha;
            next[i] += 1;
            const std::size_t target_dim = graded_lc_dim(ideal, r, next, f);
            ++report.maps_checked;
            if (dim != target_dim) {
                report.pass = false;
                report.violations.push_back("x" + std::to_string(i + 1) + " on " +
                                            multidegree_to_string(alpha) +
                                            " changes the graded dimension");
                continue;
            }
            if (dim == 0) continue;
            const Matrix m = multiplication_map(ideal, r, alpha, i, f);
            if (rank(m, f) != dim) {
                report.pass = false;
                report.violations.push_back("x" + std::to_string(i + 1) + " on " +
                                            multidegree_to_string(alpha) +
                                            " is not bijective in the straight range");
            }
        }
        // Odometer over [-box, box]^n.
        int pos = 0;
        while (pos < n && alpha[pos] == box) {
            alpha[pos] = -box;
            ++pos;
        }
        if (pos == n) break;
        ++alpha[pos];
    }
    return report;
}

} // namespace subcyc
