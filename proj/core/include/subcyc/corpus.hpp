#ifndef SUBCYC_CORPUS_HPP
#define SUBCYC_CORPUS_HPP

#include <cstdint>
#include <vector>

#include "subcyc/monomial_ideal.hpp"

namespace subcyc {

// Every squarefree monomial ideal on n variables, i.e. every nonempty
// antichain of nonempty subsets of {1..n}, in a fixed deterministic order.
// Counts grow like the Dedekind numbers (18 for n = 3, 166 for n = 4,
// 7579 for n = 5), so this is meant for small n.
std::vector<MonomialIdeal> all_squarefree_ideals(int nvars);

// Deterministic pseudo-random squarefree ideals (platform-independent
// generator, so a seed pins the corpus bytes).
std::vector<MonomialIdeal> random_squarefree_ideals(int nvars, std::size_t count,
                                                    std::uint64_t seed);

} // namespace subcyc

#endif
