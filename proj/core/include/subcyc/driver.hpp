#ifndef SUBCYC_DRIVER_HPP
#define SUBCYC_DRIVER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subcyc/invariants.hpp"

namespace subcyc {

enum class Command {
    cc,          // characteristic cycles of all local cohomology modules
    graded_dims, // graded dimensions dim H^r_I(R)_alpha
    dual,        // Alexander dual ideal
    betti,       // graded Betti numbers
    complement,  // Betti numbers of the arrangement complement
    hypercube,   // vertex dimensions and multiplication maps in one degree
    extensions,  // filtration levels and splitting verdicts
    check,       // cross-route validation
    selftest,    // built-in corpus plus named examples
};

struct JobConfig {
    Command command = Command::selftest;
    std::optional<std::string> ideal_text;     // inline ideal
    std::optional<std::string> ideal_file;     // or a file containing one
    std::optional<std::string> subspace_file;  // affine arrangement input
    std::optional<int> nvars;
    FieldSpec field = FieldSpec::rationals();
    ComplementFlavor flavor = ComplementFlavor::real;
    std::optional<int> r;
    std::optional<std::string> alpha_text;     // multidegree "-1,0,-1"
    int box = 2;                               // straightness box for `check`
    bool all_squarefree = false;               // check: run the exhaustive corpus
    std::optional<std::size_t> random_count;   // check: seeded random corpus
    std::uint64_t seed = 1;
    int max_vars = kDefaultMaxEnumVars;
    bool structured = false;                   // false: text, true: JSON document
};

// Exit code 0: success; 1: a validation check failed; 2: invalid input.
struct JobResult {
    int exit_code = 0;
    std::string output;                 // stdout payload, byte-deterministic
    std::vector<std::string> warnings;  // diagnostic stream lines
};

JobResult run(const JobConfig& config);

} // namespace subcyc

#endif
