// Command-line front end: exact characteristic cycles, graded local
// cohomology dimensions, Alexander duals, Betti numbers, complement
// topology and extension data of monomial-ideal arrangements.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "subcyc/driver.hpp"
#include "subcyc/errors.hpp"
#include "subcyc/version.hpp"

namespace {

struct CommonOptions {
    std::string ideal;
    std::string ideal_file;
    std::string subspace_file;
    int nvars = 0;
    std::string field = "q";
    std::string format = "text";
    int max_vars = subcyc::kDefaultMaxEnumVars;
};

void add_ideal_options(CLI::App* cmd, CommonOptions& opts, bool with_subspaces = false) {
    cmd->add_option("--ideal", opts.ideal, "inline ideal, e.g. \"x1*x2, x1*x3\"");
    cmd->add_option("--ideal-file", opts.ideal_file, "file containing the ideal text");
    if (with_subspaces) {
        cmd->add_option("--subspaces", opts.subspace_file,
                        "file of affine subspace blocks (rows \"a1 ... an | b\")");
    }
    cmd->add_option("-n,--nvars", opts.nvars, "number of variables (default: highest index used)");
    cmd->add_option("--field", opts.field, "coefficient field: q or fp:<prime> (default q)");
    cmd->add_option("--format", opts.format, "output format: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--max-vars", opts.max_vars,
                    "cap on n for the 2^n enumerations (default " +
                        std::to_string(subcyc::kDefaultMaxEnumVars) + ")");
}

subcyc::JobConfig to_config(const CommonOptions& opts, subcyc::Command command) {
    subcyc::JobConfig cfg;
    cfg.command = command;
    if (!opts.ideal.empty()) cfg.ideal_text = opts.ideal;
    if (!opts.ideal_file.empty()) cfg.ideal_file = opts.ideal_file;
    if (!opts.subspace_file.empty()) cfg.subspace_file = opts.subspace_file;
    if (opts.nvars > 0) cfg.nvars = opts.nvars;
    cfg.field = subcyc::FieldSpec::parse(opts.field);
    cfg.structured = opts.format == "json";
    cfg.max_vars = opts.max_vars;
    return cfg;
}

int finish(const subcyc::JobResult& result) {
    for (const auto& w : result.warnings) std::cerr << w << "\n";
    std::cout << result.output;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact invariants of monomial-ideal and subspace arrangements"};
    app.set_version_flag("--version",
                         std::string(subcyc::kProjectName) + " " + std::string(subcyc::kVersion));
    app.require_subcommand(1);

    CommonOptions cc_opts;
    auto* cc = app.add_subcommand("cc", "characteristic cycles of the local cohomology modules");
    add_ideal_options(cc, cc_opts, /*with_subspaces=*/true);

    CommonOptions gd_opts;
    int gd_r = -1;
    std::string gd_alpha;
    auto* gd = app.add_subcommand("graded-dims", "graded dimensions of local cohomology");
    add_ideal_options(gd, gd_opts);
    gd->add_option("-r", gd_r, "cohomological degree (default: all)");
    gd->add_option("--alpha", gd_alpha, "multidegree, e.g. \"-1,0,-1\" (default: scan {-1,0}^n)");

    CommonOptions dual_opts;
    auto* dual = app.add_subcommand("dual", "Alexander dual of a squarefree ideal");
    add_ideal_options(dual, dual_opts);

    CommonOptions betti_opts;
    auto* betti = app.add_subcommand("betti", "multigraded Betti numbers of the ideal");
    add_ideal_options(betti, betti_opts);

    CommonOptions comp_opts;
    bool comp_real = false;
    bool comp_complex = false;
    auto* comp = app.add_subcommand("complement", "reduced Betti numbers of the complement");
    add_ideal_options(comp, comp_opts, /*with_subspaces=*/true);
    comp->add_flag("--real", comp_real, "complement of the real points");
    comp->add_flag("--complex", comp_complex, "complement of the complex points");

    CommonOptions hyp_opts;
    int hyp_r = -1;
    auto* hyp = app.add_subcommand("hypercube", "vertex dimensions and multiplication maps");
    add_ideal_options(hyp, hyp_opts);
    hyp->add_option("-r", hyp_r, "cohomological degree")->required();

    CommonOptions ext_opts;
    int ext_r = -1;
    auto* ext = app.add_subcommand("extensions", "filtration levels and splitting verdicts");
    add_ideal_options(ext, ext_opts);
    ext->add_option("-r", ext_r, "cohomological degree")->required();

    CommonOptions check_opts;
    bool check_all = false;
    std::size_t check_random = 0;
    std::uint64_t check_seed = 1;
    int check_box = 2;
    auto* check = app.add_subcommand("check", "cross-validate the three computational routes");
    add_ideal_options(check, check_opts);
    check->add_flag("--all-squarefree", check_all, "run every squarefree ideal on n variables");
    check->add_option("--random", check_random, "add this many seeded random squarefree ideals");
    check->add_option("--seed", check_seed, "seed for --random (default 1)");
    check->add_option("--box", check_box, "straightness box for single-ideal checks (default 2)");

    CommonOptions self_opts;
    auto* self = app.add_subcommand("selftest", "run the built-in corpus and named examples");
    self->add_option("--format", self_opts.format, "output format: text or json (default text)")
        ->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (cc->parsed()) return finish(subcyc::run(to_config(cc_opts, subcyc::Command::cc)));
        if (gd->parsed()) {
            auto cfg = to_config(gd_opts, subcyc::Command::graded_dims);
            if (gd_r >= 0) cfg.r = gd_r;
            if (!gd_alpha.empty()) cfg.alpha_text = gd_alpha;
            return finish(subcyc::run(cfg));
        }
        if (dual->parsed()) return finish(subcyc::run(to_config(dual_opts, subcyc::Command::dual)));
        if (betti->parsed()) return finish(subcyc::run(to_config(betti_opts, subcyc::Command::betti)));
        if (comp->parsed()) {
            if (comp_real == comp_complex) {
                std::cerr << "error: pass exactly one of --real / --complex\n";
                return 2;
            }
            auto cfg = to_config(comp_opts, subcyc::Command::complement);
            cfg.flavor = comp_real ? subcyc::ComplementFlavor::real : subcyc::ComplementFlavor::complex;
            return finish(subcyc::run(cfg));
        }
        if (hyp->parsed()) {
            auto cfg = to_config(hyp_opts, subcyc::Command::hypercube);
            cfg.r = hyp_r;
            return finish(subcyc::run(cfg));
        }
        if (ext->parsed()) {
            auto cfg = to_config(ext_opts, subcyc::Command::extensions);
            cfg.r = ext_r;
            return finish(subcyc::run(cfg));
        }
        if (check->parsed()) {
            auto cfg = to_config(check_opts, subcyc::Command::check);
            cfg.all_squarefree = check_all;
            if (check_random > 0) cfg.random_count = check_random;
            cfg.seed = check_seed;
            cfg.box = check_box;
            return finish(subcyc::run(cfg));
        }
        if (self->parsed()) return finish(subcyc::run(to_config(self_opts, subcyc::Command::selftest)));
    } catch (const subcyc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    std::cerr << "error: no command\n";
    return 2;
}
