#include "subcyc/driver.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <json.hpp>

#include "subcyc/corpus.hpp"
#include "subcyc/errors.hpp"
#include "subcyc/koszul.hpp"
#include "subcyc/parallel.hpp"
#include "subcyc/version.hpp"

namespace subcyc {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string command_name(Command c) {
    switch (c) {
        case Command::cc: return "cc";
        case Command::graded_dims: return "graded-dims";
        case Command::dual: return "dual";
        case Command::betti: return "betti";
        case Command::complement: return "complement";
        case Command::hypercube: return "hypercube";
        case Command::extensions: return "extensions";
        case Command::check: return "check";
        case Command::selftest: return "selftest";
    }
    return "?";
}

MonomialIdeal resolve_ideal(const JobConfig& cfg) {
    std::string text;
    if (cfg.ideal_text) {
        text = *cfg.ideal_text;
    } else if (cfg.ideal_file) {
        text = read_file(*cfg.ideal_file);
    } else {
        throw InputError("this command needs an ideal (--ideal or --ideal-file)");
    }
    return parse_ideal(text, cfg.nvars);
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json skeleton(const JobConfig& cfg) {
    json doc;
    doc["version"] = std::string(kProjectName) + " " + std::string(kVersion);
    doc["command"] = command_name(cfg.command);
    doc["input"] = json::object();
    doc["input"]["field"] = cfg.field.to_string();
    return doc;
}

void echo_ideal(json& doc, const MonomialIdeal& ideal) {
    doc["input"]["ideal"] = ideal.to_string();
    doc["input"]["nvars"] = ideal.nvars();
}

std::string sign_key(int r, const std::string& sign_text) {
    return std::to_string(r) + "|" + sign_text;
}

// Warn (and radicalize where the caller needs it) for arrangement-level work.
MonomialIdeal arrangement_input(const MonomialIdeal& ideal, std::vector<std::string>* warnings) {
    if (ideal.is_squarefree()) return ideal;
    MonomialIdeal reduced = ideal.radical();
    if (warnings) {
        warnings->push_back("warning: ideal is not squarefree; the arrangement depends only on its radical (" +
                            reduced.to_string() + ")");
    }
    return reduced;
}

void require_rational_field(const JobConfig& cfg, const std::string& what) {
    if (!cfg.field.is_rationals()) {
        throw InputError(what + " is defined over Q; pass --field q (the default)");
    }
}

std::string cc_term_text(const CharacteristicCycle::Term& term) {
    std::string out;
    if (term.multiplicity != 1) out += std::to_string(term.multiplicity) + "*";
    out += "T*_{" + term.label + "}";
    if (term.sign) out += " [" + term.sign->to_string() + "]";
    return out;
}

// --- cc ---------------------------------------------------------------------

JobResult run_cc(const JobConfig& cfg) {
    require_rational_field(cfg, "the characteristic cycle");
    JobResult result;
    json doc = skeleton(cfg);
    CharacteristicCycle cc;
    const bool coordinate = !cfg.subspace_file.has_value();
    IntersectionPoset poset = [&]() {
        if (cfg.subspace_file) {
            auto blocks = parse_subspace_blocks(read_file(*cfg.subspace_file));
            doc["input"]["subspaces"] = blocks.size();
            return IntersectionPoset::from_subspaces(blocks, &result.warnings);
        }
        const MonomialIdeal ideal = arrangement_input(resolve_ideal(cfg), &result.warnings);
        echo_ideal(doc, ideal);
        return IntersectionPoset::from_ideal(ideal, cfg.max_vars);
    }();
    cc = characteristic_cycle(poset);

    std::ostringstream text;
    json table = json::object();
    json labels = json::object();
    for (const auto& [r, terms] : cc.by_degree) {
        text << "CC(H^" << r << ") = ";
        for (std::size_t i = 0; i < terms.size(); ++i) {
            if (i > 0) text << " + ";
            text << cc_term_text(terms[i]);
            const std::string key =
                terms[i].sign ? terms[i].sign->to_string() : terms[i].label;
            table[sign_key(r, key)] = terms[i].multiplicity;
            labels[key] = terms[i].label;
        }
        text << "\n";
    }
    doc["cc"] = table;
    doc["labels"] = labels;
    if (!coordinate) {
        json subspaces = json::object();
        for (const auto& node : poset.nodes()) {
            if (node.affine) subspaces[node.label()] = node.affine->equation_strings();
        }
        doc["subspaces"] = subspaces;
    }
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- graded-dims --------------------------------------------------------------

JobResult run_graded_dims(const JobConfig& cfg) {
    JobResult result;
    const MonomialIdeal ideal = resolve_ideal(cfg);
    json doc = skeleton(cfg);
    echo_ideal(doc, ideal);

    std::vector<int> degrees;
    if (cfg.r) {
        degrees.push_back(*cfg.r);
    } else {
        for (int r = 0; r <= ideal.nvars(); ++r) degrees.push_back(r);
    }

    std::ostringstream text;
    json dims = json::object();
    if (cfg.alpha_text) {
        const Multidegree alpha = parse_multidegree(*cfg.alpha_text, ideal.nvars());
        doc["input"]["alpha"] = multidegree_to_string(alpha);
        for (int r : degrees) {
            const std::size_t d = graded_lc_dim(ideal, r, alpha, cfg.field);
            if (d > 0 || cfg.r) {
                dims[sign_key(r, multidegree_to_string(alpha))] = d;
                text << "dim H^" << r << "[" << multidegree_to_string(alpha) << "] = " << d << "\n";
            }
        }
    } else {
        for (int r : degrees) {
            for (const auto& alpha : all_sign_vectors(ideal.nvars())) {
                const std::size_t d = graded_lc_dim(ideal, r, alpha.to_multidegree(), cfg.field);
                if (d > 0) {
                    dims[sign_key(r, alpha.to_string())] = d;
                    text << "dim H^" << r << "[" << alpha.to_string() << "] = " << d << "\n";
                }
            }
        }
    }
    doc["dims"] = dims;
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- dual ---------------------------------------------------------------------

JobResult run_dual(const JobConfig& cfg) {
    JobResult result;
    const MonomialIdeal ideal = resolve_ideal(cfg);
    const MonomialIdeal dual = ideal.alexander_dual(cfg.max_vars);
    json doc = skeleton(cfg);
    echo_ideal(doc, ideal);
    doc["dual"] = dual.to_string();
    result.output = cfg.structured ? dump(doc) : dual.to_string() + "\n";
    return result;
}

// --- betti ----------------------------------------------------------------------

JobResult run_betti(const JobConfig& cfg) {
    JobResult result;
    const MonomialIdeal ideal = resolve_ideal(cfg);
    const BettiTable table = graded_betti(ideal, cfg.field, cfg.max_vars);
    json doc = skeleton(cfg);
    echo_ideal(doc, ideal);
    std::ostringstream text;
    json entries = json::object();
    for (const auto& [key, value] : table.entries) {
        entries[sign_key(key.first, multidegree_to_string(key.second))] = value;
        text << "beta_" << key.first << "[" << multidegree_to_string(key.second) << "] = " << value
             << "\n";
    }
    doc["betti"] = entries;
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- complement -------------------------------------------------------------------

JobResult run_complement(const JobConfig& cfg) {
    require_rational_field(cfg, "the complement Betti computation");
    JobResult result;
    json doc = skeleton(cfg);
    IntersectionPoset poset = [&]() {
        if (cfg.subspace_file) {
            auto blocks = parse_subspace_blocks(read_file(*cfg.subspace_file));
            doc["input"]["subspaces"] = blocks.size();
            return IntersectionPoset::from_subspaces(blocks, &result.warnings);
        }
        const MonomialIdeal ideal = arrangement_input(resolve_ideal(cfg), &result.warnings);
        echo_ideal(doc, ideal);
        return IntersectionPoset::from_ideal(ideal, cfg.max_vars);
    }();
    const auto betti = complement_betti(poset, cfg.flavor);
    doc["input"]["flavor"] = cfg.flavor == ComplementFlavor::real ? "real" : "complex";

    std::size_t last = 0;
    for (std::size_t i = 0; i < betti.size(); ++i) {
        if (betti[i] != 0) last = i;
    }
    std::ostringstream text;
    json values = json::array();
    for (std::size_t i = 0; i <= last && i < betti.size(); ++i) {
        if (i > 0) text << ' ';
        text << "b~" << i << "=" << betti[i];
        values.push_back(betti[i]);
    }
    text << "\n";
    doc["complement"] = values;
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- hypercube ---------------------------------------------------------------------

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (const auto& row : m.to_string_rows()) rows.push_back(row);
    return rows;
}

JobResult run_hypercube(const JobConfig& cfg) {
    if (!cfg.r) throw InputError("hypercube needs a cohomological degree (-r)");
    JobResult result;
    const MonomialIdeal ideal = resolve_ideal(cfg);
    const Hypercube cube = hypercube(ideal, *cfg.r, cfg.field, cfg.max_vars);
    json doc = skeleton(cfg);
    echo_ideal(doc, ideal);
    doc["r"] = cube.r;

    std::ostringstream text;
    text << "H^" << cube.r << " hypercube on " << cube.nvars << " variables\n";
    json vertices = json::object();
    for (const auto& [alpha, dim] : cube.vertex_dims) {
        if (dim == 0) continue;
        vertices[alpha.to_string()] = dim;
        text << "vertex [" << alpha.to_string() << "] dim " << dim << "\n";
    }
    json maps = json::object();
    for (const auto& [key, matrix] : cube.maps) {
        const std::string name = "x" + std::to_string(key.second + 1) + "|" + key.first.to_string();
        maps[name] = matrix_json(matrix);
        text << "map x" << (key.second + 1) << " on [" << key.first.to_string()
             << "]: rank " << rank(matrix, cfg.field) << "\n";
    }
    doc["vertices"] = vertices;
    doc["maps"] = maps;
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- extensions -----------------------------------------------------------------------

JobResult run_extensions(const JobConfig& cfg) {
    if (!cfg.r) throw InputError("extensions needs a cohomological degree (-r)");
    JobResult result;
    const MonomialIdeal ideal = resolve_ideal(cfg);
    const ExtensionReport report = extension_analysis(ideal, *cfg.r, cfg.field, cfg.max_vars);
    json doc = skeleton(cfg);
    echo_ideal(doc, ideal);
    doc["r"] = report.r;

    std::ostringstream text;
    text << "H^" << report.r << " filtration levels\n";
    json levels = json::array();
    for (const auto& level : report.levels) {
        json entry;
        entry["level"] = level.level;
        entry["dim"] = level.quotient_dim;
        entry["splits"] = level.splits;
        entry["nonzero_maps"] = level.nonzero_maps;
        levels.push_back(entry);
        text << "level " << level.level << ": dim " << level.quotient_dim << ", "
             << (level.splits ? "splits" : "non-split");
        if (!level.nonzero_maps.empty()) {
            text << " (";
            for (std::size_t i = 0; i < level.nonzero_maps.size(); ++i) {
                if (i > 0) text << "; ";
                text << level.nonzero_maps[i];
            }
            text << ")";
        }
        text << "\n";
    }
    doc["levels"] = levels;
    result.output = cfg.structured ? dump(doc) : text.str();
    return result;
}

// --- check ------------------------------------------------------------------------------

struct CorpusOutcome {
    std::size_t ideals = 0;
    std::size_t entries = 0;
    std::vector<std::string> diffs;
};

CorpusOutcome validate_corpus(const std::vector<MonomialIdeal>& corpus, const FieldSpec& field,
                              int max_vars) {
    CorpusOutcome outcome;
    outcome.ideals = corpus.size();
    std::vector<CrossValidationReport> reports(corpus.size());
    parallel_for(corpus.size(), [&](std::size_t i) {
        reports[i] = cross_validate(corpus[i], field, max_vars);
    });
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        outcome.entries += reports[i].entries_checked;
        for (const auto& diff : reports[i].diffs) {
            outcome.diffs.push_back("[" + corpus[i].to_string() + "] " + diff);
        }
    }
    return outcome;
}

JobResult run_check(const JobConfig& cfg) {
    JobResult result;
    json doc = skeleton(cfg);
    CorpusOutcome outcome;

    if (cfg.all_squarefree || cfg.random_count) {
        if (!cfg.nvars) throw InputError("corpus checks need -n");
        std::vector<MonomialIdeal> corpus;
        if (cfg.all_squarefree) {
            corpus = all_squarefree_ideals(*cfg.nvars);
        }
        if (cfg.random_count) {
            auto extra = random_squarefree_ideals(*cfg.nvars, *cfg.random_count, cfg.seed);
            corpus.insert(corpus.end(), extra.begin(), extra.end());
            doc["input"]["seed"] = cfg.seed;
        }
        doc["input"]["nvars"] = *cfg.nvars;
        outcome = validate_corpus(corpus, cfg.field, cfg.max_vars);
    } else {
        const MonomialIdeal ideal = resolve_ideal(cfg);
        echo_ideal(doc, ideal);
        CrossValidationReport report = cross_validate(ideal, cfg.field, cfg.max_vars);
        if (report.radicalized) {
            result.warnings.push_back(
                "warning: ideal is not squarefree; validated its radical instead");
        }
        outcome.ideals = 1;
        outcome.entries = report.entries_checked;
        outcome.diffs = report.diffs;
        // Straightness is cheap on a single ideal; run it for every degree.
        const MonomialIdeal reduced = ideal.is_squarefree() ? ideal : ideal.radical();
        for (int r = 0; r <= reduced.nvars(); ++r) {
            const StraightnessReport sr = straightness_check(reduced, r, cfg.box, cfg.field);
            outcome.entries += sr.degrees_checked + sr.maps_checked;
            for (const auto& v : sr.violations) {
                outcome.diffs.push_back("straightness r=" + std::to_string(r) + ": " + v);
            }
        }
    }

    const bool pass = outcome.diffs.empty();
    json check = json::object();
    check["status"] = pass ? "PASS" : "FAIL";
    check["ideals"] = outcome.ideals;
    check["entries"] = outcome.entries;
    check["diffs"] = outcome.diffs;
    doc["check"] = check;

    std::ostringstream text;
    if (pass) {
        text << "PASS (" << outcome.ideals << " ideal" << (outcome.ideals == 1 ? "" : "s") << ")\n";
    } else {
        text << "FAIL (" << outcome.diffs.size() << " mismatches over " << outcome.ideals
             << " ideals)\n";
        for (const auto& diff : outcome.diffs) text << "  " << diff << "\n";
    }
    result.output = cfg.structured ? dump(doc) : text.str();
    result.exit_code = pass ? 0 : 1;
    return result;
}

// --- selftest ------------------------------------------------------------------------------

struct NamedCheck {
    std::string name;
    std::function<std::optional<std::string>()> body; // failure message or nullopt
};

std::vector<NamedCheck> named_checks() {
    std::vector<NamedCheck> checks;
    const FieldSpec q = FieldSpec::rationals();

    checks.push_back({"worked-example characteristic cycle", [q]() -> std::optional<std::string> {
        const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
        const auto cc = characteristic_cycle(ideal);
        if (cc.by_degree.size() != 2) return "expected exactly two cohomological degrees";
        const auto& h1 = cc.by_degree.at(1);
        const auto& h2 = cc.by_degree.at(2);
        if (h1.size() != 1 || h1[0].label != "V(x1)" || h1[0].multiplicity != 1) {
            return "CC(H^1) should be T*_{V(x1)}";
        }
        if (h2.size() != 2 || h2[0].label != "V(x2,x3)" || h2[1].label != "V(x1,x2,x3)" ||
            h2[0].multiplicity != 1 || h2[1].multiplicity != 1) {
            return "CC(H^2) should be T*_{V(x2,x3)} + T*_{V(x1,x2,x3)}";
        }
        return std::nullopt;
    }});

    checks.push_back({"worked-example hypercube", [q]() -> std::optional<std::string> {
        const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
        const Hypercube cube = hypercube(ideal, 2, q);
        std::size_t nonzero = 0;
        for (const auto& [alpha, dim] : cube.vertex_dims) {
            if (dim != 0) ++nonzero;
        }
        if (nonzero != 2) return "H^2 hypercube should have two nonzero vertices";
        const SignVector source(3, 0b111);
        auto it = cube.maps.find({source, 0});
        if (it == cube.maps.end() || rank(it->second, q) != 1) {
            return "x1 map out of [-1,-1,-1] should have rank 1";
        }
        return std::nullopt;
    }});

    checks.push_back({"worked-example extension verdicts", [q]() -> std::optional<std::string> {
        const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
        const ExtensionReport report = extension_analysis(ideal, 2, q);
        if (report.levels.at(2).splits) return "level 3 should be non-split";
        if (!report.levels.at(1).splits) return "level 2 should split";
        return std::nullopt;
    }});

    checks.push_back({"hyperplane complement", []() -> std::optional<std::string> {
        const auto poset = IntersectionPoset::from_ideal(parse_ideal("x1", 1));
        const auto real = complement_betti(poset, ComplementFlavor::real);
        const auto cx = complement_betti(poset, ComplementFlavor::complex);
        if (real != std::vector<std::size_t>{1}) return "real hyperplane complement should have b~0 = 1";
        if (cx != std::vector<std::size_t>{0, 1}) return "complex hyperplane complement should have b~1 = 1";
        return std::nullopt;
    }});

    checks.push_back({"three-axes complement", []() -> std::optional<std::string> {
        const auto poset = IntersectionPoset::from_ideal(parse_ideal("x1*x2, x2*x3, x1*x3", 3));
        const auto real = complement_betti(poset, ComplementFlavor::real);
        if (real != std::vector<std::size_t>{0, 5, 0}) return "axes complement should be b~0=0, b~1=5";
        return std::nullopt;
    }});

    checks.push_back({"maximal ideal multiplicities", [q]() -> std::optional<std::string> {
        for (int n = 1; n <= 4; ++n) {
            std::string text;
            for (int i = 1; i <= n; ++i) text += (i > 1 ? ", x" : "x") + std::to_string(i);
            const auto poset = IntersectionPoset::from_ideal(parse_ideal(text, n));
            const auto table = multiplicities(poset, q);
            if (table.by_node.size() != 1 || table.at_node(n, 0) != 1) {
                return "maximal ideal on " + std::to_string(n) + " variables should have one multiplicity";
            }
        }
        return std::nullopt;
    }});

    checks.push_back({"Alexander dual examples", []() -> std::optional<std::string> {
        const auto ideal = parse_ideal("x1*x2, x1*x3", 3);
        if (ideal.alexander_dual().to_string() != "x1, x2*x3") {
            return "dual of (x1*x2, x1*x3) should be (x1, x2*x3)";
        }
        for (const auto& i : all_squarefree_ideals(3)) {
            if (!(i.alexander_dual().alexander_dual() == i)) {
                return "double dual should be the identity on " + i.to_string();
            }
        }
        return std::nullopt;
    }});

    checks.push_back({"parse round trip", []() -> std::optional<std::string> {
        for (const auto& i : all_squarefree_ideals(3)) {
            if (!(parse_ideal(i.to_string(), i.nvars()) == i)) {
                return "round trip failed on " + i.to_string();
            }
        }
        return std::nullopt;
    }});

    return checks;
}

JobResult run_selftest(const JobConfig& cfg) {
    JobResult result;
    json doc = skeleton(cfg);

    const auto corpus = all_squarefree_ideals(3);
    const CorpusOutcome outcome = validate_corpus(corpus, cfg.field, cfg.max_vars);

    std::vector<std::string> failures = outcome.diffs;
    json named = json::object();
    std::size_t named_count = 0;
    for (const auto& check : named_checks()) {
        ++named_count;
        std::optional<std::string> failure;
        try {
            failure = check.body();
        } catch (const Error& e) {
            failure = std::string(e.what());
        }
        named[check.name] = failure ? "FAIL: " + *failure : "PASS";
        if (failure) failures.push_back(check.name + ": " + *failure);
    }

    const bool pass = failures.empty();
    json selftest = json::object();
    selftest["status"] = pass ? "PASS" : "FAIL";
    selftest["ideals"] = outcome.ideals;
    selftest["entries"] = outcome.entries;
    selftest["named"] = named;
    selftest["failures"] = failures;
    doc["selftest"] = selftest;

    std::ostringstream text;
    text << "selftest: " << (pass ? "PASS" : "FAIL") << " (" << outcome.ideals
         << " ideals, " << outcome.entries << " entries, " << named_count << " named checks)\n";
    for (const auto& f : failures) text << "  " << f << "\n";

    result.output = cfg.structured ? dump(doc) : text.str();
    result.exit_code = pass ? 0 : 1;
    return result;
}

} // namespace

JobResult run(const JobConfig& cfg) {
    try {
        switch (cfg.command) {
            case Command::cc: return run_cc(cfg);
            case Command::graded_dims: return run_graded_dims(cfg);
            case Command::dual: return run_dual(cfg);
            case Command::betti: return run_betti(cfg);
            case Command::complement: return run_complement(cfg);
            case Command::hypercube: return run_hypercube(cfg);
            case Command::extensions: return run_extensions(cfg);
            case Command::check: return run_check(cfg);
            case Command::selftest: return run_selftest(cfg);
        }
        throw InputError("unknown command");
    } catch (const ValidationError& e) {
        JobResult failure;
        failure.exit_code = 1;
        failure.warnings.push_back(std::string("validation error: ") + e.what());
        return failure;
    } catch (const Error& e) {
        JobResult failure;
        failure.exit_code = 2;
        failure.warnings.push_back(std::string("error: ") + e.what());
        return failure;
    }
}

} // namespace subcyc
