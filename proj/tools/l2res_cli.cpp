// Command-line front end: l2res <power|build-l2|check-support|betti|bounds|verify>
//
// Exit codes: 0 success / PASS, 1 error, 2 criterion FAIL or sweep
// counterexample, 3 resource cap exceeded.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "l2res/l2res.hpp"

namespace {

using namespace l2res;

enum ExitCode { kOk = 0, kError = 1, kFail = 2, kResource = 3 };

struct Common {
    std::string ideal_text;
    std::string format = "table";
    std::string field = "rational";
    std::string vars;
    std::size_t power = 1;
    Limits limits;
};

template <class T>
void env_override(const char* name, T& target) {
    if (const char* value = std::getenv(name)) {
        try {
            target = static_cast<T>(std::stoull(value));
        } catch (const std::exception&) {
            throw Error(std::string("environment variable ") + name + " is not a number");
        }
        if (target == 0) throw Error(std::string("environment variable ") + name + " must be positive");
    }
}

std::vector<std::string> split_vars(const std::string& text) {
    std::vector<std::string> out;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        item.erase(0, item.find_first_not_of(" \t"));
        item.erase(item.find_last_not_of(" \t") + 1);
        out.push_back(item);
    }
    return out;
}

MonomialIdeal load_ideal(const Common& c) {
    if (c.ideal_text.empty()) throw Error("no ideal given (pass it positionally or with --ideal)");
    std::optional<std::vector<std::string>> vars;
    if (!c.vars.empty()) vars = split_vars(c.vars);
    auto parsed = parse_ideal(c.ideal_text, vars);
    if (!parsed.was_minimal) {
        std::cerr << "warning: input generators were not minimal; using " << parsed.ideal.size()
                  << " minimal generators\n";
    }
    return std::move(parsed.ideal);
}

void check_format(const std::string& format) {
    if (format != "table" && format != "json" && format != "csv") {
        throw Error("unknown --format '" + format + "' (expected table, json or csv)");
    }
}

void print_table(const TextTable& table, const std::string& format) {
    std::cout << (format == "csv" ? table.csv() : table.str());
}

std::string pair_name(PairVertex p) { return "l(" + std::to_string(p.i) + "," + std::to_string(p.j) + ")"; }

// ---- subcommands --------------------------------------------------------------

int cmd_power(const Common& c) {
    const auto ideal = load_ideal(c);
    const auto power = ideal_power(ideal, c.power);
    if (c.format == "json") {
        auto j = to_json(power);
        j["s"] = power.size();
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    if (c.format == "csv") {
        for (const auto& g : power.gens()) std::cout << to_string(g, power.vars()) << '\n';
        return kOk;
    }
    std::cout << "I^" << c.power << " minimal generators: s = " << power.size() << '\n';
    for (const auto& g : power.gens()) std::cout << "  " << to_string(g, power.vars()) << '\n';
    return kOk;
}

int cmd_build_l2(const Common& c) {
    const auto ideal = load_ideal(c);
    const auto l2 = build_l2i(ideal);
    const int q = static_cast<int>(ideal.size());
    const auto& delta = l2.complex;
    if (c.format == "json") {
        auto j = to_json(delta);
        Json pairs = Json::object();
        for (auto v : delta.complex().vertex_set().vertices()) {
            const auto p = pair_vertex_from_id(v, q);
            pairs[std::to_string(v)] = {p.i, p.j};
        }
        j["pairs"] = pairs;
        j["deletion"] = to_json(l2.record);
        std::cout << j.dump(2) << '\n';
        return kOk;
    }
    std::cout << "L^2(I) for I = (" << to_string(ideal) << "), q = " << q << ", s = " << l2.record.s << '\n';
    std::cout << "vertices:\n";
    for (auto v : delta.complex().vertex_set().vertices()) {
        std::cout << "  " << v << ' ' << pair_name(pair_vertex_from_id(v, q)) << ' '
                  << to_string(delta.label(v), ideal.vars()) << '\n';
    }
    std::cout << "facets:\n";
    for (auto f : delta.complex().facets()) {
        std::cout << "  dim " << f.dim() << ":";
        for (auto v : f.vertices()) std::cout << ' ' << pair_name(pair_vertex_from_id(v, q));
        std::cout << '\n';
    }
    std::cout << "deleted:";
    if (l2.record.deleted.empty()) std::cout << " none";
    for (const auto& p : l2.record.deleted) std::cout << ' ' << pair_name(p);
    std::cout << "\nt:";
    for (int t : l2.record.t) std::cout << ' ' << t;
    std::cout << '\n';
    print_table(betti_text_table(betti_upper_bounds(delta, c.limits), "faces_d"), "table");
    return kOk;
}

struct Target {
    MonomialIdeal ideal;
    LabeledComplex complex;
    std::string description;
};

Target resolve_target(const Common& c, const std::string& complex_file, const std::string& via) {
    const auto base = load_ideal(c);
    auto ideal = c.power == 1 ? base : ideal_power(base, c.power);
    if (!complex_file.empty()) {
        std::ifstream in(complex_file);
        if (!in) throw Error("cannot open complex file '" + complex_file + "'");
        const auto j = Json::parse(in);
        return {ideal, labeled_complex_from_json(j, ideal.vars()), "complex from " + complex_file};
    }
    const bool l2_possible = c.power == 2 && base.is_squarefree();
    if (via == "l2" || (via == "auto" && l2_possible)) {
        if (!l2_possible) throw Error("--via l2 needs --power 2 and a square-free ideal");
        return {ideal, build_l2i(base).complex, "L^2(I)"};
    }
    if (via != "taylor" && via != "auto") throw Error("unknown --via '" + via + "' (expected auto, taylor or l2)");
    return {ideal, taylor_complex(ideal, c.limits), "Taylor"};
}

int cmd_check_support(const Common& c, const std::string& complex_file) {
    const auto target = resolve_target(c, complex_file, "auto");
    const auto field = FieldSpec::parse(c.field);
    const auto& vars = target.ideal.vars();

    std::optional<SupportResult> connectivity;
    std::string inapplicable;
    try {
        connectivity = supports_resolution_quasitree(target.complex, target.ideal);
    } catch (const CriterionInapplicable& e) {
        inapplicable = e.what();
    }
    const auto homological = supports_resolution_homological(target.complex, target.ideal, field, c.limits);
    const bool pass = homological.supported && (!connectivity || connectivity->supported);

    if (c.format == "json") {
        Json j{{"complex", target.description}, {"field", field.to_string()}, {"pass", pass}};
        if (connectivity) {
            j["connectivity"] = {{"pass", connectivity->supported}};
            if (connectivity->witness) j["connectivity"]["witness"] = to_string(*connectivity->witness, vars);
        } else {
            j["connectivity"] = {{"applicable", false}, {"reason", inapplicable}};
        }
        j["acyclicity"] = {{"pass", homological.supported}};
        if (homological.witness) {
            j["acyclicity"]["witness"] = to_string(*homological.witness, vars);
            j["acyclicity"]["degree"] = *homological.degree;
        }
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "complex: " << target.description << " (" << target.complex.complex().num_vertices()
                  << " vertices), ideal: " << to_string(target.ideal) << '\n';
        std::cout << "connectivity criterion: ";
        if (!connectivity) {
            std::cout << "N/A (" << inapplicable << ")\n";
        } else if (connectivity->supported) {
            std::cout << "PASS\n";
        } else {
            std::cout << "FAIL witness m=" << to_string(*connectivity->witness, vars) << '\n';
        }
        std::cout << "acyclicity criterion:   ";
        if (homological.supported) {
            std::cout << "PASS\n";
        } else {
            std::cout << "FAIL witness m=" << to_string(*homological.witness, vars) << " degree "
                      << *homological.degree << '\n';
        }
        std::cout << (pass ? "PASS" : "FAIL") << '\n';
    }
    return pass ? kOk : kFail;
}

int cmd_betti(const Common& c, bool graded, const std::string& via, const std::string& complex_file) {
    const auto target = resolve_target(c, complex_file, via);
    const auto field = FieldSpec::parse(c.field);
    const auto table = betti_numbers(target.complex, target.ideal, field, c.limits);
    const auto& vars = target.ideal.vars();
    if (c.format == "json") {
        BettiTable out = table;
        if (!graded) out.graded.reset();
        std::cout << to_json(out, vars).dump(2) << '\n';
        return kOk;
    }
    print_table(betti_text_table(table), c.format);
    if (graded) {
        if (c.format == "csv") {
            std::cout << "d,m,rank\n";
        } else {
            std::cout << "graded:\n";
        }
        for (const auto& e : *table.graded) {
            if (c.format == "csv") {
                std::cout << e.d << ',' << to_string(e.multidegree, vars) << ',' << e.rank << '\n';
            } else {
                std::cout << "  " << e.d << ' ' << to_string(e.multidegree, vars) << ' ' << e.rank << '\n';
            }
        }
    }
    return kOk;
}

int cmd_bounds(const Common& c) {
    const auto ideal = load_ideal(c);
    const auto table = bound_table(ideal, FieldSpec::parse(c.field), c.limits);
    if (c.format == "json") {
        std::cout << to_json(table).dump(2) << '\n';
    } else {
        print_table(bound_text_table(table), c.format);
    }
    return kOk;
}

int cmd_verify(const Common& c, SweepConfig config) {
    config.options.field = FieldSpec::parse(c.field);
    config.options.limits = c.limits;
    const auto report = run_sweep(config);
    if (c.format == "json") {
        Json instances = Json::array();
        for (const auto& inst : report.instances) {
            Json checks = Json::array();
            for (const auto& ch : inst.checks) {
                checks.push_back({{"name", ch.name}, {"pass", ch.passed}, {"detail", ch.detail}});
            }
            instances.push_back({{"index", inst.index}, {"ideal", inst.ideal}, {"pass", inst.passed()}, {"checks", checks}});
        }
        std::cout << Json{{"seed", config.seed}, {"count", config.count}, {"failed", report.failures()},
                          {"instances", instances}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << format_sweep(config, report);
    }
    return report.failures() == 0 ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simplicial resolutions of second powers of square-free monomial ideals"};
    app.require_subcommand(1);

    Common common;
    try {
        env_override("L2RES_MAX_FACES", common.limits.max_faces);
        env_override("L2RES_MAX_TAYLOR", common.limits.max_taylor_vertices);
        env_override("L2RES_MAX_Q", common.limits.max_enumeration_q);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }

    auto add_common = [&](CLI::App* sub, bool takes_ideal, bool q_cap = true) {
        if (takes_ideal) {
            sub->add_option("IDEAL", common.ideal_text, "Ideal, e.g. \"abe,bc,cdf,ad\" or \"x1*x2,x2*x3\"");
            sub->add_option("--ideal", common.ideal_text, "Ideal (alternative to the positional form)");
            sub->add_option("--vars", common.vars, "Comma-separated variable order");
        }
        sub->add_option("--format", common.format, "table | json | csv")->capture_default_str();
        sub->add_option("--field", common.field, "rational | gf:p")->capture_default_str();
        sub->add_option("--max-faces", common.limits.max_faces, "Cap on enumerated faces")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        sub->add_option("--max-taylor", common.limits.max_taylor_vertices, "Cap on Taylor complex vertices")
            ->capture_default_str()
            ->check(CLI::PositiveNumber);
        if (q_cap) {
            sub->add_option("--max-q", common.limits.max_enumeration_q, "Cap on q for enumeration paths")
                ->capture_default_str()
                ->check(CLI::PositiveNumber);
        }
    };

    auto* power = app.add_subcommand("power", "Minimal generators of I^r");
    add_common(power, true);
    power->add_option("--power", common.power, "Exponent r (default 2)")->check(CLI::PositiveNumber);

    auto* build = app.add_subcommand("build-l2", "Build the labeled complex L^2(I) and its deletion record");
    add_common(build, true);

    std::string complex_file;
    std::string via = "auto";
    auto* check = app.add_subcommand("check-support", "Test whether a labeled complex supports a resolution");
    add_common(check, true);
    check->add_option("--power", common.power, "Resolve I^r (default 1)")->check(CLI::PositiveNumber);
    check->add_option("--complex", complex_file, "Labeled complex JSON file")->check(CLI::ExistingFile);

    bool graded = false;
    auto* betti = app.add_subcommand("betti", "Exact Betti numbers of I^r");
    add_common(betti, true);
    betti->add_option("--power", common.power, "Exponent r (default 1)")->check(CLI::PositiveNumber);
    betti->add_flag("--graded", graded, "Also list multigraded Betti numbers");
    betti->add_option("--via", via, "Supporting complex: auto | taylor | l2")->capture_default_str();
    betti->add_option("--complex", complex_file, "Labeled complex JSON file")->check(CLI::ExistingFile);

    auto* bounds = app.add_subcommand("bounds", "Betti number bounds for I^2");
    add_common(bounds, true);

    SweepConfig sweep;
    auto* verify = app.add_subcommand("verify", "Random sweep of the invariant suite");
    add_common(verify, false, false);
    verify->add_option("--seed", sweep.seed, "Random seed")->capture_default_str();
    verify->add_option("--count", sweep.count, "Number of random ideals")->capture_default_str();
    verify->add_option("--max-n", sweep.max_n, "Maximum number of variables")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_option("--max-q", sweep.max_q, "Maximum number of generators")->capture_default_str()->check(CLI::PositiveNumber);
    verify->add_flag("--taylor-check", sweep.options.taylor_check, "Compare against Betti numbers from Taylor(I^2)");
    verify->add_flag("--fixtures", sweep.fixtures, "Append fixed literature ideals (with the sharpness check)");

    bool power_given = false;
    try {
        app.parse(argc, argv);
        power_given = power->count("--power") > 0;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kError;
    }

    try {
        check_format(common.format);
        if (*power) {
            if (!power_given) common.power = 2;
            return cmd_power(common);
        }
        if (*build) return cmd_build_l2(common);
        if (*check) return cmd_check_support(common, complex_file);
        if (*betti) return cmd_betti(common, graded, via, complex_file);
        if (*bounds) return cmd_bounds(common);
        // verify's --max-q is the sweep range; the enumeration cap comes from L2RES_MAX_Q there.
        if (*verify) return cmd_verify(common, sweep);
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return kResource;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
