// cch: command line front end over the orbit, building and chain complex modules.
//
// Exit codes: 0 success, 2 input error, 3 internal error, 4 mathematical failure.

#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "cch/document.hpp"
#include "cch/errors.hpp"
#include "report.hpp"

namespace {

using namespace cch;

struct Options {
    std::string input;
    std::string format = "text";
    std::optional<std::string> degrees, action_cap, budgets, variant, x, z;
    std::optional<std::int64_t> k_max;
    std::optional<int> target_index, negative_ends;
};

template <class T>
T pick(const std::optional<T>& flag, const std::optional<T>& doc, T fallback) {
    if (flag) return *flag;
    if (doc) return *doc;
    return fallback;
}

void emit(const report::Json& j) { std::cout << j.dump(2) << "\n"; }

Document load(const Options& o) {
    if (o.input.empty()) throw InputError("--input is required");
    Document doc = load_document(o.input);
    if (o.action_cap)
        doc.set.action_cap = parse_cap(*o.action_cap);
    else if (doc.params.action_cap)
        doc.set.action_cap = *doc.params.action_cap;
    return doc;
}

Variant parse_variant(const std::string& s) {
    if (s == "minus") return Variant::minus;
    if (s == "plus") return Variant::plus;
    throw InputError("--variant: expected minus or plus, got '" + s + "'");
}

int run_cz(const Options& o) {
    Document doc = load(o);
    std::int64_t k_max = pick(o.k_max, doc.params.k_max, std::int64_t{5});
    if (k_max < 0) throw InputError("--k-max must be non-negative");
    if (o.format == "json")
        emit(report::cz_json(doc.set, k_max));
    else
        report::cz_text(std::cout, doc.set, k_max);
    return 0;
}

int run_classify(const Options& o) {
    Document doc = load(o);
    std::int64_t k_cap = pick(o.k_max, doc.params.k_max, std::int64_t{100});
    if (k_cap < 1) throw InputError("--k-max must be positive");
    ConvexityReport conv = is_dynamically_convex(doc.set, k_cap);
    SeparationReport sep = is_dynamically_separated(doc.set, k_cap, doc.set.action_cap);
    if (o.format == "json")
        emit(report::classify_json(conv, sep));
    else
        report::classify_text(std::cout, conv, sep);
    return 0;
}

int run_buildings(const Options& o) {
    Document doc = load(o);
    Budgets budgets = o.budgets ? Budgets::parse(*o.budgets) : pick(std::optional<Budgets>{}, doc.params.budgets, Budgets{});
    report::BuildingsRun run;
    run.target_index = pick(o.target_index, doc.params.target_index, 2);
    run.negative_ends = pick(o.negative_ends, doc.params.negative_ends, 1);
    run.x = o.x ? o.x : doc.params.x;
    run.z = o.z ? o.z : doc.params.z;
    if (run.z && !run.x) throw InputError("--z needs --x");
    if (run.x) {
        Iterate x = parse_iterate(doc.set, *run.x);
        std::optional<Iterate> z;
        if (run.z) z = parse_iterate(doc.set, *run.z);
        run.enumeration = enumerate_between(doc.set, x, z, budgets);
        run.target_index = z ? doc.set.mu(x) - doc.set.mu(*z) : doc.set.mu(x) - 1;
        run.negative_ends = z ? 1 : 0;
        if (z) run.condition_d = verify_condition_D(doc.set, x, *z, budgets);
    } else {
        if (run.negative_ends != 0 && run.negative_ends != 1) throw InputError("--negative-ends must be 0 or 1");
        run.enumeration = enumerate_buildings(doc.set, run.target_index, run.negative_ends, budgets);
    }
    run.lemmas = verify_lemmas(doc.set, budgets);
    if (o.format == "json")
        emit(report::buildings_json(doc.set, run));
    else
        report::buildings_text(std::cout, doc.set, run);
    return 0;
}

int run_homology(const Options& o) {
    Document doc = load(o);
    auto [lo, hi] = o.degrees ? parse_degrees(*o.degrees) : pick(std::optional<std::pair<int, int>>{},
                                                                 doc.params.degrees, std::pair<int, int>{0, 40});
    std::int64_t k_cap = pick(o.k_max, doc.params.k_max, std::int64_t{1000});
    if (k_cap < 1) throw InputError("--k-max must be positive");
    report::HomologyRun run;
    run.variant = o.variant ? parse_variant(*o.variant) : pick(std::optional<Variant>{}, doc.params.variant, Variant::minus);
    validate_moduli(doc.set, doc.moduli);
    run.table = build_generators(doc.set, doc.set.action_cap, lo, hi, k_cap);
    run.complex = differential(doc.set, run.table, doc.moduli, run.variant);
    run.d_squared = check_d_squared(run.complex);
    if (run.d_squared.ok) run.homology = homology(run.complex);
    if (o.format == "json")
        emit(report::homology_json(run));
    else
        report::homology_text(std::cout, run);
    return run.d_squared.ok ? 0 : 4;
}

int run_cobordism(const Options& o) {
    CobordismTable t = cobordism_grading_table();
    if (o.format == "json")
        emit(report::cobordism_json(t));
    else
        report::cobordism_text(std::cout, t);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Orbit indices, holomorphic buildings and chain complexes for contact 3-manifolds"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub, bool needs_input) {
        auto* in = sub->add_option("--input", o.input, "input document (JSON)");
        if (needs_input) in->required();
        sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));
        sub->add_option("--action-cap", o.action_cap, "action cap, P/Q or inf");
        sub->add_option("--k-max", o.k_max, "largest iterate");
    };

    auto* cz = app.add_subcommand("cz", "Conley-Zehnder indices, gradings and parities of iterates");
    common(cz, true);
    auto* classify = app.add_subcommand("classify", "dynamical convexity and separation");
    common(classify, true);
    auto* buildings = app.add_subcommand("buildings", "enumerate buildings and check the index lemmas");
    common(buildings, true);
    buildings->add_option("--budgets", o.budgets, "levels=..,degree=..,branch=..,components=..,iterate=..");
    buildings->add_option("--target-index", o.target_index, "total Fredholm index");
    buildings->add_option("--negative-ends", o.negative_ends, "0 or 1");
    buildings->add_option("--x", o.x, "top orbit, name^k");
    buildings->add_option("--z", o.z, "bottom orbit, name^k");
    auto* homology = app.add_subcommand("homology", "filtered chain complex and its homology");
    common(homology, true);
    homology->add_option("--degrees", o.degrees, "degree window LO..HI");
    homology->add_option("--variant", o.variant, "minus or plus")->check(CLI::IsMember({"minus", "plus"}));
    auto* cobordism = app.add_subcommand("cobordism", "grading table for the ellipsoid cobordism");
    cobordism->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*cz) return run_cz(o);
        if (*classify) return run_classify(o);
        if (*buildings) return run_buildings(o);
        if (*homology) return run_homology(o);
        return run_cobordism(o);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const MathError& e) {
        std::cerr << "mathematical failure: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
