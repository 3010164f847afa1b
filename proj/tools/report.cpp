#include "report.hpp"

#include <iomanip>
#include <ostream>

#include "cch/document.hpp"

namespace cch::report {

namespace {

Json budgets_json(const Budgets& b) {
    return Json{{"max_levels", b.max_levels},
                {"max_cover_degree", b.max_cover_degree},
                {"max_branch", b.max_branch},
                {"max_components_per_level", b.max_components_per_level},
                {"max_iterate", b.max_iterate}};
}

Json component_json(const OrbitSet& set, const Component& c) {
    Json negs = Json::array();
    for (const auto& n : c.config.negatives) negs.push_back(set.label(n));
    return Json{{"kind", to_string(c.kind)}, {"positive", set.label(c.config.positive)},
                {"negatives", negs},         {"k", c.k},
                {"b", c.b},                  {"index", c.index},
                {"index_lb", c.index_lb}};
}

Json building_json(const OrbitSet& set, const Building& b, bool classify) {
    Json levels = Json::array();
    for (const auto& level : b.levels) {
        Json l = Json::array();
        for (const auto& c : level) l.push_back(component_json(set, c));
        levels.push_back(l);
    }
    Json out{{"index", b.total_index()}, {"description", describe(set, b)}, {"levels", levels}};
    if (classify) out["type"] = to_string(classify_index2(set, b));
    return out;
}

Json strings(const std::vector<std::string>& v) {
    Json a = Json::array();
    for (const auto& s : v) a.push_back(s);
    return a;
}

const char* pass_fail(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

Json cz_json(const OrbitSet& set, std::int64_t k_max) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const SimpleOrbit& o = set.orbits[i];
        std::int64_t lim = k_max;
        for (std::int64_t k = 1; k <= lim; ++k)
            rows.push_back(Json{{"orbit", o.name},
                                {"k", k},
                                {"mu", cz_index(o, k)},
                                {"grading", grading(o, k)},
                                {"parity", to_string(parity_z2(o, k))},
                                {"bad", is_bad(o, k)},
                                {"action", iterate_action(o, k).str()},
                                {"class", class_of(set, i, k)}});
    }
    return Json{{"command", "cz"}, {"version", kDocumentVersion}, {"k_max", k_max}, {"rows", rows}};
}

void cz_text(std::ostream& os, const OrbitSet& set, std::int64_t k_max) {
    os << std::left << std::setw(16) << "orbit" << std::right << std::setw(5) << "k" << std::setw(7) << "mu"
       << std::setw(9) << "grading" << "  " << std::left << std::setw(7) << "parity" << std::setw(6) << "good"
       << std::setw(12) << "action" << "class\n";
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const SimpleOrbit& o = set.orbits[i];
        std::int64_t lim = k_max;
        for (std::int64_t k = 1; k <= lim; ++k)
            os << std::left << std::setw(16) << o.name << std::right << std::setw(5) << k << std::setw(7)
               << cz_index(o, k) << std::setw(9) << grading(o, k) << "  " << std::left << std::setw(7)
               << to_string(parity_z2(o, k)) << std::setw(6) << (is_bad(o, k) ? "bad" : "good") << std::setw(12)
               << iterate_action(o, k).str() << class_of(set, i, k) << "\n";
    }
}

Json classify_json(const ConvexityReport& conv, const SeparationReport& sep) {
    Json cv = Json::array();
    for (const auto& v : conv.violations) cv.push_back(Json{{"orbit", v.orbit}, {"k", v.k}, {"mu", v.mu}});
    Json sv = Json::array();
    for (const auto& v : sep.violations) {
        Json e{{"condition", v.condition}, {"orbit", v.orbit}, {"class", v.homotopy_class}, {"k", v.k}, {"mu", v.mu}};
        if (v.condition == "II") {
            e["k_prev"] = v.k_prev;
            e["mu_prev"] = v.mu_prev;
        }
        sv.push_back(e);
    }
    return Json{{"command", "classify"},
                {"version", kDocumentVersion},
                {"k_cap", conv.k_cap},
                {"action_cap", cap_str(sep.action_cap)},
                {"dynamically_convex", Json{{"pass", conv.pass}, {"violations", cv}}},
                {"dynamically_separated", Json{{"pass", sep.pass}, {"violations", sv}}}};
}

void classify_text(std::ostream& os, const ConvexityReport& conv, const SeparationReport& sep) {
    os << "k cap " << conv.k_cap << ", action cap " << cap_str(sep.action_cap) << "\n";
    os << "dynamically convex: " << pass_fail(conv.pass) << "\n";
    for (const auto& v : conv.violations) os << "  mu(" << v.orbit << "^" << v.k << ") = " << v.mu << " < 3\n";
    os << "dynamically separated: " << pass_fail(sep.pass) << "\n";
    for (const auto& v : sep.violations) {
        os << "  FAIL condition " << v.condition << ": " << v.orbit << " class " << v.homotopy_class << ", ";
        if (v.condition == "II")
            os << "mu(^" << v.k_prev << ") = " << v.mu_prev << " -> mu(^" << v.k << ") = " << v.mu << " (increment "
               << v.mu - v.mu_prev << ")\n";
        else
            os << "first iterate k = " << v.k << " has mu = " << v.mu << "\n";
    }
}

Json buildings_json(const OrbitSet& set, const BuildingsRun& run) {
    bool classify = run.target_index == 2 && run.negative_ends == 1;
    Json blds = Json::array();
    for (const auto& b : run.enumeration.buildings) blds.push_back(building_json(set, b, classify));
    Json checks = Json::array();
    for (const auto& c : run.lemmas.checks)
        checks.push_back(Json{{"name", c.name},
                              {"applicable", c.applicable},
                              {"pass", c.pass},
                              {"examined", c.examined},
                              {"counterexamples", strings(c.counterexamples)}});
    Json types = Json::object();
    for (const auto& [k, v] : run.lemmas.index2_types) types[k] = v;
    Json out{{"command", "buildings"},
             {"version", kDocumentVersion},
             {"budgets", budgets_json(run.enumeration.budgets)},
             {"target_index", run.target_index},
             {"negative_ends", run.negative_ends},
             {"incomplete", run.enumeration.incomplete},
             {"truncations", strings(run.enumeration.truncations)},
             {"buildings", blds},
             {"lemmas", Json{{"pass", run.lemmas.pass()},
                             {"dynamically_convex", run.lemmas.dynamically_convex},
                             {"dynamically_separated", run.lemmas.dynamically_separated},
                             {"incomplete", run.lemmas.incomplete},
                             {"index2_types", types},
                             {"checks", checks}}}};
    if (run.condition_d) {
        const auto& d = *run.condition_d;
        Json ys = Json::array();
        for (const auto& y : d.intermediates) ys.push_back(Json{{"orbit", y.label}, {"mu", y.mu}, {"bad", y.bad}});
        Json dt = Json::object();
        for (const auto& [k, v] : d.types) dt[k] = v;
        out["condition_d"] = Json{{"x", *run.x},          {"z", *run.z},
                                  {"pass", d.pass},       {"incomplete", d.incomplete},
                                  {"intermediates", ys},  {"types", dt},
                                  {"counterexamples", strings(d.counterexamples)}};
    }
    return out;
}

void buildings_text(std::ostream& os, const OrbitSet& set, const BuildingsRun& run) {
    const auto& e = run.enumeration;
    bool classify = run.target_index == 2 && run.negative_ends == 1;
    os << "budgets " << e.budgets.str() << "\n";
    os << "target index " << run.target_index << ", negative ends " << run.negative_ends << ": "
       << e.buildings.size() << " building(s)" << (e.incomplete ? " [incomplete]" : "") << "\n";
    for (const auto& t : e.truncations) os << "  truncated by " << t << "\n";
    for (const auto& b : e.buildings) {
        os << "  ";
        if (classify) os << std::left << std::setw(9) << to_string(classify_index2(set, b)) << " ";
        os << describe(set, b) << "\n";
    }
    const auto& l = run.lemmas;
    os << "lemmas: " << pass_fail(l.pass()) << (l.incomplete ? " [incomplete]" : "") << " (dynamically convex "
       << (l.dynamically_convex ? "yes" : "no") << ", dynamically separated " << (l.dynamically_separated ? "yes" : "no")
       << ")\n";
    for (const auto& c : l.checks) {
        os << "  (" << c.name << ") " << (c.applicable ? pass_fail(c.pass) : "n/a") << ", " << c.examined
           << " examined\n";
        if (c.applicable)
            for (const auto& ce : c.counterexamples) os << "      " << ce << "\n";
    }
    os << "  index-2 types:";
    for (const auto& [k, v] : l.index2_types) os << " " << k << "=" << v;
    os << "\n";
    if (run.condition_d) {
        const auto& d = *run.condition_d;
        os << "condition D " << *run.x << " -> " << *run.z << ": " << pass_fail(d.pass)
           << (d.incomplete ? " [incomplete]" : "") << "\n";
        os << "  intermediates:";
        if (d.intermediates.empty()) os << " none";
        for (const auto& y : d.intermediates) os << " " << y.label << (y.bad ? "(bad)" : "");
        os << "\n";
        for (const auto& ce : d.counterexamples) os << "  " << ce << "\n";
    }
}

Json homology_json(const HomologyRun& run) {
    Json sq{{"ok", run.d_squared.ok}};
    if (run.d_squared.witness) {
        const auto& w = *run.d_squared.witness;
        sq["witness"] = Json{{"class", w.cls}, {"degree", w.degree}, {"x", w.x}, {"z", w.z}, {"value", w.value.get_str()}};
    }
    Json out{{"command", "homology"},
             {"version", kDocumentVersion},
             {"variant", to_string(run.variant)},
             {"degrees", Json::array({run.complex.deg_min, run.complex.deg_max})},
             {"action_cap", cap_str(run.table.action_cap)},
             {"k_cap", run.table.k_cap},
             {"dropped_records", Json{{"bad", run.complex.dropped_bad}, {"window", run.complex.dropped_window}}},
             {"d_squared", sq}};
    if (!run.homology) return out;
    const HomologyReport& h = *run.homology;
    Json classes = Json::array();
    for (const auto& [c, ch] : h.classes) {
        Json degs = Json::array();
        const auto& edges = run.complex.edge.at(c);
        for (const auto& [d, labels] : run.complex.basis.at(c)) {
            Json tors = Json::array();
            for (const auto& t : ch.torsion_z.at(d)) tors.push_back(t);
            degs.push_back(Json{{"degree", d},
                                {"generators", strings(labels)},
                                {"rank", ch.rank.at(d)},
                                {"rank_f2", ch.rank_f2.at(d)},
                                {"free_rank_z", ch.free_rank_z.at(d)},
                                {"torsion_z", tors},
                                {"edge", edges.contains(d)}});
        }
        classes.push_back(Json{{"class", c}, {"degrees", degs}});
    }
    Json total = Json::array();
    for (const auto& [d, r] : h.total) total.push_back(Json{{"degree", d}, {"rank", r}, {"edge", h.edge.contains(d)}});
    out["classes"] = classes;
    out["total"] = total;
    return out;
}

void homology_text(std::ostream& os, const HomologyRun& run) {
    os << (run.d_squared.ok ? "d^2 = 0: PASS\n" : "d^2 != 0: FAIL\n");
    if (run.d_squared.witness) {
        const auto& w = *run.d_squared.witness;
        os << "  class " << w.cls << ": <d^2 " << w.x << ", " << w.z << "> = " << w.value.get_str() << "\n";
    }
    if (!run.homology) return;
    const HomologyReport& h = *run.homology;
    os << "variant " << to_string(run.variant) << ", degrees " << h.deg_min << ".." << h.deg_max << ", action cap "
       << cap_str(run.table.action_cap) << "\n";
    if (run.complex.dropped_bad + run.complex.dropped_window > 0)
        os << "dropped records: " << run.complex.dropped_bad << " through bad orbits, " << run.complex.dropped_window
           << " outside the window\n";
    os << std::right << std::setw(6) << "degree";
    for (const auto& [c, ch] : h.classes) os << std::setw(10) << ("class " + std::to_string(c));
    os << std::setw(8) << "total" << "\n";
    for (const auto& [d, r] : h.total) {
        os << std::setw(6) << d;
        for (const auto& [c, ch] : h.classes) os << std::setw(10) << ch.rank.at(d);
        os << std::setw(8) << r << (h.edge.contains(d) ? "  edge" : "") << "\n";
    }
}

Json cobordism_json(const CobordismTable& t) {
    auto graded = [](const std::vector<GradedOrbit>& v) {
        Json a = Json::array();
        for (const auto& g : v) a.push_back(Json{{"orbit", g.label}, {"grading", g.grading}});
        return a;
    };
    auto pairs = [](const std::vector<std::pair<std::string, std::string>>& v) {
        Json a = Json::array();
        for (const auto& [u, l] : v) a.push_back(Json::array({u, l}));
        return a;
    };
    return Json{{"command", "cobordism"},
                {"version", kDocumentVersion},
                {"window", Json::array({t.window_lo, t.window_hi})},
                {"upper", graded(t.upper)},
                {"lower", graded(t.lower)},
                {"coincidences", pairs(t.coincidences)},
                {"simple_matches", pairs(t.simple_matches)},
                {"base_cylinder_index", t.base_cylinder_index},
                {"double_cover_index", t.double_cover_index}};
}

void cobordism_text(std::ostream& os, const CobordismTable& t) {
    os << "upper (phi = 1/2-eps):";
    for (const auto& g : t.upper) os << "  |" << g.label << "| = " << g.grading;
    os << "\nlower (phi = 1-eps):";
    for (const auto& g : t.lower) os << "  |" << g.label << "| = " << g.grading;
    os << "\nequal gradings:";
    for (const auto& [u, l] : t.coincidences) os << "  (" << u << ", " << l << ")";
    os << "\nsimple upper orbit:";
    for (const auto& [u, l] : t.simple_matches) os << "  (" << u << ", " << l << ")";
    os << "\nind(delta1 -> gamma1) = " << t.base_cylinder_index << "\nind(delta1^2 -> gamma1^2) = "
       << t.double_cover_index << "\n";
}

}  // namespace cch::report
