#include "cch/document.hpp"

#include <charconv>
#include <fstream>
#include <initializer_list>
#include <set>

#include "cch/errors.hpp"
#include "cch/models.hpp"

namespace cch {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& msg) { throw InputError(path + ": " + msg); }

std::string child(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }
std::string element(const std::string& path, std::size_t i) { return path + "[" + std::to_string(i) + "]"; }

void expect_keys(const json& j, const std::string& path, std::initializer_list<const char*> allowed) {
    if (!j.is_object()) fail(path, "expected an object");
    std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : j.items())
        if (!ok.contains(key)) fail(child(path, key), "unknown field");
}

const json& required(const json& j, const std::string& path, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) fail(child(path, key), "missing required field");
    return *it;
}

std::string get_string(const json& j, const std::string& path) {
    if (!j.is_string()) fail(path, "expected a string");
    return j.get<std::string>();
}

std::int64_t get_int(const json& j, const std::string& path) {
    if (!j.is_number_integer()) fail(path, "expected an integer");
    return j.get<std::int64_t>();
}

int get_small_int(const json& j, const std::string& path) {
    std::int64_t v = get_int(j, path);
    if (v < -1000000 || v > 1000000) fail(path, "integer out of range");
    return static_cast<int>(v);
}

Rational get_rational(const json& j, const std::string& path) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    std::string s = get_string(j, path);
    try {
        return Rational::parse(s);
    } catch (const std::exception& e) {
        fail(path, std::string("malformed rational '") + s + "': " + e.what());
    }
}

RotationNumber get_rotation(const json& j, const std::string& path) {
    std::string s = get_string(j, path);
    try {
        return RotationNumber::parse(s);
    } catch (const std::exception& e) {
        fail(path, "malformed rotation number '" + s + "': " + e.what());
    }
}

std::optional<Rational> get_cap(const json& j, const std::string& path) {
    if (j.is_string() && j.get<std::string>() == "inf") return std::nullopt;
    Rational r = get_rational(j, path);
    if (r <= Rational(0)) fail(path, "action cap must be positive");
    return r;
}

template <class F>
auto wrap(const std::string& path, F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const InputError& e) {
        fail(path, e.what());
    }
}

SimpleOrbit parse_orbit(const json& j, const std::string& path) {
    expect_keys(j, path, {"name", "type", "rotation", "periodic", "action", "seed"});
    SimpleOrbit o;
    o.name = get_string(required(j, path, "name"), child(path, "name"));
    o.type = wrap(child(path, "type"), [&] {
        return orbit_type_from_string(get_string(required(j, path, "type"), child(path, "type")));
    });
    bool has_rot = j.contains("rotation"), has_per = j.contains("periodic");
    if (has_rot == has_per) fail(path, "exactly one of 'rotation' and 'periodic' is required");
    if (has_rot) {
        o.cz = RotationModel{get_rotation(j.at("rotation"), child(path, "rotation"))};
    } else {
        const json& p = j.at("periodic");
        std::string pp = child(path, "periodic");
        expect_keys(p, pp, {"period", "residues", "increment"});
        PeriodicAffineModel pa;
        pa.period = get_small_int(required(p, pp, "period"), child(pp, "period"));
        const json& res = required(p, pp, "residues");
        if (!res.is_array()) fail(child(pp, "residues"), "expected an array");
        for (std::size_t i = 0; i < res.size(); ++i)
            pa.residues.push_back(get_small_int(res[i], element(child(pp, "residues"), i)));
        pa.increment = get_small_int(required(p, pp, "increment"), child(pp, "increment"));
        o.cz = pa;
    }
    o.action = get_rational(required(j, path, "action"), child(path, "action"));
    if (j.contains("seed")) o.homotopy_seed = get_small_int(j.at("seed"), child(path, "seed"));
    wrap(path, [&] { o.validate(); });
    return o;
}

FreeHomotopyModel parse_homotopy(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string kind = get_string(required(j, path, "kind"), child(path, "kind"));
    if (kind == "trivial") {
        expect_keys(j, path, {"kind"});
        return TrivialHomotopy{};
    }
    if (kind == "cyclic") {
        expect_keys(j, path, {"kind", "order"});
        return CyclicHomotopy{get_small_int(required(j, path, "order"), child(path, "order"))};
    }
    if (kind == "table") {
        expect_keys(j, path, {"kind", "bound", "classes"});
        TableHomotopy t;
        t.bound = get_small_int(required(j, path, "bound"), child(path, "bound"));
        const json& cls = required(j, path, "classes");
        std::string cp = child(path, "classes");
        if (!cls.is_object()) fail(cp, "expected an object");
        for (const auto& [name, row] : cls.items()) {
            std::string rp = child(cp, name);
            if (!row.is_array()) fail(rp, "expected an array");
            std::vector<int> labels;
            for (std::size_t i = 0; i < row.size(); ++i) labels.push_back(get_small_int(row[i], element(rp, i)));
            t.classes[name] = std::move(labels);
        }
        return t;
    }
    fail(child(path, "kind"), "unknown homotopy kind '" + kind + "'");
}

OrbitSet parse_orbit_set(const json& j, const std::string& path) {
    expect_keys(j, path, {"orbits", "homotopy", "action_cap", "notes"});
    OrbitSet set;
    const json& orbits = required(j, path, "orbits");
    if (!orbits.is_array()) fail(child(path, "orbits"), "expected an array");
    for (std::size_t i = 0; i < orbits.size(); ++i)
        set.orbits.push_back(parse_orbit(orbits[i], element(child(path, "orbits"), i)));
    if (j.contains("homotopy")) set.homotopy = parse_homotopy(j.at("homotopy"), child(path, "homotopy"));
    if (j.contains("action_cap")) set.action_cap = get_cap(j.at("action_cap"), child(path, "action_cap"));
    if (j.contains("notes")) set.notes = get_string(j.at("notes"), child(path, "notes"));
    wrap(path, [&] { set.validate(); });
    return set;
}

MorseData parse_morse(const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    MorseData h;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string ep = element(path, i);
        expect_keys(j[i], ep, {"name", "index"});
        h.points.push_back({get_string(required(j[i], ep, "name"), child(ep, "name")),
                            get_small_int(required(j[i], ep, "index"), child(ep, "index"))});
    }
    return h;
}

OrbitSet parse_model(const json& j, const std::string& path) {
    if (!j.is_object()) fail(path, "expected an object");
    std::string kind = get_string(required(j, path, "kind"), child(path, "kind"));
    OrbitSet set;
    if (kind == "ellipsoid") {
        expect_keys(j, path, {"kind", "phi1", "phi2", "action1", "action2", "names", "action_cap"});
        EllipsoidSpec spec;
        spec.phi1 = get_rotation(required(j, path, "phi1"), child(path, "phi1"));
        spec.phi2 = get_rotation(required(j, path, "phi2"), child(path, "phi2"));
        if (j.contains("action1")) spec.action1 = get_rational(j.at("action1"), child(path, "action1"));
        if (j.contains("action2")) spec.action2 = get_rational(j.at("action2"), child(path, "action2"));
        std::string n1 = "gamma1", n2 = "gamma2";
        if (j.contains("names")) {
            const json& names = j.at("names");
            if (!names.is_array() || names.size() != 2) fail(child(path, "names"), "expected two names");
            n1 = get_string(names[0], element(child(path, "names"), 0));
            n2 = get_string(names[1], element(child(path, "names"), 1));
        }
        set = wrap(path, [&] { return ellipsoid(spec, n1, n2); });
    } else if (kind == "prequantized_s3") {
        expect_keys(j, path, {"kind", "morse", "action_cap"});
        MorseData h = j.contains("morse") ? parse_morse(j.at("morse"), child(path, "morse")) : height_function();
        set = wrap(path, [&] { return prequantized_s3(h); });
    } else if (kind == "lens_space") {
        expect_keys(j, path, {"kind", "n", "morse", "action_cap"});
        int n = get_small_int(required(j, path, "n"), child(path, "n"));
        MorseData h = j.contains("morse") ? parse_morse(j.at("morse"), child(path, "morse")) : height_function();
        set = wrap(path, [&] { return lens_space(n, h); });
    } else {
        fail(child(path, "kind"), "unknown model kind '" + kind + "'");
    }
    if (j.contains("action_cap")) set.action_cap = get_cap(j.at("action_cap"), child(path, "action_cap"));
    return set;
}

Iterate parse_iterate_ref(const OrbitSet& set, const json& j, const std::string& path) {
    expect_keys(j, path, {"orbit", "k"});
    std::string name = get_string(required(j, path, "orbit"), child(path, "orbit"));
    auto idx = set.find(name);
    if (!idx) fail(child(path, "orbit"), "unknown orbit '" + name + "'");
    std::int64_t k = get_int(required(j, path, "k"), child(path, "k"));
    if (k < 1 || k > 1000000) fail(child(path, "k"), "multiplicity must be in 1..1000000");
    return {static_cast<std::uint32_t>(*idx), static_cast<std::uint32_t>(k)};
}

ModuliInput parse_moduli(const OrbitSet& set, const json& j, const std::string& path) {
    if (!j.is_array()) fail(path, "expected an array");
    ModuliInput m;
    for (std::size_t i = 0; i < j.size(); ++i) {
        std::string ep = element(path, i);
        expect_keys(j[i], ep, {"x", "y", "sign", "m_u"});
        ModuliRecord r;
        r.x = parse_iterate_ref(set, required(j[i], ep, "x"), child(ep, "x"));
        r.y = parse_iterate_ref(set, required(j[i], ep, "y"), child(ep, "y"));
        r.sign = get_small_int(required(j[i], ep, "sign"), child(ep, "sign"));
        r.m_u = j[i].contains("m_u") ? get_small_int(j[i].at("m_u"), child(ep, "m_u")) : 1;
        m.records.push_back(r);
    }
    wrap(path, [&] { validate_moduli(set, m); });
    return m;
}

Budgets parse_budgets(const json& j, const std::string& path) {
    if (j.is_string()) return wrap(path, [&] { return Budgets::parse(j.get<std::string>()); });
    expect_keys(j, path, {"levels", "degree", "branch", "components", "iterate"});
    Budgets b;
    auto field = [&](const char* key, int& out) {
        if (!j.contains(key)) return;
        out = get_small_int(j.at(key), child(path, key));
        if (out < 0) fail(child(path, key), "budget must be nonnegative");
    };
    field("levels", b.max_levels);
    field("degree", b.max_cover_degree);
    field("branch", b.max_branch);
    field("components", b.max_components_per_level);
    field("iterate", b.max_iterate);
    return b;
}

Parameters parse_parameters(const json& j, const std::string& path) {
    expect_keys(j, path,
                {"k_max", "degrees", "action_cap", "budgets", "variant", "target_index", "negative_ends", "x", "z"});
    Parameters p;
    if (j.contains("k_max")) p.k_max = get_int(j.at("k_max"), child(path, "k_max"));
    if (j.contains("degrees"))
        p.degrees = wrap(child(path, "degrees"),
                         [&] { return parse_degrees(get_string(j.at("degrees"), child(path, "degrees"))); });
    if (j.contains("action_cap")) p.action_cap = get_cap(j.at("action_cap"), child(path, "action_cap"));
    if (j.contains("budgets")) p.budgets = parse_budgets(j.at("budgets"), child(path, "budgets"));
    if (j.contains("variant")) {
        std::string v = get_string(j.at("variant"), child(path, "variant"));
        if (v == "minus") p.variant = Variant::minus;
        else if (v == "plus") p.variant = Variant::plus;
        else fail(child(path, "variant"), "expected 'minus' or 'plus'");
    }
    if (j.contains("target_index")) p.target_index = get_small_int(j.at("target_index"), child(path, "target_index"));
    if (j.contains("negative_ends"))
        p.negative_ends = get_small_int(j.at("negative_ends"), child(path, "negative_ends"));
    if (j.contains("x")) p.x = get_string(j.at("x"), child(path, "x"));
    if (j.contains("z")) p.z = get_string(j.at("z"), child(path, "z"));
    return p;
}

}  // namespace

Document parse_document(const json& j) {
    expect_keys(j, "document", {"version", "orbit_set", "model", "moduli", "parameters"});
    Document doc;
    doc.version = get_string(required(j, "document", "version"), "version");
    if (doc.version != kDocumentVersion) fail("version", "unsupported document version '" + doc.version + "'");
    bool has_set = j.contains("orbit_set"), has_model = j.contains("model");
    if (has_set == has_model) fail("document", "exactly one of 'orbit_set' and 'model' is required");
    doc.set = has_set ? parse_orbit_set(j.at("orbit_set"), "orbit_set") : parse_model(j.at("model"), "model");
    if (j.contains("moduli")) doc.moduli = parse_moduli(doc.set, j.at("moduli"), "moduli");
    if (j.contains("parameters")) doc.params = parse_parameters(j.at("parameters"), "parameters");
    return doc;
}

Document load_document(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError(path.string() + ": cannot open");
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw InputError(path.string() + ": invalid JSON: " + e.what());
    }
    return parse_document(j);
}

std::optional<Rational> parse_cap(std::string_view text) {
    if (text == "inf") return std::nullopt;
    Rational r;
    try {
        r = Rational::parse(text);
    } catch (const std::exception& e) {
        throw InputError("malformed action cap '" + std::string(text) + "'");
    }
    if (r <= Rational(0)) throw InputError("action cap must be positive");
    return r;
}

std::string cap_str(const std::optional<Rational>& cap) { return cap ? cap->str() : "inf"; }

std::pair<int, int> parse_degrees(std::string_view text) {
    auto dots = text.find("..");
    if (dots == std::string_view::npos) throw InputError("degree range must look like LO..HI");
    auto num = [&](std::string_view s) {
        int v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
            throw InputError("malformed degree bound '" + std::string(s) + "'");
        return v;
    };
    int lo = num(text.substr(0, dots)), hi = num(text.substr(dots + 2));
    if (lo > hi) throw InputError("degree range is empty");
    return {lo, hi};
}

Iterate parse_iterate(const OrbitSet& set, std::string_view label) {
    std::string_view name = label;
    std::uint32_t k = 1;
    if (auto caret = label.rfind('^'); caret != std::string_view::npos) {
        name = label.substr(0, caret);
        std::string_view ks = label.substr(caret + 1);
        auto [ptr, ec] = std::from_chars(ks.data(), ks.data() + ks.size(), k);
        if (ec != std::errc{} || ptr != ks.data() + ks.size() || k < 1)
            throw InputError("malformed iterate '" + std::string(label) + "'");
    }
    auto idx = set.find(name);
    if (!idx) throw InputError("unknown orbit '" + std::string(name) + "'");
    return {static_cast<std::uint32_t>(*idx), k};
}

}  // namespace cch
