#include "cch/models.hpp"

#include <algorithm>
#include <set>

#include "cch/errors.hpp"

namespace cch {

OrbitSet ellipsoid(const EllipsoidSpec& spec, const std::string& name1, const std::string& name2) {
    if (spec.phi1.s == 0 || spec.phi2.s == 0)
        throw InputError("ellipsoid ratios need an infinitesimal offset (rational ellipsoids are degenerate)");
    if (spec.phi1.r * spec.phi2.r != Rational(1) || spec.phi2.s != -spec.phi1.s)
        throw InputError("ellipsoid ratios " + spec.phi1.str() + " and " + spec.phi2.str() + " are not reciprocal");
    if (spec.phi1.r <= Rational(0)) throw InputError("ellipsoid ratios must be positive");
    OrbitSet set;
    auto orbit = [](const std::string& name, const RotationNumber& phi, const Rational& action) {
        RotationNumber theta{phi.r + Rational(1), phi.s};
        return SimpleOrbit{name, OrbitType::elliptic, RotationModel{theta}, action, 0};
    };
    set.orbits = {orbit(name1, spec.phi1, spec.action1), orbit(name2, spec.phi2, spec.action2)};
    set.notes = "ellipsoid, phi1 = " + spec.phi1.str() + ", phi2 = " + spec.phi2.str();
    set.validate();
    return set;
}

void MorseData::validate() const {
    if (points.empty()) throw InputError("Morse data needs at least one critical point");
    std::set<std::string> names;
    int euler = 0;
    for (const auto& p : points) {
        if (p.name.empty()) throw InputError("critical point with empty name");
        if (!names.insert(p.name).second) throw InputError("duplicate critical point '" + p.name + "'");
        if (p.morse_index < 0 || p.morse_index > 2)
            throw InputError("critical point '" + p.name + "': Morse index must be 0, 1 or 2");
        euler += p.morse_index == 1 ? -1 : 1;
    }
    if (euler != 2)
        throw InputError("Morse data on S^2 needs #min - #saddle + #max = 2, got " + std::to_string(euler));
}

MorseData height_function() { return {{{"south", 0}, {"north", 2}}}; }

namespace {

Rational perturbed_action(int morse_index) { return Rational(1) + Rational(morse_index - 1, 100); }

}  // namespace

OrbitSet prequantized_s3(const MorseData& h) {
    h.validate();
    OrbitSet set;
    for (const auto& p : h.points) {
        SimpleOrbit o;
        o.name = "gamma_" + p.name;
        o.action = perturbed_action(p.morse_index);
        switch (p.morse_index) {
            case 0: o.type = OrbitType::elliptic; o.cz = RotationModel{{Rational(2), -1}}; break;
            case 1: o.type = OrbitType::positive_hyperbolic; o.cz = RotationModel{{Rational(2), 0}}; break;
            default: o.type = OrbitType::elliptic; o.cz = RotationModel{{Rational(2), 1}}; break;
        }
        set.orbits.push_back(std::move(o));
    }
    set.notes = "prequantized S^3 perturbed by a Morse function";
    set.validate();
    return set;
}

OrbitSet lens_space(int n, const MorseData& h) {
    if (n < 1) throw InputError("lens space parameter n must be >= 1");
    h.validate();
    OrbitSet set;
    set.homotopy = CyclicHomotopy{n + 1};
    for (const auto& p : h.points) {
        PeriodicAffineModel pa;
        pa.period = n + 1;
        pa.increment = 4;
        pa.residues.assign(static_cast<std::size_t>(n + 1), 1 + p.morse_index);
        pa.residues[0] = -1 + p.morse_index;
        set.orbits.push_back({"gamma_" + p.name, OrbitType::explicit_table, pa, perturbed_action(p.morse_index), 1});
    }
    set.notes = "lens space L(" + std::to_string(n + 1) + ", " + std::to_string(n) + ")";
    set.validate();
    return set;
}

CobordismTable cobordism_grading_table() {
    CobordismTable t;
    OrbitSet upper = ellipsoid({{Rational(1, 2), -1}, {Rational(2), 1}, Rational(1), Rational(2)}, "delta1", "delta2");
    OrbitSet lower = ellipsoid({{Rational(1), -1}, {Rational(1), 1}, Rational(1), Rational(1)}, "gamma1", "gamma2");
    struct Entry {
        GradedOrbit g;
        bool simple;
    };
    auto list = [&](const OrbitSet& set) {
        std::vector<Entry> out;
        for (std::size_t i = 0; i < set.orbits.size(); ++i)
            for (std::uint32_t k = 1;; ++k) {
                int g = grading(set.orbits[i], k);
                if (g > t.window_hi) break;
                if (g >= t.window_lo) out.push_back({{set.label({static_cast<std::uint32_t>(i), k}), g}, k == 1});
            }
        std::stable_sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.g.grading < b.g.grading; });
        return out;
    };
    auto up = list(upper);
    auto lo = list(lower);
    for (const auto& e : up) t.upper.push_back(e.g);
    for (const auto& e : lo) t.lower.push_back(e.g);
    for (const auto& u : up)
        for (const auto& l : lo)
            if (u.g.grading == l.g.grading) {
                t.coincidences.emplace_back(u.g.label, l.g.label);
                if (u.simple) t.simple_matches.emplace_back(u.g.label, l.g.label);
            }
    // ind = mu(+) - mu(-) for a cobordism cylinder
    t.base_cylinder_index = cz_index(upper.orbits[0], 1) - cz_index(lower.orbits[0], 1);
    t.double_cover_index = cz_index(upper.orbits[0], 2) - cz_index(lower.orbits[0], 2);
    return t;
}

}  // namespace cch
