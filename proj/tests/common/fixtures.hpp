#pragma once

// Test fixtures shared by the unit suites and the acceptance binary: named
// orbit sets, random generators, an unpruned building oracle and a record
// oracle for differentials.

#include <algorithm>
#include <numeric>
#include <set>

#include "cch/buildings.hpp"
#include "cch/chain_complex.hpp"
#include "cch/models.hpp"
#include "oracles.hpp"

namespace cch::testing {

inline OrbitSet thin_ellipsoid() {
    return ellipsoid({{Rational(1, 3), 1}, {Rational(3), -1}, Rational(1), Rational(3)});
}

inline OrbitSet ladder() {
    OrbitSet s;
    s.orbits = {rotation_orbit("a", OrbitType::negative_hyperbolic, Rational(3, 2), 0, Rational(3)),
                rotation_orbit("b", OrbitType::positive_hyperbolic, Rational(1), 0, Rational(2)),
                rotation_orbit("c", OrbitType::negative_hyperbolic, Rational(1, 2), 0, Rational(1))};
    s.action_cap = Rational(7, 2);
    return s;
}

inline OrbitSet planted_mu2() {
    OrbitSet s;
    s.orbits = {rotation_orbit("p", OrbitType::positive_hyperbolic, Rational(1), 0, Rational(1))};
    s.action_cap = Rational(3);
    return s;
}

// Elliptic theta > 1, positive hyperbolic theta >= 2, negative hyperbolic
// theta >= 3/2: every iterate has mu >= 3.
inline OrbitSet random_convex(std::mt19937_64& rng, int max_orbits) {
    std::uniform_int_distribution<int> n(1, max_orbits), kind(0, 3), den(2, 9), whole(1, 3), act(5, 30);
    OrbitSet s;
    for (int j = 0, m = n(rng); j < m; ++j) {
        std::string name = "o" + std::to_string(j);
        Rational a(act(rng), 10);
        int kd = kind(rng);
        if (kd <= 1) {
            int q = den(rng);
            std::uniform_int_distribution<int> num(0, q - 1);
            s.orbits.push_back(
                rotation_orbit(name, OrbitType::elliptic, Rational(whole(rng)) + Rational(num(rng), q), 1, a));
        } else if (kd == 2) {
            s.orbits.push_back(rotation_orbit(name, OrbitType::positive_hyperbolic, Rational(1 + whole(rng)), 0, a));
        } else {
            s.orbits.push_back(
                rotation_orbit(name, OrbitType::negative_hyperbolic, Rational(whole(rng)) + Rational(1, 2), 0, a));
        }
    }
    s.action_cap = Rational(12);
    return s;
}

// theta in {2 - eps, 2, 2 + eps}, optionally noncontractible.
inline OrbitSet random_separated(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> n(1, 4), kind(0, 2), act(5, 30), order(2, 4);
    OrbitSet s;
    bool cyclic = n(rng) % 2 == 0;
    int ord = order(rng);
    if (cyclic) s.homotopy = CyclicHomotopy{ord};
    for (int j = 0, m = n(rng); j < m; ++j) {
        std::string name = "s" + std::to_string(j);
        Rational a(act(rng), 10);
        int kd = kind(rng);
        SimpleOrbit o = kd == 1 ? rotation_orbit(name, OrbitType::positive_hyperbolic, Rational(2), 0, a)
                                : rotation_orbit(name, OrbitType::elliptic, Rational(2), kd == 0 ? -1 : 1, a);
        if (cyclic) o.homotopy_seed = 0;  // leave classes contractible so every list starts at k = 1
        s.orbits.push_back(o);
    }
    s.action_cap = Rational(10);
    return s;
}

// Walks every level choice from the catalog with no reachability pruning,
// records every building with at most one unmatched end, and filters at the
// end by summed component index.

struct Oracle {
    const ComponentCatalog& catalog;
    Budgets budgets;
    std::vector<std::vector<Component>> stack;
    std::vector<Building> found;

    void level(const std::vector<Iterate>& ends, std::size_t i, std::vector<Component>& cur,
               std::set<std::vector<Component>>& out) {
        if (i == ends.size()) {
            auto sorted = cur;
            std::sort(sorted.begin(), sorted.end());
            out.insert(sorted);
            return;
        }
        for (const auto& c : catalog.at(ends[i])) {
            cur.push_back(c);
            level(ends, i + 1, cur, out);
            cur.pop_back();
        }
    }

    void descend(const std::vector<Iterate>& ends, int levels_left) {
        std::set<std::vector<Component>> choices;
        std::vector<Component> cur;
        level(ends, 0, cur, choices);
        for (const auto& lv : choices) {
            if (std::none_of(lv.begin(), lv.end(), [](const Component& c) { return c.nontrivial(); })) continue;
            std::vector<Iterate> next;
            for (const auto& c : lv) next.insert(next.end(), c.config.negatives.begin(), c.config.negatives.end());
            std::sort(next.begin(), next.end());
            stack.push_back(lv);
            if (next.size() <= 1) found.push_back({stack});
            if (!next.empty() && levels_left > 1 && static_cast<int>(next.size()) <= budgets.max_components_per_level)
                descend(next, levels_left - 1);
            stack.pop_back();
        }
    }
};

inline std::vector<Building> oracle_buildings(const OrbitSet& set, int target, int negative_ends, const Budgets& b) {
    ComponentCatalog cat = build_catalog(set, b);
    Oracle o{cat, b, {}, {}};
    if (b.max_levels >= 1 && b.max_components_per_level >= 1)
        for (const auto& x : building_universe(set, b)) o.descend({x}, b.max_levels);
    std::vector<Building> out;
    for (const auto& bld : o.found) {
        auto negs = bld.negative_ends();
        if (static_cast<int>(negs.size()) != negative_ends) continue;
        int sum = 0;
        for (const auto& lv : bld.levels)
            for (const auto& c : lv) sum += c.index;
        if (sum != target) continue;
        if (negative_ends == 1 && class_of(set, negs.front()) != class_of(set, bld.positive())) continue;
        out.push_back(bld);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

struct Random {
    OrbitSet set;
    ModuliInput moduli;
};

// Small orbits with mu in a narrow band, so many index-1 pairs exist.
inline Random random_moduli(std::mt19937_64& rng) {
    Random r;
    std::uniform_int_distribution<int> n(2, 4), coin(0, 1), pick(0, 99);
    for (int j = 0, m = n(rng); j < m; ++j) r.set.orbits.push_back(testing::random_orbit(rng, "o" + std::to_string(j), 2));
    if (coin(rng)) {
        r.set.homotopy = CyclicHomotopy{2};
        for (auto& o : r.set.orbits) o.homotopy_seed = coin(rng);
    }
    r.set.action_cap = Rational(5);
    std::vector<Iterate> its;
    for (std::size_t i = 0; i < r.set.orbits.size(); ++i)
        for (std::int64_t k = 1; k <= k_limit(r.set, i, 6, r.set.action_cap); ++k)
            its.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)});
    for (const auto& x : its)
        for (const auto& y : its) {
            if (r.set.mu(x) - r.set.mu(y) != 1 || class_of(r.set, x) != class_of(r.set, y)) continue;
            if (pick(rng) < 40) continue;
            int g = std::gcd(static_cast<int>(x.k), static_cast<int>(y.k));
            std::vector<int> divisors;
            for (int d = 1; d <= g; ++d)
                if (g % d == 0) divisors.push_back(d);
            std::uniform_int_distribution<std::size_t> dv(0, divisors.size() - 1);
            int copies = 1 + pick(rng) % 2;
            for (int c = 0; c < copies; ++c) r.moduli.records.push_back({x, y, coin(rng) ? 1 : -1, divisors[dv(rng)]});
        }
    return r;
}

// Entry (y, x) of the weighted differential straight from the records.
inline mpq_class oracle_entry(const OrbitSet& set, const ModuliInput& m, const Iterate& x, const Iterate& y, Variant v) {
    mpq_class sum = 0;
    if (set.bad(x) || set.bad(y)) return 0;
    for (const auto& r : m.records)
        if (r.x == x && r.y == y) sum += mpq_class(r.sign, r.m_u);
    return sum * static_cast<long>(v == Variant::minus ? y.k : x.k);
}

}  // namespace cch::testing
