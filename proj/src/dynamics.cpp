#include "cch/dynamics.hpp"

#include <algorithm>
#include <set>

#include "cch/errors.hpp"

namespace cch {

void OrbitSet::validate() const {
    std::set<std::string> names;
    for (const auto& o : orbits) {
        o.validate();
        if (!names.insert(o.name).second) throw InputError("duplicate orbit name '" + o.name + "'");
    }
    if (action_cap && *action_cap <= Rational(0)) throw InputError("action cap must be positive");
    std::visit(
        [&](const auto& model) {
            using M = std::decay_t<decltype(model)>;
            if constexpr (std::is_same_v<M, TrivialHomotopy>) {
                for (const auto& o : orbits)
                    if (o.homotopy_seed != 0)
                        throw InputError("orbit '" + o.name + "': trivial homotopy model needs seed 0");
            } else if constexpr (std::is_same_v<M, CyclicHomotopy>) {
                if (model.order < 2) throw InputError("cyclic homotopy order must be >= 2");
                for (const auto& o : orbits)
                    if (o.homotopy_seed < 0 || o.homotopy_seed >= model.order)
                        throw InputError("orbit '" + o.name + "': seed outside 0.." +
                                         std::to_string(model.order - 1));
            } else {
                if (model.bound < 1) throw InputError("homotopy table bound must be >= 1");
                for (const auto& o : orbits) {
                    auto it = model.classes.find(o.name);
                    if (it == model.classes.end())
                        throw InputError("orbit '" + o.name + "' missing from homotopy table");
                    if (static_cast<int>(it->second.size()) != model.bound)
                        throw InputError("orbit '" + o.name + "': homotopy table row must have " +
                                         std::to_string(model.bound) + " entries");
                    for (int c : it->second)
                        if (c < 0) throw InputError("orbit '" + o.name + "': negative class label");
                    if (it->second.front() != o.homotopy_seed)
                        throw InputError("orbit '" + o.name + "': seed disagrees with table entry for k=1");
                }
                for (const auto& [name, row] : model.classes)
                    if (!names.contains(name)) throw InputError("homotopy table names unknown orbit '" + name + "'");
            }
        },
        homotopy);
}

std::optional<std::size_t> OrbitSet::find(std::string_view name) const {
    for (std::size_t i = 0; i < orbits.size(); ++i)
        if (orbits[i].name == name) return i;
    return std::nullopt;
}

std::string OrbitSet::label(const Iterate& it) const {
    const std::string& n = orbits.at(it.orbit).name;
    return it.k == 1 ? n : n + "^" + std::to_string(it.k);
}

bool within_cap(const std::optional<Rational>& cap, const Rational& action) { return !cap || action <= *cap; }

int class_of(const OrbitSet& set, std::size_t orbit, std::int64_t k) {
    if (k < 1) throw InputError("iterate multiplicity must be >= 1");
    const SimpleOrbit& o = set.orbits.at(orbit);
    if (std::holds_alternative<TrivialHomotopy>(set.homotopy)) return kContractible;
    if (const auto* cyc = std::get_if<CyclicHomotopy>(&set.homotopy))
        return static_cast<int>((k * o.homotopy_seed) % cyc->order);
    const auto& table = std::get<TableHomotopy>(set.homotopy);
    if (k > table.bound)
        throw InputError("orbit '" + o.name + "': class of k=" + std::to_string(k) + " beyond table bound " +
                         std::to_string(table.bound));
    return table.classes.at(o.name).at(static_cast<std::size_t>(k - 1));
}

std::vector<std::int64_t> iterate_list(const OrbitSet& set, std::size_t orbit, int c, std::int64_t bound) {
    std::vector<std::int64_t> out;
    for (std::int64_t k = 1; k <= bound; ++k)
        if (class_of(set, orbit, k) == c) out.push_back(k);
    return out;
}

std::optional<int> compose_classes(const OrbitSet& set, const std::vector<int>& classes) {
    if (std::holds_alternative<TrivialHomotopy>(set.homotopy)) return kContractible;
    if (const auto* cyc = std::get_if<CyclicHomotopy>(&set.homotopy)) {
        long sum = 0;
        for (int c : classes) sum += c;
        return static_cast<int>(sum % cyc->order);
    }
    std::optional<int> out = kContractible;
    for (int c : classes) {
        if (c == kContractible) continue;
        if (*out != kContractible) return std::nullopt;
        out = c;
    }
    return out;
}

std::int64_t k_limit(const OrbitSet& set, std::size_t orbit, std::int64_t k_cap,
                     const std::optional<Rational>& action_cap) {
    std::int64_t lim = k_cap;
    if (action_cap) lim = std::min(lim, (*action_cap / set.orbits.at(orbit).action).floor());
    if (const auto* table = std::get_if<TableHomotopy>(&set.homotopy))
        lim = std::min<std::int64_t>(lim, table->bound);
    return std::max<std::int64_t>(lim, 0);
}

ConvexityReport is_dynamically_convex(const OrbitSet& set, std::int64_t k_cap) {
    ConvexityReport rep;
    rep.k_cap = k_cap;
    rep.action_cap = set.action_cap;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        std::int64_t lim = k_limit(set, i, k_cap, set.action_cap);
        for (std::int64_t k : iterate_list(set, i, kContractible, lim)) {
            int mu = cz_index(set.orbits[i], k);
            if (mu < 3) rep.violations.push_back({set.orbits[i].name, k, mu});
        }
    }
    rep.pass = rep.violations.empty();
    return rep;
}

std::vector<int> classes_present(const OrbitSet& set, std::int64_t k_cap, const std::optional<Rational>& action_cap) {
    std::set<int> seen;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        std::int64_t lim = k_limit(set, i, k_cap, action_cap);
        for (std::int64_t k = 1; k <= lim; ++k) seen.insert(class_of(set, i, k));
    }
    return {seen.begin(), seen.end()};
}

SeparationReport is_dynamically_separated(const OrbitSet& set, std::int64_t k_cap,
                                          const std::optional<Rational>& action_cap) {
    SeparationReport rep;
    rep.k_cap = k_cap;
    rep.action_cap = action_cap;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const SimpleOrbit& o = set.orbits[i];
        std::int64_t lim = k_limit(set, i, k_cap, action_cap);
        for (int c : classes_present(set, lim, std::nullopt)) {
            auto ks = iterate_list(set, i, c, lim);
            if (ks.empty()) continue;
            int mu_first = cz_index(o, ks.front());
            if (c == kContractible) {
                if (mu_first < 3 || mu_first > 5)
                    rep.violations.push_back({"I.i", o.name, c, ks.front(), mu_first, 0, 0});
            } else if (mu_first < 1) {
                rep.violations.push_back({"I.ii", o.name, c, ks.front(), mu_first, 0, 0});
            }
            for (std::size_t j = 1; j < ks.size(); ++j) {
                int prev = cz_index(o, ks[j - 1]);
                int cur = cz_index(o, ks[j]);
                if (cur != prev + 4) rep.violations.push_back({"II", o.name, c, ks[j], cur, ks[j - 1], prev});
            }
        }
    }
    rep.pass = rep.violations.empty();
    if (rep.pass) {
        OrbitSet capped = set;
        capped.action_cap = action_cap;
        check_internal(is_dynamically_convex(capped, k_cap).pass,
                       "dynamically separated orbit set fails dynamical convexity");
    }
    return rep;
}

}  // namespace cch
