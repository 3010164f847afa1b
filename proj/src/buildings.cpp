#include "cch/buildings.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "cch/errors.hpp"

namespace cch {

std::string to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::somewhere_injective: return "somewhere_injective";
        case ComponentKind::cover_of_nontrivial_cylinder: return "cover_of_nontrivial_cylinder";
        case ComponentKind::cover_of_trivial_cylinder: return "cover_of_trivial_cylinder";
        case ComponentKind::trivial_cylinder: return "trivial_cylinder";
        case ComponentKind::cover_of_curve: return "cover_of_curve";
    }
    return "?";
}

std::string to_string(Index2Type t) {
    switch (t) {
        case Index2Type::type_i: return "type_i";
        case Index2Type::type_ii: return "type_ii";
        case Index2Type::type_iii: return "type_iii";
        case Index2Type::excluded: return "excluded";
    }
    return "?";
}

std::strong_ordering operator<=>(const Component& a, const Component& b_) {
    if (auto c = a.config.positive <=> b_.config.positive; c != 0) return c;
    if (auto c = a.kind <=> b_.kind; c != 0) return c;
    if (auto c = a.config.negatives <=> b_.config.negatives; c != 0) return c;
    if (auto c = a.k <=> b_.k; c != 0) return c;
    return a.b <=> b_.b;
}

std::vector<Iterate> Building::negative_ends() const {
    std::vector<Iterate> out;
    for (const auto& c : levels.back())
        out.insert(out.end(), c.config.negatives.begin(), c.config.negatives.end());
    std::sort(out.begin(), out.end());
    return out;
}

int Building::total_index() const {
    int sum = 0;
    for (const auto& level : levels)
        for (const auto& c : level) sum += c.index;
    return sum;
}

std::size_t Building::component_count() const {
    std::size_t n = 0;
    for (const auto& level : levels) n += level.size();
    return n;
}

Budgets Budgets::parse(std::string_view text) {
    Budgets out;
    while (!text.empty()) {
        auto comma = text.find(',');
        std::string_view item = text.substr(0, comma);
        text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos) throw InputError("budget entry '" + std::string(item) + "' needs key=value");
        std::string_view key = item.substr(0, eq), val = item.substr(eq + 1);
        int v = 0;
        auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
        if (ec != std::errc{} || ptr != val.data() + val.size() || v < 0)
            throw InputError("budget '" + std::string(key) + "' needs a nonnegative integer");
        if (key == "levels") out.max_levels = v;
        else if (key == "degree") out.max_cover_degree = v;
        else if (key == "branch") out.max_branch = v;
        else if (key == "components") out.max_components_per_level = v;
        else if (key == "iterate") out.max_iterate = v;
        else throw InputError("unknown budget '" + std::string(key) + "'");
    }
    return out;
}

std::string Budgets::str() const {
    std::ostringstream os;
    os << "levels=" << max_levels << ",degree=" << max_cover_degree << ",branch=" << max_branch
       << ",components=" << max_components_per_level << ",iterate=" << max_iterate;
    return os.str();
}

std::vector<Iterate> building_universe(const OrbitSet& set, const Budgets& budgets) {
    std::vector<Iterate> out;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        std::int64_t lim = k_limit(set, i, budgets.max_iterate, set.action_cap);
        for (std::int64_t k = 1; k <= lim; ++k)
            out.push_back({static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)});
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

void partitions_rec(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

std::vector<std::vector<int>> partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

bool classes_match(const OrbitSet& set, const Iterate& p, const std::vector<Iterate>& negs) {
    std::vector<int> cls;
    cls.reserve(negs.size());
    for (const auto& n : negs) cls.push_back(class_of(set, n));
    auto c = compose_classes(set, cls);
    return c && *c == class_of(set, p);
}

class CatalogBuilder {
public:
    CatalogBuilder(const OrbitSet& set, const Budgets& budgets)
        : set_(set), budgets_(budgets), universe_(building_universe(set, budgets)),
          members_(universe_.begin(), universe_.end()) {}

    ComponentCatalog build() {
        ComponentCatalog cat;
        for (const auto& p : universe_) somewhere_injective(p);
        for (const auto& p : universe_) {
            auto& list = cat[p];
            list.push_back({ComponentKind::trivial_cylinder, {p, {p}}, 1, 0, 0, 0, std::nullopt});
            for (const auto& cfg : si_[p]) list.push_back({ComponentKind::somewhere_injective, cfg, 1, 0,
                                                            fredholm_index(set_, cfg), 1, std::nullopt});
            trivial_covers(p, list);
            covers(p, list);
            std::stable_sort(list.begin(), list.end());
            list.erase(std::unique(list.begin(), list.end()), list.end());
        }
        return cat;
    }

private:
    bool in_universe(const Iterate& it) const { return members_.contains(it); }
    int max_ends() const { return budgets_.max_components_per_level; }

    void somewhere_injective(const Iterate& p) {
        auto& out = si_[p];
        Rational budget = set_.action(p);
        std::vector<Iterate> cur;
        auto rec = [&](auto&& self, std::size_t from, Rational used) -> void {
            PunctureConfig cfg{p, cur};
            if (classes_match(set_, p, cur) && fredholm_index(set_, cfg) >= 1) out.push_back(cfg);
            if (static_cast<int>(cur.size()) >= max_ends()) return;
            for (std::size_t i = from; i < universe_.size(); ++i) {
                Rational next = used + set_.action(universe_[i]);
                if (next >= budget) continue;
                cur.push_back(universe_[i]);
                self(self, i, next);
                cur.pop_back();
            }
        };
        rec(rec, 0, Rational(0));
    }

    void trivial_covers(const Iterate& p, std::vector<Component>& list) const {
        int m = static_cast<int>(p.k);
        if (m < 2 || m > budgets_.max_cover_degree) return;
        const SimpleOrbit& orbit = set_.orbits[p.orbit];
        for (const auto& parts : partitions(m)) {
            int n = static_cast<int>(parts.size());
            if (n < 2 || n - 1 > budgets_.max_branch || n > max_ends()) continue;
            std::vector<Iterate> negs;
            for (int part : parts) negs.push_back({p.orbit, static_cast<std::uint32_t>(part)});
            std::sort(negs.begin(), negs.end());
            if (!classes_match(set_, p, negs)) continue;
            PunctureConfig cfg{p, negs};
            int ind = fredholm_index(set_, cfg);
            check_internal(ind == trivial_cover_index(orbit, parts), "trivial cover index mismatch");
            PunctureConfig base{{p.orbit, 1}, {{p.orbit, 1}}};
            list.push_back({ComponentKind::cover_of_trivial_cylinder, cfg, m, n - 1, ind, 0, base});
        }
    }

    void covers(const Iterate& p, std::vector<Component>& list) const {
        int m = static_cast<int>(p.k);
        for (int k = 2; k <= std::min(m, budgets_.max_cover_degree); ++k) {
            if (m % k != 0) continue;
            Iterate p0{p.orbit, static_cast<std::uint32_t>(m / k)};
            auto it = si_.find(p0);
            if (it == si_.end()) continue;
            auto parts_k = partitions(k);
            for (const auto& base : it->second) {
                const auto& bn = base.negatives;
                if (bn.empty()) continue;  // plane covers coincide with planes on the iterate
                int s = static_cast<int>(bn.size()) - 1;
                // choose a partition of k over each base negative end
                std::vector<std::size_t> choice(bn.size(), 0);
                for (;;) {
                    int total = 0;
                    std::vector<Iterate> negs;
                    bool ok = true;
                    for (std::size_t j = 0; j < bn.size() && ok; ++j) {
                        for (int part : parts_k[choice[j]]) {
                            Iterate q{bn[j].orbit, bn[j].k * static_cast<std::uint32_t>(part)};
                            if (!in_universe(q)) ok = false;
                            negs.push_back(q);
                        }
                        total += static_cast<int>(parts_k[choice[j]].size());
                    }
                    int b = total - 1 - k * s;
                    if (ok && b >= 0 && b <= budgets_.max_branch && total <= max_ends()) {
                        std::sort(negs.begin(), negs.end());
                        if (classes_match(set_, p, negs)) {
                            PunctureConfig cfg{p, negs};
                            Component c;
                            c.config = cfg;
                            c.k = k;
                            c.b = b;
                            c.index = fredholm_index(set_, cfg);
                            c.base = base;
                            if (s == 0) {
                                c.kind = ComponentKind::cover_of_nontrivial_cylinder;
                                c.index_lb = cover_index_lower_bound(
                                    set_, {k, b, base, BaseKind::nontrivial_cylinder, total});
                            } else {
                                c.kind = ComponentKind::cover_of_curve;
                                c.index_lb = cover_index_lower_bound(set_, {k, b, base, BaseKind::general, total});
                            }
                            list.push_back(std::move(c));
                        }
                    }
                    std::size_t j = 0;
                    while (j < choice.size() && ++choice[j] == parts_k.size()) choice[j++] = 0;
                    if (j == choice.size()) break;
                }
            }
        }
    }

    const OrbitSet& set_;
    const Budgets& budgets_;
    std::vector<Iterate> universe_;
    std::set<Iterate> members_;
    std::map<Iterate, std::vector<PunctureConfig>> si_;
};

// Search state shared by every (x, z) task; read-only once built.
struct Context {
    const OrbitSet& set;
    Budgets budgets;
    std::vector<Iterate> universe;
    std::map<Iterate, std::size_t> slot;
    ComponentCatalog catalog;
    // reach[L][t][e]: a sub-building from universe[e] to target t within L
    // levels exists, ignoring level synchronisation. t = 0 caps every end,
    // t = 1 + u ends exactly at universe[u].
    std::vector<std::vector<std::vector<char>>> reach;

    Context(const OrbitSet& s, const Budgets& b) : set(s), budgets(b), universe(building_universe(s, b)) {
        for (std::size_t i = 0; i < universe.size(); ++i) slot[universe[i]] = i;
        catalog = CatalogBuilder(set, budgets).build();
        build_reach();
    }

    std::size_t target_of(const std::optional<Iterate>& z) const { return z ? 1 + slot.at(*z) : 0; }

    bool can(const Iterate& e, std::size_t t, int levels) const {
        return reach[static_cast<std::size_t>(levels)][t][slot.at(e)] != 0;
    }

    // every negative end capped, or all capped but one that reaches t
    bool ends_feasible(const std::vector<Iterate>& ends, std::size_t t, int levels) const {
        if (t == 0) {
            for (const auto& n : ends)
                if (!can(n, 0, levels)) return false;
            return true;
        }
        std::size_t uncapped = 0;
        for (const auto& n : ends)
            if (!can(n, 0, levels)) ++uncapped;
        if (uncapped > 1) return false;
        for (const auto& n : ends)
            if (can(n, t, levels) && (uncapped == 0 || !can(n, 0, levels))) return true;
        return false;
    }

    void build_reach() {
        const std::size_t nu = universe.size();
        const int L = std::max(budgets.max_levels, 0);
        reach.assign(static_cast<std::size_t>(L) + 1,
                     std::vector<std::vector<char>>(nu + 1, std::vector<char>(nu, 0)));
        for (std::size_t u = 0; u < nu; ++u) reach[0][1 + u][u] = 1;
        for (int l = 1; l <= L; ++l)
            for (std::size_t t = 0; t <= nu; ++t)
                for (std::size_t e = 0; e < nu; ++e) {
                    char& r = reach[static_cast<std::size_t>(l)][t][e];
                    r = reach[static_cast<std::size_t>(l) - 1][t][e];
                    if (r) continue;
                    for (const auto& c : catalog.at(universe[e]))
                        if (c.nontrivial() && ends_feasible(c.config.negatives, t, l - 1)) {
                            r = 1;
                            break;
                        }
                }
    }
};

struct TaskResult {
    std::vector<Building> buildings;
    std::set<std::string> truncations;
};

class Search {
public:
    Search(const Context& ctx, const Iterate& x, const std::optional<Iterate>& z)
        : ctx_(ctx), t_(ctx.target_of(z)) {
        if (z) target_ = {*z};
        top_ = {x};
    }

    TaskResult run() {
        if (ctx_.budgets.max_levels >= 1 && ctx_.budgets.max_components_per_level >= 1)
            descend(top_, 0);
        return std::move(result_);
    }

private:
    void descend(const std::vector<Iterate>& ends, int depth) {
        const int below = ctx_.budgets.max_levels - depth - 1;
        candidates_.assign(ends.size(), {});
        auto feasible = [&](const Component& c, int levels) {
            return ctx_.ends_feasible(c.config.negatives, t_, levels) ||
                   (t_ != 0 && ctx_.ends_feasible(c.config.negatives, 0, levels));
        };
        for (std::size_t i = 0; i < ends.size(); ++i)
            for (const auto& c : ctx_.catalog.at(ends[i])) {
                if (feasible(c, below))
                    candidates_[i].push_back(&c);
                else if (feasible(c, ctx_.budgets.max_levels))
                    result_.truncations.insert("max_levels");  // would continue with more levels
            }
        auto cands = candidates_;
        std::vector<const Component*> chosen;
        choose(ends, cands, 0, chosen, depth, below);
    }

    void choose(const std::vector<Iterate>& ends, const std::vector<std::vector<const Component*>>& cands,
                std::size_t i, std::vector<const Component*>& chosen, int depth, int below) {
        if (i == ends.size()) {
            finish_level(chosen, depth, below);
            return;
        }
        std::size_t start = 0;
        if (i > 0 && ends[i] == ends[i - 1]) {
            // equal ends: nondecreasing choices give each multiset once
            auto pos = std::find(cands[i].begin(), cands[i].end(), chosen.back());
            start = static_cast<std::size_t>(pos - cands[i].begin());
        }
        for (std::size_t j = start; j < cands[i].size(); ++j) {
            chosen.push_back(cands[i][j]);
            choose(ends, cands, i + 1, chosen, depth, below);
            chosen.pop_back();
        }
    }

    void finish_level(const std::vector<const Component*>& chosen, int depth, int below) {
        bool nontrivial = false;
        std::vector<Iterate> next;
        for (const auto* c : chosen) {
            nontrivial = nontrivial || c->nontrivial();
            next.insert(next.end(), c->config.negatives.begin(), c->config.negatives.end());
        }
        if (!nontrivial) return;
        std::sort(next.begin(), next.end());
        std::vector<Component> level;
        level.reserve(chosen.size());
        for (const auto* c : chosen) level.push_back(*c);
        std::sort(level.begin(), level.end());
        stack_.push_back(std::move(level));
        if (next == target_) {
            result_.buildings.push_back({stack_});
        } else if (!next.empty()) {
            const int most = ctx_.budgets.max_levels;
            if (below == 0) {
                if (ctx_.ends_feasible(next, t_, most)) result_.truncations.insert("max_levels");
            } else if (static_cast<int>(next.size()) > ctx_.budgets.max_components_per_level) {
                if (ctx_.ends_feasible(next, t_, below)) result_.truncations.insert("max_components_per_level");
            } else if (ctx_.ends_feasible(next, t_, below)) {
                descend(next, depth + 1);
            }
        }
        stack_.pop_back();
    }

    const Context& ctx_;
    std::size_t t_;
    std::vector<Iterate> top_;
    std::vector<Iterate> target_;
    std::vector<std::vector<Component>> stack_;
    std::vector<std::vector<const Component*>> candidates_;
    TaskResult result_;
};

using Pair = std::pair<Iterate, std::optional<Iterate>>;

EnumerationResult run_pairs(const Context& ctx, const std::vector<Pair>& pairs, bool parallel) {
    std::vector<TaskResult> parts(pairs.size());
    const auto n = static_cast<std::ptrdiff_t>(pairs.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            parts[static_cast<std::size_t>(i)] =
                Search(ctx, pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second).run();
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i)
            parts[static_cast<std::size_t>(i)] =
                Search(ctx, pairs[static_cast<std::size_t>(i)].first, pairs[static_cast<std::size_t>(i)].second).run();
    }
    EnumerationResult out;
    out.budgets = ctx.budgets;
    std::set<std::string> trunc;
    for (auto& p : parts) {
        out.buildings.insert(out.buildings.end(), std::make_move_iterator(p.buildings.begin()),
                             std::make_move_iterator(p.buildings.end()));
        trunc.insert(p.truncations.begin(), p.truncations.end());
    }
    if (ctx.budgets.max_levels == 0 || ctx.budgets.max_components_per_level == 0) trunc.insert("zero_budget");
    std::sort(out.buildings.begin(), out.buildings.end());
    out.truncations.assign(trunc.begin(), trunc.end());
    out.incomplete = !out.truncations.empty();
    return out;
}

std::vector<Pair> pairs_for(const Context& ctx, int target_index, int negative_ends) {
    std::vector<Pair> pairs;
    for (const auto& x : ctx.universe) {
        if (negative_ends == 0) {
            if (ctx.set.mu(x) - 1 == target_index) pairs.push_back({x, std::nullopt});
            continue;
        }
        for (const auto& z : ctx.universe)
            if (z != x && ctx.set.mu(x) - ctx.set.mu(z) == target_index && class_of(ctx.set, x) == class_of(ctx.set, z))
                pairs.push_back({x, z});
    }
    return pairs;
}

void check_enumeration_args(const OrbitSet& set, int negative_ends, const Budgets& budgets) {
    set.validate();
    if (negative_ends != 0 && negative_ends != 1) throw InputError("negative_ends must be 0 or 1");
    if (budgets.max_levels < 0 || budgets.max_cover_degree < 0 || budgets.max_branch < 0 ||
        budgets.max_components_per_level < 0 || budgets.max_iterate < 0)
        throw InputError("budgets must be nonnegative");
}

}  // namespace

ComponentCatalog build_catalog(const OrbitSet& set, const Budgets& budgets) {
    return CatalogBuilder(set, budgets).build();
}

EnumerationResult enumerate_buildings(const OrbitSet& set, int target_index, int negative_ends,
                                      const Budgets& budgets) {
    check_enumeration_args(set, negative_ends, budgets);
    Context ctx(set, budgets);
    return run_pairs(ctx, pairs_for(ctx, target_index, negative_ends), true);
}

EnumerationResult enumerate_buildings_serial(const OrbitSet& set, int target_index, int negative_ends,
                                             const Budgets& budgets) {
    check_enumeration_args(set, negative_ends, budgets);
    Context ctx(set, budgets);
    return run_pairs(ctx, pairs_for(ctx, target_index, negative_ends), false);
}

EnumerationResult enumerate_between(const OrbitSet& set, const Iterate& x, const std::optional<Iterate>& z,
                                    const Budgets& budgets) {
    check_enumeration_args(set, z ? 1 : 0, budgets);
    Context ctx(set, budgets);
    if (!ctx.slot.contains(x) || (z && !ctx.slot.contains(*z)))
        throw InputError("end iterate outside the building universe");
    return run_pairs(ctx, {{x, z}}, false);
}

Index2Type classify_index2(const OrbitSet& set, const Building& building) {
    (void)set;
    if (building.levels.empty() || building.total_index() != 2 || building.negative_ends().size() != 1)
        throw InputError("classification needs an index-2 building with one negative end");
    const auto& lv = building.levels;
    auto nontrivial_cylinder = [](const Component& c, int ind) {
        return c.is_cylinder() && c.nontrivial() && c.index == ind;
    };
    if (lv.size() == 1 && lv[0].size() == 1 && nontrivial_cylinder(lv[0][0], 2)) return Index2Type::type_i;
    if (lv.size() == 2 && lv[0].size() == 1 && lv[1].size() == 1 && nontrivial_cylinder(lv[0][0], 1) &&
        nontrivial_cylinder(lv[1][0], 1))
        return Index2Type::type_ii;
    if (lv.size() == 2 && lv[0].size() == 1 && lv[1].size() == 2) {
        const Component& pants = lv[0][0];
        if (pants.kind == ComponentKind::cover_of_trivial_cylinder && pants.config.negatives.size() == 2 &&
            pants.index == 0) {
            const Component& a = lv[1][0];
            const Component& b = lv[1][1];
            auto plane2 = [](const Component& c) { return c.is_plane() && c.index == 2; };
            auto trivial = [](const Component& c) { return c.kind == ComponentKind::trivial_cylinder; };
            if ((plane2(a) && trivial(b)) || (plane2(b) && trivial(a))) return Index2Type::type_iii;
        }
    }
    return Index2Type::excluded;
}

std::string describe(const OrbitSet& set, const Component& c) {
    std::ostringstream os;
    os << to_string(c.kind) << "(" << set.label(c.config.positive) << " ->";
    if (c.config.negatives.empty()) os << " none";
    for (std::size_t i = 0; i < c.config.negatives.size(); ++i)
        os << (i ? ", " : " ") << set.label(c.config.negatives[i]);
    os << "; ind " << c.index;
    if (c.kind != ComponentKind::somewhere_injective && c.kind != ComponentKind::trivial_cylinder)
        os << ", k " << c.k << ", b " << c.b << ", lb " << c.index_lb;
    os << ")";
    return os.str();
}

std::string describe(const OrbitSet& set, const Building& b) {
    std::ostringstream os;
    for (std::size_t l = 0; l < b.levels.size(); ++l) {
        if (l) os << " / ";
        for (std::size_t i = 0; i < b.levels[l].size(); ++i) os << (i ? " + " : "") << describe(set, b.levels[l][i]);
    }
    return os.str();
}

bool LemmaCertificate::pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const LemmaCheck& c) { return !c.applicable || c.pass; });
}

LemmaCertificate verify_lemmas(const OrbitSet& set, const Budgets& budgets) {
    check_enumeration_args(set, 0, budgets);
    LemmaCertificate cert;
    cert.budgets = budgets;
    cert.dynamically_convex = is_dynamically_convex(set, budgets.max_iterate).pass;
    cert.dynamically_separated = is_dynamically_separated(set, budgets.max_iterate, set.action_cap).pass;

    Context ctx(set, budgets);
    std::vector<Pair> planes, low, index2;
    for (const auto& x : ctx.universe) {
        if (class_of(set, x) == kContractible && set.mu(x) - 1 <= 2) planes.push_back({x, std::nullopt});
        for (const auto& z : ctx.universe) {
            if (z == x || class_of(set, x) != class_of(set, z)) continue;
            int gap = set.mu(x) - set.mu(z);
            if (gap <= 1) low.push_back({x, z});
            if (gap == 2) index2.push_back({x, z});
        }
    }

    LemmaCheck a{"a", true, true, 0, {}};
    auto ra = run_pairs(ctx, planes, true);
    for (const auto& bld : ra.buildings) {
        ++a.examined;
        int ind = bld.total_index();
        bool single_plane = bld.levels.size() == 1 && bld.levels[0].size() == 1 && bld.levels[0][0].is_plane();
        if (ind < 2 || (ind == 2 && !single_plane))
            a.counterexamples.push_back("index " + std::to_string(ind) + ": " + describe(set, bld));
    }
    a.pass = a.counterexamples.empty();

    LemmaCheck b{"b", true, true, 0, {}};
    auto rb = run_pairs(ctx, low, true);
    for (const auto& bld : rb.buildings) {
        ++b.examined;
        int ind = bld.total_index();
        bool single_cyl = bld.levels.size() == 1 && bld.levels[0].size() == 1 && bld.levels[0][0].is_cylinder();
        if (ind < 1 || (ind == 1 && !single_cyl))
            b.counterexamples.push_back("index " + std::to_string(ind) + ": " + describe(set, bld));
    }
    b.pass = b.counterexamples.empty();

    LemmaCheck c{"c", true, true, 0, {}};
    LemmaCheck d{"d", cert.dynamically_separated, true, 0, {}};
    auto rc = run_pairs(ctx, index2, true);
    for (const auto& t : {Index2Type::type_i, Index2Type::type_ii, Index2Type::type_iii, Index2Type::excluded})
        cert.index2_types[to_string(t)] = 0;
    for (const auto& bld : rc.buildings) {
        ++c.examined;
        ++d.examined;
        Index2Type t = classify_index2(set, bld);
        ++cert.index2_types[to_string(t)];
        if (t == Index2Type::excluded) c.counterexamples.push_back(describe(set, bld));
        if (t == Index2Type::type_iii) d.counterexamples.push_back(describe(set, bld));
    }
    c.pass = c.counterexamples.empty();
    d.pass = d.counterexamples.empty();

    cert.incomplete = ra.incomplete || rb.incomplete || rc.incomplete;
    cert.checks = {a, b, c, d};
    return cert;
}

ConditionDCertificate verify_condition_D(const OrbitSet& set, const Iterate& x, const Iterate& z,
                                         const Budgets& budgets) {
    check_enumeration_args(set, 1, budgets);
    if (set.mu(x) - set.mu(z) != 2) throw InputError("condition D needs mu(x) - mu(z) = 2");
    if (class_of(set, x) != class_of(set, z)) throw InputError("condition D needs x and z in one homotopy class");
    ConditionDCertificate cert;
    cert.budgets = budgets;
    Context ctx(set, budgets);
    if (!ctx.slot.contains(x) || !ctx.slot.contains(z)) throw InputError("end iterate outside the building universe");
    for (const auto& y : ctx.universe)
        if (class_of(set, y) == class_of(set, x) && set.mu(y) == set.mu(x) - 1 && set.action(z) < set.action(y) &&
            set.action(y) < set.action(x))
            cert.intermediates.push_back({y, set.label(y), set.mu(y), set.bad(y)});
    auto res = run_pairs(ctx, {{x, z}}, false);
    cert.incomplete = res.incomplete;
    for (const auto& t : {Index2Type::type_i, Index2Type::type_ii, Index2Type::type_iii, Index2Type::excluded})
        cert.types[to_string(t)] = 0;
    for (const auto& bld : res.buildings) {
        Index2Type t = classify_index2(set, bld);
        ++cert.types[to_string(t)];
        if (t != Index2Type::type_i && t != Index2Type::type_ii) cert.counterexamples.push_back(describe(set, bld));
    }
    cert.pass = cert.counterexamples.empty();
    return cert;
}

}  // namespace cch
