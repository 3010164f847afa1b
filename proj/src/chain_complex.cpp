#include "cch/chain_complex.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

#include "cch/errors.hpp"

namespace cch {

std::string to_string(Variant v) { return v == Variant::minus ? "minus" : "plus"; }

std::size_t GeneratorTable::size() const {
    std::size_t n = 0;
    for (const auto& [c, g] : classes) n += g.gens.size();
    return n;
}

std::optional<std::pair<int, std::size_t>> GeneratorTable::locate(const Iterate& it) const {
    for (const auto& [c, g] : classes)
        for (std::size_t i = 0; i < g.gens.size(); ++i)
            if (g.gens[i].it == it) return std::make_pair(c, i);
    return std::nullopt;
}

GeneratorTable build_generators(const OrbitSet& set, const std::optional<Rational>& action_cap, int deg_min,
                                int deg_max, std::int64_t k_cap) {
    set.validate();
    if (deg_min > deg_max) throw InputError("degree window is empty");
    if (k_cap < 1) throw InputError("k cap must be >= 1");
    GeneratorTable table;
    table.deg_min = deg_min;
    table.deg_max = deg_max;
    table.action_cap = action_cap ? action_cap : set.action_cap;
    table.k_cap = k_cap;
    for (std::size_t i = 0; i < set.orbits.size(); ++i) {
        const SimpleOrbit& o = set.orbits[i];
        std::int64_t lim = k_limit(set, i, k_cap, table.action_cap);
        for (std::int64_t k = 1; k <= lim; ++k) {
            if (is_bad(o, k)) continue;
            int deg = grading(o, k);
            if (deg < deg_min || deg > deg_max) continue;
            Iterate it{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(k)};
            table.classes[class_of(set, i, k)].gens.push_back(
                {it, set.label(it), deg, cz_index(o, k), iterate_action(o, k), static_cast<int>(k)});
        }
    }
    for (auto& [c, cg] : table.classes) {
        std::sort(cg.gens.begin(), cg.gens.end(), [&](const Generator& a, const Generator& b) {
            const std::string& na = set.orbits[a.it.orbit].name;
            const std::string& nb = set.orbits[b.it.orbit].name;
            return std::tie(a.action, na, a.it.k) < std::tie(b.action, nb, b.it.k);
        });
        for (std::size_t i = 0; i < cg.gens.size(); ++i) cg.by_degree[cg.gens[i].degree].push_back(i);
    }
    return table;
}

void validate_moduli(const OrbitSet& set, const ModuliInput& moduli) {
    for (std::size_t r = 0; r < moduli.records.size(); ++r) {
        const auto& rec = moduli.records[r];
        auto where = "moduli[" + std::to_string(r) + "]: ";
        if (rec.x.orbit >= set.orbits.size() || rec.y.orbit >= set.orbits.size())
            throw InputError(where + "unknown orbit");
        if (rec.x.k < 1 || rec.y.k < 1) throw InputError(where + "multiplicity must be >= 1");
        if (rec.sign != 1 && rec.sign != -1) throw InputError(where + "sign must be +1 or -1");
        if (rec.m_u < 1) throw InputError(where + "m_u must be >= 1");
        auto g = std::gcd(static_cast<int>(rec.x.k), static_cast<int>(rec.y.k));
        if (g % rec.m_u != 0) throw InputError(where + "m_u must divide gcd(m(x), m(y))");
        if (set.mu(rec.x) - set.mu(rec.y) != 1) throw InputError(where + "rigid cylinders need mu(x) - mu(y) = 1");
        if (class_of(set, rec.x) != class_of(set, rec.y)) throw InputError(where + "x and y lie in different classes");
    }
}

QMatrix kappa_matrix(const GeneratorTable& table, int cls, int degree) {
    auto c = table.classes.find(cls);
    if (c == table.classes.end()) return {};
    auto d = c->second.by_degree.find(degree);
    if (d == c->second.by_degree.end()) return {};
    const auto& idx = d->second;
    QMatrix k(idx.size(), idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) k(i, i) = c->second.gens[idx[i]].multiplicity;
    return k;
}

namespace {

std::size_t count_at(const ClassGenerators& cg, int degree) {
    auto it = cg.by_degree.find(degree);
    return it == cg.by_degree.end() ? 0 : it->second.size();
}

std::size_t position_in_degree(const ClassGenerators& cg, std::size_t gen) {
    const auto& idx = cg.by_degree.at(cg.gens[gen].degree);
    return static_cast<std::size_t>(std::find(idx.begin(), idx.end(), gen) - idx.begin());
}

GradedMatrixComplex empty_complex(const GeneratorTable& table) {
    GradedMatrixComplex cx;
    cx.deg_min = table.deg_min;
    cx.deg_max = table.deg_max;
    for (const auto& [c, cg] : table.classes) {
        for (int d = table.deg_min; d <= table.deg_max; ++d) {
            auto& labels = cx.basis[c][d];
            if (auto it = cg.by_degree.find(d); it != cg.by_degree.end())
                for (std::size_t g : it->second) labels.push_back(cg.gens[g].label);
            if (d > table.deg_min) cx.maps[c][d] = QMatrix(count_at(cg, d - 1), count_at(cg, d));
        }
        cx.edge[c] = {table.deg_min, table.deg_max};
    }
    return cx;
}

// Scale rows (minus) or columns (plus) of delta by multiplicities.
GradedMatrixComplex weight(const GeneratorTable& table, const GradedMatrixComplex& delta, Variant v) {
    GradedMatrixComplex out = delta;
    for (auto& [c, per_deg] : out.maps) {
        const ClassGenerators& cg = table.classes.at(c);
        for (auto& [d, m] : per_deg) {
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    if (m(i, j) == 0) continue;
                    int mult = v == Variant::minus ? cg.gens[cg.by_degree.at(d - 1)[i]].multiplicity
                                                   : cg.gens[cg.by_degree.at(d)[j]].multiplicity;
                    m(i, j) *= mult;
                }
            (void)to_integer(m);
        }
    }
    return out;
}

}  // namespace

GradedMatrixComplex delta_matrix(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli) {
    validate_moduli(set, moduli);
    GradedMatrixComplex cx = empty_complex(table);
    for (std::size_t r = 0; r < moduli.records.size(); ++r) {
        const auto& rec = moduli.records[r];
        if (set.bad(rec.x) || set.bad(rec.y)) {
            ++cx.dropped_bad;
            continue;
        }
        auto lx = table.locate(rec.x);
        auto ly = table.locate(rec.y);
        if (!lx || !ly) {
            auto where = "moduli[" + std::to_string(r) + "]: ";
            for (const Iterate& e : {rec.x, rec.y}) {
                if (!within_cap(table.action_cap, set.action(e)))
                    throw InputError(where + "endpoint " + set.label(e) + " exceeds the action cap");
                if (e.k > table.k_cap) throw InputError(where + "endpoint " + set.label(e) + " exceeds the k cap");
            }
            int gx = grading(set.orbit(rec.x), rec.x.k);
            int gy = grading(set.orbit(rec.y), rec.y.k);
            bool outside = gx < table.deg_min || gx > table.deg_max || gy < table.deg_min || gy > table.deg_max;
            check_internal(outside, "record endpoint missing from generator table");
            ++cx.dropped_window;
            continue;
        }
        const ClassGenerators& cg = table.classes.at(lx->first);
        int d = cg.gens[lx->second].degree;
        QMatrix& m = cx.maps.at(lx->first).at(d);
        m(position_in_degree(cg, ly->second), position_in_degree(cg, lx->second)) += mpq_class(rec.sign, rec.m_u);
    }
    return cx;
}

GradedMatrixComplex differential(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli,
                                 Variant variant) {
    GradedMatrixComplex delta = delta_matrix(set, table, moduli);
    GradedMatrixComplex minus = weight(table, delta, Variant::minus);
    GradedMatrixComplex plus = weight(table, delta, Variant::plus);
    bool equal_mult = std::all_of(moduli.records.begin(), moduli.records.end(),
                                  [](const ModuliRecord& r) { return r.x.k == r.y.k; });
    if (equal_mult) check_internal(minus.maps == plus.maps, "d_minus and d_plus differ with equal multiplicities");
    return variant == Variant::minus ? minus : plus;
}

DSquaredReport check_d_squared(const GradedMatrixComplex& complex) {
    DSquaredReport rep;
    for (const auto& [c, per_deg] : complex.maps)
        for (const auto& [d, m] : per_deg) {
            auto lower = per_deg.find(d - 1);
            if (lower == per_deg.end()) continue;
            QMatrix sq = multiply(lower->second, m);
            for (std::size_t i = 0; i < sq.rows(); ++i)
                for (std::size_t j = 0; j < sq.cols(); ++j)
                    if (sq(i, j) != 0) {
                        const auto& basis = complex.basis.at(c);
                        rep.ok = false;
                        rep.witness = DSquaredWitness{c, d, basis.at(d)[j], basis.at(d - 2)[i], sq(i, j)};
                        return rep;
                    }
        }
    return rep;
}

namespace {

struct MapRanks {
    std::size_t q = 0;
    std::size_t f2 = 0;
    std::vector<mpz_class> invariants;
};

HomologyReport homology_impl(const GradedMatrixComplex& complex, bool parallel) {
    DSquaredReport sq = check_d_squared(complex);
    if (!sq.ok) {
        const auto& w = *sq.witness;
        throw MathError("d^2 != 0: class " + std::to_string(w.cls) + ", <d^2 " + w.x + ", " + w.z +
                        "> = " + w.value.get_str());
    }
    std::vector<std::pair<int, int>> keys;
    std::vector<const QMatrix*> mats;
    for (const auto& [c, per_deg] : complex.maps)
        for (const auto& [d, m] : per_deg) {
            keys.emplace_back(c, d);
            mats.push_back(&m);
        }
    std::vector<MapRanks> ranks(mats.size());
    auto work = [&](std::size_t i) {
        ranks[i].q = rank(*mats[i]);
        ZMatrix z = to_integer(*mats[i]);
        ranks[i].f2 = rank_mod2(z);
        ranks[i].invariants = smith_invariants(std::move(z));
        check_internal(ranks[i].invariants.size() == ranks[i].q, "Smith rank disagrees with rational rank");
    };
    const auto n = static_cast<std::ptrdiff_t>(mats.size());
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i) work(static_cast<std::size_t>(i));
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) work(static_cast<std::size_t>(i));
    }
    std::map<std::pair<int, int>, const MapRanks*> by_key;
    for (std::size_t i = 0; i < keys.size(); ++i) by_key[keys[i]] = &ranks[i];

    HomologyReport rep;
    rep.deg_min = complex.deg_min;
    rep.deg_max = complex.deg_max;
    for (int d = complex.deg_min; d <= complex.deg_max; ++d) rep.total[d] = 0;
    static const MapRanks zero;
    for (const auto& [c, per_deg] : complex.basis) {
        ClassHomology& h = rep.classes[c];
        for (const auto& [d, labels] : per_deg) {
            auto out_it = by_key.find({c, d});
            auto in_it = by_key.find({c, d + 1});
            const MapRanks& out = out_it == by_key.end() ? zero : *out_it->second;
            const MapRanks& in = in_it == by_key.end() ? zero : *in_it->second;
            std::size_t dim = labels.size();
            check_internal(dim >= out.q + in.q, "rank exceeds chain group dimension");
            h.rank[d] = dim - out.q - in.q;
            h.rank_f2[d] = dim - out.f2 - in.f2;
            h.free_rank_z[d] = dim - out.q - in.q;
            auto& tors = h.torsion_z[d];
            for (const auto& f : in.invariants)
                if (f > 1) tors.push_back(f.get_str());
            rep.total[d] += h.rank[d];
        }
        if (auto e = complex.edge.find(c); e != complex.edge.end()) rep.edge.insert(e->second.begin(), e->second.end());
    }
    return rep;
}

}  // namespace

HomologyReport homology(const GradedMatrixComplex& complex) { return homology_impl(complex, true); }
HomologyReport homology_serial(const GradedMatrixComplex& complex) { return homology_impl(complex, false); }

GluingEnds gluing_end_count(int m_y, int m_u, int m_v) {
    if (m_y < 1 || m_u < 1 || m_v < 1) throw InputError("multiplicities must be positive");
    if (m_y % m_u != 0 || m_y % m_v != 0) throw InputError("m_u and m_v must divide m_y");
    int l = std::lcm(m_u, m_v);
    return {m_y / l, std::gcd(m_u, m_v)};
}

BoundaryIdentityReport boundary_count_identity(const OrbitSet& set, const ModuliInput& moduli, const Iterate& x,
                                               const Iterate& z) {
    validate_moduli(set, moduli);
    if (set.mu(x) - set.mu(z) != 2) throw InputError("boundary identity needs mu(x) - mu(z) = 2");
    if (class_of(set, x) != class_of(set, z)) throw InputError("boundary identity needs x and z in one class");
    BoundaryIdentityReport rep;
    for (const auto& u : moduli.records) {
        if (u.x != x) continue;
        for (const auto& v : moduli.records) {
            if (v.x != u.y || v.y != z) continue;
            const Iterate& y = u.y;
            int m_y = static_cast<int>(y.k);
            int eps = u.sign * v.sign;
            GluingEnds g = gluing_end_count(m_y, u.m_u, v.m_u);
            if (set.bad(y)) {
                if (u.m_u != 1 || v.m_u != 1)
                    throw InputError("gluing through bad orbit " + set.label(y) + " needs m(u) = m(v) = 1");
                // m(y) ends, half of each sign
                check_internal(g.ends == m_y && m_y % 2 == 0, "bad orbit with odd multiplicity");
                mpq_class count = 0;
                for (int e = 0; e < g.ends; ++e) count += (e % 2 == 0 ? eps : -eps);
                check_internal(count == 0, "ends through a bad orbit do not cancel");
                rep.bad_sum += count;
                continue;
            }
            rep.boundary_sum += mpq_class(eps * g.ends, g.end_multiplicity);
            if (!set.bad(x) && !set.bad(z))
                rep.delta_kappa_delta += mpq_class(u.sign, u.m_u) * m_y * mpq_class(v.sign, v.m_u);
        }
    }
    rep.holds = rep.boundary_sum + rep.bad_sum == rep.delta_kappa_delta;
    return rep;
}

bool kappa_chain_map_check(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli) {
    GradedMatrixComplex minus = differential(set, table, moduli, Variant::minus);
    GradedMatrixComplex plus = differential(set, table, moduli, Variant::plus);
    for (const auto& [c, per_deg] : minus.maps)
        for (const auto& [d, dm] : per_deg) {
            const QMatrix& dp = plus.maps.at(c).at(d);
            QMatrix lhs = multiply(kappa_matrix(table, c, d - 1), dp);
            QMatrix rhs = multiply(dm, kappa_matrix(table, c, d));
            if (!(lhs == rhs)) return false;
        }
    return true;
}

}  // namespace cch
