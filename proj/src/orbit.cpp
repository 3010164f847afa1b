#include "cch/orbit.hpp"

#include <sstream>

#include "cch/errors.hpp"

namespace cch {

std::int64_t RotationNumber::floor_multiple(std::int64_t k) const {
    Rational kr = r * Rational(k);
    if (s == 0 || !kr.is_integer()) return kr.floor();
    return s > 0 ? kr.num() : kr.num() - 1;
}

std::int64_t RotationNumber::ceil_multiple(std::int64_t k) const {
    Rational kr = r * Rational(k);
    if (s == 0 || !kr.is_integer()) return kr.ceil();
    return s > 0 ? kr.num() + 1 : kr.num();
}

std::string RotationNumber::str() const {
    std::string out = r.str();
    if (s > 0) out += "+eps";
    if (s < 0) out += "-eps";
    return out;
}

RotationNumber RotationNumber::parse(std::string_view text) {
    RotationNumber out;
    auto ends_with = [&](std::string_view suffix) {
        return text.size() > suffix.size() && text.substr(text.size() - suffix.size()) == suffix;
    };
    if (ends_with("+eps")) {
        out.s = 1;
        text.remove_suffix(4);
    } else if (ends_with("-eps")) {
        out.s = -1;
        text.remove_suffix(4);
    }
    out.r = Rational::parse(text);
    return out;
}

std::string to_string(OrbitType t) {
    switch (t) {
        case OrbitType::elliptic: return "elliptic";
        case OrbitType::positive_hyperbolic: return "positive_hyperbolic";
        case OrbitType::negative_hyperbolic: return "negative_hyperbolic";
        case OrbitType::explicit_table: return "explicit";
    }
    return "?";
}

OrbitType orbit_type_from_string(std::string_view s) {
    if (s == "elliptic") return OrbitType::elliptic;
    if (s == "positive_hyperbolic") return OrbitType::positive_hyperbolic;
    if (s == "negative_hyperbolic") return OrbitType::negative_hyperbolic;
    if (s == "explicit") return OrbitType::explicit_table;
    throw InputError("unknown orbit type '" + std::string(s) + "'");
}

std::string to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

void SimpleOrbit::validate() const {
    auto fail = [&](const std::string& why) { throw InputError("orbit '" + name + "': " + why); };
    if (name.empty()) throw InputError("orbit with empty name");
    if (action <= Rational(0)) fail("action must be positive");
    if (type == OrbitType::explicit_table) {
        const auto* pa = std::get_if<PeriodicAffineModel>(&cz);
        if (pa == nullptr) fail("explicit orbits need a periodic CZ table");
        if (pa->period < 1) fail("period must be positive");
        if (static_cast<int>(pa->residues.size()) != pa->period) fail("residue count must equal the period");
        if (pa->increment % 2 != 0) fail("increment must be even");
        return;
    }
    const auto* rm = std::get_if<RotationModel>(&cz);
    if (rm == nullptr) fail("rotation-type orbits need a rotation number");
    const RotationNumber& th = rm->theta;
    if (th.s < -1 || th.s > 1) fail("infinitesimal offset must be -1, 0 or +1");
    switch (type) {
        case OrbitType::elliptic:
            if (th.s == 0) fail("elliptic rotation number needs an infinitesimal offset");
            break;
        case OrbitType::positive_hyperbolic:
            if (th.s != 0 || !th.r.is_integer()) fail("positive hyperbolic rotation number must be an integer");
            break;
        case OrbitType::negative_hyperbolic:
            if (th.s != 0 || !(th.r + Rational(1, 2)).is_integer())
                fail("negative hyperbolic rotation number must be a half-integer");
            break;
        case OrbitType::explicit_table: break;
    }
}

namespace {

void require_k(std::int64_t k) {
    if (k < 1) throw InputError("iterate multiplicity must be >= 1, got " + std::to_string(k));
}

int periodic_cz(const PeriodicAffineModel& pa, std::int64_t k) {
    std::int64_t c = k % pa.period;
    std::int64_t l = k / pa.period;
    return static_cast<int>(pa.residues[static_cast<std::size_t>(c)] + pa.increment * l);
}

// Parity pattern of an explicit table over k = 1..2N.
OrbitType infer_type(const SimpleOrbit& orbit, const PeriodicAffineModel& pa) {
    bool all_even = true, all_odd = true, alternating = true;
    for (std::int64_t k = 1; k <= 2 * static_cast<std::int64_t>(pa.period); ++k) {
        bool odd = (periodic_cz(pa, k) % 2) != 0;
        all_even = all_even && !odd;
        all_odd = all_odd && odd;
        alternating = alternating && (odd == (k % 2 == 1));
    }
    if (all_even) return OrbitType::positive_hyperbolic;
    if (all_odd) return OrbitType::elliptic;
    if (alternating) return OrbitType::negative_hyperbolic;
    throw InternalError("orbit '" + orbit.name +
                        "': CZ parity pattern matches no dimension-3 orbit type (malformed table)");
}

}  // namespace

int cz_index(const SimpleOrbit& orbit, std::int64_t k) {
    require_k(k);
    if (const auto* rm = std::get_if<RotationModel>(&orbit.cz)) {
        if (orbit.type == OrbitType::elliptic && rm->theta.s == 0)
            throw InputError("orbit '" + orbit.name + "': elliptic rotation number without offset");
        return static_cast<int>(rm->theta.floor_multiple(k) + rm->theta.ceil_multiple(k));
    }
    return periodic_cz(std::get<PeriodicAffineModel>(orbit.cz), k);
}

int grading(const SimpleOrbit& orbit, std::int64_t k, int n) {
    if (n < 2) throw InputError("half-dimension n must be >= 2");
    return cz_index(orbit, k) + n - 3;
}

OrbitType effective_type(const SimpleOrbit& orbit) {
    if (const auto* pa = std::get_if<PeriodicAffineModel>(&orbit.cz)) return infer_type(orbit, *pa);
    return orbit.type;
}

bool is_hyperbolic(const SimpleOrbit& orbit) {
    OrbitType t = effective_type(orbit);
    return t == OrbitType::positive_hyperbolic || t == OrbitType::negative_hyperbolic;
}

Parity parity_z2(const SimpleOrbit& orbit, std::int64_t k) {
    int mu = cz_index(orbit, k);
    Parity direct = (mu % 2 == 0) ? Parity::even : Parity::odd;
    OrbitType t = effective_type(orbit);
    bool positive_hyperbolic_iterate =
        t == OrbitType::positive_hyperbolic || (t == OrbitType::negative_hyperbolic && k % 2 == 0);
    Parity by_type = positive_hyperbolic_iterate ? Parity::even : Parity::odd;
    check_internal(direct == by_type, "orbit '" + orbit.name + "': CZ parity disagrees with orbit type at k=" +
                                          std::to_string(k));
    return direct;
}

bool is_bad(const SimpleOrbit& orbit, std::int64_t k) {
    int diff = cz_index(orbit, k) - cz_index(orbit, 1);
    bool bad = (diff % 2) != 0;
    if (std::holds_alternative<RotationModel>(orbit.cz)) {
        bool by_type = orbit.type == OrbitType::negative_hyperbolic && k % 2 == 0;
        check_internal(bad == by_type, "orbit '" + orbit.name + "': bad-orbit characterizations disagree");
    }
    return bad;
}

LinearBounds almost_linear_bounds(const SimpleOrbit& orbit, std::int64_t k) {
    require_k(k);
    if (!std::holds_alternative<RotationModel>(orbit.cz))
        throw InputError("orbit '" + orbit.name + "': almost-linear bounds need a rotation-number orbit");
    int mu1 = cz_index(orbit, 1);
    int muk = cz_index(orbit, k);
    auto kk = static_cast<int>(k);
    LinearBounds b{kk * mu1 - kk + 1, kk * mu1 + kk - 1};
    check_internal(b.lower <= muk && muk <= b.upper,
                   "orbit '" + orbit.name + "': mu(gamma^" + std::to_string(k) + ") outside almost-linear bounds");
    if (orbit.type != OrbitType::elliptic)
        check_internal(muk == kk * mu1, "orbit '" + orbit.name + "': hyperbolic index not linear");
    return b;
}

Rational iterate_action(const SimpleOrbit& orbit, std::int64_t k) {
    require_k(k);
    return orbit.action * Rational(k);
}

}  // namespace cch
