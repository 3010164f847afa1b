#pragma once

// Shared oracles for the test suites: seeded random orbits and an
// independent Conley-Zehnder oracle written from floor/ceil definitions.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <string>

#include "cch/dynamics.hpp"

namespace cch::testing {

inline std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

/// mu(gamma^k) for theta = p/q + s*eps: floor(k theta) + ceil(k theta).
inline int oracle_mu(std::int64_t p, std::int64_t q, int s, std::int64_t k) {
    std::int64_t n = k * p;
    if (n % q == 0) {
        std::int64_t m = n / q;
        if (s > 0) return static_cast<int>(2 * m + 1);
        if (s < 0) return static_cast<int>(2 * m - 1);
        return static_cast<int>(2 * m);
    }
    return static_cast<int>(2 * floor_div(n, q) + 1);
}

inline SimpleOrbit rotation_orbit(const std::string& name, OrbitType type, Rational theta, int s, Rational action) {
    return SimpleOrbit{name, type, RotationModel{{theta, s}}, action, 0};
}

/// Random rotation-model orbit: elliptic with denominators up to 12,
/// positive hyperbolic at integers, negative hyperbolic at half-integers.
inline SimpleOrbit random_orbit(std::mt19937_64& rng, const std::string& name, int max_int = 4) {
    std::uniform_int_distribution<int> kind(0, 2), whole(-max_int, max_int), den(2, 12), sgn(0, 1), act(1, 40);
    Rational action(act(rng), 10);
    switch (kind(rng)) {
        case 0: {
            int q = den(rng);
            std::uniform_int_distribution<int> num(0, q - 1);
            return rotation_orbit(name, OrbitType::elliptic, Rational(whole(rng)) + Rational(num(rng), q),
                                  sgn(rng) ? 1 : -1, action);
        }
        case 1: return rotation_orbit(name, OrbitType::positive_hyperbolic, Rational(whole(rng)), 0, action);
        default:
            return rotation_orbit(name, OrbitType::negative_hyperbolic, Rational(whole(rng)) + Rational(1, 2), 0,
                                  action);
    }
}

inline int oracle_mu(const SimpleOrbit& o, std::int64_t k) {
    const auto& th = std::get<RotationModel>(o.cz).theta;
    return oracle_mu(th.r.num(), th.r.den(), th.s, k);
}

/// Calls f on every partition of n into parts <= max_part, largest first.
inline void partitions(int n, int max_part, std::vector<int>& cur, const std::function<void(const std::vector<int>&)>& f) {
    if (n == 0) {
        f(cur);
        return;
    }
    for (int p = std::min(n, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions(n - p, p, cur, f);
        cur.pop_back();
    }
}

}  // namespace cch::testing
