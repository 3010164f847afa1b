#pragma once

// Conley-Zehnder index machinery for nondegenerate Reeb orbits in dimension
// three and their iterates.

#include <compare>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "cch/rational.hpp"

namespace cch {

/// theta = r + s * eps, eps a positive infinitesimal. Every floor/ceiling of
/// an integer multiple is exact, which is what iterated CZ indices need.
struct RotationNumber {
    Rational r;
    int s = 0;  // -1, 0 or +1

    std::int64_t floor_multiple(std::int64_t k) const;
    std::int64_t ceil_multiple(std::int64_t k) const;

    /// "p/q", "p/q+eps", "p/q-eps".
    std::string str() const;
    static RotationNumber parse(std::string_view text);

    friend bool operator==(const RotationNumber&, const RotationNumber&) = default;
};

struct RotationModel {
    RotationNumber theta;
    friend bool operator==(const RotationModel&, const RotationModel&) = default;
};

/// mu(gamma^(l*N + c)) = residues[c] + increment * l, l >= 0 (l >= 1 for c = 0).
struct PeriodicAffineModel {
    int period = 1;
    std::vector<int> residues;
    int increment = 0;
    friend bool operator==(const PeriodicAffineModel&, const PeriodicAffineModel&) = default;
};

using CzModel = std::variant<RotationModel, PeriodicAffineModel>;

enum class OrbitType { elliptic, positive_hyperbolic, negative_hyperbolic, explicit_table };

std::string to_string(OrbitType t);
OrbitType orbit_type_from_string(std::string_view s);

struct SimpleOrbit {
    std::string name;
    OrbitType type = OrbitType::elliptic;
    CzModel cz;
    Rational action{1};
    int homotopy_seed = 0;

    /// Throws InputError when the type/model/action combination is invalid.
    void validate() const;
};

enum class Parity { even, odd };
std::string to_string(Parity p);

/// (simple orbit index within its orbit set, cover multiplicity).
struct Iterate {
    std::uint32_t orbit = 0;
    std::uint32_t k = 1;
    friend auto operator<=>(const Iterate&, const Iterate&) = default;
};

int cz_index(const SimpleOrbit& orbit, std::int64_t k);
int grading(const SimpleOrbit& orbit, std::int64_t k, int n = 2);
Parity parity_z2(const SimpleOrbit& orbit, std::int64_t k);
bool is_bad(const SimpleOrbit& orbit, std::int64_t k);

struct LinearBounds {
    int lower;
    int upper;
};

/// k*mu - k + 1 <= mu(gamma^k) <= k*mu + k - 1; Rotation-model orbits only.
LinearBounds almost_linear_bounds(const SimpleOrbit& orbit, std::int64_t k);

Rational iterate_action(const SimpleOrbit& orbit, std::int64_t k);

/// Dimension-three type of the orbit. Explicit-table orbits are classified
/// from the parity pattern of their indices (all even: positive hyperbolic,
/// alternating with k: negative hyperbolic, all odd: elliptic).
OrbitType effective_type(const SimpleOrbit& orbit);

/// Positive or negative hyperbolic (iterates of hyperbolic orbits stay hyperbolic).
bool is_hyperbolic(const SimpleOrbit& orbit);

}  // namespace cch
