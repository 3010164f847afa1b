#pragma once

// Built-in orbit sets: irrational ellipsoids, the perturbed prequantization
// of S^3, and lens spaces L(n+1, n).

#include <string>
#include <utility>
#include <vector>

#include "cch/dynamics.hpp"

namespace cch {

/// phi1 = a/b and phi2 = b/a, each an exact rational plus an infinitesimal.
struct EllipsoidSpec {
    RotationNumber phi1;
    RotationNumber phi2;
    Rational action1{1};
    Rational action2{1};
};

/// Orbits "gamma1", "gamma2" (or the given names), rotation numbers 1 + phi_i.
/// Rejects specs with r1 * r2 != 1 or s2 != -s1 or s1 == 0.
OrbitSet ellipsoid(const EllipsoidSpec& spec, const std::string& name1 = "gamma1",
                   const std::string& name2 = "gamma2");

struct CriticalPoint {
    std::string name;
    int morse_index = 0;
};

/// A Morse function on S^2; #index0 - #index1 + #index2 must be 2.
struct MorseData {
    std::vector<CriticalPoint> points;
    void validate() const;
};

/// South pole minimum and north pole maximum.
MorseData height_function();

/// One orbit "gamma_<name>" per critical point with mu(gamma_p^k) =
/// 4k - 1 + index_p: index 0 is elliptic 2-eps, index 1 positive hyperbolic 2,
/// index 2 elliptic 2+eps. Action 1 + (index_p - 1)/100.
OrbitSet prequantized_s3(const MorseData& h);

/// Explicit tables of period n+1 over Cyclic(n+1), seed 1:
/// mu(gamma_p^(l(n+1))) = 4l - 1 + index_p, mu(gamma_p^(l(n+1)+c)) = 4l + 1 + index_p.
OrbitSet lens_space(int n, const MorseData& h);

struct GradedOrbit {
    std::string label;
    int grading = 0;
};

struct CobordismTable {
    std::vector<GradedOrbit> upper;  // E(1-eps, 2+eps): delta1, delta2
    std::vector<GradedOrbit> lower;  // E(1-eps, 1+eps): gamma1, gamma2
    std::vector<std::pair<std::string, std::string>> coincidences;  // every equal-grading pair
    /// Coincidences whose upper orbit is simple; these are the ends of
    /// somewhere injective cobordism cylinders.
    std::vector<std::pair<std::string, std::string>> simple_matches;
    int base_cylinder_index = 0;  // delta1 -> gamma1
    int double_cover_index = 0;   // delta1^2 -> gamma1^2
    int window_lo = 2;
    int window_hi = 8;
};

CobordismTable cobordism_grading_table();

}  // namespace cch
