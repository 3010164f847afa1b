#pragma once

// Fredholm indices of genus-zero punctured curves, Riemann-Hurwitz branch
// accounting, index lower bounds for multiple covers, and the automatic
// transversality inequality. All numeric; no curve is ever constructed.

#include <span>
#include <vector>

#include "cch/dynamics.hpp"

namespace cch {

/// One positive puncture, any number of negative ones, genus 0.
struct PunctureConfig {
    Iterate positive;
    std::vector<Iterate> negatives;
    friend auto operator<=>(const PunctureConfig&, const PunctureConfig&) = default;
};

int fredholm_index(int mu_positive, std::span<const int> mu_negatives);
int fredholm_index(const OrbitSet& set, const PunctureConfig& config);

int riemann_hurwitz_euler(int k, int chi_base, int b_total);

/// Negative puncture count of a genus-0 k-fold cover with one positive
/// puncture of a curve with s+1 negative ends and b interior branch points.
int cover_negative_punctures(int k, int s, int b);

/// Where the 2k-2 units of ramification of a genus-0 cover sit: k-1 at the
/// (fully ramified) positive puncture, the rest over negative punctures and
/// at interior points.
struct RamificationSplit {
    int positive = 0;
    int negative = 0;
    int interior = 0;
};

/// Throws InputError when b > k-1 (negative ramification would be < 0).
RamificationSplit ramification_split(int k, int b);

enum class BaseKind { general, nontrivial_cylinder, trivial_cylinder };

struct CoverData {
    int k = 1;
    int b = 0;
    PunctureConfig base;
    BaseKind base_kind = BaseKind::general;
    /// Negative ends of the cover for cylinder bases; its size n enters the
    /// cylinder bound.
    int n_negative = 1;
};

/// General base: 2-k+2b. Nontrivial cylinder: 2n (base index >= 2), 2n-1
/// (index 1, positive end hyperbolic), n (index 1, negative end hyperbolic).
/// Trivial cylinder: 0.
int cover_index_lower_bound(const OrbitSet& set, const CoverData& cover);

/// (n-1) + mu(gamma^k) - sum mu(gamma^k_i), k = sum of parts.
int trivial_cover_index(const SimpleOrbit& orbit, std::span<const int> partition);

/// (ind - 2 + #Gamma_0) / 2.
Rational normal_chern(int ind, int n_gamma0);

/// min{k + l : 0 <= k <= G, l even >= 0, 2k + l > 2r}.
int k_function(const Rational& r, int G);

/// ind > 2g + #Gamma_0 - 2 + 2Z.
bool automatic_transversality(int ind, int genus, int n_gamma0, int Z);

/// Number of ends of a curve whose asymptotic orbit has even CZ index.
int even_end_count(const OrbitSet& set, const PunctureConfig& config);

}  // namespace cch
