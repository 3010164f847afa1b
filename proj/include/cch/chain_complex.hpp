#pragma once

// Graded chain complexes generated by good orbits, with the weighted
// differentials built from rigid-cylinder records, and their homology.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cch/dynamics.hpp"
#include "cch/linalg.hpp"

namespace cch {

struct Generator {
    Iterate it;
    std::string label;
    int degree = 0;
    int mu = 0;
    Rational action;
    int multiplicity = 1;  // m(gamma^k) = k
};

struct ClassGenerators {
    std::vector<Generator> gens;  // canonical: action, then name, then k
    std::map<int, std::vector<std::size_t>> by_degree;
};

struct GeneratorTable {
    std::map<int, ClassGenerators> classes;
    int deg_min = 0;
    int deg_max = 0;
    std::optional<Rational> action_cap;
    std::int64_t k_cap = 0;

    std::size_t size() const;
    /// (class, position) of an iterate, if it is a generator.
    std::optional<std::pair<int, std::size_t>> locate(const Iterate& it) const;
};

/// Generators with grading in [deg_min, deg_max]. The cap overrides the
/// orbit set's own cap when given; k_cap bounds multiplicities, which only
/// matters when the cap is infinite.
GeneratorTable build_generators(const OrbitSet& set, const std::optional<Rational>& action_cap, int deg_min,
                                int deg_max, std::int64_t k_cap);

/// One rigid cylinder u from x to y, sign eps(u) and multiplicity m(u).
struct ModuliRecord {
    Iterate x;
    Iterate y;
    int sign = 1;
    int m_u = 1;
};

struct ModuliInput {
    std::vector<ModuliRecord> records;
};

/// mu(x) - mu(y) = 1, same class, m_u | gcd(m(x), m(y)), sign +-1.
void validate_moduli(const OrbitSet& set, const ModuliInput& moduli);

enum class Variant { minus, plus };
std::string to_string(Variant v);

/// Per class, per degree d: the map C_d -> C_{d-1}; rows index degree d-1
/// generators, columns degree d generators, both in canonical order.
struct GradedMatrixComplex {
    std::map<int, std::map<int, QMatrix>> maps;
    std::map<int, std::map<int, std::vector<std::string>>> basis;  // class -> degree -> labels
    int deg_min = 0;
    int deg_max = 0;
    /// Degrees whose incoming or outgoing map crosses the window.
    std::map<int, std::set<int>> edge;
    /// Records dropped because an endpoint was bad or outside the window.
    std::size_t dropped_bad = 0;
    std::size_t dropped_window = 0;
};

/// Diagonal matrix of multiplicities for one class and degree.
QMatrix kappa_matrix(const GeneratorTable& table, int cls, int degree);

/// delta: sum over records of eps(u)/m(u). Records with a bad endpoint are
/// skipped; a good endpoint over the cap or an invariant violation is an
/// InputError.
GradedMatrixComplex delta_matrix(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli);

/// minus = kappa * delta, plus = delta * kappa. Entries are asserted integral;
/// when every record has m(x) = m(y) the two variants are asserted equal.
GradedMatrixComplex differential(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli,
                                 Variant variant);

struct DSquaredWitness {
    int cls = 0;
    int degree = 0;  // source degree of x
    std::string x;
    std::string z;
    mpq_class value;
};

struct DSquaredReport {
    bool ok = true;
    std::optional<DSquaredWitness> witness;
};

DSquaredReport check_d_squared(const GradedMatrixComplex& complex);

struct ClassHomology {
    std::map<int, std::size_t> rank;  // over Q
    std::map<int, std::size_t> rank_f2;
    std::map<int, std::size_t> free_rank_z;
    std::map<int, std::vector<std::string>> torsion_z;  // invariant factors > 1
};

struct HomologyReport {
    std::map<int, ClassHomology> classes;
    std::map<int, std::size_t> total;  // summed over classes, over Q
    std::set<int> edge;                // degrees flagged in some class
    int deg_min = 0;
    int deg_max = 0;
};

/// Throws MathError when d^2 != 0. Ranks per (class, degree) run in parallel.
HomologyReport homology(const GradedMatrixComplex& complex);
HomologyReport homology_serial(const GradedMatrixComplex& complex);

struct GluingEnds {
    int ends = 0;
    int end_multiplicity = 0;
    friend bool operator==(const GluingEnds&, const GluingEnds&) = default;
};

/// m_y / lcm(m_u, m_v) ends, each of multiplicity gcd(m_u, m_v).
GluingEnds gluing_end_count(int m_y, int m_u, int m_v);

struct BoundaryIdentityReport {
    bool holds = true;
    mpq_class boundary_sum;   // sum over ends through good y
    mpq_class bad_sum;        // signed end count through bad y (must be 0)
    mpq_class delta_kappa_delta;
};

/// Compares the signed boundary count of the index-2 space from x to z,
/// glued ends through good and bad y alike, with the (z, x) entry of
/// delta kappa delta over good y. Bad intermediates need m(u) = m(v) = 1.
BoundaryIdentityReport boundary_count_identity(const OrbitSet& set, const ModuliInput& moduli, const Iterate& x,
                                               const Iterate& z);

/// kappa * d_plus == d_minus * kappa on every class and degree.
bool kappa_chain_map_check(const OrbitSet& set, const GeneratorTable& table, const ModuliInput& moduli);

}  // namespace cch
