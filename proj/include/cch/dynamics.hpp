#pragma once

// Free homotopy bookkeeping for iterates and the dynamical convexity /
// separation classifiers.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cch/orbit.hpp"

namespace cch {

struct TrivialHomotopy {
    friend bool operator==(const TrivialHomotopy&, const TrivialHomotopy&) = default;
};

/// class(gamma^k) = k * seed mod order, residue 0 contractible.
struct CyclicHomotopy {
    int order = 2;
    friend bool operator==(const CyclicHomotopy&, const CyclicHomotopy&) = default;
};

/// Explicit class labels per orbit for k = 1..bound (entry k-1). Label 0 is
/// the contractible class.
struct TableHomotopy {
    int bound = 0;
    std::map<std::string, std::vector<int>> classes;
    friend bool operator==(const TableHomotopy&, const TableHomotopy&) = default;
};

using FreeHomotopyModel = std::variant<TrivialHomotopy, CyclicHomotopy, TableHomotopy>;

constexpr int kContractible = 0;

struct OrbitSet {
    std::vector<SimpleOrbit> orbits;
    FreeHomotopyModel homotopy = TrivialHomotopy{};
    std::optional<Rational> action_cap;  // nullopt = unbounded
    std::string notes;

    void validate() const;
    std::optional<std::size_t> find(std::string_view name) const;

    const SimpleOrbit& orbit(const Iterate& it) const { return orbits.at(it.orbit); }
    int mu(const Iterate& it) const { return cz_index(orbit(it), it.k); }
    Rational action(const Iterate& it) const { return iterate_action(orbit(it), it.k); }
    bool bad(const Iterate& it) const { return is_bad(orbit(it), it.k); }
    std::string label(const Iterate& it) const;
};

bool within_cap(const std::optional<Rational>& cap, const Rational& action);

int class_of(const OrbitSet& set, std::size_t orbit, std::int64_t k);
inline int class_of(const OrbitSet& set, const Iterate& it) { return class_of(set, it.orbit, it.k); }

/// All k <= bound with class_of(k) == c, increasing.
std::vector<std::int64_t> iterate_list(const OrbitSet& set, std::size_t orbit, int c, std::int64_t bound);

/// Class of a curve's positive end given the classes of its negative ends,
/// or nullopt when the model cannot combine them. Trivial: always 0. Cyclic:
/// sum mod order. Table: defined when at most one class is noncontractible.
std::optional<int> compose_classes(const OrbitSet& set, const std::vector<int>& classes);

/// Largest k the set admits for an orbit: action cap if finite, else k_cap.
std::int64_t k_limit(const OrbitSet& set, std::size_t orbit, std::int64_t k_cap,
                     const std::optional<Rational>& action_cap);

struct IterateWitness {
    std::string orbit;
    std::int64_t k = 0;
    int mu = 0;
    friend bool operator==(const IterateWitness&, const IterateWitness&) = default;
};

struct ConvexityReport {
    bool pass = true;
    std::int64_t k_cap = 0;
    std::optional<Rational> action_cap;
    std::vector<IterateWitness> violations;
};

ConvexityReport is_dynamically_convex(const OrbitSet& set, std::int64_t k_cap);

struct SeparationViolation {
    std::string condition;  // "I.i", "I.ii" or "II"
    std::string orbit;
    int homotopy_class = 0;
    std::int64_t k = 0;
    int mu = 0;
    std::int64_t k_prev = 0;  // condition II only
    int mu_prev = 0;
    friend bool operator==(const SeparationViolation&, const SeparationViolation&) = default;
};

struct SeparationReport {
    bool pass = true;
    std::int64_t k_cap = 0;
    std::optional<Rational> action_cap;
    std::vector<SeparationViolation> violations;
};

/// Checks (I.i), (I.ii) and (II) on every in-cap iterate list. Asserts that a
/// pass implies dynamical convexity on the same caps.
SeparationReport is_dynamically_separated(const OrbitSet& set, std::int64_t k_cap,
                                          const std::optional<Rational>& action_cap);

/// Every homotopy class label that occurs among iterates up to the limits.
std::vector<int> classes_present(const OrbitSet& set, std::int64_t k_cap, const std::optional<Rational>& action_cap);

}  // namespace cch
