#pragma once

// Genus-zero multi-level buildings over a finite orbit universe. Components
// are abstract: ends plus an index, never an actual map. Enumeration is
// exhaustive inside explicit budgets.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cch/index_calculus.hpp"

namespace cch {

enum class ComponentKind {
    somewhere_injective,
    cover_of_nontrivial_cylinder,
    cover_of_trivial_cylinder,
    trivial_cylinder,
    cover_of_curve,  // branched cover of a somewhere injective curve with >= 2 negative ends
};

std::string to_string(ComponentKind k);

struct Component {
    ComponentKind kind = ComponentKind::somewhere_injective;
    PunctureConfig config;  // negatives sorted
    int k = 1;              // cover degree
    int b = 0;              // interior branch points
    int index = 0;          // exact, from the ends
    int index_lb = 0;
    std::optional<PunctureConfig> base;  // underlying curve of a cover

    bool nontrivial() const { return kind != ComponentKind::trivial_cylinder; }
    bool is_cylinder() const { return config.negatives.size() == 1; }
    bool is_plane() const { return config.negatives.empty(); }

    // identity ignores the recorded base
    friend bool operator==(const Component& a, const Component& b_) {
        return a.kind == b_.kind && a.config == b_.config && a.k == b_.k && a.b == b_.b;
    }
    friend std::strong_ordering operator<=>(const Component& a, const Component& b_);
};

/// Levels top to bottom. The negative ends of level i, sorted, are matched to
/// the positive ends of level i+1 in sorted order; equal iterates are
/// interchangeable, so the matching carries no further data.
struct Building {
    std::vector<std::vector<Component>> levels;

    Iterate positive() const { return levels.front().front().config.positive; }
    std::vector<Iterate> negative_ends() const;
    int total_index() const;
    std::size_t component_count() const;

    friend bool operator==(const Building&, const Building&) = default;
    friend auto operator<=>(const Building& a, const Building& b) { return a.levels <=> b.levels; }
};

struct Budgets {
    int max_levels = 3;
    int max_cover_degree = 4;
    int max_branch = 2;
    int max_components_per_level = 4;
    int max_iterate = 6;  // iterates gamma^k with k above this are left out of the universe

    friend bool operator==(const Budgets&, const Budgets&) = default;

    /// "levels=3,degree=4,branch=2,components=4,iterate=6"; omitted keys keep defaults.
    static Budgets parse(std::string_view text);
    std::string str() const;
};

/// In-cap iterates with k <= max_iterate, in Iterate order.
std::vector<Iterate> building_universe(const OrbitSet& set, const Budgets& budgets);

/// Every admissible component keyed by positive end.
///  - trivial cylinders;
///  - somewhere injective: index >= 1, negative actions summing to strictly less
///    than the positive action, classes composing to the positive class, at
///    most max_components_per_level negative ends;
///  - covers of trivial cylinders: gamma^m -> partition of m into n >= 2 parts,
///    b = n - 1;
///  - covers of a somewhere injective cylinder of degree k | m, n = 1 + b ends;
///  - covers of a somewhere injective curve with s+1 >= 2 negative ends,
///    1 + ks + b ends.
/// Cover degrees and branch counts stay inside the budgets.
using ComponentCatalog = std::map<Iterate, std::vector<Component>>;
ComponentCatalog build_catalog(const OrbitSet& set, const Budgets& budgets);

struct EnumerationResult {
    std::vector<Building> buildings;  // canonical order
    Budgets budgets;
    bool incomplete = false;
    std::vector<std::string> truncations;  // distinct budget names that cut the search
};

/// All buildings with one positive end, negative_ends (0 or 1) unmatched ends
/// at the bottom, and total index target_index.
EnumerationResult enumerate_buildings(const OrbitSet& set, int target_index, int negative_ends,
                                      const Budgets& budgets);
EnumerationResult enumerate_buildings_serial(const OrbitSet& set, int target_index, int negative_ends,
                                             const Budgets& budgets);

/// Buildings from x down to z (or to no end when z is empty).
EnumerationResult enumerate_between(const OrbitSet& set, const Iterate& x, const std::optional<Iterate>& z,
                                    const Budgets& budgets);

enum class Index2Type { type_i, type_ii, type_iii, excluded };
std::string to_string(Index2Type t);

/// Throws InputError unless the building has index 2 and exactly one negative end.
Index2Type classify_index2(const OrbitSet& set, const Building& building);

std::string describe(const OrbitSet& set, const Component& c);
std::string describe(const OrbitSet& set, const Building& b);

struct LemmaCheck {
    std::string name;
    bool applicable = true;
    bool pass = true;
    std::size_t examined = 0;
    std::vector<std::string> counterexamples;
};

struct LemmaCertificate {
    Budgets budgets;
    bool dynamically_convex = false;
    bool dynamically_separated = false;
    bool incomplete = false;
    std::vector<LemmaCheck> checks;  // a, b, c, d
    std::map<std::string, std::size_t> index2_types;
    bool pass() const;
};

/// (a) planes: index >= 2, and 2 only for a single plane;
/// (b) cylinders: index >= 1, and 1 only for a single cylinder;
/// (c) index-2 cylinders classify as i, ii or iii;
/// (d) when dynamically separated, no type iii.
LemmaCertificate verify_lemmas(const OrbitSet& set, const Budgets& budgets);

struct IntermediateOrbit {
    Iterate y;
    std::string label;
    int mu = 0;
    bool bad = false;
};

struct ConditionDCertificate {
    Budgets budgets;
    bool pass = true;
    bool incomplete = false;
    std::vector<IntermediateOrbit> intermediates;
    std::map<std::string, std::size_t> types;
    std::vector<std::string> counterexamples;
};

/// Needs mu(x) - mu(z) = 2 and equal classes (InputError otherwise).
ConditionDCertificate verify_condition_D(const OrbitSet& set, const Iterate& x, const Iterate& z,
                                         const Budgets& budgets);

}  // namespace cch
