#include "cch/index_calculus.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "cch/errors.hpp"

namespace cch {

int fredholm_index(int mu_positive, std::span<const int> mu_negatives) {
    int s = static_cast<int>(mu_negatives.size());
    int sum = std::accumulate(mu_negatives.begin(), mu_negatives.end(), 0);
    return -(1 - s) + mu_positive - sum;
}

int fredholm_index(const OrbitSet& set, const PunctureConfig& config) {
    std::vector<int> mus;
    mus.reserve(config.negatives.size());
    for (const auto& it : config.negatives) mus.push_back(set.mu(it));
    return fredholm_index(set.mu(config.positive), mus);
}

int riemann_hurwitz_euler(int k, int chi_base, int b_total) {
    if (k < 1) throw InputError("cover degree must be >= 1");
    if (b_total < 0) throw InputError("total ramification must be >= 0");
    return k * chi_base - b_total;
}

int cover_negative_punctures(int k, int s, int b) {
    if (k < 1 || s < 0 || b < 0) throw InputError("cover_negative_punctures: need k >= 1, s >= 0, b >= 0");
    return 1 + k * s + b;
}

RamificationSplit ramification_split(int k, int b) {
    if (k < 1 || b < 0) throw InputError("ramification_split: need k >= 1, b >= 0");
    if (b > k - 1)
        throw InputError("interior branching b=" + std::to_string(b) + " exceeds k-1=" + std::to_string(k - 1));
    return {k - 1, k - 1 - b, b};
}

int cover_index_lower_bound(const OrbitSet& set, const CoverData& cover) {
    if (cover.k < 1 || cover.b < 0) throw InputError("cover data needs k >= 1 and b >= 0");
    switch (cover.base_kind) {
        case BaseKind::general: return 2 - cover.k + 2 * cover.b;
        case BaseKind::trivial_cylinder:
            if (cover.base.negatives.size() != 1 || cover.base.negatives.front() != cover.base.positive)
                throw InputError("trivial cylinder base needs equal ends");
            return 0;
        case BaseKind::nontrivial_cylinder: {
            if (cover.base.negatives.size() != 1) throw InputError("cylinder base needs exactly one negative end");
            int base_index = fredholm_index(set, cover.base);
            if (base_index <= 0)
                throw InputError("nontrivial cylinders have index >= 1 for generic J; base index is " +
                                 std::to_string(base_index));
            int n = cover.n_negative;
            if (base_index >= 2) return 2 * n;
            bool plus_hyp = is_hyperbolic(set.orbit(cover.base.positive));
            bool minus_hyp = is_hyperbolic(set.orbit(cover.base.negatives.front()));
            if (plus_hyp) return 2 * n - 1;
            if (minus_hyp) return n;
            throw InternalError("index-1 cylinder with no hyperbolic end");
        }
    }
    return std::numeric_limits<int>::min();
}

int trivial_cover_index(const SimpleOrbit& orbit, std::span<const int> partition) {
    if (partition.empty()) throw InputError("partition must be nonempty");
    int k = 0;
    int sum = 0;
    for (int part : partition) {
        if (part < 1) throw InputError("partition parts must be positive");
        k += part;
        sum += cz_index(orbit, part);
    }
    int n = static_cast<int>(partition.size());
    int ind = (n - 1) + cz_index(orbit, k) - sum;
    if (!std::holds_alternative<RotationModel>(orbit.cz)) return ind;
    check_internal(ind >= 0, "orbit '" + orbit.name + "': negative index for a trivial-cylinder cover");
    if (orbit.type != OrbitType::elliptic)
        check_internal(ind == n - 1, "orbit '" + orbit.name + "': hyperbolic trivial-cylinder cover index != n-1");
    return ind;
}

Rational normal_chern(int ind, int n_gamma0) {
    if (n_gamma0 < 0) throw InputError("#Gamma_0 must be >= 0");
    return Rational(ind - 2 + n_gamma0, 2);
}

int k_function(const Rational& r, int G) {
    if (G < 0) throw InputError("K(r, G) needs G >= 0");
    int best = std::numeric_limits<int>::max();
    Rational two_r = Rational(2) * r;
    for (int k = 0; k <= G; ++k) {
        Rational t = two_r - Rational(2 * k);  // need l > t
        std::int64_t l = 0;
        if (t >= Rational(0)) {
            std::int64_t f = t.floor();
            l = (f % 2 == 0) ? f + 2 : f + 1;
        }
        best = std::min<int>(best, k + static_cast<int>(l));
    }
    return best;
}

bool automatic_transversality(int ind, int genus, int n_gamma0, int Z) {
    return ind > 2 * genus + n_gamma0 - 2 + 2 * Z;
}

int even_end_count(const OrbitSet& set, const PunctureConfig& config) {
    int n = set.mu(config.positive) % 2 == 0 ? 1 : 0;
    for (const auto& it : config.negatives) n += set.mu(it) % 2 == 0 ? 1 : 0;
    return n;
}

}  // namespace cch
