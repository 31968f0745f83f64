#pragma once

// Character sheaf labels for type AI and type II gradings. A label is a
// stratum together with a central character and a (multi)partition naming
// an irreducible representation of the braid group factor. The module
// builds the catalogs, the bijections from nilpotent orbital complexes, and
// the conjectural cuspidal lists; it checks the combinatorics only.

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "gcs/diagrams.hpp"
#include "gcs/errors.hpp"
#include "gcs/oracle.hpp"
#include "gcs/orbits.hpp"

namespace gcs {

/// Character of Z/modulus sending 1 to exp(2 pi i index / modulus).
struct CentralCharacter {
    int modulus = 1;
    int index = 0;

    int order() const { return modulus / std::gcd(index, modulus); }

    friend bool operator==(const CentralCharacter&, const CentralCharacter&) = default;
    friend auto operator<=>(const CentralCharacter&, const CentralCharacter&) = default;
};

inline int euler_phi(int n) {
    int count = 0;
    for (int i = 1; i <= n; ++i)
        if (std::gcd(i, n) == 1) ++count;
    return count;
}

/// Characters of Z/dcheck of exact order a, by ascending index.
inline std::vector<CentralCharacter> exact_order_characters(int dcheck, int a) {
    if (dcheck < 1 || a < 1) throw PreconditionError("exact_order_characters: arguments must be positive");
    std::vector<CentralCharacter> out;
    if (dcheck % a != 0) return out;
    for (int c = 0; c < dcheck; ++c) {
        CentralCharacter chi{dcheck, c};
        if (chi.order() == a) out.push_back(chi);
    }
    return out;
}

struct SheafFlags {
    bool nilpotent_support = false;
    bool full_support = false;
    bool cuspidal_conjectural = false;

    friend bool operator==(const SheafFlags&, const SheafFlags&) = default;
    friend auto operator<=>(const SheafFlags&, const SheafFlags&) = default;
};

struct SheafLabel {
    std::variant<StratumLabelAI, StratumLabelII> stratum;
    CentralCharacter psi;
    MultiPartition tau;   // one component in type II
    SheafFlags flags;

    bool is_AI() const { return std::holds_alternative<StratumLabelAI>(stratum); }
    const StratumLabelAI& ai() const { return std::get<StratumLabelAI>(stratum); }
    const StratumLabelII& ii() const { return std::get<StratumLabelII>(stratum); }

    friend bool operator==(const SheafLabel&, const SheafLabel&) = default;
    friend auto operator<=>(const SheafLabel&, const SheafLabel&) = default;
};

/// Simple equivariant perverse sheaf on the nilpotent cone of g_{-1}: an
/// orbit ((-) convention) with a character of its component group.
struct OrbitalComplex {
    FilledDiagram orbit;
    CentralCharacter psi;

    friend bool operator==(const OrbitalComplex&, const OrbitalComplex&) = default;
    friend auto operator<=>(const OrbitalComplex&, const OrbitalComplex&) = default;
};

namespace detail {

// Component group used for characters on O_lambda; the empty orbit of the
// zero-dimensional grading only carries the trivial character.
inline int effective_component_order(const FilledDiagram& lambda) {
    return lambda.empty() ? 1 : lambda.part_gcd();
}

inline bool uniform_dims(const GradingSpec& g) {
    const int m = g.modulus();
    return g.total() % m == 0 && g.dims() == DimensionVector::uniform(m, g.total() / m);
}

} // namespace detail

/// Membership in the conjectural cuspidal list, as a predicate on AI labels.
inline bool is_cuspidal_conjectural_AI(const StratumLabelAI& s, const GradingSpec& g) {
    const int m = g.modulus();
    const int N = g.total();
    if (N == 0) return false;
    if (N % m != 0) {
        // the regular nilpotent orbit with characters of order N
        return s.a == N && s.l == 0 && s.mu.row_count() == 1 && s.mu.rows()[0].length == N;
    }
    if (!detail::uniform_dims(g) || !s.mu.empty() || s.l != 1) return false;
    const long long am = static_cast<long long>(s.a) * m;
    if (am % N != 0) return false;
    const int dprime = static_cast<int>(am / N);
    return m % dprime == 0 && std::gcd(N / m, m / dprime) == 1;
}

namespace detail {

inline SheafFlags flags_AI(const StratumLabelAI& s, const GradingSpec& g, int stratum_dim) {
    SheafFlags f;
    f.nilpotent_support = s.l == 0;
    f.full_support = stratum_dim == dim_g1(g);
    f.cuspidal_conjectural = is_cuspidal_conjectural_AI(s, g);
    return f;
}

inline SheafFlags flags_II(const StratumLabelII& s, const GradingSpec& g) {
    SheafFlags f;
    f.nilpotent_support = s.k == 0;
    f.full_support = s == full_support_stratum_II(g);
    return f;
}

} // namespace detail

/// Orbital complexes with central character of exact order a (type AI), or
/// all of them with trivial character (type II, where a is ignored).
inline std::vector<OrbitalComplex> orbital_complexes(const GradingSpec& g, int a = 1) {
    std::vector<OrbitalComplex> out;
    if (is_type_two(g.kind())) {
        for (auto& lam : enumerate_orbits(g, Sign::Minus)) out.push_back({std::move(lam), CentralCharacter{1, 0}});
        return out;
    }
    if (a < 1) throw PreconditionError("a must be positive");
    for (auto& lam : enumerate_orbits(g, Sign::Minus)) {
        const int dl = detail::effective_component_order(lam);
        if (dl % a != 0) continue;
        for (const auto& psi : exact_order_characters(dl, a)) out.push_back({lam, psi});
    }
    return out;
}

/// Character sheaves of type AI with central character of order a.
inline std::vector<SheafLabel> catalog_AI(const GradingSpec& g, int a) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("catalog_AI needs an AI grading");
    const int d = std::gcd(a, g.modulus());
    std::vector<SheafLabel> out;
    for (const auto& s : enumerate_strata_AI(g, a)) {
        const SheafFlags flags = detail::flags_AI(s, g, stratum_dim_AI(s, g));
        const auto taus = multipartitions(d, s.l);
        for (const auto& psi : exact_order_characters(s.d_check, a))
            for (const auto& tau : taus) out.push_back({s, psi, tau, flags});
    }
    return out;
}

/// All type AI character sheaves: the union of catalog_AI over a | N.
inline std::vector<SheafLabel> catalog_AI_all(const GradingSpec& g) {
    std::vector<SheafLabel> out;
    const int N = g.total();
    for (int a = 1; a <= std::max(N, 1); ++a) {
        if (N != 0 && N % a != 0) continue;
        auto part = catalog_AI(g, a);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

inline std::vector<SheafLabel> catalog_II(const GradingSpec& g) {
    if (!is_type_two(g.kind())) throw PreconditionError("catalog_II needs a type II grading");
    std::vector<SheafLabel> out;
    for (const auto& s : enumerate_strata_II(g)) {
        const SheafFlags flags = detail::flags_II(s, g);
        for (const auto& rho : partitions(s.k)) out.push_back({s, CentralCharacter{1, 0}, MultiPartition{{rho}}, flags});
    }
    return out;
}

/// Image of IC(O_lambda, psi) under the orbit-to-sheaf bijection of type AI.
/// psi is matched across component groups by its position among the
/// characters of exact order a.
inline SheafLabel map_sheaf_AI(const FilledDiagram& lambda, const CentralCharacter& psi, int a, const GradingSpec& g) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("map_sheaf_AI needs an AI grading");
    const int m = g.modulus();
    if (dimension_vector(lambda) != g.dims()) throw PreconditionError("orbit does not match the grading");
    const int dl = detail::effective_component_order(lambda);
    if (psi.modulus != dl || psi.order() != a)
        throw PreconditionError("character is not of exact order a on the component group of the orbit");
    const auto source = exact_order_characters(dl, a);
    const auto pos = std::find(source.begin(), source.end(), psi) - source.begin();

    const PeelAI peeled = peel_AI(lambda, a, m);
    StratumLabelAI s{a, peeled.braid_rank, as_sign(peeled.residual, Sign::Minus), 0};
    s.d_check = d_check_stratum(a, s.mu, m);
    const auto target = exact_order_characters(s.d_check, a);
    if (target.size() != source.size()) throw InconsistentStratum("character groups of different size");
    return {s, target[static_cast<std::size_t>(pos)], peeled.tau, detail::flags_AI(s, g, stratum_dim_AI(s, g))};
}

/// Image of IC(O_lambda, C) under the type II bijection.
inline SheafLabel map_sheaf_II(const FilledDiagram& lambda, const GradingSpec& g) {
    if (dimension_vector(lambda) != g.dims()) throw PreconditionError("orbit does not match the grading");
    const PeelII peeled = peel_II(lambda, g);
    StratumLabelII s{peeled.k, as_sign(peeled.residual, Sign::Minus)};
    return {s, CentralCharacter{1, 0}, MultiPartition{{peeled.nu}}, detail::flags_II(s, g)};
}

struct BijectionReport {
    std::size_t source_count = 0;
    std::size_t catalog_count = 0;
    bool counts_equal = false;
    bool injective = false;
    bool surjective = false;

    bool pass() const { return counts_equal && injective && surjective; }
};

/// Maps every orbital complex (of order a in type AI) and compares the image
/// with the catalog as label sets.
inline BijectionReport verify_bijection(const GradingSpec& g, int a = 1) {
    std::vector<SheafLabel> catalog;
    std::vector<SheafLabel> images;
    const auto complexes = orbital_complexes(g, a);
    if (g.kind() == GradingCase::AI) {
        catalog = catalog_AI(g, a);
        for (const auto& c : complexes) images.push_back(map_sheaf_AI(c.orbit, c.psi, a, g));
    } else {
        catalog = catalog_II(g);
        for (const auto& c : complexes) images.push_back(map_sheaf_II(c.orbit, g));
    }
    const std::set<SheafLabel> image_set(images.begin(), images.end());
    const std::set<SheafLabel> catalog_set(catalog.begin(), catalog.end());
    BijectionReport r;
    r.source_count = complexes.size();
    r.catalog_count = catalog.size();
    r.counts_equal = r.source_count == r.catalog_count;
    r.injective = image_set.size() == images.size();
    r.surjective = image_set == catalog_set;
    return r;
}

/// Conjectural cuspidal character sheaves of an AI grading, built directly
/// from the regular nilpotent orbit (m does not divide N) or from the
/// stratum of (N/m)_1 ... (N/m)_m (m divides N).
inline std::vector<SheafLabel> cuspidal_AI(const GradingSpec& g) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("cuspidal_AI needs an AI grading");
    const int m = g.modulus();
    const int N = g.total();
    std::vector<SheafLabel> out;
    if (N == 0) return out;
    if (N % m != 0) {
        for (int b = 1; b <= m; ++b) {
            const FilledDiagram row = canonicalize({{N, b}}, m, Sign::Minus);
            if (dimension_vector(row) != g.dims()) continue;
            StratumLabelAI s{N, 0, row, d_check_stratum(N, row, m)};
            const int d = std::gcd(N, m);
            const SheafFlags flags = detail::flags_AI(s, g, stratum_dim_AI(s, g));
            for (const auto& psi : exact_order_characters(N, N))
                out.push_back({s, psi, MultiPartition{std::vector<Partition>(static_cast<std::size_t>(d))}, flags});
            break;
        }
        return out;
    }
    if (!detail::uniform_dims(g)) return out;
    for (int dprime = 1; dprime <= m; ++dprime) {
        if (m % dprime != 0 || std::gcd(N / m, m / dprime) != 1) continue;
        const int a = dprime * N / m;
        const FilledDiagram mu = empty_diagram(m, Sign::Minus);
        StratumLabelAI s{a, 1, mu, d_check_stratum(a, mu, m)};
        const SheafFlags flags = detail::flags_AI(s, g, stratum_dim_AI(s, g));
        for (const auto& psi : exact_order_characters(s.d_check, a))
            for (const auto& tau : multipartitions(dprime, 1)) out.push_back({s, psi, tau, flags});
    }
    return out;
}

} // namespace gcs
