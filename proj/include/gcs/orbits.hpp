#pragma once

// Nilpotent orbits of the classical Z/m-graded Lie algebras of types AI, AII,
// CII and DII, described through filled Young diagrams: admissibility,
// component groups, distinguished subsets, the sign-convention duality, the
// peeling maps and the stratum labels built on top of them.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "gcs/diagrams.hpp"
#include "gcs/errors.hpp"

namespace gcs {

enum class GradingCase { AI, AII, CII, DII };

inline std::string to_string(GradingCase c) {
    switch (c) {
    case GradingCase::AI: return "AI";
    case GradingCase::AII: return "AII";
    case GradingCase::CII: return "CII";
    case GradingCase::DII: return "DII";
    }
    return "?";
}

inline GradingCase parse_grading_case(const std::string& s) {
    if (s == "AI") return GradingCase::AI;
    if (s == "AII") return GradingCase::AII;
    if (s == "CII") return GradingCase::CII;
    if (s == "DII") return GradingCase::DII;
    throw InvalidGrading("unknown grading case '" + s + "'");
}

inline bool is_type_two(GradingCase c) { return c != GradingCase::AI; }

/// Grading data: the case, the number of quiver vertices (m for AI/CII/DII,
/// the odd m_0 for AII) and the dimension vector of the vertex spaces M_i.
class GradingSpec {
public:
    static GradingSpec make(GradingCase kind, int modulus, DimensionVector dims) {
        GradingSpec g;
        g.kind_ = kind;
        g.modulus_ = modulus;
        g.dims_ = std::move(dims);
        g.validate();
        return g;
    }

    GradingCase kind() const { return kind_; }
    int modulus() const { return modulus_; }
    const DimensionVector& dims() const { return dims_; }
    int total() const { return dims_.total(); }

    /// (m_0 - 1)/2 for AII, m/2 for CII/DII, 0 for AI.
    int half() const {
        switch (kind_) {
        case GradingCase::AII: return (modulus_ - 1) / 2;
        case GradingCase::CII:
        case GradingCase::DII: return modulus_ / 2;
        default: return 0;
        }
    }

    /// Dimension of a Cartan subspace.
    int rank() const {
        int r = -1;
        for (int v : dims_.entries()) {
            const int c = kind_ == GradingCase::AI ? v : v / 2;
            r = r < 0 ? c : std::min(r, c);
        }
        return std::max(r, 0);
    }

    friend bool operator==(const GradingSpec&, const GradingSpec&) = default;

    /// Empty when (kind, modulus, dims) is a valid grading, else the reason.
    static std::string validation_error(GradingCase kind, int modulus, const DimensionVector& dims) {
        const std::string name = to_string(kind);
        if (modulus < 1) return name + ": modulus must be positive";
        if (dims.size() != modulus)
            return name + ": dimension vector needs " + std::to_string(modulus) + " entries, got " +
                   std::to_string(dims.size());
        if (!dims.nonnegative()) return name + ": negative dimension";
        auto d = [&](int label) { return dims.at_label(wrap_label(label, modulus)); };
        auto lbl = [](int i) { return std::to_string(i); };
        switch (kind) {
        case GradingCase::AI: break;
        case GradingCase::AII: {
            if (modulus % 2 == 0) return "AII: m_0 must be odd";
            const int l = (modulus - 1) / 2;
            for (int i = 1; i <= l; ++i)
                if (d(i) != d(modulus + 1 - i)) return "AII: need d_" + lbl(i) + " = d_" + lbl(modulus + 1 - i);
            if (d(l + 1) % 2 != 0) return "AII: d_" + lbl(l + 1) + " must be even";
            break;
        }
        case GradingCase::CII: {
            if (modulus % 2 != 0) return "CII: m must be even";
            const int l = modulus / 2;
            for (int i = 1; i <= l - 1; ++i)
                if (d(i) != d(modulus - i)) return "CII: need d_" + lbl(i) + " = d_" + lbl(modulus - i);
            if (d(l) % 2 != 0 || d(modulus) % 2 != 0) return "CII: d_" + lbl(l) + " and d_" + lbl(modulus) + " must be even";
            break;
        }
        case GradingCase::DII: {
            if (modulus % 2 != 0) return "DII: m must be even";
            for (int i = 1; i <= modulus; ++i)
                if (d(i) != d(modulus + 1 - i)) return "DII: need d_" + lbl(i) + " = d_" + lbl(modulus + 1 - i);
            break;
        }
        }
        if (is_type_two(kind) && dims.total() % 2 != 0) return name + ": |d| must be even";
        return {};
    }

    static std::optional<GradingSpec> try_make(GradingCase kind, int modulus, DimensionVector dims) {
        if (!validation_error(kind, modulus, dims).empty()) return std::nullopt;
        GradingSpec g;
        g.kind_ = kind;
        g.modulus_ = modulus;
        g.dims_ = std::move(dims);
        return g;
    }

private:
    void validate() const {
        const std::string why = validation_error(kind_, modulus_, dims_);
        if (!why.empty()) throw InvalidGrading(why);
    }

    GradingCase kind_ = GradingCase::AI;
    int modulus_ = 1;
    DimensionVector dims_ = DimensionVector::zeros(1);
};

// ---------------------------------------------------------------------------
// Duality

/// Flips the sign convention while keeping the label set of every row: a
/// (k,-)-row on b, ..., b+p-1 becomes the (k,+)-row starting at b+p-1 and
/// conversely. On matrices this is transposition.
inline FilledDiagram duality(const FilledDiagram& lambda) {
    const int k = lambda.modulus();
    std::vector<FilledRow> rows;
    rows.reserve(lambda.rows().size());
    for (const auto& r : lambda.rows()) {
        const long long shift = lambda.sign() == Sign::Minus ? r.length - 1 : -(r.length - 1);
        rows.push_back({r.length, wrap_label(r.start + shift, k)});
    }
    return canonicalize(std::move(rows), k, opposite(lambda.sign()));
}

inline FilledDiagram as_sign(const FilledDiagram& lambda, Sign s) {
    return lambda.sign() == s ? lambda : duality(lambda);
}

// ---------------------------------------------------------------------------
// Orbit parametrization

namespace detail {

// Rows of length L starting at a and b are paired when a + b == L + offset.
inline int pairing_offset(GradingCase c) { return c == GradingCase::CII ? -1 : 0; }

} // namespace detail

/// Whether lambda parametrizes a nilpotent orbit of the grading. Conditions
/// are stated for (+)-diagrams; (-)-diagrams are checked through duality.
inline bool admissible(const FilledDiagram& lambda, const GradingSpec& g) {
    if (lambda.modulus() != g.modulus())
        throw ModulusMismatch("diagram modulus " + std::to_string(lambda.modulus()) + " vs grading modulus " +
                              std::to_string(g.modulus()));
    if (g.kind() == GradingCase::AI) return true;
    const FilledDiagram plus = as_sign(lambda, Sign::Plus);
    const int k = g.modulus();
    const int offset = detail::pairing_offset(g.kind());
    for (int len : plus.distinct_lengths()) {
        const auto p = plus.multiplicities(len);
        for (int a = 1; a <= k; ++a) {
            const int b = wrap_label(len + offset - a, k);
            const int pa = p[static_cast<std::size_t>(a - 1)];
            if (pa != p[static_cast<std::size_t>(b - 1)]) return false;
            if (a == b && pa % 2 != 0) return false;
        }
    }
    return true;
}

/// The orbits of the grading, i.e. the admissible diagrams of dimension
/// vector g.dims() in the given sign convention.
inline std::vector<FilledDiagram> enumerate_orbits(const GradingSpec& g, Sign sign) {
    auto all = enumerate_diagrams(g.modulus(), sign, g.dims());
    if (g.kind() == GradingCase::AI) return all;
    std::vector<FilledDiagram> out;
    for (auto& lam : all)
        if (admissible(lam, g)) out.push_back(std::move(lam));
    return out;
}

/// Orbits of every grading of the given case and modulus with |d| = N.
inline std::vector<FilledDiagram> enumerate_orbits_by_size(GradingCase kind, int modulus, int N, Sign sign) {
    std::vector<FilledDiagram> out;
    for (auto& lam : enumerate_by_size(modulus, sign, N)) {
        const auto g = GradingSpec::try_make(kind, modulus, dimension_vector(lam));
        if (g && admissible(lam, *g)) out.push_back(std::move(lam));
    }
    return out;
}

/// Valid dimension vectors with |d| = N, lexicographically ascending.
inline std::vector<GradingSpec> gradings_of_size(GradingCase kind, int modulus, int N) {
    if (modulus < 1) throw InvalidGrading(to_string(kind) + ": modulus must be positive");
    std::vector<GradingSpec> out;
    std::vector<int> d(static_cast<std::size_t>(modulus), 0);
    auto rec = [&](auto&& self, std::size_t i, int left) -> void {
        if (i + 1 == d.size()) {
            d[i] = left;
            if (auto g = GradingSpec::try_make(kind, modulus, DimensionVector(d))) out.push_back(std::move(*g));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            d[i] = v;
            self(self, i + 1, left - v);
        }
    };
    rec(rec, 0, N);
    return out;
}

/// |A_K(x)|: gcd of the parts in type AI (0 for the empty diagram), 1 in
/// type II.
inline int component_group_order(const FilledDiagram& lambda, const GradingSpec& g) {
    if (g.kind() == GradingCase::AI) return lambda.part_gcd();
    return 1;
}

inline bool divides(long long a, long long b) { return a != 0 ? b % a == 0 : b == 0; }

/// Membership in the AI distinguished subset attached to a: a | d_lambda and,
/// for every part length and every residue class mod gcd(a, m), some start
/// label of the class carries no row of that length.
inline bool is_distinguished_AI(const FilledDiagram& lambda, int a, int m) {
    if (a < 1) throw PreconditionError("a must be positive");
    if (lambda.modulus() != m) throw ModulusMismatch("diagram modulus differs from m");
    if (lambda.empty()) return true;
    if (!divides(a, lambda.part_gcd())) return false;
    const int d = std::gcd(a, m);
    for (int len : lambda.distinct_lengths()) {
        const auto p = lambda.multiplicities(len);
        for (int i = 1; i <= d; ++i) {
            bool has_zero = false;
            for (int j = 0; j < m / d; ++j)
                if (p[static_cast<std::size_t>(i + j * d - 1)] == 0) has_zero = true;
            if (!has_zero) return false;
        }
    }
    return true;
}

/// Type II distinguished: for every part length some label carries at most
/// one row of that length.
inline bool is_distinguished_II(const FilledDiagram& lambda, const GradingSpec& g) {
    if (!is_type_two(g.kind())) throw PreconditionError("type II predicate on an AI grading");
    if (lambda.modulus() != g.modulus()) throw ModulusMismatch("diagram modulus differs from grading");
    for (int len : lambda.distinct_lengths()) {
        const auto p = lambda.multiplicities(len);
        if (*std::min_element(p.begin(), p.end()) > 1) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// Peeling

struct PeelAI {
    MultiPartition tau;       // gcd(a, m) components, total size = braid rank
    FilledDiagram residual;   // mu_lambda
    int braid_rank = 0;
};

/// Removes from lambda, for each part length and residue class i mod d, the
/// largest number of full sets of rows starting at i, i+d, ..., i+m-d.
/// Requires a | d_lambda.
inline PeelAI peel_AI(const FilledDiagram& lambda, int a, int m) {
    if (lambda.modulus() != m) throw ModulusMismatch("diagram modulus differs from m");
    if (a < 1) throw PreconditionError("a must be positive");
    if (!divides(a, lambda.part_gcd()))
        throw PreconditionError("peel_AI: a = " + std::to_string(a) + " does not divide d_lambda = " +
                                std::to_string(lambda.part_gcd()));
    const int d = std::gcd(a, m);
    PeelAI out;
    out.tau.components.assign(static_cast<std::size_t>(d), Partition{});
    std::map<int, std::vector<int>> residual;
    for (int len : lambda.distinct_lengths()) {
        auto q = lambda.multiplicities(len);
        for (int i = 1; i <= d; ++i) {
            int low = q[static_cast<std::size_t>(i - 1)];
            for (int j = 0; j < m / d; ++j) low = std::min(low, q[static_cast<std::size_t>(i + j * d - 1)]);
            for (int j = 0; j < m / d; ++j) q[static_cast<std::size_t>(i + j * d - 1)] -= low;
            auto& parts = out.tau.components[static_cast<std::size_t>(i - 1)].parts;
            for (int c = 0; c < low; ++c) parts.push_back(len / a);
        }
        residual[len] = std::move(q);
    }
    out.residual = from_multiplicities(residual, m, lambda.sign());
    out.braid_rank = out.tau.size();
    return out;
}

/// Inverse of peel_AI: inserts, for every part t of the i-th component of
/// tau, one row of length a*t at each label i, i+d, ..., i+m-d.
inline FilledDiagram reassemble_AI(const MultiPartition& tau, const FilledDiagram& residual, int a, int m) {
    const int d = std::gcd(a, m);
    if (tau.arity() != d) throw PreconditionError("tau must have gcd(a, m) components");
    std::vector<FilledRow> rows = residual.rows();
    for (int i = 1; i <= d; ++i)
        for (int part : tau.components[static_cast<std::size_t>(i - 1)].parts)
            for (int j = 0; j < m / d; ++j) rows.push_back({a * part, i + j * d});
    return canonicalize(std::move(rows), m, residual.sign());
}

struct PeelII {
    Partition nu;
    FilledDiagram residual;
    int k = 0;   // |nu|
};

/// Removes 2*l_i rows of each length lambda_i from every label, where l_i is
/// the least value of floor(p_i^a / 2).
inline PeelII peel_II(const FilledDiagram& lambda, const GradingSpec& g) {
    if (!is_type_two(g.kind())) throw PreconditionError("peel_II on an AI grading");
    if (!admissible(lambda, g)) throw PreconditionError("peel_II: diagram " + to_string(lambda) + " is not admissible");
    PeelII out;
    std::map<int, std::vector<int>> residual;
    for (int len : lambda.distinct_lengths()) {
        auto q = lambda.multiplicities(len);
        int low = q[0] / 2;
        for (int v : q) low = std::min(low, v / 2);
        for (auto& v : q) v -= 2 * low;
        for (int c = 0; c < low; ++c) out.nu.parts.push_back(len);
        residual[len] = std::move(q);
    }
    out.residual = from_multiplicities(residual, lambda.modulus(), lambda.sign());
    out.k = out.nu.size();
    return out;
}

/// Inverse of peel_II: each part t of nu adds two rows of length t at every
/// label.
inline FilledDiagram reassemble_II(const Partition& nu, const FilledDiagram& residual) {
    std::vector<FilledRow> rows = residual.rows();
    for (int part : nu.parts)
        for (int a = 1; a <= residual.modulus(); ++a) {
            rows.push_back({part, a});
            rows.push_back({part, a});
        }
    return canonicalize(std::move(rows), residual.modulus(), residual.sign());
}

// ---------------------------------------------------------------------------
// Component groups of dual strata

/// Order of the cyclic factor of the equivariant fundamental group of the
/// stratum labelled (a, mu).
inline int d_check_stratum(int a, const FilledDiagram& mu, int m) {
    const int d = std::gcd(a, m);
    const int base = m * a / d;
    if (mu.empty()) return base;
    return std::gcd(base, mu.part_gcd());
}

/// Order of the component group on the dual stratum of O_lambda. Needs some
/// part length present at every label.
inline int d_check_dual(const FilledDiagram& lambda, int m) {
    if (lambda.modulus() != m) throw ModulusMismatch("diagram modulus differs from m");
    std::map<int, std::vector<int>> residual;
    int g = 0;
    bool any = false;
    for (int len : lambda.distinct_lengths()) {
        auto q = lambda.multiplicities(len);
        const int low = *std::min_element(q.begin(), q.end());
        if (low > 0) {
            any = true;
            g = std::gcd(g, m * len);
        }
        for (auto& v : q) v -= low;
        residual[len] = std::move(q);
    }
    if (!any) throw NotApplicable("d_check_dual: no part length occurs at every label of " + to_string(lambda));
    const FilledDiagram mu = from_multiplicities(residual, m, lambda.sign());
    if (mu.empty()) return m * lambda.part_gcd();
    // duality keeps the parts, so d of the dual residual equals d of mu
    return std::gcd(g, mu.part_gcd());
}

// ---------------------------------------------------------------------------
// Stratum labels

/// Stratum O_{a,mu} of type AI; mu is stored in the (-) convention.
struct StratumLabelAI {
    int a = 1;
    int l = 0;
    FilledDiagram mu;
    int d_check = 1;

    int braid_rank() const { return l; }

    friend bool operator==(const StratumLabelAI&, const StratumLabelAI&) = default;
    friend auto operator<=>(const StratumLabelAI&, const StratumLabelAI&) = default;
};

/// l = d (N - |mu|) / (m a); throws if it is not an integer.
inline int braid_rank_AI(int a, const FilledDiagram& mu, const GradingSpec& g) {
    const int m = g.modulus();
    const long long num = static_cast<long long>(std::gcd(a, m)) * (g.total() - mu.size());
    const long long den = static_cast<long long>(m) * a;
    if (num < 0 || num % den != 0)
        throw InconsistentStratum("braid rank " + std::to_string(num) + "/" + std::to_string(den) + " is not integral");
    return static_cast<int>(num / den);
}

/// The support diagram (a/d)^l_1 ... (a/d)^l_m + dual(mu) of O_{a,mu}, in
/// the (-) convention.
inline FilledDiagram stratum_support_AI(const StratumLabelAI& s, int m) {
    const int d = std::gcd(s.a, m);
    // dual(mu) has the same row label sets as mu, so on the (-) side the
    // support simply contains mu's rows.
    std::vector<FilledRow> rows = as_sign(s.mu, Sign::Minus).rows();
    for (int i = 1; i <= m; ++i)
        for (int c = 0; c < s.l; ++c) rows.push_back({s.a / d, i});
    return canonicalize(std::move(rows), m, Sign::Minus);
}

/// Strata of type AI carrying central characters of order a.
inline std::vector<StratumLabelAI> enumerate_strata_AI(const GradingSpec& g, int a) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("enumerate_strata_AI needs an AI grading");
    if (a < 1) throw PreconditionError("a must be positive");
    const int m = g.modulus();
    const int N = g.total();
    std::vector<StratumLabelAI> out;
    if (N == 0) {
        // Trivial group: only the trivial central character exists.
        if (a == 1) out.push_back({1, 0, empty_diagram(m, Sign::Minus), d_check_stratum(1, empty_diagram(m, Sign::Minus), m)});
        return out;
    }
    if (N % a != 0) return out;
    const int d = std::gcd(a, m);
    if (d == m) {
        if (g.dims() == DimensionVector::uniform(m, N / m)) {
            const auto mu = empty_diagram(m, Sign::Minus);
            out.push_back({a, N / a, mu, d_check_stratum(a, mu, m)});
        }
        return out;
    }
    const int step = a / d;
    for (int l = 0; static_cast<long long>(l) * m * a <= static_cast<long long>(N) * d; ++l) {
        const DimensionVector sub = g.dims().minus_uniform(step * l);
        if (!sub.nonnegative()) break;
        for (auto& mu : enumerate_diagrams(m, Sign::Minus, sub))
            if (is_distinguished_AI(mu, a, m)) out.push_back({a, l, mu, d_check_stratum(a, mu, m)});
    }
    return out;
}

/// Stratum O_{k,mu} of type II; mu is stored in the (-) convention.
struct StratumLabelII {
    int k = 0;
    FilledDiagram mu;

    int braid_rank() const { return k; }

    friend bool operator==(const StratumLabelII&, const StratumLabelII&) = default;
    friend auto operator<=>(const StratumLabelII&, const StratumLabelII&) = default;
};

/// mu together with 2k rows of length one at every label.
inline FilledDiagram padded_support_II(const StratumLabelII& s) {
    std::vector<FilledRow> rows = s.mu.rows();
    for (int i = 1; i <= s.mu.modulus(); ++i)
        for (int c = 0; c < 2 * s.k; ++c) rows.push_back({1, i});
    return canonicalize(std::move(rows), s.mu.modulus(), s.mu.sign());
}

inline std::vector<StratumLabelII> enumerate_strata_II(const GradingSpec& g) {
    if (!is_type_two(g.kind())) throw PreconditionError("enumerate_strata_II needs a type II grading");
    std::vector<StratumLabelII> out;
    const int kmax = g.dims().min_entry() / 2;
    for (int k = 0; k <= kmax; ++k) {
        const GradingSpec sub = GradingSpec::make(g.kind(), g.modulus(), g.dims().minus_uniform(2 * k));
        for (auto& mu : enumerate_orbits(sub, Sign::Minus)) {
            if (!is_distinguished_II(mu, sub)) continue;
            StratumLabelII s{k, std::move(mu)};
            if (!admissible(padded_support_II(s), g))
                throw InconsistentStratum("padding of " + to_string(s.mu) + " is not admissible");
            out.push_back(std::move(s));
        }
    }
    return out;
}

/// (r, mu_0) with r = min floor(d_i/2) and mu_0 = prod 1^{d_i - 2r}_i.
inline StratumLabelII full_support_stratum_II(const GradingSpec& g) {
    if (!is_type_two(g.kind())) throw PreconditionError("full_support_stratum_II needs a type II grading");
    const int r = g.dims().min_entry() / 2;
    std::vector<FilledRow> rows;
    for (int i = 1; i <= g.modulus(); ++i)
        for (int c = 0; c < g.dims().at_label(i) - 2 * r; ++c) rows.push_back({1, i});
    return {r, canonicalize(std::move(rows), g.modulus(), Sign::Minus)};
}

} // namespace gcs
