#pragma once

// Truncated power series with exact integer coefficients, the product
// formulas counting nilpotent orbits and distinguished orbits, and the
// partition weights whose sums reproduce their coefficients.

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gcs/diagrams.hpp"
#include "gcs/errors.hpp"

namespace gcs {

using BigInt = boost::multiprecision::cpp_int;

class TruncSeries {
public:
    explicit TruncSeries(int n_max = 0) : coeffs_(static_cast<std::size_t>(std::max(n_max, 0)) + 1, 0) {}
    explicit TruncSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) coeffs_.push_back(0);
    }

    static TruncSeries one(int n_max) {
        TruncSeries s(n_max);
        s.coeffs_[0] = 1;
        return s;
    }

    int n_max() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& operator[](int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
    BigInt& operator[](int n) { return coeffs_.at(static_cast<std::size_t>(n)); }
    const std::vector<BigInt>& coefficients() const { return coeffs_; }

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// Product truncated at the smaller of the two degrees.
inline TruncSeries series_mul(const TruncSeries& f, const TruncSeries& g) {
    const int n = std::min(f.n_max(), g.n_max());
    TruncSeries out(n);
    for (int i = 0; i <= n; ++i) {
        if (f[i] == 0) continue;
        for (int j = 0; i + j <= n; ++j) out[i + j] += f[i] * g[j];
    }
    return out;
}

/// (1 - x^j)^(-e); e may be negative.
inline TruncSeries series_geom_pow(int j, int e, int n_max) {
    if (j < 1) throw PreconditionError("series_geom_pow: j must be positive");
    if (n_max < 0) throw PreconditionError("series_geom_pow: n_max must be nonnegative");
    TruncSeries out(n_max);
    // coefficient of y^t in (1-y)^(-e) is e(e+1)...(e+t-1)/t!
    BigInt c = 1;
    for (int t = 0; static_cast<long long>(t) * j <= n_max; ++t) {
        if (t > 0) c = c * (e + t - 1) / t;
        out[t * j] = c;
        if (c == 0) break;
    }
    return out;
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

enum class Family { A, C, D };

inline std::string to_string(Family f) {
    switch (f) {
    case Family::A: return "A";
    case Family::C: return "C";
    case Family::D: return "D";
    }
    return "?";
}

/// Generating function of nilpotent orbit counts: the coefficient of x^n is
/// the number of admissible diagrams of size 2n (A: modulus 2l+1; C, D:
/// modulus 2l).
inline TruncSeries gf_orbit_count(Family f, int l, int n_max) {
    if (l < 1) throw PreconditionError("gf_orbit_count: l must be >= 1");
    TruncSeries s = TruncSeries::one(n_max);
    for (int k = 1; k <= n_max; ++k) {
        switch (f) {
        case Family::A:
            s = series_mul(s, series_geom_pow(k, l + 1, n_max));
            break;
        case Family::C:
            // (1 + x^k) = (1 - x^{2k}) / (1 - x^k)
            s = series_mul(s, series_geom_pow(k, l + 1, n_max));
            s = series_mul(s, series_geom_pow(2 * k, -1, n_max));
            break;
        case Family::D:
            // 1 / (1 + x^k) = (1 - x^k) / (1 - x^{2k})
            s = series_mul(s, series_geom_pow(k, l, n_max));
            s = series_mul(s, series_geom_pow(2 * k, 1, n_max));
            break;
        }
    }
    return s;
}

/// Generating function of |distinguished AI diagrams attached to a| of size
/// N, in the variable x^{N/a}. Requires gcd(a, m) < m.
inline TruncSeries gf_distinguished_AI(int m, int a, int n_max) {
    if (m < 1 || a < 1) throw PreconditionError("gf_distinguished_AI: m and a must be positive");
    const int d = std::gcd(a, m);
    if (d == m) throw PreconditionError("gf_distinguished_AI: gcd(a, m) = m, the family is empty");
    TruncSeries s = TruncSeries::one(n_max);
    for (int k = 1; k <= n_max; ++k) {
        s = series_mul(s, series_geom_pow(k, m, n_max));
        s = series_mul(s, series_geom_pow((m / d) * k, -d, n_max));
    }
    return s;
}

/// Generating function of type II distinguished orbit counts.
inline TruncSeries gf_distinguished_II(Family f, int l, int n_max) {
    if (l < 1) throw PreconditionError("gf_distinguished_II: l must be >= 1");
    TruncSeries s = gf_orbit_count(f, l, n_max);
    const int period = f == Family::A ? 2 * l + 1 : 2 * l;
    for (int k = 1; k <= n_max; ++k) s = series_mul(s, series_geom_pow(period * k, -1, n_max));
    return s;
}

// ---------------------------------------------------------------------------
// Partition weights

struct WeightScheme {
    enum class Kind { OrbitA, OrbitC, OrbitD, DistinguishedA, DistinguishedC, DistinguishedD, DistinguishedAI };
    Kind kind = Kind::OrbitA;
    int l = 1;   // type II parameter
    int m = 1;   // AI modulus
    int a = 1;   // AI central character order
};

namespace detail {

// Coefficient of t^c in (1 - t^p)^q / (1 - t)^r.
inline BigInt ratio_coefficient(int p, int q, int r, int c) {
    BigInt sum = 0;
    for (int i = 0; i <= q && i * p <= c; ++i) {
        BigInt term = binomial(q, i) * binomial(c - i * p + r - 1, r - 1);
        if (i % 2) sum -= term;
        else sum += term;
    }
    return sum;
}

inline BigInt multiplicity_weight(int part, int mult, const WeightScheme& w) {
    using K = WeightScheme::Kind;
    const int l = w.l;
    const bool odd = part % 2 != 0;
    switch (w.kind) {
    case K::OrbitA: return binomial(mult + l, l);
    case K::OrbitC: return odd ? binomial(mult + l, l) : binomial(mult + l - 1, l - 1);
    case K::OrbitD: return odd ? binomial(mult + l - 1, l - 1) : binomial(mult + l, l);
    case K::DistinguishedA: return ratio_coefficient(2 * l + 1, 1, l + 1, mult);
    case K::DistinguishedC: return ratio_coefficient(2 * l, 1, odd ? l + 1 : l, mult);
    case K::DistinguishedD: return ratio_coefficient(2 * l, 1, odd ? l : l + 1, mult);
    case K::DistinguishedAI: {
        const int d = std::gcd(w.a, w.m);
        return ratio_coefficient(w.m / d, d, w.m, mult);
    }
    }
    return 0;
}

} // namespace detail

/// Product over distinct parts of the weight attached to their multiplicity.
inline BigInt weight_count(const Partition& mu, const WeightScheme& w) {
    BigInt out = 1;
    for (const auto& [part, mult] : mu.multiplicities()) out *= detail::multiplicity_weight(part, mult, w);
    return out;
}

inline BigInt weight_sum(int n, const WeightScheme& w) {
    BigInt s = 0;
    for (const auto& p : partitions(n)) s += weight_count(p, w);
    return s;
}

} // namespace gcs
