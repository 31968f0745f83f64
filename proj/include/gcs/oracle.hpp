#pragma once

// Exact linear-algebra realization of type AI nilpotent orbits as
// representations of the cyclic quiver with vertices M_1, ..., M_m. A
// (+)-diagram gives x in g_1 = (+) Hom(M_i, M_{i-1}); a (-)-diagram gives
// x in g_{-1} = (+) Hom(M_i, M_{i+1}).

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "gcs/diagrams.hpp"
#include "gcs/errors.hpp"
#include "gcs/orbits.hpp"
#include "gcs/rational_matrix.hpp"

namespace gcs {

class GradedMatrix {
public:
    GradedMatrix(GradingSpec grading, int degree, RationalMatrix full)
        : grading_(std::move(grading)), degree_(degree), full_(std::move(full)) {
        int off = 0;
        for (int v : grading_.dims().entries()) {
            offsets_.push_back(off);
            off += v;
        }
        offsets_.push_back(off);
    }

    const GradingSpec& grading() const { return grading_; }
    int degree() const { return degree_; }
    const RationalMatrix& full() const { return full_; }
    int dim() const { return full_.rows(); }

    /// First basis index of vertex `label`.
    int offset(int label) const { return offsets_[static_cast<std::size_t>(label - 1)]; }
    int vertex_dim(int label) const { return grading_.dims().at_label(label); }

    /// The component M_source -> M_target as a d_target x d_source matrix.
    RationalMatrix block(int target, int source) const {
        RationalMatrix out(vertex_dim(target), vertex_dim(source));
        for (int r = 0; r < out.rows(); ++r)
            for (int c = 0; c < out.cols(); ++c) out(r, c) = full_(offset(target) + r, offset(source) + c);
        return out;
    }

    /// The component leaving vertex i: M_i -> M_{i-degree}.
    RationalMatrix component(int i) const {
        return block(wrap_label(i - degree_, grading_.modulus()), i);
    }

private:
    GradingSpec grading_;
    int degree_;
    RationalMatrix full_;
    std::vector<int> offsets_;
};

/// One basis vector per box; x sends each box to its right neighbour.
inline GradedMatrix build_representative(const FilledDiagram& lambda, const GradingSpec& g) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("build_representative needs an AI grading");
    if (lambda.modulus() != g.modulus()) throw ModulusMismatch("diagram modulus differs from grading");
    if (dimension_vector(lambda) != g.dims())
        throw PreconditionError("diagram " + to_string(lambda) + " has dimension vector " +
                                to_string(dimension_vector(lambda)) + ", grading has " + to_string(g.dims()));
    const int n = g.total();
    std::vector<int> offsets;
    int off = 0;
    for (int v : g.dims().entries()) {
        offsets.push_back(off);
        off += v;
    }
    std::vector<int> used(static_cast<std::size_t>(g.modulus()), 0);
    RationalMatrix x(n, n);
    for (const auto& row : lambda.rows()) {
        int prev = -1;
        for (int label : row_labels(row, g.modulus(), lambda.sign())) {
            const auto slot = static_cast<std::size_t>(label - 1);
            const int idx = offsets[slot] + used[slot]++;
            if (prev >= 0) x(idx, prev) = 1;
            prev = idx;
        }
    }
    return GradedMatrix(g, lambda.sign() == Sign::Plus ? 1 : -1, std::move(x));
}

struct Centralizer {
    int dim = 0;
    std::vector<RationalMatrix> basis;
};

namespace detail {

// Kernel of z -> xz - zx on the span of the given (target, source) blocks.
inline Centralizer commutant(const GradedMatrix& x, const std::vector<std::pair<int, int>>& blocks) {
    const int n = x.dim();
    const auto& xm = x.full();
    std::vector<std::pair<int, int>> params;   // (row, col) of elementary matrices
    for (const auto& [target, source] : blocks)
        for (int r = 0; r < x.vertex_dim(target); ++r)
            for (int c = 0; c < x.vertex_dim(source); ++c) params.emplace_back(x.offset(target) + r, x.offset(source) + c);
    Centralizer out;
    if (params.empty()) return out;

    RationalMatrix eqs(n * n, static_cast<int>(params.size()));
    for (std::size_t p = 0; p < params.size(); ++p) {
        const auto [r, c] = params[p];
        const int col = static_cast<int>(p);
        // (x E_rc)(i, c) = x(i, r);  (E_rc x)(r, j) = x(c, j)
        for (int i = 0; i < n; ++i) eqs(i * n + c, col) += xm(i, r);
        for (int j = 0; j < n; ++j) eqs(r * n + j, col) -= xm(c, j);
    }
    for (const auto& v : nullspace(std::move(eqs))) {
        RationalMatrix z(n, n);
        for (std::size_t p = 0; p < params.size(); ++p) z(params[p].first, params[p].second) = v[p];
        out.basis.push_back(std::move(z));
    }
    out.dim = static_cast<int>(out.basis.size());
    return out;
}

inline std::vector<std::pair<int, int>> diagonal_blocks(int m) {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= m; ++i) out.emplace_back(i, i);
    return out;
}

} // namespace detail

/// Dimension of the centralizer of x in the full block-diagonal algebra
/// (+) gl(M_i), without the trace condition.
inline int centralizer_dim_GL(const GradedMatrix& x) {
    return detail::commutant(x, detail::diagonal_blocks(x.grading().modulus())).dim;
}

/// dim Z_K(x) for K = S(prod GL(M_i)): the identity always commutes and has
/// nonzero trace, so the trace-zero slice loses one dimension. 0 when N = 0.
inline int centralizer_dim_K(const GradedMatrix& x) {
    if (x.dim() == 0) return 0;
    return centralizer_dim_GL(x) - 1;
}

/// Centralizer of x in the graded piece of opposite degree.
inline Centralizer centralizer_g1(const GradedMatrix& x) {
    const int m = x.grading().modulus();
    std::vector<std::pair<int, int>> blocks;
    for (int i = 1; i <= m; ++i) blocks.emplace_back(wrap_label(i + x.degree(), m), i);
    return detail::commutant(x, blocks);
}

inline int dim_K(const GradingSpec& g) {
    if (g.total() == 0) return 0;
    int s = 0;
    for (int v : g.dims().entries()) s += v * v;
    return s - 1;
}

/// dim g_1 = sum d_i d_{i-1}.
inline int dim_g1(const GradingSpec& g) {
    const int m = g.modulus();
    int s = 0;
    for (int i = 1; i <= m; ++i) s += g.dims().at_label(i) * g.dims().at_label(wrap_label(i - 1, m));
    return s;
}

inline int orbit_dim(const FilledDiagram& lambda, const GradingSpec& g) {
    if (g.total() == 0) return 0;
    return dim_K(g) - centralizer_dim_K(build_representative(lambda, g));
}

/// Dimension of the dual stratum of O_{a,mu}:
///   sum d_i^2 - c_mu - l k + l,  k = a / gcd(a, m),
/// where c_mu is the centralizer dimension of x_mu in prod GL on the
/// sub-grading d - k l 1.
inline int stratum_dim_AI(const StratumLabelAI& s, const GradingSpec& g) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("stratum_dim_AI needs an AI grading");
    const int m = g.modulus();
    const int k = s.a / std::gcd(s.a, m);
    const DimensionVector sub = g.dims().minus_uniform(k * s.l);
    if (!sub.nonnegative()) throw InconsistentStratum("stratum exceeds the dimension vector");
    int c_mu = 0;
    if (!s.mu.empty()) {
        const GradingSpec sub_grading = GradingSpec::make(GradingCase::AI, m, sub);
        c_mu = centralizer_dim_GL(build_representative(as_sign(s.mu, Sign::Plus), sub_grading));
    }
    int sq = 0;
    for (int v : g.dims().entries()) sq += v * v;
    return sq - c_mu - s.l * k + s.l;
}

struct OracleOptions {
    int trials = 20;
    std::uint64_t seed = 0;
};

/// Monte Carlo test that the opposite-degree centralizer of x_lambda
/// consists of nilpotent elements. A "false" verdict is certain; a "true"
/// verdict can be wrong only if every sample hit a proper subvariety.
inline bool is_distinguished_oracle(const FilledDiagram& lambda, const GradingSpec& g, OracleOptions opt = {}) {
    if (g.kind() != GradingCase::AI) throw PreconditionError("the oracle handles AI gradings only");
    if (g.total() == 0) return true;
    const GradedMatrix x = build_representative(as_sign(lambda, Sign::Plus), g);
    const Centralizer z = centralizer_g1(x);
    if (z.basis.empty()) return true;
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<int> coeff(-9, 9);
    const int n = g.total();
    for (int t = 0; t < opt.trials; ++t) {
        RationalMatrix y(n, n);
        for (const auto& b : z.basis) y = y + b.scaled(coeff(rng));
        if (!power(y, n).is_zero()) return false;
    }
    return true;
}

} // namespace gcs
