// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcs/cli.hpp"
#include "gcs/oracle.hpp"
#include "gcs/orbits.hpp"
#include "gcs/series.hpp"
#include "gcs/sheaves.hpp"

using namespace gcs;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;

    void fail(const std::string& why) {
        if (ok) detail = why;
        ok = false;
    }
};

BigInt count_orbits(GradingCase kind, int modulus, int n, bool distinguished_only) {
    BigInt c = 0;
    for (const auto& lam : enumerate_orbits_by_size(kind, modulus, 2 * n, Sign::Plus)) {
        if (distinguished_only &&
            !is_distinguished_II(lam, GradingSpec::make(kind, modulus, dimension_vector(lam))))
            continue;
        ++c;
    }
    return c;
}

struct FamilyCase {
    Family family;
    GradingCase kind;
    WeightScheme::Kind orbit_weight;
    WeightScheme::Kind dist_weight;
};

const FamilyCase kFamilies[] = {
    {Family::A, GradingCase::AII, WeightScheme::Kind::OrbitA, WeightScheme::Kind::DistinguishedA},
    {Family::C, GradingCase::CII, WeightScheme::Kind::OrbitC, WeightScheme::Kind::DistinguishedC},
    {Family::D, GradingCase::DII, WeightScheme::Kind::OrbitD, WeightScheme::Kind::DistinguishedD},
};

int modulus_of(Family f, int l) { return f == Family::A ? 2 * l + 1 : 2 * l; }

Outcome orbit_counts() {
    Outcome o;
    std::size_t checked = 0;
    for (int l = 1; l <= 2; ++l)
        for (const auto& fc : kFamilies) {
            const auto gf = gf_orbit_count(fc.family, l, 6);
            for (int n = 0; n <= 6; ++n) {
                const BigInt en = count_orbits(fc.kind, modulus_of(fc.family, l), n, false);
                const BigInt ws = weight_sum(n, WeightScheme{fc.orbit_weight, l, 1, 1});
                ++checked;
                if (en != gf[n] || ws != gf[n])
                    o.fail(to_string(fc.family) + " l=" + std::to_string(l) + " n=" + std::to_string(n) + ": enum " +
                           en.str() + ", gf " + gf[n].str() + ", weights " + ws.str());
            }
        }
    const BigInt anchor = count_orbits(GradingCase::AII, 3, 3, false);
    if (anchor != 10) o.fail("A l=1 n=3 gives " + anchor.str() + ", expected 10");
    if (o.ok) o.detail = std::to_string(checked) + " coefficients, A l=1 n=3 -> " + anchor.str();
    return o;
}

Outcome distinguished_counts() {
    Outcome o;
    std::size_t checked = 0;
    const std::pair<int, int> ai_cases[] = {{2, 1}, {3, 1}, {4, 2}, {6, 2}};
    std::vector<std::string> anchor;
    for (const auto& [m, a] : ai_cases) {
        const auto gf = gf_distinguished_AI(m, a, 6);
        for (int n = 0; n <= 6; ++n) {
            BigInt en = 0;
            for (const auto& lam : enumerate_by_size(m, Sign::Plus, n * a, a)) en += is_distinguished_AI(lam, a, m);
            const BigInt ws = weight_sum(n, WeightScheme{WeightScheme::Kind::DistinguishedAI, 1, m, a});
            ++checked;
            if (en != gf[n] || ws != gf[n])
                o.fail("AI m=" + std::to_string(m) + " a=" + std::to_string(a) + " N/a=" + std::to_string(n) +
                       ": enum " + en.str() + ", gf " + gf[n].str());
            if (m == 2 && a == 1 && n <= 2) anchor.push_back(en.str());
        }
    }
    if (anchor != std::vector<std::string>{"1", "2", "4"}) o.fail("m=2 a=1 series does not begin 1, 2, 4");
    for (int l = 1; l <= 2; ++l)
        for (const auto& fc : kFamilies) {
            const auto gf = gf_distinguished_II(fc.family, l, 6);
            for (int n = 0; n <= 6; ++n) {
                const BigInt en = count_orbits(fc.kind, modulus_of(fc.family, l), n, true);
                const BigInt ws = weight_sum(n, WeightScheme{fc.dist_weight, l, 1, 1});
                ++checked;
                if (en != gf[n] || ws != gf[n])
                    o.fail("distinguished " + to_string(fc.family) + " l=" + std::to_string(l) + " n=" +
                           std::to_string(n) + ": enum " + en.str() + ", gf " + gf[n].str());
            }
        }
    if (o.ok) o.detail = std::to_string(checked) + " coefficients, m=2 a=1 begins 1, 2, 4";
    return o;
}

Outcome bijection_AI() {
    Outcome o;
    std::size_t runs = 0;
    for (int m = 1; m <= 3; ++m)
        for (int N = 0; N <= 6; ++N)
            for (const auto& g : gradings_of_size(GradingCase::AI, m, N))
                for (int a = 1; a <= std::max(N, 1); ++a) {
                    if (N > 0 && N % a != 0) continue;
                    const auto r = verify_bijection(g, a);
                    ++runs;
                    if (!r.pass())
                        o.fail("m=" + std::to_string(m) + " d=" + to_string(g.dims()) + " a=" + std::to_string(a));
                }
    const auto g = GradingSpec::make(GradingCase::AI, 2, DimensionVector({1, 1}));
    const auto r1 = verify_bijection(g, 1);
    const auto r2 = verify_bijection(g, 2);
    if (r1.source_count != 3 || r1.catalog_count != 3 || r2.source_count != 2 || r2.catalog_count != 2)
        o.fail("worked example counts differ from (3,3) and (2,2)");
    if (o.ok) o.detail = std::to_string(runs) + " (grading, a) pairs, anchor (3,3) and (2,2)";
    return o;
}

Outcome bijection_II() {
    Outcome o;
    std::size_t runs = 0;
    const std::pair<GradingCase, int> cases[] = {
        {GradingCase::AII, 3}, {GradingCase::CII, 2}, {GradingCase::CII, 4}, {GradingCase::DII, 2}, {GradingCase::DII, 4}};
    for (const auto& [kind, m] : cases)
        for (int N = 0; N <= 6; ++N)
            for (const auto& g : gradings_of_size(kind, m, N)) {
                ++runs;
                if (!verify_bijection(g).pass()) o.fail(to_string(kind) + " d=" + to_string(g.dims()));
            }
    if (o.ok) o.detail = std::to_string(runs) + " gradings";
    return o;
}

Outcome oracle_agreement() {
    Outcome o;
    std::size_t orbits = 0;
    for (int m = 1; m <= 3; ++m)
        for (int N = 0; N <= 5; ++N)
            for (const auto& g : gradings_of_size(GradingCase::AI, m, N))
                for (const auto& lam : enumerate_orbits(g, Sign::Minus)) {
                    ++orbits;
                    const bool pred = is_distinguished_AI(lam, 1, m);
                    const bool oracle = is_distinguished_oracle(lam, g, OracleOptions{20, 0});
                    if (pred != oracle)
                        o.fail("m=" + std::to_string(m) + " " + to_string(lam) + ": predicate " + std::to_string(pred) +
                               ", oracle " + std::to_string(oracle));
                }
    if (o.ok) o.detail = std::to_string(orbits) + " orbits, seed 0, 20 trials";
    return o;
}

Outcome dimension_identities() {
    Outcome o;
    std::size_t orbits = 0, dense = 0;
    for (int m = 1; m <= 3; ++m)
        for (int N = 0; N <= 6; ++N)
            for (const auto& g : gradings_of_size(GradingCase::AI, m, N)) {
                for (const auto& lam : enumerate_orbits(g, Sign::Minus)) {
                    ++orbits;
                    const int z = N == 0 ? 0 : centralizer_dim_K(build_representative(lam, g));
                    if (orbit_dim(lam, g) + z != dim_K(g)) o.fail("orbit_dim identity fails at " + to_string(lam));
                }
                if (N == 0 || N % m != 0 || g.dims() != DimensionVector::uniform(m, N / m)) continue;
                int best_l = -1, sd = 0;
                for (const auto& s : enumerate_strata_AI(g, 1))
                    if (s.mu.empty() && s.l > best_l) {
                        best_l = s.l;
                        sd = stratum_dim_AI(s, g);
                    }
                ++dense;
                if (best_l < 0 || sd != dim_g1(g))
                    o.fail("dense stratum of d=" + to_string(g.dims()) + " has dim " + std::to_string(sd) + ", g_1 has " +
                           std::to_string(dim_g1(g)));
            }
    if (o.ok) o.detail = std::to_string(orbits) + " orbits, " + std::to_string(dense) + " dense strata";
    return o;
}

Outcome cuspidal_anchor() {
    Outcome o;
    const auto g = GradingSpec::make(GradingCase::AI, 2, DimensionVector({2, 1}));
    const auto labels = cuspidal_AI(g);
    if (labels.size() != static_cast<std::size_t>(euler_phi(3)))
        o.fail("expected 2 labels, got " + std::to_string(labels.size()));
    for (const auto& s : labels) {
        if (s.ai().mu.row_count() != 1 || s.ai().mu.size() != 3) o.fail("label not on a single-row orbit");
        if (s.psi.order() != 3) o.fail("character not of order 3");
        if (!s.flags.cuspidal_conjectural) o.fail("label not flagged conjectural");
    }
    if (o.ok) o.detail = "2 labels on " + to_string(labels.front().ai().mu);
    return o;
}

Outcome determinism() {
    Outcome o;
    const std::vector<std::vector<std::string>> commands = {
        {"orbits", "--case", "AI", "--m", "3", "--N", "4", "--dump-matrices", "--format", "json"},
        {"orbits", "--case", "DII", "--m", "4", "--N", "6"},
        {"count", "--family", "C", "--l", "2", "--n", "5"},
        {"count", "--family", "dist-AI", "--m", "4", "--a", "2", "--n", "4", "--format", "json"},
        {"sheaves", "--case", "AI", "--m", "2", "--N", "4", "--format", "csv"},
        {"sheaves", "--case", "CII", "--m", "4", "--N", "4"},
        {"verify", "--case", "AII", "--m0", "3", "--N", "6"},
        {"verify", "--case", "AI", "--m", "3", "--N", "3", "--format", "json"},
        {"cuspidal", "--case", "AI", "--m", "2", "--N", "3"},
        {"distinguished", "--case", "AI", "--m", "2", "--N", "4", "--oracle", "--seed", "0"},
        {"distinguished", "--case", "AI", "--m", "3", "--N", "4", "--oracle", "--seed", "12345", "--trials", "7"},
    };
    for (const auto& c : commands) {
        std::string first;
        int first_code = 0;
        for (int rep = 0; rep < 3; ++rep) {
            std::ostringstream out, err;
            const int code = cli::run(c, out, err);
            if (rep == 0) {
                first = out.str();
                first_code = code;
                if (first.empty()) o.fail(c.front() + " printed nothing");
            } else if (out.str() != first || code != first_code) {
                o.fail(c.front() + " output differs between runs");
            }
        }
    }
    if (o.ok) o.detail = std::to_string(commands.size()) + " commands x 3 runs byte-identical";
    return o;
}

} // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        std::function<Outcome()> check;
    };
    const std::vector<Criterion> criteria = {
        {1, "orbit counts: enumeration = product formula = weight sums", orbit_counts},
        {2, "distinguished counts match their generating functions", distinguished_counts},
        {3, "AI orbital complexes biject onto the sheaf catalog", bijection_AI},
        {4, "type II orbital complexes biject onto the sheaf catalog", bijection_II},
        {5, "distinguished predicate agrees with the nilpotency oracle", oracle_agreement},
        {6, "orbit and stratum dimension identities", dimension_identities},
        {7, "cuspidal anchor m=2, d=(2,1)", cuspidal_anchor},
        {8, "CLI output is deterministic", determinism},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.check();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        failures += !o.ok;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " (" << o.detail << ", "
                  << std::fixed << std::setprecision(2) << secs << " s)" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
