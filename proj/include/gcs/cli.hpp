#pragma once

// Command-line front end. run() parses argv-style arguments and writes data
// to `out`, diagnostics to `err`; it returns the process exit code
// (0 ok, 1 verification failure, 2 usage error).

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gcs/diagrams.hpp"
#include "gcs/errors.hpp"
#include "gcs/json.hpp"
#include "gcs/oracle.hpp"
#include "gcs/orbits.hpp"
#include "gcs/series.hpp"
#include "gcs/sheaves.hpp"

namespace gcs::cli {

enum class Format { Text, Csv, Json };

struct RunConfig {
    std::string subcommand;
    std::string kind = "AI";
    int m = 0;
    int m0 = 0;
    std::vector<int> dims;
    int N = -1;
    int a = 0;   // 0: not given
    int n_max = 6;
    std::string family;
    int l = 1;
    std::uint64_t seed = 0;
    int trials = 20;
    Format format = Format::Text;
    std::string output;
    bool oracle = false;
    bool dump_matrices = false;
    std::string sign = "-";
};

/// Usage errors raised after parsing (bad combinations of flags).
class UsageError : public Error {
public:
    using Error::Error;
};

// A table is rendered as aligned text or CSV; JSON output uses a separate
// document built alongside it.
struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> footer;   // text-only summary lines

    void add(std::vector<std::string> row) { rows.push_back(std::move(row)); }
};

namespace detail {

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

inline void write_csv(std::ostream& os, const Table& t) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
}

inline void write_text(std::ostream& os, const Table& t) {
    std::vector<std::size_t> width(t.header.size(), 0);
    auto grow = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
    };
    grow(t.header);
    for (const auto& r : t.rows) grow(r);
    auto line = [&](const std::vector<std::string>& cells) {
        std::string s;
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) s += "  ";
            s += cells[i];
            if (i + 1 < cells.size()) s.append(width[i] - cells[i].size(), ' ');
        }
        os << s << '\n';
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    for (const auto& f : t.footer) os << f << '\n';
}

inline GradingCase config_case(const RunConfig& c) {
    try {
        return parse_grading_case(c.kind);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
}

inline int config_modulus(const RunConfig& c, GradingCase kind) {
    if (kind == GradingCase::AII) {
        if (c.m0 > 0) return c.m0;
        if (c.m > 0) return c.m;
        throw UsageError("AII needs --m0");
    }
    if (c.m > 0) return c.m;
    throw UsageError(to_string(kind) + " needs --m");
}

// The gradings a command runs over: the one given by --dims, or every valid
// dimension vector of size --N.
inline std::vector<GradingSpec> config_gradings(const RunConfig& c) {
    const GradingCase kind = config_case(c);
    const int modulus = config_modulus(c, kind);
    if (!c.dims.empty() && c.N >= 0) throw UsageError("give either --dims or --N, not both");
    if (!c.dims.empty()) {
        const std::string why = GradingSpec::validation_error(kind, modulus, DimensionVector(c.dims));
        if (!why.empty()) throw UsageError(why);
        return {GradingSpec::make(kind, modulus, DimensionVector(c.dims))};
    }
    if (c.N < 0) throw UsageError("need --dims or --N");
    return gradings_of_size(kind, modulus, c.N);
}

inline Sign config_sign(const RunConfig& c) {
    if (c.sign == "+") return Sign::Plus;
    if (c.sign == "-") return Sign::Minus;
    throw UsageError("--sign must be + or -");
}

inline std::string psi_string(const CentralCharacter& psi) {
    return std::to_string(psi.index) + "/" + std::to_string(psi.modulus);
}

// ---------------------------------------------------------------------------

inline int cmd_orbits(const RunConfig& c, Table& t, Json& doc) {
    const Sign sign = config_sign(c);
    const auto gradings = config_gradings(c);
    const bool ai = config_case(c) == GradingCase::AI;
    t.header = {"d", "orbit", "d_lambda", "distinguished"};
    if (ai) t.header.push_back("orbit_dim");
    if (c.dump_matrices && ai) t.header.push_back("matrix");
    doc = Json::array();
    for (const auto& g : gradings) {
        for (const auto& lam : enumerate_orbits(g, sign)) {
            const bool dist = ai ? is_distinguished_AI(lam, 1, g.modulus()) : is_distinguished_II(lam, g);
            std::vector<std::string> row{to_string(g.dims()), to_string(lam),
                                         std::to_string(component_group_order(lam, g)), yes_no(dist)};
            Json j{{"dims", g.dims().entries()},
                   {"orbit", to_json(lam)},
                   {"d_lambda", component_group_order(lam, g)},
                   {"distinguished", dist}};
            if (ai) {
                const int od = orbit_dim(lam, g);
                row.push_back(std::to_string(od));
                j["orbit_dim"] = od;
                if (c.dump_matrices) {
                    const Json mat = to_json(build_representative(as_sign(lam, sign), g).full());
                    row.push_back(mat.dump());
                    j["matrix"] = mat;
                }
            }
            t.add(std::move(row));
            doc.push_back(std::move(j));
        }
    }
    return 0;
}

inline WeightScheme::Kind weight_kind(const std::string& family) {
    using K = WeightScheme::Kind;
    if (family == "A") return K::OrbitA;
    if (family == "C") return K::OrbitC;
    if (family == "D") return K::OrbitD;
    if (family == "dist-A") return K::DistinguishedA;
    if (family == "dist-C") return K::DistinguishedC;
    if (family == "dist-D") return K::DistinguishedD;
    if (family == "dist-AI") return K::DistinguishedAI;
    throw UsageError("unknown --family '" + family + "' (A, C, D, dist-A, dist-C, dist-D, dist-AI)");
}

/// Brute-force count behind one coefficient of a count table.
inline BigInt enumerated_count(const std::string& family, int l, int m, int a, int n) {
    if (family == "dist-AI") {
        BigInt count = 0;
        for (const auto& lam : enumerate_by_size(m, Sign::Plus, n * a, a))
            if (is_distinguished_AI(lam, a, m)) ++count;
        return count;
    }
    const bool dist = family.rfind("dist-", 0) == 0;
    const char f = family.back();
    const GradingCase kind = f == 'A' ? GradingCase::AII : f == 'C' ? GradingCase::CII : GradingCase::DII;
    const int modulus = f == 'A' ? 2 * l + 1 : 2 * l;
    BigInt count = 0;
    for (const auto& lam : enumerate_orbits_by_size(kind, modulus, 2 * n, Sign::Plus)) {
        if (dist && !is_distinguished_II(lam, GradingSpec::make(kind, modulus, dimension_vector(lam)))) continue;
        ++count;
    }
    return count;
}

inline int cmd_count(const RunConfig& c, Table& t, Json& doc) {
    if (c.family.empty()) throw UsageError("count needs --family");
    if (c.n_max < 0) throw UsageError("--n must be nonnegative");
    WeightScheme w;
    w.kind = weight_kind(c.family);
    TruncSeries gf;
    if (w.kind == WeightScheme::Kind::DistinguishedAI) {
        if (c.m < 1) throw UsageError("dist-AI needs --m");
        w.m = c.m;
        w.a = c.a > 0 ? c.a : 1;
        if (std::gcd(w.a, w.m) == w.m) throw UsageError("dist-AI needs gcd(a, m) < m");
        gf = gf_distinguished_AI(w.m, w.a, c.n_max);
    } else {
        if (c.l < 1) throw UsageError("--l must be at least 1");
        w.l = c.l;
        const char f = c.family.back();
        const Family fam = f == 'A' ? Family::A : f == 'C' ? Family::C : Family::D;
        gf = c.family.size() == 1 ? gf_orbit_count(fam, c.l, c.n_max) : gf_distinguished_II(fam, c.l, c.n_max);
    }
    t.header = {"n", "gf", "weight_sum", "enum", "match"};
    doc = Json::array();
    bool all = true;
    for (int n = 0; n <= c.n_max; ++n) {
        const BigInt ws = weight_sum(n, w);
        const BigInt en = enumerated_count(c.family, w.l, w.m, w.a, n);
        const bool match = gf[n] == ws && ws == en;
        all = all && match;
        t.add({std::to_string(n), gf[n].str(), ws.str(), en.str(), match ? "true" : "false"});
        doc.push_back(Json{{"n", n}, {"gf", gf[n].str()}, {"weight_sum", ws.str()}, {"enum", en.str()}, {"match", match}});
    }
    return all ? 0 : 1;
}

inline std::vector<std::string> sheaf_row(const GradingSpec& g, const SheafLabel& s) {
    std::vector<std::string> row{to_string(g.dims())};
    if (s.is_AI()) {
        const auto& st = s.ai();
        row.insert(row.end(), {std::to_string(st.a), std::to_string(st.l), to_string(st.mu), std::to_string(st.d_check),
                               psi_string(s.psi), to_string(s.tau)});
    } else {
        const auto& st = s.ii();
        row.insert(row.end(), {std::to_string(st.k), to_string(st.mu), to_string(s.tau.components.at(0))});
    }
    row.insert(row.end(), {yes_no(s.flags.nilpotent_support), yes_no(s.flags.full_support)});
    if (s.is_AI()) row.push_back(yes_no(s.flags.cuspidal_conjectural));
    return row;
}

inline std::vector<std::string> sheaf_header(bool ai) {
    if (ai)
        return {"d", "a", "l", "mu", "d_check", "psi", "tau", "nilp_support(conj)", "full_support", "cuspidal(conj)"};
    return {"d", "k", "mu", "rho", "nilp_support(conj)", "full_support"};
}

inline Json sheaf_json(const GradingSpec& g, const SheafLabel& s) {
    Json j = to_json(s);
    Json out{{"dims", g.dims().entries()}};
    for (auto it = j.begin(); it != j.end(); ++it) out[it.key()] = it.value();
    return out;
}

inline int cmd_sheaves(const RunConfig& c, Table& t, Json& doc) {
    const auto gradings = config_gradings(c);
    const bool ai = config_case(c) == GradingCase::AI;
    if (!ai && c.a > 0) throw UsageError("--a applies to type AI only");
    t.header = sheaf_header(ai);
    doc = Json::array();
    for (const auto& g : gradings) {
        const auto labels = !ai ? catalog_II(g) : c.a > 0 ? catalog_AI(g, c.a) : catalog_AI_all(g);
        for (const auto& s : labels) {
            t.add(sheaf_row(g, s));
            doc.push_back(sheaf_json(g, s));
        }
    }
    return 0;
}

inline int cmd_cuspidal(const RunConfig& c, Table& t, Json& doc) {
    if (config_case(c) != GradingCase::AI) throw UsageError("the cuspidal list is catalogued for type AI only");
    t.header = sheaf_header(true);
    doc = Json::array();
    for (const auto& g : config_gradings(c))
        for (const auto& s : cuspidal_AI(g)) {
            t.add(sheaf_row(g, s));
            doc.push_back(sheaf_json(g, s));
        }
    t.footer.push_back("# cuspidal labels are conjectural");
    return 0;
}

inline int cmd_verify(const RunConfig& c, Table& t, Json& doc) {
    const auto gradings = config_gradings(c);
    const bool ai = config_case(c) == GradingCase::AI;
    if (!ai && c.a > 0) throw UsageError("--a applies to type AI only");
    t.header = {"d", "a", "complexes", "catalog", "injective", "surjective", "result"};
    doc = Json::array();
    bool all = true;
    std::size_t runs = 0;
    for (const auto& g : gradings) {
        std::vector<int> orders;
        const int N = g.total();
        if (!ai) orders = {1};
        else if (c.a > 0) orders = {c.a};
        else
            for (int a = 1; a <= std::max(N, 1); ++a)
                if (N == 0 ? a == 1 : N % a == 0) orders.push_back(a);
        for (int a : orders) {
            const BijectionReport r = verify_bijection(g, a);
            all = all && r.pass();
            ++runs;
            t.add({to_string(g.dims()), ai ? std::to_string(a) : "-", std::to_string(r.source_count),
                   std::to_string(r.catalog_count), yes_no(r.injective), yes_no(r.surjective), r.pass() ? "PASS" : "FAIL"});
            Json j{{"dims", g.dims().entries()}};
            if (ai) j["a"] = a;
            Json rep = to_json(r);
            for (auto it = rep.begin(); it != rep.end(); ++it) j[it.key()] = it.value();
            doc.push_back(std::move(j));
        }
    }
    t.footer.push_back(std::string(all ? "# verified " : "# FAILED ") + std::to_string(runs) + " bijection(s)");
    return all ? 0 : 1;
}

inline int cmd_distinguished(const RunConfig& c, Table& t, Json& doc) {
    const auto gradings = config_gradings(c);
    const bool ai = config_case(c) == GradingCase::AI;
    const int a = c.a > 0 ? c.a : 1;
    if (!ai && c.a > 0) throw UsageError("--a applies to type AI only");
    if (c.oracle && !ai) throw UsageError("the oracle handles type AI only");
    if (c.oracle && a != 1) throw UsageError("the oracle checks the a = 1 predicate only");
    if (c.trials < 1) throw UsageError("--trials must be positive");
    const Sign sign = config_sign(c);
    t.header = {"d", "orbit", "distinguished"};
    if (c.oracle) t.header.insert(t.header.end(), {"oracle", "agree"});
    doc = Json::array();
    std::size_t total = 0, agree = 0, dist_count = 0;
    const OracleOptions opt{c.trials, c.seed};
    for (const auto& g : gradings) {
        for (const auto& lam : enumerate_orbits(g, sign)) {
            bool pred = false;
            if (!ai) pred = is_distinguished_II(lam, g);
            else if (divides(a, lam.empty() ? 0 : lam.part_gcd())) pred = is_distinguished_AI(lam, a, g.modulus());
            ++total;
            dist_count += pred;
            std::vector<std::string> row{to_string(g.dims()), to_string(lam), yes_no(pred)};
            Json j{{"dims", g.dims().entries()}, {"orbit", to_json(lam)}, {"distinguished", pred}};
            if (c.oracle) {
                const bool o = is_distinguished_oracle(lam, g, opt);
                agree += o == pred;
                row.insert(row.end(), {yes_no(o), yes_no(o == pred)});
                j["oracle"] = o;
                j["agree"] = o == pred;
            }
            t.add(std::move(row));
            doc.push_back(std::move(j));
        }
    }
    t.footer.push_back("# distinguished " + std::to_string(dist_count) + "/" + std::to_string(total));
    if (c.oracle) t.footer.push_back("# oracle agrees on " + std::to_string(agree) + "/" + std::to_string(total));
    return agree == total || !c.oracle ? 0 : 1;
}

inline void add_common_options(CLI::App* sub, RunConfig& c, std::string& fmt) {
    sub->add_option("--case", c.kind, "AI, AII, CII or DII")->capture_default_str();
    sub->add_option("--m", c.m, "modulus (AI, CII, DII)");
    sub->add_option("--m0", c.m0, "odd modulus m_0 (AII)");
    sub->add_option("--dims", c.dims, "dimension vector d_1,...,d_m")->delimiter(',');
    sub->add_option("--N", c.N, "run over every valid dimension vector of this size");
    sub->add_option("--a", c.a, "order of the central character");
    sub->add_option("--sign", c.sign, "diagram convention, + or -")->capture_default_str();
    sub->add_option("--format", fmt, "text, csv or json")->capture_default_str();
    sub->add_option("--output", c.output, "write data to this file instead of stdout");
}

} // namespace detail

inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig c;
    std::string fmt = "text";
    CLI::App app{"Nilpotent orbits and character-sheaf labels of Z/m-graded classical Lie algebras", "gcs"};
    app.require_subcommand(1);

    struct Sub {
        const char* name;
        const char* help;
    };
    const Sub subs[] = {{"orbits", "list nilpotent orbits with invariants"},
                        {"count", "compare generating functions, weight sums and enumeration"},
                        {"sheaves", "list character-sheaf labels"},
                        {"verify", "check the orbital-complex to sheaf bijection"},
                        {"cuspidal", "list the conjectural cuspidal labels (type AI)"},
                        {"distinguished", "list distinguished orbits, optionally against the oracle"}};
    for (const auto& s : subs) {
        CLI::App* sub = app.add_subcommand(s.name, s.help);
        if (std::string(s.name) == "count") {
            sub->add_option("--family", c.family, "A, C, D, dist-A, dist-C, dist-D or dist-AI")->required();
            sub->add_option("--l", c.l, "rank parameter of the type II family")->capture_default_str();
            sub->add_option("--m", c.m, "modulus (dist-AI)");
            sub->add_option("--a", c.a, "order a (dist-AI)");
            sub->add_option("--n", c.n_max, "largest coefficient")->capture_default_str();
            sub->add_option("--format", fmt, "text, csv or json")->capture_default_str();
            sub->add_option("--output", c.output, "write data to this file instead of stdout");
        } else {
            detail::add_common_options(sub, c, fmt);
        }
        if (std::string(s.name) == "distinguished") {
            sub->add_flag("--oracle", c.oracle, "cross-check with the linear-algebra oracle");
            sub->add_option("--seed", c.seed, "oracle PRNG seed")->capture_default_str();
            sub->add_option("--trials", c.trials, "oracle samples per orbit")->capture_default_str();
        }
        if (std::string(s.name) == "orbits") sub->add_flag("--dump-matrices", c.dump_matrices, "include x as p/q matrices");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    c.subcommand = app.get_subcommands().front()->get_name();
    if (fmt == "text") c.format = Format::Text;
    else if (fmt == "csv") c.format = Format::Csv;
    else if (fmt == "json") c.format = Format::Json;
    else {
        err << "error: --format must be text, csv or json\n";
        return 2;
    }

    Table table;
    Json doc;
    int code = 0;
    try {
        if (c.subcommand == "orbits") code = detail::cmd_orbits(c, table, doc);
        else if (c.subcommand == "count") code = detail::cmd_count(c, table, doc);
        else if (c.subcommand == "sheaves") code = detail::cmd_sheaves(c, table, doc);
        else if (c.subcommand == "verify") code = detail::cmd_verify(c, table, doc);
        else if (c.subcommand == "cuspidal") code = detail::cmd_cuspidal(c, table, doc);
        else code = detail::cmd_distinguished(c, table, doc);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const InvalidGrading& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const PreconditionError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!c.output.empty()) {
        file.open(c.output);
        if (!file) {
            err << "error: cannot write " << c.output << '\n';
            return 2;
        }
        sink = &file;
    }
    switch (c.format) {
    case Format::Json: *sink << doc.dump(2) << '\n'; break;
    case Format::Csv: detail::write_csv(*sink, table); break;
    case Format::Text:
        // count tables are CSV in every textual format
        if (c.subcommand == "count") detail::write_csv(*sink, table);
        else detail::write_text(*sink, table);
        break;
    }
    return code;
}

} // namespace gcs::cli
