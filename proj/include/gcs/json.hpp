#pragma once

// JSON forms of diagrams, strata, sheaf labels and matrices.

#include <json.hpp>

#include "gcs/diagrams.hpp"
#include "gcs/oracle.hpp"
#include "gcs/orbits.hpp"
#include "gcs/rational_matrix.hpp"
#include "gcs/sheaves.hpp"

namespace gcs {

using Json = nlohmann::ordered_json;

inline Json to_json(const FilledDiagram& lambda) {
    Json rows = Json::array();
    for (const auto& r : lambda.rows()) rows.push_back(Json{{"len", r.length}, {"start", r.start}});
    return Json{{"modulus", lambda.modulus()}, {"sign", std::string(1, sign_char(lambda.sign()))}, {"rows", rows}};
}

inline FilledDiagram diagram_from_json(const Json& j) {
    const std::string sign = j.at("sign").get<std::string>();
    if (sign != "+" && sign != "-") throw InvalidRow("sign must be \"+\" or \"-\"");
    std::vector<FilledRow> rows;
    for (const auto& r : j.at("rows")) rows.push_back({r.at("len").get<int>(), r.at("start").get<int>()});
    return canonicalize(std::move(rows), j.at("modulus").get<int>(), sign == "+" ? Sign::Plus : Sign::Minus);
}

inline Json to_json(const Partition& p) { return Json(p.parts); }

inline Json to_json(const MultiPartition& mp) {
    Json out = Json::array();
    for (const auto& c : mp.components) out.push_back(to_json(c));
    return out;
}

inline Json to_json(const StratumLabelAI& s) {
    return Json{{"a", s.a}, {"l", s.l}, {"mu", to_json(s.mu)}, {"d_check", s.d_check}, {"braid_rank", s.braid_rank()}};
}

inline Json to_json(const StratumLabelII& s) { return Json{{"k", s.k}, {"mu", to_json(s.mu)}}; }

inline Json to_json(const CentralCharacter& c) {
    return Json{{"mod", c.modulus}, {"idx", c.index}, {"order", c.order()}};
}

inline Json to_json(const SheafLabel& label) {
    Json stratum = label.is_AI() ? to_json(label.ai()) : to_json(label.ii());
    return Json{{"type", label.is_AI() ? "AI" : "II"},
                {"stratum", stratum},
                {"psi", to_json(label.psi)},
                {"tau", to_json(label.tau)},
                {"flags",
                 {{"nilp", label.flags.nilpotent_support},
                  {"full", label.flags.full_support},
                  {"cuspidal_conj", label.flags.cuspidal_conjectural}}}};
}

/// Array of rows of "p/q" strings.
inline Json to_json(const RationalMatrix& m) {
    Json out = Json::array();
    for (int r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(to_fraction_string(m(r, c)));
        out.push_back(row);
    }
    return out;
}

inline Json to_json(const BijectionReport& r) {
    return Json{{"orbital_complexes", r.source_count}, {"catalog", r.catalog_count}, {"counts_equal", r.counts_equal},
                {"injective", r.injective},           {"surjective", r.surjective}, {"pass", r.pass()}};
}

} // namespace gcs
