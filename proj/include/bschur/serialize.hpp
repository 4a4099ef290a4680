#pragma once

#include "bschur/analysis.hpp"
#include "bschur/characters.hpp"
#include "bschur/partition.hpp"
#include "bschur/snakes.hpp"
#include "bschur/symfunc.hpp"
#include "bschur/tableaux.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>

namespace bschur {

// ordered_json keeps insertion order, so serialized output is byte-stable.
using Json = nlohmann::ordered_json;

// Arbitrary-precision integers are emitted as JSON numbers while they fit
// in 64 bits and as decimal strings beyond that; both forms are accepted.
inline Json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(v);
    return v.str();
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected integer or decimal string");
}

inline Json partition_to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) { return Partition(j.get<std::vector<int>>()); }

inline Json symfn_to_json(const SymFn& f) {
    Json terms = Json::array();
    for (const auto& [idx, c] : f.terms()) {
        Json t;
        t["index"] = partition_to_json(idx);
        t["num"] = int_to_json(numerator(c));
        t["den"] = int_to_json(denominator(c));
        terms.push_back(std::move(t));
    }
    Json j;
    j["basis"] = basis_name(f.basis());
    j["terms"] = std::move(terms);
    return j;
}

inline SymFn symfn_from_json(const Json& j) {
    std::string b = j.at("basis").get<std::string>();
    Basis basis;
    if (b == "p") basis = Basis::p;
    else if (b == "ptilde") basis = Basis::ptilde;
    else if (b == "m") basis = Basis::m;
    else if (b == "mtilde") basis = Basis::mtilde;
    else if (b == "h") basis = Basis::h;
    else throw std::invalid_argument("unknown basis label: " + b);
    SymFn f(basis);
    for (const Json& t : j.at("terms"))
        f.add_term(partition_from_json(t.at("index")),
                   Rat(int_from_json(t.at("num")), int_from_json(t.at("den"))));
    return f;
}

inline Json character_table_to_json(const CharacterTable& t) {
    Json entries = Json::array();
    for (const auto& [lam, nu, v] : t.entries) {
        Json e;
        e["lambda"] = partition_to_json(lam);
        e["nu"] = partition_to_json(nu);
        e["chi"] = v;
        entries.push_back(std::move(e));
    }
    Json j;
    j["n"] = t.n;
    j["entries"] = std::move(entries);
    return j;
}

inline CharacterTable character_table_from_json(const Json& j) {
    CharacterTable t;
    t.n = j.at("n").get<int>();
    for (const Json& e : j.at("entries"))
        t.entries.emplace_back(partition_from_json(e.at("lambda")), partition_from_json(e.at("nu")),
                               e.at("chi").get<long long>());
    return t;
}

// Tableaux serialize as row arrays padded with null over the inner shape.
inline Json tableau_to_json(const SkewTableau& t) {
    Json rows = Json::array();
    const SkewShape& s = t.shape();
    for (int r = 1; r <= s.outer.length(); ++r) {
        Json row = Json::array();
        for (int c = 1; c <= s.outer.part(r); ++c) {
            if (c <= s.inner.part(r)) row.push_back(nullptr);
            else row.push_back(t.entry(r, c));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline SkewTableau tableau_from_json(const Json& j) {
    std::vector<int> outer, inner;
    std::vector<std::vector<int>> rows;
    for (const Json& row : j) {
        int pad = 0;
        std::vector<int> entries;
        for (const Json& cell : row) {
            if (cell.is_null()) {
                if (!entries.empty()) throw std::invalid_argument("tableau row: null after an entry");
                ++pad;
            } else {
                entries.push_back(cell.get<int>());
            }
        }
        outer.push_back(pad + static_cast<int>(entries.size()));
        inner.push_back(pad);
        rows.push_back(std::move(entries));
    }
    return SkewTableau(SkewShape(Partition(std::move(outer)), Partition(std::move(inner))), rows);
}

inline Json interval_set_to_json(const IntervalSet& is) {
    Json j = Json::array();
    for (auto [u, v] : is.pairs) j.push_back(Json::array({u, v}));
    return j;
}

inline Json dimension_report_to_json(const DimensionReport& r) {
    Json j;
    j["n"] = r.n;
    j["beta"] = r.beta();
    j["count_length_eq_rank"] = r.count_length_eq_rank;
    j["formula_value"] = r.formula_value;
    j["distinct2_count"] = r.distinct2_count;
    j["mod5_count"] = r.mod5_count;
    if (r.span_rank) {
        j["span_rank"] = *r.span_rank;
        Json kb;
        for (const auto& [k, v] : r.k_breakdown) kb[std::to_string(k)] = v;
        j["k_breakdown"] = std::move(kb);
    }
    j["all_equal"] = r.all_equal;
    return j;
}

inline Json gamma_report_to_json(const GammaReport& r, bool include_kernel = true) {
    Json j;
    j["n"] = r.n;
    j["gamma"] = r.dim;
    j["beta"] = r.beta_n;
    j["schur_in_span"] = r.schur_in_span;
    if (include_kernel) {
        Json k = Json::array();
        for (const SymFn& f : r.kernel) k.push_back(symfn_to_json(f));
        j["kernel"] = std::move(k);
    }
    return j;
}

} // namespace bschur
