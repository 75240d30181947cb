#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "zc/dynamics.hpp"
#include "zc/hadamard.hpp"
#include "zc/matrix.hpp"
#include "zc/series.hpp"
#include "zc/variety.hpp"
#include "zc/witt.hpp"

// JSON (de)serialization for the CLI and its tests. Exact rationals travel
// as decimal strings "num/den", never as floats.

namespace zc::io {

using json = nlohmann::json;

inline Rat parse_rat(const json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) return rat_parse(j.get<std::string>());
    throw error("expected an integer or a \"num/den\" string: " + j.dump());
}

inline Int parse_int(const json& j) { return to_int(parse_rat(j)); }

inline json rat_to_json(const Rat& r) { return json(rat_str(r)); }

inline std::vector<Rat> parse_rat_array(const json& j) {
    if (!j.is_array()) throw error("expected a JSON array: " + j.dump());
    std::vector<Rat> r;
    r.reserve(j.size());
    for (const auto& v : j) r.push_back(parse_rat(v));
    return r;
}

inline json rat_array_to_json(const std::vector<Rat>& v) {
    json j = json::array();
    for (const auto& r : v) j.push_back(rat_str(r));
    return j;
}

inline trunc_series parse_series(const json& j) {
    auto v = parse_rat_array(j);
    if (v.empty()) throw error("series needs at least a constant term");
    return trunc_series(std::move(v));
}

inline json series_to_json(const trunc_series& s) { return rat_array_to_json(s.c); }

inline json ghost_to_json(const ghost_vector& g) { return rat_array_to_json(g.g); }

inline int_poly parse_int_poly(const json& j) {
    auto v = parse_rat_array(j);
    std::vector<Int> c;
    c.reserve(v.size());
    for (const auto& r : v) c.push_back(to_int(r));
    return int_poly(std::move(c));
}

inline json int_poly_to_json(const int_poly& p) {
    json j = json::array();
    for (const auto& c : p.c) j.push_back(c.str());
    return j;
}

inline json int_array_to_json(const std::vector<Int>& v) {
    json j = json::array();
    for (const auto& c : v) j.push_back(c.str());
    return j;
}

inline int_matrix parse_matrix(const json& j) {
    if (!j.is_array() || j.empty()) throw error("expected a non-empty array of matrix rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        if (!row.is_array()) throw error("matrix rows must be arrays");
        std::vector<Int> r;
        for (const auto& v : row) r.push_back(parse_int(v));
        rows.push_back(std::move(r));
    }
    int_matrix m(rows);
    if (!m.square()) throw error("matrix must be square");
    return m;
}

inline homology_action parse_homology(const json& j) {
    if (!j.contains("matrices")) throw error("homology input needs a \"matrices\" field");
    homology_action h;
    for (const auto& m : j["matrices"]) h.matrices.push_back(parse_matrix(m));
    return h;
}

inline fp_poly parse_fp_poly(const json& j, unsigned num_vars) {
    fp_poly p;
    for (const auto& term : j) {
        if (!term.is_array() || term.size() != 2)
            throw error("polynomial terms are [exponents, coefficient] pairs");
        std::vector<unsigned> exps;
        for (const auto& e : term[0]) exps.push_back(e.get<unsigned>());
        if (exps.size() > num_vars) throw error("exponent vector longer than variable list");
        exps.resize(num_vars, 0);
        p.terms.emplace_back(std::move(exps),
                             static_cast<std::int64_t>(to_int(parse_rat(term[1]))));
    }
    return p;
}

// {"p": 3, "vars": ["x","y"], "polys": [...]} where polys is either a list
// of polynomials or a single polynomial's term list.
inline affine_variety parse_variety(const json& j) {
    affine_variety x;
    if (!j.contains("p") || !j.contains("vars")) throw error("variety needs \"p\" and \"vars\"");
    x.p = j["p"].get<std::int64_t>();
    x.num_vars = static_cast<unsigned>(j["vars"].size());
    if (!j.contains("polys")) return x;
    const json& polys = j["polys"];
    if (!polys.is_array()) throw error("\"polys\" must be an array");
    bool single = !polys.empty() && polys[0].is_array() && polys[0].size() == 2 &&
                  polys[0][0].is_array() && !polys[0][1].is_array();
    if (single) {
        x.polys.push_back(parse_fp_poly(polys, x.num_vars));
    } else {
        for (const auto& p : polys) x.polys.push_back(parse_fp_poly(p, x.num_vars));
    }
    return x;
}

inline json lrs_to_json(const lin_rec_seq& a) {
    return json{{"init", int_array_to_json(a.init())},
                {"charpoly", int_poly_to_json(a.charpoly())}};
}

inline lin_rec_seq parse_lrs(const json& j) {
    if (!j.contains("init") || !j.contains("charpoly"))
        throw error("sequence input needs \"init\" and \"charpoly\"");
    std::vector<Int> init;
    for (const auto& v : j["init"]) init.push_back(parse_int(v));
    return lin_rec_seq(std::move(init), parse_int_poly(j["charpoly"]));
}

}  // namespace zc::io
