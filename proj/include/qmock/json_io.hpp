#pragma once

/// JSON renderings of the public data: series, summand families, reports,
/// catalog listings.  Series coefficients use the canonical rational-function
/// string form; exponent polynomials are [c2, c1, c0] triples of exact
/// rationals.

#include <qmock/catalog.hpp>
#include <qmock/verify.hpp>

#include <json.hpp>

namespace qmock {

using json = nlohmann::json;

// --- series ---------------------------------------------------------------

inline json series_to_json(const QSeries& s) {
    json coeffs = json::array();
    for (const auto& [k, v] : s.coeffs())
        coeffs.push_back(json{{"k", k}, {"c", v.to_string()}});
    return json{{"order", s.order()}, {"coeffs", coeffs}};
}

// --- summand families -------------------------------------------------------

inline json exp_poly_to_json(const ExpPoly& p) {
    return json::array({p.c2.to_string(), p.c1.to_string(), p.c0.to_string()});
}

inline ExpPoly exp_poly_from_json(const json& j) {
    if (!j.is_array() || j.size() != 3)
        throw UnknownName("exponent polynomial must be a [c2, c1, c0] triple");
    return ExpPoly{Rational::parse(j[0].get<std::string>()),
                   Rational::parse(j[1].get<std::string>()),
                   Rational::parse(j[2].get<std::string>())};
}

inline json factor_to_json(const PochFactor& f) {
    std::string length = f.infinite ? "inf"
                         : f.len_delta == 0
                             ? "n"
                             : (f.len_delta > 0 ? "n+" + std::to_string(f.len_delta)
                                                : "n-" + std::to_string(-f.len_delta));
    return json{{"base_sign", f.base_sign},
                {"base_pow", f.base_pow},
                {"arg_const", f.arg_const.to_string()},
                {"arg_wexp", f.arg_wexp},
                {"arg_qexp", f.arg_qexp},
                {"length", length},
                {"position", f.denominator ? "den" : "num"},
                {"multiplicity", f.multiplicity}};
}

inline PochFactor factor_from_json(const json& j) {
    PochFactor f;
    f.base_sign = j.at("base_sign").get<int>();
    f.base_pow = j.at("base_pow").get<int>();
    f.arg_const = Rational::parse(j.at("arg_const").get<std::string>());
    f.arg_wexp = j.at("arg_wexp").get<int>();
    f.arg_qexp = j.at("arg_qexp").get<int>();
    std::string length = j.at("length").get<std::string>();
    if (length == "inf") {
        f.infinite = true;
    } else if (length == "n") {
        f.len_delta = 0;
    } else if (length.rfind("n+", 0) == 0) {
        f.len_delta = std::stoi(length.substr(2));
    } else if (length.rfind("n-", 0) == 0) {
        f.len_delta = -std::stoi(length.substr(2));
    } else {
        throw UnknownName("unknown Pochhammer length: " + length);
    }
    std::string pos = j.at("position").get<std::string>();
    if (pos != "num" && pos != "den")
        throw UnknownName("factor position must be num or den");
    f.denominator = (pos == "den");
    f.multiplicity = j.value("multiplicity", 1);
    return f;
}

inline json term_to_json(const HypergeometricTerm& t) {
    json factors = json::array();
    for (const auto& f : t.factors)
        factors.push_back(factor_to_json(f));
    return json{{"const", t.const_factor.to_string()},
                {"geom", t.geom.to_string()},
                {"sign", exp_poly_to_json(t.sign)},
                {"character", character_name(t.chi)},
                {"w_exp", exp_poly_to_json(t.w_exp)},
                {"q_exp", exp_poly_to_json(t.q_exp)},
                {"factors", factors},
                {"n_start", t.n_start}};
}

inline HypergeometricTerm term_from_json(const json& j) {
    HypergeometricTerm t;
    t.const_factor = Rational::parse(j.at("const").get<std::string>());
    t.geom = j.contains("geom") ? Rational::parse(j.at("geom").get<std::string>()) : Rational(1);
    t.sign = exp_poly_from_json(j.at("sign"));
    t.chi = character_from_name(j.at("character").get<std::string>());
    t.w_exp = exp_poly_from_json(j.at("w_exp"));
    t.q_exp = exp_poly_from_json(j.at("q_exp"));
    for (const auto& fj : j.at("factors"))
        t.factors.push_back(factor_from_json(fj));
    t.n_start = j.at("n_start").get<int>();
    return t;
}

// --- reports ----------------------------------------------------------------

inline json report_to_json(const Report& r) {
    json samples = json::array();
    for (const auto& s : r.samples) {
        json o = json::object();
        for (const auto& [k, v] : s)
            o[k] = v.to_string();
        samples.push_back(o);
    }
    json j{{"id", r.id},       {"mode", r.mode},       {"order", r.order},
           {"seed", r.seed},   {"samples", samples},   {"status", r.status},
           {"mismatch", nullptr}, {"elapsed_ms", r.elapsed_ms}};
    if (r.mismatch)
        j["mismatch"] = json{{"q_power", r.mismatch->q_power},
                             {"lhs", r.mismatch->lhs},
                             {"rhs", r.mismatch->rhs}};
    if (!r.error.empty())
        j["error"] = r.error;
    return j;
}

// --- catalog ------------------------------------------------------------------

inline json listing_to_json(const std::vector<CatalogListing>& ls) {
    json arr = json::array();
    for (const auto& l : ls) {
        json regimes = json::array({"direct"});
        if (l.inverted)
            regimes.push_back("inverted");
        arr.push_back(json{{"name", l.name},
                           {"anchor", l.anchor},
                           {"w_mode", l.w_mode == WMode::symbolic_w ? "symbolic" : "numeric-only"},
                           {"regimes", regimes}});
    }
    return arr;
}

} // namespace qmock
