#pragma once

// Canonical serialization. Text form is for terminals; the JSON form is the
// interchange format and must round-trip bit-exactly:
//
//   series   {"valuation": v, "truncation": T, "coeffs": [<ratfunc>, ...]}
//            with one coefficient per order v..T (dense)
//   ratfunc  {"num": <poly>, "den": <poly>}
//   poly     [[[e_s, e_t1, e_t2], "p/q"], ...] in canonical (graded-lex
//            descending) term order
//   partition   decreasing integer array
//
// Parsers reject anything that is not in canonical form where cheap (term
// order is re-imposed by reconstruction, so any order parses, but emission is
// unique).

#include "fock.hpp"
#include "qseries.hpp"

#include <json.hpp>

#include <string>

namespace dt {

using Json = nlohmann::ordered_json;

// ----- text ---------------------------------------------------------------

inline std::string series_text(const QSeries<RatFunc>& f) {
    std::ostringstream os;
    bool any = false;
    for (long n = f.valuation(); n <= f.trunc(); ++n) {
        RatFunc c = f.coeff(n);
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << "q^" << n << "*(" << c.str() << ")";
        any = true;
    }
    if (!any) os << "0";
    os << "; O(q^" << (f.trunc() + 1) << ")";
    return os.str();
}

inline std::string series_text(const QSeries<Rational>& f) {
    std::ostringstream os;
    bool any = false;
    for (long n = f.valuation(); n <= f.trunc(); ++n) {
        Rational c = f.coeff(n);
        if (c == 0) continue;
        if (any) os << " + ";
        os << "q^" << n << "*(" << rat_str(c) << ")";
        any = true;
    }
    if (!any) os << "0";
    os << "; O(q^" << (f.trunc() + 1) << ")";
    return os.str();
}

// ----- JSON: polynomials and rational functions ----------------------------

inline Json poly_to_json(const MultiPoly& p) {
    Json terms = Json::array();
    const auto& m = p.terms();
    for (auto it = m.rbegin(); it != m.rend(); ++it) // canonical print order
        terms.push_back(Json::array(
            {Json::array({it->first[0], it->first[1], it->first[2]}), rat_str(it->second)}));
    return terms;
}

inline MultiPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw error("poly_from_json: expected array");
    MultiPoly p;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 2 || !t[0].is_array() || t[0].size() != kNumVars)
            throw error("poly_from_json: malformed term");
        Mono m{t[0][0].get<int>(), t[0][1].get<int>(), t[0][2].get<int>()};
        p += MultiPoly::term(m, rat_parse(t[1].get<std::string>()));
    }
    return p;
}

inline Json rf_to_json(const RatFunc& f) {
    return Json{{"num", poly_to_json(f.num())}, {"den", poly_to_json(f.den())}};
}

inline RatFunc rf_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw error("rf_from_json: expected {num, den}");
    return RatFunc(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

// ----- JSON: series --------------------------------------------------------

inline Json series_to_json(const QSeries<RatFunc>& f) {
    Json coeffs = Json::array();
    for (long n = f.valuation(); n <= f.trunc(); ++n) coeffs.push_back(rf_to_json(f.coeff(n)));
    return Json{{"valuation", f.valuation()}, {"truncation", f.trunc()}, {"coeffs", coeffs}};
}

inline Json series_to_json(const QSeries<Rational>& f) {
    return series_to_json(detail::to_ratfunc_series(f));
}

inline QSeries<RatFunc> series_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("valuation") || !j.contains("truncation") ||
        !j.contains("coeffs"))
        throw error("series_from_json: expected {valuation, truncation, coeffs}");
    long v = j["valuation"].get<long>();
    long T = j["truncation"].get<long>();
    const Json& cs = j["coeffs"];
    if (!cs.is_array()) throw error("series_from_json: coeffs must be an array");
    QSeries<RatFunc> f(T);
    if (v <= T && cs.size() != static_cast<size_t>(T - v + 1))
        throw error("series_from_json: coefficient count mismatch");
    for (long n = v; n <= T; ++n) f.set_coeff(n, rf_from_json(cs[static_cast<size_t>(n - v)]));
    return f;
}

// ----- JSON: partitions, Fock vectors, operators ----------------------------

inline Json partition_to_json(const Partition& mu) {
    Json a = Json::array();
    for (int p : mu.parts()) a.push_back(p);
    return a;
}

inline Partition partition_from_json(const Json& j) {
    if (!j.is_array()) throw error("partition_from_json: expected array");
    std::vector<int> parts;
    for (const auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

// vector: [[partition, ratfunc], ...] in canonical basis order
inline Json fockvec_to_json(const FockVec& v) {
    std::vector<Partition> keys;
    for (const auto& [mu, c] : v) keys.push_back(mu);
    std::sort(keys.begin(), keys.end());
    Json a = Json::array();
    for (const auto& mu : keys)
        a.push_back(Json::array({partition_to_json(mu), rf_to_json(v.at(mu))}));
    return a;
}

inline FockVec fockvec_from_json(const Json& j) {
    if (!j.is_array()) throw error("fockvec_from_json: expected array");
    FockVec v;
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 2) throw error("fockvec_from_json: malformed entry");
        fock_add(v, partition_from_json(e[0]), rf_from_json(e[1]));
    }
    return v;
}

// operator: degree plus nonzero entries [[row, col, series], ...] in
// canonical row-major order
inline Json op_to_json(const FockBasis& B, const OpSeries& M) {
    Json entries = Json::array();
    long T = 0;
    for (size_t i = 0; i < B.dim(); ++i)
        for (size_t j = 0; j < B.dim(); ++j) {
            T = M[i][j].trunc();
            if (M[i][j].valuation() > M[i][j].trunc()) continue; // zero
            entries.push_back(Json::array({partition_to_json(B.parts[i]),
                                           partition_to_json(B.parts[j]),
                                           series_to_json(M[i][j])}));
        }
    return Json{{"degree", B.d}, {"truncation", T}, {"entries", entries}};
}

inline OpSeries op_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("degree") || !j.contains("entries"))
        throw error("op_from_json: expected {degree, truncation, entries}");
    FockBasis B(j["degree"].get<int>());
    long T = j["truncation"].get<long>();
    OpSeries M(B.dim(), std::vector<QSeries<RatFunc>>(B.dim(), QSeries<RatFunc>(T)));
    for (const auto& e : j["entries"]) {
        if (!e.is_array() || e.size() != 3) throw error("op_from_json: malformed entry");
        M[B.at(partition_from_json(e[0]))][B.at(partition_from_json(e[1]))] =
            series_from_json(e[2]);
    }
    return M;
}

} // namespace dt
