#ifndef LAGRANGE_JSON_HPP
#define LAGRANGE_JSON_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include <lagrange/identity.hpp>
#include <lagrange/rational.hpp>
#include <lagrange/series.hpp>

namespace lagrange
{

// Key order is part of the wire format, so everything goes through
// ordered_json.
using json = nlohmann::ordered_json;

inline json rationals_to_json(std::span<const Rational> values)
{
    json arr = json::array();
    for (const auto &v : values) {
        arr.push_back(v.to_string());
    }
    return arr;
}

inline std::vector<Rational> rationals_from_json(const json &arr)
{
    if (!arr.is_array()) {
        throw parse_error("expected an array of rational strings");
    }
    std::vector<Rational> out;
    out.reserve(arr.size());
    for (const auto &v : arr) {
        if (!v.is_string()) {
            throw parse_error("rational coefficients must be \"p/q\" strings");
        }
        out.push_back(Rational::parse(v.get<std::string>()));
    }
    return out;
}

/// Coefficients of z^0..z^(order-1).
template <class K>
json to_json(const PowerSeries<K> &s)
{
    return rationals_to_json(s.coeffs());
}

/// {"valuation": v, "precision": p, "coeffs": [...]} with coeffs for
/// exponents v..p-1.
template <class K>
json to_json(const LaurentSeries<K> &s)
{
    json j;
    j["valuation"] = s.valuation();
    j["precision"] = s.precision();
    j["coeffs"] = rationals_to_json(s.coeffs());
    return j;
}

inline PowerSeries<Rational> power_series_from_json(const json &j)
{
    return PowerSeries<Rational>(rationals_from_json(j));
}

inline LaurentSeries<Rational> laurent_series_from_json(const json &j)
{
    const int valuation = j.at("valuation").get<int>();
    const int precision = j.at("precision").get<int>();
    auto coeffs = rationals_from_json(j.at("coeffs"));
    if (valuation + static_cast<int>(coeffs.size()) != precision) {
        throw parse_error("laurent series: valuation + len(coeffs) must equal precision");
    }
    if (coeffs.empty()) {
        return LaurentSeries<Rational>::zero(precision);
    }
    return LaurentSeries<Rational>(valuation, std::move(coeffs));
}

inline json to_json(const VerificationReport &rep)
{
    json j;
    j["r"] = rationals_to_json(rep.r.coeffs());
    j["e"] = rep.e;
    j["order"] = rep.order;
    j["lhs"] = rationals_to_json(rep.lhs);
    j["rhs"] = rationals_to_json(rep.rhs);
    j["equal"] = rep.equal;
    j["first_mismatch"] = rep.first_mismatch ? json(*rep.first_mismatch) : json(nullptr);
    return j;
}

inline VerificationReport report_from_json(const json &j)
{
    VerificationReport rep{RSpec(rationals_from_json(j.at("r")))};
    rep.e = j.at("e").get<int>();
    rep.order = j.at("order").get<int>();
    rep.lhs = rationals_from_json(j.at("lhs"));
    rep.rhs = rationals_from_json(j.at("rhs"));
    rep.equal = j.at("equal").get<bool>();
    const auto &fm = j.at("first_mismatch");
    if (!fm.is_null()) {
        rep.first_mismatch = fm.get<int>();
    }
    return rep;
}

} // namespace lagrange

#endif
