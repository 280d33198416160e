#pragma once

#include <json.hpp>

#include "rigidmod/eta_product.hpp"
#include "rigidmod/qseries.hpp"
#include "rigidmod/verify.hpp"

namespace rigidmod {

using Json = nlohmann::json;

// {"num": "...", "den": "..."} with decimal-string big integers
inline Json rational_to_json(const Q& x) {
    return Json{{"num", x.get_num().get_str()}, {"den", x.get_den().get_str()}};
}

inline Q rational_from_json(const Json& j) {
    Q x(Z(j.at("num").get<std::string>()), Z(j.at("den").get<std::string>()));
    x.canonicalize();
    return x;
}

// {"trunc": T, "terms": [{"num": "...", "den": "...", "exp24": e}, ...]}
inline Json qseries_to_json(const QSeries& s) {
    Json terms = Json::array();
    for (auto& [e, c] : s.terms()) {
        Json t = rational_to_json(c);
        t["exp24"] = e;
        terms.push_back(std::move(t));
    }
    return Json{{"trunc", s.trunc()}, {"terms", std::move(terms)}};
}

inline QSeries qseries_from_json(const Json& j) {
    std::vector<std::pair<long long, Q>> terms;
    for (const Json& t : j.at("terms"))
        terms.push_back({t.at("exp24").get<long long>(), rational_from_json(t)});
    return QSeries(std::move(terms), j.at("trunc").get<long long>());
}

inline Json order_profile_to_json(const OrderProfile& p) {
    Json orders = Json::array();
    for (auto& [c, o] : p.divisor_orders) {
        Json row = Json{{"cusp", c}, {"order", rational_to_json(o)}};
        orders.push_back(std::move(row));
    }
    orders.push_back(Json{{"cusp", "inf"}, {"order", rational_to_json(p.order_inf)}});
    return Json{{"orders", std::move(orders)}, {"class", to_string(p.cls)}};
}

inline Json report_to_json(const RootReport& r) {
    Json checks = Json::array();
    for (auto& c : r.checks) {
        Json line = Json{{"name", c.name}, {"pass", c.pass}};
        if (!c.detail.empty()) line["detail"] = c.detail;
        checks.push_back(std::move(line));
    }
    return Json{{"root", r.root}, {"pass", r.pass}, {"checks", std::move(checks)}};
}

}  // namespace rigidmod
