#pragma once

// JSON encoding of the domain types. Rationals are always [numerator,
// denominator] with positive denominator, emitted as integers when they fit
// in 64 bits and as decimal strings otherwise; both forms parse back. No
// rational is ever emitted as a decimal fraction.

#include "kempf/higgs.hpp"
#include "kempf/instability.hpp"
#include "kempf/separability.hpp"

#include <json.hpp>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace kempf {

using Json = nlohmann::ordered_json;

inline Json int_to_json(const Int& n) {
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) return Json(static_cast<std::int64_t>(n));
    return Json(n.str());
}

inline Int int_from_json(const Json& j) {
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) return Int(j.get<std::string>());
    throw std::invalid_argument("expected an integer or integer string");
}

inline Json rat_to_json(const Rat& q) { return Json::array({int_to_json(numerator(q)), int_to_json(denominator(q))}); }

inline Rat rat_from_json(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<std::int64_t>());
    if (!j.is_array() || j.size() != 2) throw std::invalid_argument("expected a rational as [num, den]");
    Int num = int_from_json(j[0]), den = int_from_json(j[1]);
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    return Rat(num, den);
}

inline Json vec_to_json(const Vec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rat_to_json(x));
    return a;
}

inline Vec vec_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
    Vec v;
    v.reserve(j.size());
    for (const auto& x : j) v.push_back(rat_from_json(x));
    return v;
}

inline Json weight_to_json(const Weight& w) {
    return Json{{"basis", "fundamental"}, {"coords", vec_to_json(w.c)}};
}

/// Accepts {"basis": "fundamental"|"root", "coords": [...]} or a bare coords
/// array (read as fundamental).
inline Weight weight_from_json(const Json& j, const Ambient& amb) {
    if (j.is_array()) return Weight(vec_from_json(j));
    if (!j.is_object() || !j.contains("coords")) throw std::invalid_argument("expected a weight object or array");
    Vec coords = vec_from_json(j.at("coords"));
    std::string basis = j.value("basis", std::string("fundamental"));
    if (basis == "fundamental") return Weight(std::move(coords));
    if (basis == "root") return amb.from_root_basis(coords);
    throw std::invalid_argument("unknown weight basis '" + basis + "'");
}

inline Json matrix_to_json(const Mat& m) {
    Json rows = Json::array();
    for (const auto& r : m) rows.push_back(vec_to_json(r));
    return rows;
}

inline Mat matrix_from_json(const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a matrix as an array of rows");
    Mat m;
    for (const auto& r : j) m.push_back(vec_from_json(r));
    return m;
}

inline Json higgs_to_json(const HiggsStructure& h) {
    Json theta = Json::array();
    for (const auto& comp : h.theta) theta.push_back(matrix_to_json(comp));
    return Json{{"dim_v", h.dim_v}, {"dim_u", h.dim_u}, {"theta", theta}};
}

inline HiggsStructure higgs_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("expected a Higgs structure object");
    std::size_t dv = j.at("dim_v").get<std::size_t>();
    std::size_t du = j.at("dim_u").get<std::size_t>();
    std::vector<Mat> theta;
    for (const auto& comp : j.at("theta")) theta.push_back(matrix_from_json(comp));
    return HiggsStructure(dv, du, std::move(theta));
}

inline Json state_to_json(const State& s) {
    Json ws = Json::array();
    for (const auto& w : s.weights) ws.push_back(weight_to_json(w));
    return Json{{"ambient", s.ambient.name()}, {"weights", ws}};
}

inline State state_from_json(const Json& j) {
    Ambient amb = parse_ambient(j.at("ambient").get<std::string>());
    std::vector<Weight> ws;
    for (const auto& w : j.at("weights")) ws.push_back(weight_from_json(w, amb));
    return State(std::move(amb), std::move(ws));
}

inline Json character_to_json(const Character& c) {
    Json ws = Json::array();
    for (const auto& [w, m] : c.weights) ws.push_back(Json{{"weight", weight_to_json(w)}, {"mult", m}});
    return Json{{"ambient", c.ambient.name()}, {"dim", c.dim()}, {"weights", ws}};
}

inline Character character_from_json(const Json& j) {
    Ambient amb = parse_ambient(j.at("ambient").get<std::string>());
    WeightMultiset ws;
    for (const auto& entry : j.at("weights"))
        ws[weight_from_json(entry.at("weight"), amb)] += entry.at("mult").get<Mult>();
    return Character(std::move(amb), std::move(ws));
}

inline Json parabolic_to_json(const Ambient& amb, const ParabolicData& p) {
    auto roots_json = [&](const std::vector<Weight>& roots) {
        Json a = Json::array();
        for (const auto& r : roots) {
            Json entry = Json::object();
            entry["basis"] = "root";
            Json coords = Json::array();
            for (const auto& x : amb.to_root_basis(r)) coords.push_back(rat_to_json(x));
            entry["coords"] = coords;
            a.push_back(entry);
        }
        return a;
    };
    return Json{{"full_group", p.is_full_group()},
                {"levi_roots", roots_json(p.zero_roots)},
                {"positive_roots", roots_json(p.positive_part)},
                {"negative_roots", roots_json(p.negative_part)}};
}

inline Json certificate_to_json(const Ambient& amb, const InstabilityCertificate& cert) {
    return Json{{"lambda", weight_to_json(cert.lambda)},
                {"lambda_normalized", weight_to_json(cert.lambda_normalized)},
                {"measure", rat_to_json(cert.measure_value)},
                {"q", rat_to_json(cert.q_value)},
                {"parabolic", parabolic_to_json(amb, cert.parabolic)}};
}

inline Json strata_to_json(const StrataIndexSet& b) {
    Json a = Json::array();
    for (const auto& [beta, q] : b.betas) a.push_back(Json{{"beta", weight_to_json(beta)}, {"q", rat_to_json(q)}});
    return Json{{"betas", a}};
}

inline std::string subset_key(const std::vector<std::size_t>& idx) {
    std::string key;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        if (i) key += ',';
        key += std::to_string(idx[i]);
    }
    return key;
}

inline Json separability_report_to_json(const SeparabilityReport& rep) {
    Json support = Json::array();
    for (const auto& w : rep.support) support.push_back(weight_to_json(w));
    Json gs = Json::object();
    for (const auto& [idx, g] : rep.g_values) gs[subset_key(idx)] = int_to_json(g);
    Json j;
    j["psi"] = rep.psi_unbounded ? Json("unbounded") : int_to_json(rep.psi);
    j["p_t"] = rep.p_t.unbounded ? Json("unbounded") : int_to_json(rep.p_t.value);
    j["height"] = rat_to_json(rep.height);
    j["support"] = support;
    j["g_values"] = gs;
    return j;
}

inline Json filtration_to_json(const WeightFiltration& f) {
    Json levels = Json::array();
    for (const auto& [value, part] : f) {
        Json ws = Json::array();
        Mult size = 0;
        for (const auto& [w, m] : part) {
            ws.push_back(Json{{"weight", weight_to_json(w)}, {"mult", m}});
            size += m;
        }
        levels.push_back(Json{{"level", rat_to_json(value)}, {"dim", size}, {"weights", ws}});
    }
    return Json{{"levels", levels}};
}

}  // namespace kempf
