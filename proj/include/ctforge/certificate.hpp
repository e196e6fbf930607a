#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "ctforge/checked.hpp"
#include "ctforge/root_data.hpp"

namespace ctforge {

inline constexpr const char* kCertificateSchema = "ctforge.certificate/1";

using Coordinate = std::pair<Int, Int>;

/// One line of a verification transcript.
///   rigidity       pair = (X, Y), value = dim Ext^degree(X, Y), must be 0
///   left-witness   pair = (Z, U): Z outside, value = dim Ext^degree(Z, U) > 0
///   right-witness  pair = (U, Z): Z outside, value = dim Ext^degree(U, Z) > 0
///   left-missing / right-missing  no witness exists (value 0, verdict false)
///   periodicity, divides2n, serre-closure  arithmetic / closure checks, value 1 or 0
///   projectives    every indecomposable projective is a summand, value 1 or 0
struct Check {
    std::string kind;
    std::vector<Coordinate> pair;
    int degree = 0;
    Int value = 0;
    friend bool operator==(const Check&, const Check&) = default;
};

/// A verified (or refuted) d-cluster-tilting candidate with its full transcript.
/// `coordinates` documents how `objects` are to be read:
///   "vertex,twist_mod"  orbit objects tau^t(P_v) modulo nu o [1]
///   "top,length"        serial modules over a symmetric Nakayama algebra
struct CTCertificate {
    std::string algebra;
    std::string diagram;
    std::vector<Arrow> orientation;
    std::string coordinates;
    int d = 0;
    std::vector<Coordinate> objects;
    std::vector<Check> checks;
    bool verdict = false;
    std::vector<std::string> notes;
    friend bool operator==(const CTCertificate&, const CTCertificate&) = default;
};

inline nlohmann::ordered_json to_json(const Check& c) {
    nlohmann::ordered_json j;
    j["kind"] = c.kind;
    auto pair = nlohmann::ordered_json::array();
    for (const auto& [a, b] : c.pair) pair.push_back({a, b});
    j["pair"] = pair;
    j["degree"] = c.degree;
    j["value"] = c.value;
    return j;
}

inline Check check_from_json(const nlohmann::ordered_json& j) {
    Check c;
    c.kind = j.at("kind").get<std::string>();
    for (const auto& p : j.at("pair")) c.pair.emplace_back(p.at(0).get<Int>(), p.at(1).get<Int>());
    c.degree = j.at("degree").get<int>();
    c.value = j.at("value").get<Int>();
    return c;
}

inline nlohmann::ordered_json to_json(const CTCertificate& c) {
    nlohmann::ordered_json j;
    j["schema"] = kCertificateSchema;
    j["algebra"] = c.algebra;
    j["diagram"] = c.diagram;
    auto arrows = nlohmann::ordered_json::array();
    for (const auto& a : c.orientation) arrows.push_back({a.source, a.target});
    j["orientation"] = arrows;
    j["coordinates"] = c.coordinates;
    j["d"] = c.d;
    auto objs = nlohmann::ordered_json::array();
    for (const auto& [a, b] : c.objects) objs.push_back({a, b});
    j["objects"] = objs;
    auto checks = nlohmann::ordered_json::array();
    for (const auto& ch : c.checks) checks.push_back(to_json(ch));
    j["checks"] = checks;
    j["verdict"] = c.verdict;
    j["notes"] = c.notes;
    return j;
}

inline CTCertificate certificate_from_json(const nlohmann::ordered_json& j) {
    if (j.at("schema").get<std::string>() != kCertificateSchema)
        throw ValidationError("unsupported certificate schema " + j.at("schema").dump());
    CTCertificate c;
    c.algebra = j.at("algebra").get<std::string>();
    c.diagram = j.at("diagram").get<std::string>();
    for (const auto& a : j.at("orientation")) c.orientation.push_back({a.at(0).get<int>(), a.at(1).get<int>()});
    c.coordinates = j.at("coordinates").get<std::string>();
    c.d = j.at("d").get<int>();
    for (const auto& o : j.at("objects")) c.objects.emplace_back(o.at(0).get<Int>(), o.at(1).get<Int>());
    for (const auto& ch : j.at("checks")) c.checks.push_back(check_from_json(ch));
    c.verdict = j.at("verdict").get<bool>();
    c.notes = j.at("notes").get<std::vector<std::string>>();
    return c;
}

/// First failing check of a refuted certificate, for error messages.
inline std::string first_failure(const CTCertificate& c) {
    for (const auto& ch : c.checks) {
        bool bad = (ch.kind == "rigidity" && ch.value != 0) || ch.kind == "left-missing" ||
                   ch.kind == "right-missing" ||
                   ((ch.kind == "periodicity" || ch.kind == "divides2n" || ch.kind == "serre-closure" ||
                     ch.kind == "projectives") &&
                    ch.value == 0);
        if (!bad) continue;
        std::string s = ch.kind + " degree " + std::to_string(ch.degree) + " value " + std::to_string(ch.value);
        for (const auto& [a, b] : ch.pair) s += " (" + std::to_string(a) + "," + std::to_string(b) + ")";
        return s;
    }
    return "none";
}

} // namespace ctforge
