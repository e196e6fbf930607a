#pragma once

#include <string>

#include "json.hpp"

#include "ctforge/nakayama.hpp"
#include "ctforge/trivext.hpp"

#ifndef CTFORGE_VERSION
#define CTFORGE_VERSION "0.0.0"
#endif

namespace ctforge {

inline constexpr const char* kReportSchema = "ctforge.report/1";

/// Output of one CLI command. `timing` is null unless timing was requested,
/// so that equal inputs give byte-identical reports.
struct RunReport {
    std::string schema = kReportSchema;
    std::string command;
    nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
    nlohmann::ordered_json results = nlohmann::ordered_json::object();
    nlohmann::ordered_json timing = nullptr;
    std::string engine_version = CTFORGE_VERSION;
    friend bool operator==(const RunReport&, const RunReport&) = default;
};

inline nlohmann::ordered_json to_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["schema"] = r.schema;
    j["command"] = r.command;
    j["inputs"] = r.inputs;
    j["results"] = r.results;
    j["timing"] = r.timing;
    j["engine_version"] = r.engine_version;
    return j;
}

inline RunReport report_from_json(const nlohmann::ordered_json& j) {
    RunReport r;
    r.schema = j.at("schema").get<std::string>();
    if (r.schema != kReportSchema) throw ValidationError("unsupported report schema " + r.schema);
    r.command = j.at("command").get<std::string>();
    r.inputs = j.at("inputs");
    r.results = j.at("results");
    r.timing = j.at("timing");
    r.engine_version = j.at("engine_version").get<std::string>();
    return r;
}

/// JSON text with a trailing newline (UTF-8, LF).
inline std::string dump(const RunReport& r) { return to_json(r).dump(2) + "\n"; }

inline nlohmann::ordered_json to_json(const TrivextClassification& c) {
    nlohmann::ordered_json j;
    j["diagram"] = c.diagram;
    j["coxeter_number"] = c.coxeter;
    j["domain_size"] = c.domain_size;
    j["budget"] = c.budget;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : c.rows) {
        nlohmann::ordered_json row;
        row["d"] = r.d;
        row["periodicity"] = r.periodicity;
        row["method"] = r.method;
        row["representation_finite"] = r.representation_finite ? nlohmann::ordered_json(*r.representation_finite) : nullptr;
        row["certificate_count"] = r.certificate_count;
        auto certs = nlohmann::ordered_json::array();
        for (const auto& cert : r.certificates) certs.push_back(to_json(cert));
        row["certificates"] = certs;
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

inline nlohmann::ordered_json to_json(const NakayamaClassification& c, bool numeric, bool bruteforce) {
    nlohmann::ordered_json j;
    j["algebra"] = NakayamaAlgebra(c.a, c.n).name();
    j["loewy_length"] = c.a * c.n + 1;
    j["nonprojective_count"] = NakayamaAlgebra(c.a, c.n).nonprojective_count();
    j["budget"] = c.budget;
    auto rows = nlohmann::ordered_json::array();
    for (const auto& r : c.rows) {
        nlohmann::ordered_json row;
        row["d"] = r.d;
        if (numeric) {
            row["condition_a"] = r.condition_a;
            row["condition_b"] = r.condition_b;
            row["numeric"] = r.numeric;
            row["theorem"] = r.predicate;
        }
        if (bruteforce) {
            row["bruteforce_status"] = r.bruteforce_attempted ? "complete" : "not attempted";
            row["bruteforce"] = r.bruteforce ? nlohmann::ordered_json(*r.bruteforce) : nullptr;
            row["set_count"] = r.set_count;
            auto certs = nlohmann::ordered_json::array();
            for (const auto& cert : r.certificates) certs.push_back(to_json(cert));
            row["certificates"] = certs;
        }
        rows.push_back(row);
    }
    j["rows"] = rows;
    return j;
}

} // namespace ctforge
