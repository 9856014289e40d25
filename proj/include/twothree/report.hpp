#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace twothree {

// Machine-readable command outcome.  Numeric parameters and big results are
// carried as decimal strings so arbitrary-precision values round-trip.
struct CommandReport {
    enum class Status { Ok, Fail, Error };

    std::string command;
    std::map<std::string, std::string> params;
    Status status = Status::Ok;
    std::vector<nlohmann::json> results;
    std::int64_t elapsed_ms = 0;

    static const char* status_name(Status s) {
        switch (s) {
            case Status::Ok: return "ok";
            case Status::Fail: return "fail";
            case Status::Error: return "error";
        }
        return "?";
    }

    static Status status_from_name(const std::string& name) {
        if (name == "ok") return Status::Ok;
        if (name == "fail") return Status::Fail;
        if (name == "error") return Status::Error;
        throw std::invalid_argument("CommandReport: unknown status " + name);
    }

    // exit code is a pure function of the status
    int exit_code() const {
        switch (status) {
            case Status::Ok: return 0;
            case Status::Fail: return 1;
            case Status::Error: return 2;
        }
        return 2;
    }

    // status = ok iff no result carries "ok": false
    void set_status_from_results() {
        status = Status::Ok;
        for (const nlohmann::json& r : results) {
            if (r.is_object() && r.contains("ok") && r["ok"].is_boolean() &&
                !r["ok"].get<bool>()) {
                status = Status::Fail;
                return;
            }
        }
    }

    nlohmann::json to_json() const {
        nlohmann::json doc;
        doc["command"] = command;
        doc["params"] = nlohmann::json::object();
        for (const auto& [key, value] : params) doc["params"][key] = value;
        doc["status"] = status_name(status);
        doc["results"] = nlohmann::json::array();
        for (const nlohmann::json& r : results) doc["results"].push_back(r);
        doc["elapsed_ms"] = elapsed_ms;
        return doc;
    }

    static CommandReport from_json(const nlohmann::json& doc) {
        CommandReport report;
        report.command = doc.at("command").get<std::string>();
        for (const auto& [key, value] : doc.at("params").items())
            report.params[key] = value.get<std::string>();
        report.status = status_from_name(doc.at("status").get<std::string>());
        for (const nlohmann::json& r : doc.at("results")) report.results.push_back(r);
        report.elapsed_ms = doc.at("elapsed_ms").get<std::int64_t>();
        return report;
    }

    friend bool operator==(const CommandReport& a, const CommandReport& b) {
        return a.command == b.command && a.params == b.params && a.status == b.status &&
               a.results == b.results && a.elapsed_ms == b.elapsed_ms;
    }
};

}  // namespace twothree
