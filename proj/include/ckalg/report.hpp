// Structured verification results.  Reports are deterministic: checks are
// kept sorted by check id and serialize to byte-identical JSON.
#pragma once

#include "ckalg/presentation.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace ckalg {

using Json = nlohmann::ordered_json;

struct Counterexample {
    Json lhs;
    Json rhs;
    Json diff;
};

struct CheckResult {
    std::string check_id;
    bool pass = true;
    std::optional<Counterexample> counterexample;

    static CheckResult ok(std::string id) { return {std::move(id), true, std::nullopt}; }
    static CheckResult fail(std::string id, Counterexample ce) {
        return {std::move(id), false, std::move(ce)};
    }
};

struct Report {
    Json presentation;  // descriptor block
    std::vector<CheckResult> checks;

    bool all_pass() const;
    size_t fail_count() const;
    void add(CheckResult r) { checks.push_back(std::move(r)); }
    void merge(Report other);
    void sort_checks();

    Json to_json() const;           // canonical: checks sorted by id
    std::string summary() const;    // one line per failing check plus totals
};

Json presentation_descriptor(const Presentation& p);

// Minimal structural validation against schema/report.schema.json.
bool validate_report_json(const Json& j, std::string* error = nullptr);

}  // namespace ckalg
