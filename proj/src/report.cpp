#include "ckalg/report.hpp"

#include <algorithm>
#include <sstream>

namespace ckalg {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

size_t Report::fail_count() const {
    return size_t(std::count_if(checks.begin(), checks.end(),
                                [](const CheckResult& c) { return !c.pass; }));
}

void Report::merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
}

void Report::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.check_id < b.check_id; });
}

Json Report::to_json() const {
    Json j;
    j["presentation"] = presentation;
    Json arr = Json::array();
    for (const auto& c : checks) {
        Json cj;
        cj["check_id"] = c.check_id;
        cj["status"] = c.pass ? "PASS" : "FAIL";
        if (c.counterexample) {
            Json ce;
            ce["lhs"] = c.counterexample->lhs;
            ce["rhs"] = c.counterexample->rhs;
            ce["diff"] = c.counterexample->diff;
            cj["counterexample"] = std::move(ce);
        } else {
            cj["counterexample"] = nullptr;
        }
        arr.push_back(std::move(cj));
    }
    j["checks"] = std::move(arr);
    return j;
}

std::string Report::summary() const {
    std::ostringstream os;
    size_t fails = fail_count();
    os << checks.size() << " checks, " << fails << " failed";
    for (const auto& c : checks)
        if (!c.pass) os << "\n  FAIL " << c.check_id;
    return os.str();
}

Json presentation_descriptor(const Presentation& p) {
    Json j;
    j["N"] = p.dim;
    Json om = Json::array();
    for (const auto& w : p.omega) om.push_back(rat_to_string(w));
    j["omega"] = std::move(om);
    j["basis"] = p.basis == BasisKind::Old ? "old" : "new";
    j["split"] = p.split;
    j["mode"] = p.mode == kExact ? std::string("exact")
                                 : "truncated(" + std::to_string(p.mode) + ")";
    switch (p.kind) {
        case PresentationKind::CayleyKlein: j["kind"] = "cayley-klein"; break;
        case PresentationKind::HeisenbergWeyl: j["kind"] = "heisenberg-weyl"; break;
        case PresentationKind::DualHeisenbergWeyl: j["kind"] = "dual-heisenberg-weyl"; break;
    }
    return j;
}

namespace {

bool fail(std::string* err, const std::string& msg) {
    if (err) *err = msg;
    return false;
}

bool validate_one(const Json& j, std::string* err) {
    if (!j.is_object()) return fail(err, "report must be an object");
    if (!j.contains("presentation") || !j["presentation"].is_object())
        return fail(err, "missing presentation block");
    const Json& p = j["presentation"];
    for (const char* key : {"N", "omega", "basis", "split", "mode"})
        if (!p.contains(key)) return fail(err, std::string("presentation missing ") + key);
    if (!p["N"].is_number_integer() || !p["split"].is_number_integer())
        return fail(err, "N and split must be integers");
    if (!p["omega"].is_array()) return fail(err, "omega must be an array");
    for (const auto& w : p["omega"])
        if (!w.is_string()) return fail(err, "omega entries must be rational strings");
    if (!p["basis"].is_string() || (p["basis"] != "old" && p["basis"] != "new"))
        return fail(err, "basis must be old|new");
    if (!p["mode"].is_string()) return fail(err, "mode must be a string");
    if (!j.contains("checks") || !j["checks"].is_array()) return fail(err, "missing checks array");
    for (const auto& c : j["checks"]) {
        if (!c.is_object()) return fail(err, "check must be an object");
        if (!c.contains("check_id") || !c["check_id"].is_string())
            return fail(err, "check_id must be a string");
        if (!c.contains("status") || (c["status"] != "PASS" && c["status"] != "FAIL"))
            return fail(err, "status must be PASS|FAIL");
        if (!c.contains("counterexample")) return fail(err, "missing counterexample field");
        const Json& ce = c["counterexample"];
        if (c["status"] == "PASS" && !ce.is_null())
            return fail(err, "PASS carries no counterexample");
        if (!ce.is_null()) {
            if (!ce.is_object()) return fail(err, "counterexample must be null or object");
            for (const char* key : {"lhs", "rhs", "diff"})
                if (!ce.contains(key)) return fail(err, "counterexample missing lhs/rhs/diff");
        }
    }
    return true;
}

}  // namespace

bool validate_report_json(const Json& j, std::string* err) {
    if (j.is_array()) {
        for (const auto& r : j)
            if (!validate_one(r, err)) return false;
        return true;
    }
    return validate_one(j, err);
}

}  // namespace ckalg
