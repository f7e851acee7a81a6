// Suite driver shared by the command line tool and the tests: expands the
// run configuration into presentations, runs the selected suites and
// collects canonical reports.
#pragma once

#include "ckalg/presentation.hpp"
#include "ckalg/report.hpp"

#include <set>
#include <string>
#include <vector>

namespace ckalg {

struct RunConfig {
    int N = 3;
    std::vector<Rat> omega;             // omega_2..omega_N
    BasisKind basis = BasisKind::Old;
    std::optional<int> split;           // nullopt = "auto": a = 1 plus every a with omega_a = 0
    bool truncated = false;
    int trunc_order = 4;
    std::set<std::string> suites{"confluence", "hopf"};
    bool resolve_variants = false;
    unsigned threads = 0;
    std::string output;                 // report path; empty = stdout only

    int mode() const { return truncated ? trunc_order : kExact; }
    std::vector<int> splits() const;    // expanded split list
};

std::vector<Rat> parse_omega(const std::string& csv);

// Runs the selected suites; one report per split for the CK suites plus
// standalone reports for hw/dual.  Returns the reports in canonical order.
std::vector<Report> run_verify(const RunConfig& cfg);

bool all_pass(const std::vector<Report>& reports);
Json reports_to_json(const std::vector<Report>& reports);

// Table export for one presentation.
Json tables_json(const PresPtr& p);
std::string tables_latex(const PresPtr& p);

}  // namespace ckalg
