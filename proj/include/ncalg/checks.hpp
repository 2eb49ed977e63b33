#pragma once

#include <functional>
#include <string>
#include <vector>

namespace ncalg {

enum class CheckStatus { Pass, Fail, Report };

std::string status_name(CheckStatus s);

struct CheckReport {
    std::string id;
    std::string paper_ref;
    CheckStatus status = CheckStatus::Fail;
    std::vector<std::string> details;
    double wall_time_ms = 0.0;
};

struct CheckOutcome {
    bool ok = false;
    std::vector<std::string> details;
};

struct CheckDescriptor {
    std::string id;
    std::string paper_ref;
    bool report_only = false; // outcome is data, never pass/fail
    std::function<CheckOutcome()> runner;
};

const std::vector<CheckDescriptor> &check_registry();

// Shell-style '*' globbing on ids; "all" selects everything.
bool glob_match(const std::string &pattern, const std::string &text);
std::vector<std::string> matching_check_ids(const std::string &pattern);

// Runs the selected checks, up to `jobs` concurrently, and returns the
// reports sorted by id. A crashed runner becomes a Fail with the
// exception text in details.
std::vector<CheckReport> run_checks(const std::string &pattern, int jobs = 0);

// The elected coproduct convention, for the JSON header.
std::string elected_convention_name();

std::string reports_to_json(const std::vector<CheckReport> &reports, int json_indent = 2);
std::string reports_to_text(const std::vector<CheckReport> &reports);

bool any_failure(const std::vector<CheckReport> &reports);

} // namespace ncalg
