#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "reesmult/formulas.hpp"

namespace reesmult {

// A batch job: a ring, a named family of ideals, one command, and options.
// Commands: colength, mixed-mult, rees-mult, ext-rees-mult, katz-verma,
// identity-check, remark-check.
struct JobSpec {
    RingCtxPtr ring;
    std::vector<std::string> ideal_names;  // document order
    std::map<std::string, MonomialIdeal> ideals;

    std::string command;

    // Command arguments, all referring to ideal names.
    std::vector<std::string> arg_ideals;  // rees/ext/remark families, mixed companions,
                                          // identity companions, colength target
    std::string arg_primary;              // mixed-mult primary; katz-verma/identity J
    std::string arg_secondary;            // katz-verma/identity I
    std::string arg_extra;                // identity J1, empty when absent
    std::string identity_kind;            // pair-square, pair-first-power, multi-square,
                                          // tower-stage-one

    Mode mode = Mode::Verify;
    std::string format = "json";  // json | table
    ComputeOptions options;

    bool operator==(const JobSpec& o) const;
};

// Parses and fully validates a job document (JSON). Throws Error with codes
// ParseError, UnknownVariable, DuplicateIdealName, BadRequest. A document may
// omit "command" when the caller supplies one; if both are present they must
// match.
JobSpec parse_job(const std::string& text, const std::string& command_override = "");

// Canonical document for a spec; parse_job(render_job(s)) == s.
std::string render_job(const JobSpec& spec);

struct RunResult {
    nlohmann::ordered_json report;
    int exit_code;  // 0 success/agreement, 2 disagreement
};

// Executes the job. Throws Error on any failure (exit code 1 at the CLI).
// The report never mentions worker count or output format, so reruns with a
// different worker pool are byte-identical.
RunResult run_job(const JobSpec& spec);

// Renders a report as a JSON document or an aligned two-column table.
std::string render_report(const nlohmann::ordered_json& report, const std::string& format);

}  // namespace reesmult
