#pragma once

#include "particover/groupspec.hpp"
#include "particover/resultio.hpp"
#include "particover/solver.hpp"

#include <optional>
#include <string>
#include <vector>

namespace particover {

struct ComputeOptions {
    bool want_sigma = true;
    bool want_rho = true;
    double budget_seconds = 60.0; // per value
    int threads = 0;              // 0 = all hardware threads
    bool exact_only = false;      // reject interval outcomes
};

struct ComputeOutcome {
    ResultRecord record;
    // Member element-id lists behind record.cert_digest (sidecar payload);
    // empty when no certificate backs the record.
    std::vector<std::vector<int>> cert_parts;
    std::vector<std::string> notes; // assembly trace for the human report
};

// Fills a ResultRecord for the spec, preferring closed forms, then
// construction certificates for upper bounds, then search for exactness.
// Routes are cross-checked against each other: any contradiction throws
// std::runtime_error whose message starts with "FATAL consistency".
// std::invalid_argument: no route applies (e.g. element-level Suzuki).
// std::runtime_error: budget expired before any usable bound, or
// exact_only was set and only an interval was achieved.
ComputeOutcome compute_result(const GroupSpec& spec, const ComputeOptions& opt);

// Merges one quantity's closed-form value with its search outcome (null when
// the search did not run). Exposed separately so the contradiction handling
// is directly testable.
struct Reconciled {
    ValueEntry value;
    std::string source;
};
Reconciled reconcile_sigma(const std::optional<long long>& formula, const SigmaResult* search);
Reconciled reconcile_rho(const std::optional<long long>& formula,
                         const std::optional<long long>& construction_size,
                         const RhoResult* search);

// Reference-table reproduction: every published value the toolkit can check,
// one row per group, PASS / FAIL / INTERVAL per cell. INTERVAL means the
// toolkit only bracketed the expected value (never silently accepted).
struct TableCell {
    std::string spec;
    std::string quantity; // "sigma" | "rho"
    ValueEntry expected;
    ValueEntry got;
    std::string status; // "PASS" | "FAIL" | "INTERVAL"
    std::string note;
};

struct TableReport {
    std::vector<TableCell> cells;
    bool any_fail = false;
};

TableReport run_reference_table(const ComputeOptions& opt);

} // namespace particover
