#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pluck/combinat.hpp"
#include "pluck/crs.hpp"

namespace pluck {

struct SweepOptions {
    int max_weight = 6;
    /// Check every distinct removal order instead of only min against max.
    bool all_pivots = false;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
    /// Integrality is checked for d in [|lambda|, |lambda| + integrality_span].
    int integrality_span = 10;
};

/// The checks a sweep runs, in report order.
enum class Check {
    Divisibility,
    PivotIndependence,
    ClosedForm,
    TopDegree,
    Degree,
    LeadingTerm,
    Positivity,
    ProductLeadingI,
    ProductLeadingII,
    Integrality,
};

inline constexpr int kCheckCount = 10;

const char* check_name(Check c);

struct Witness {
    std::string partition;
    std::string check;
    std::string expected;
    std::string got;
};

struct CheckSummary {
    Check check;
    std::size_t applicable = 0;
    std::size_t passed = 0;
};

struct SweepReport {
    int max_weight = 0;
    bool all_pivots = false;
    std::size_t partitions = 0;
    std::vector<CheckSummary> checks;
    /// First failure in enumeration order, if any.
    std::optional<Witness> witness;
    /// Work counters; they depend on how threads interleave on the shared
    /// cache, so the renderers leave them out.
    std::uint64_t recursion_steps = 0;
    std::uint64_t divisibility_checks = 0;

    [[nodiscard]] bool ok() const { return !witness.has_value(); }
    [[nodiscard]] const CheckSummary& summary(Check c) const;
};

/// Outcome of one check on one partition; not_applicable when the check
/// has nothing to say about lambda (e.g. the closed form for length > 1).
struct CheckOutcome {
    Check check;
    bool applicable = true;
    bool passed = true;
    std::string expected;
    std::string got;
};

/// All checks for a single partition.
std::vector<CheckOutcome> check_partition(const InputPartition& lambda, const SweepOptions& options, ClassCache& cache);

/// Runs check_partition over every partition without 1's of weight <= max_weight.
/// Output is independent of the thread count.
SweepReport run_sweep(const SweepOptions& options, ClassCache& cache);

std::string report_to_plain(const SweepReport& report);
nlohmann::json report_to_json(const SweepReport& report);
std::string report_to_latex(const SweepReport& report);

}  // namespace pluck
