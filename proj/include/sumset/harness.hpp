#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sumset/families.hpp"
#include "sumset/integer_set.hpp"
#include "sumset/verifier.hpp"

namespace sumset {

/// Which claim a scan checks.
///   0: the identity holds for every N >= max(1, b - ell).
///   1: it fails at some N >= max(1, b - ell - 1) iff A or b - A is in F1/F2.
///   2: for b >= 9, ell >= 5, it fails at some N >= max(1, b - ell - 2) iff
///      A or b - A is in F1/F2/G1..G4.
struct ScanConfig {
    Integer b_min = 2;
    Integer b_max = 10;
    std::optional<Integer> ell_min;
    std::optional<Integer> ell_max;
    int delta = 0;
    unsigned parallelism = 1;
    std::size_t witness_cap = default_witness_cap;

    /// Throws InvalidArgument.
    void validate() const;
};

/// Largest b the enumerator accepts (interior subsets are indexed by a 64-bit mask).
inline constexpr Integer max_enumerable_b = 62;

struct FailureRecord {
    Integer b;
    std::uint64_t mask;
    FiniteIntegerSet set;
    /// First failing N at or above the scan's lower bound.
    Integer N;
    std::vector<Integer> witnesses;
    Integer missing_count;
    Integer threshold;
    std::vector<FamilyLabel> labels;
};

struct MismatchRecord {
    Integer b;
    std::uint64_t mask;
    FiniteIntegerSet set;
    bool failed;
    std::vector<FamilyLabel> labels;
    std::string reason;
};

/// A set whose identity holds at some N and fails at a larger one.
struct NonMonotoneRecord {
    Integer b;
    std::uint64_t mask;
    FiniteIntegerSet set;
    std::vector<Integer> failing;
};

struct ScanResult {
    ScanConfig config;
    std::uint64_t sets_scanned = 0;
    std::uint64_t skipped_gcd = 0;
    std::uint64_t skipped_filter = 0;
    std::vector<FailureRecord> failures;
    std::vector<MismatchRecord> catalog_mismatches;
    std::vector<NonMonotoneRecord> non_monotone;
    /// Summed worker time per b, milliseconds.
    std::vector<std::pair<Integer, double>> timing_ms;

    [[nodiscard]] bool consistent() const noexcept { return catalog_mismatches.empty(); }
};

/// {0} u S u {b} for the interior subset S encoded by mask (bit i-1 <-> i),
/// or nullopt when its gcd is not 1.
std::optional<FiniteIntegerSet> set_from_mask(Integer b, std::uint64_t mask);

/// Every normalized set with largest element b, in increasing mask order,
/// optionally only those with exactly ell_filter interior elements.
std::vector<FiniteIntegerSet> enumerate_sets(Integer b, std::optional<Integer> ell_filter = std::nullopt);

/// A contiguous half-open range of interior masks for one b.
struct WorkUnit {
    Integer b;
    std::uint64_t mask_begin;
    std::uint64_t mask_end;
};

std::vector<WorkUnit> partition_work(Integer b, std::uint64_t unit_size);

/// Runs the scan. Catalog disagreements are reported in the result, not
/// thrown; see require_consistent.
ScanResult scan_theorems(const ScanConfig& config);

/// Throws CatalogMismatch carrying the first mismatched set.
void require_consistent(const ScanResult& result);

enum class ReportFormat { Json, Csv };

struct ReportOptions {
    /// Timing varies run to run, so it is off by default to keep reports
    /// byte-identical.
    bool include_timing = false;
};

std::string render_json(const ScanResult& result, const ReportOptions& options = {});
std::string render_csv(const ScanResult& result);

/// Writes the report. Throws IoError when the destination cannot be written.
void emit_report(const ScanResult& result, ReportFormat format, const std::string& path,
                 const ReportOptions& options = {});

}  // namespace sumset
