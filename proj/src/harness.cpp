#include "sumset/harness.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "sumset/error.hpp"

namespace sumset {

namespace {

constexpr std::uint64_t default_unit_size = 1024;

std::uint64_t mask_count(Integer b) { return std::uint64_t{1} << static_cast<unsigned>(b - 1); }

Integer lower_bound_for(const ScanConfig& config, const FiniteIntegerSet& A) {
    return std::max<Integer>(1, A.b() - A.ell() - config.delta);
}

bool passes_filter(const ScanConfig& config, const FiniteIntegerSet& A) {
    const Integer ell = A.ell();
    if (config.ell_min && ell < *config.ell_min) return false;
    if (config.ell_max && ell > *config.ell_max) return false;
    if (config.delta == 2 && (A.b() < 9 || ell < 5)) return false;
    return true;
}

struct UnitResult {
    std::uint64_t sets_scanned = 0;
    std::uint64_t skipped_gcd = 0;
    std::uint64_t skipped_filter = 0;
    std::vector<FailureRecord> failures;
    std::vector<MismatchRecord> mismatches;
    std::vector<NonMonotoneRecord> non_monotone;
    double elapsed_ms = 0;
};

void analyze_one(const ScanConfig& config, std::uint64_t mask, const FiniteIntegerSet& A, UnitResult& out) {
    const Integer b = A.b();
    StructureChecker checker(A);
    const ThresholdScan scan = threshold_scan(checker);
    const Integer lo = lower_bound_for(config, A);
    const bool failed = scan.threshold > lo;

    std::vector<FamilyLabel> labels;
    if (config.delta > 0) labels = classify_exceptional_family(A, config.delta);

    if (failed) {
        const Integer first = *std::find_if(scan.failing.begin(), scan.failing.end(), [&](Integer n) { return n >= lo; });
        const StructureReport report = checker.check(first, config.witness_cap);
        out.failures.push_back(
            {b, mask, A, first, report.missing_witnesses, report.missing_count, scan.threshold, labels});
    }
    if (scan.non_monotone) out.non_monotone.push_back({b, mask, A, scan.failing});

    if (config.delta == 0) {
        if (failed) {
            out.mismatches.push_back({b, mask, A, true, labels, "identity fails at some N >= max(1, b-ell)"});
        }
    } else if (failed != !labels.empty()) {
        out.mismatches.push_back({b, mask, A, failed, labels,
                                  failed ? "fails below the bound but matches no catalogued family"
                                         : "matches a catalogued family but never fails at or above the bound"});
    }
}

UnitResult run_unit(const ScanConfig& config, const WorkUnit& unit) {
    const auto start = std::chrono::steady_clock::now();
    UnitResult out;
    for (std::uint64_t mask = unit.mask_begin; mask < unit.mask_end; ++mask) {
        const auto A = set_from_mask(unit.b, mask);
        if (!A) {
            ++out.skipped_gcd;
            continue;
        }
        if (!passes_filter(config, *A)) {
            ++out.skipped_filter;
            continue;
        }
        ++out.sets_scanned;
        analyze_one(config, mask, *A, out);
    }
    out.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return out;
}

nlohmann::ordered_json labels_json(const std::vector<FamilyLabel>& labels) {
    auto out = nlohmann::ordered_json::array();
    for (const auto& label : labels) out.push_back(label.to_string());
    return out;
}

nlohmann::ordered_json set_json(const FiniteIntegerSet& A) {
    return nlohmann::ordered_json(std::vector<Integer>(A.elements().begin(), A.elements().end()));
}

std::string labels_field(const std::vector<FamilyLabel>& labels) {
    if (labels.empty()) return "none";
    std::string out;
    for (const auto& label : labels) {
        if (!out.empty()) out += ';';
        out += label.to_string();
    }
    return out;
}

}  // namespace

void ScanConfig::validate() const {
    if (b_min < 2 || b_min > b_max) throw InvalidArgument("scan: need 2 <= b_min <= b_max");
    if (b_max > max_enumerable_b) throw InvalidArgument("scan: b_max above " + std::to_string(max_enumerable_b));
    if (delta < 0 || delta > 2) throw InvalidArgument("scan: delta must be 0, 1 or 2");
    if (parallelism < 1) throw InvalidArgument("scan: parallelism must be at least 1");
    if (ell_min && ell_max && *ell_min > *ell_max) throw InvalidArgument("scan: ell_min > ell_max");
}

std::optional<FiniteIntegerSet> set_from_mask(Integer b, std::uint64_t mask) {
    std::vector<Integer> elements;
    elements.reserve(static_cast<std::size_t>(std::popcount(mask)) + 2);
    elements.push_back(0);
    Integer g = b;
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const Integer x = std::countr_zero(bits) + 1;
        elements.push_back(x);
        g = std::gcd(g, x);
    }
    if (g != 1) return std::nullopt;
    elements.push_back(b);
    return FiniteIntegerSet(std::move(elements));
}

std::vector<FiniteIntegerSet> enumerate_sets(Integer b, std::optional<Integer> ell_filter) {
    if (b < 2 || b > max_enumerable_b) throw InvalidArgument("enumerate_sets: b out of range");
    std::vector<FiniteIntegerSet> out;
    for (std::uint64_t mask = 0; mask < mask_count(b); ++mask) {
        if (ell_filter && std::popcount(mask) != *ell_filter) continue;
        if (auto A = set_from_mask(b, mask)) out.push_back(std::move(*A));
    }
    return out;
}

std::vector<WorkUnit> partition_work(Integer b, std::uint64_t unit_size) {
    if (b < 2 || b > max_enumerable_b) throw InvalidArgument("partition_work: b out of range");
    if (unit_size == 0) throw InvalidArgument("partition_work: unit size must be positive");
    std::vector<WorkUnit> units;
    const std::uint64_t total = mask_count(b);
    for (std::uint64_t begin = 0; begin < total; begin += unit_size) {
        units.push_back({b, begin, std::min(total, begin + unit_size)});
    }
    return units;
}

ScanResult scan_theorems(const ScanConfig& config) {
    config.validate();
    std::vector<WorkUnit> units;
    for (Integer b = config.b_min; b <= config.b_max; ++b) {
        auto more = partition_work(b, default_unit_size);
        units.insert(units.end(), more.begin(), more.end());
    }

    std::vector<UnitResult> results(units.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < units.size(); i = next++) results[i] = run_unit(config, units[i]);
    };
    const unsigned threads = std::min<unsigned>(config.parallelism, static_cast<unsigned>(units.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }

    // Units are already in (b, mask) order, so concatenation is the merge.
    ScanResult merged;
    merged.config = config;
    std::map<Integer, double> per_b;
    for (std::size_t i = 0; i < units.size(); ++i) {
        UnitResult& r = results[i];
        merged.sets_scanned += r.sets_scanned;
        merged.skipped_gcd += r.skipped_gcd;
        merged.skipped_filter += r.skipped_filter;
        std::move(r.failures.begin(), r.failures.end(), std::back_inserter(merged.failures));
        std::move(r.mismatches.begin(), r.mismatches.end(), std::back_inserter(merged.catalog_mismatches));
        std::move(r.non_monotone.begin(), r.non_monotone.end(), std::back_inserter(merged.non_monotone));
        per_b[units[i].b] += r.elapsed_ms;
    }
    merged.timing_ms.assign(per_b.begin(), per_b.end());
    return merged;
}

void require_consistent(const ScanResult& result) {
    if (result.consistent()) return;
    const MismatchRecord& first = result.catalog_mismatches.front();
    throw CatalogMismatch(std::to_string(result.catalog_mismatches.size()) + " catalog mismatch(es); first " +
                              first.set.to_string() + ": " + first.reason,
                          std::vector<Integer>(first.set.elements().begin(), first.set.elements().end()));
}

std::string render_json(const ScanResult& result, const ReportOptions& options) {
    using nlohmann::ordered_json;
    const ScanConfig& c = result.config;
    ordered_json config = {{"b_min", c.b_min},
                           {"b_max", c.b_max},
                           {"ell_min", c.ell_min ? ordered_json(*c.ell_min) : ordered_json(nullptr)},
                           {"ell_max", c.ell_max ? ordered_json(*c.ell_max) : ordered_json(nullptr)},
                           {"delta", c.delta},
                           {"witness_cap", c.witness_cap}};

    ordered_json failures = ordered_json::array();
    for (const auto& f : result.failures) {
        failures.push_back({{"b", f.b},
                            {"set", set_json(f.set)},
                            {"N", f.N},
                            {"threshold", f.threshold},
                            {"missing_count", f.missing_count},
                            {"witnesses", f.witnesses},
                            {"labels", labels_json(f.labels)}});
    }
    ordered_json mismatches = ordered_json::array();
    for (const auto& m : result.catalog_mismatches) {
        mismatches.push_back({{"b", m.b},
                              {"set", set_json(m.set)},
                              {"failed", m.failed},
                              {"labels", labels_json(m.labels)},
                              {"reason", m.reason}});
    }
    ordered_json non_monotone = ordered_json::array();
    for (const auto& n : result.non_monotone) {
        non_monotone.push_back({{"b", n.b}, {"set", set_json(n.set)}, {"failing", n.failing}});
    }
    ordered_json timing = ordered_json::object();
    if (options.include_timing) {
        for (const auto& [b, ms] : result.timing_ms) timing[std::to_string(b)] = ms;
    }

    ordered_json doc = {{"config", config},
                        {"sets_scanned", result.sets_scanned},
                        {"skipped_gcd", result.skipped_gcd},
                        {"skipped_filter", result.skipped_filter},
                        {"failures", failures},
                        {"catalog_mismatches", mismatches},
                        {"non_monotone", non_monotone},
                        {"timing", timing}};
    return doc.dump(2) + "\n";
}

std::string render_csv(const ScanResult& result) {
    std::ostringstream os;
    os << "b,set,N,first_witness,labels\n";
    for (const auto& f : result.failures) {
        os << f.b << ',' << f.set.to_string() << ',' << f.N << ',';
        if (!f.witnesses.empty()) os << f.witnesses.front();
        os << ',' << labels_field(f.labels) << '\n';
    }
    return os.str();
}

void emit_report(const ScanResult& result, ReportFormat format, const std::string& path,
                 const ReportOptions& options) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << (format == ReportFormat::Json ? render_json(result, options) : render_csv(result));
    out.flush();
    if (!out) throw IoError("failed writing " + path);
}

}  // namespace sumset
