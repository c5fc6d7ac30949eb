#include "sumset/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <iomanip>
#include <ostream>
#include <set>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"
#include "sumset/error.hpp"
#include "sumset/families.hpp"
#include "sumset/harness.hpp"
#include "sumset/modular.hpp"
#include "sumset/sumset.hpp"
#include "sumset/verifier.hpp"

namespace sumset::cli {

namespace {

using nlohmann::ordered_json;

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\n\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\n\r");
    return s.substr(first, last - first + 1);
}

std::string join(std::span<const Integer> values, const char* sep = ",") {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i != 0) out += sep;
        out += std::to_string(values[i]);
    }
    return out;
}

std::string braced(std::span<const Integer> values) { return "{" + join(values) + "}"; }

ordered_json profile_json(const ExceptionalProfile& p) {
    std::vector<Integer> least;
    std::vector<Integer> summands;
    for (Integer a = 1; a < p.b; ++a) {
        least.push_back(p.least(a));
        summands.push_back(p.summands(a));
    }
    return {{"least", least}, {"summands", summands}, {"exceptional", p.exceptional}, {"n_star", p.n_star}};
}

std::vector<Integer> as_vector(const FiniteIntegerSet& A) { return {A.elements().begin(), A.elements().end()}; }

Normalization normalized_input(const std::string& literal, std::ostream& notice) {
    const std::vector<Integer> raw = parse_set_literal(literal);
    Normalization n = normalize(raw);
    if (n.g != 1 || n.tau != 0) {
        notice << "normalized input: g=" << n.g << " tau=" << n.tau << " -> " << n.set.to_string() << '\n';
    }
    return n;
}

unsigned default_jobs() {
    if (const char* env = std::getenv("SUMSET_JOBS")) {
        unsigned value = 0;
        const std::string_view text(env);
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec == std::errc() && ptr == text.data() + text.size() && value > 0) return value;
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

int run_analyze(const std::string& literal, std::optional<Integer> N_opt, bool json, std::ostream& out,
                std::ostream& err) {
    const Normalization n = normalized_input(literal, json ? err : out);
    const FiniteIntegerSet& A = n.set;
    StructureChecker checker(A);
    const ThresholdScan scan = threshold_scan(checker);
    const Integer N = N_opt.value_or(std::max<Integer>(1, A.b() - A.ell()));
    if (N < 1) throw InvalidArgument("--N must be positive");
    const StructureReport report = checker.check(N);
    const bool gs20 = gs20_all_N_criterion(checker.profile(), checker.reflected_profile());

    if (json) {
        const ordered_json doc = {{"g", n.g},
                                  {"tau", n.tau},
                                  {"set", as_vector(A)},
                                  {"b", A.b()},
                                  {"ell", A.ell()},
                                  {"reflected", as_vector(checker.reflected())},
                                  {"profile", profile_json(checker.profile())},
                                  {"reflected_profile", profile_json(checker.reflected_profile())},
                                  {"min_threshold", scan.threshold},
                                  {"gs20_all_N", gs20},
                                  {"structure",
                                   {{"N", report.N},
                                    {"holds", report.holds},
                                    {"missing_count", report.missing_count},
                                    {"witnesses", report.missing_witnesses},
                                    {"rhs_size", report.rhs_size}}}};
        out << doc.dump(2) << '\n';
        return ok;
    }

    const ExceptionalProfile& p = checker.profile();
    const ExceptionalProfile& q = checker.reflected_profile();
    out << "A = " << A.to_string() << "  (b = " << A.b() << ", ell = " << A.ell() << ")\n";
    out << "b-A = " << checker.reflected().to_string() << '\n';
    out << "E(A) = " << braced(p.exceptional) << '\n';
    out << "E(b-A) = " << braced(q.exceptional) << '\n';
    if (A.b() > 1) {
        out << std::setw(8) << "residue" << std::setw(10) << "n_a" << std::setw(10) << "N_a" << std::setw(14)
            << "n_{b-a,b-A}" << '\n';
        for (Integer a = 1; a < A.b(); ++a) {
            out << std::setw(8) << a << std::setw(10) << p.least(a) << std::setw(10) << p.summands(a) << std::setw(14)
                << q.least(A.b() - a) << '\n';
        }
    }
    out << "N_A* = " << p.n_star << '\n';
    out << "min_threshold = " << scan.threshold << '\n';
    out << "all-N criterion = " << (gs20 ? "true" : "false") << '\n';
    out << "structure at N = " << N << ": " << (report.holds ? "holds" : "fails") << " (|RHS| = " << report.rhs_size
        << ")\n";
    if (!report.holds) {
        out << "  missing " << report.missing_count << ": " << join(report.missing_witnesses, " ") << '\n';
    }
    return ok;
}

int run_scan(ScanConfig config, const std::string& out_path, const std::string& format, bool json, bool timing,
             std::ostream& out, std::ostream& err) {
    const ScanResult result = scan_theorems(config);
    const ReportOptions options{timing};
    if (!out_path.empty()) {
        emit_report(result, format == "csv" ? ReportFormat::Csv : ReportFormat::Json, out_path, options);
    }
    if (json) {
        out << render_json(result, options);
    } else {
        out << "scanned " << result.sets_scanned << " sets (b " << config.b_min << ".." << config.b_max
            << ", delta " << config.delta << "); skipped " << result.skipped_gcd << " by gcd, "
            << result.skipped_filter << " by filter\n";
        out << "failures: " << result.failures.size() << '\n';
        for (const auto& f : result.failures) {
            out << "  " << f.set.to_string() << " N=" << f.N << " threshold=" << f.threshold << " labels=";
            if (f.labels.empty()) out << "none";
            for (std::size_t i = 0; i < f.labels.size(); ++i) out << (i ? ";" : "") << f.labels[i].to_string();
            out << '\n';
        }
        out << "catalog mismatches: " << result.catalog_mismatches.size() << '\n';
        if (!result.non_monotone.empty()) out << "non-monotone sets: " << result.non_monotone.size() << '\n';
    }
    if (!result.consistent()) {
        for (const auto& m : result.catalog_mismatches) err << "mismatch: " << m.set.to_string() << ": " << m.reason << '\n';
        return theorem_contradicted;
    }
    return ok;
}

int run_classify(const std::string& literal, int delta, bool json, std::ostream& out, std::ostream& err) {
    const Normalization n = normalized_input(literal, json ? err : out);
    const auto labels = classify_exceptional_family(n.set, delta);
    const auto appendix = appendix_families(n.set);
    if (json) {
        ordered_json families = ordered_json::array();
        for (const auto& l : labels) families.push_back(l.to_string());
        ordered_json app = ordered_json::array();
        for (const auto& m : appendix) {
            app.push_back({{"label", m.label.to_string()}, {"claimed_threshold", m.claimed_threshold}});
        }
        out << ordered_json{{"set", as_vector(n.set)}, {"delta", delta}, {"families", families}, {"appendix", app}}.dump(2)
            << '\n';
        return ok;
    }
    out << "A = " << n.set.to_string() << '\n';
    out << "families (delta=" << delta << "):";
    if (labels.empty()) out << " none";
    for (const auto& l : labels) out << ' ' << l.to_string();
    out << '\n';
    out << "appendix:";
    if (appendix.empty()) out << " none";
    for (const auto& m : appendix) out << ' ' << m.label.to_string() << " threshold " << m.claimed_threshold;
    out << '\n';
    return ok;
}

int run_kneser(const std::string& literal, std::optional<Integer> k_max, std::ostream& out) {
    const Normalization n = normalized_input(literal, out);
    const FiniteIntegerSet& A = n.set;
    const ResidueSet B = reduce_mod_b(A);
    const GrowthProfile growth = growth_profile(B, k_max.value_or(A.b()));
    out << "B = " << braced(B.members()) << " in Z/" << A.b() << "Z  (ell = " << A.ell() << ")\n";
    out << std::setw(4) << "k" << std::setw(8) << "|kB|" << std::setw(12) << "|H(kB)|" << '\n';
    for (const auto& step : growth.steps()) {
        out << std::setw(4) << step.k << std::setw(8) << step.size << std::setw(12) << step.stabilizer.order() << '\n';
    }
    out << "saturation at k = " << growth.saturation_step() << '\n';
    for (Integer delta = 0; delta <= 2; ++delta) out << "smallest_K(" << delta << ") = " << growth.smallest_K(delta) << '\n';
    if (A.ell() >= 2) {
        const DoublingClassification cls = small_doubling_classify(A);
        out << "|2B| = " << cls.doubling << "; small-doubling family:";
        if (cls.matches.empty()) out << " none";
        for (const auto& m : cls.matches) out << ' ' << to_string(m.family) << "(h=" << m.h << ')';
        out << '\n';
    } else {
        out << "small-doubling family: n/a (ell < 2)\n";
    }
    return ok;
}

}  // namespace

std::vector<Integer> parse_set_literal(std::string_view text) {
    std::string_view body = trim(text);
    if (body.size() >= 2 && body.front() == '{' && body.back() == '}') body = trim(body.substr(1, body.size() - 2));
    if (body.empty()) throw MalformedSet("empty set literal");

    std::vector<Integer> values;
    while (true) {
        const auto comma = body.find(',');
        const std::string_view token = trim(body.substr(0, comma));
        Integer value = 0;
        const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
            throw MalformedSet("bad element '" + std::string(token) + "' in set literal '" + std::string(text) + "'");
        }
        values.push_back(value);
        if (comma == std::string_view::npos) break;
        body = body.substr(comma + 1);
    }
    std::set<Integer> distinct(values.begin(), values.end());
    if (distinct.size() != values.size()) throw MalformedSet("duplicate elements in '" + std::string(text) + "'");
    if (values.size() < 2) throw MalformedSet("a set needs at least two elements");
    return values;
}

int execute(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Structure of N-fold sumsets of finite integer sets", "sumset"};
    app.require_subcommand(1);

    std::string literal;
    bool json = false;

    auto* analyze = app.add_subcommand("analyze", "Exceptional sets, thresholds and the structure identity for one set");
    std::optional<Integer> analyze_N;
    analyze->add_option("set", literal, "Set literal, e.g. 0,3,5")->required();
    analyze->add_option("--N", analyze_N, "Check the identity at this N (default max(1, b-ell))");
    analyze->add_flag("--json", json, "Emit a JSON analysis object");

    auto* scan = app.add_subcommand("scan", "Exhaustive verification over all normalized sets");
    ScanConfig config;
    std::optional<unsigned> jobs;
    std::string out_path;
    std::string format = "json";
    bool timing = false;
    std::optional<Integer> ell_min;
    std::optional<Integer> ell_max;
    scan->add_option("--bmin", config.b_min, "Smallest b")->capture_default_str();
    scan->add_option("--bmax", config.b_max, "Largest b")->required();
    scan->add_option("--delta", config.delta, "0: bound b-ell; 1: b-ell-1 vs F1/F2; 2: b-ell-2 vs F1/F2/G1-G4")
        ->check(CLI::Range(0, 2))
        ->capture_default_str();
    scan->add_option("--ell-min", ell_min, "Only sets with at least this many interior elements");
    scan->add_option("--ell-max", ell_max, "Only sets with at most this many interior elements");
    scan->add_option("--jobs", jobs, "Worker threads (fallback: SUMSET_JOBS, then hardware)");
    scan->add_option("--witness-cap", config.witness_cap, "Witnesses kept per failure")->capture_default_str();
    scan->add_option("--out", out_path, "Write the report here");
    scan->add_option("--format", format, "Report format for --out")->check(CLI::IsMember({"json", "csv"}));
    scan->add_flag("--json", json, "Print the JSON report to stdout");
    scan->add_flag("--timing", timing, "Include per-b timing in JSON reports");

    auto* classify = app.add_subcommand("classify", "Exceptional-family labels and appendix thresholds");
    int delta = 1;
    classify->add_option("set", literal, "Set literal")->required();
    classify->add_option("--delta", delta, "1 or 2")->check(CLI::Range(1, 2))->capture_default_str();
    classify->add_flag("--json", json, "Emit JSON");

    auto* kneser = app.add_subcommand("kneser", "Growth of kB in Z/bZ and small-doubling classification");
    std::optional<Integer> k_max;
    kneser->add_option("set", literal, "Set literal")->required();
    kneser->add_option("--kmax", k_max, "Rows to print (default b)");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? ok : usage_error;
    }

    try {
        if (*analyze) return run_analyze(literal, analyze_N, json, out, err);
        if (*scan) {
            config.ell_min = ell_min;
            config.ell_max = ell_max;
            config.parallelism = jobs.value_or(default_jobs());
            return run_scan(config, out_path, format, json, timing, out, err);
        }
        if (*classify) return run_classify(literal, delta, json, out, err);
        if (*kneser) return run_kneser(literal, k_max, out);
    } catch (const MalformedSet& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const DegenerateSet& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const InvalidArgument& e) {
        err << "error: " << e.what() << '\n';
        return usage_error;
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return io_failure;
    } catch (const CatalogMismatch& e) {
        err << "error: " << e.what() << '\n';
        return theorem_contradicted;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return internal_failure;
    }
    return usage_error;
}

}  // namespace sumset::cli
