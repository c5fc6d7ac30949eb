#include "sumset/verifier.hpp"

#include <algorithm>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

namespace {

FiniteIntegerSet checked(FiniteIntegerSet A, const char* op) {
    require_normalized(A, op);
    return A;
}

}  // namespace

StructureChecker::StructureChecker(FiniteIntegerSet A)
    : set_(checked(std::move(A), "check_structure")),
      reflected_(reflect(set_)),
      profile_(exceptional_profile(set_)),
      reflected_profile_(exceptional_profile(reflected_)),
      ladder_(set_) {}

ReachabilityMask StructureChecker::expected(Integer N) const {
    const Integer b = set_.b();
    const Integer top = b * N;
    DynamicBitset bits(static_cast<std::size_t>(top + 1));
    for (Integer n = 0; n <= top; n += b) bits.set(static_cast<std::size_t>(n));
    for (Integer a = 1; a < b; ++a) {
        const Integer last = top - reflected_profile_.least(b - a);
        for (Integer n = profile_.least(a); n <= last; n += b) bits.set(static_cast<std::size_t>(n));
    }
    return ReachabilityMask(top, std::move(bits));
}

StructureReport StructureChecker::check(Integer N, std::size_t witness_cap) {
    if (N < 1) throw InvalidArgument("check_structure: N must be positive");
    if (N < ladder_.level()) ladder_ = SumsetLadder(set_);
    ladder_.advance_to(N);
    const ReachabilityMask& actual = ladder_.current();
    const ReachabilityMask rhs = expected(N);

    if (!actual.bits().is_subset_of(rhs.bits())) {
        throw InternalError("check_structure: NA escapes {0..bN} \\ (E(A) u (bN - E(b-A))) for " + set_.to_string() +
                            " at N = " + std::to_string(N));
    }
    const DynamicBitset missing = rhs.bits().minus(actual.bits());
    StructureReport report{set_, N, missing.none(), {}, static_cast<Integer>(missing.count()),
                           static_cast<Integer>(rhs.count())};
    for (std::size_t i = missing.find_first(); i != DynamicBitset::npos && report.missing_witnesses.size() < witness_cap;
         i = missing.find_next_from(i + 1)) {
        report.missing_witnesses.push_back(static_cast<Integer>(i));
    }
    return report;
}

Integer StructureChecker::scan_limit() const noexcept {
    return std::max({Integer{1}, set_.b() - set_.ell(), profile_.n_star});
}

StructureReport check_structure(const FiniteIntegerSet& A, Integer N, std::size_t witness_cap) {
    StructureChecker checker(A);
    return checker.check(N, witness_cap);
}

ThresholdScan threshold_scan(StructureChecker& checker) {
    const Integer limit = checker.scan_limit();
    ThresholdScan scan{1, limit, {}, false};
    if (checker.set().ell() == checker.set().b() - 1) return scan;

    bool seen_hold = false;
    for (Integer N = 1; N <= limit; ++N) {
        if (checker.check(N, 0).holds) {
            seen_hold = true;
        } else {
            scan.failing.push_back(N);
            if (seen_hold) scan.non_monotone = true;
        }
    }
    if (!scan.failing.empty()) scan.threshold = scan.failing.back() + 1;
    return scan;
}

ThresholdScan threshold_scan(const FiniteIntegerSet& A) {
    StructureChecker checker(A);
    return threshold_scan(checker);
}

Integer min_threshold(const FiniteIntegerSet& A) { return threshold_scan(A).threshold; }

bool gs20_all_N_criterion(const ExceptionalProfile& profile, const ExceptionalProfile& reflected_profile) {
    const Integer b = profile.b;
    for (Integer a = 1; a < b; ++a) {
        if (profile.summands(a) * b != profile.least(a) + reflected_profile.least(b - a)) return false;
    }
    return true;
}

bool gs20_all_N_criterion(const FiniteIntegerSet& A) {
    require_normalized(A, "gs20_all_N_criterion");
    return gs20_all_N_criterion(exceptional_profile(A), exceptional_profile(reflect(A)));
}

Lemma1Probe::Lemma1Probe(FiniteIntegerSet A)
    : set_(checked(std::move(A), "lemma1_predicate")),
      profile_(exceptional_profile(set_)),
      growth_(reduce_mod_b(set_), 1),
      ladder_(set_) {
    levels_.push_back(ladder_.current());
}

Lemma1Outcome Lemma1Probe::evaluate(Integer a, Integer k) {
    const Integer b = set_.b();
    if (a < 1 || a >= b) throw InvalidResidue("lemma1_predicate: residue " + std::to_string(a) + " outside [1, b-1]");
    if (k < 1) throw InvalidArgument("lemma1_predicate: k must be positive");

    Lemma1Outcome out{};
    out.kB_size = growth_.size_at(k);
    out.hypothesis_met = out.kB_size >= b - profile_.summands(a);
    out.N = std::max<Integer>(1, 2 * k + b - out.kB_size - 1);
    out.target = profile_.least(a) + (k - 1) * b;
    if (!out.hypothesis_met) return out;

    while (ladder_.level() < out.N) {
        ladder_.advance();
        levels_.push_back(ladder_.current());
    }
    out.member = levels_[static_cast<std::size_t>(out.N)].contains(out.target);
    return out;
}

Lemma1Outcome lemma1_predicate(const FiniteIntegerSet& A, Integer a, Integer k) {
    Lemma1Probe probe(A);
    return probe.evaluate(a, k);
}

}  // namespace sumset
