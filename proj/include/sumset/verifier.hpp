#pragma once

#include <cstddef>
#include <vector>

#include "sumset/integer_set.hpp"
#include "sumset/modular.hpp"
#include "sumset/sumset.hpp"

namespace sumset {

inline constexpr std::size_t default_witness_cap = 64;

/// Outcome of comparing NA with {0..bN} \ (E(A) u (bN - E(b-A))).
struct StructureReport {
    FiniteIntegerSet set;
    Integer N;
    bool holds;
    /// Smallest elements of RHS \ NA, at most witness_cap of them.
    std::vector<Integer> missing_witnesses;
    /// |RHS \ NA|, uncapped.
    Integer missing_count;
    Integer rhs_size;
};

/// Checks the structure identity for one normalized set at many N.
///
/// Owns the profiles of A and b - A and a sumset ladder, so checking N in
/// increasing order costs one ladder step per N.
class StructureChecker {
  public:
    explicit StructureChecker(FiniteIntegerSet A);

    [[nodiscard]] const FiniteIntegerSet& set() const noexcept { return set_; }
    [[nodiscard]] const FiniteIntegerSet& reflected() const noexcept { return reflected_; }
    [[nodiscard]] const ExceptionalProfile& profile() const noexcept { return profile_; }
    [[nodiscard]] const ExceptionalProfile& reflected_profile() const noexcept { return reflected_profile_; }

    /// The right-hand side at N, built class by class from the progressions
    /// n_{a,A} <= n <= bN - n_{b-a,b-A}, n = a mod b, plus the multiples of b.
    [[nodiscard]] ReachabilityMask expected(Integer N) const;

    /// Throws InternalError if NA is not contained in the right-hand side.
    StructureReport check(Integer N, std::size_t witness_cap = default_witness_cap);

    /// max(1, b - ell, N_A*): above this the identity is settled.
    [[nodiscard]] Integer scan_limit() const noexcept;

  private:
    FiniteIntegerSet set_;
    FiniteIntegerSet reflected_;
    ExceptionalProfile profile_;
    ExceptionalProfile reflected_profile_;
    SumsetLadder ladder_;
};

StructureReport check_structure(const FiniteIntegerSet& A, Integer N, std::size_t witness_cap = default_witness_cap);

struct ThresholdScan {
    /// Least N0 >= 1 such that the identity holds for every N >= N0.
    Integer threshold;
    Integer scan_limit;
    /// Every N in [1, scan_limit] where the identity fails, ascending.
    std::vector<Integer> failing;
    /// Some N holds while a larger N fails.
    bool non_monotone;
};

/// Checks every N in [1, scan_limit]. Above max(b - ell, N_A*) the identity
/// is monotone, so the last failure fixes the threshold.
ThresholdScan threshold_scan(StructureChecker& checker);
ThresholdScan threshold_scan(const FiniteIntegerSet& A);
Integer min_threshold(const FiniteIntegerSet& A);

/// N_{a,A} * b == n_{a,A} + n_{b-a,b-A} for every a in [1, b-1].
bool gs20_all_N_criterion(const FiniteIntegerSet& A);
bool gs20_all_N_criterion(const ExceptionalProfile& profile, const ExceptionalProfile& reflected_profile);

struct Lemma1Outcome {
    Integer kB_size;
    /// |kB| >= b - N_{a,A}.
    bool hypothesis_met;
    /// max(1, 2k + b - |kB| - 1).
    Integer N;
    /// n_{a,A} + (k-1)b.
    Integer target;
    /// target in NA. Only meaningful when hypothesis_met.
    bool member;

    /// False only for a counterexample: hypothesis met, conclusion not.
    [[nodiscard]] bool value() const noexcept { return !hypothesis_met || member; }
};

/// Evaluates the placement lemma for one set across many (a, k), caching the
/// sumset levels it needs.
class Lemma1Probe {
  public:
    explicit Lemma1Probe(FiniteIntegerSet A);

    Lemma1Outcome evaluate(Integer a, Integer k);

  private:
    FiniteIntegerSet set_;
    ExceptionalProfile profile_;
    GrowthProfile growth_;
    SumsetLadder ladder_;
    std::vector<ReachabilityMask> levels_;  // levels_[N] = NA
};

Lemma1Outcome lemma1_predicate(const FiniteIntegerSet& A, Integer a, Integer k);

}  // namespace sumset
