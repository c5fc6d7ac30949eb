#pragma once

#include <vector>

#include "sumset/bitset.hpp"
#include "sumset/integer_set.hpp"

namespace sumset {

/// Membership flags for the integers in [0, bound].
class ReachabilityMask {
  public:
    explicit ReachabilityMask(Integer bound);
    ReachabilityMask(Integer bound, DynamicBitset bits);

    [[nodiscard]] Integer bound() const noexcept { return bound_; }
    [[nodiscard]] bool contains(Integer n) const noexcept {
        return n >= 0 && n <= bound_ && bits_.test(static_cast<std::size_t>(n));
    }
    [[nodiscard]] std::size_t count() const noexcept { return bits_.count(); }
    [[nodiscard]] std::vector<Integer> members() const;
    [[nodiscard]] const DynamicBitset& bits() const noexcept { return bits_; }

    friend bool operator==(const ReachabilityMask&, const ReachabilityMask&) = default;

  private:
    Integer bound_;
    DynamicBitset bits_;
};

/// Walks NA for N = 0, 1, 2, ... Each step unions |A| shifted copies of the
/// previous level, so the cost of reaching level N is O(|A| * bN^2 / 64).
class SumsetLadder {
  public:
    /// Starts at level 0, i.e. the mask {0}.
    explicit SumsetLadder(FiniteIntegerSet A);

    [[nodiscard]] Integer level() const noexcept { return level_; }
    [[nodiscard]] const ReachabilityMask& current() const noexcept { return mask_; }
    [[nodiscard]] const FiniteIntegerSet& set() const noexcept { return set_; }

    void advance();
    void advance_to(Integer N);

  private:
    FiniteIntegerSet set_;
    Integer level_ = 0;
    ReachabilityMask mask_;
};

/// NA over [0, bN]. N >= 1.
ReachabilityMask n_fold_sumset(const FiniteIntegerSet& A, Integer N);

/// P(A) intersected with [0, bound], by a plain unbounded-knapsack sweep.
ReachabilityMask semigroup_reachability(const FiniteIntegerSet& A, Integer bound);

/// Per-residue invariants of a normalized set A with largest element b.
///
/// For a in [1, b-1]: least(a) is the smallest positive element of P(A)
/// congruent to a mod b, and summands(a) is the fewest elements of A summing
/// to it. exceptional is E(A), the positive integers outside P(A), sorted.
/// n_star is the maximum of summands(a) (0 when b = 1).
struct ExceptionalProfile {
    Integer b = 1;
    std::vector<Integer> least_table;     // index 0 unused
    std::vector<Integer> summands_table;  // index 0 unused
    std::vector<Integer> exceptional;
    Integer n_star = 0;

    [[nodiscard]] Integer least(Integer a) const;
    [[nodiscard]] Integer summands(Integer a) const;
};

/// Computes n_{a,A} and N_{a,A} for every nonzero residue.
///
/// Minimal representations never use the summand b and never pass through
/// residue 0, so they are exactly the shortest paths from 0 in the residue
/// graph mod b with an edge r -> r + x of weight (x, 1) per interior x.
/// Ordering path weights lexicographically yields both invariants in one
/// Dijkstra pass.
ExceptionalProfile exceptional_profile(const FiniteIntegerSet& A);

struct RepresentationCertificate {
    Integer target = 0;
    std::vector<Integer> parts;  // ascending, zeros included
    Integer part_count = 0;
};

/// Exactly N elements of A summing to n. Throws NotRepresentable if n is not
/// in NA. Backtracks from level N, taking the smallest usable summand at
/// each step.
RepresentationCertificate represent_certificate(Integer n, const FiniteIntegerSet& A, Integer N);

}  // namespace sumset
