#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sumset/integer_set.hpp"

namespace sumset {

/// F1, F2: sets where the bound b - ell cannot be lowered by one.
/// G1..G4: additional obstructions when lowering it by two.
/// A1..A6: the four/five element shapes settled case by case, each with a
/// known sufficient threshold.
enum class FamilyKind { F1, F2, G1, G2, G3, G4, A1, A2, A3, A4, A5, A6 };

struct FamilyLabel {
    FamilyKind kind;
    std::map<std::string, Integer> parameters;
    /// Matched on b - A rather than A; parameters then refer to b - A.
    bool reflected = false;

    /// "F1(a=2)", "G1(a=3 d=7)", "b-A:F2(a=4)".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FamilyLabel&, const FamilyLabel&) = default;
};

const char* to_string(FamilyKind kind) noexcept;

/// Family labels for A (normalized) and for b - A.
///
/// delta = 1 tests F1 = {0..b} \ {a} and F2 = {0,1,a+1,...,b}, 2 <= a <= b-2.
/// delta = 2 adds
///   G1 = {0,1,b} u ({a+1..b-1} \ {d}), a+2 <= d <= b-1, a not in (a-1)A
///   G2 = {0..b} \ {a,c}, 2 <= a,c <= b-2
///   G3 = {0,1,2,6,...,b}, 5 not in 2A
///   G4 = {0,1,3,6,...,b}, 5 not in 2A
/// Side conditions are checked with actual sumsets. A symmetric set
/// (A = b - A) is only reported once.
std::vector<FamilyLabel> classify_exceptional_family(const FiniteIntegerSet& A, int delta);

struct AppendixMatch {
    FamilyLabel label;
    /// N from which the identity is known to hold.
    Integer claimed_threshold;
};

/// Every appendix shape A matches, in A1..A6 order:
///   A1 {0,a,2a,b}, A2 {0,2a-b,a,b}, A4 {0,h,b-h,b}  with (a,b)=1 or (h,b)=1
///   A3 {0,h,b/2,b}, A5 {0,a,a+b/2,b}, A6 {0,a,b/2,a+b/2,b} with (., b/2)=1
/// Thresholds: 1 for A1-A3, b-1-h for A4, b/2 for A5, b/2-1 for A6.
std::vector<AppendixMatch> appendix_families(const FiniteIntegerSet& A);

/// First entry of appendix_families, or nullopt.
std::optional<AppendixMatch> appendix_family_threshold(const FiniteIntegerSet& A);

}  // namespace sumset
