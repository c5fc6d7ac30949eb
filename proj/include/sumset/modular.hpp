#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "sumset/bitset.hpp"
#include "sumset/integer_set.hpp"

namespace sumset {

/// A subset of Z/bZ.
class ResidueSet {
  public:
    /// Empty subset of Z/modulus. modulus >= 1.
    explicit ResidueSet(Integer modulus);
    /// Residues are reduced mod modulus; negative values wrap.
    ResidueSet(Integer modulus, std::span<const Integer> residues);
    ResidueSet(Integer modulus, DynamicBitset mask);

    [[nodiscard]] Integer modulus() const noexcept { return modulus_; }
    [[nodiscard]] Integer size() const noexcept { return static_cast<Integer>(mask_.count()); }
    [[nodiscard]] bool empty() const noexcept { return mask_.none(); }
    [[nodiscard]] bool contains(Integer r) const noexcept;
    [[nodiscard]] std::vector<Integer> members() const;
    [[nodiscard]] const DynamicBitset& mask() const noexcept { return mask_; }
    /// g + W.
    [[nodiscard]] ResidueSet translated(Integer g) const;
    /// True when the members generate Z/bZ, i.e. their gcd with b is 1.
    [[nodiscard]] bool generates() const noexcept;

    friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

  private:
    Integer modulus_;
    DynamicBitset mask_;
};

/// B = A mod b.
ResidueSet reduce_mod_b(const FiniteIntegerSet& A);

/// U + V in Z/bZ.
ResidueSet mod_sumset(const ResidueSet& U, const ResidueSet& V);

/// H = dZ/bZ for a divisor d of b; d = b is the trivial subgroup.
struct StabilizerSubgroup {
    Integer modulus = 1;
    Integer generator = 1;

    [[nodiscard]] Integer order() const noexcept { return modulus / generator; }
    [[nodiscard]] bool contains(Integer g) const noexcept;
    [[nodiscard]] ResidueSet as_set() const;

    friend bool operator==(const StabilizerSubgroup&, const StabilizerSubgroup&) = default;
};

/// H(W) = {g : g + W = W}. Tries divisors of b in increasing order.
StabilizerSubgroup stabilizer(const ResidueSet& W);

/// Divisors of n >= 1, ascending.
std::vector<Integer> divisors(Integer n);

struct GrowthStep {
    Integer k;
    Integer size;  // |kB|
    StabilizerSubgroup stabilizer;
};

/// |kB| and H(kB) for k = 1, 2, ... of a generating B containing 0.
class GrowthProfile {
  public:
    GrowthProfile(const ResidueSet& B, Integer k_max);

    [[nodiscard]] Integer modulus() const noexcept { return modulus_; }
    /// Nonzero elements of B.
    [[nodiscard]] Integer ell() const noexcept { return ell_; }
    /// Rows k = 1 .. min(k_max, saturation step).
    [[nodiscard]] const std::vector<GrowthStep>& steps() const noexcept { return steps_; }
    /// |kB| for any k >= 1.
    [[nodiscard]] Integer size_at(Integer k) const;
    /// First k with |kB| = b.
    [[nodiscard]] Integer saturation_step() const noexcept {
        return std::max<Integer>(1, static_cast<Integer>(sizes_.size()) - 1);
    }
    /// Least K >= 2 with |KB| >= min(b, 2K + ell + delta - 1). Searches
    /// K <= b; overrunning that cap is an InternalError.
    [[nodiscard]] Integer smallest_K(Integer delta) const;

  private:
    Integer modulus_;
    Integer ell_;
    std::vector<Integer> sizes_;  // sizes_[k] = |kB| up to saturation; sizes_[0] = 1
    std::vector<GrowthStep> steps_;
};

/// Builds the growth profile. Throws NotGenerating if B does not generate
/// Z/bZ, InvalidSet if 0 is not in B, and InternalError if the sequence ever
/// grows by less than min(b - |(k-1)B|, 2) while B has at least two nonzero
/// elements.
GrowthProfile growth_profile(const ResidueSet& B, Integer k_max);

enum class DoublingFamily { K1, K2, K3, K4, K5, K6 };

struct DoublingFamilyMatch {
    DoublingFamily family;
    Integer h;
};

/// All small-doubling shapes A matches, in K1..K6 order, with their
/// coprimality side conditions:
///   K1 {0,h,2h,b}       (h,b)=1
///   K2 {0,2h-b,h,b}     (h,b)=1
///   K3 {0,h,b-h,b}      (h,b)=1
///   K4 {0,h,b/2,b}      (h,b/2)=1, h on either side of b/2
///   K5 {0,h,h+b/2,b}    (h,b/2)=1
///   K6 {0,h,b/2,h+b/2,b} (h,b/2)=1
/// No size precondition; sets that are not 4 or 5 elements never match.
std::vector<DoublingFamilyMatch> small_doubling_shapes(const FiniteIntegerSet& A);

struct DoublingClassification {
    Integer doubling;  // |2B|
    std::vector<DoublingFamilyMatch> matches;

    /// First match, or nullopt for "none".
    [[nodiscard]] std::optional<DoublingFamilyMatch> primary() const;
};

/// Classifies A (ell >= 2, else TooSmall) against the six small-doubling
/// families. Verifies |2B| >= min(b, ell+3) always and |2B| >= min(b, ell+4)
/// when nothing matches; a violation raises InternalError.
DoublingClassification small_doubling_classify(const FiniteIntegerSet& A);

const char* to_string(DoublingFamily family) noexcept;

}  // namespace sumset
