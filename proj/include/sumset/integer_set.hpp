#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sumset {

using Integer = std::int64_t;

/// A finite set A = {a_0 < a_1 < ... < a_{ell+1}} of non-negative integers.
///
/// Always holds at least two elements. "Normalized" means a_0 = 0 and
/// gcd(A) = 1; most analysis entry points require it and raise InvalidSet
/// otherwise.
class FiniteIntegerSet {
  public:
    /// elements must be strictly increasing and non-negative.
    explicit FiniteIntegerSet(std::vector<Integer> elements);

    [[nodiscard]] std::span<const Integer> elements() const noexcept { return elements_; }
    [[nodiscard]] std::size_t size() const noexcept { return elements_.size(); }
    [[nodiscard]] Integer operator[](std::size_t i) const noexcept { return elements_[i]; }
    /// Largest element.
    [[nodiscard]] Integer b() const noexcept { return elements_.back(); }
    /// Number of interior elements, |A| - 2.
    [[nodiscard]] Integer ell() const noexcept { return static_cast<Integer>(elements_.size()) - 2; }

    [[nodiscard]] bool contains(Integer x) const noexcept;
    [[nodiscard]] Integer gcd() const noexcept;
    [[nodiscard]] bool is_normalized() const noexcept;

    /// "{0,3,5}"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FiniteIntegerSet&, const FiniteIntegerSet&) = default;
    friend auto operator<=>(const FiniteIntegerSet&, const FiniteIntegerSet&) = default;

  private:
    std::vector<Integer> elements_;
};

/// Throws InvalidSet naming `operation` unless A is normalized.
void require_normalized(const FiniteIntegerSet& A, const char* operation);

struct Normalization {
    Integer g;
    Integer tau;
    FiniteIntegerSet set;
};

/// raw = g * A + tau with tau = min(raw), g = gcd(raw - tau).
/// Duplicates are collapsed; fewer than two distinct values is DegenerateSet.
Normalization normalize(std::span<const Integer> raw);

/// b - A. Requires 0 in A.
FiniteIntegerSet reflect(const FiniteIntegerSet& A);

}  // namespace sumset
