#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace sumset {

/// Fixed-size bit array over [0, size) stored in 64-bit words.
///
/// Bits beyond size() are kept zero after every mutating operation, so
/// word-level comparisons and popcounts are exact.
class DynamicBitset {
  public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    DynamicBitset() = default;
    explicit DynamicBitset(std::size_t size);

    [[nodiscard]] std::size_t size() const noexcept { return size_; }
    [[nodiscard]] bool test(std::size_t i) const noexcept {
        return i < size_ && ((words_[i / word_bits] >> (i % word_bits)) & 1U) != 0;
    }
    void set(std::size_t i);
    void reset(std::size_t i);

    [[nodiscard]] std::size_t count() const noexcept;
    [[nodiscard]] bool none() const noexcept;
    [[nodiscard]] bool any() const noexcept { return !none(); }

    /// this |= (src << shift), bits pushed past size() are dropped.
    /// src may have a different size.
    void or_shifted_up(const DynamicBitset& src, std::size_t shift);
    /// this |= (src >> shift).
    void or_shifted_down(const DynamicBitset& src, std::size_t shift);
    /// Cyclic rotation by shift within [0, size()): bit i moves to (i + shift) mod size().
    [[nodiscard]] DynamicBitset rotated(std::size_t shift) const;
    /// Copy grown (zero-extended) or truncated to new_size.
    [[nodiscard]] DynamicBitset resized(std::size_t new_size) const;

    DynamicBitset& operator|=(const DynamicBitset& other);
    DynamicBitset& operator&=(const DynamicBitset& other);
    /// Bits set here and clear in other. Sizes must match.
    [[nodiscard]] DynamicBitset minus(const DynamicBitset& other) const;
    [[nodiscard]] bool is_subset_of(const DynamicBitset& other) const;

    [[nodiscard]] std::size_t find_first() const noexcept { return find_next_from(0); }
    /// Smallest set index >= i, or npos.
    [[nodiscard]] std::size_t find_next_from(std::size_t i) const noexcept;
    [[nodiscard]] std::vector<std::size_t> indices() const;

    template <typename F>
    void for_each_set(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            word_type bits = words_[w];
            while (bits != 0) {
                f(w * word_bits + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    [[nodiscard]] const std::vector<word_type>& words() const noexcept { return words_; }

    friend bool operator==(const DynamicBitset&, const DynamicBitset&) = default;

  private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

}  // namespace sumset
