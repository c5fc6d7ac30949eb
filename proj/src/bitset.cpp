#include "sumset/bitset.hpp"

#include <algorithm>
#include <stdexcept>

namespace sumset {

namespace {
std::size_t words_for(std::size_t bits) { return (bits + DynamicBitset::word_bits - 1) / DynamicBitset::word_bits; }
}  // namespace

DynamicBitset::DynamicBitset(std::size_t size) : size_(size), words_(words_for(size), 0) {}

void DynamicBitset::set(std::size_t i) {
    if (i >= size_) throw std::out_of_range("DynamicBitset::set index out of range");
    words_[i / word_bits] |= word_type{1} << (i % word_bits);
}

void DynamicBitset::reset(std::size_t i) {
    if (i >= size_) throw std::out_of_range("DynamicBitset::reset index out of range");
    words_[i / word_bits] &= ~(word_type{1} << (i % word_bits));
}

std::size_t DynamicBitset::count() const noexcept {
    std::size_t total = 0;
    for (const word_type w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool DynamicBitset::none() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](word_type w) { return w == 0; });
}

void DynamicBitset::trim() noexcept {
    const std::size_t tail = size_ % word_bits;
    if (tail != 0 && !words_.empty()) words_.back() &= (word_type{1} << tail) - 1;
}

void DynamicBitset::or_shifted_up(const DynamicBitset& src, std::size_t shift) {
    const std::size_t ws = shift / word_bits;
    const std::size_t bs = shift % word_bits;
    const std::size_t n = words_.size();
    const auto& s = src.words_;
    for (std::size_t i = 0; i < s.size(); ++i) {
        const std::size_t j = i + ws;
        if (j >= n) break;
        if (s[i] == 0) continue;
        words_[j] |= s[i] << bs;
        if (bs != 0 && j + 1 < n) words_[j + 1] |= s[i] >> (word_bits - bs);
    }
    trim();
}

void DynamicBitset::or_shifted_down(const DynamicBitset& src, std::size_t shift) {
    const std::size_t ws = shift / word_bits;
    const std::size_t bs = shift % word_bits;
    const auto& s = src.words_;
    for (std::size_t j = 0; j < words_.size(); ++j) {
        const std::size_t i = j + ws;
        if (i >= s.size()) break;
        word_type w = s[i] >> bs;
        if (bs != 0 && i + 1 < s.size()) w |= s[i + 1] << (word_bits - bs);
        words_[j] |= w;
    }
    trim();
}

DynamicBitset DynamicBitset::rotated(std::size_t shift) const {
    if (size_ == 0) return *this;
    shift %= size_;
    if (shift == 0) return *this;
    DynamicBitset out(size_);
    out.or_shifted_up(*this, shift);
    out.or_shifted_down(*this, size_ - shift);
    return out;
}

DynamicBitset DynamicBitset::resized(std::size_t new_size) const {
    DynamicBitset out(new_size);
    const std::size_t common = std::min(words_.size(), out.words_.size());
    std::copy_n(words_.begin(), common, out.words_.begin());
    out.trim();
    return out;
}

DynamicBitset& DynamicBitset::operator|=(const DynamicBitset& other) {
    if (other.size_ != size_) throw std::invalid_argument("DynamicBitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

DynamicBitset& DynamicBitset::operator&=(const DynamicBitset& other) {
    if (other.size_ != size_) throw std::invalid_argument("DynamicBitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

DynamicBitset DynamicBitset::minus(const DynamicBitset& other) const {
    if (other.size_ != size_) throw std::invalid_argument("DynamicBitset size mismatch");
    DynamicBitset out(*this);
    for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] &= ~other.words_[i];
    return out;
}

bool DynamicBitset::is_subset_of(const DynamicBitset& other) const {
    if (other.size_ != size_) throw std::invalid_argument("DynamicBitset size mismatch");
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

std::size_t DynamicBitset::find_next_from(std::size_t i) const noexcept {
    if (i >= size_) return npos;
    std::size_t w = i / word_bits;
    word_type bits = words_[w] & (~word_type{0} << (i % word_bits));
    while (true) {
        if (bits != 0) return w * word_bits + static_cast<std::size_t>(std::countr_zero(bits));
        if (++w >= words_.size()) return npos;
        bits = words_[w];
    }
}

std::vector<std::size_t> DynamicBitset::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each_set([&](std::size_t i) { out.push_back(i); });
    return out;
}

}  // namespace sumset
