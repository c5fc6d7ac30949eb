#include "sumset/integer_set.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sumset/error.hpp"

namespace sumset {

FiniteIntegerSet::FiniteIntegerSet(std::vector<Integer> elements) : elements_(std::move(elements)) {
    if (elements_.size() < 2) throw DegenerateSet("a set needs at least two elements");
    if (elements_.front() < 0) throw InvalidSet("set elements must be non-negative");
    for (std::size_t i = 1; i < elements_.size(); ++i) {
        if (elements_[i] <= elements_[i - 1]) throw InvalidSet("set elements must be strictly increasing");
    }
}

bool FiniteIntegerSet::contains(Integer x) const noexcept {
    return std::binary_search(elements_.begin(), elements_.end(), x);
}

Integer FiniteIntegerSet::gcd() const noexcept {
    Integer g = 0;
    for (const Integer x : elements_) g = std::gcd(g, x);
    return g;
}

bool FiniteIntegerSet::is_normalized() const noexcept { return elements_.front() == 0 && gcd() == 1; }

std::string FiniteIntegerSet::to_string() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (i != 0) os << ',';
        os << elements_[i];
    }
    os << '}';
    return os.str();
}

void require_normalized(const FiniteIntegerSet& A, const char* operation) {
    if (!A.is_normalized()) {
        throw InvalidSet(std::string(operation) + ": set " + A.to_string() +
                         " is not normalized (need min 0 and gcd 1)");
    }
}

Normalization normalize(std::span<const Integer> raw) {
    std::vector<Integer> values(raw.begin(), raw.end());
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    if (values.size() < 2) throw DegenerateSet("normalize: need at least two distinct elements");

    const Integer tau = values.front();
    Integer g = 0;
    for (Integer& x : values) {
        x -= tau;
        g = std::gcd(g, x);
    }
    for (Integer& x : values) x /= g;
    return {g, tau, FiniteIntegerSet(std::move(values))};
}

FiniteIntegerSet reflect(const FiniteIntegerSet& A) {
    if (A[0] != 0) throw InvalidSet("reflect: set must contain 0");
    const Integer b = A.b();
    std::vector<Integer> out;
    out.reserve(A.size());
    for (auto it = A.elements().rbegin(); it != A.elements().rend(); ++it) out.push_back(b - *it);
    return FiniteIntegerSet(std::move(out));
}

}  // namespace sumset
