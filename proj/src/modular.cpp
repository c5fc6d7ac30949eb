#include "sumset/modular.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "sumset/error.hpp"

namespace sumset {

namespace {

Integer reduce(Integer r, Integer m) {
    const Integer x = r % m;
    return x < 0 ? x + m : x;
}

}  // namespace

ResidueSet::ResidueSet(Integer modulus) : modulus_(modulus) {
    if (modulus < 1) throw InvalidArgument("ResidueSet: modulus must be positive");
    mask_ = DynamicBitset(static_cast<std::size_t>(modulus));
}

ResidueSet::ResidueSet(Integer modulus, std::span<const Integer> residues) : ResidueSet(modulus) {
    for (const Integer r : residues) mask_.set(static_cast<std::size_t>(reduce(r, modulus_)));
}

ResidueSet::ResidueSet(Integer modulus, DynamicBitset mask) : modulus_(modulus), mask_(std::move(mask)) {
    if (modulus < 1 || mask_.size() != static_cast<std::size_t>(modulus)) {
        throw InvalidArgument("ResidueSet: mask size does not match modulus");
    }
}

bool ResidueSet::contains(Integer r) const noexcept {
    return mask_.test(static_cast<std::size_t>(reduce(r, modulus_)));
}

std::vector<Integer> ResidueSet::members() const {
    std::vector<Integer> out;
    mask_.for_each_set([&](std::size_t i) { out.push_back(static_cast<Integer>(i)); });
    return out;
}

ResidueSet ResidueSet::translated(Integer g) const {
    return ResidueSet(modulus_, mask_.rotated(static_cast<std::size_t>(reduce(g, modulus_))));
}

bool ResidueSet::generates() const noexcept {
    Integer g = modulus_;
    mask_.for_each_set([&](std::size_t i) { g = std::gcd(g, static_cast<Integer>(i)); });
    return g == 1;
}

ResidueSet reduce_mod_b(const FiniteIntegerSet& A) {
    require_normalized(A, "reduce_mod_b");
    return ResidueSet(A.b(), A.elements());
}

ResidueSet mod_sumset(const ResidueSet& U, const ResidueSet& V) {
    if (U.modulus() != V.modulus()) {
        throw ModulusMismatch("mod_sumset: moduli " + std::to_string(U.modulus()) + " and " +
                              std::to_string(V.modulus()) + " differ");
    }
    const auto b = static_cast<std::size_t>(U.modulus());
    DynamicBitset out(b);
    V.mask().for_each_set([&](std::size_t v) {
        out.or_shifted_up(U.mask(), v);
        if (v != 0) out.or_shifted_down(U.mask(), b - v);
    });
    return ResidueSet(U.modulus(), std::move(out));
}

bool StabilizerSubgroup::contains(Integer g) const noexcept { return reduce(g, modulus) % generator == 0; }

ResidueSet StabilizerSubgroup::as_set() const {
    DynamicBitset mask(static_cast<std::size_t>(modulus));
    for (Integer g = 0; g < modulus; g += generator) mask.set(static_cast<std::size_t>(g));
    return ResidueSet(modulus, std::move(mask));
}

std::vector<Integer> divisors(Integer n) {
    std::vector<Integer> small;
    std::vector<Integer> large;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d * d != n) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

StabilizerSubgroup stabilizer(const ResidueSet& W) {
    if (W.empty()) throw EmptySet("stabilizer: empty set");
    const Integer b = W.modulus();
    for (const Integer d : divisors(b)) {
        if (d == b || W.mask().rotated(static_cast<std::size_t>(d)) == W.mask()) return {b, d};
    }
    return {b, b};
}

GrowthProfile::GrowthProfile(const ResidueSet& B, Integer k_max) : modulus_(B.modulus()), ell_(B.size() - 1) {
    if (k_max < 1) throw InvalidArgument("growth_profile: k_max must be positive");
    if (!B.contains(0)) throw InvalidSet("growth_profile: B must contain 0");
    if (!B.generates()) throw NotGenerating("growth_profile: B does not generate Z/" + std::to_string(modulus_));

    const Integer b = modulus_;
    ResidueSet current(b, std::vector<Integer>{0});
    sizes_.push_back(1);
    for (Integer k = 1; sizes_.back() < b; ++k) {
        if (k > b) throw InternalError("growth_profile: kB failed to saturate within b steps");
        current = mod_sumset(current, B);
        const Integer size = current.size();
        if (ell_ >= 2 && k >= 2 && size < std::min(b, sizes_.back() + 2)) {
            throw InternalError("growth_profile: |kB| < min(b, |(k-1)B| + 2) at k = " + std::to_string(k));
        }
        sizes_.push_back(size);
        if (k <= k_max) steps_.push_back({k, size, stabilizer(current)});
    }
    // Z/1: B is already the whole group.
    if (steps_.empty()) steps_.push_back({1, b, {b, 1}});
}

Integer GrowthProfile::size_at(Integer k) const {
    if (k < 0) throw InvalidArgument("GrowthProfile::size_at: negative k");
    if (k >= static_cast<Integer>(sizes_.size())) return modulus_;
    return sizes_[static_cast<std::size_t>(k)];
}

Integer GrowthProfile::smallest_K(Integer delta) const {
    const Integer cap = std::max<Integer>(modulus_, 2);
    for (Integer K = 2; K <= cap; ++K) {
        if (size_at(K) >= std::min(modulus_, 2 * K + ell_ + delta - 1)) return K;
    }
    throw InternalError("smallest_K: no K <= b satisfies the growth bound");
}

GrowthProfile growth_profile(const ResidueSet& B, Integer k_max) { return GrowthProfile(B, k_max); }

std::vector<DoublingFamilyMatch> small_doubling_shapes(const FiniteIntegerSet& A) {
    std::vector<DoublingFamilyMatch> out;
    if (A[0] != 0) return out;
    const Integer b = A.b();
    const bool even = b % 2 == 0;
    const Integer half = b / 2;
    if (A.size() == 4) {
        const Integer x = A[1];
        const Integer y = A[2];
        if (y == 2 * x && std::gcd(x, b) == 1) out.push_back({DoublingFamily::K1, x});
        if (x == 2 * y - b && std::gcd(y, b) == 1) out.push_back({DoublingFamily::K2, y});
        if (y == b - x && std::gcd(x, b) == 1) out.push_back({DoublingFamily::K3, x});
        if (even && (x == half || y == half)) {
            const Integer h = x == half ? y : x;
            if (std::gcd(h, half) == 1) out.push_back({DoublingFamily::K4, h});
        }
        if (even && y == x + half && std::gcd(x, half) == 1) out.push_back({DoublingFamily::K5, x});
    } else if (A.size() == 5 && even) {
        if (A[2] == half && A[3] == A[1] + half && std::gcd(A[1], half) == 1) {
            out.push_back({DoublingFamily::K6, A[1]});
        }
    }
    return out;
}

std::optional<DoublingFamilyMatch> DoublingClassification::primary() const {
    if (matches.empty()) return std::nullopt;
    return matches.front();
}

DoublingClassification small_doubling_classify(const FiniteIntegerSet& A) {
    require_normalized(A, "small_doubling_classify");
    if (A.ell() < 2) throw TooSmall("small_doubling_classify: need at least two interior elements");
    const ResidueSet B = reduce_mod_b(A);
    const Integer doubling = mod_sumset(B, B).size();
    const Integer b = A.b();
    const Integer ell = A.ell();
    DoublingClassification result{doubling, small_doubling_shapes(A)};
    if (doubling < std::min(b, ell + 3)) {
        throw InternalError("small_doubling_classify: |2B| < min(b, ell+3) for " + A.to_string());
    }
    if (result.matches.empty() && doubling < std::min(b, ell + 4)) {
        throw InternalError("small_doubling_classify: |2B| < min(b, ell+4) off the catalog for " + A.to_string());
    }
    return result;
}

const char* to_string(DoublingFamily family) noexcept {
    switch (family) {
        case DoublingFamily::K1: return "K1";
        case DoublingFamily::K2: return "K2";
        case DoublingFamily::K3: return "K3";
        case DoublingFamily::K4: return "K4";
        case DoublingFamily::K5: return "K5";
        case DoublingFamily::K6: return "K6";
    }
    return "?";
}

}  // namespace sumset
