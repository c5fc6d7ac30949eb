#include "sumset/sumset.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <utility>

#include "sumset/error.hpp"

namespace sumset {

ReachabilityMask::ReachabilityMask(Integer bound)
    : bound_(bound), bits_(static_cast<std::size_t>(bound + 1)) {
    if (bound < 0) throw InvalidArgument("ReachabilityMask: negative bound");
}

ReachabilityMask::ReachabilityMask(Integer bound, DynamicBitset bits) : bound_(bound), bits_(std::move(bits)) {
    if (bound < 0 || bits_.size() != static_cast<std::size_t>(bound + 1)) {
        throw InvalidArgument("ReachabilityMask: bitset size does not match bound");
    }
}

std::vector<Integer> ReachabilityMask::members() const {
    std::vector<Integer> out;
    out.reserve(bits_.count());
    bits_.for_each_set([&](std::size_t i) { out.push_back(static_cast<Integer>(i)); });
    return out;
}

SumsetLadder::SumsetLadder(FiniteIntegerSet A) : set_(std::move(A)), mask_(0) {
    mask_ = ReachabilityMask(0, [] {
        DynamicBitset bits(1);
        bits.set(0);
        return bits;
    }());
}

void SumsetLadder::advance() {
    const Integer next_bound = set_.b() * (level_ + 1);
    DynamicBitset next(static_cast<std::size_t>(next_bound + 1));
    for (const Integer x : set_.elements()) next.or_shifted_up(mask_.bits(), static_cast<std::size_t>(x));
    mask_ = ReachabilityMask(next_bound, std::move(next));
    ++level_;
}

void SumsetLadder::advance_to(Integer N) {
    if (N < level_) throw InvalidArgument("SumsetLadder: cannot move backwards");
    while (level_ < N) advance();
}

ReachabilityMask n_fold_sumset(const FiniteIntegerSet& A, Integer N) {
    if (N < 1) throw InvalidArgument("n_fold_sumset: N must be positive");
    SumsetLadder ladder(A);
    ladder.advance_to(N);
    return ladder.current();
}

ReachabilityMask semigroup_reachability(const FiniteIntegerSet& A, Integer bound) {
    ReachabilityMask out(bound);
    DynamicBitset bits(static_cast<std::size_t>(bound + 1));
    bits.set(0);
    for (Integer n = 1; n <= bound; ++n) {
        for (const Integer x : A.elements()) {
            if (x == 0) continue;
            if (x > n) break;
            if (bits.test(static_cast<std::size_t>(n - x))) {
                bits.set(static_cast<std::size_t>(n));
                break;
            }
        }
    }
    return ReachabilityMask(bound, std::move(bits));
}

Integer ExceptionalProfile::least(Integer a) const {
    if (a < 1 || a >= b) throw InvalidResidue("residue " + std::to_string(a) + " outside [1, b-1]");
    return least_table[static_cast<std::size_t>(a)];
}

Integer ExceptionalProfile::summands(Integer a) const {
    if (a < 1 || a >= b) throw InvalidResidue("residue " + std::to_string(a) + " outside [1, b-1]");
    return summands_table[static_cast<std::size_t>(a)];
}

ExceptionalProfile exceptional_profile(const FiniteIntegerSet& A) {
    require_normalized(A, "exceptional_profile");
    const Integer b = A.b();
    ExceptionalProfile profile;
    profile.b = b;
    const auto residues = static_cast<std::size_t>(b);
    profile.least_table.assign(residues, 0);
    profile.summands_table.assign(residues, 0);
    if (b < 2) return profile;

    using Weight = std::pair<Integer, Integer>;  // (sum, summand count)
    constexpr Integer inf = std::numeric_limits<Integer>::max();
    std::vector<Weight> best(residues, {inf, inf});
    std::vector<bool> done(residues, false);
    using Entry = std::pair<Weight, std::size_t>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;

    best[0] = {0, 0};
    queue.push({best[0], 0});
    const auto interior = A.elements().subspan(1, A.size() - 2);
    while (!queue.empty()) {
        const auto [weight, r] = queue.top();
        queue.pop();
        if (done[r]) continue;
        done[r] = true;
        for (const Integer x : interior) {
            const auto next = static_cast<std::size_t>((static_cast<Integer>(r) + x) % b);
            const Weight candidate{weight.first + x, weight.second + 1};
            if (!done[next] && candidate < best[next]) {
                best[next] = candidate;
                queue.push({candidate, next});
            }
        }
    }

    for (std::size_t a = 1; a < residues; ++a) {
        // gcd(A) = 1 makes every class reachable.
        if (!done[a]) throw InternalError("exceptional_profile: residue class unreachable");
        profile.least_table[a] = best[a].first;
        profile.summands_table[a] = best[a].second;
        profile.n_star = std::max(profile.n_star, best[a].second);
        if (best[a].second > b - 1) throw InternalError("exceptional_profile: N_{a,A} exceeds b-1 for " + A.to_string());
        for (Integer n = static_cast<Integer>(a); n < best[a].first; n += b) profile.exceptional.push_back(n);
    }
    std::sort(profile.exceptional.begin(), profile.exceptional.end());
    return profile;
}

RepresentationCertificate represent_certificate(Integer n, const FiniteIntegerSet& A, Integer N) {
    require_normalized(A, "represent_certificate");
    if (N < 1) throw InvalidArgument("represent_certificate: N must be positive");

    std::vector<ReachabilityMask> levels;
    levels.reserve(static_cast<std::size_t>(N + 1));
    SumsetLadder ladder(A);
    levels.push_back(ladder.current());
    for (Integer k = 1; k <= N; ++k) {
        ladder.advance();
        levels.push_back(ladder.current());
    }
    if (!levels.back().contains(n)) {
        throw NotRepresentable(std::to_string(n) + " is not a sum of " + std::to_string(N) + " elements of " +
                               A.to_string());
    }

    RepresentationCertificate cert{n, {}, N};
    Integer remaining = n;
    for (Integer k = N; k >= 1; --k) {
        const auto& below = levels[static_cast<std::size_t>(k - 1)];
        bool found = false;
        for (const Integer x : A.elements()) {
            if (x > remaining) break;
            if (below.contains(remaining - x)) {
                cert.parts.push_back(x);
                remaining -= x;
                found = true;
                break;
            }
        }
        if (!found) throw InternalError("represent_certificate: backtrack lost its path");
    }
    std::sort(cert.parts.begin(), cert.parts.end());
    return cert;
}

}  // namespace sumset
