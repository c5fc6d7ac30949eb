#pragma once

// Brute-force reference implementations. These use std::set enumeration and
// direct definitions only, never the library's bitset or shortest-path code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

namespace oracle {

using Int = std::int64_t;

/// All sums of exactly N elements of A (repetition allowed).
inline std::set<Int> n_fold(const std::vector<Int>& A, Int N) {
    std::set<Int> level{0};
    for (Int k = 0; k < N; ++k) {
        std::set<Int> next;
        for (Int x : level)
            for (Int a : A) next.insert(x + a);
        level = std::move(next);
    }
    return level;
}

inline std::vector<Int> reflect(const std::vector<Int>& A) {
    const Int b = A.back();
    std::vector<Int> out;
    for (Int a : A) out.push_back(b - a);
    std::sort(out.begin(), out.end());
    return out;
}

struct Profile {
    Int b;
    std::map<Int, Int> least;     // residue -> n_{a,A}
    std::map<Int, Int> summands;  // residue -> N_{a,A}
    std::vector<Int> exceptional;
    Int n_star = 0;
};

/// Enumerates every sum of up to b-1 elements, layer by layer.
inline Profile profile(const std::vector<Int>& A) {
    const Int b = A.back();
    Profile p{b, {}, {}, {}, 0};
    std::set<Int> seen;
    std::set<Int> level{0};
    std::map<Int, Int> first_layer;
    for (Int k = 1; k <= std::max<Int>(b - 1, 1); ++k) {
        std::set<Int> next;
        for (Int x : level)
            for (Int a : A) next.insert(x + a);
        level = std::move(next);
        for (Int x : level)
            if (!first_layer.count(x)) first_layer[x] = k;
    }
    for (const auto& [n, k] : first_layer) {
        const Int r = n % b;
        if (n == 0 || r == 0) continue;
        if (!p.least.count(r) || n < p.least[r]) {
            p.least[r] = n;
            p.summands[r] = k;
        }
    }
    for (const auto& [r, k] : p.summands) p.n_star = std::max(p.n_star, k);
    // Gaps of the semigroup, swept directly up to (b-1)^2.
    const Int top = (b - 1) * (b - 1);
    std::vector<bool> reach(static_cast<std::size_t>(top + 1), false);
    reach[0] = true;
    for (Int n = 1; n <= top; ++n) {
        for (Int a : A)
            if (a > 0 && a <= n && reach[static_cast<std::size_t>(n - a)]) reach[static_cast<std::size_t>(n)] = true;
        if (!reach[static_cast<std::size_t>(n)]) p.exceptional.push_back(n);
    }
    return p;
}

/// {0..bN} \ (E(A) u (bN - E(b-A))) straight from the definition.
inline std::set<Int> structure_rhs(const std::vector<Int>& A, Int N) {
    const Int b = A.back();
    const auto E = profile(A).exceptional;
    const auto F = profile(reflect(A)).exceptional;
    std::set<Int> out;
    for (Int n = 0; n <= b * N; ++n) out.insert(n);
    for (Int e : E) out.erase(e);
    for (Int f : F) out.erase(b * N - f);
    return out;
}

inline bool structure_holds(const std::vector<Int>& A, Int N) { return n_fold(A, N) == structure_rhs(A, N); }

inline std::set<Int> mod_sum(const std::set<Int>& U, const std::set<Int>& V, Int b) {
    std::set<Int> out;
    for (Int u : U)
        for (Int v : V) out.insert((u + v) % b);
    return out;
}

/// {g : g + W = W} by checking every g.
inline std::set<Int> stabilizer(const std::set<Int>& W, Int b) {
    std::set<Int> out;
    for (Int g = 0; g < b; ++g) {
        std::set<Int> moved;
        for (Int w : W) moved.insert((w + g) % b);
        if (moved == W) out.insert(g);
    }
    return out;
}

/// Normalized set with largest element b, interior chosen at random.
inline std::vector<Int> random_normalized(Int b, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(0.4);
    while (true) {
        std::vector<Int> A{0};
        Int g = b;
        for (Int x = 1; x < b; ++x) {
            if (coin(rng)) {
                A.push_back(x);
                g = std::gcd(g, x);
            }
        }
        A.push_back(b);
        if (g == 1) return A;
    }
}

}  // namespace oracle
