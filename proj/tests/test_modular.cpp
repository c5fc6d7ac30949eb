#include <random>
#include <set>
#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "sumset/error.hpp"
#include "sumset/harness.hpp"
#include "sumset/modular.hpp"

using namespace sumset;

namespace {

ResidueSet residues(Integer b, std::vector<Integer> values) { return ResidueSet(b, values); }

std::set<Integer> as_set(const ResidueSet& W) {
    const auto m = W.members();
    return {m.begin(), m.end()};
}

}  // namespace

TEST_CASE("reduce_mod_b") {
    CHECK(reduce_mod_b(FiniteIntegerSet({0, 3, 5, 7})) == residues(7, {0, 3, 5}));
    CHECK(reduce_mod_b(FiniteIntegerSet({0, 1, 6, 7})) == residues(7, {0, 1, 6}));
    CHECK(reduce_mod_b(FiniteIntegerSet({0, 2, 5})) == residues(5, {0, 2}));
    CHECK(residues(5, {-1, 7}).members() == std::vector<Integer>{2, 4});
}

TEST_CASE("mod_sumset") {
    const auto U = residues(7, {0, 3, 5});
    CHECK(mod_sumset(U, U).members() == std::vector<Integer>{0, 1, 3, 5, 6});
    const auto V = residues(7, {0, 1, 6});
    CHECK(mod_sumset(V, V).members() == std::vector<Integer>{0, 1, 2, 5, 6});
    CHECK(mod_sumset(residues(7, {0}), V) == V);
    CHECK_THROWS_AS(mod_sumset(U, residues(8, {0})), ModulusMismatch);

    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 500; ++trial) {
        const Integer b = 1 + static_cast<Integer>(rng() % 40);
        std::vector<Integer> u;
        std::vector<Integer> v;
        for (Integer x = 0; x < b; ++x) {
            if (rng() % 3 == 0) u.push_back(x);
            if (rng() % 4 == 0) v.push_back(x);
        }
        const auto got = mod_sumset(residues(b, u), residues(b, v));
        CHECK(as_set(got) == oracle::mod_sum({u.begin(), u.end()}, {v.begin(), v.end()}, b));
    }
}

TEST_CASE("stabilizer examples") {
    const auto full = stabilizer(residues(6, {0, 1, 2, 3, 4, 5}));
    CHECK(full.order() == 6);
    CHECK(full.generator == 1);
    const auto pair = stabilizer(residues(6, {0, 3}));
    CHECK(pair.order() == 2);
    CHECK(pair.as_set().members() == std::vector<Integer>{0, 3});
    CHECK(stabilizer(residues(5, {0, 1})).order() == 1);
    CHECK_THROWS_AS(stabilizer(ResidueSet(5)), EmptySet);
    CHECK(divisors(12) == std::vector<Integer>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(1) == std::vector<Integer>{1});
}

TEST_CASE("stabilizer agrees with a translate check for every W with b <= 12") {
    for (Integer b = 1; b <= 12; ++b) {
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << b); ++mask) {
            std::vector<Integer> w;
            for (Integer x = 0; x < b; ++x)
                if ((mask >> x) & 1U) w.push_back(x);
            const auto H = stabilizer(residues(b, w));
            CHECK(as_set(H.as_set()) == oracle::stabilizer({w.begin(), w.end()}, b));
            for (Integer g = 0; g < b; ++g) CHECK(H.contains(g) == (residues(b, w).translated(g) == residues(b, w)));
        }
    }
}

TEST_CASE("Kneser inequality on random pairs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const Integer b = 1 + static_cast<Integer>(rng() % 64);
        const double density = std::uniform_real_distribution<double>(0.02, 0.6)(rng);
        std::bernoulli_distribution coin(density);
        std::vector<Integer> u;
        std::vector<Integer> v;
        for (Integer x = 0; x < b; ++x) {
            if (coin(rng)) u.push_back(x);
            if (coin(rng)) v.push_back(x);
        }
        if (u.empty()) u.push_back(static_cast<Integer>(rng() % b));
        if (v.empty()) v.push_back(static_cast<Integer>(rng() % b));
        const auto U = residues(b, u);
        const auto V = residues(b, v);
        const auto S = mod_sumset(U, V);
        const auto H = stabilizer(S).as_set();
        CHECK(S.size() >= mod_sumset(U, H).size() + mod_sumset(V, H).size() - H.size());
    }
}

TEST_CASE("growth_profile examples") {
    const GrowthProfile g(residues(7, {0, 1, 6}), 10);
    CHECK(g.size_at(1) == 3);
    CHECK(g.size_at(2) == 5);
    CHECK(g.size_at(3) == 7);
    CHECK(g.size_at(9) == 7);
    CHECK(g.saturation_step() == 3);
    CHECK(g.smallest_K(0) == 2);
    CHECK(g.steps().size() == 3);
    CHECK(g.steps()[1].stabilizer.order() == 1);
    CHECK(g.steps()[2].stabilizer.order() == 7);

    const GrowthProfile full(residues(9, {0, 1, 2, 3, 4, 5, 6, 7, 8}), 4);
    for (Integer delta = 0; delta <= 6; ++delta) CHECK(full.smallest_K(delta) == 2);

    CHECK(GrowthProfile(residues(7, {0, 3, 5}), 2).size_at(2) == 5);

    CHECK_THROWS_AS(GrowthProfile(residues(6, {0, 2, 4}), 3), NotGenerating);
    CHECK_THROWS_AS(GrowthProfile(residues(6, {1, 5}), 3), InvalidSet);
    CHECK_THROWS_AS(GrowthProfile(residues(6, {0, 1}), 0), InvalidArgument);
}

TEST_CASE("growth step bound and smallest_K for every set with b <= 16") {
    for (Integer b = 2; b <= 16; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            if (A.ell() < 2) continue;
            const GrowthProfile g(reduce_mod_b(A), b);
            for (Integer k = 2; k <= g.saturation_step(); ++k)
                CHECK(g.size_at(k) >= std::min(b, g.size_at(k - 1) + 2));
            for (Integer delta = 0; delta <= 2; ++delta) CHECK(g.smallest_K(delta) <= b);
        }
    }
}

TEST_CASE("small_doubling_classify examples") {
    const auto k1 = small_doubling_classify(FiniteIntegerSet({0, 2, 4, 7}));
    REQUIRE(k1.primary().has_value());
    CHECK(k1.primary()->family == DoublingFamily::K1);
    CHECK(k1.primary()->h == 2);

    const auto k3 = small_doubling_classify(FiniteIntegerSet({0, 1, 6, 7}));
    REQUIRE(k3.primary().has_value());
    CHECK(k3.primary()->family == DoublingFamily::K3);
    CHECK(k3.primary()->h == 1);

    const auto none = small_doubling_classify(FiniteIntegerSet({0, 2, 3, 7}));
    CHECK_FALSE(none.primary().has_value());
    CHECK(none.doubling == 6);

    CHECK_THROWS_AS(small_doubling_classify(FiniteIntegerSet({0, 3, 5})), TooSmall);
    CHECK(std::string(to_string(DoublingFamily::K6)) == "K6");
}

TEST_CASE("doubling lower bound for every set with b <= 16") {
    // The classifier throws InternalError whenever either bound is broken.
    for (Integer b = 3; b <= 16; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            if (A.ell() < 2) continue;
            const auto c = small_doubling_classify(A);
            CHECK(c.doubling >= std::min<Integer>(b, A.ell() + 3));
            if (!c.primary()) CHECK(c.doubling >= std::min<Integer>(b, A.ell() + 4));
        }
    }
}
