#include <vector>

#include "doctest.h"
#include "oracle.hpp"
#include "sumset/error.hpp"
#include "sumset/harness.hpp"
#include "sumset/verifier.hpp"

using namespace sumset;

namespace {

std::vector<Integer> as_vector(const FiniteIntegerSet& A) { return {A.elements().begin(), A.elements().end()}; }

}  // namespace

TEST_CASE("check_structure examples") {
    const auto r = check_structure(FiniteIntegerSet({0, 1, 5, 6}), 3);
    CHECK_FALSE(r.holds);
    CHECK(r.missing_witnesses == std::vector<Integer>{4, 9, 14});
    CHECK(r.missing_count == 3);

    CHECK(check_structure(FiniteIntegerSet({0, 3, 5}), 2).holds);
    CHECK(check_structure(FiniteIntegerSet({0, 1, 2, 3, 4, 5}), 1).holds);
    CHECK(check_structure(FiniteIntegerSet({0, 1, 2, 3, 4, 5}), 1).rhs_size == 6);

    const auto capped = check_structure(FiniteIntegerSet({0, 1, 5, 6}), 3, 1);
    CHECK(capped.missing_witnesses == std::vector<Integer>{4});
    CHECK(capped.missing_count == 3);
}

TEST_CASE("witnesses satisfy the report invariants") {
    for (Integer b = 4; b <= 9; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            StructureChecker checker(A);
            for (Integer N = 1; N <= b; ++N) {
                const auto r = checker.check(N);
                CHECK(r.holds == r.missing_witnesses.empty());
                const auto NA = n_fold_sumset(A, N);
                for (Integer w : r.missing_witnesses) {
                    CHECK(w >= 0);
                    CHECK(w <= b * N);
                    CHECK_FALSE(NA.contains(w));
                    CHECK(checker.expected(N).contains(w));
                }
            }
        }
    }
}

TEST_CASE("structure check agrees with the definition for b <= 8") {
    for (Integer b = 2; b <= 8; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            StructureChecker checker(A);
            for (Integer N = 1; N <= b; ++N) {
                INFO(A.to_string(), " N=", N);
                CHECK(checker.check(N).holds == oracle::structure_holds(as_vector(A), N));
            }
        }
    }
}

TEST_CASE("min_threshold examples") {
    CHECK(min_threshold(FiniteIntegerSet({0, 1, 5, 6})) == 4);
    CHECK(min_threshold(FiniteIntegerSet({0, 3, 5})) == 1);
    CHECK(min_threshold(FiniteIntegerSet({0, 1, 3, 4})) == 2);
    CHECK(min_threshold(FiniteIntegerSet({0, 1, 2, 3, 4, 5, 6})) == 1);
    CHECK(min_threshold(FiniteIntegerSet({0, 1})) == 1);
}

TEST_CASE("gs20_all_N_criterion examples") {
    CHECK(gs20_all_N_criterion(FiniteIntegerSet({0, 3, 5})));
    CHECK_FALSE(gs20_all_N_criterion(FiniteIntegerSet({0, 1, 5, 6})));
    CHECK(gs20_all_N_criterion(FiniteIntegerSet({0, 2, 4, 7})));
}

TEST_CASE("exhaustive properties for b <= 12") {
    for (Integer b = 2; b <= 12; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            INFO(A.to_string());
            StructureChecker checker(A);
            StructureChecker mirror(reflect(A));
            std::vector<bool> holds(static_cast<std::size_t>(b + 2));
            for (Integer N = 1; N <= b + 1; ++N) {
                holds[static_cast<std::size_t>(N)] = checker.check(N).holds;
                if (N <= b) CHECK(holds[static_cast<std::size_t>(N)] == mirror.check(N).holds);
            }
            const Integer n_star = checker.profile().n_star;
            for (Integer N = std::max<Integer>(1, n_star); N <= b; ++N)
                if (holds[static_cast<std::size_t>(N)]) CHECK(holds[static_cast<std::size_t>(N + 1)]);

            const auto scan = threshold_scan(A);
            CHECK(scan.threshold <= std::max<Integer>(1, b - A.ell()));
            CHECK(gs20_all_N_criterion(A) == (scan.threshold == 1));
        }
    }
}

TEST_CASE("identity at N = max(1, b - ell) for b <= 16") {
    for (Integer b = 2; b <= 16; ++b)
        for (const auto& A : enumerate_sets(b)) CHECK(check_structure(A, std::max<Integer>(1, b - A.ell())).holds);
}

TEST_CASE("lemma1_predicate examples") {
    const auto r = lemma1_predicate(FiniteIntegerSet({0, 3, 5}), 1, 2);
    CHECK(r.kB_size == 3);
    CHECK(r.hypothesis_met);
    CHECK(r.N == 5);
    CHECK(r.target == 11);
    CHECK(r.value());

    const auto s = lemma1_predicate(FiniteIntegerSet({0, 1, 6, 7}), 5, 2);
    CHECK(s.kB_size == 5);
    CHECK(s.hypothesis_met);
    CHECK(s.N == 5);
    CHECK(s.target == 12);
    CHECK(s.member);

    for (Integer a = 1; a < 6; ++a) CHECK(lemma1_predicate(FiniteIntegerSet({0, 1, 2, 3, 4, 5, 6}), a, 1).value());

    CHECK_THROWS_AS(lemma1_predicate(FiniteIntegerSet({0, 3, 5}), 0, 2), InvalidResidue);
    CHECK_THROWS_AS(lemma1_predicate(FiniteIntegerSet({0, 3, 5}), 5, 2), InvalidResidue);
    CHECK_THROWS_AS(lemma1_predicate(FiniteIntegerSet({0, 3, 5}), 1, 0), InvalidArgument);
}

TEST_CASE("lemma1_predicate never false for b <= 9") {
    for (Integer b = 2; b <= 9; ++b) {
        for (const auto& A : enumerate_sets(b)) {
            Lemma1Probe probe(A);
            for (Integer a = 1; a < b; ++a)
                for (Integer k = 1; k <= b; ++k) CHECK(probe.evaluate(a, k).value());
        }
    }
}
