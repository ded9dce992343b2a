#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "kmfactor/error.hpp"
#include "kmfactor/objective.hpp"
#include "kmfactor/oracle.hpp"
#include "kmfactor/solver.hpp"
#include "test_oracles.hpp"

using kmf::DenseMatrix;
using kmf::IndicatorMatrix;
using kmf::testing::rel;

TEST_CASE("enumerate_global_min on hand-checkable inputs") {
    SUBCASE("two points, two clusters") {
        const auto r = kmf::enumerate_global_min(DenseMatrix{{0, 2}}, 2);
        CHECK(r.global_min_objective == 0.0);
        CHECK(r.enumerated_count == 2);
        REQUIRE(r.argmin_assignments.size() == 1);
        CHECK(r.argmin_assignments[0] == IndicatorMatrix(2, {0, 1}));
    }

    SUBCASE("line4") {
        const DenseMatrix x{{0, 1, 4, 5}};
        const auto r = kmf::enumerate_global_min(x, 2);
        CHECK(r.global_min_objective == 1.0);
        CHECK(r.enumerated_count == 14);
        REQUIRE(r.argmin_assignments.size() == 1);
        CHECK(r.argmin_assignments[0] == IndicatorMatrix(2, {0, 0, 1, 1}));
        CHECK(kmf::testing::brute_force_min(x, 2) == 1.0);
    }

    SUBCASE("symmetric three points report both minimizers") {
        const auto r = kmf::enumerate_global_min(DenseMatrix{{0, 1, 2}}, 2);
        CHECK(r.global_min_objective == 0.5);
        CHECK(r.enumerated_count == 6);
        REQUIRE(r.argmin_assignments.size() == 2);
        CHECK(std::count(r.argmin_assignments.begin(), r.argmin_assignments.end(),
                         IndicatorMatrix(2, {0, 0, 1})) == 1);
        CHECK(std::count(r.argmin_assignments.begin(), r.argmin_assignments.end(),
                         IndicatorMatrix(2, {0, 1, 1})) == 1);
    }
}

TEST_CASE("enumerate_global_min limits") {
    const DenseMatrix x(1, 20);
    try {
        kmf::enumerate_global_min(x, 3);
        FAIL("expected BudgetExceeded");
    } catch (const kmf::BudgetExceeded& e) {
        CHECK(e.required() == 3486784401ULL);
        CHECK(e.limit() == kmf::kDefaultEnumerationLimit);
    }
    CHECK_THROWS_AS(kmf::enumerate_global_min(DenseMatrix{{0, 1}}, 3), kmf::DomainError);
    CHECK(kmf::assignment_space_size(200, 3) == UINT64_MAX);
    CHECK(kmf::assignment_space_size(4, 2) == 16);
}

TEST_CASE("oracle agrees with an independent brute force") {
    kmf::Rng rng(51);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 2 + rng.uniform_index(6);
        const std::size_t k = 1 + rng.uniform_index(std::min<std::size_t>(n, 3));
        const auto x = kmf::testing::random_matrix(1 + rng.uniform_index(3), n, rng);
        const auto r = kmf::enumerate_global_min(x, k);
        CHECK(rel(r.global_min_objective, kmf::testing::brute_force_min(x, k)) < 1e-12);
        CHECK(r.global_min_objective >= 0.0);
        for (const auto& z : r.argmin_assignments) {
            CHECK(kmf::canonicalize(z) == z);
            CHECK(rel(kmf::oracle_objective(x, z), r.global_min_objective) < 1e-12);
            CHECK(rel(objective_projected(x, z), r.global_min_objective) < 1e-10);
            CHECK(rel(objective_factored(x, optimal_centroids(x, z), z), r.global_min_objective) < 1e-10);
        }
    }
}

TEST_CASE("oracle minimum is invariant under column permutation") {
    kmf::Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        const std::size_t n = 3 + rng.uniform_index(5);
        const auto x = kmf::testing::random_matrix(2, n, rng);
        std::vector<double> shuffled(2 * n);
        std::vector<std::size_t> perm(n);
        std::iota(perm.begin(), perm.end(), std::size_t{0});
        std::reverse(perm.begin(), perm.end());
        for (std::size_t j = 0; j < n; ++j) {
            shuffled[j] = x(0, perm[j]);
            shuffled[n + j] = x(1, perm[j]);
        }
        const DenseMatrix y(2, n, shuffled);
        CHECK(rel(kmf::enumerate_global_min(x, 3).global_min_objective,
                  kmf::enumerate_global_min(y, 3).global_min_objective) < 1e-12);
    }
}

TEST_CASE("oracle_objective is label-permutation invariant") {
    const DenseMatrix x{{0, 1, 4, 5, 9}};
    const double a = kmf::oracle_objective(x, IndicatorMatrix(3, {0, 0, 1, 1, 2}));
    const double b = kmf::oracle_objective(x, IndicatorMatrix(3, {2, 2, 0, 0, 1}));
    CHECK(a == b);
    CHECK_THROWS_AS(kmf::oracle_objective(x, IndicatorMatrix(3, {0, 0, 1, 1, 1})),
                    kmf::EmptyClusterSingularity);
}

TEST_CASE("fit never beats the oracle") {
    kmf::Rng rng(53);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t n = 3 + rng.uniform_index(6);
        const std::size_t k = 1 + rng.uniform_index(3);
        const auto x = kmf::testing::random_matrix(2, n, rng);
        kmf::SolverConfig cfg;
        cfg.k = k;
        cfg.seed = trial;
        const double min = kmf::enumerate_global_min(x, k).global_min_objective;
        CHECK(fit(x, cfg).objective_pointwise >= min - 1e-12 * (1.0 + min));
    }
}

TEST_CASE("draw_surjective_assignments") {
    const auto all = kmf::draw_surjective_assignments(4, 2, 14, 0);
    CHECK(all.exhaustive);
    CHECK(all.assignments.size() == 14);

    const auto some = kmf::draw_surjective_assignments(4, 2, 5, 0);
    CHECK_FALSE(some.exhaustive);
    CHECK(some.assignments.size() == 5);

    const auto a = kmf::draw_surjective_assignments(40, 5, 50, 7);
    const auto b = kmf::draw_surjective_assignments(40, 5, 50, 7);
    CHECK(a.assignments == b.assignments);
    for (const auto& z : a.assignments) {
        CHECK(kmf::cluster_sizes(z).first_empty() == 5);
    }
    CHECK(kmf::draw_surjective_assignments(4, 2, 0, 0).assignments.empty());
}

TEST_CASE("cross_check_forms") {
    const auto vacuous = kmf::cross_check_forms(DenseMatrix{{0, 2}}, 1, 0, 0);
    CHECK(vacuous.passed);
    CHECK(vacuous.checked == 0);

    const auto single = kmf::cross_check_forms(DenseMatrix{{0, 2}}, 1, 1, 0);
    CHECK(single.passed);
    CHECK(single.checked == 1);

    kmf::Rng rng(54);
    const auto random = kmf::cross_check_forms(kmf::testing::random_matrix(4, 10, rng), 3, 200, 1);
    CHECK(random.passed);
    CHECK(random.checked == 200);
    CHECK(random.worst_discrepancy < 1e-10);

    const auto line4 = kmf::cross_check_forms(DenseMatrix{{0, 1, 4, 5}}, 2, 14, 0);
    CHECK(line4.passed);
    CHECK(line4.exhaustive);
    CHECK(line4.checked == 14);
}
