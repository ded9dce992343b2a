#include <doctest.h>

#include "kmfactor/verification.hpp"
#include "test_oracles.hpp"

TEST_CASE("verify_identities passes on random data") {
    kmf::Rng rng(71);
    const auto x = kmf::testing::random_matrix(4, 30, rng);
    const auto report = kmf::verify_identities(x, 3, 200, 1);
    CHECK(report.passed());
    REQUIRE(report.checks.size() == 6);
    for (const auto& c : report.checks) {
        INFO(c.name << " worst " << c.worst);
        CHECK(c.passed());
        CHECK(c.cases > 0);
    }
}

TEST_CASE("verify_identities edge cases") {
    const auto vacuous = kmf::verify_identities(kmf::DenseMatrix{{0, 2}}, 1, 0, 0);
    CHECK(vacuous.passed());
    for (const auto& c : vacuous.checks) {
        CHECK(c.cases == 0);
    }

    const auto line4 = kmf::verify_identities(kmf::DenseMatrix{{0, 1, 4, 5}}, 2, 14, 0);
    CHECK(line4.passed());
    CHECK(line4.exhaustive);
    CHECK(line4.checks.front().cases == 14);
}

TEST_CASE("library finite differences agree with the test oracle") {
    kmf::Rng rng(72);
    const auto x = kmf::testing::random_matrix(3, 12, rng);
    const auto m = kmf::testing::random_matrix(3, 4, rng);
    const auto z = kmf::testing::random_surjective(4, 12, rng);
    const auto lib = kmf::finite_difference_gradient(x, m, z);
    const auto ref = kmf::testing::fd_gradient(x, m, z);
    for (std::size_t l = 0; l < 3; ++l) {
        for (std::size_t i = 0; i < 4; ++i) {
            CHECK(kmf::testing::rel(lib(l, i), ref[i][l]) < 1e-6);
        }
    }
}
