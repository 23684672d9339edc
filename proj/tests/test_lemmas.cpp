#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include <coefbound/error.hpp>
#include <coefbound/lemmas.hpp>

using namespace coefbound;

namespace
{

bool has(const std::vector<Region> &rs, Region r) { return std::find(rs.begin(), rs.end(), r) != rs.end(); }

} // namespace

TEST_CASE("region classification")
{
    CHECK(has(classify_region(0.0, 0.0), Region::D1));
    CHECK(phi_bound(0.0, 0.0).value == 1.0);
    CHECK_FALSE(has(classify_region(2.0, 1.0), Region::D4));
    CHECK_THROWS_AS(phi_bound(100.0, -100.0), Unclassified);
}

TEST_CASE("phi_bound on D1 is exactly one")
{
    std::mt19937_64 rng(2);
    std::uniform_real_distribution<double> u(-3, 3);
    int hits = 0;
    for (int i = 0; i < 20000; ++i) {
        const double mu = u(rng), nu = u(rng);
        const auto regions = classify_region(mu, nu);
        if (has(regions, Region::D1)) {
            ++hits;
            CHECK(phi_bound(mu, nu).value == 1.0);
        }
        if (!regions.empty()) {
            const auto phi = phi_bound(mu, nu);
            CHECK(std::isfinite(phi.value));
            CHECK(phi.regions == regions);
        }
    }
    CHECK(hits > 0);
}

TEST_CASE("psi functional at the identity")
{
    CHECK(psi_functional({1.0, 0.0, 0.0}, 0.5, 0.25) == doctest::Approx(0.25));
    CHECK(psi_functional({0.0, 0.0, 1.0}, 3.0, -7.0) == doctest::Approx(1.0));
}

TEST_CASE("Y closed form examples")
{
    const auto boundary = y_closed_form({0.5, 1.0, 0.5});
    CHECK(boundary.value == doctest::Approx(2.0));
    CHECK(boundary.branch == YBranch::boundary);
    CHECK(y_bruteforce({0.5, 1.0, 0.5}) == doctest::Approx(2.0).epsilon(1e-9));

    const auto interior = y_closed_form({0.0, 0.5, 0.0});
    CHECK(interior.branch == YBranch::interior);
    CHECK(interior.value == doctest::Approx(1.0625));

    CHECK_THROWS_AS(y_closed_form({-1.0, 0.0, 0.0}), InvalidInput);
    CHECK_THROWS_AS(y_closed_form({0.0, 0.0, -0.1}), InvalidInput);
    CHECK_THROWS_AS(y_bruteforce({0, 0, 0}, 32, 1024), InvalidInput);
}

TEST_CASE("Y closed form agrees with the brute force grid")
{
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> ac(0, 3), bb(-6, 6);
    for (int i = 0; i < 25; ++i) {
        const YInput in{ac(rng), bb(rng), ac(rng)};
        CHECK(std::abs(y_closed_form(in).value - y_bruteforce(in)) < 2e-3);
    }
}

TEST_CASE("A_m examples")
{
    using R = RationalValue;
    CHECK(a_sequence_closed(R(3, 7), 2) == R(3, 7));
    CHECK(a_sequence_closed(R(1), 5) == R(1));
    CHECK(a_sequence_closed(R(2), 3) == R(3));
    CHECK(a_sequence_recursive(R(2), 3) == R(3));
    CHECK_THROWS_AS(a_sequence_closed(R(1), 1), InvalidInput);
    CHECK_THROWS_AS(a_sequence_recursive(R(1), 1), InvalidInput);
}

TEST_CASE("A_m recursive and closed forms coincide exactly")
{
    using R = RationalValue;
    for (const R lambda : {R(1, 3), R(1), R(3, 2), R(157, 100), R(22, 7)}) {
        for (int m = 2; m <= 50; ++m)
            CHECK(a_sequence_recursive(lambda, m) == a_sequence_closed(lambda, m));
    }
}
