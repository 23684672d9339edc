#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include <coefbound/bounds.hpp>
#include <coefbound/error.hpp>
#include <coefbound/lemmas.hpp>

using namespace coefbound;

namespace
{

constexpr double kHalfPi = M_PI / 2;

std::vector<double> lambda_grid(int n)
{
    std::vector<double> out;
    for (int i = 1; i <= n; ++i)
        out.push_back(kHalfPi * i / n);
    return out;
}

} // namespace

TEST_CASE("r0 root")
{
    const double r = r0_root();
    CHECK(std::abs(r - 0.8602) < 1e-4);
    CHECK(std::abs(r0_residual(r)) < 1e-10);
    CHECK(r0_root() == r);
}

TEST_CASE("input validation")
{
    CHECK_THROWS_AS(require_lambda(0.0), InvalidInput);
    CHECK_THROWS_AS(require_lambda(2.0), InvalidInput);
    CHECK_NOTHROW(require_lambda(kHalfPi));
    CHECK_THROWS_AS(require_normalized_p(FunctionClass::convex, 1.5), InvalidInput);
    CHECK_NOTHROW(require_normalized_p(FunctionClass::starlike, 1.5));
    CHECK_THROWS_AS(s_star_coeff_bound(5, 1.0), InvalidInput);
    CHECK_THROWS_AS(s_diff_bound(CoefficientDiff::d32, 1.0, -0.1), InvalidInput);
}

TEST_CASE("coefficient bounds at lambda = 1")
{
    CHECK(s_star_coeff_bound(2, 1.0).value == 1.0);
    const auto a3 = s_star_coeff_bound(3, 1.0);
    CHECK(a3.value == 0.75);
    CHECK(a3.branch == "lambda>2/3");
    CHECK(s_star_coeff_bound(4, 1.0).value == doctest::Approx(17.0 / 36.0));
    CHECK(k_coeff_bound(2, 1.0).value == 0.5);
    CHECK(k_coeff_bound(3, 1.0).value == 0.25);
    CHECK(k_coeff_bound(4, 1.0).value == doctest::Approx(17.0 / 144.0));
    CHECK(s_star_coeff_bound(3, 0.5).value == doctest::Approx(0.25));
    CHECK(s_star_coeff_bound(4, 0.1).value == doctest::Approx(0.1 / 3));
}

TEST_CASE("a4 branch labels")
{
    CHECK(s_star_coeff_bound(4, 0.2).branch == "lambda<=1/5");
    CHECK(s_star_coeff_bound(4, 0.5).branch == "1/5<lambda<=r0");
    CHECK(s_star_coeff_bound(4, 0.861).branch == "r0<lambda<=sqrt(32/43)");
    CHECK(s_star_coeff_bound(4, 1.0).branch == "lambda>sqrt(32/43)");
}

TEST_CASE("breakpoint continuity")
{
    const double eps = 1e-9;
    const double t = 2.0 / 3.0;
    CHECK(std::abs(s_star_coeff_bound(3, t).value - s_star_coeff_bound(3, t + eps).value) < 1e-8);

    for (double l : {0.1, 0.3, 0.5, 0.6}) {
        const double p = 2.0 / (4 - 5 * l);
        if (p + eps > 2)
            continue;
        const double lo = s_diff_bound(CoefficientDiff::d43, l, p - eps).value;
        const double hi = s_diff_bound(CoefficientDiff::d43, l, p + eps).value;
        CHECK(std::abs(lo - hi) < 1e-7);
    }
    for (double l : {0.7, 1.0, 1.4, kHalfPi}) {
        const double p = 14.0 / (4 + 5 * l);
        const double lo = s_diff_bound(CoefficientDiff::d43, l, p - eps).value;
        const double hi = s_diff_bound(CoefficientDiff::d43, l, p + eps).value;
        CHECK(std::abs(lo - hi) < 1e-7);
        const double near2 = s_diff_bound(CoefficientDiff::d43, l, 2 - 1e-7).value;
        CHECK(std::abs(near2 - l * l * (27 - 17 * l) / 36) < 1e-5);
    }
    for (double l : {0.81, 1.0, 1.4, kHalfPi}) {
        const double p = 8.0 / (4 + 5 * l);
        if (p + eps > 1)
            continue;
        const double lo = k_diff_bound(CoefficientDiff::d43, l, p - eps).value;
        const double hi = k_diff_bound(CoefficientDiff::d43, l, p + eps).value;
        CHECK(std::abs(lo - hi) < 1e-7);
    }
    for (double l : {0.2, 0.5, 0.79, 0.8, 1.2, kHalfPi}) {
        const double anchor = l * l * (36 - 17 * l) / 144;
        CHECK(std::abs(k_diff_bound(CoefficientDiff::d43, l, 1 - 1e-9).value - anchor) < 1e-7);
    }
}

TEST_CASE("anchors hold exactly")
{
    for (double l : {0.7, 1.0, 1.5}) {
        CHECK(s_diff_bound(CoefficientDiff::d43, l, 2.0).value == l * l * (27 - 17 * l) / 36);
        CHECK(k_diff_bound(CoefficientDiff::d43, l, 1.0).value == l * l * (36 - 17 * l) / 144);
    }
}

TEST_CASE("k bound times n equals s bound exactly")
{
    for (double l : lambda_grid(50))
        for (int n = 2; n <= 4; ++n)
            CHECK(k_coeff_bound(n, l).value * n == s_star_coeff_bound(n, l).value);
}

TEST_CASE("bounds are nonnegative on the default branch set")
{
    std::mt19937_64 rng(4);
    std::uniform_real_distribution<double> u(0, 1);
    for (int i = 0; i < 5000; ++i) {
        const double l = 1e-3 + u(rng) * (kHalfPi - 1e-3);
        for (int n = 2; n <= 4; ++n) {
            CHECK(s_star_coeff_bound(n, l).value >= 0);
            CHECK(k_coeff_bound(n, l).value >= 0);
        }
        for (auto d : {CoefficientDiff::d32, CoefficientDiff::d43}) {
            CHECK(s_diff_bound(d, l, 2 * u(rng)).value >= 0);
            CHECK(k_diff_bound(d, l, u(rng)).value >= 0);
        }
    }
    const auto stmt = s_diff_bound(CoefficientDiff::d43, 1.0, 2.0, Psi2Variant::statement);
    CHECK(stmt.value < 0);
    CHECK(stmt.value == doctest::Approx(-1.38889).epsilon(1e-4));
    CHECK(stmt.branch.rfind("psi2-statement:", 0) == 0);
}

TEST_CASE("sup over p at lambda = 1")
{
    CHECK(std::abs(sup_over_p(FunctionClass::starlike, CoefficientDiff::d32, 1.0).value - 0.7) < 1e-9);
    CHECK(std::abs(sup_over_p(FunctionClass::starlike, CoefficientDiff::d43, 1.0).value - 25.0 / 48) < 1e-9);
    CHECK(std::abs(sup_over_p(FunctionClass::convex, CoefficientDiff::d32, 1.0).value - 19.0 / 60) < 1e-9);
    CHECK(std::abs(sup_over_p(FunctionClass::convex, CoefficientDiff::d43, 1.0).value - 1.0 / 6) < 1e-9);
}

TEST_CASE("sup over p dominates endpoints and breakpoints")
{
    for (double l : lambda_grid(40)) {
        for (auto cls : {FunctionClass::starlike, FunctionClass::convex}) {
            for (auto d : {CoefficientDiff::d32, CoefficientDiff::d43}) {
                const auto s = sup_over_p(cls, d, l);
                std::vector<double> probes{0.0, max_normalized_p(cls), 8 / (3 * l), 2 / (4 - 5 * l),
                                           14 / (4 + 5 * l), 8 / (4 + 5 * l)};
                for (int i = 0; i <= 200; ++i)
                    probes.push_back(max_normalized_p(cls) * i / 200);
                for (double p : probes) {
                    if (!(p >= 0 && p <= max_normalized_p(cls)))
                        continue;
                    CHECK(s.value >= diff_bound(cls, d, l, p).value - 1e-12);
                }
            }
        }
    }
}

TEST_CASE("general bound")
{
    CHECK(general_coeff_bound(FunctionClass::starlike, 2, 0.37) == 0.37);
    CHECK(general_coeff_bound(FunctionClass::starlike, 5, 1.0) == 1.0);
    CHECK(general_coeff_bound(FunctionClass::convex, 5, 1.0) == doctest::Approx(0.2));
    for (double l : {0.25, 0.5, 1.0, 1.5}) {
        for (int n = 2; n <= 30; ++n) {
            const RationalValue exact = a_sequence_closed(RationalValue(l), n);
            CHECK(general_coeff_bound(FunctionClass::starlike, n, l) == exact.convert_to<double>());
        }
    }
}
