#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include <coefbound/error.hpp>
#include <coefbound/schwarz.hpp>
#include <coefbound/series.hpp>

using namespace coefbound;

namespace
{

double dist(Complex a, Complex b) { return std::abs(a - b); }

// Independent reference: power-sum exp(s) = sum_k s^k / k! with plain loops.
std::vector<Complex> naive_exp(const std::vector<Complex> &s, int order)
{
    std::vector<Complex> out(order + 1, 0.0), power(order + 1, 0.0);
    power[0] = 1.0;
    double fact = 1.0;
    for (int k = 0; k <= order; ++k) {
        if (k > 0) {
            std::vector<Complex> next(order + 1, 0.0);
            for (int i = 0; i <= order; ++i)
                for (int j = 0; i + j <= order; ++j)
                    next[i + j] += power[i] * s[j];
            power = next;
            fact *= k;
        }
        for (int i = 0; i <= order; ++i)
            out[i] += power[i] / fact;
    }
    return out;
}

} // namespace

TEST_CASE("series construction rejects non-finite coefficients")
{
    CHECK_THROWS_AS(TruncatedSeries({Complex(NAN, 0)}), InvalidInput);
    CHECK_THROWS_AS(TruncatedSeries({1.0, Complex(0, INFINITY)}), InvalidInput);
    CHECK_THROWS_AS(TruncatedSeries(std::vector<Complex>{}), InvalidInput);
    CHECK(TruncatedSeries::zero(5).order() == 5);
    CHECK(TruncatedSeries::unit(3)[0] == Complex(1.0));
    CHECK(TruncatedSeries::monomial(4, 2, 3.0)[2] == Complex(3.0));
}

TEST_CASE("mul and reciprocal")
{
    const TruncatedSeries one_minus_z({1.0, -1.0, 0.0, 0.0, 0.0});
    const auto inv = reciprocal(one_minus_z);
    for (int k = 0; k <= 4; ++k)
        CHECK(inv[k] == Complex(1.0));
    const auto back = mul(inv, one_minus_z);
    CHECK(back[0] == Complex(1.0));
    for (int k = 1; k <= 4; ++k)
        CHECK(back[k] == Complex(0.0));

    CHECK_THROWS_AS(reciprocal(TruncatedSeries({0.0, 1.0})), DegenerateInput);

    // truncates to the shorter operand
    CHECK(mul(TruncatedSeries({1.0, 1.0}), TruncatedSeries::unit(6)).order() == 1);
}

TEST_CASE("reciprocal property on random series")
{
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Complex> c(9);
        for (auto &v : c)
            v = {u(rng), u(rng)};
        c[0] += Complex(2.0, 0.0);
        const TruncatedSeries s(c);
        const auto prod = mul(s, reciprocal(s));
        CHECK(dist(prod[0], 1.0) < 1e-12);
        for (int k = 1; k <= 8; ++k)
            CHECK(dist(prod[k], 0.0) < 1e-10);
    }
}

TEST_CASE("exp_series matches factorial coefficients and an independent power sum")
{
    const auto e = exp_series(TruncatedSeries::monomial(10, 1));
    double fact = 1.0;
    for (int k = 0; k <= 10; ++k) {
        if (k > 0)
            fact *= k;
        CHECK(dist(e[k], 1.0 / fact) < 1e-15);
    }
    CHECK_THROWS_AS(exp_series(TruncatedSeries({0.5, 1.0})), InvalidInput);

    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> u(-1, 1);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Complex> c(8, 0.0);
        for (int k = 1; k < 8; ++k)
            c[k] = {u(rng), u(rng)};
        const auto got = exp_series(TruncatedSeries(c));
        const auto want = naive_exp(c, 7);
        for (int k = 0; k <= 7; ++k)
            CHECK(dist(got[k], want[k]) < 1e-10);
    }
}

TEST_CASE("identity Schwarz function gives the known leading coefficients")
{
    const auto w = TruncatedSeries::monomial(kDefaultOrder, 1);
    const auto s = coefficients_from_schwarz(w, 1.0, FunctionClass::starlike, 4);
    CHECK(dist(s.at(2), 1.0) < 1e-14);
    CHECK(dist(s.at(3), 0.75) < 1e-14);
    CHECK(dist(s.at(4), 17.0 / 36.0) < 1e-14);

    const auto k = coefficients_from_schwarz(w, 1.0, FunctionClass::convex, 4);
    CHECK(dist(k.at(2), 0.5) < 1e-14);
    CHECK(dist(k.at(3), 0.25) < 1e-14);
    CHECK(dist(k.at(4), 17.0 / 144.0) < 1e-14);

    CHECK_THROWS(s.at(1));
    CHECK_THROWS(s.at(5));
    CHECK_THROWS_AS(coefficients_from_schwarz(w, 0.0, FunctionClass::starlike, 4), InvalidInput);
    CHECK_THROWS_AS(coefficients_from_schwarz(w, 1.6, FunctionClass::starlike, 4), InvalidInput);
}

TEST_CASE("identity Schwarz function at n = 5 matches the integrated exponential")
{
    // f(z) = z exp(int_0^z (e^t - 1)/t dt), so a_5 = 19/72
    const auto w = TruncatedSeries::monomial(kDefaultOrder, 1);
    const auto s = coefficients_from_schwarz(w, 1.0, FunctionClass::starlike, 5);
    CHECK(dist(s.at(5), 19.0 / 72.0) < 1e-14);
}

TEST_CASE("ratio_to_coefficients inverts zf'/f")
{
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> u(-0.5, 0.5);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 10;
        std::vector<Complex> c(n, 0.0);
        for (int k = 1; k < n; ++k)
            c[k] = {u(rng), u(rng)};
        const auto a = ratio_to_coefficients(TruncatedSeries(c), n);
        // f/z = 1 + a2 z + ..., zf'/f - 1 = (sum (k-1) a_k z^{k-1}) / (f/z)
        std::vector<Complex> fz(n, 0.0), num(n, 0.0);
        fz[0] = 1.0;
        for (int k = 2; k <= n; ++k) {
            fz[k - 1] = a.at(k);
            num[k - 1] = double(k - 1) * a.at(k);
        }
        const auto ratio = mul(TruncatedSeries(num), reciprocal(TruncatedSeries(fz)));
        for (int k = 1; k < n; ++k)
            CHECK(dist(ratio[k], c[k]) < 1e-10);
    }
}

TEST_CASE("convex output equals starlike output divided by n")
{
    std::mt19937_64 rng(17);
    std::uniform_real_distribution<double> u(-0.9, 0.9);
    for (int trial = 0; trial < 50; ++trial) {
        const std::vector<Complex> zeros{{u(rng) * 0.7, u(rng) * 0.7}};
        const auto w = blaschke_schwarz(u(rng) * 3, zeros);
        const double lambda = 0.1 + (u(rng) + 0.9) * 0.8;
        const auto s = coefficients_from_schwarz(w, lambda, FunctionClass::starlike, 12);
        const auto k = coefficients_from_schwarz(w, lambda, FunctionClass::convex, 12);
        for (int n = 2; n <= 12; ++n)
            CHECK(k.at(n) == s.at(n) / double(n));
    }
}

TEST_CASE("blaschke_schwarz examples")
{
    const auto id = blaschke_schwarz(0.0, {});
    CHECK(id[0] == Complex(0.0));
    CHECK(id[1] == Complex(1.0));
    CHECK(id[2] == Complex(0.0));

    const std::vector<Complex> origin{0.0};
    const auto sq = blaschke_schwarz(0.0, origin);
    CHECK(dist(sq[1], 0.0) < 1e-15);
    CHECK(dist(sq[2], -1.0) < 1e-15);

    const std::vector<Complex> half{0.5};
    const auto b = blaschke_schwarz(0.0, half);
    CHECK(dist(b[1], 0.5) < 1e-15);
    CHECK(dist(b[2], -0.75) < 1e-15);
    CHECK(dist(b[3], -0.375) < 1e-15);

    const std::vector<Complex> bad{Complex(0.6, 0.8)};
    CHECK_THROWS_AS(blaschke_schwarz(0.0, bad), InvalidInput);
}

TEST_CASE("random Blaschke products satisfy Carleson and subordinate coefficient bounds")
{
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0, 1);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<Complex> zeros;
        const int d = int(u(rng) * 3);
        for (int j = 0; j < d; ++j)
            zeros.push_back(std::polar(0.999 * std::sqrt(u(rng)), 2 * M_PI * u(rng)));
        const auto w = blaschke_schwarz(2 * M_PI * u(rng), zeros);
        CHECK(w[0] == Complex(0.0));
        CHECK(validate_schwarz({w[1], w[2], w[3]}));
        const double lambda = 0.05 + u(rng) * (M_PI / 2 - 0.05);
        const auto e = exp_series(lambda * w);
        for (int n = 1; n <= kDefaultOrder; ++n)
            CHECK(std::abs(e[n]) <= lambda + 1e-12);
    }
}
