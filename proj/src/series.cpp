#include <coefbound/series.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include <coefbound/error.hpp>

namespace coefbound
{

namespace
{

constexpr double kZeroConstantTol = 1e-14;

void require_order(int order)
{
    if (order < 0) {
        throw InvalidInput("series order must be non-negative, got " + std::to_string(order));
    }
}

} // namespace

const char *to_string(FunctionClass cls)
{
    return cls == FunctionClass::starlike ? "starlike" : "convex";
}

TruncatedSeries::TruncatedSeries(std::vector<Complex> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) {
        throw InvalidInput("a truncated series needs at least one coefficient");
    }
    for (const auto &c : coeffs_) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw InvalidInput("series coefficients must be finite");
        }
    }
}

TruncatedSeries TruncatedSeries::zero(int order)
{
    require_order(order);
    return TruncatedSeries(std::vector<Complex>(static_cast<std::size_t>(order) + 1));
}

TruncatedSeries TruncatedSeries::unit(int order)
{
    return monomial(order, 0, 1.0);
}

TruncatedSeries TruncatedSeries::monomial(int order, int k, Complex value)
{
    require_order(order);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    if (k >= 0 && k <= order) {
        c[static_cast<std::size_t>(k)] = value;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries TruncatedSeries::truncated(int order) const
{
    require_order(order);
    std::vector<Complex> c(static_cast<std::size_t>(order) + 1);
    std::copy_n(coeffs_.begin(), std::min(c.size(), coeffs_.size()), c.begin());
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator+(const TruncatedSeries &s, const TruncatedSeries &t)
{
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        c[k] = s[k] + t[k];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries operator-(const TruncatedSeries &s, const TruncatedSeries &t)
{
    return s + Complex(-1.0) * t;
}

TruncatedSeries operator*(Complex scalar, const TruncatedSeries &s)
{
    std::vector<Complex> c(s.coeffs().begin(), s.coeffs().end());
    for (auto &v : c) {
        v *= scalar;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t)
{
    const int n = std::min(s.order(), t.order());
    std::vector<Complex> c(static_cast<std::size_t>(n) + 1);
    for (std::size_t k = 0; k < c.size(); ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 0; j <= k; ++j) {
            acc += s[j] * t[k - j];
        }
        c[k] = acc;
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries reciprocal(const TruncatedSeries &s)
{
    if (std::abs(s[0]) == 0.0) {
        throw DegenerateInput("reciprocal of a series with zero constant term");
    }
    const auto n = static_cast<std::size_t>(s.order());
    std::vector<Complex> r(n + 1);
    r[0] = 1.0 / s[0];
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += s[j] * r[k - j];
        }
        r[k] = -acc / s[0];
    }
    return TruncatedSeries(std::move(r));
}

TruncatedSeries exp_series(const TruncatedSeries &s)
{
    if (std::abs(s[0]) > kZeroConstantTol) {
        throw InvalidInput("exp_series expects a series with zero constant term");
    }
    const auto n = static_cast<std::size_t>(s.order());
    std::vector<Complex> e(n + 1);
    e[0] = 1.0;
    for (std::size_t k = 1; k <= n; ++k) {
        Complex acc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            acc += static_cast<double>(j) * s[j] * e[k - j];
        }
        e[k] = acc / static_cast<double>(k);
    }
    return TruncatedSeries(std::move(e));
}

const Complex &CoefficientSequence::at(int n) const
{
    if (n < 2 || n > max_index()) {
        throw InvalidInput("coefficient index " + std::to_string(n) + " outside [2, " +
                           std::to_string(max_index()) + "]");
    }
    return values_[static_cast<std::size_t>(n - 2)];
}

CoefficientSequence ratio_to_coefficients(const TruncatedSeries &c, int n_max)
{
    if (n_max < 2) {
        throw InvalidInput("n_max must be at least 2");
    }
    if (c.order() < n_max - 1) {
        throw InvalidInput("series order " + std::to_string(c.order()) +
                           " too small to recover a_" + std::to_string(n_max));
    }
    if (std::abs(c[0]) > kZeroConstantTol) {
        throw InvalidInput("ratio series must have zero constant term");
    }
    // a[k] holds a_k; a_1 = 1 is implicit in the recursion's c_{n-1} term.
    std::vector<Complex> a(static_cast<std::size_t>(n_max) + 1);
    for (int n = 2; n <= n_max; ++n) {
        Complex acc = c[static_cast<std::size_t>(n - 1)];
        for (int k = 2; k <= n - 1; ++k) {
            acc += c[static_cast<std::size_t>(n - k)] * a[static_cast<std::size_t>(k)];
        }
        a[static_cast<std::size_t>(n)] = acc / static_cast<double>(n - 1);
    }
    return CoefficientSequence(std::vector<Complex>(a.begin() + 2, a.end()));
}

CoefficientSequence coefficients_from_schwarz(const TruncatedSeries &omega, double lambda,
                                              FunctionClass cls, int n_max)
{
    if (!(lambda > 0.0) || lambda > std::numbers::pi / 2 + 1e-12) {
        throw InvalidInput("lambda must lie in (0, pi/2]");
    }
    if (std::abs(omega[0]) > kZeroConstantTol) {
        throw InvalidInput("Schwarz series must vanish at the origin");
    }
    const auto ratio = exp_series(Complex(lambda) * omega) - TruncatedSeries::unit(omega.order());
    auto starlike = ratio_to_coefficients(ratio, n_max);
    if (cls == FunctionClass::starlike) {
        return starlike;
    }
    // f convex  <=>  zf' starlike, and zf' has coefficients n a_n.
    std::vector<Complex> a(starlike.values().begin(), starlike.values().end());
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] /= static_cast<double>(i + 2);
    }
    return CoefficientSequence(std::move(a));
}

TruncatedSeries blaschke_schwarz(double theta, std::span<const Complex> zeros, int order)
{
    require_order(order);
    for (const auto &a : zeros) {
        if (!(std::abs(a) < 1.0)) {
            throw InvalidInput("Blaschke zeros must lie strictly inside the unit disk");
        }
    }
    auto omega = TruncatedSeries::monomial(order, 1, std::polar(1.0, theta));
    for (const auto &a : zeros) {
        const TruncatedSeries num({a, -1.0});
        const TruncatedSeries den({1.0, -std::conj(a)});
        const auto factor = mul(num.truncated(order), reciprocal(den.truncated(order)));
        omega = mul(omega, factor);
    }
    return omega;
}

} // namespace coefbound
