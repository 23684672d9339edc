#ifndef COEFBOUND_SERIES_HPP
#define COEFBOUND_SERIES_HPP

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace coefbound
{

using Complex = std::complex<double>;

inline constexpr int kDefaultOrder = 12;

enum class FunctionClass { starlike, convex };

const char *to_string(FunctionClass cls);

/// Finite complex Taylor polynomial c_0 + c_1 z + ... + c_N z^N.
///
/// Every coefficient is finite; construction rejects NaN and infinities.
/// Values are immutable once built and all arithmetic returns a new series.
class TruncatedSeries
{
public:
    explicit TruncatedSeries(std::vector<Complex> coeffs);

    static TruncatedSeries zero(int order);
    static TruncatedSeries unit(int order);
    // value * z^k truncated at `order`
    static TruncatedSeries monomial(int order, int k, Complex value = 1.0);

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Complex &operator[](std::size_t k) const { return coeffs_[k]; }
    std::span<const Complex> coeffs() const { return coeffs_; }

    TruncatedSeries truncated(int order) const;

private:
    std::vector<Complex> coeffs_;
};

TruncatedSeries operator+(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries operator-(const TruncatedSeries &s, const TruncatedSeries &t);
TruncatedSeries operator*(Complex scalar, const TruncatedSeries &s);

// Cauchy product truncated to min(order_s, order_t).
TruncatedSeries mul(const TruncatedSeries &s, const TruncatedSeries &t);

// Multiplicative inverse; throws DegenerateInput when s_0 == 0.
TruncatedSeries reciprocal(const TruncatedSeries &s);

// exp(s) for s_0 == 0, via k e_k = sum_j j s_j e_{k-j}.
TruncatedSeries exp_series(const TruncatedSeries &s);

/// Taylor coefficients a_2..a_N of f(z) = z + a_2 z^2 + ...
class CoefficientSequence
{
public:
    CoefficientSequence() = default;
    explicit CoefficientSequence(std::vector<Complex> from_a2) : values_(std::move(from_a2)) {}

    int max_index() const { return static_cast<int>(values_.size()) + 1; }
    // n in [2, max_index()]
    const Complex &at(int n) const;
    std::span<const Complex> values() const { return values_; }

private:
    std::vector<Complex> values_;
};

/// Recovers a_2..a_N from c = zf'/f - 1 using
/// (n-1) a_n = c_{n-1} + sum_{k=2}^{n-1} c_{n-k} a_k.
CoefficientSequence ratio_to_coefficients(const TruncatedSeries &c, int n_max);

/// Coefficients of f whose defining ratio equals exp(lambda * omega):
/// zf'/f for starlike, 1 + zf''/f' for convex (f is then recovered from zf').
CoefficientSequence coefficients_from_schwarz(const TruncatedSeries &omega, double lambda,
                                              FunctionClass cls, int n_max);

/// Expansion of e^{i theta} z prod_j (a_j - z)/(1 - conj(a_j) z) to `order`.
TruncatedSeries blaschke_schwarz(double theta, std::span<const Complex> zeros,
                                 int order = kDefaultOrder);

} // namespace coefbound

#endif
