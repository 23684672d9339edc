#ifndef COEFBOUND_SCHWARZ_HPP
#define COEFBOUND_SCHWARZ_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include <coefbound/series.hpp>

namespace coefbound
{

inline constexpr double kParamTol = 1e-15;
inline constexpr double kSchwarzTol = 1e-12;

/// Free parameters (p1, x, y) of an admissible Caratheodory triple (p1, p2, p3).
///
/// p1 is real in [-2, 2]; x and y lie in the closed unit disk.
struct CaratheodoryParams
{
    double p1 = 0.0;
    Complex x = 0.0;
    Complex y = 0.0;

    friend bool operator==(const CaratheodoryParams &, const CaratheodoryParams &) = default;
};

bool is_admissible(const CaratheodoryParams &params);
// Throws InvalidInput when `params` is outside the parameter body.
void require_admissible(const CaratheodoryParams &params);

// Lexicographic order on (p1, Re x, Im x, Re y, Im y).
bool lexicographically_less(const CaratheodoryParams &a, const CaratheodoryParams &b);

class CaratheodoryMoments
{
public:
    const Complex &p1() const { return p1_; }
    const Complex &p2() const { return p2_; }
    const Complex &p3() const { return p3_; }

private:
    CaratheodoryMoments(Complex p1, Complex p2, Complex p3) : p1_(p1), p2_(p2), p3_(p3) {}
    friend CaratheodoryMoments caratheodory_moments(const CaratheodoryParams &params);

    Complex p1_, p2_, p3_;
};

struct SchwarzCoefficients
{
    Complex c1 = 0.0;
    Complex c2 = 0.0;
    Complex c3 = 0.0;
};

// 2 p2 = p1^2 + (4 - p1^2) x
// 4 p3 = p1^3 + 2 (4 - p1^2) p1 x - (4 - p1^2) p1 x^2 + 2 (4 - p1^2)(1 - |x|^2) y
CaratheodoryMoments caratheodory_moments(const CaratheodoryParams &params);

// Coefficients of omega = (p - 1)/(p + 1) through z^3.
SchwarzCoefficients caratheodory_to_schwarz(const CaratheodoryMoments &m);

// |c1| <= 1 and the Carleson bound |c2| <= 1 - |c1|^2, both with 1e-12 slack.
bool validate_schwarz(const SchwarzCoefficients &c);

// omega = c1 z + c2 z^2 + c3 z^3 as a series of the given order (>= 3).
TruncatedSeries schwarz_series(const SchwarzCoefficients &c, int order = 3);

enum class SampleStrategy { grid, random, refine_around };

struct SamplerOptions
{
    // When set, p1 is pinned and only (x, y) vary.
    std::optional<double> fixed_p1;
    // Centre and radius for refine_around. Every sample satisfies
    // |p1 - p1*| <= radius, |x - x*| <= radius, |y - y*| <= radius.
    CaratheodoryParams incumbent{};
    double radius = 0.1;
};

/// Deterministic parameter samples for the extremal search.
///
/// `grid` stratifies p1 in [0, 2] and the polar coordinates of x and y with a
/// common number of levels per axis; moduli include 0 and 1 and phases include
/// 0 and pi. It returns at most `count` points (the largest full product that
/// fits). `random` draws uniformly in the same coordinates. `refine_around`
/// perturbs the incumbent and projects back onto the parameter body.
std::vector<CaratheodoryParams> sample_params(std::uint64_t seed, std::size_t count,
                                              SampleStrategy strategy,
                                              const SamplerOptions &options = {});

} // namespace coefbound

#endif
