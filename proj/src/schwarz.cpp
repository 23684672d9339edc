#include <coefbound/schwarz.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <tuple>

#include <coefbound/error.hpp>

namespace coefbound
{

namespace
{

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double unit_uniform(std::mt19937_64 &rng)
{
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double symmetric_uniform(std::mt19937_64 &rng)
{
    return 2.0 * unit_uniform(rng) - 1.0;
}

std::vector<double> linspace(double lo, double hi, int levels)
{
    std::vector<double> v(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) {
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (levels - 1);
    }
    v.back() = hi;
    return v;
}

std::vector<double> phases(int levels)
{
    std::vector<double> v(static_cast<std::size_t>(levels));
    for (int i = 0; i < levels; ++i) {
        v[static_cast<std::size_t>(i)] = kTwoPi * i / levels;
    }
    return v;
}

// Exact for the phases the grid uses most: 0, pi/2, pi, 3pi/2.
Complex polar_exact(double modulus, double phase)
{
    if (phase == 0.0) {
        return {modulus, 0.0};
    }
    if (phase == std::numbers::pi) {
        return {-modulus, 0.0};
    }
    if (phase == std::numbers::pi / 2) {
        return {0.0, modulus};
    }
    if (phase == 3.0 * std::numbers::pi / 2) {
        return {0.0, -modulus};
    }
    return std::polar(modulus, phase);
}

Complex project_to_disk(Complex z)
{
    const double r = std::abs(z);
    return r > 1.0 ? z / r : z;
}

std::size_t grid_size(int levels, int dims_plain)
{
    const int phase_levels = levels % 2 == 0 ? levels : levels - 1;
    std::size_t n = 1;
    for (int i = 0; i < dims_plain; ++i) {
        n *= static_cast<std::size_t>(levels);
    }
    return n * static_cast<std::size_t>(phase_levels) * static_cast<std::size_t>(phase_levels);
}

std::vector<CaratheodoryParams> grid_samples(std::size_t count, const SamplerOptions &options)
{
    // plain axes: p1 (unless fixed), |x|, |y|; phase axes: arg x, arg y
    const int dims_plain = options.fixed_p1 ? 2 : 3;
    int levels = 2;
    while (grid_size(levels + 1, dims_plain) <= count) {
        ++levels;
    }
    const int phase_levels = levels % 2 == 0 ? levels : levels - 1;

    const auto p1_axis = options.fixed_p1 ? std::vector<double>{*options.fixed_p1}
                                          : linspace(2.0, 0.0, levels);
    const auto mod_axis = linspace(1.0, 0.0, levels);
    const auto arg_axis = phases(phase_levels);

    std::vector<CaratheodoryParams> out;
    out.reserve(grid_size(levels, dims_plain));
    for (double p1 : p1_axis) {
        for (double rx : mod_axis) {
            for (double ax : arg_axis) {
                for (double ry : mod_axis) {
                    for (double ay : arg_axis) {
                        out.push_back({p1, polar_exact(rx, ax), polar_exact(ry, ay)});
                    }
                }
            }
        }
    }
    if (out.size() > count) {
        out.resize(count);
    }
    return out;
}

} // namespace

bool is_admissible(const CaratheodoryParams &params)
{
    return std::isfinite(params.p1) && std::abs(params.p1) <= 2.0 + kParamTol &&
           std::isfinite(params.x.real()) && std::isfinite(params.x.imag()) &&
           std::isfinite(params.y.real()) && std::isfinite(params.y.imag()) &&
           std::abs(params.x) <= 1.0 + kParamTol && std::abs(params.y) <= 1.0 + kParamTol;
}

void require_admissible(const CaratheodoryParams &params)
{
    if (!is_admissible(params)) {
        throw InvalidInput("Caratheodory parameters out of range: need |p1| <= 2, |x| <= 1, |y| <= 1");
    }
}

bool lexicographically_less(const CaratheodoryParams &a, const CaratheodoryParams &b)
{
    return std::tuple(a.p1, a.x.real(), a.x.imag(), a.y.real(), a.y.imag()) <
           std::tuple(b.p1, b.x.real(), b.x.imag(), b.y.real(), b.y.imag());
}

CaratheodoryMoments caratheodory_moments(const CaratheodoryParams &params)
{
    require_admissible(params);
    const double p1 = params.p1;
    const Complex x = params.x;
    const Complex y = params.y;
    const double s = 4.0 - p1 * p1;
    const double mod_x2 = std::norm(x);
    const Complex p2 = (p1 * p1 + s * x) / 2.0;
    const Complex p3 =
        (p1 * p1 * p1 + 2.0 * s * p1 * x - s * p1 * x * x + 2.0 * s * (1.0 - mod_x2) * y) / 4.0;
    return {p1, p2, p3};
}

SchwarzCoefficients caratheodory_to_schwarz(const CaratheodoryMoments &m)
{
    const Complex p1 = m.p1();
    const Complex p2 = m.p2();
    const Complex p3 = m.p3();
    return {p1 / 2.0, p2 / 2.0 - p1 * p1 / 4.0, p3 / 2.0 - p1 * p2 / 2.0 + p1 * p1 * p1 / 8.0};
}

bool validate_schwarz(const SchwarzCoefficients &c)
{
    const double a1 = std::abs(c.c1);
    return a1 <= 1.0 + kSchwarzTol && std::abs(c.c2) <= 1.0 - a1 * a1 + kSchwarzTol;
}

TruncatedSeries schwarz_series(const SchwarzCoefficients &c, int order)
{
    if (order < 3) {
        throw InvalidInput("Schwarz series needs order >= 3");
    }
    std::vector<Complex> coeffs(static_cast<std::size_t>(order) + 1);
    coeffs[1] = c.c1;
    coeffs[2] = c.c2;
    coeffs[3] = c.c3;
    return TruncatedSeries(std::move(coeffs));
}

std::vector<CaratheodoryParams> sample_params(std::uint64_t seed, std::size_t count,
                                              SampleStrategy strategy,
                                              const SamplerOptions &options)
{
    if (count == 0) {
        throw InvalidInput("sample count must be positive");
    }
    if (options.fixed_p1 && !(std::abs(*options.fixed_p1) <= 2.0)) {
        throw InvalidInput("fixed p1 must lie in [-2, 2]");
    }
    if (strategy == SampleStrategy::grid) {
        return grid_samples(count, options);
    }

    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(strategy)};
    std::mt19937_64 rng(seq);
    std::vector<CaratheodoryParams> out;
    out.reserve(count);

    if (strategy == SampleStrategy::random) {
        for (std::size_t i = 0; i < count; ++i) {
            const double p1 = options.fixed_p1 ? *options.fixed_p1 : 2.0 * unit_uniform(rng);
            const double rx = unit_uniform(rng);
            const double ax = kTwoPi * unit_uniform(rng);
            const double ry = unit_uniform(rng);
            const double ay = kTwoPi * unit_uniform(rng);
            out.push_back({p1, std::polar(rx, ax), std::polar(ry, ay)});
        }
        return out;
    }

    if (!(options.radius >= 0.0)) {
        throw InvalidInput("refine radius must be non-negative");
    }
    require_admissible(options.incumbent);
    const auto &c = options.incumbent;
    const double r = options.radius;
    for (std::size_t i = 0; i < count; ++i) {
        double p1 = c.p1;
        if (options.fixed_p1) {
            p1 = *options.fixed_p1;
        } else {
            // stay within [0, 2] unless the incumbent itself is negative
            const double lo = c.p1 < 0.0 ? -2.0 : 0.0;
            p1 = std::clamp(c.p1 + r * symmetric_uniform(rng), lo, 2.0);
        }
        const Complex dx = std::polar(r * std::sqrt(unit_uniform(rng)), kTwoPi * unit_uniform(rng));
        const Complex dy = std::polar(r * std::sqrt(unit_uniform(rng)), kTwoPi * unit_uniform(rng));
        out.push_back({p1, project_to_disk(c.x + dx), project_to_disk(c.y + dy)});
    }
    return out;
}

} // namespace coefbound
