#include <coefbound/lemmas.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include <coefbound/error.hpp>

namespace coefbound
{

namespace
{

constexpr double kRegionSlack = 1e-12;

bool le(double lhs, double rhs)
{
    return lhs <= rhs + kRegionSlack;
}

double d2_upper(double m)
{
    return 4.0 / 27.0 * ((m + 1.0) * (m + 1.0) * (m + 1.0) - (m + 1.0));
}

double d3_upper(double m)
{
    return 2.0 * m * (m + 1.0) / (m * m + 2.0 * m + 4.0);
}

double d4_upper(double m)
{
    return (m * m + 8.0) / 12.0;
}

double branch_value(Region r, double mu, double nu)
{
    const double m = std::abs(mu);
    switch (r) {
    case Region::D1:
        return 1.0;
    case Region::D2:
    case Region::D3:
        return 2.0 / 3.0 * (m + 1.0) * std::sqrt((m + 1.0) / (3.0 * m + 1.0 + nu));
    case Region::D4: {
        const double mu2m4 = mu * mu - 4.0;
        return nu / 3.0 * (mu2m4 / (mu * mu - 4.0 * nu)) * std::sqrt(mu2m4 / (3.0 * (nu - 1.0)));
    }
    case Region::D5:
        return std::abs(nu);
    }
    return std::numeric_limits<double>::quiet_NaN();
}

double y_objective(const YInput &in, double r, double theta)
{
    const Complex z = std::polar(r, theta);
    return std::abs(in.a + in.b * z + in.c * z * z) + 1.0 - r * r;
}

} // namespace

const char *to_string(Region r)
{
    switch (r) {
    case Region::D1:
        return "D1";
    case Region::D2:
        return "D2";
    case Region::D3:
        return "D3";
    case Region::D4:
        return "D4";
    case Region::D5:
        return "D5";
    }
    return "?";
}

std::vector<Region> classify_region(double mu, double nu)
{
    const double m = std::abs(mu);
    const double d_lower = -2.0 / 3.0 * (m + 1.0);
    std::vector<Region> out;
    if (le(m, 0.5) && le(-1.0, nu) && le(nu, 1.0)) {
        out.push_back(Region::D1);
    }
    if (le(0.5, m) && le(m, 2.0) && le(d_lower, nu) && le(nu, d2_upper(m))) {
        out.push_back(Region::D2);
    }
    if (le(2.0, m) && le(d_lower, nu) && le(nu, d3_upper(m))) {
        out.push_back(Region::D3);
    }
    const bool excluded_corner =
        std::abs(mu - 2.0) <= kRegionSlack && std::abs(nu - 1.0) <= kRegionSlack;
    if (le(2.0, m) && le(m, 4.0) && le(d3_upper(m), nu) && le(nu, d4_upper(m)) && !excluded_corner) {
        out.push_back(Region::D4);
    }
    if (le(2.0, m) && le(m, 4.0) && le(d4_upper(m), nu)) {
        out.push_back(Region::D5);
    }
    return out;
}

PhiBound phi_bound(double mu, double nu)
{
    auto regions = classify_region(mu, nu);
    if (regions.empty()) {
        throw Unclassified("(mu, nu) = (" + std::to_string(mu) + ", " + std::to_string(nu) +
                           ") lies in none of the regions D1-D5");
    }
    double best = std::numeric_limits<double>::infinity();
    for (Region r : regions) {
        const double v = branch_value(r, mu, nu);
        // the D4 expression degenerates on its slack-widened edge
        if (std::isfinite(v)) {
            best = std::min(best, v);
        }
    }
    if (!std::isfinite(best)) {
        throw Unclassified("no finite branch value at the matched regions");
    }
    return {best, std::move(regions)};
}

double psi_functional(const SchwarzCoefficients &c, double mu, double nu)
{
    return std::abs(c.c3 + mu * c.c1 * c.c2 + nu * c.c1 * c.c1 * c.c1);
}

YValue y_closed_form(const YInput &in)
{
    if (!(in.a >= 0.0) || !(in.c >= 0.0) || !std::isfinite(in.b) || !std::isfinite(in.a) ||
        !std::isfinite(in.c)) {
        throw InvalidInput("Y(a, b, c) closed form requires finite a >= 0 and c >= 0");
    }
    const double abs_b = std::abs(in.b);
    if (abs_b >= 2.0 * (1.0 - in.c)) {
        return {in.a + abs_b + in.c, YBranch::boundary};
    }
    return {1.0 + in.a + in.b * in.b / (4.0 * (1.0 - in.c)), YBranch::interior};
}

double y_bruteforce(const YInput &in, int radial, int angular)
{
    if (radial < 64 || angular < 128) {
        throw InvalidInput("y_bruteforce needs radial >= 64 and angular >= 128");
    }
    const double dtheta = 2.0 * std::numbers::pi / angular;
    std::vector<Complex> unit(static_cast<std::size_t>(angular));
    for (int j = 0; j < angular; ++j) {
        unit[static_cast<std::size_t>(j)] = std::polar(1.0, dtheta * j);
    }

    // first strictly greater node wins: ties resolve to the lowest (i, j)
    double best = -std::numeric_limits<double>::infinity();
    int best_i = 0;
    int best_j = 0;
    for (int i = 0; i <= radial; ++i) {
        const double r = static_cast<double>(i) / radial;
        const double tail = 1.0 - r * r;
        for (int j = 0; j < angular; ++j) {
            const Complex z = r * unit[static_cast<std::size_t>(j)];
            const double v = std::abs(in.a + in.b * z + in.c * z * z) + tail;
            if (v > best) {
                best = v;
                best_i = i;
                best_j = j;
            }
        }
    }

    double r0 = static_cast<double>(best_i) / radial;
    double t0 = dtheta * best_j;
    double step_r = 1.0 / radial;
    double step_t = dtheta;
    for (int iter = 0; iter < 200 && step_r > 1e-13; ++iter) {
        bool moved = false;
        double nr = r0;
        double nt = t0;
        for (int di = -2; di <= 2; ++di) {
            for (int dj = -2; dj <= 2; ++dj) {
                const double r = std::clamp(r0 + di * step_r, 0.0, 1.0);
                const double t = t0 + dj * step_t;
                const double v = y_objective(in, r, t);
                if (v > best) {
                    best = v;
                    nr = r;
                    nt = t;
                    moved = true;
                }
            }
        }
        if (moved) {
            r0 = nr;
            t0 = nt;
        } else {
            step_r *= 0.5;
            step_t *= 0.5;
        }
    }
    return best;
}

RationalValue a_sequence_recursive(const RationalValue &lambda, int m)
{
    if (m < 2) {
        throw InvalidInput("A_m is defined for m >= 2, got m = " + std::to_string(m));
    }
    RationalValue term = lambda;
    RationalValue partial = 1 + term; // 1 + sum_{k=2}^{j} A_k
    for (int j = 3; j <= m; ++j) {
        term = lambda * partial / (j - 1);
        partial += term;
    }
    return term;
}

RationalValue a_sequence_closed(const RationalValue &lambda, int m)
{
    if (m < 2) {
        throw InvalidInput("A_m is defined for m >= 2, got m = " + std::to_string(m));
    }
    RationalValue product = 1;
    boost::multiprecision::cpp_int factorial = 1;
    for (int k = 0; k <= m - 2; ++k) {
        product *= lambda + k;
        factorial *= k + 1;
    }
    return product / RationalValue(factorial);
}

} // namespace coefbound
