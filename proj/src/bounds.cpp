#include <coefbound/bounds.hpp>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include <coefbound/error.hpp>
#include <coefbound/lemmas.hpp>

namespace coefbound
{

namespace
{

double cubic_eq(double r)
{
    return ((425.0 * r + 340.0) * r - 328.0) * r - 240.0;
}

double compute_r0()
{
    double lo = 0.8;
    double hi = 0.9;
    // g(0.8) < 0 < g(0.9)
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) {
            break;
        }
        const double g = cubic_eq(mid);
        if (g == 0.0) {
            return mid;
        }
        (g < 0.0 ? lo : hi) = mid;
    }
    return std::abs(cubic_eq(lo)) <= std::abs(cubic_eq(hi)) ? lo : hi;
}

bool at_or_below(double x, double breakpoint)
{
    return x <= breakpoint + kBreakpointTol;
}

void require_n(int n)
{
    if (n < 2 || n > 4) {
        throw InvalidInput("sharp coefficient bounds cover n = 2, 3, 4; got n = " + std::to_string(n));
    }
}

// Convex-class |a_n| bounds; the starlike bounds are n times these.
BoundResult convex_coefficient(int n, double lambda)
{
    require_n(n);
    require_lambda(lambda);
    const double l = lambda;
    BoundResult r;
    r.cls = FunctionClass::convex;
    r.lambda = lambda;
    r.n = n;
    if (n == 2) {
        r.value = l / 2.0;
        r.branch = "all";
    } else if (n == 3) {
        if (at_or_below(l, 2.0 / 3.0)) {
            r.value = l / 6.0;
            r.branch = "lambda<=2/3";
        } else {
            r.value = l * l / 4.0;
            r.branch = "lambda>2/3";
        }
    } else if (at_or_below(l, 0.2)) {
        r.value = l / 12.0;
        r.branch = "lambda<=1/5";
    } else if (at_or_below(l, r0_root())) {
        r.value = l / 36.0 * (5.0 * l + 2.0) *
                  std::sqrt((30.0 * l + 12.0) / (17.0 * l * l + 90.0 * l + 12.0));
        r.branch = "1/5<lambda<=r0";
    } else if (at_or_below(l, std::sqrt(32.0 / 43.0))) {
        const double u = 25.0 * l * l - 16.0;
        r.value = 17.0 / 1008.0 * u * std::sqrt(u / (17.0 * l * l - 12.0));
        r.branch = "r0<lambda<=sqrt(32/43)";
    } else {
        r.value = 17.0 / 144.0 * l * l * l;
        r.branch = "lambda>sqrt(32/43)";
    }
    return r;
}

double psi_small_p(double l, double p)
{
    return l / 1152.0 *
           (7.0 * l * l * p * p * p + (150.0 * l * l + 36.0 * l - 96.0) * p * p +
            (108.0 - 360.0 * l) * p + 600.0);
}

double psi1_large_p(double l, double p)
{
    return l / 288.0 *
           ((-17.0 * l * l + 30.0 * l - 12.0) * p * p * p + (54.0 * l - 36.0) * p * p +
            (48.0 - 120.0 * l) * p + 144.0);
}

double psi2_large_p(double l, double p, Psi2Variant variant)
{
    const double linear = variant == Psi2Variant::proof ? 120.0 * l + 48.0 : 48.0 - 120.0 * l;
    return l / 288.0 *
           ((-17.0 * l * l - 30.0 * l - 12.0) * p * p * p + (54.0 * l + 36.0) * p * p +
            linear * p - 144.0);
}

double theta1(double l, double p)
{
    return l / 144.0 *
           ((-17.0 * l * l + 30.0 * l - 12.0) * p * p * p + (36.0 * l - 24.0) * p * p +
            (12.0 - 30.0 * l) * p + 24.0);
}

double theta2_small_p(double l, double p)
{
    return l / 576.0 *
           (7.0 * l * l * p * p * p + (75.0 * l * l + 24.0 * l - 48.0) * p * p +
            (48.0 - 120.0 * l) * p + 96.0);
}

double theta2_large_p(double l, double p)
{
    return l / 144.0 *
           ((-17.0 * l * l - 30.0 * l - 12.0) * p * p * p + (36.0 * l + 24.0) * p * p +
            (30.0 * l + 12.0) * p - 24.0);
}

BoundResult diff_result(FunctionClass cls, double lambda, double p, double value, std::string branch)
{
    BoundResult r;
    r.cls = cls;
    r.lambda = lambda;
    r.p = p;
    r.value = value;
    r.branch = std::move(branch);
    return r;
}

// Interior breakpoints in p of the piecewise difference bound.
std::vector<double> diff_breakpoints(FunctionClass cls, CoefficientDiff which, double l)
{
    const double pmax = max_normalized_p(cls);
    std::vector<double> b;
    if (cls == FunctionClass::starlike) {
        if (which == CoefficientDiff::d32) {
            b.push_back(8.0 / (3.0 * l));
        } else if (at_or_below(l, 0.6)) {
            b.push_back(2.0 / (4.0 - 5.0 * l));
        } else {
            b.push_back(14.0 / (4.0 + 5.0 * l));
        }
    } else if (which == CoefficientDiff::d43 && l >= 0.8 - kBreakpointTol) {
        b.push_back(8.0 / (4.0 + 5.0 * l));
    }
    std::erase_if(b, [pmax](double x) { return !(x > 0.0 && x < pmax); });
    return b;
}

double golden_max(const auto &f, double lo, double hi, double tol, double &arg)
{
    const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
    double a = lo;
    double b = hi;
    double c = b - inv_phi * (b - a);
    double d = a + inv_phi * (b - a);
    double fc = f(c);
    double fd = f(d);
    while (b - a > tol) {
        if (fc >= fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - inv_phi * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + inv_phi * (b - a);
            fd = f(d);
        }
    }
    arg = 0.5 * (a + b);
    return f(arg);
}

} // namespace

const char *to_string(CoefficientDiff which)
{
    return which == CoefficientDiff::d32 ? "d32" : "d43";
}

const char *to_string(Psi2Variant variant)
{
    return variant == Psi2Variant::proof ? "proof" : "statement";
}

void require_lambda(double lambda)
{
    if (!(lambda > 0.0) || !(lambda <= std::numbers::pi / 2 + kBreakpointTol)) {
        throw InvalidInput("lambda must lie in (0, pi/2], got " + std::to_string(lambda));
    }
}

double max_normalized_p(FunctionClass cls)
{
    return cls == FunctionClass::starlike ? 2.0 : 1.0;
}

void require_normalized_p(FunctionClass cls, double p)
{
    if (!(p >= 0.0) || !(p <= max_normalized_p(cls))) {
        throw InvalidInput(std::string("p must lie in [0, ") +
                           (cls == FunctionClass::starlike ? "2" : "1") + "] for the " +
                           to_string(cls) + " class, got " + std::to_string(p));
    }
}

double r0_root()
{
    static const double root = compute_r0();
    return root;
}

double r0_residual(double r)
{
    return std::abs(cubic_eq(r));
}

BoundResult k_coeff_bound(int n, double lambda)
{
    return convex_coefficient(n, lambda);
}

BoundResult s_star_coeff_bound(int n, double lambda)
{
    auto r = convex_coefficient(n, lambda);
    r.cls = FunctionClass::starlike;
    r.value *= n;
    return r;
}

BoundResult coeff_bound(FunctionClass cls, int n, double lambda)
{
    return cls == FunctionClass::starlike ? s_star_coeff_bound(n, lambda) : k_coeff_bound(n, lambda);
}

BoundResult s_diff_bound(CoefficientDiff which, double lambda, double p, Psi2Variant variant)
{
    require_lambda(lambda);
    require_normalized_p(FunctionClass::starlike, p);
    const double l = lambda;
    const auto make = [&](double v, std::string b) {
        return diff_result(FunctionClass::starlike, lambda, p, v, std::move(b));
    };
    if (which == CoefficientDiff::d32) {
        if (at_or_below(p, 8.0 / (3.0 * l))) {
            return make(l / 16.0 * (8.0 + 8.0 * p - (3.0 * l + 2.0) * p * p), "p<=8/(3lambda)");
        }
        return make(l / 16.0 * (8.0 - 8.0 * p + (3.0 * l - 2.0) * p * p), "p>8/(3lambda)");
    }
    if (variant == Psi2Variant::proof && p >= 2.0 - kBreakpointTol) {
        return make(l * l * (27.0 - 17.0 * l) / 36.0, "p=2");
    }
    if (at_or_below(l, 0.6)) {
        if (at_or_below(p, 2.0 / (4.0 - 5.0 * l))) {
            return make(psi_small_p(l, p), "psi1:p<=2/(4-5lambda)");
        }
        return make(psi1_large_p(l, p), "psi1:p>2/(4-5lambda)");
    }
    if (at_or_below(p, 14.0 / (4.0 + 5.0 * l))) {
        return make(psi_small_p(l, p), "psi2:p<=14/(4+5lambda)");
    }
    return make(psi2_large_p(l, p, variant),
                variant == Psi2Variant::proof ? "psi2:p>14/(4+5lambda)"
                                              : "psi2-statement:p>14/(4+5lambda)");
}

BoundResult k_diff_bound(CoefficientDiff which, double lambda, double p)
{
    require_lambda(lambda);
    require_normalized_p(FunctionClass::convex, p);
    const double l = lambda;
    const auto make = [&](double v, std::string b) {
        return diff_result(FunctionClass::convex, lambda, p, v, std::move(b));
    };
    if (which == CoefficientDiff::d32) {
        return make(l / 12.0 * (2.0 + 6.0 * p - (3.0 * l + 2.0) * p * p), "all");
    }
    if (p >= 1.0 - kBreakpointTol) {
        return make(l * l * (36.0 - 17.0 * l) / 144.0, "p=1");
    }
    // Theta1 on lambda < 4/5, Theta2 on lambda >= 4/5
    if (l < 0.8 - kBreakpointTol) {
        return make(theta1(l, p), "theta1");
    }
    if (at_or_below(p, 8.0 / (4.0 + 5.0 * l))) {
        return make(theta2_small_p(l, p), "theta2:p<=8/(4+5lambda)");
    }
    return make(theta2_large_p(l, p), "theta2:p>8/(4+5lambda)");
}

BoundResult diff_bound(FunctionClass cls, CoefficientDiff which, double lambda, double p,
                       Psi2Variant variant)
{
    return cls == FunctionClass::starlike ? s_diff_bound(which, lambda, p, variant)
                                          : k_diff_bound(which, lambda, p);
}

SupOverP sup_over_p(FunctionClass cls, CoefficientDiff which, double lambda, Psi2Variant variant)
{
    require_lambda(lambda);
    const double pmax = max_normalized_p(cls);
    const auto f = [&](double p) { return diff_bound(cls, which, lambda, p, variant).value; };

    std::vector<double> knots{0.0};
    for (double b : diff_breakpoints(cls, which, lambda)) {
        knots.push_back(b);
    }
    knots.push_back(pmax);

    SupOverP best{0.0, f(0.0)};
    const auto consider = [&](double p, double v) {
        if (v > best.value) {
            best = {p, v};
        }
    };
    for (double k : knots) {
        consider(k, f(k));
    }
    constexpr int kScan = 64;
    for (std::size_t i = 0; i + 1 < knots.size(); ++i) {
        const double lo = knots[i];
        const double hi = knots[i + 1];
        // coarse scan brackets the branch maximum, golden section polishes it
        int best_j = 0;
        double best_v = f(lo);
        for (int j = 1; j <= kScan; ++j) {
            const double v = f(lo + (hi - lo) * j / kScan);
            if (v > best_v) {
                best_v = v;
                best_j = j;
            }
        }
        const double a = lo + (hi - lo) * std::max(best_j - 1, 0) / kScan;
        const double b = lo + (hi - lo) * std::min(best_j + 1, kScan) / kScan;
        double arg = 0.0;
        const double v = golden_max(f, a, b, 1e-10, arg);
        consider(arg, v);
    }
    return best;
}

double general_coeff_bound(FunctionClass cls, int n, double lambda)
{
    require_lambda(lambda);
    if (n < 2) {
        throw InvalidInput("general coefficient bound needs n >= 2");
    }
    RationalValue exact = a_sequence_closed(RationalValue(lambda), n);
    if (cls == FunctionClass::convex) {
        exact /= n;
    }
    return exact.convert_to<double>();
}

} // namespace coefbound
