#ifndef COEFBOUND_LEMMAS_HPP
#define COEFBOUND_LEMMAS_HPP

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include <coefbound/schwarz.hpp>

namespace coefbound
{

// ---------------------------------------------------------------------------
// Third-coefficient functional |c3 + mu c1 c2 + nu c1^3| over Schwarz functions
// ---------------------------------------------------------------------------

enum class Region { D1, D2, D3, D4, D5 };

const char *to_string(Region r);

/// Regions whose closed defining inequalities hold at (mu, nu), in index
/// order. Each comparison has 1e-12 slack, so shared boundaries carry several
/// labels; the point (2, 1) is excluded from D4. May be empty.
std::vector<Region> classify_region(double mu, double nu);

struct PhiBound
{
    double value = 0.0;
    std::vector<Region> regions;
};

/// Piecewise upper bound on the functional at (mu, nu), taking the smallest
/// value among the matched regions' branches. Throws Unclassified when no
/// region matches.
PhiBound phi_bound(double mu, double nu);

double psi_functional(const SchwarzCoefficients &c, double mu, double nu);

// ---------------------------------------------------------------------------
// Y(a, b, c) = max over the closed disk of |a + b z + c z^2| + 1 - |z|^2
// ---------------------------------------------------------------------------

struct YInput
{
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

enum class YBranch { boundary, interior };

struct YValue
{
    double value = 0.0;
    // boundary: |b| >= 2(1-c), value a + |b| + c attained at z = +-1;
    // interior: |b| < 2(1-c), value 1 + a + b^2 / (4(1-c)).
    YBranch branch = YBranch::boundary;
};

YValue y_closed_form(const YInput &in);

/// Grid maximum over r_i = i/radial, theta_j = 2 pi j/angular, then a local
/// pattern refinement around the best node. Shares no branch logic with
/// y_closed_form.
double y_bruteforce(const YInput &in, int radial = 512, int angular = 1024);

// ---------------------------------------------------------------------------
// A_m sequence
// ---------------------------------------------------------------------------

using RationalValue = boost::multiprecision::cpp_rational;

// A_2 = lambda, A_m = lambda/(m-1) (1 + sum_{k=2}^{m-1} A_k)
RationalValue a_sequence_recursive(const RationalValue &lambda, int m);
// A_m = prod_{k=0}^{m-2} (lambda + k) / (m-1)!
RationalValue a_sequence_closed(const RationalValue &lambda, int m);

} // namespace coefbound

#endif
