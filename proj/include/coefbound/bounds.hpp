#ifndef COEFBOUND_BOUNDS_HPP
#define COEFBOUND_BOUNDS_HPP

#include <optional>
#include <string>

#include <coefbound/series.hpp>

namespace coefbound
{

inline constexpr double kBreakpointTol = 1e-12;

enum class CoefficientDiff { d32, d43 };

// Which second branch of the lambda > 3/5 successive-difference bound to use
// for |a4 - a3| in the starlike class. `proof` carries (120 lambda + 48) p and
// agrees with the p = 2 anchor; `statement` carries (48 - 120 lambda) p.
enum class Psi2Variant { proof, statement };

const char *to_string(CoefficientDiff which);
const char *to_string(Psi2Variant variant);

struct BoundResult
{
    double value = 0.0;
    std::string branch;
    FunctionClass cls = FunctionClass::starlike;
    double lambda = 0.0;
    std::optional<double> p;
    // coefficient index for |a_n| bounds, 0 for difference bounds
    int n = 0;
};

// Throws InvalidInput unless 0 < lambda <= pi/2.
void require_lambda(double lambda);
// Throws InvalidInput unless p lies in [0, 2] (starlike) or [0, 1] (convex).
void require_normalized_p(FunctionClass cls, double p);
double max_normalized_p(FunctionClass cls);

// Positive root of 425 r^3 + 340 r^2 - 328 r - 240, computed once.
double r0_root();
double r0_residual(double r);

BoundResult s_star_coeff_bound(int n, double lambda);
BoundResult k_coeff_bound(int n, double lambda);

BoundResult s_diff_bound(CoefficientDiff which, double lambda, double p,
                         Psi2Variant variant = Psi2Variant::proof);
BoundResult k_diff_bound(CoefficientDiff which, double lambda, double p);

// Dispatches to s_*/k_* by class.
BoundResult coeff_bound(FunctionClass cls, int n, double lambda);
BoundResult diff_bound(FunctionClass cls, CoefficientDiff which, double lambda, double p,
                       Psi2Variant variant = Psi2Variant::proof);

struct SupOverP
{
    double p_star = 0.0;
    double value = 0.0;
};

SupOverP sup_over_p(FunctionClass cls, CoefficientDiff which, double lambda,
                    Psi2Variant variant = Psi2Variant::proof);

// prod_{k=0}^{n-2} (lambda + k) over (n-1)! (starlike) or n! (convex).
double general_coeff_bound(FunctionClass cls, int n, double lambda);

} // namespace coefbound

#endif
