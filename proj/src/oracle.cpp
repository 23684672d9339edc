#include <coefbound/oracle.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <mutex>
#include <numbers>
#include <random>
#include <thread>

#include <coefbound/error.hpp>

namespace coefbound
{

namespace
{

constexpr std::size_t kBlockSize = 1000;
constexpr std::size_t kGlobalPerBlock = 200;
constexpr int kRefineRounds = 5;
constexpr std::size_t kPerRound = 160;
constexpr double kInitialRadius = 0.5;
constexpr double kRadiusShrink = 0.3;
constexpr std::size_t kGridCount = 4096;

std::uint64_t mix(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0)
{
    return mix(mix(mix(seed) ^ a) ^ (b + 0x632be59bd9b4e019ULL));
}

struct Candidate
{
    double value = -1.0;
    CaratheodoryParams params;
};

bool better(const Candidate &a, const Candidate &b)
{
    if (a.value != b.value) {
        return a.value > b.value;
    }
    return lexicographically_less(a.params, b.params);
}

std::vector<CaratheodoryParams> canonical_witnesses(std::optional<double> fixed_p1)
{
    if (fixed_p1) {
        const double p = *fixed_p1;
        return {{p, 1.0, 0.0}, {p, -1.0, 0.0}, {p, 0.0, 1.0}, {p, 0.0, -1.0},
                {p, -1.0, 1.0}, {p, Complex(0.0, 1.0), 0.0}, {p, Complex(0.0, -1.0), 0.0}};
    }
    return {{2.0, 0.0, 0.0},  {0.0, 1.0, 0.0},  {0.0, -1.0, 0.0}, {0.0, 0.0, 1.0},
            {0.0, 0.0, -1.0}, {0.5, -1.0, 0.0}, {1.0, -1.0, 0.0}, {1.5, -1.0, 0.0}};
}

template <class F>
void parallel_for(std::size_t n, unsigned workers, F &&body)
{
    if (workers <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            body(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    {
        std::vector<std::jthread> pool;
        const auto count = std::min<std::size_t>(workers, n);
        for (std::size_t w = 0; w < count; ++w) {
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < n; i = next++) {
                    try {
                        body(i);
                    } catch (...) {
                        std::lock_guard lock(failure_mutex);
                        if (!failure) {
                            failure = std::current_exception();
                        }
                    }
                }
            });
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

std::vector<double> default_p_grid(FunctionClass cls)
{
    if (cls == FunctionClass::starlike) {
        return {0.0, 0.5, 0.8, 1.0, 1.5, 2.0};
    }
    return {0.0, 0.3, 0.6, 0.9, 1.0};
}

int coefficient_index(FunctionalKind kind)
{
    switch (kind) {
    case FunctionalKind::abs_a2:
        return 2;
    case FunctionalKind::abs_a3:
        return 3;
    case FunctionalKind::abs_a4:
        return 4;
    default:
        return 0;
    }
}

struct Task
{
    const ClaimSpec *claim;
    double lambda;
    std::optional<double> p;
};

VerificationReport run_task(const Task &task, const VerifyOptions &options)
{
    const auto start = std::chrono::steady_clock::now();
    const ClaimSpec &claim = *task.claim;
    const Psi2Variant variant = claim.pinned_variant.value_or(options.psi2_variant);
    const BoundResult bound = claim_bound(claim, task.lambda, task.p, variant);
    const Functional fn{claim.kind, claim.cls, task.p};
    const SearchResult found = extremal_search(fn, task.lambda, options.budget, options.seed);

    VerificationReport r;
    r.claim_id = claim.id;
    r.lambda = task.lambda;
    r.p = task.p;
    r.bound = bound.value;
    r.branch = bound.branch;
    r.oracle_max = found.max;
    r.witness = found.witness;
    r.gap = bound.value - found.max;
    r.violation = found.max > bound.value + options.tol;
    r.samples = found.samples;
    r.seed = options.seed;
    r.variant = claim.has_psi2_variant() ? to_string(variant) : "none";
    r.duration_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    return r;
}

std::vector<Task> tasks_for(const ClaimSpec &claim, std::span<const double> lambdas,
                            std::span<const double> ps)
{
    std::vector<Task> tasks;
    for (double l : lambdas) {
        require_lambda(l);
        if (!claim.needs_p()) {
            tasks.push_back({&claim, l, std::nullopt});
            continue;
        }
        for (double p : ps) {
            require_normalized_p(claim.cls, p);
            tasks.push_back({&claim, l, p});
        }
    }
    return tasks;
}

std::vector<VerificationReport> run_tasks(const std::vector<Task> &tasks, const VerifyOptions &options)
{
    if (options.budget < kBlockSize) {
        throw InvalidInput("search budget must be at least 1000 evaluations");
    }
    std::vector<VerificationReport> out(tasks.size());
    parallel_for(tasks.size(), options.workers,
                 [&](std::size_t i) { out[i] = run_task(tasks[i], options); });
    return out;
}

} // namespace

const char *to_string(FunctionalKind kind)
{
    switch (kind) {
    case FunctionalKind::abs_a2:
        return "abs_a2";
    case FunctionalKind::abs_a3:
        return "abs_a3";
    case FunctionalKind::abs_a4:
        return "abs_a4";
    case FunctionalKind::abs_a3_minus_a2:
        return "abs_a3_minus_a2";
    case FunctionalKind::abs_a4_minus_a3:
        return "abs_a4_minus_a3";
    }
    return "?";
}

LeadingCoefficients starlike_from_schwarz(const SchwarzCoefficients &c, double lambda)
{
    const double l = lambda;
    return {l * c.c1, l / 2.0 * (c.c2 + 1.5 * l * c.c1 * c.c1),
            l / 3.0 * (c.c3 + 2.5 * l * c.c1 * c.c2 + 17.0 / 12.0 * l * l * c.c1 * c.c1 * c.c1)};
}

LeadingCoefficients starlike_from_moments(const CaratheodoryMoments &m, double lambda)
{
    const double l = lambda;
    const Complex p1 = m.p1();
    const Complex p2 = m.p2();
    const Complex p3 = m.p3();
    return {l / 2.0 * p1, l / 4.0 * (p2 + (3.0 * l - 2.0) / 4.0 * p1 * p1),
            l / 6.0 *
                (p3 + (5.0 * l - 4.0) / 4.0 * p1 * p2 +
                 (17.0 * l * l - 30.0 * l + 12.0) / 48.0 * p1 * p1 * p1)};
}

LeadingCoefficients convex_from_moments(const CaratheodoryMoments &m, double lambda)
{
    const double l = lambda;
    const Complex p1 = m.p1();
    const Complex p2 = m.p2();
    const Complex p3 = m.p3();
    return {l / 4.0 * p1, l / 12.0 * (p2 + (3.0 * l - 2.0) / 4.0 * p1 * p1),
            l / 24.0 *
                (p3 + (5.0 * l - 4.0) / 4.0 * p1 * p2 +
                 (17.0 * l * l - 30.0 * l + 12.0) / 48.0 * p1 * p1 * p1)};
}

CaratheodoryParams effective_params(const Functional &fn, const CaratheodoryParams &params)
{
    CaratheodoryParams out = params;
    if (fn.fixed_p) {
        require_normalized_p(fn.cls, *fn.fixed_p);
        out.p1 = fn.cls == FunctionClass::starlike ? *fn.fixed_p : 2.0 * *fn.fixed_p;
    }
    return out;
}

double functional_value(const Functional &fn, double lambda, const CaratheodoryParams &params)
{
    const bool is_difference =
        fn.kind == FunctionalKind::abs_a3_minus_a2 || fn.kind == FunctionalKind::abs_a4_minus_a3;
    if (is_difference && !fn.fixed_p) {
        throw InvalidInput("difference functionals require a fixed p");
    }
    const auto m = caratheodory_moments(effective_params(fn, params));
    const auto a = fn.cls == FunctionClass::starlike ? starlike_from_moments(m, lambda)
                                                     : convex_from_moments(m, lambda);
    switch (fn.kind) {
    case FunctionalKind::abs_a2:
        return std::abs(a.a2);
    case FunctionalKind::abs_a3:
        return std::abs(a.a3);
    case FunctionalKind::abs_a4:
        return std::abs(a.a4);
    case FunctionalKind::abs_a3_minus_a2:
        return std::abs(a.a3 - a.a2);
    case FunctionalKind::abs_a4_minus_a3:
        return std::abs(a.a4 - a.a3);
    }
    return 0.0;
}

SearchResult maximize_over_body(const std::function<double(const CaratheodoryParams &)> &objective,
                                std::optional<double> fixed_p1, std::size_t budget,
                                std::uint64_t seed)
{
    if (budget < kBlockSize) {
        throw InvalidInput("search budget must be at least 1000 evaluations");
    }
    Candidate best;
    std::size_t used = 0;
    bool have_best = false;
    const auto evaluate = [&](std::span<const CaratheodoryParams> batch) {
        for (const auto &params : batch) {
            if (used >= budget) {
                return;
            }
            ++used;
            const Candidate c{objective(params), params};
            if (!have_best || better(c, best)) {
                best = c;
                have_best = true;
            }
        }
    };

    SamplerOptions global;
    global.fixed_p1 = fixed_p1;
    evaluate(canonical_witnesses(fixed_p1));
    const auto grid = sample_params(seed, kGridCount, SampleStrategy::grid, global);
    std::size_t grid_cursor = 0;

    for (std::uint64_t block = 0; used < budget; ++block) {
        const std::size_t from_grid = std::min(kGlobalPerBlock, grid.size() - grid_cursor);
        evaluate(std::span(grid).subspan(grid_cursor, from_grid));
        grid_cursor += from_grid;
        if (from_grid < kGlobalPerBlock) {
            evaluate(sample_params(derive_seed(seed, block), kGlobalPerBlock - from_grid,
                                   SampleStrategy::random, global));
        }
        double radius = kInitialRadius;
        for (int round = 0; round < kRefineRounds && used < budget; ++round) {
            SamplerOptions local = global;
            local.incumbent = best.params;
            local.radius = radius;
            evaluate(sample_params(derive_seed(seed, block, static_cast<std::uint64_t>(round) + 1),
                                   kPerRound, SampleStrategy::refine_around, local));
            radius *= kRadiusShrink;
        }
    }
    return {best.value, best.params, used};
}

SearchResult extremal_search(const Functional &fn, double lambda, std::size_t budget,
                             std::uint64_t seed)
{
    require_lambda(lambda);
    std::optional<double> fixed_p1;
    if (fn.fixed_p) {
        fixed_p1 = effective_params(fn, {}).p1;
    }
    return maximize_over_body(
        [&](const CaratheodoryParams &params) { return functional_value(fn, lambda, params); },
        fixed_p1, budget, seed);
}

const std::vector<ClaimSpec> &claim_registry()
{
    using K = FunctionalKind;
    constexpr auto S = FunctionClass::starlike;
    constexpr auto C = FunctionClass::convex;
    static const std::vector<ClaimSpec> registry{
        {"thm3.1-a2", K::abs_a2, S, std::nullopt},
        {"thm3.1-a3", K::abs_a3, S, std::nullopt},
        {"thm3.1-a4", K::abs_a4, S, std::nullopt},
        {"thm3.2-a2", K::abs_a2, C, std::nullopt},
        {"thm3.2-a3", K::abs_a3, C, std::nullopt},
        {"thm3.2-a4", K::abs_a4, C, std::nullopt},
        {"thm3.3-d32", K::abs_a3_minus_a2, S, std::nullopt},
        {"thm3.3-d43", K::abs_a4_minus_a3, S, std::nullopt},
        {"thm3.3-d43-psi2-statement", K::abs_a4_minus_a3, S, Psi2Variant::statement},
        {"thm3.5-d32", K::abs_a3_minus_a2, C, std::nullopt},
        {"thm3.5-d43", K::abs_a4_minus_a3, C, std::nullopt},
    };
    return registry;
}

const ClaimSpec &find_claim(const std::string &claim_id)
{
    for (const auto &c : claim_registry()) {
        if (c.id == claim_id) {
            return c;
        }
    }
    throw InvalidInput("unknown claim id '" + claim_id + "'");
}

BoundResult claim_bound(const ClaimSpec &claim, double lambda, std::optional<double> p,
                        Psi2Variant variant)
{
    if (!claim.needs_p()) {
        return coeff_bound(claim.cls, coefficient_index(claim.kind), lambda);
    }
    if (!p) {
        throw InvalidInput("claim '" + claim.id + "' needs a value of p");
    }
    const auto which =
        claim.kind == FunctionalKind::abs_a3_minus_a2 ? CoefficientDiff::d32 : CoefficientDiff::d43;
    return diff_bound(claim.cls, which, lambda, *p, variant);
}

std::vector<VerificationReport> verify_claim(const std::string &claim_id,
                                             std::span<const double> lambda_grid,
                                             std::span<const double> p_grid,
                                             const VerifyOptions &options)
{
    const ClaimSpec &claim = find_claim(claim_id);
    std::vector<double> ps(p_grid.begin(), p_grid.end());
    if (ps.empty()) {
        ps = default_p_grid(claim.cls);
    }
    return run_tasks(tasks_for(claim, lambda_grid, ps), options);
}

SuiteGrids default_suite_grids()
{
    return {{0.21, 0.3, 0.6, 1.0, 1.4, std::numbers::pi / 2},
            default_p_grid(FunctionClass::starlike),
            default_p_grid(FunctionClass::convex)};
}

SuiteResult run_claim_suite(const VerifyOptions &options, const SuiteGrids &grids)
{
    std::vector<Task> tasks;
    for (const auto &claim : claim_registry()) {
        const auto &ps = claim.cls == FunctionClass::starlike ? grids.starlike_p : grids.convex_p;
        auto t = tasks_for(claim, grids.lambdas, ps);
        tasks.insert(tasks.end(), t.begin(), t.end());
    }
    SuiteResult result;
    result.reports = run_tasks(tasks, options);
    for (const auto &r : result.reports) {
        if (r.violation) {
            result.violated_claims.push_back(r.claim_id);
        }
    }
    std::sort(result.violated_claims.begin(), result.violated_claims.end());
    result.violated_claims.erase(
        std::unique(result.violated_claims.begin(), result.violated_claims.end()),
        result.violated_claims.end());
    return result;
}

double series_cross_check(double lambda, FunctionClass cls, const CaratheodoryParams &params)
{
    const auto m = caratheodory_moments(params);
    const auto omega = schwarz_series(caratheodory_to_schwarz(m), 3);
    const auto engine = coefficients_from_schwarz(omega, lambda, cls, 4);
    const auto closed = cls == FunctionClass::starlike ? starlike_from_moments(m, lambda)
                                                       : convex_from_moments(m, lambda);
    return std::max({std::abs(engine.at(2) - closed.a2), std::abs(engine.at(3) - closed.a3),
                     std::abs(engine.at(4) - closed.a4)});
}

ProbeReport general_bound_probe(double lambda, int n_max, std::size_t samples, std::uint64_t seed)
{
    require_lambda(lambda);
    if (n_max < 2 || n_max > kDefaultOrder) {
        throw InvalidInput("n_max must lie in [2, " + std::to_string(kDefaultOrder) + "]");
    }
    std::vector<double> bound_s(static_cast<std::size_t>(n_max) + 1);
    std::vector<double> bound_k(static_cast<std::size_t>(n_max) + 1);
    for (int n = 2; n <= n_max; ++n) {
        bound_s[static_cast<std::size_t>(n)] = general_coeff_bound(FunctionClass::starlike, n, lambda);
        bound_k[static_cast<std::size_t>(n)] = general_coeff_bound(FunctionClass::convex, n, lambda);
    }

    ProbeReport rep;
    rep.lambda = lambda;
    rep.n_max = n_max;
    rep.samples = samples;
    rep.seed = seed;
    rep.min_ratio_slack = std::numeric_limits<double>::infinity();
    rep.min_slack_starlike = std::numeric_limits<double>::infinity();
    rep.min_slack_convex = std::numeric_limits<double>::infinity();

    std::mt19937_64 rng(mix(seed));
    const auto uniform = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    const int order = std::max(n_max, 3);
    for (std::size_t s = 0; s < samples; ++s) {
        const int zero_count = static_cast<int>(rng() % 3); // degree 1..3
        std::vector<Complex> zeros;
        for (int j = 0; j < zero_count; ++j) {
            zeros.push_back(std::polar(0.999 * std::sqrt(uniform()), 2.0 * std::numbers::pi * uniform()));
        }
        const auto omega = blaschke_schwarz(2.0 * std::numbers::pi * uniform(), zeros, order);
        const auto ratio = exp_series(Complex(lambda) * omega);
        for (int n = 1; n <= n_max; ++n) {
            const double c = std::abs(ratio[static_cast<std::size_t>(n)]);
            rep.max_ratio_coeff = std::max(rep.max_ratio_coeff, c);
            rep.min_ratio_slack = std::min(rep.min_ratio_slack, lambda - c);
            if (c > lambda + 1e-12) {
                ++rep.ratio_violations;
            }
        }
        const auto a_s = coefficients_from_schwarz(omega, lambda, FunctionClass::starlike, n_max);
        const auto a_k = coefficients_from_schwarz(omega, lambda, FunctionClass::convex, n_max);
        for (int n = 2; n <= n_max; ++n) {
            const double ss = bound_s[static_cast<std::size_t>(n)] - std::abs(a_s.at(n));
            const double sk = bound_k[static_cast<std::size_t>(n)] - std::abs(a_k.at(n));
            rep.min_slack_starlike = std::min(rep.min_slack_starlike, ss);
            rep.min_slack_convex = std::min(rep.min_slack_convex, sk);
            if (ss < -1e-9) {
                ++rep.coefficient_violations;
            }
            if (sk < -1e-9) {
                ++rep.coefficient_violations;
            }
        }
    }
    return rep;
}

PhiComparison compare_phi(double mu, double nu, std::size_t budget, std::uint64_t seed, double tol)
{
    PhiComparison out;
    try {
        out.phi = phi_bound(mu, nu);
    } catch (const Unclassified &) {
        out.phi.reset();
    }
    const auto found = maximize_over_body(
        [&](const CaratheodoryParams &params) {
            return psi_functional(caratheodory_to_schwarz(caratheodory_moments(params)), mu, nu);
        },
        std::nullopt, budget, seed);
    out.psi_max = found.max;
    out.witness = found.witness;
    out.exceeds = out.phi && found.max > out.phi->value + tol;
    return out;
}

} // namespace coefbound
