#include <coefbound/cli.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iomanip>
#include <locale>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include <coefbound/error.hpp>
#include <coefbound/report_json.hpp>

namespace coefbound::cli
{

namespace
{

std::string text_number(double v)
{
    std::ostringstream os;
    os.imbue(std::locale::classic());
    os << std::setprecision(6) << v;
    return os.str();
}

std::string csv_number(double v)
{
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

std::string csv_optional(std::optional<double> v)
{
    return v ? csv_number(*v) : std::string();
}

template <class T>
T lookup(const std::map<std::string, T> &table, const std::string &key, const char *flag)
{
    const auto it = table.find(key);
    if (it == table.end()) {
        std::string allowed;
        for (const auto &[k, _] : table) {
            allowed += (allowed.empty() ? "" : ", ") + k;
        }
        throw UsageError(std::string(flag) + ": invalid value '" + key + "' (expected one of " +
                         allowed + ")");
    }
    return it->second;
}

unsigned parse_workers(const std::string &text, const char *source)
{
    unsigned value = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
    if (res.ec != std::errc() || res.ptr != text.data() + text.size() || value == 0) {
        throw UsageError(std::string(source) + ": expected a positive integer, got '" + text + "'");
    }
    return value;
}

unsigned default_workers()
{
    return std::max(1u, std::thread::hardware_concurrency());
}

void validate_lambdas(const std::vector<double> &lambdas)
{
    for (double l : lambdas) {
        try {
            require_lambda(l);
        } catch (const InvalidInput &e) {
            throw UsageError(std::string("--lambda: ") + e.what());
        }
    }
}

void validate_ps(FunctionClass cls, const std::vector<double> &ps)
{
    for (double p : ps) {
        try {
            require_normalized_p(cls, p);
        } catch (const InvalidInput &e) {
            throw UsageError(std::string("--p: ") + e.what());
        }
    }
}

std::vector<double> p_grid_or_default(const RunConfig &c)
{
    if (!c.ps.empty()) {
        return c.ps;
    }
    if (c.cls == FunctionClass::starlike) {
        return {0.0, 0.5, 1.0, 1.5, 2.0};
    }
    return {0.0, 0.25, 0.5, 0.75, 1.0};
}

int run_bound(const RunConfig &c, std::ostream &out)
{
    std::vector<BoundResult> results;
    for (double l : c.lambdas) {
        if (c.diff) {
            for (double p : c.ps) {
                results.push_back(diff_bound(c.cls, *c.diff, l, p, c.psi2_variant));
            }
        } else if (c.general) {
            BoundResult r;
            r.cls = c.cls;
            r.lambda = l;
            r.n = *c.n;
            r.value = general_coeff_bound(c.cls, *c.n, l);
            r.branch = "general";
            results.push_back(r);
        } else {
            results.push_back(coeff_bound(c.cls, *c.n, l));
        }
    }
    switch (c.format) {
    case OutputFormat::json:
        out << (results.size() == 1 ? nlohmann::json(results.front()) : nlohmann::json(results)).dump(2)
            << '\n';
        break;
    case OutputFormat::csv:
        out << "class,lambda,p,n,value,branch\n";
        for (const auto &r : results) {
            out << to_string(r.cls) << ',' << csv_number(r.lambda) << ',' << csv_optional(r.p) << ','
                << (r.n ? std::to_string(r.n) : std::string()) << ',' << csv_number(r.value) << ','
                << r.branch << '\n';
        }
        break;
    case OutputFormat::text:
        for (const auto &r : results) {
            out << text_number(r.value) << " (branch \"" << r.branch << "\")\n";
        }
        break;
    }
    return kExitOk;
}

int run_table(const RunConfig &c, std::ostream &out)
{
    const auto ps = p_grid_or_default(c);
    struct Row
    {
        double lambda, p;
        BoundResult a2, a3, a4, d32, d43;
    };
    std::vector<Row> rows;
    for (double l : c.lambdas) {
        for (double p : ps) {
            rows.push_back({l, p, coeff_bound(c.cls, 2, l), coeff_bound(c.cls, 3, l),
                            coeff_bound(c.cls, 4, l),
                            diff_bound(c.cls, CoefficientDiff::d32, l, p, c.psi2_variant),
                            diff_bound(c.cls, CoefficientDiff::d43, l, p, c.psi2_variant)});
        }
    }
    if (c.format == OutputFormat::json) {
        auto arr = nlohmann::json::array();
        for (const auto &r : rows) {
            arr.push_back({{"lambda", r.lambda},
                           {"p", r.p},
                           {"a2_bound", r.a2.value},
                           {"a3_bound", r.a3.value},
                           {"a4_bound", r.a4.value},
                           {"d32_bound", r.d32.value},
                           {"d43_bound", r.d43.value},
                           {"a2_branch", r.a2.branch},
                           {"a3_branch", r.a3.branch},
                           {"a4_branch", r.a4.branch},
                           {"d32_branch", r.d32.branch},
                           {"d43_branch", r.d43.branch}});
        }
        out << arr.dump(2) << '\n';
        return kExitOk;
    }
    const bool csv = c.format == OutputFormat::csv;
    const auto num = [csv](double v) { return csv ? csv_number(v) : text_number(v); };
    const char sep = csv ? ',' : '\t';
    out << "lambda" << sep << "p" << sep << "a2_bound" << sep << "a3_bound" << sep << "a4_bound" << sep
        << "d32_bound" << sep << "d43_bound" << sep << "a2_branch" << sep << "a3_branch" << sep
        << "a4_branch" << sep << "d32_branch" << sep << "d43_branch" << '\n';
    for (const auto &r : rows) {
        out << num(r.lambda) << sep << num(r.p) << sep << num(r.a2.value) << sep << num(r.a3.value)
            << sep << num(r.a4.value) << sep << num(r.d32.value) << sep << num(r.d43.value) << sep
            << r.a2.branch << sep << r.a3.branch << sep << r.a4.branch << sep << r.d32.branch << sep
            << r.d43.branch << '\n';
    }
    return kExitOk;
}

void write_reports(const RunConfig &c, const SuiteResult &result, const char *command,
                   std::ostream &out)
{
    if (c.format == OutputFormat::json || c.command == Command::report) {
        SuiteDocumentInfo info{command, c.budget, c.seed, c.tol, c.psi2_variant};
        out << suite_document(info, result).dump(2) << '\n';
        return;
    }
    if (c.format == OutputFormat::csv) {
        out << "claim_id,lambda,p,bound,branch,oracle_max,witness_p1,witness_x_re,witness_x_im,"
               "witness_y_re,witness_y_im,gap,violation,samples,seed,duration_ms,variant\n";
        for (const auto &r : result.reports) {
            out << r.claim_id << ',' << csv_number(r.lambda) << ',' << csv_optional(r.p) << ','
                << csv_number(r.bound) << ',' << r.branch << ',' << csv_number(r.oracle_max) << ','
                << csv_number(r.witness.p1) << ',' << csv_number(r.witness.x.real()) << ','
                << csv_number(r.witness.x.imag()) << ',' << csv_number(r.witness.y.real()) << ','
                << csv_number(r.witness.y.imag()) << ',' << csv_number(r.gap) << ','
                << (r.violation ? "true" : "false") << ',' << r.samples << ',' << r.seed << ','
                << r.duration_ms << ',' << r.variant << '\n';
        }
        return;
    }
    for (const auto &r : result.reports) {
        out << r.claim_id << " lambda=" << text_number(r.lambda);
        if (r.p) {
            out << " p=" << text_number(*r.p);
        }
        out << " bound=" << text_number(r.bound) << " [" << r.branch << "]"
            << " oracle_max=" << text_number(r.oracle_max) << " gap=" << text_number(r.gap)
            << " violation=" << (r.violation ? "true" : "false") << '\n';
    }
}

int run_verify(const RunConfig &c, std::ostream &out)
{
    VerifyOptions opts{c.budget, c.seed, c.tol, c.psi2_variant, c.workers};
    SuiteResult result;
    for (const auto &id : c.claims) {
        auto reports = verify_claim(id, c.lambdas, c.ps, opts);
        for (auto &r : reports) {
            if (r.violation) {
                result.violated_claims.push_back(r.claim_id);
            }
            result.reports.push_back(std::move(r));
        }
    }
    std::sort(result.violated_claims.begin(), result.violated_claims.end());
    result.violated_claims.erase(std::unique(result.violated_claims.begin(), result.violated_claims.end()),
                                 result.violated_claims.end());
    write_reports(c, result, "verify", out);
    return result.violated_claims.empty() ? kExitOk : kExitViolations;
}

int run_report(const RunConfig &c, std::ostream &out)
{
    VerifyOptions opts{c.budget, c.seed, c.tol, c.psi2_variant, c.workers};
    const auto result = run_claim_suite(opts);
    write_reports(c, result, "report", out);
    return result.violated_claims.empty() ? kExitOk : kExitViolations;
}

int run_roots(const RunConfig &c, std::ostream &out)
{
    const double r0 = r0_root();
    const double residual = r0_residual(r0);
    if (c.format == OutputFormat::json) {
        out << nlohmann::json{{"r0", r0}, {"residual", residual}}.dump(2) << '\n';
    } else if (c.format == OutputFormat::csv) {
        out << "r0,residual\n" << csv_number(r0) << ',' << csv_number(residual) << '\n';
    } else {
        std::ostringstream os;
        os.imbue(std::locale::classic());
        os << "r0 = " << std::setprecision(15) << r0 << " residual = " << std::setprecision(3)
           << residual << '\n';
        out << os.str();
    }
    return kExitOk;
}

} // namespace

std::string usage()
{
    return "usage: coefbound <command> [options]\n"
           "\n"
           "commands:\n"
           "  bound   evaluate one coefficient or successive-difference bound\n"
           "          --class starlike|convex --lambda L (--n N [--general] | --diff d32|d43 --p P)\n"
           "  table   tabulate all bounds over --lambda and --p grids (--format csv for CSV)\n"
           "  verify  search the parameter body and compare with the bound for --claim IDs\n"
           "  report  run the whole claim registry and print a JSON document\n"
           "  roots   print the breakpoint root r0 and its residual\n"
           "\n"
           "common options: --format text|json|csv, --budget N (100000), --seed S (42),\n"
           "  --tol T (1e-9), --psi2-variant proof|statement, --workers W\n"
           "exit codes: 0 ok, 1 violations found, 2 usage error\n";
}

RunConfig parse_args(std::span<const std::string> args, std::optional<std::string> env_workers)
{
    if (args.empty()) {
        throw UsageError("no command given");
    }

    CLI::App app{"coefficient bounds for the exponential starlike and convex classes", "coefbound"};
    app.require_subcommand(1);
    app.set_help_flag();

    std::string cls = "starlike";
    std::string diff;
    std::string variant = "proof";
    std::string format = "text";
    std::string workers;
    RunConfig cfg;
    int n = 0;

    const auto add_format = [&](CLI::App *sub) { sub->add_option("--format", format, "text, json or csv"); };
    const auto add_variant = [&](CLI::App *sub) {
        sub->add_option("--psi2-variant", variant, "proof or statement");
    };
    const auto add_search = [&](CLI::App *sub) {
        sub->add_option("--budget", cfg.budget, "evaluations per grid point");
        sub->add_option("--seed", cfg.seed, "search seed");
        sub->add_option("--tol", cfg.tol, "violation tolerance");
        sub->add_option("--workers", workers, "parallel workers");
        add_variant(sub);
    };

    auto *bound = app.add_subcommand("bound", "evaluate a bound");
    bound->add_option("--class", cls);
    bound->add_option("--lambda", cfg.lambdas)->delimiter(',')->required();
    bound->add_option("--n", n);
    bound->add_option("--diff", diff);
    bound->add_option("--p", cfg.ps)->delimiter(',');
    bound->add_flag("--general", cfg.general);
    add_variant(bound);
    add_format(bound);

    auto *table = app.add_subcommand("table", "tabulate bounds");
    table->add_option("--class", cls);
    table->add_option("--lambda", cfg.lambdas)->delimiter(',')->required();
    table->add_option("--p", cfg.ps)->delimiter(',');
    add_variant(table);
    add_format(table);

    auto *verify = app.add_subcommand("verify", "verify claims");
    verify->add_option("--claim", cfg.claims)->delimiter(',')->required();
    verify->add_option("--lambda", cfg.lambdas)->delimiter(',')->required();
    verify->add_option("--p", cfg.ps)->delimiter(',');
    add_search(verify);
    add_format(verify);

    auto *report = app.add_subcommand("report", "run the full claim suite");
    add_search(report);

    auto *roots = app.add_subcommand("roots", "print r0");
    add_format(roots);

    for (auto *sub : {bound, table, verify, report, roots}) {
        sub->set_help_flag("--help");
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        throw HelpRequested(usage());
    } catch (const CLI::ParseError &e) {
        std::string msg = e.what();
        std::replace(msg.begin(), msg.end(), '\n', ' ');
        throw UsageError(msg);
    }

    if (bound->parsed()) {
        cfg.command = Command::bound;
    } else if (table->parsed()) {
        cfg.command = Command::table;
    } else if (verify->parsed()) {
        cfg.command = Command::verify;
    } else if (report->parsed()) {
        cfg.command = Command::report;
    } else {
        cfg.command = Command::roots;
    }

    cfg.cls = lookup<FunctionClass>({{"starlike", FunctionClass::starlike}, {"convex", FunctionClass::convex}},
                                    cls, "--class");
    cfg.psi2_variant = lookup<Psi2Variant>(
        {{"proof", Psi2Variant::proof}, {"statement", Psi2Variant::statement}}, variant, "--psi2-variant");
    cfg.format = lookup<OutputFormat>(
        {{"text", OutputFormat::text}, {"json", OutputFormat::json}, {"csv", OutputFormat::csv}}, format,
        "--format");

    cfg.workers = default_workers();
    if (env_workers && !env_workers->empty()) {
        cfg.workers = parse_workers(*env_workers, "COEFBOUND_WORKERS");
    }
    if (!workers.empty()) {
        cfg.workers = parse_workers(workers, "--workers");
    }
    if (cfg.budget < 1000) {
        throw UsageError("--budget: must be at least 1000");
    }
    if (!(cfg.tol >= 0.0)) {
        throw UsageError("--tol: must be non-negative");
    }

    validate_lambdas(cfg.lambdas);

    switch (cfg.command) {
    case Command::bound:
        if (!diff.empty()) {
            cfg.diff = lookup<CoefficientDiff>({{"d32", CoefficientDiff::d32}, {"d43", CoefficientDiff::d43}},
                                               diff, "--diff");
            if (n != 0 || cfg.general) {
                throw UsageError("--diff cannot be combined with --n or --general");
            }
            if (cfg.ps.empty()) {
                throw UsageError("--diff needs --p");
            }
            validate_ps(cfg.cls, cfg.ps);
        } else {
            if (n == 0) {
                throw UsageError("bound needs --n or --diff");
            }
            if (n < 2 || (!cfg.general && n > 4)) {
                throw UsageError("--n: must be 2, 3 or 4 (or any n >= 2 with --general)");
            }
            if (!cfg.ps.empty()) {
                throw UsageError("--p only applies to --diff bounds");
            }
            cfg.n = n;
        }
        break;
    case Command::table:
        validate_ps(cfg.cls, cfg.ps);
        break;
    case Command::verify:
        for (const auto &id : cfg.claims) {
            try {
                const auto &claim = find_claim(id);
                if (claim.needs_p()) {
                    validate_ps(claim.cls, cfg.ps);
                }
            } catch (const InvalidInput &e) {
                throw UsageError(std::string("--claim: ") + e.what());
            }
        }
        break;
    default:
        break;
    }
    return cfg;
}

int run(const RunConfig &config, std::ostream &out)
{
    switch (config.command) {
    case Command::bound:
        return run_bound(config, out);
    case Command::table:
        return run_table(config, out);
    case Command::verify:
        return run_verify(config, out);
    case Command::report:
        return run_report(config, out);
    case Command::roots:
        return run_roots(config, out);
    }
    return kExitUsage;
}

int main_entry(std::span<const std::string> args, std::ostream &out, std::ostream &err,
               std::optional<std::string> env_workers)
{
    RunConfig config;
    try {
        config = parse_args(args, std::move(env_workers));
    } catch (const HelpRequested &h) {
        out << h.what();
        return kExitOk;
    } catch (const UsageError &e) {
        if (args.empty()) {
            err << usage();
        } else {
            err << "error: " << e.what() << '\n';
        }
        return kExitUsage;
    }
    try {
        return run(config, out);
    } catch (const InvalidInput &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
}

} // namespace coefbound::cli
