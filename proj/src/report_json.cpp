#include <coefbound/report_json.hpp>

namespace coefbound
{

void to_json(nlohmann::json &j, const CaratheodoryParams &w)
{
    j = nlohmann::json{{"p1", w.p1},
                       {"x_re", w.x.real()},
                       {"x_im", w.x.imag()},
                       {"y_re", w.y.real()},
                       {"y_im", w.y.imag()}};
}

void from_json(const nlohmann::json &j, CaratheodoryParams &w)
{
    w.p1 = j.at("p1").get<double>();
    w.x = {j.at("x_re").get<double>(), j.at("x_im").get<double>()};
    w.y = {j.at("y_re").get<double>(), j.at("y_im").get<double>()};
}

void to_json(nlohmann::json &j, const VerificationReport &r)
{
    j = nlohmann::json{{"claim_id", r.claim_id},
                       {"lambda", r.lambda},
                       {"p", r.p ? nlohmann::json(*r.p) : nlohmann::json(nullptr)},
                       {"bound", r.bound},
                       {"branch", r.branch},
                       {"oracle_max", r.oracle_max},
                       {"witness", r.witness},
                       {"gap", r.gap},
                       {"violation", r.violation},
                       {"samples", r.samples},
                       {"seed", r.seed},
                       {"duration_ms", r.duration_ms},
                       {"variant", r.variant}};
}

void from_json(const nlohmann::json &j, VerificationReport &r)
{
    r.claim_id = j.at("claim_id").get<std::string>();
    r.lambda = j.at("lambda").get<double>();
    const auto &p = j.at("p");
    r.p = p.is_null() ? std::nullopt : std::optional<double>(p.get<double>());
    r.bound = j.at("bound").get<double>();
    r.branch = j.at("branch").get<std::string>();
    r.oracle_max = j.at("oracle_max").get<double>();
    r.witness = j.at("witness").get<CaratheodoryParams>();
    r.gap = j.at("gap").get<double>();
    r.violation = j.at("violation").get<bool>();
    r.samples = j.at("samples").get<std::size_t>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.duration_ms = j.at("duration_ms").get<std::int64_t>();
    r.variant = j.at("variant").get<std::string>();
}

void to_json(nlohmann::json &j, const BoundResult &b)
{
    j = nlohmann::json{{"class", to_string(b.cls)},
                       {"lambda", b.lambda},
                       {"p", b.p ? nlohmann::json(*b.p) : nlohmann::json(nullptr)},
                       {"n", b.n == 0 ? nlohmann::json(nullptr) : nlohmann::json(b.n)},
                       {"value", b.value},
                       {"branch", b.branch}};
}

nlohmann::json suite_document(const SuiteDocumentInfo &info, const SuiteResult &result)
{
    std::size_t violations = 0;
    for (const auto &r : result.reports) {
        violations += r.violation ? 1 : 0;
    }
    return nlohmann::json{{"tool", "coefbound"},
                          {"command", info.command},
                          {"budget", info.budget},
                          {"seed", info.seed},
                          {"tol", info.tol},
                          {"psi2_variant", to_string(info.psi2_variant)},
                          {"reports", result.reports},
                          {"violated_claims", result.violated_claims},
                          {"summary", {{"reports", result.reports.size()}, {"violations", violations}}}};
}

} // namespace coefbound
