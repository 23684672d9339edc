#ifndef COEFBOUND_REPORT_JSON_HPP
#define COEFBOUND_REPORT_JSON_HPP

#include <string>

#include <json.hpp>

#include <coefbound/bounds.hpp>
#include <coefbound/oracle.hpp>

namespace coefbound
{

// Stable field names:
// {claim_id, lambda, p, bound, branch, oracle_max,
//  witness: {p1, x_re, x_im, y_re, y_im}, gap, violation, samples, seed,
//  duration_ms, variant}
void to_json(nlohmann::json &j, const VerificationReport &r);
void from_json(const nlohmann::json &j, VerificationReport &r);

void to_json(nlohmann::json &j, const CaratheodoryParams &w);
void from_json(const nlohmann::json &j, CaratheodoryParams &w);

void to_json(nlohmann::json &j, const BoundResult &b);

struct SuiteDocumentInfo
{
    std::string command = "report";
    std::size_t budget = kDefaultBudget;
    std::uint64_t seed = kDefaultSeed;
    double tol = kDefaultTol;
    Psi2Variant psi2_variant = Psi2Variant::proof;
};

nlohmann::json suite_document(const SuiteDocumentInfo &info, const SuiteResult &result);

} // namespace coefbound

#endif
