#ifndef PRYMLAB_RUN_PIPELINE_HPP
#define PRYMLAB_RUN_PIPELINE_HPP

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "prymlab/euler/report.hpp"
#include "prymlab/luna/ideal.hpp"
#include "prymlab/luna/mukai.hpp"
#include "prymlab/prym/stability.hpp"

namespace prymlab::run {

using Json = nlohmann::ordered_json;

struct RunConfig {
    fp::u64 seed = 42;
    long coefficient_bound = 10;
    std::vector<fp::u64> primes; // empty: from PRYMLAB_PRIMES or derived from the seed
    long degree_cap = 4;
    std::string mode = "full"; // full | quartic-only | prym-only | local-only | euler-only
    long timeout_seconds = 0;  // advisory per-stage budget recorded in the report
    std::optional<std::string> curve_text; // overrides the seeded quartic draw
};

// resolved check primes: config > environment > seed-derived
std::vector<fp::u64> resolve_primes(const RunConfig& cfg);

// Executes the selected stages in dependency order. exit code 0 when every
// stage verdict passes, 1 on a verification failure, 2 on a precondition
// violation; the failing invariant is named in the report.
int run_pipeline(const RunConfig& cfg, Json& report);

Json scalar_json(const exact::Scalar& s);

// sub-reports used by both the CLI and the acceptance suite
Json quartic_stage(const RunConfig& cfg, const std::vector<fp::u64>& primes);
Json tangency_stage(const RunConfig& cfg, const std::vector<fp::u64>& primes,
                    tangency::StrataReport* strata_out = nullptr);
Json prym_stage(const RunConfig& cfg);
Json local_stage(const RunConfig& cfg);
Json euler_stage(const RunConfig& cfg, const tangency::StrataReport& strata);

} // namespace prymlab::run

#endif
