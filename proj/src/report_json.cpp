#include "wca/report_json.hpp"

namespace wca {

using nlohmann::json;

json config_to_json(const SolverConfig& cfg) {
    return json{{"probe_budget", cfg.probe_budget},
                {"time_limit_ms", cfg.time_limit_ms},
                {"literal_restarts", cfg.literal_restarts},
                {"seeded_exclusions",
                 cfg.seed_exclusions ? static_cast<long>(cfg.seed_exclusions->size()) : 0}};
}

json report_to_json(const Report& rep, const SolverConfig& cfg) {
    json j{{"schema_version", kReportSchemaVersion},
           {"solver_version", kSolverVersion},
           {"config", config_to_json(cfg)},
           {"verdict", to_string(rep.decision.verdict)},
           {"reason", to_string(rep.decision.reason)},
           {"n", rep.n},
           {"p_free_initial", rep.p_free_initial},
           {"q_free_initial", rep.q_free_initial},
           {"p_free_final", rep.p_free_final},
           {"q_free_final", rep.q_free_final},
           {"exclusion_emitted", rep.exclusion_emitted},
           {"e_size_initial", rep.e_size_initial},
           {"e_tilde_size", rep.e_tilde_size},
           {"f_tilde_size", rep.f_tilde_size},
           {"probes", rep.probes},
           {"deductions", rep.deductions},
           {"wall_time_s", rep.wall_time_s},
           {"decided_in_initial_closure", rep.decided_in_initial_closure},
           {"budget_exhausted", rep.budget_exhausted},
           {"witness_rejected", rep.witness_rejected}};
    if (rep.decision.witness) j["witness"] = rep.decision.witness->perm;
    return j;
}

json noniso_report_to_json(const NonIsoReport& rep, const SolverConfig& cfg) {
    json j{{"schema_version", kReportSchemaVersion},
           {"solver_version", kSolverVersion},
           {"config", config_to_json(cfg)},
           {"outcome", to_string(rep.outcome)},
           {"e_size", rep.e_size},
           {"probes", rep.probes},
           {"deductions", rep.deductions},
           {"wall_time_s", rep.wall_time_s}};
    if (rep.witness) j["witness"] = rep.witness->perm;
    return j;
}

} // namespace wca
