#ifndef LCLWB_CERTIFICATE_HPP
#define LCLWB_CERTIFICATE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "lclwb/serialize.hpp"

namespace lclwb {

inline constexpr int certificate_schema_version = 1;

// Exit codes of the batch runner.
inline constexpr int exit_ok = 0;
inline constexpr int exit_config_error = 2;
inline constexpr int exit_budget = 3;
inline constexpr int exit_invariant = 4;

// A parsed and fully validated run configuration. Parsing builds every
// task's objects up front; nothing is computed until run_tasks.
struct RunConfig {
    json group_spec;
    GroupOracle oracle;
    std::uint64_t seed = 0;
    std::uint64_t budget = default_node_budget;
    std::uint64_t limit = 1'000'000;
    int jobs = 1;
    std::string out_dir = "out";
    std::vector<json> tasks;  // validated task specs, in input order
};

RunConfig parse_run_config(const json& doc);  // throws config_error

struct RunResult {
    int exit_code = exit_ok;
    std::vector<std::string> certificate_paths;  // in task order
    std::vector<json> certificates;
    std::string error;  // set for exit codes 3 and 4
};

// Executes every task (up to `jobs` concurrently), then writes one
// certificate per task into out_dir, named by task index. Output is
// independent of scheduling; identical (config, seed) runs produce
// byte-identical certificates.
RunResult run_tasks(const RunConfig& config);

struct CertificateVerdict {
    bool ok = false;
    bool trusted_search_only = false;  // exhaustion claims are only structurally checked
    std::string detail;
};

// Re-verifies the cheap direction of a certificate: witnesses and stored
// patterns/configurations are re-checked through the separation and lcl
// modules; exhaustion statistics are checked structurally only. Throws
// config_error on schema mismatch.
CertificateVerdict verify_certificate(const json& certificate);

// Table rendering: aligned text with an evidence summary line, or CSV with
// columns group,s,k,min_n,outcome,nodes.
std::string render_table_text(const AsdimEvidence& evidence);
std::string render_table_csv(const AsdimEvidence& evidence);
// The same renderers over a stored table certificate payload.
std::string render_table_payload(const json& payload, bool csv);

json fingerprint_json();

}  // namespace lclwb

#endif
