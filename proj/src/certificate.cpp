#include "lclwb/certificate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <thread>

#include "lclwb/errors.hpp"
#include "lclwb/subshift.hpp"

namespace lclwb {

namespace {

constexpr const char* tool_version = "0.1.0";

json make_certificate(const std::string& kind, json task_echo, const std::string& outcome,
                      json payload, json stats) {
    return json{{"schema_version", certificate_schema_version},
                {"kind", kind},
                {"task", std::move(task_echo)},
                {"outcome", outcome},
                {"payload", std::move(payload)},
                {"stats", std::move(stats)},
                {"fingerprint", fingerprint_json()}};
}

json witness_to_json(const WindowConfiguration& c) {
    json colors = json::array();
    for (Color col : c.colors) colors.push_back(col);
    return json{{"colors", std::move(colors)}};
}

// ---------------------------------------------------------------------------
// Task execution

json execute_search(const RunConfig& config, const json& task) {
    const GenSet s = gen_set_from_json(config.oracle, task.at("s"));
    const WindowPtr window = window_from_json(config.oracle, task.at("window"), config.limit);
    SearchProblem problem{.oracle = config.oracle,
                          .s = s,
                          .colors = task.at("n").get<int>(),
                          .component_bound = task.at("k").get<int>(),
                          .window = window,
                          .node_budget = task.value("budget", config.budget),
                          .seed = config.seed,
                          .heuristic = task.value("mode", std::string("exact")) == "heuristic"};
    const SearchCertificate cert = exact_search(problem);

    json payload;
    if (cert.witness) {
        payload["witness"] = witness_to_json(*cert.witness);
        const ComponentGraph cg = component_graph(config.oracle, *cert.witness, s);
        payload["separation"] = separation_to_json(
            summarize_components(cg, problem.component_bound), cg);
    }
    json stats{{"nodes", cert.stats.nodes},
               {"prunes", cert.stats.prunes},
               {"window_size", window->size()}};
    return make_certificate("search", task, to_string(cert.outcome), std::move(payload),
                            std::move(stats));
}

json execute_pi_sn(const RunConfig& config, const json& task) {
    const GenSet s = gen_set_from_json(config.oracle, task.at("s"));
    const WindowPtr window = window_from_json(config.oracle, task.at("window"), config.limit);
    const int n = task.at("n").get<int>();
    const LCLInstance instance = pi_sn_generate(config.oracle, s, n, *window, config.limit);

    const std::uint64_t store_limit = task.value("store_limit", std::uint64_t{10'000});
    json payload{{"pattern_count", instance.size()}, {"alphabet", instance.alphabet_size()}};
    if (instance.size() <= store_limit) {
        json patterns = json::array();
        for (const auto& p : instance.patterns()) patterns.push_back(pattern_to_json(config.oracle, p));
        payload["patterns"] = std::move(patterns);
    }
    return make_certificate("pi_sn", task, "generated", std::move(payload),
                            json{{"window_size", window->size()}});
}

json execute_freeness(const RunConfig& config, const json& task) {
    const GroupElement gamma = element_from_json(config.oracle, task.at("gamma"));
    const LCLInstance instance = freeness_lcl(config.oracle, gamma);
    json patterns = json::array();
    for (const auto& p : instance.patterns()) patterns.push_back(pattern_to_json(config.oracle, p));
    return make_certificate("freeness", task, "generated",
                            json{{"pattern_count", instance.size()}, {"patterns", std::move(patterns)}},
                            json::object());
}

json execute_subshift(const RunConfig& config, const json& task) {
    const LCLInstance instance = lcl_from_json(config.oracle, task.at("lcl"), config.limit);
    const WindowPtr window = window_from_json(config.oracle, task.at("window"), config.limit);
    const std::uint64_t limit = task.value("limit", std::uint64_t{1000});
    const EnumerationResult result = enumerate_window_configs(config.oracle, instance, window, limit);

    json configs = json::array();
    for (const auto& c : result.configs) {
        json colors = json::array();
        for (Color col : c.colors) colors.push_back(col);
        configs.push_back(std::move(colors));
    }
    json payload{{"count", result.total}, {"complete", result.complete}, {"configs", std::move(configs)}};
    return make_certificate("subshift", task, result.complete ? "enumerated" : "truncated",
                            std::move(payload), json{{"window_size", window->size()}});
}

json execute_table(const RunConfig& config, const json& task) {
    TableRequest request{.oracle = config.oracle,
                         .s_list = {},
                         .k_list = task.at("k_list").get<std::vector<int>>(),
                         .n_max = task.value("n_max", 3),
                         .windows = {},
                         .node_budget = task.value("budget", config.budget),
                         .seed = config.seed};
    for (const auto& spec : task.at("s_list"))
        request.s_list.emplace_back(gen_set_descriptor(spec), gen_set_from_json(config.oracle, spec));

    const json policy = task.at("window_policy");
    const std::string policy_kind = policy.at("kind").get<std::string>();
    std::vector<std::vector<json>> window_specs(request.s_list.size());
    for (std::size_t si = 0; si < request.s_list.size(); ++si) {
        request.windows.emplace_back();
        for (int k : request.k_list) {
            json wspec;
            if (policy_kind == "fixed") {
                wspec = policy.at("window");
            } else if (policy_kind == "z_path_2k4") {
                if (config.oracle.family() != GroupFamily::free_abelian ||
                    config.oracle.abelian_dim() != 1)
                    throw config_error("z_path_2k4 window policy requires the group Z");
                wspec = json{{"kind", "box"}, {"lo", {0}}, {"hi", {2 * k + 3}}};
            } else {
                throw config_error("unknown window policy: " + policy_kind);
            }
            window_specs[si].push_back(wspec);
            request.windows[si].push_back(window_from_json(config.oracle, wspec, config.limit));
        }
    }

    const AsdimEvidence evidence = min_colors_table(request);

    json rows = json::array();
    std::size_t row_index = 0;
    for (std::size_t si = 0; si < request.s_list.size(); ++si) {
        for (std::size_t ki = 0; ki < request.k_list.size(); ++ki, ++row_index) {
            const EvidenceRow& row = evidence.rows[row_index];
            json jrow{{"group", row.group_name},
                      {"s", row.s_descriptor},
                      {"s_index", si},
                      {"k", row.k},
                      {"min_n", row.min_n},
                      {"status", to_string(row.status)},
                      {"nodes", row.nodes},
                      {"window", window_specs[si][ki]}};
            if (row.witness) jrow["witness"] = witness_to_json(*row.witness);
            rows.push_back(std::move(jrow));
        }
    }
    json payload{{"rows", std::move(rows)}};
    if (evidence.estimate)
        payload["estimate"] = *evidence.estimate;
    else
        payload["estimate"] = nullptr;

    bool budget_hit = false;
    for (const auto& row : evidence.rows)
        if (row.status == RowStatus::budget_limited) budget_hit = true;
    return make_certificate("table", task, budget_hit ? "budget" : "table", std::move(payload),
                            json::object());
}

json execute_verify(const RunConfig&, const json& task) {
    const std::string path = task.at("certificate").get<std::string>();
    std::ifstream in(path);
    if (!in) throw config_error("verify task: cannot read " + path);
    json cert;
    in >> cert;
    const CertificateVerdict verdict = verify_certificate(cert);
    return make_certificate("verify_report", task, verdict.ok ? "verified" : "failed",
                            json{{"ok", verdict.ok},
                                 {"trusted_search_only", verdict.trusted_search_only},
                                 {"detail", verdict.detail}},
                            json::object());
}

json execute_task(const RunConfig& config, const json& task) {
    const std::string type = task.at("type").get<std::string>();
    json cert;
    try {
        if (type == "search") cert = execute_search(config, task);
        else if (type == "pi-sn") cert = execute_pi_sn(config, task);
        else if (type == "freeness") cert = execute_freeness(config, task);
        else if (type == "subshift") cert = execute_subshift(config, task);
        else if (type == "table") cert = execute_table(config, task);
        else if (type == "verify") cert = execute_verify(config, task);
        else throw config_error("unknown task type: " + type);
    } catch (const limit_error& ex) {
        // Resource limits abort the task without any claim; the run exits
        // with the budget code.
        cert = make_certificate("aborted", task, "budget", json{{"error", ex.what()}},
                                json::object());
    }
    // Certificates are self-contained: the group spec rides along in the echo.
    cert["task"]["group"] = config.group_spec;
    cert["task"]["seed"] = config.seed;
    return cert;
}

void validate_task(const RunConfig& config, const json& task) {
    if (!task.is_object() || !task.contains("type"))
        throw config_error("task must be an object with a type");
    const std::string type = task.at("type").get<std::string>();
    // Build every oracle-dependent object now; errors must surface before any
    // computation starts.
    if (type == "search") {
        gen_set_from_json(config.oracle, task.at("s"));
        window_from_json(config.oracle, task.at("window"), config.limit);
        if (task.at("n").get<int>() < 1 || task.at("k").get<int>() < 1)
            throw config_error("search task: n and k must be >= 1");
        return;
    }
    if (type == "pi-sn") {
        gen_set_from_json(config.oracle, task.at("s"));
        const WindowPtr w = window_from_json(config.oracle, task.at("window"), config.limit);
        if (task.at("n").get<int>() < 1) throw config_error("pi-sn task: n must be >= 1");
        if (!w->contains(config.oracle.identity()))
            throw config_error("pi-sn task: window must contain the identity");
        return;
    }
    if (type == "freeness") {
        const GroupElement g = element_from_json(config.oracle, task.at("gamma"));
        if (config.oracle.is_identity(g))
            throw config_error("freeness task: gamma must not be the identity");
        return;
    }
    if (type == "subshift") {
        // The lcl itself may be expensive to build (pi_sn generation); check
        // the spec structurally and the window eagerly.
        const json& lcl = task.at("lcl");
        const std::string kind = lcl.at("kind").get<std::string>();
        if (kind == "pi_sn") {
            gen_set_from_json(config.oracle, lcl.at("s"));
            window_from_json(config.oracle, lcl.at("window"), config.limit);
            if (lcl.at("n").get<int>() < 1) throw config_error("subshift task: n must be >= 1");
        } else if (kind == "freeness") {
            element_from_json(config.oracle, lcl.at("gamma"));
        } else if (kind == "patterns") {
            for (const auto& p : lcl.at("patterns")) pattern_from_json(config.oracle, p);
        } else {
            throw config_error("unknown lcl kind: " + kind);
        }
        window_from_json(config.oracle, task.at("window"), config.limit);
        return;
    }
    if (type == "table") {
        for (const auto& spec : task.at("s_list")) gen_set_from_json(config.oracle, spec);
        if (task.at("k_list").get<std::vector<int>>().empty())
            throw config_error("table task: empty k_list");
        const std::string policy = task.at("window_policy").at("kind").get<std::string>();
        if (policy != "fixed" && policy != "z_path_2k4")
            throw config_error("unknown window policy: " + policy);
        if (policy == "fixed")
            window_from_json(config.oracle, task.at("window_policy").at("window"), config.limit);
        return;
    }
    if (type == "verify") {
        task.at("certificate").get<std::string>();
        return;
    }
    throw config_error("unknown task type: " + type);
}

}  // namespace

json fingerprint_json() {
    return json{{"tool", "lclwb"}, {"version", tool_version}};
}

RunConfig parse_run_config(const json& doc) {
    try {
        if (!doc.is_object()) throw config_error("config must be a JSON object");
        RunConfig config{.group_spec = doc.at("group"),
                         .oracle = group_from_json(doc.at("group")),
                         .seed = doc.value("seed", std::uint64_t{0}),
                         .budget = doc.value("budget", default_node_budget),
                         .limit = doc.value("limit", std::uint64_t{1'000'000}),
                         .jobs = doc.value("jobs", 1),
                         .out_dir = doc.value("out", std::string("out")),
                         .tasks = {}};
        if (config.jobs < 1) throw config_error("jobs must be >= 1");
        if (!doc.contains("tasks") || !doc.at("tasks").is_array() || doc.at("tasks").empty())
            throw config_error("config needs a nonempty tasks array");
        for (const auto& task : doc.at("tasks")) {
            validate_task(config, task);
            config.tasks.push_back(task);
        }
        return config;
    } catch (const json::exception& ex) {
        throw config_error(std::string("bad config: ") + ex.what());
    }
}

RunResult run_tasks(const RunConfig& config) {
    RunResult result;
    const std::size_t count = config.tasks.size();
    std::vector<json> certs(count);
    std::vector<std::exception_ptr> errors(count);

    if (config.jobs <= 1) {
        for (std::size_t i = 0; i < count; ++i) {
            try {
                certs[i] = execute_task(config, config.tasks[i]);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&]() {
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= count) return;
                try {
                    certs[i] = execute_task(config, config.tasks[i]);
                } catch (...) {
                    errors[i] = std::current_exception();
                }
            }
        };
        std::vector<std::thread> pool;
        const int threads = std::min<int>(config.jobs, static_cast<int>(count));
        for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    // Surface errors in task order.
    for (std::size_t i = 0; i < count; ++i) {
        if (!errors[i]) continue;
        try {
            std::rethrow_exception(errors[i]);
        } catch (const config_error& ex) {
            result.exit_code = exit_config_error;
            result.error = std::string("task ") + std::to_string(i) + ": " + ex.what();
            return result;
        } catch (const std::exception& ex) {
            // Anything else escaping a task is an internal defect.
            result.exit_code = exit_invariant;
            result.error = std::string("task ") + std::to_string(i) + " failed: " + ex.what();
            return result;
        }
    }

    std::filesystem::create_directories(config.out_dir);
    for (std::size_t i = 0; i < count; ++i) {
        char name[64];
        std::snprintf(name, sizeof(name), "task-%03zu-%s.cert.json", i,
                      config.tasks[i].at("type").get<std::string>().c_str());
        const std::string path = (std::filesystem::path(config.out_dir) / name).string();
        std::ofstream out(path, std::ios::binary);
        out << certs[i].dump(2) << "\n";
        if (!out) throw std::runtime_error("failed to write " + path);
        result.certificate_paths.push_back(path);
        result.certificates.push_back(std::move(certs[i]));
    }

    for (const auto& cert : result.certificates)
        if (cert.at("outcome").get<std::string>() == "budget") result.exit_code = exit_budget;
    return result;
}

// ---------------------------------------------------------------------------
// Verification

namespace {

CertificateVerdict verify_search_like(const json& cert) {
    CertificateVerdict v;
    const json& task = cert.at("task");
    const GroupOracle oracle = group_from_json(task.at("group"));
    const GenSet s = gen_set_from_json(oracle, task.at("s"));
    const WindowPtr window = window_from_json(oracle, task.at("window"));
    const int n = task.at("n").get<int>();
    const int k = task.at("k").get<int>();
    const std::string outcome = cert.at("outcome").get<std::string>();

    if (outcome == "witness") {
        if (!cert.at("payload").contains("witness")) {
            v.detail = "witness outcome without witness payload";
            return v;
        }
        const auto colors = cert.at("payload").at("witness").at("colors").get<std::vector<Color>>();
        if (colors.size() != window->size()) {
            v.detail = "witness length does not match the window";
            return v;
        }
        for (std::size_t i = 0; i < colors.size(); ++i) {
            if (colors[i] < 0 || colors[i] >= n) {
                v.detail = "witness color out of range at site " + std::to_string(i);
                return v;
            }
        }
        const WindowConfiguration config = make_configuration(window, colors);
        // A search witness claims every measured component stays within k,
        // boundary-touching ones included (their sizes are lower bounds).
        const SeparationReport report = is_s_separated(oracle, config, s, k);
        if (!report.separated || report.boundary_max > static_cast<std::size_t>(k)) {
            // Locate the first offending component for the report.
            const ComponentGraph cg = component_graph(oracle, config, s);
            for (std::size_t comp = 0; comp < cg.component_count(); ++comp) {
                if (cg.members[comp].size() > static_cast<std::size_t>(k)) {
                    v.detail = "component of size " + std::to_string(cg.members[comp].size()) +
                               " at site " + std::to_string(cg.members[comp].front()) +
                               " exceeds k=" + std::to_string(k);
                    return v;
                }
            }
            v.detail = "witness fails separation";
            return v;
        }
        v.ok = true;
        v.detail = "witness re-verified";
        return v;
    }
    if (outcome == "exhausted" || outcome == "budget") {
        if (!cert.at("stats").contains("nodes") || cert.at("stats").at("nodes").get<std::uint64_t>() < 1) {
            v.detail = "missing or implausible search statistics";
            return v;
        }
        v.ok = true;
        v.trusted_search_only = outcome == "exhausted";
        v.detail = outcome == "exhausted" ? "exhaustion checked structurally"
                                          : "budget outcome checked structurally";
        return v;
    }
    v.detail = "unknown outcome: " + outcome;
    return v;
}

CertificateVerdict verify_pi_sn_cert(const json& cert) {
    CertificateVerdict v;
    const json& task = cert.at("task");
    const GroupOracle oracle = group_from_json(task.at("group"));
    const GenSet s = gen_set_from_json(oracle, task.at("s"));
    const WindowPtr window = window_from_json(oracle, task.at("window"));
    const int n = task.at("n").get<int>();
    const json& payload = cert.at("payload");
    if (!payload.contains("patterns")) {
        v.ok = true;
        v.trusted_search_only = true;
        v.detail = "patterns not stored; count-only certificate";
        return v;
    }
    std::size_t idx = 0;
    for (const auto& pj : payload.at("patterns")) {
        const Pattern p = pattern_from_json(oracle, pj);
        std::string why;
        if (!satisfies_pi_sn_conditions(oracle, p, s, n, &why)) {
            v.detail = "pattern " + std::to_string(idx) + " violates conditions: " + why;
            return v;
        }
        if (!p.domain().is_subset_of(*window)) {
            v.detail = "pattern " + std::to_string(idx) + " leaves the generation window";
            return v;
        }
        ++idx;
    }
    if (payload.at("pattern_count").get<std::size_t>() != idx) {
        v.detail = "pattern count mismatch";
        return v;
    }
    v.ok = true;
    v.detail = "all stored patterns re-verified";
    return v;
}

CertificateVerdict verify_freeness_cert(const json& cert) {
    CertificateVerdict v;
    const json& task = cert.at("task");
    const GroupOracle oracle = group_from_json(task.at("group"));
    const GroupElement gamma = element_from_json(oracle, task.at("gamma"));
    const LCLInstance expected = freeness_lcl(oracle, gamma);
    const json& stored = cert.at("payload").at("patterns");
    if (stored.size() != expected.size()) {
        v.detail = "expected " + std::to_string(expected.size()) + " patterns";
        return v;
    }
    for (std::size_t i = 0; i < stored.size(); ++i) {
        if (pattern_from_json(oracle, stored[i]) != expected[i]) {
            v.detail = "pattern " + std::to_string(i) + " differs from the freeness family";
            return v;
        }
    }
    v.ok = true;
    v.detail = "freeness family re-verified";
    return v;
}

CertificateVerdict verify_subshift_cert(const json& cert) {
    CertificateVerdict v;
    const json& task = cert.at("task");
    const GroupOracle oracle = group_from_json(task.at("group"));
    const LCLInstance instance = lcl_from_json(oracle, task.at("lcl"));
    const WindowPtr window = window_from_json(oracle, task.at("window"));
    std::size_t idx = 0;
    for (const auto& cj : cert.at("payload").at("configs")) {
        const auto colors = cj.get<std::vector<Color>>();
        if (colors.size() != window->size()) {
            v.detail = "configuration " + std::to_string(idx) + " has the wrong length";
            return v;
        }
        const VerifyResult r = verify_pi_coloring(oracle, make_configuration(window, colors), instance);
        if (!r.ok) {
            v.detail = "configuration " + std::to_string(idx) + " fails at site " +
                       std::to_string(*r.first_failure);
            return v;
        }
        ++idx;
    }
    v.ok = true;
    v.detail = std::to_string(idx) + " configurations re-verified";
    return v;
}

CertificateVerdict verify_table_cert(const json& cert) {
    CertificateVerdict v;
    const json& task = cert.at("task");
    const GroupOracle oracle = group_from_json(task.at("group"));
    std::vector<GenSet> sets;
    for (const auto& spec : task.at("s_list")) sets.push_back(gen_set_from_json(oracle, spec));

    bool any_trusted = false;
    for (const auto& row : cert.at("payload").at("rows")) {
        const std::string status = row.at("status").get<std::string>();
        if (status == "witnessed") {
            const std::size_t si = row.at("s_index").get<std::size_t>();
            const WindowPtr window = window_from_json(oracle, row.at("window"));
            const auto colors = row.at("witness").at("colors").get<std::vector<Color>>();
            if (colors.size() != window->size()) {
                v.detail = "row witness length mismatch (s=" + row.at("s").get<std::string>() +
                           ", k=" + std::to_string(row.at("k").get<int>()) + ")";
                return v;
            }
            const SeparationReport report = is_s_separated(
                oracle, make_configuration(window, colors), sets[si], row.at("k").get<int>());
            if (!report.separated) {
                v.detail = "row witness fails separation (s=" + row.at("s").get<std::string>() +
                           ", k=" + std::to_string(row.at("k").get<int>()) + ")";
                return v;
            }
        } else {
            any_trusted = true;
        }
    }
    v.ok = true;
    v.trusted_search_only = any_trusted;
    v.detail = "table witnesses re-verified";
    return v;
}

}  // namespace

CertificateVerdict verify_certificate(const json& certificate) {
    if (!certificate.is_object() || !certificate.contains("schema_version"))
        throw config_error("not a certificate (missing schema_version)");
    if (certificate.at("schema_version").get<int>() != certificate_schema_version)
        throw config_error("unknown certificate schema version");
    const std::string kind = certificate.at("kind").get<std::string>();
    try {
        if (kind == "search") return verify_search_like(certificate);
        if (kind == "pi_sn") return verify_pi_sn_cert(certificate);
        if (kind == "freeness") return verify_freeness_cert(certificate);
        if (kind == "subshift") return verify_subshift_cert(certificate);
        if (kind == "table") return verify_table_cert(certificate);
        if (kind == "verify_report") {
            CertificateVerdict v;
            v.ok = certificate.at("payload").contains("ok");
            v.detail = "verification report (structural check only)";
            return v;
        }
        if (kind == "aborted") {
            CertificateVerdict v;
            v.ok = certificate.at("outcome") == "budget";
            v.detail = "task aborted at a resource limit; certificate makes no claim";
            return v;
        }
    } catch (const json::exception& ex) {
        CertificateVerdict v;
        v.detail = std::string("malformed certificate: ") + ex.what();
        return v;
    }
    throw config_error("unknown certificate kind: " + kind);
}

// ---------------------------------------------------------------------------
// Table rendering

namespace {

struct RowView {
    std::string group, s, min_n, outcome, nodes;
    int k = 0;
    std::string k_str() const { return std::to_string(k); }
};

std::string csv_quote(const std::string& field) {
    if (field.find_first_of(",\"\n") == std::string::npos) return field;
    std::string quoted = "\"";
    for (char c : field) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

std::string render_rows(const std::vector<RowView>& rows, const std::string& estimate, bool csv) {
    std::ostringstream out;
    const std::vector<std::string> header{"group", "s", "k", "min_n", "outcome", "nodes"};
    if (csv) {
        // CSV stays machine-readable: rows only, no notes.
        out << "group,s,k,min_n,outcome,nodes\n";
        for (const auto& r : rows)
            out << csv_quote(r.group) << ',' << csv_quote(r.s) << ',' << r.k << ','
                << csv_quote(r.min_n) << ',' << csv_quote(r.outcome) << ',' << csv_quote(r.nodes)
                << '\n';
        return out.str();
    }
    std::vector<std::size_t> width(6);
    for (std::size_t c = 0; c < 6; ++c) width[c] = header[c].size();
    auto cell = [](const RowView& r, std::size_t c) -> std::string {
        switch (c) {
            case 0: return r.group;
            case 1: return r.s;
            case 2: return r.k_str();
            case 3: return r.min_n;
            case 4: return r.outcome;
            default: return r.nodes;
        }
    };
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 6; ++c) width[c] = std::max(width[c], cell(r, c).size());
    for (std::size_t c = 0; c < 6; ++c) {
        out << header[c] << std::string(width[c] - header[c].size(), ' ');
        out << (c + 1 < 6 ? "  " : "\n");
    }
    for (const auto& r : rows) {
        for (std::size_t c = 0; c < 6; ++c) {
            const std::string s = cell(r, c);
            out << s << std::string(width[c] - s.size(), ' ');
            out << (c + 1 < 6 ? "  " : "\n");
        }
    }
    out << "evidence value: " << estimate << "\n";
    bool any_exhausted = false;
    for (const auto& r : rows) any_exhausted = any_exhausted || r.outcome == "exhausted";
    if (any_exhausted)
        out << "note: an exhausted row rules out colorings of its window with that k only;\n"
               "      window evidence cannot exhaust all bounds, so it never lowers the value\n";
    return out.str();
}

}  // namespace

std::string render_table_text(const AsdimEvidence& evidence) {
    std::vector<RowView> rows;
    for (const auto& r : evidence.rows)
        rows.push_back({r.group_name, r.s_descriptor,
                        r.status == RowStatus::witnessed ? std::to_string(r.min_n) : "-",
                        to_string(r.status), std::to_string(r.nodes), r.k});
    std::stable_sort(rows.begin(), rows.end(), [](const RowView& a, const RowView& b) {
        return std::tie(a.s, a.k) < std::tie(b.s, b.k);
    });
    return render_rows(rows, evidence.estimate ? std::to_string(*evidence.estimate) : "none", false);
}

std::string render_table_csv(const AsdimEvidence& evidence) {
    std::vector<RowView> rows;
    for (const auto& r : evidence.rows)
        rows.push_back({r.group_name, r.s_descriptor,
                        r.status == RowStatus::witnessed ? std::to_string(r.min_n) : "-",
                        to_string(r.status), std::to_string(r.nodes), r.k});
    std::stable_sort(rows.begin(), rows.end(), [](const RowView& a, const RowView& b) {
        return std::tie(a.s, a.k) < std::tie(b.s, b.k);
    });
    return render_rows(rows, "", true);
}

std::string render_table_payload(const json& payload, bool csv) {
    std::vector<RowView> rows;
    for (const auto& r : payload.at("rows")) {
        const std::string status = r.at("status").get<std::string>();
        rows.push_back({r.at("group").get<std::string>(), r.at("s").get<std::string>(),
                        status == "witnessed" ? std::to_string(r.at("min_n").get<int>()) : "-",
                        status, std::to_string(r.at("nodes").get<std::uint64_t>()),
                        r.at("k").get<int>()});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const RowView& a, const RowView& b) {
        return std::tie(a.s, a.k) < std::tie(b.s, b.k);
    });
    std::string estimate = "none";
    if (payload.contains("estimate") && !payload.at("estimate").is_null())
        estimate = std::to_string(payload.at("estimate").get<int>());
    return render_rows(rows, estimate, csv);
}

}  // namespace lclwb
