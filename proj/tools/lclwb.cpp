// Command line front end: batch runs from a config file, certificate
// re-verification, and evidence table rendering.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "lclwb/certificate.hpp"
#include "lclwb/errors.hpp"

namespace {

lclwb::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw lclwb::config_error("cannot read " + path);
    lclwb::json doc;
    try {
        in >> doc;
    } catch (const lclwb::json::exception& ex) {
        throw lclwb::config_error(path + ": " + ex.what());
    }
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lclwb: exact search and certificates for locally checkable labellings,\n"
                 "separated colorings and window subshifts over finitely generated groups"};
    app.require_subcommand(1);

    std::string config_path, out_override;
    std::uint64_t budget_override = 0, seed_override = 0, limit_override = 0;
    int jobs_override = 0;

    auto* run = app.add_subcommand("run", "execute the tasks of a config file");
    run->add_option("config", config_path, "JSON run configuration")->required();
    run->add_option("--out", out_override, "output directory for certificates");
    run->add_option("--jobs", jobs_override, "max concurrent tasks");
    run->add_option("--budget", budget_override, "node budget per search");
    run->add_option("--seed", seed_override, "seed for branch ordering");
    run->add_option("--limit", limit_override, "enumeration/window size limit");

    std::string cert_path;
    auto* verify = app.add_subcommand("verify", "re-verify a certificate");
    verify->add_option("certificate", cert_path, "certificate file")->required();

    std::string table_path, format = "text";
    auto* table = app.add_subcommand("table", "render a table certificate");
    table->add_option("evidence", table_path, "table certificate file")->required();
    table->add_option("--format", format, "text or csv")->check(CLI::IsMember({"text", "csv"}));

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            lclwb::json doc = load_json(config_path);
            lclwb::RunConfig config = lclwb::parse_run_config(doc);
            if (!out_override.empty()) config.out_dir = out_override;
            if (jobs_override > 0) config.jobs = jobs_override;
            if (run->count("--budget")) config.budget = budget_override;
            if (run->count("--seed")) config.seed = seed_override;
            if (run->count("--limit")) config.limit = limit_override;
            const lclwb::RunResult result = lclwb::run_tasks(config);
            for (const auto& path : result.certificate_paths)
                std::cout << "wrote " << path << "\n";
            for (const auto& cert : result.certificates) {
                if (cert.at("kind") == "table")
                    std::cout << lclwb::render_table_payload(cert.at("payload"), false);
            }
            if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
            return result.exit_code;
        }
        if (verify->parsed()) {
            const lclwb::CertificateVerdict v = lclwb::verify_certificate(load_json(cert_path));
            std::cout << (v.ok ? "OK" : "FAIL") << ": " << v.detail
                      << (v.trusted_search_only ? " [trust-the-search]" : "") << "\n";
            return v.ok ? 0 : 1;
        }
        if (table->parsed()) {
            const lclwb::json cert = load_json(table_path);
            if (cert.at("kind") != "table") throw lclwb::config_error("not a table certificate");
            std::cout << lclwb::render_table_payload(cert.at("payload"), format == "csv");
            return 0;
        }
    } catch (const lclwb::config_error& ex) {
        std::cerr << "config error: " << ex.what() << "\n";
        return lclwb::exit_config_error;
    } catch (const lclwb::invariant_error& ex) {
        std::cerr << "internal invariant violation: " << ex.what() << "\n";
        return lclwb::exit_invariant;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 0;
}
