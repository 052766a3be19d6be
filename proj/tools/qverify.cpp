#include "qseries/catalog.hpp"

#include <CLI11.hpp>
#include <omp.h>

#include <cstdio>
#include <fstream>
#include <iostream>

namespace {

struct CliConfig {
    std::string target = "all";
    int order = -1;
    int trials = 50;
    std::uint64_t seed = 42;
    long caps = 3;
    int max_k = 2;
    int max_s = 2;
    int jobs = 0;
    bool json = false;
    bool timings = false;
    std::string out_path;
};

qseries::VerificationConfig config_for(const CliConfig& cli, const std::string& id) {
    qseries::VerificationConfig cfg;
    cfg.order = cli.order;
    cfg.trials = cli.trials;
    cfg.seed = cli.seed;
    cfg.caps = cli.caps;
    cfg.family_max = id.rfind("FAM-5", 0) == 0 ? cli.max_s : cli.max_k;
    return cfg;
}

void print_human(std::ostream& os, const qseries::VerificationReport& r, bool timings) {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%-18s %c  %-19s %s=%d  seed=%llu", r.id.c_str(), r.engine,
                  r.status.c_str(), r.engine == 'B' ? "order" : "trials",
                  r.engine == 'B' ? r.order : r.trials,
                  static_cast<unsigned long long>(r.seed));
    os << buf;
    if (timings) {
        std::snprintf(buf, sizeof(buf), "  %.1fms", r.elapsed_ms);
        os << buf;
    }
    if (!r.detail.empty()) os << "  [" << r.detail << "]";
    if (r.first_mismatch) {
        os << "\n    first mismatch at index " << r.first_mismatch->index << ": lhs = "
           << r.first_mismatch->lhs << ", rhs = " << r.first_mismatch->rhs;
    }
    os << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of the catalogued q-series identities"};
    app.require_subcommand(1);
    CliConfig cli;

    auto* list_cmd = app.add_subcommand("list", "print the catalog, one id per line");
    auto* verify_cmd = app.add_subcommand("verify", "verify one identity or all of them");
    verify_cmd->add_option("target", cli.target, "identity id, FAM-x[k] form, or 'all'")
        ->required();
    verify_cmd->add_option("--order", cli.order, "series truncation order (engine B)");
    verify_cmd->add_option("--trials", cli.trials, "random points per identity (engine A)");
    verify_cmd->add_option("--seed", cli.seed, "deterministic sampling seed");
    verify_cmd->add_option("--caps", cli.caps, "max sampled termination index (engine A)");
    verify_cmd->add_option("--max-k", cli.max_k, "largest k for the double-chain families");
    verify_cmd->add_option("--max-s", cli.max_s, "largest s for the triple-chain families");
    verify_cmd->add_option("--jobs", cli.jobs, "worker threads (0 = hardware default)");
    verify_cmd->add_flag("--json", cli.json, "emit the JSON report");
    verify_cmd->add_flag("--timings", cli.timings, "include elapsed_ms (breaks byte determinism)");
    verify_cmd->add_option("--out", cli.out_path, "write the report to a file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (list_cmd->parsed()) {
        for (const auto& rec : qseries::catalog()) {
            std::cout << rec.id;
            if (rec.family) std::cout << "[k]";
            std::cout << "  (" << rec.engine << ") " << rec.description;
            if (!rec.k1_equals.empty()) std::cout << " [depth 1 == " << rec.k1_equals << "]";
            std::cout << "\n";
        }
        return 0;
    }

    if (cli.jobs > 0) omp_set_num_threads(cli.jobs);

    std::vector<qseries::VerificationReport> reports;
    try {
        if (cli.target == "all") {
            for (const auto& rec : qseries::catalog())
                reports.push_back(rec.run(config_for(cli, rec.id)));
        } else {
            reports.push_back(qseries::verify(cli.target, config_for(cli, cli.target)));
        }
    } catch (const qseries::UnknownIdentity& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::ostream* os = &std::cout;
    std::ofstream file;
    if (!cli.out_path.empty()) {
        file.open(cli.out_path);
        if (!file) {
            std::cerr << "error: cannot open " << cli.out_path << "\n";
            return 2;
        }
        os = &file;
    }

    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.passed();

    if (cli.json) {
        if (cli.target == "all")
            *os << qseries::reports_to_json(reports, cli.timings) << "\n";
        else
            *os << qseries::report_to_json(reports.front(), cli.timings) << "\n";
    } else {
        for (const auto& r : reports) print_human(*os, r, cli.timings);
        *os << (all_pass ? "all pass" : "FAILURES present") << " (" << reports.size()
            << " report" << (reports.size() == 1 ? "" : "s") << ")\n";
    }

    if (!all_pass) {
        for (const auto& r : reports) {
            if (!r.passed()) {
                std::cerr << "first failing identity: " << r.id << " (" << r.status << ")";
                if (r.first_mismatch)
                    std::cerr << " at index " << r.first_mismatch->index << ": "
                              << r.first_mismatch->lhs << " != " << r.first_mismatch->rhs;
                std::cerr << "\n";
                break;
            }
        }
        return 1;
    }
    return 0;
}
