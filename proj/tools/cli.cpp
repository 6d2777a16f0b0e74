#include "cli.hpp"

#include "qdet/identitylab.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace qdet::cli {

namespace {

struct Config {
    std::vector<std::string> checks{"all"};
    std::optional<long> n_min;
    std::optional<long> n_max;
    long trials = 5;
    std::uint64_t seed = 42;
    std::string format = "text";
    std::string output;
    bool timestamp = false;
    bool serial = false;
    std::string explain_id;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::vector<std::string> expand_checks(const std::vector<std::string>& raw) {
    std::vector<std::string> ids;
    for (const auto& item : raw) {
        std::stringstream ss(item);
        std::string part;
        while (std::getline(ss, part, ',')) {
            if (part.empty()) continue;
            if (part == "all") {
                for (const auto& c : registry()) ids.emplace_back(c.id);
                continue;
            }
            if (find_check(part) == nullptr) throw UsageError("unknown check id: " + part);
            ids.push_back(part);
        }
    }
    if (ids.empty()) throw UsageError("no checks selected");
    return ids;
}

std::string utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::ostringstream os;
    os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
    return os.str();
}

void print_list(std::ostream& out) {
    std::size_t width = 0;
    for (const auto& c : registry()) width = std::max(width, c.id.size());
    for (const auto& c : registry()) {
        out << std::left << std::setw(static_cast<int>(width) + 2) << c.id << c.title;
        if (c.mode == CheckMode::evidence) out << " [evidence]";
        out << '\n';
    }
}

int explain(const std::string& id, std::ostream& out, std::ostream& err) {
    const CheckInfo* c = find_check(id);
    if (c == nullptr) {
        err << "error: unknown check id: " << id << '\n';
        return kExitUsage;
    }
    out << c->id << ": " << c->title << '\n'
        << "mode: " << (c->mode == CheckMode::evidence ? "evidence" : "identity") << '\n'
        << "n: " << c->n_meaning << "; default " << c->n_default_min << ".." << c->n_default_max << ", defined for n >= "
        << c->n_floor << '\n'
        << "slots: " << describe_slots(c->slots) << '\n'
        << "recipe: " << c->recipe << '\n';
    return kExitOk;
}

int run_command(const Config& cfg, std::ostream& out, std::ostream& err) {
    SuiteOptions opts;
    opts.check_ids = expand_checks(cfg.checks);
    if (cfg.n_min.has_value() != cfg.n_max.has_value()) throw UsageError("--n-min and --n-max must be given together");
    if (cfg.n_min) {
        if (*cfg.n_min > *cfg.n_max) throw UsageError("--n-min exceeds --n-max");
        opts.n_range = NRange{*cfg.n_min, *cfg.n_max};
    }
    opts.trials = cfg.trials;
    opts.seed = cfg.seed;
    opts.parallel = !cfg.serial;

    Report report = run_suite(opts);
    if (cfg.timestamp) report.started = utc_now();
    const std::string body = cfg.format == "json" ? report_to_json(report) : report_to_text(report);
    if (cfg.output.empty() || cfg.output == "-") {
        out << body;
    } else {
        std::ofstream file(cfg.output, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << cfg.output << " for writing\n";
            return kExitUsage;
        }
        file << body;
    }
    if (report.summary.evidence_fail > 0) {
        err << "warning: " << report.summary.evidence_fail << " evidence-mode point(s) failed; see the report\n";
    }
    return suite_passed(report) ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const std::optional<std::string>& seed_env) {
    Config cfg;
    if (seed_env && !seed_env->empty()) {
        try {
            std::size_t used = 0;
            cfg.seed = std::stoull(*seed_env, &used);
            if (used != seed_env->size()) throw std::invalid_argument("trailing characters");
        } catch (const std::exception&) {
            err << "error: QDETLAB_SEED is not an unsigned 64-bit integer: " << *seed_env << '\n';
            return kExitUsage;
        }
    }

    CLI::App app{"Exact randomized verification of determinant and q-series identities", "qdet-lab"};
    app.require_subcommand(1);

    auto* list_cmd = app.add_subcommand("list", "List check ids and titles");
    auto* explain_cmd = app.add_subcommand("explain", "Show what a check compares and which parameters it samples");
    explain_cmd->add_option("id", cfg.explain_id, "Check id")->required();

    auto* run_cmd = app.add_subcommand("run", "Run checks and write a report");
    run_cmd->add_option("--check", cfg.checks, "Check ids, comma separated or repeated, or 'all'")->expected(1, -1);
    run_cmd->add_option("--n-min", cfg.n_min, "Smallest n (default: per check)");
    run_cmd->add_option("--n-max", cfg.n_max, "Largest n (default: per check)");
    run_cmd->add_option("--trials", cfg.trials, "Random points per (check, n)")->check(CLI::PositiveNumber);
    run_cmd->add_option("--seed", cfg.seed, "Base seed (env QDETLAB_SEED overrides the default 42)");
    run_cmd->add_option("--format", cfg.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    run_cmd->add_option("--output", cfg.output, "Write the report here instead of stdout");
    run_cmd->add_flag("--timestamp", cfg.timestamp, "Record the start time (reports then differ run to run)");
    run_cmd->add_flag("--serial", cfg.serial, "Run without OpenMP threads");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*list_cmd) {
            print_list(out);
            return kExitOk;
        }
        if (*explain_cmd) return explain(cfg.explain_id, out, err);
        if (*run_cmd) return run_command(cfg, out, err);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace qdet::cli
