// Batch driver for the chainspace library: invariant suites, the dual
// Ramsey engine, witness construction, and certificate re-verification.
//
// Exit codes: 0 = all checks passed, 1 = a check failed or a verdict could
// not be reached within budget, 2 = usage or input error.

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chainspace/random_gen.hpp"
#include "chainspace/serde.hpp"
#include "chainspace/symbolic.hpp"
#include "chainspace/verify.hpp"

namespace fs = std::filesystem;
using chainspace::CheckResult;
using nlohmann::json;

namespace {

struct GlobalOptions {
    std::uint64_t seed = 1;
    std::string out_dir = "chainspace-out";
    std::vector<std::string> argv_echo;
};

/// Report written for every verb.  Keys are sorted and no wall-clock data is
/// included, so identical flags and seed give byte-identical files; the
/// elapsed time goes to stdout only.
class ReportBuilder {
public:
    ReportBuilder(const GlobalOptions& global, std::string verb)
        : global_(global), verb_(std::move(verb)) {}

    void add_suite(const chainspace::SuiteResult& suite) {
        json checks = json::array();
        for (const chainspace::SuiteCheck& check : suite.checks) {
            json entry{{"name", check.name}, {"cases", check.cases}, {"ok", check.ok}};
            if (!check.ok) {
                entry["detail"] = check.detail;
                add_failure(suite.suite + "." + check.name, check.detail);
            }
            checks.push_back(entry);
            check.ok ? ++passed_ : ++failed_;
        }
        suites_.push_back({{"suite", suite.suite}, {"checks", checks}, {"ok", suite.ok()}});
    }

    void add_check(const std::string& name, bool ok, const std::string& detail) {
        json entry{{"name", name}, {"ok", ok}};
        if (!ok) {
            entry["detail"] = detail;
            add_failure(name, detail);
        }
        standalone_.push_back(entry);
        ok ? ++passed_ : ++failed_;
    }

    void add_certificate(const std::string& relative_path) {
        certificates_.push_back(relative_path);
    }

    void add_value(const std::string& key, const json& value) { extra_[key] = value; }

    bool all_ok() const { return failed_ == 0; }

    json build() const {
        json report{{"command", global_.argv_echo},
                    {"verb", verb_},
                    {"seed", global_.seed},
                    {"passed", passed_},
                    {"failed", failed_},
                    {"certificates", certificates_},
                    {"failures", failures_}};
        if (!suites_.empty()) report["suites"] = suites_;
        if (!standalone_.empty()) report["checks"] = standalone_;
        for (const auto& [key, value] : extra_.items()) report[key] = value;
        return report;
    }

private:
    void add_failure(const std::string& name, const std::string& detail) {
        std::string reproduce;
        for (const std::string& arg : global_.argv_echo) {
            if (!reproduce.empty()) reproduce += ' ';
            reproduce += arg;
        }
        failures_.push_back({{"check", name}, {"detail", detail}, {"reproduce", reproduce}});
    }

    const GlobalOptions& global_;
    std::string verb_;
    std::uint64_t passed_ = 0;
    std::uint64_t failed_ = 0;
    json suites_ = json::array();
    json standalone_ = json::array();
    json certificates_ = json::array();
    json failures_ = json::array();
    json extra_ = json::object();
};

void write_file(const fs::path& path, const std::string& text) {
    fs::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
}

int finish(const GlobalOptions& global, const ReportBuilder& report,
           std::chrono::steady_clock::time_point started) {
    const json j = report.build();
    write_file(fs::path(global.out_dir) / "report.json", j.dump(2) + "\n");
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - started)
                             .count();
    std::cout << (report.all_ok() ? "OK" : "FAILED") << "  report="
              << (fs::path(global.out_dir) / "report.json").string() << "  duration_ms="
              << elapsed << "\n";
    return report.all_ok() ? 0 : 1;
}

void print_suite(const chainspace::SuiteResult& suite) {
    for (const chainspace::SuiteCheck& check : suite.checks) {
        std::cout << (check.ok ? "[ok]  " : "[FAIL]") << ' ' << suite.suite << '.'
                  << check.name << "  (" << check.cases << " cases)";
        if (!check.ok) std::cout << "  " << check.detail;
        std::cout << "\n";
    }
}

json read_json_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    json j;
    in >> j;
    return j;
}

chainspace::Table parse_table_spec(int k, const std::string& spec) {
    const std::vector<chainspace::Permutation> perms = chainspace::all_permutations(k);
    std::vector<int8_t> values(perms.size(), 0);
    std::vector<bool> seen(perms.size(), false);
    std::stringstream stream(spec);
    std::string token;
    while (std::getline(stream, token, ',')) {
        const std::size_t colon = token.find(':');
        if (colon == std::string::npos)
            throw std::runtime_error("table entry '" + token + "' needs perm:value");
        std::string name = token.substr(0, colon);
        const std::string value = token.substr(colon + 1);
        if (name == "id") name = chainspace::Permutation::identity(k).one_line();
        if (name == "swap" && k == 2) name = "21";
        const chainspace::Permutation sigma = chainspace::Permutation::from_one_line(name);
        if (sigma.k() != k) throw std::runtime_error("table entry '" + token + "' has wrong arity");
        int v = 0;
        if (value == "+1" || value == "1")
            v = 1;
        else if (value == "-1")
            v = -1;
        else
            throw std::runtime_error("table value '" + value + "' must be +1 or -1");
        const auto rank = static_cast<std::size_t>(sigma.lex_rank());
        values[rank] = static_cast<int8_t>(v);
        seen[rank] = true;
    }
    for (bool s : seen)
        if (!s) throw std::runtime_error("table spec must cover every permutation");
    return chainspace::Table(k, std::move(values));
}

struct RamseyArgs {
    int n = 0, k = 0, m = 0, r = 0, n_max = 0;
    double budget = 50'000'000;
    int workers = 0;
    std::string cert_path;
    std::string transcript;
};

chainspace::DrBudget to_budget(const RamseyArgs& args) {
    chainspace::DrBudget budget;
    if (args.budget < 1) throw std::runtime_error("budget must be at least 1");
    budget.max_nodes = static_cast<std::uint64_t>(args.budget);
    budget.workers = args.workers;
    return budget;
}

std::string dr_status_name(chainspace::DrStatus status) {
    switch (status) {
        case chainspace::DrStatus::found: return "found";
        case chainspace::DrStatus::none: return "none";
        case chainspace::DrStatus::unknown: return "unknown";
    }
    return "unknown";
}

int run_ramsey_number(const GlobalOptions& global, const RamseyArgs& args,
                      std::chrono::steady_clock::time_point started) {
    ReportBuilder report(global, "ramsey number");
    const chainspace::DrBudget budget = to_budget(args);
    int start = args.m;
    std::optional<chainspace::DrCertificate> lower;
    std::optional<chainspace::DrCertificate> upper;

    // Resume: every decided ground size is one JSON line in the transcript;
    // matching lines are skipped, the search picks up after the last one.
    if (!args.transcript.empty() && fs::exists(args.transcript)) {
        std::ifstream in(args.transcript);
        std::string line;
        int expected = args.m;
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const json j = json::parse(line);
            if (j.at("k").get<int>() != args.k || j.at("m").get<int>() != args.m ||
                j.at("r").get<int>() != args.r)
                throw std::runtime_error("transcript belongs to a different query");
            const int n = j.at("n").get<int>();
            if (n != expected) throw std::runtime_error("transcript has a gap at n=" +
                                                        std::to_string(expected));
            const std::string status = j.at("status").get<std::string>();
            if (status == "found") {
                chainspace::DrCertificate cert;
                cert.kind = chainspace::DrCertificateKind::lower_bound;
                cert.n = n;
                cert.k = args.k;
                cert.m = args.m;
                cert.r = args.r;
                cert.coloring = chainspace::decode_coloring(j.at("coloring"));
                lower = cert;
            } else if (status == "none") {
                // Rebuild the deterministic demonstration certificate.
                chainspace::DrStep redo = chainspace::dr_step(n, args.k, args.m, args.r, budget);
                if (redo.status != chainspace::DrStatus::none)
                    throw std::runtime_error("transcript disagrees with a fresh search");
                upper = redo.certificate;
            } else {
                throw std::runtime_error("transcript has unknown status '" + status + "'");
            }
            expected = n + 1;
            if (upper) break;
        }
        start = expected;
        std::cout << "resumed from transcript at n=" << start << "\n";
    }

    std::uint64_t explored = 0;
    chainspace::DrNumberResult::Status status = chainspace::DrNumberResult::Status::beyond_range;
    int value = -1;
    if (upper) {
        status = chainspace::DrNumberResult::Status::determined;
        value = upper->n;
    }
    std::ofstream log;
    if (!args.transcript.empty() && !upper) {
        fs::path path(args.transcript);
        if (path.has_parent_path()) fs::create_directories(path.parent_path());
        log.open(args.transcript, std::ios::app);
    }
    for (int n = start; n <= args.n_max && !upper; ++n) {
        const chainspace::DrStep step = chainspace::dr_step(n, args.k, args.m, args.r, budget);
        explored += step.explored;
        if (step.status == chainspace::DrStatus::unknown) {
            status = chainspace::DrNumberResult::Status::unknown;
            break;
        }
        if (log.is_open()) {
            json line{{"k", args.k}, {"m", args.m},
                      {"r", args.r}, {"n", n},
                      {"status", dr_status_name(step.status)}};
            if (step.status == chainspace::DrStatus::found)
                line["coloring"] = chainspace::encode(step.certificate->coloring);
            log << line.dump() << "\n";
            log.flush();
        }
        if (step.status == chainspace::DrStatus::found) {
            lower = step.certificate;
            continue;
        }
        upper = step.certificate;
        status = chainspace::DrNumberResult::Status::determined;
        value = n;
    }

    report.add_value("explored", explored);
    auto emit = [&](const chainspace::DrCertificate& cert, const std::string& stem) {
        const std::string name = stem + "-n" + std::to_string(cert.n) + ".json";
        write_file(fs::path(global.out_dir) / name, chainspace::encode(cert).dump(2) + "\n");
        report.add_certificate(name);
        const CheckResult check = chainspace::check_dr_certificate(cert);
        report.add_check("certificate " + name + " re-verifies", check.ok, check.diagnostic);
    };
    if (lower) emit(*lower, "dr-lower");
    if (upper) emit(*upper, "dr-upper");

    switch (status) {
        case chainspace::DrNumberResult::Status::determined:
            std::cout << "value=" << value << "\n";
            report.add_value("value", value);
            report.add_check("value determined", true, "");
            break;
        case chainspace::DrNumberResult::Status::beyond_range:
            std::cout << "value exceeds n_max=" << args.n_max << " (certified lower bound)\n";
            report.add_value("lower_bound_exceeds", args.n_max);
            report.add_check("value determined or lower bound certified", lower.has_value(),
                             "no certificate produced");
            break;
        case chainspace::DrNumberResult::Status::unknown:
            std::cout << "unknown: budget exhausted\n";
            report.add_check("value determined or lower bound certified", false,
                             "budget exhausted before a verdict");
            break;
    }
    return finish(global, report, started);
}

}  // namespace

int main(int argc, char** argv) {
    const auto started = std::chrono::steady_clock::now();
    GlobalOptions global;
    for (int i = 1; i < argc; ++i) global.argv_echo.emplace_back(argv[i]);

    CLI::App app{"Exact toolkit for chains, partitions, and configurations on the binary "
                 "Cantor space"};
    app.require_subcommand(1);
    app.fallthrough();  // let global flags appear after the subcommand
    app.add_option("--seed", global.seed, "seed for every randomized check");
    app.add_option("--out", global.out_dir, "directory for reports and certificates");

    chainspace::VerifyOptions verify_options;
    auto add_suite_flags = [&verify_options](CLI::App* cmd) {
        cmd->add_option("--max-leaves", verify_options.max_leaves,
                        "size ceiling for randomized instances");
        cmd->add_option("--cases", verify_options.random_cases,
                        "randomized cases per law");
    };

    CLI::App* cmd_verify_suite =
        app.add_subcommand("verify-suite", "run every module's invariant suite");
    add_suite_flags(cmd_verify_suite);

    std::map<std::string, CLI::App*> suite_cmds;
    for (const char* name : {"partitions", "cantor", "chains", "symbolic"}) {
        CLI::App* cmd = app.add_subcommand(name, std::string("run the ") + name +
                                                     " module's invariant suite");
        add_suite_flags(cmd);
        suite_cmds[name] = cmd;
    }

    // dynamics: suite by default, plus witness construction and checking.
    CLI::App* cmd_dynamics =
        app.add_subcommand("dynamics", "witness constructors and certificate checks");
    add_suite_flags(cmd_dynamics);
    std::string dynamics_kind, dynamics_in, dynamics_cert;
    CLI::App* cmd_dyn_witness = cmd_dynamics->add_subcommand(
        "witness", "build a witness certificate from a JSON input description");
    cmd_dyn_witness->add_option("--kind", dynamics_kind, "witness kind")->required();
    cmd_dyn_witness->add_option("--in", dynamics_in, "input JSON file")->required();
    CLI::App* cmd_dyn_check =
        cmd_dynamics->add_subcommand("check", "re-verify a stored witness certificate");
    cmd_dyn_check->add_option("--cert", dynamics_cert, "certificate JSON file")->required();

    // ramsey: verify | lower | number | check.
    CLI::App* cmd_ramsey = app.add_subcommand("ramsey", "dual Ramsey search engine");
    cmd_ramsey->require_subcommand(1);
    RamseyArgs ramsey;
    auto add_query_flags = [&ramsey](CLI::App* cmd, bool with_n, bool with_n_max) {
        if (with_n) cmd->add_option("-n,--ground", ramsey.n, "ground set size")->required();
        cmd->add_option("-k", ramsey.k, "blocks in the colored partitions")->required();
        cmd->add_option("-m", ramsey.m, "blocks in the sought pattern")->required();
        cmd->add_option("-r", ramsey.r, "number of colors")->required();
        if (with_n_max)
            cmd->add_option("--n-max", ramsey.n_max, "search ceiling")->required();
        cmd->add_option("--budget", ramsey.budget, "cap on explored assignments")
            ->envname("CHAINSPACE_BUDGET");
        cmd->add_option("--workers", ramsey.workers, "worker threads (0 = hardware)");
    };
    CLI::App* cmd_ramsey_verify = cmd_ramsey->add_subcommand(
        "verify", "does every coloring admit a monochromatic pattern at this size?");
    add_query_flags(cmd_ramsey_verify, true, false);
    CLI::App* cmd_ramsey_lower = cmd_ramsey->add_subcommand(
        "lower", "search for a bad coloring certifying a lower bound");
    add_query_flags(cmd_ramsey_lower, true, false);
    CLI::App* cmd_ramsey_number =
        cmd_ramsey->add_subcommand("number", "compute the least size with the property");
    add_query_flags(cmd_ramsey_number, false, true);
    cmd_ramsey_number->add_option("--transcript", ramsey.transcript,
                                  "line-JSON progress log; existing lines are resumed");
    CLI::App* cmd_ramsey_check =
        cmd_ramsey->add_subcommand("check", "re-verify a stored search certificate");
    cmd_ramsey_check->add_option("--cert", ramsey.cert_path, "certificate JSON file")
        ->required();

    // factor: suite by default, plus the explicit round trip.
    CLI::App* cmd_factor =
        app.add_subcommand("factor", "table extraction through the coloring pipeline");
    add_suite_flags(cmd_factor);
    int factor_k = 2;
    std::string factor_table_spec;
    CLI::App* cmd_factor_roundtrip = cmd_factor->add_subcommand(
        "roundtrip", "extract a table from the configuration it generates");
    cmd_factor_roundtrip->add_option("-k", factor_k, "table arity");
    cmd_factor_roundtrip->add_option("--table", factor_table_spec,
                                     "comma-separated perm:value entries (id/swap allowed)")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    verify_options.seed = global.seed;

    try {
        if (cmd_verify_suite->parsed()) {
            ReportBuilder report(global, "verify-suite");
            for (const chainspace::SuiteResult& suite : chainspace::verify_all(verify_options)) {
                print_suite(suite);
                report.add_suite(suite);
            }
            return finish(global, report, started);
        }

        for (const auto& [name, cmd] : suite_cmds) {
            if (!cmd->parsed()) continue;
            ReportBuilder report(global, name);
            chainspace::SuiteResult suite =
                name == "partitions"  ? chainspace::verify_partitions(verify_options)
                : name == "cantor"    ? chainspace::verify_cantor(verify_options)
                : name == "chains"    ? chainspace::verify_chains(verify_options)
                                      : chainspace::verify_symbolic(verify_options);
            print_suite(suite);
            report.add_suite(suite);
            return finish(global, report, started);
        }

        if (cmd_dynamics->parsed()) {
            if (cmd_dyn_witness->parsed()) {
                const auto kind = chainspace::witness_kind_from_name(dynamics_kind);
                if (!kind) throw std::runtime_error("unknown witness kind " + dynamics_kind);
                json in;
                try {
                    in = read_json_file(dynamics_in);
                } catch (const json::exception& e) {
                    throw std::runtime_error(std::string("bad input JSON: ") + e.what());
                }
                chainspace::WitnessCertificate cert;
                switch (*kind) {
                    case chainspace::WitnessKind::point_cover:
                        cert = chainspace::certify_point_cover(
                            chainspace::decode_word(in.at("point")),
                            chainspace::decode_clopen(in.at("set_u")));
                        break;
                    case chainspace::WitnessKind::extreme_proximal:
                        cert = chainspace::certify_extreme_proximality(
                            chainspace::decode_clopen(in.at("set_f")),
                            chainspace::decode_clopen(in.at("set_u")));
                        break;
                    case chainspace::WitnessKind::phi_minimal:
                        cert = chainspace::certify_phi_minimality(
                            chainspace::decode_chain(in.at("chain")),
                            chainspace::decode_partition(in.at("partition")));
                        break;
                    case chainspace::WitnessKind::proximal:
                        cert = chainspace::certify_proximality(
                            chainspace::decode_chain(in.at("chain")),
                            chainspace::decode_chain(in.at("chain2")),
                            chainspace::decode_partition(in.at("partition")));
                        break;
                    case chainspace::WitnessKind::incomparable:
                        cert = chainspace::certify_incomparability(
                            chainspace::decode_chain(in.at("chain")),
                            chainspace::decode_clopen(in.at("set_f")));
                        break;
                }
                ReportBuilder report(global, "dynamics witness");
                const std::string name = std::string("witness-") + dynamics_kind + ".json";
                write_file(fs::path(global.out_dir) / name,
                           chainspace::encode(cert).dump(2) + "\n");
                report.add_certificate(name);
                const CheckResult check = chainspace::check_witness(cert);
                report.add_check("constructed witness verifies", check.ok, check.diagnostic);
                return finish(global, report, started);
            }
            if (cmd_dyn_check->parsed()) {
                ReportBuilder report(global, "dynamics check");
                chainspace::WitnessCertificate cert;
                try {
                    cert = chainspace::decode_witness_certificate(read_json_file(dynamics_cert));
                } catch (const json::exception& e) {
                    throw std::runtime_error(std::string("bad certificate JSON: ") + e.what());
                }
                const CheckResult check = chainspace::check_witness(cert);
                std::cout << (check.ok ? "certificate verifies"
                                       : "certificate rejected: " + check.diagnostic)
                          << "\n";
                report.add_check("stored witness verifies", check.ok, check.diagnostic);
                return finish(global, report, started);
            }
            ReportBuilder report(global, "dynamics");
            const chainspace::SuiteResult suite = chainspace::verify_dynamics(verify_options);
            print_suite(suite);
            report.add_suite(suite);
            return finish(global, report, started);
        }

        if (cmd_ramsey->parsed()) {
            if (cmd_ramsey_verify->parsed()) {
                ReportBuilder report(global, "ramsey verify");
                const chainspace::DrVerdict verdict = chainspace::verify_dr(
                    ramsey.n, ramsey.k, ramsey.m, ramsey.r, to_budget(ramsey));
                report.add_value("explored", verdict.explored);
                if (verdict.status == chainspace::DrVerdict::Status::holds) {
                    std::cout << "holds: every coloring admits a monochromatic pattern\n";
                    report.add_value("verdict", "holds");
                    report.add_check("verdict reached", true, "");
                } else if (verdict.status == chainspace::DrVerdict::Status::fails) {
                    std::cout << "fails: bad coloring found\n";
                    report.add_value("verdict", "fails");
                    chainspace::DrCertificate cert;
                    cert.kind = chainspace::DrCertificateKind::lower_bound;
                    cert.n = ramsey.n;
                    cert.k = ramsey.k;
                    cert.m = ramsey.m;
                    cert.r = ramsey.r;
                    cert.coloring = *verdict.counterexample;
                    const std::string name =
                        "dr-lower-n" + std::to_string(ramsey.n) + ".json";
                    write_file(fs::path(global.out_dir) / name,
                               chainspace::encode(cert).dump(2) + "\n");
                    report.add_certificate(name);
                    const CheckResult check = chainspace::check_dr_certificate(cert);
                    report.add_check("counterexample re-verifies", check.ok, check.diagnostic);
                    report.add_check("verdict reached", true, "");
                } else {
                    std::cout << "unknown: budget exhausted\n";
                    report.add_value("verdict", "unknown");
                    report.add_check("verdict reached", false, "budget exhausted");
                }
                return finish(global, report, started);
            }
            if (cmd_ramsey_lower->parsed()) {
                ReportBuilder report(global, "ramsey lower");
                const chainspace::DrSearchResult search = chainspace::search_bad_coloring(
                    ramsey.n, ramsey.k, ramsey.m, ramsey.r, to_budget(ramsey));
                report.add_value("explored", search.explored);
                if (search.status == chainspace::DrStatus::found) {
                    chainspace::DrCertificate cert;
                    cert.kind = chainspace::DrCertificateKind::lower_bound;
                    cert.n = ramsey.n;
                    cert.k = ramsey.k;
                    cert.m = ramsey.m;
                    cert.r = ramsey.r;
                    cert.coloring = *search.coloring;
                    const std::string name =
                        "dr-lower-n" + std::to_string(ramsey.n) + ".json";
                    write_file(fs::path(global.out_dir) / name,
                               chainspace::encode(cert).dump(2) + "\n");
                    report.add_certificate(name);
                    const CheckResult check = chainspace::check_dr_certificate(cert);
                    std::cout << "bad coloring found; certificate written\n";
                    report.add_check("lower bound certified", check.ok, check.diagnostic);
                } else if (search.status == chainspace::DrStatus::none) {
                    std::cout << "no bad coloring exists: the property holds here\n";
                    report.add_check("lower bound certified", false,
                                     "no bad coloring exists at this size");
                } else {
                    std::cout << "unknown: budget exhausted\n";
                    report.add_check("lower bound certified", false, "budget exhausted");
                }
                return finish(global, report, started);
            }
            if (cmd_ramsey_number->parsed())
                return run_ramsey_number(global, ramsey, started);
            // ramsey check
            ReportBuilder report(global, "ramsey check");
            chainspace::DrCertificate cert;
            try {
                cert = chainspace::decode_dr_certificate(read_json_file(ramsey.cert_path));
            } catch (const json::exception& e) {
                throw std::runtime_error(std::string("bad certificate JSON: ") + e.what());
            }
            const CheckResult check = chainspace::check_dr_certificate(cert);
            std::cout << (check.ok ? "certificate verifies"
                                   : "certificate rejected: " + check.diagnostic)
                      << "\n";
            report.add_check("stored certificate verifies", check.ok, check.diagnostic);
            return finish(global, report, started);
        }

        if (cmd_factor->parsed()) {
            if (cmd_factor_roundtrip->parsed()) {
                ReportBuilder report(global, "factor roundtrip");
                const chainspace::Table table = parse_table_spec(factor_k, factor_table_spec);
                chainspace::RandomSource rng(global.seed);
                const chainspace::ChainApprox c0 = rng.random_chain(5);
                const chainspace::OrderedPartition alpha = rng.random_partition(factor_k, 5);
                const auto extraction = chainspace::extract_table(
                    chainspace::phi_config(table, c0), c0, alpha, alpha.size());
                const bool ok = extraction.has_value() && extraction->table == table;
                if (extraction) {
                    json payload{{"table", chainspace::encode(extraction->table)},
                                 {"witness", chainspace::encode(extraction->witness)},
                                 {"eta", extraction->eta.encoding()},
                                 {"beta", chainspace::encode(extraction->beta)}};
                    write_file(fs::path(global.out_dir) / "factor-extraction.json",
                               payload.dump(2) + "\n");
                    report.add_certificate("factor-extraction.json");
                }
                std::cout << (ok ? "recovered table equals input\n"
                                 : "round trip failed\n");
                report.add_check("recovered table equals input", ok,
                                 ok ? "" : "extraction empty or mismatched");
                return finish(global, report, started);
            }
            ReportBuilder report(global, "factor");
            const chainspace::SuiteResult suite = chainspace::verify_factor(verify_options);
            print_suite(suite);
            report.add_suite(suite);
            return finish(global, report, started);
        }
    } catch (const chainspace::ContractViolation& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::runtime_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    std::cerr << "no verb executed\n";
    return 2;
}
