// qkdsim: command-line front end for the protocol simulator.
//
// Subcommands:
//   run       Monte-Carlo key-distribution session(s)
//   analyze   exact attack report (no sampling)
//   morcheck  anti-cloning conditions for all codebook pairs
//
// Exit codes: 0 success, 1 usage/validation error, 2 internal invariant
// violation (a bug, not an input problem). morcheck additionally exits
// nonzero when a condition fails.

#include <cstdint>
#include <cstdio>
#include <future>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qkd/analysis.hpp"
#include "qkd/attack.hpp"
#include "qkd/json_io.hpp"
#include "qkd/session.hpp"

namespace {

struct AttackFlags {
    std::string name = "none";
    double theta1 = 0.0, phi1 = 0.0;
    double theta2 = 0.0, phi2 = 0.0;
};

qkd::AttackModel make_attack(const AttackFlags& f) {
    if (f.name == "none") return qkd::no_attack();
    if (f.name == "double-cnot") return qkd::double_cnot();
    if (f.name == "intercept-z") {
        return qkd::intercept_resend(qkd::OrthonormalBasis::computational(2),
                                     qkd::OrthonormalBasis::computational(2),
                                     "intercept-z");
    }
    if (f.name == "intercept-custom") {
        return qkd::intercept_resend(
            qkd::OrthonormalBasis::single_qubit(f.theta1, f.phi1),
            qkd::OrthonormalBasis::single_qubit(f.theta2, f.phi2), "intercept-custom");
    }
    throw CLI::ValidationError(
        "--attack", "unknown attack '" + f.name +
                        "' (valid: none, double-cnot, intercept-z, intercept-custom)");
}

void add_attack_flags(CLI::App* cmd, AttackFlags& f) {
    cmd->add_option("--attack", f.name,
                    "attack model: none, double-cnot, intercept-z, intercept-custom")
        ->default_val("none");
    cmd->add_option("--theta1", f.theta1, "intercept-custom: slot-1 basis polar angle");
    cmd->add_option("--phi1", f.phi1, "intercept-custom: slot-1 basis phase");
    cmd->add_option("--theta2", f.theta2, "intercept-custom: slot-2 basis polar angle");
    cmd->add_option("--phi2", f.phi2, "intercept-custom: slot-2 basis phase");
}

// ---- run ----

void print_session_text(const qkd::SessionResult& r, std::uint64_t seed) {
    std::printf("seed:              %llu\n", static_cast<unsigned long long>(seed));
    std::printf("pairs:             %zu\n", r.alice_symbols.size());
    std::printf("attack:            %s\n", r.transcript.attack_name.c_str());
    std::printf("check pairs:       %zu\n", r.check_indices.size());
    std::printf("check error rate:  %.6f\n", r.symbol_error_rate_check);
    std::printf("aborted:           %s\n", r.aborted ? "yes" : "no");
    std::printf("sifted key bits:   %zu\n", r.sifted_key_bits.size());
    std::printf("efficiency:        %.6f\n", r.efficiency);
}

void print_session_csv(const qkd::SessionResult& r, std::optional<std::uint64_t> seed) {
    if (seed.has_value()) {
        std::printf("seed,index,alice,bob,check\n");
    } else {
        std::printf("index,alice,bob,check\n");
    }
    const std::size_t checks = r.check_indices.size();
    for (std::size_t i = 0; i < r.alice_symbols.size(); ++i) {
        if (seed.has_value()) {
            std::printf("%llu,", static_cast<unsigned long long>(*seed));
        }
        std::printf("%zu,%d,%d,%d\n", i, r.alice_symbols[i].value(),
                    r.bob_symbols[i].value(), i < checks ? 1 : 0);
    }
}

int cmd_run(std::size_t pairs, double check_fraction, double abort_threshold,
            const std::vector<std::uint64_t>& seeds, const AttackFlags& af,
            const std::string& format) {
    const bool sweep = seeds.size() > 1;

    std::vector<std::future<qkd::SessionResult>> futures;
    futures.reserve(seeds.size());
    for (const auto seed : seeds) {
        qkd::SessionConfig config{pairs, check_fraction, abort_threshold, seed,
                                  make_attack(af)};
        // Independent sessions; per-seed determinism makes the launch policy
        // irrelevant to the output.
        futures.push_back(std::async(sweep ? std::launch::async : std::launch::deferred,
                                     [config] { return qkd::run_session(config); }));
    }
    std::vector<qkd::SessionResult> results;
    results.reserve(seeds.size());
    for (auto& f : futures) results.push_back(f.get());

    if (format == "json") {
        if (sweep) {
            qkd::json arr = qkd::json::array();
            for (std::size_t i = 0; i < results.size(); ++i) {
                qkd::json entry;
                entry["seed"] = seeds[i];
                entry["result"] = qkd::to_json(results[i]);
                arr.push_back(std::move(entry));
            }
            std::cout << arr.dump(2) << "\n";
        } else {
            std::cout << qkd::to_json(results[0]).dump(2) << "\n";
        }
    } else if (format == "csv") {
        if (sweep) {
            for (std::size_t i = 0; i < results.size(); ++i) {
                // header printed once
                if (i == 0) {
                    print_session_csv(results[i], seeds[i]);
                } else {
                    const auto& r = results[i];
                    const std::size_t checks = r.check_indices.size();
                    for (std::size_t j = 0; j < r.alice_symbols.size(); ++j) {
                        std::printf("%llu,%zu,%d,%d,%d\n",
                                    static_cast<unsigned long long>(seeds[i]), j,
                                    r.alice_symbols[j].value(), r.bob_symbols[j].value(),
                                    j < checks ? 1 : 0);
                    }
                }
            }
        } else {
            print_session_csv(results[0], std::nullopt);
        }
    } else {
        for (std::size_t i = 0; i < results.size(); ++i) {
            if (i > 0) std::printf("\n");
            print_session_text(results[i], seeds[i]);
        }
    }
    return 0;
}

// ---- analyze ----

int cmd_analyze(const AttackFlags& af, const std::string& format) {
    const qkd::AttackReport report = qkd::attack_report(make_attack(af));
    if (format == "json") {
        std::cout << qkd::to_json(report).dump(2) << "\n";
    } else if (format == "csv") {
        std::printf("symbol,p0,p1,p2,p3,error_rate\n");
        for (int s = 0; s < 4; ++s) {
            const auto& d = report.bob_distributions[s];
            std::printf("%d,%.12g,%.12g,%.12g,%.12g,%.12g\n", s, d.prob(0), d.prob(1),
                        d.prob(2), d.prob(3), 1.0 - d.prob(s));
        }
    } else {
        std::printf("attack:                %s\n", report.attack_name.c_str());
        std::printf("per-symbol Bob outcome distributions:\n");
        for (int s = 0; s < 4; ++s) {
            const auto& d = report.bob_distributions[s];
            std::printf("  sent %d -> {%.6f, %.6f, %.6f, %.6f}\n", s, d.prob(0),
                        d.prob(1), d.prob(2), d.prob(3));
        }
        std::printf("symbol error rate:     %.6f\n", report.symbol_error_rate);
        std::printf("eve guess probability: %.6f\n", report.eve_guess_probability);
    }
    return 0;
}

// ---- morcheck ----

int cmd_morcheck(const std::string& format) {
    const auto reports = qkd::mor_check_all();
    bool all_pass = true;
    for (const auto& r : reports) all_pass = all_pass && r.passes;

    if (format == "json") {
        qkd::json arr = qkd::json::array();
        for (const auto& r : reports) arr.push_back(qkd::to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else if (format == "csv") {
        std::printf("pair_a,pair_b,rho1_overlap,rho1_distance,rho2_overlap,passes\n");
        for (const auto& r : reports) {
            std::printf("%d,%d,%.12g,%.12g,%.12g,%d\n", r.pair.first, r.pair.second,
                        r.rho1_overlap, r.rho1_distance, r.rho2_overlap,
                        r.passes ? 1 : 0);
        }
    } else {
        for (const auto& r : reports) {
            std::printf("pair (%d,%d)  rho1_overlap=%.4f  rho1_distance=%.4f  "
                        "rho2_overlap=%.4f  %s\n",
                        r.pair.first, r.pair.second, r.rho1_overlap, r.rho1_distance,
                        r.rho2_overlap, r.passes ? "PASS" : "FAIL");
        }
    }
    return all_pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and analysis toolkit for a four-state two-qubit "
                 "key-distribution protocol"};
    app.require_subcommand(1);

    // run
    auto* run = app.add_subcommand("run", "run a key-distribution session");
    std::size_t pairs = 0;
    double check_fraction = 0.0;
    double abort_threshold = 0.0;
    std::optional<std::uint64_t> seed;
    std::vector<std::uint64_t> sweep;
    AttackFlags run_attack;
    std::string run_format = "text";
    run->add_option("--pairs", pairs, "number of two-qubit pairs to transmit")
        ->required()
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000000}));
    run->add_option("--check-fraction", check_fraction,
                    "fraction of pairs publicly compared")
        ->check(CLI::Range(0.0, 1.0))
        ->default_val(0.0);
    run->add_option("--abort-threshold", abort_threshold,
                    "max tolerated check error rate")
        ->check(CLI::Range(0.0, 1.0))
        ->default_val(0.0);
    auto* seed_opt = run->add_option("--seed", seed, "session seed (required)");
    auto* sweep_opt =
        run->add_option("--sweep", sweep, "run one session per listed seed")
            ->expected(1, -1);
    seed_opt->excludes(sweep_opt);
    add_attack_flags(run, run_attack);
    run->add_option("--format", run_format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");

    // analyze
    auto* analyze = app.add_subcommand("analyze", "exact attack report");
    AttackFlags analyze_attack;
    std::string analyze_format = "text";
    add_attack_flags(analyze, analyze_attack);
    analyze->add_option("--format", analyze_format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");

    // morcheck
    auto* morcheck = app.add_subcommand("morcheck", "anti-cloning condition report");
    std::string mor_format = "text";
    morcheck->add_option("--format", mor_format, "output format: text, json, csv")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");

    try {
        app.parse(argc, argv);

        if (run->parsed()) {
            std::vector<std::uint64_t> seeds;
            if (seed.has_value()) {
                seeds.push_back(*seed);
            } else if (!sweep.empty()) {
                seeds = sweep;
            } else {
                std::cerr << "run: --seed (or --sweep) is required\n";
                return 1;
            }
            return cmd_run(pairs, check_fraction, abort_threshold, seeds, run_attack,
                           run_format);
        }
        if (analyze->parsed()) {
            return cmd_analyze(analyze_attack, analyze_format);
        }
        return cmd_morcheck(mor_format);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e); // prints help, exit 0
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        // reaching here means a library invariant broke
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}
