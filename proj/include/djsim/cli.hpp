// Copyright 2026 The djsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command dispatch for the djsim tool.
//
//   djsim run <table> [--json]
//   djsim enumerate <n> [--classify] [--json]
//   djsim optics <table> [--simulate] [--json]
//   djsim qhq <re00 im00 re01 im01 re10 im10 re11 im11> [--json]
//   djsim qhq --random [--seed N] [--json]
//
// Exit codes: 0 ok, 1 bad input, 2 promise violated (run), 3 oracle not
// factorizable (optics).

#pragma once

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <random>
#include <string>
#include <vector>

#include "djsim/config.hpp"
#include "djsim/dj.hpp"
#include "djsim/optics.hpp"
#include "djsim/report.hpp"
#include "djsim/separability.hpp"

namespace djsim::cli {

enum ExitCode : int {
    kOk = 0,
    kBadInput = 1,
    kPromiseViolated = 2,
    kNotFactorizable = 3,
};

inline constexpr double kQhqInputTolerance = 1e-8;

struct Options {
    std::string table;
    int n = 0;
    bool classify = false;
    bool simulate = false;
    bool json = false;
    bool random = false;
    std::uint64_t seed = 42;
    std::vector<double> matrix;
};

inline int cmd_run(const Options& opt, std::ostream& out) {
    const auto f = BooleanFunction::parse(opt.table);
    const auto outcome = run_dj(f);
    const int code = outcome.verdict == DJVerdict::PromiseViolated ? kPromiseViolated : kOk;
    if (opt.json) {
        report::json params{{"table", opt.table}};
        report::json records = report::json::array({report::outcome_json(f, outcome)});
        report::json summary{{"verdict", to_string(outcome.verdict)}, {"exit_code", code}};
        out << report::envelope("run", std::move(params), std::move(records), std::move(summary)).dump(2)
            << '\n';
        return code;
    }
    using report::text_number;
    out << "truth_table: " << f.to_string() << '\n'
        << "qubits: " << f.n_bits() << '\n'
        << "promise: " << to_string(classify_function(f)) << '\n'
        << "amplitude: (" << text_number(outcome.amplitude_at_zero.real()) << ", "
        << text_number(outcome.amplitude_at_zero.imag()) << ")\n"
        << "probability: " << text_number(outcome.probability_at_zero()) << '\n'
        << "verdict: " << to_string(outcome.verdict) << '\n';
    return code;
}

inline int cmd_enumerate(const Options& opt, std::ostream& out) {
    if (opt.n < 1 || opt.n > enumeration_cap()) {
        throw CapExceeded("n must be in 1.." + std::to_string(enumeration_cap()) + ", got " +
                          std::to_string(opt.n));
    }
    auto functions = enumerate_promise_functions(opt.n);
    std::sort(functions.begin(), functions.end(),
              [](const BooleanFunction& a, const BooleanFunction& b) { return a.table() < b.table(); });

    report::json params{{"n", opt.n}, {"classify", opt.classify}};
    report::json records = report::json::array();
    report::json summary{{"total", functions.size()}};
    std::string text;

    if (opt.classify) {
        const auto census = classify_all_oracles(opt.n);
        for (const auto& r : census.records) {
            records.push_back(report::oracle_record_json(r));
            text += r.function.to_string() + " " + to_string(r.promise) + " " +
                    to_string(r.factorization.status) + '\n';
        }
        summary["product"] = census.product;
        summary["entangling"] = census.entangling;
        summary["consistent"] = census.all_consistent();
    } else {
        int constant = 0;
        for (const auto& f : functions) {
            const auto c = classify_function(f);
            constant += c == PromiseClass::Constant;
            records.push_back({{"truth_table", f.to_string()}, {"class", to_string(c)}});
            text += f.to_string() + " " + to_string(c) + '\n';
        }
        summary["constant"] = constant;
        summary["balanced"] = static_cast<int>(functions.size()) - constant;
    }

    if (opt.json) {
        out << report::envelope("enumerate", std::move(params), std::move(records), summary).dump(2) << '\n';
        return kOk;
    }
    out << "n: " << opt.n << '\n' << text << "summary:";
    for (const auto& [key, value] : summary.items()) {
        out << ' ' << key << '=' << value.dump();
    }
    out << '\n';
    return kOk;
}

inline int cmd_optics(const Options& opt, std::ostream& out, std::ostream& err) {
    const auto f = BooleanFunction::parse(opt.table);
    optics::OpticalCircuit circuit;
    try {
        circuit = optics::compile_dj_circuit(f);
    } catch (const optics::NotFactorizable& e) {
        err << "error: not factorizable: " << e.what() << '\n';
        return kNotFactorizable;
    }

    if (opt.json) {
        report::json params{{"table", opt.table}, {"simulate", opt.simulate}};
        report::json records = report::json::array();
        report::json summary{{"beams", circuit.n_beams()}};
        auto cj = report::circuit_json(circuit);
        if (opt.simulate) {
            const auto verdict = optics::simulate_circuit(circuit);
            for (std::size_t k = 0; k < verdict.intensities.size(); ++k) {
                records.push_back({{"beam", k + 1}, {"intensity", report::json_number(verdict.intensities[k])}});
            }
            summary["verdict"] = optics::to_string(verdict.verdict);
        }
        auto env = report::envelope("optics", std::move(params), std::move(records), std::move(summary));
        env["circuit"] = std::move(cj);
        out << env.dump(2) << '\n';
        return kOk;
    }

    out << "truth_table: " << f.to_string() << '\n'
        << "beams: " << circuit.n_beams() << '\n'
        << optics::format_circuit(circuit);
    if (opt.simulate) {
        const auto verdict = optics::simulate_circuit(circuit);
        for (std::size_t k = 0; k < verdict.intensities.size(); ++k) {
            out << "intensity beam " << k + 1 << ": " << report::text_number(verdict.intensities[k]) << '\n';
        }
        out << "verdict: " << optics::to_string(verdict.verdict) << '\n';
    }
    return kOk;
}

inline int cmd_qhq(const Options& opt, std::ostream& out) {
    optics::Jones2 u;
    if (opt.random) {
        std::mt19937_64 rng(opt.seed);
        u = optics::random_special_unitary(rng);
    } else {
        if (opt.matrix.size() != 8) {
            throw std::invalid_argument("qhq expects 8 numbers (re/im of U00 U01 U10 U11), got " +
                                        std::to_string(opt.matrix.size()));
        }
        const auto& m = opt.matrix;
        u << Complex{m[0], m[1]}, Complex{m[2], m[3]}, Complex{m[4], m[5]}, Complex{m[6], m[7]};
    }
    const auto angles = optics::qhq_synthesize(u, kQhqInputTolerance);
    const double error = (optics::qhq_matrix(angles) - u).norm();

    if (opt.json) {
        report::json params{{"random", opt.random}};
        if (opt.random) {
            params["seed"] = opt.seed;
        }
        params["matrix"] = report::matrix_json(u);
        report::json rec{{"qwp1_deg", report::json_number(optics::to_degrees(angles.qwp1))},
                         {"hwp_deg", report::json_number(optics::to_degrees(angles.hwp))},
                         {"qwp2_deg", report::json_number(optics::to_degrees(angles.qwp2))},
                         {"reconstruction_error", report::json_number(error)}};
        report::json summary{{"reconstruction_error", report::json_number(error)},
                             {"pass", error < tol::kUnitary}};
        out << report::envelope("qhq", std::move(params), report::json::array({rec}), std::move(summary)).dump(2)
            << '\n';
        return kOk;
    }
    using report::text_number;
    if (opt.random) {
        out << "seed: " << opt.seed << '\n';
        for (int r = 0; r < 2; ++r) {
            out << "U[" << r << "]: (" << text_number(u(r, 0).real()) << ", " << text_number(u(r, 0).imag())
                << ") (" << text_number(u(r, 1).real()) << ", " << text_number(u(r, 1).imag()) << ")\n";
        }
    }
    char err_buf[32];
    std::snprintf(err_buf, sizeof err_buf, "%.3e", error);
    out << "qwp1_deg: " << optics::format_degrees(angles.qwp1) << '\n'
        << "hwp_deg: " << optics::format_degrees(angles.hwp) << '\n'
        << "qwp2_deg: " << optics::format_degrees(angles.qwp2) << '\n'
        << "reconstruction_error: " << err_buf << '\n';
    return kOk;
}

/// Parses argv and runs one command. Never throws; all failures become an
/// exit code with a message on `err`.
inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Deutsch-Jozsa simulator with entanglement analysis and polarization-optics compilation",
                 "djsim"};
    app.require_subcommand(1);
    Options opt;

    auto* run_cmd = app.add_subcommand("run", "Run the DJ circuit on a truth table");
    run_cmd->add_option("table", opt.table, "Truth table, '0'/'1' string of length 2^n")->required();
    run_cmd->add_flag("--json", opt.json, "Emit a JSON report");

    auto* enum_cmd = app.add_subcommand("enumerate", "List every constant and balanced function on n bits");
    enum_cmd->add_option("n", opt.n, "Number of input bits")->required();
    enum_cmd->add_flag("--classify", opt.classify, "Classify each oracle as product or entangling");
    enum_cmd->add_flag("--json", opt.json, "Emit a JSON report");

    auto* optics_cmd = app.add_subcommand("optics", "Compile the DJ circuit to waveplates");
    optics_cmd->add_option("table", opt.table, "Truth table")->required();
    optics_cmd->add_flag("--simulate", opt.simulate, "Simulate detector intensities");
    optics_cmd->add_flag("--json", opt.json, "Emit a JSON report");

    auto* qhq_cmd = app.add_subcommand("qhq", "Q-H-Q waveplate angles for a 2x2 special-unitary matrix");
    qhq_cmd->add_option("matrix", opt.matrix, "re00 im00 re01 im01 re10 im10 re11 im11")->expected(0, 8);
    qhq_cmd->add_flag("--random", opt.random, "Use a random special-unitary matrix");
    qhq_cmd->add_option("--seed", opt.seed, "Seed for --random")->needs("--random");
    qhq_cmd->add_flag("--json", opt.json, "Emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kBadInput;
    }

    try {
        if (run_cmd->parsed()) {
            return cmd_run(opt, out);
        }
        if (enum_cmd->parsed()) {
            return cmd_enumerate(opt, out);
        }
        if (optics_cmd->parsed()) {
            return cmd_optics(opt, out, err);
        }
        return cmd_qhq(opt, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kBadInput;
    }
}

}  // namespace djsim::cli
