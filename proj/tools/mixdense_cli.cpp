// Copyright 2026 The mixdense Authors
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

// mixdense: signatures | simulate | verify
//
// Exit codes: 0 success, 1 invalid configuration, 2 invariant failure,
// 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "mixdense/capacity.hpp"
#include "mixdense/errors.hpp"
#include "mixdense/protocol.hpp"
#include "mixdense/report.hpp"
#include "mixdense/session.hpp"
#include "mixdense/verify.hpp"

namespace {

using namespace mixdense;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitInvariant = 2;
constexpr int kExitIo = 3;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw IoError("cannot open '" + path + "' for writing");
    }
    out << contents;
    out.close();
    if (!out) {
        throw IoError("failed writing '" + path + "'");
    }
}

std::string join_patterns(const std::set<protocol::DetectionPattern>& patterns) {
    std::string s;
    for (const auto& p : patterns) {
        if (!s.empty()) s += " | ";
        s += "{" + p.to_string() + "}";
    }
    return s;
}

json distribution_json(const protocol::PatternDistribution& d) {
    json j = json::object();
    for (const auto& [pattern, p] : d) j[pattern.to_string()] = p;
    return j;
}

std::string distribution_text(const protocol::PatternDistribution& d) {
    std::ostringstream s;
    s << std::setprecision(6);
    for (const auto& [pattern, p] : d) s << "    {" << pattern.to_string() << "}  " << p << '\n';
    return s.str();
}

PureState named_state(const std::string& name) {
    const auto& reg = protocol::protocol_registry();
    if (name == "PhiPlus") return protocol::reference_state(reg, protocol::ReferenceState::PhiPlus);
    if (name == "PhiMinus") return protocol::reference_state(reg, protocol::ReferenceState::PhiMinus);
    if (name == "PsiPlus") return protocol::mixed_basis_state(reg, protocol::Symbol::Chi1);
    if (name == "PsiMinus") return protocol::mixed_basis_state(reg, protocol::Symbol::Chi2);
    return protocol::mixed_basis_state(reg, protocol::parse_symbol(name));
}

int cmd_signatures(const std::optional<std::string>& state, const std::string& format,
                   const std::optional<std::string>& out_path) {
    std::ostringstream text;
    json j;
    if (state) {
        const auto dist = protocol::analyze(named_state(*state));
        j = json{{"state", *state}, {"distribution", distribution_json(dist)}};
        text << *state << " analyzer distribution:\n" << distribution_text(dist);
    } else {
        const auto& reg = protocol::protocol_registry();
        const auto& table = protocol::signature_table();
        const auto phi_plus = protocol::analyze(protocol::reference_state(reg, protocol::ReferenceState::PhiPlus));
        const auto phi_minus = protocol::analyze(protocol::reference_state(reg, protocol::ReferenceState::PhiMinus));
        const double tvd = capacity::total_variation_distance(phi_plus, phi_minus);

        json rows = json::object();
        text << "signature table (analyzer support per message):\n";
        for (const auto& [symbol, patterns] : table) {
            json list = json::array();
            for (const auto& p : patterns) list.push_back(p.to_string());
            rows[protocol::to_string(symbol)] = list;
            text << "  " << protocol::to_string(symbol) << "  " << join_patterns(patterns) << '\n';
        }
        text << "PhiPlus:\n" << distribution_text(phi_plus) << "PhiMinus:\n" << distribution_text(phi_minus);
        text << "TVD(PhiPlus, PhiMinus) = " << tvd << '\n';
        j = json{{"signatures", rows},
                 {"PhiPlus", distribution_json(phi_plus)},
                 {"PhiMinus", distribution_json(phi_minus)},
                 {"phi_tvd", tvd}};
    }
    const std::string rendered = format == "json" ? report::dump(j) : text.str();
    if (out_path) {
        write_file(*out_path, rendered);
    } else {
        std::cout << rendered;
    }
    return kExitOk;
}

struct SimulateArgs {
    std::string scenario;
    std::optional<std::string> owner;
    std::string messages = "uniform";
    std::int64_t n = 0;
    std::uint64_t seed = 1;
    std::string clone_policy = "send-as-is";
    int delay = 0;
    bool erase = false;
    std::optional<std::string> out;
    std::optional<std::string> log;
    std::string format = "text";
};

session::MessageSource parse_messages(const std::string& spec, capacity::AlphabetDistribution& alphabet) {
    if (spec == "uniform") {
        alphabet = capacity::kUniformAlphabet;
        return session::IidSource{};
    }
    session::FixedSequence seq;
    std::stringstream ss(spec);
    std::string item;
    while (std::getline(ss, item, ',')) {
        seq.symbols.push_back(protocol::parse_symbol(item));
    }
    if (seq.symbols.empty()) {
        throw ConfigError("--messages needs 'uniform' or a comma-separated symbol list");
    }
    alphabet = {};
    for (auto s : seq.symbols) alphabet[protocol::index_of(s)] += 1.0 / static_cast<double>(seq.symbols.size());
    return seq;
}

int cmd_simulate(const SimulateArgs& args) {
    session::ScenarioConfig config;
    config.scenario = parse_scenario(args.scenario);
    config.owner = args.owner ? parse_owner(*args.owner) : default_owner(config.scenario);
    config.clone_policy = parse_clone_policy(args.clone_policy);
    config.classical_delay = args.delay;
    config.erase_notes = args.erase;
    config.validate();
    if (args.n < 1) {
        throw ConfigError("--n must be >= 1");
    }
    capacity::AlphabetDistribution alphabet{};
    const auto source = parse_messages(args.messages, alphabet);

    const auto result = session::run_session(config, source, args.n, args.seed);
    const report::SessionMeta meta{config, args.messages, args.n, args.seed};
    const json j = report::session_report(meta, result, alphabet);

    if (args.out) write_file(*args.out, report::dump(j));
    if (args.log) write_file(*args.log, report::event_log_csv(result.records));

    if (args.format == "json") {
        std::cout << report::dump(j);
    } else {
        const auto& r = result.report;
        std::cout << std::setprecision(6) << "scenario " << to_string(config.scenario) << " (owner "
                  << to_string(config.owner) << "), " << args.n << " messages, seed " << args.seed << '\n'
                  << "  pairs consumed       " << r.pairs_consumed << '\n'
                  << "  messages delivered   " << r.messages_delivered << '\n'
                  << "  efficiency           " << r.efficiency << "  (analytic "
                  << j["analytic"]["efficiency"].get<double>() << ")\n"
                  << "  bits per pair        " << r.bits_per_pair << "  (rounded reference "
                  << r.bits_per_pair_rounded << ")\n"
                  << "  uncontrolled share   " << r.uncontrolled_fraction << '\n'
                  << "  bob sequence ok      "
                  << (j["session"]["bob_sequence_matches_intended"].get<bool>() ? "yes" : "no") << '\n';
    }
    return kExitOk;
}

int cmd_verify(std::uint64_t seed, std::int64_t samples, bool inject, const std::string& format) {
    verify::VerifyOptions opts;
    opts.seed = seed;
    opts.branch_samples = samples;
    opts.inject_nonunitary = inject;
    const auto results = verify::run_verification(opts);
    const bool ok = verify::all_passed(results);
    if (format == "json") {
        json checks = json::array();
        for (const auto& r : results) checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        std::cout << report::dump(json{{"checks", checks}, {"passed", ok}});
    } else {
        for (const auto& r : results) {
            std::cout << (r.passed ? "PASS  " : "FAIL  ") << std::left << std::setw(26) << r.name << r.detail << '\n';
        }
        std::cout << (ok ? "all checks passed\n" : "verification FAILED\n");
    }
    return ok ? kExitOk : kExitInvariant;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Linear-optics superdense coding simulator (mixed basis)"};
    app.require_subcommand(1);

    std::string format = "text";
    const auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json"}));
    };

    auto* sig = app.add_subcommand("signatures", "Print the analyzer signature table and the Phi+/- check");
    std::optional<std::string> sig_state;
    std::optional<std::string> sig_out;
    sig->add_option("--state", sig_state, "Show one state's distribution: chi1..chi4, PsiPlus, PsiMinus, PhiPlus, PhiMinus");
    sig->add_option("--out", sig_out, "Write output to a file instead of stdout");
    add_format(sig);

    auto* sim = app.add_subcommand("simulate", "Run one protocol session and write the report and event log");
    SimulateArgs sargs;
    sim->add_option("--scenario", sargs.scenario, "Scenario: a, b or c")->required();
    sim->add_option("--owner", sargs.owner, "Pair owner: bob, anna or alice (default depends on scenario)");
    sim->add_option("--messages", sargs.messages, "'uniform' or a comma-separated list such as chi1,chi3");
    sim->add_option("--n", sargs.n, "Number of intended messages")->required();
    sim->add_option("--seed", sargs.seed, "Master seed");
    sim->add_option("--clone-policy", sargs.clone_policy, "Scenario b: clone-intended or send-as-is");
    sim->add_option("--delay", sargs.delay, "Classical-channel delay in trials");
    sim->add_flag("--erase", sargs.erase, "Scenario c: send delayed erase notes for stopped pairs");
    sim->add_option("--out", sargs.out, "Capacity report (JSON) path");
    sim->add_option("--log", sargs.log, "Event log (CSV) path");
    add_format(sim);

    auto* ver = app.add_subcommand("verify", "Run the invariant self-check suite");
    std::uint64_t vseed = 1;
    std::int64_t vsamples = 100000;
    bool inject = false;
    ver->add_option("--seed", vseed, "Seed for the sampled checks");
    ver->add_option("--samples", vsamples, "Samples for the branch-statistics check");
    ver->add_flag("--inject-nonunitary", inject, "Negative control: add a non-unitary element")->group("");
    add_format(ver);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitConfig;
    }

    try {
        if (*sig) return cmd_signatures(sig_state, format, sig_out);
        if (*sim) {
            sargs.format = format;
            return cmd_simulate(sargs);
        }
        if (*ver) return cmd_verify(vseed, vsamples, inject, format);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitConfig;
    } catch (const InternalConsistencyError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInvariant;
    }
    return kExitConfig;
}
