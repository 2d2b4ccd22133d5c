// Copyright 2026 The semiqft Authors
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

#include "cli.h"

#include <fmt/format.h>
#include <fmt/ostream.h>
#include <fmt/ranges.h>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iterator>
#include <random>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "semiqft/circuit.h"
#include "semiqft/circuit_io.h"
#include "semiqft/qft.h"
#include "semiqft/rewrite.h"
#include "semiqft/simulator.h"
#include "semiqft/state_vector.h"

namespace semiqft::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr std::size_t kMaxQubits = kMaxS + 1;
constexpr std::size_t kRandomCompareInputs = 20;
constexpr int kBarWidth = 40;

/// Expected failure with a one-line message; exit status 2.
class DomainError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw DomainError("cannot open '" + path + "' for reading");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw DomainError("cannot open '" + path + "' for writing");
    }
    out << contents;
    if (!out) {
        throw DomainError("failed writing '" + path + "'");
    }
}

Circuit load_circuit(const std::string &path) {
    Circuit circuit;
    try {
        circuit = deserialize(read_file(path));
    } catch (const CircuitFormatError &e) {
        throw DomainError(path + ": " + e.what());
    }
    auto violations = validate(circuit);
    if (!violations.empty()) {
        throw DomainError(path + ": invalid circuit: " + violations.front().message);
    }
    if (circuit.n_qubits > kMaxQubits) {
        throw DomainError(path + ": " + std::to_string(circuit.n_qubits) + " qubits exceeds the simulation limit of " +
                          std::to_string(kMaxQubits));
    }
    return circuit;
}

StateVector parse_amplitudes(const Json &value, const std::string &where) {
    if (!value.is_array()) {
        throw DomainError(where + ": expected an array of [re, im] pairs");
    }
    std::vector<Amplitude> amplitudes;
    for (std::size_t i = 0; i < value.size(); ++i) {
        const Json &pair = value[i];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw DomainError(where + "[" + std::to_string(i) + "]: expected [re, im]");
        }
        amplitudes.emplace_back(pair[0].get<double>(), pair[1].get<double>());
    }
    if (amplitudes.empty() || (amplitudes.size() & (amplitudes.size() - 1)) != 0) {
        throw DomainError(where + ": amplitude count " + std::to_string(amplitudes.size()) + " is not a power of two");
    }
    StateVector state = StateVector::from_amplitudes(std::move(amplitudes));
    double norm = state.norm_squared();
    if (std::abs(norm - 1) > 1e-9) {
        throw DomainError(where + ": amplitudes are not normalized (sum of |amp|^2 = " + fmt::format("{:.12g}", norm) + ")");
    }
    return state;
}

Json parse_json_file(const std::string &path) {
    try {
        return Json::parse(read_file(path));
    } catch (const nlohmann::json::parse_error &e) {
        throw DomainError(path + ": invalid JSON at byte " + std::to_string(e.byte));
    }
}

void check_width(const StateVector &state, const Circuit &circuit, const std::string &what) {
    if (state.n_qubits() != circuit.n_qubits) {
        throw DomainError(what + " has " + std::to_string(state.n_qubits()) + " qubits but the circuit has " +
                          std::to_string(circuit.n_qubits));
    }
}

std::string bar(double fraction) {
    return std::string(static_cast<std::size_t>(std::lround(fraction * kBarWidth)), '#');
}

void print_distribution(std::ostream &out, const OutcomeDistribution &dist, bool json,
                        const std::vector<std::string> &notes = {}) {
    if (json) {
        Json map = Json::object();
        for (std::size_t c = 0; c < dist.size(); ++c) {
            map[std::to_string(c)] = dist[c];
        }
        out << map.dump(2) << "\n";
        return;
    }
    double peak = 0;
    for (double p : dist.probabilities()) {
        peak = std::max(peak, p);
    }
    std::size_t width = std::max<std::size_t>(1, std::to_string(dist.size() - 1).size());
    fmt::print(out, "{:>{}}  probability\n", "c", width);
    for (std::size_t c = 0; c < dist.size(); ++c) {
        std::string line = fmt::format("{:>{}}  {:.12f}  {}", c, width, dist[c], peak > 0 ? bar(dist[c] / peak) : "");
        if (c < notes.size() && !notes[c].empty()) {
            line = fmt::format("{:<{}}  {}", line, width + 18 + kBarWidth, notes[c]);
        }
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    }
}

void print_counts(std::ostream &out, const std::vector<uint64_t> &counts, uint64_t shots, bool json) {
    if (json) {
        Json map = Json::object();
        for (std::size_t c = 0; c < counts.size(); ++c) {
            map[std::to_string(c)] = counts[c];
        }
        out << map.dump(2) << "\n";
        return;
    }
    uint64_t peak = *std::max_element(counts.begin(), counts.end());
    std::size_t width = std::max<std::size_t>(1, std::to_string(counts.size() - 1).size());
    std::size_t count_width = std::max<std::size_t>(5, std::to_string(shots).size());
    fmt::print(out, "{:>{}}  {:>{}}  frequency\n", "c", width, "count", count_width);
    for (std::size_t c = 0; c < counts.size(); ++c) {
        double freq = static_cast<double>(counts[c]) / static_cast<double>(shots);
        std::string line = fmt::format("{:>{}}  {:>{}}  {:.6f}  {}", c, width, counts[c], count_width, freq,
                                       peak > 0 ? bar(static_cast<double>(counts[c]) / static_cast<double>(peak)) : "");
        line.erase(line.find_last_not_of(' ') + 1);
        out << line << "\n";
    }
}

struct LabeledInput {
    std::string label;
    StateVector state;
};

std::vector<LabeledInput> compare_inputs(const std::string &spec, std::size_t n_qubits, uint64_t seed) {
    std::vector<LabeledInput> inputs;
    if (spec.rfind("file:", 0) == 0) {
        std::string path = spec.substr(5);
        Json root = parse_json_file(path);
        if (!root.is_array()) {
            throw DomainError(path + ": expected an array of amplitude lists");
        }
        for (std::size_t i = 0; i < root.size(); ++i) {
            std::string where = path + "[" + std::to_string(i) + "]";
            StateVector state = parse_amplitudes(root[i], where);
            if (state.n_qubits() != n_qubits) {
                throw DomainError(where + ": state has " + std::to_string(state.n_qubits()) + " qubits, circuits have " +
                                  std::to_string(n_qubits));
            }
            inputs.push_back({"file #" + std::to_string(i), std::move(state)});
        }
        return inputs;
    }
    if (spec != "basis" && spec != "random" && spec != "all") {
        throw DomainError("--inputs must be basis, random, all or file:PATH, got '" + spec + "'");
    }
    if (spec == "basis" || spec == "all") {
        for (uint64_t a = 0; a < (uint64_t{1} << n_qubits); ++a) {
            inputs.push_back({"basis |" + std::to_string(a) + ">", StateVector::basis(n_qubits, a)});
        }
    }
    if (spec == "random" || spec == "all") {
        std::mt19937_64 rng(seed);
        for (std::size_t i = 0; i < kRandomCompareInputs; ++i) {
            inputs.push_back({"random #" + std::to_string(i), StateVector::random(n_qubits, rng)});
        }
    }
    return inputs;
}

struct Options {
    // build
    std::string kind;
    unsigned s = 0;
    std::string out_path;
    // simulate
    std::string in_path;
    bool exact = false;
    uint64_t shots = 0;
    uint64_t input_basis = 0;
    std::string input_amps;
    uint64_t seed = 0;
    std::string format = "text";
    // rewrite
    std::string report_path;
    // compare
    std::string a_path;
    std::string b_path;
    std::string inputs = "all";
    double tolerance = 1e-10;
    // demo-period
    uint64_t r = 1;
    uint64_t offset = 0;
};

int do_build(const Options &opt, std::ostream &out) {
    Circuit circuit = opt.kind == "coherent" ? build_coherent_qft(opt.s) : build_semiclassical_qft(opt.s);
    write_file(opt.out_path, serialize(circuit));
    fmt::print(out, "wrote {} circuit (s={}, {} qubits, {} instructions) to {}\n", opt.kind, opt.s, circuit.n_qubits,
               circuit.instructions.size(), opt.out_path);
    return kExitOk;
}

int do_simulate(const Options &opt, bool amps_given, std::ostream &out) {
    Circuit circuit = load_circuit(opt.in_path);
    StateVector input(circuit.n_qubits);
    if (amps_given) {
        input = parse_amplitudes(parse_json_file(opt.input_amps), opt.input_amps);
        check_width(input, circuit, opt.input_amps);
    } else {
        if (opt.input_basis >= (uint64_t{1} << circuit.n_qubits)) {
            throw DomainError("--input-basis " + std::to_string(opt.input_basis) + " out of range for " +
                              std::to_string(circuit.n_qubits) + " qubits");
        }
        input = StateVector::basis(circuit.n_qubits, opt.input_basis);
    }
    const bool json = opt.format == "json";

    if (opt.exact) {
        print_distribution(out, run_exact(circuit, input), json);
        return kExitOk;
    }
    std::vector<uint64_t> counts(std::size_t{1} << circuit.n_cbits, 0);
    std::mt19937_64 seeds(opt.seed);
    for (uint64_t shot = 0; shot < opt.shots; ++shot) {
        ++counts[run_trajectory(circuit, input, seeds()).readout_value()];
    }
    print_counts(out, counts, opt.shots, json);
    return kExitOk;
}

int do_rewrite(const Options &opt, std::ostream &out) {
    Circuit circuit = load_circuit(opt.in_path);
    DetectionResult detection = detect_terminal_qft(circuit);
    if (!detection) {
        throw DomainError(opt.in_path + ": no terminal QFT to rewrite: " + detection.diagnostic);
    }
    RewriteResult result = rewrite_semiclassical(circuit);
    write_file(opt.out_path, serialize(result.circuit));

    const QftMatch &match = *detection.match;
    if (!opt.report_path.empty()) {
        Json report{{"matched", result.report.matched},
                    {"two_bit_gates_removed", result.report.two_bit_gates_removed},
                    {"classically_controlled_gates_added", result.report.classically_controlled_gates_added},
                    {"measurements", result.report.measurements},
                    {"span", {match.span_begin, match.span_end}},
                    {"wires", match.wires},
                    {"readout_cbits", match.readout_cbits}};
        write_file(opt.report_path, report.dump(2) + "\n");
    }
    fmt::print(out, "terminal QFT on {} wires (qubits {}), instructions {}..{}\n", match.wires.size(),
               fmt::join(match.wires, " "), match.span_begin, match.span_end - 1);
    fmt::print(out, "  {:<36}{:>6}\n", "two-bit gates removed", result.report.two_bit_gates_removed);
    fmt::print(out, "  {:<36}{:>6}\n", "classically controlled gates added", result.report.classically_controlled_gates_added);
    fmt::print(out, "  {:<36}{:>6}\n", "measurements", result.report.measurements);
    fmt::print(out, "wrote {} instructions to {}\n", result.circuit.instructions.size(), opt.out_path);
    return kExitOk;
}

int do_compare(const Options &opt, std::ostream &out) {
    Circuit a = load_circuit(opt.a_path);
    Circuit b = load_circuit(opt.b_path);
    if (a.n_qubits != b.n_qubits || a.n_cbits != b.n_cbits) {
        throw DomainError(fmt::format("circuits have different registers: {} qubits / {} cbits vs {} qubits / {} cbits",
                                      a.n_qubits, a.n_cbits, b.n_qubits, b.n_cbits));
    }
    std::vector<LabeledInput> labeled = compare_inputs(opt.inputs, a.n_qubits, opt.seed);
    std::vector<StateVector> states;
    for (const auto &input : labeled) {
        states.push_back(input.state);
    }
    EquivalenceReport report = equivalence_report(a, b, states);
    const bool equivalent = report.max_tv_distance <= opt.tolerance;
    const std::string worst = labeled.empty() ? "none" : labeled[report.worst_input].label;

    if (opt.format == "json") {
        Json rows = Json::array();
        for (std::size_t i = 0; i < labeled.size(); ++i) {
            rows.push_back(Json{{"input", labeled[i].label}, {"tv_distance", report.distances[i]}});
        }
        Json root{{"inputs", std::move(rows)},
                  {"max_tv_distance", report.max_tv_distance},
                  {"worst_input", worst},
                  {"tolerance", opt.tolerance},
                  {"equivalent", equivalent}};
        out << root.dump(2) << "\n";
        return kExitOk;
    }
    std::size_t width = std::string("input").size();
    for (const auto &input : labeled) {
        width = std::max(width, input.label.size());
    }
    fmt::print(out, "{:<{}}  {}\n", "input", width, "tv_distance");
    for (std::size_t i = 0; i < labeled.size(); ++i) {
        fmt::print(out, "{:<{}}  {:.3e}\n", labeled[i].label, width, report.distances[i]);
    }
    fmt::print(out, "max tv_distance {:.3e} (worst input: {})\n", report.max_tv_distance, worst);
    fmt::print(out, "verdict: {} (tolerance {:.1e})\n", equivalent ? "equivalent" : "NOT equivalent", opt.tolerance);
    return kExitOk;
}

int do_demo_period(const Options &opt, std::ostream &out) {
    QftLayout layout(opt.s);
    if (opt.r == 0 || opt.r > layout.q()) {
        throw DomainError(fmt::format("--r must lie in [1, q = {}]", layout.q()));
    }
    if (opt.offset >= opt.r) {
        throw DomainError(fmt::format("--offset must be below --r = {}", opt.r));
    }
    StateVector input = periodic_state(opt.s, opt.r, opt.offset);
    OutcomeDistribution dist = run_exact(build_semiclassical_qft(opt.s), input);

    const uint64_t q = layout.q();
    std::vector<std::string> notes(dist.size());
    if (q % opt.r == 0) {
        for (uint64_t k = 0; k < opt.r; ++k) {
            notes[k * (q / opt.r)] = fmt::format("<- peak {}*q/r", k);
        }
    } else {
        for (uint64_t k = 0; k < opt.r; ++k) {
            auto c = static_cast<uint64_t>(std::llround(static_cast<double>(k * q) / static_cast<double>(opt.r))) % q;
            notes[c] = fmt::format("<- near {}*q/r = {:.3f}", k, static_cast<double>(k * q) / static_cast<double>(opt.r));
        }
    }
    if (opt.format == "json") {
        print_distribution(out, dist, true);
        return kExitOk;
    }
    fmt::print(out, "period r={} offset={} on q={} (s={}), semiclassical transform, exact\n", opt.r, opt.offset, q, opt.s);
    if (q % opt.r == 0) {
        fmt::print(out, "r divides q: all probability lies on multiples of q/r = {}\n", q / opt.r);
    } else {
        fmt::print(out, "r does not divide q: peaks spread around multiples of q/r = {:.3f}\n",
                   static_cast<double>(q) / static_cast<double>(opt.r));
    }
    print_distribution(out, dist, false, notes);
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Build, simulate, rewrite and compare semiclassical quantum Fourier transform circuits.", "semiqft"};
    app.require_subcommand(1);
    Options opt;
    const auto format_check = CLI::IsMember({"text", "json"});

    auto *build = app.add_subcommand("build", "Write a QFT circuit file");
    build->add_option("--kind", opt.kind, "coherent or semiclassical")
        ->required()
        ->check(CLI::IsMember({"coherent", "semiclassical"}));
    build->add_option("--s", opt.s, "Number width is s+1 bits")->required()->check(CLI::Range(0u, kMaxS));
    build->add_option("--out", opt.out_path, "Output circuit file")->required();

    auto *simulate = app.add_subcommand("simulate", "Run a circuit exactly or by sampling");
    simulate->add_option("--in", opt.in_path, "Circuit file")->required();
    auto *exact_flag = simulate->add_flag("--exact", opt.exact, "Exact distribution by branch enumeration");
    auto *shots_opt = simulate->add_option("--shots", opt.shots, "Number of sampled trajectories")
                          ->check(CLI::Range(uint64_t{1}, uint64_t{100000000}));
    exact_flag->excludes(shots_opt);
    auto *basis_opt = simulate->add_option("--input-basis", opt.input_basis, "Basis-state input |a> (default 0)");
    auto *amps_opt = simulate->add_option("--input-amps", opt.input_amps, "JSON file of [re, im] amplitude pairs");
    basis_opt->excludes(amps_opt);
    simulate->add_option("--seed", opt.seed, "Seed for sampling (default 0)");
    simulate->add_option("--format", opt.format, "text or json")->check(format_check);

    auto *rewrite = app.add_subcommand("rewrite", "Replace a terminal QFT with its semiclassical form");
    rewrite->add_option("--in", opt.in_path, "Circuit file")->required();
    rewrite->add_option("--out", opt.out_path, "Rewritten circuit file")->required();
    rewrite->add_option("--report", opt.report_path, "Write the rewrite report as JSON");

    auto *compare = app.add_subcommand("compare", "Total-variation distance between two circuits' readouts");
    compare->add_option("--a", opt.a_path, "First circuit file")->required();
    compare->add_option("--b", opt.b_path, "Second circuit file")->required();
    compare->add_option("--inputs", opt.inputs, "basis, random, all (default) or file:PATH");
    compare->add_option("--seed", opt.seed, "Seed for random inputs (default 0)");
    compare->add_option("--tolerance", opt.tolerance, "Equivalence threshold (default 1e-10)")
        ->check(CLI::NonNegativeNumber);
    compare->add_option("--format", opt.format, "text or json")->check(format_check);

    auto *demo = app.add_subcommand("demo-period", "Readout distribution of a periodic state");
    demo->add_option("--s", opt.s, "Number width is s+1 bits")->required()->check(CLI::Range(0u, kMaxS));
    demo->add_option("--r", opt.r, "Period")->required();
    demo->add_option("--offset", opt.offset, "Offset below the period (default 0)");
    demo->add_option("--format", opt.format, "text or json")->check(format_check);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (build->parsed()) {
            return do_build(opt, out);
        }
        if (simulate->parsed()) {
            if (!opt.exact && shots_opt->count() == 0) {
                err << "error: simulate needs --exact or --shots N; run with --help for usage\n";
                return kExitUsage;
            }
            return do_simulate(opt, amps_opt->count() > 0, out);
        }
        if (rewrite->parsed()) {
            return do_rewrite(opt, out);
        }
        if (compare->parsed()) {
            return do_compare(opt, out);
        }
        return do_demo_period(opt, out);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
    }
    return kExitDomain;
}

}  // namespace semiqft::cli
