// dimwit: dimension witnesses for prepare-and-measure experiments with
// independent devices.
//
// Exit codes: 0 success, 1 negative finding (no decomposition), 2 input
// error, 3 shape mismatch, 4 brute force infeasible, 5 partial curve.

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dimwit/analysis.hpp"
#include "dimwit/constructions.hpp"
#include "dimwit/json_io.hpp"
#include "dimwit/optimize.hpp"
#include "dimwit/witness.hpp"

namespace {

using namespace dimwit;

enum ExitCode : int {
    kOk = 0,
    kNotFound = 1,
    kInputError = 2,
    kShapeError = 3,
    kInfeasible = 4,
    kPartial = 5,
};

std::string fmt12(double v) {
    if (std::isnan(v)) return "nan";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

Json read_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const Json::exception& e) {
        throw std::invalid_argument(path + ": " + e.what());
    }
}

void print_json(const Json& j) { std::cout << j.dump(2) << '\n'; }

double parse_number(const std::string& text) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("not a number: '" + text + "'");
    }
    if (used != text.size() || !std::isfinite(v)) throw std::invalid_argument("not a number: '" + text + "'");
    return v;
}

// "start:stop:count" (inclusive, linear), "a,b,c", or a single value.
std::vector<double> parse_grid(const std::string& spec) {
    std::vector<std::string> parts;
    const char sep = spec.find(':') != std::string::npos ? ':' : ',';
    std::stringstream ss(spec);
    for (std::string item; std::getline(ss, item, sep);) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty grid");

    std::vector<double> grid;
    if (sep == ':') {
        if (parts.size() != 3) throw std::invalid_argument("grid spec must be start:stop:count");
        const double start = parse_number(parts[0]);
        const double stop = parse_number(parts[1]);
        const double count = parse_number(parts[2]);
        if (count < 1 || count != std::floor(count)) throw std::invalid_argument("grid count must be a positive integer");
        const int n = static_cast<int>(count);
        for (int i = 0; i < n; ++i) grid.push_back(n == 1 ? start : start + (stop - start) * i / (n - 1));
    } else {
        for (const auto& p : parts) grid.push_back(parse_number(p));
    }
    return grid;
}

int cmd_witness(const std::string& input, int k, bool relabelings) {
    const Behavior b = behavior_from_json(read_json(input));
    if (relabelings && k != 2) throw std::invalid_argument("--relabelings is only defined for k = 2");
    print_json(to_json(relabelings ? witness_relabeling_scan(b) : witness_value(b, k)));
    return kOk;
}

struct OptimizeArgs {
    std::string kind = "quantum";
    int d = 2;
    int k = 2;
    int restarts = 50;
    int max_iterations = 500;
    std::uint64_t seed = 0;
    bool brute_force = false;
};

int cmd_optimize(const OptimizeArgs& args, int threads) {
    OptimizerConfig cfg;
    cfg.restarts = args.restarts;
    cfg.max_iterations = args.max_iterations;
    cfg.seed = args.seed;
    cfg.threads = threads;

    OptimizationResult result;
    if (args.kind == "quantum") {
        if (args.brute_force) throw std::invalid_argument("--brute-force applies to --kind classical only");
        result = maximize_witness_quantum(args.d, args.k, cfg);
    } else if (args.brute_force) {
        result = maximize_witness_classical_bruteforce(args.d, args.k, cfg);
    } else {
        result = maximize_witness_classical_seesaw(args.d, args.k, cfg);
    }
    Json j = to_json(result);
    j["d"] = args.d;
    j["k"] = args.k;
    j["method"] = args.brute_force ? "brute-force" : "see-saw";
    print_json(j);
    return kOk;
}

int cmd_noise_scan(const std::string& input, const std::string& eta_spec, const std::string& pn_spec) {
    const Behavior b = behavior_from_json(read_json(input));
    const int k = b.num_measurements();
    const auto etas = parse_grid(eta_spec);
    for (double eta : etas) {
        if (!(eta >= 0.0 && eta <= 1.0)) throw std::invalid_argument("eta values must lie in [0, 1]");
    }
    std::vector<double> noise = pn_spec.empty() ? std::vector<double>(static_cast<std::size_t>(k), 0.5) : parse_grid(pn_spec);
    if (static_cast<int>(noise.size()) != k) throw std::invalid_argument("--pn needs one value per measurement");

    const double clean = witness_value(b, k).value;
    std::cout << "eta,witness,ratio\n";
    for (double eta : etas) {
        const double w = witness_value(apply_noise(b, eta, noise), k).value;
        const double expected = std::pow(eta, k) * clean;
        const double ratio = expected > 0.0 ? w / expected : std::nan("");
        std::cout << fmt12(eta) << ',' << fmt12(w) << ',' << fmt12(ratio) << '\n';
    }
    return kOk;
}

void write_curve(std::ostream& out, const std::vector<RandomnessPoint>& points) {
    out << "Q,p_bar,h_min_bits\n";
    for (const auto& p : points) out << fmt12(p.q) << ',' << fmt12(p.p_bar) << ',' << fmt12(p.h_min) << '\n';
}

int cmd_randomness_curve(const std::string& grid_spec, int restarts, int max_iterations, std::uint64_t seed,
                         const std::string& out_path, int threads) {
    const auto grid = parse_grid(grid_spec);
    for (double q : grid) {
        if (!(q > 0.0 && q <= 1.0)) throw std::invalid_argument("Q values must lie in (0, 1]");
    }
    OptimizerConfig cfg;
    cfg.restarts = restarts;
    cfg.max_iterations = max_iterations;
    cfg.seed = seed;
    cfg.threads = threads;
    const auto curve = randomness_curve(grid, cfg);

    if (out_path.empty()) {
        write_curve(std::cout, curve.points);
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        write_curve(out, curve.points);
        std::filesystem::path raw_path(out_path);
        raw_path.replace_extension(".raw.csv");
        std::ofstream raw(raw_path);
        if (!raw) throw std::invalid_argument("cannot write " + raw_path.string());
        write_curve(raw, curve.raw);
    }
    if (!curve.complete()) {
        for (auto i : curve.failed) {
            std::cerr << "warning: Q = " << fmt12(grid[i]) << " did not meet the constraint residual; point omitted\n";
        }
        return kPartial;
    }
    return kOk;
}

struct ConstructArgs {
    std::string name;
    double theta = 0.0;
    int k = 2;
    int d = 2;
    std::string emit = "strategy";
};

int cmd_construct(const ConstructArgs& args) {
    const bool behavior = args.emit == "behavior";
    const auto emit_quantum = [&](const QuantumStrategy& q) {
        print_json(behavior ? to_json(behavior_from_quantum(q)) : to_json(q));
    };
    const auto emit_classical = [&](const ClassicalStrategy& c) {
        print_json(behavior ? to_json(behavior_from_classical(c)) : to_json(c));
    };

    if (args.name == "bb84") {
        emit_quantum(bb84_strategy(args.theta));
    } else if (args.name == "classical-identity") {
        emit_classical(classical_identity_strategy(args.k));
    } else if (args.name == "correlated-mixture") {
        // Only exists as a behavior: the devices share randomness.
        print_json(to_json(correlated_mixture_behavior()));
    } else if (args.name == "mub") {
        emit_quantum(mub_strategy(args.d, args.k));
    } else if (args.name == "gellmann-parallel") {
        emit_quantum(parallel_gellmann_strategy(args.d, args.k));
    } else if (args.name == "hadamard-classical") {
        emit_classical(classical_hadamard_strategy());
    } else {
        throw std::invalid_argument("unknown construction '" + args.name + "'");
    }
    return kOk;
}

int cmd_decompose(const std::string& input, double tol) {
    if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
    const auto result = find_bit_decomposition(behavior_from_json(read_json(input)), tol);
    print_json(to_json(result));
    return result.found ? kOk : kNotFound;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dimension witnesses for prepare-and-measure experiments with independent devices"};
    app.require_subcommand(1);
    int threads = 0;
    app.add_option("--threads", threads, "Worker threads for restarts (0: all available)")->check(CLI::NonNegativeNumber);

    std::function<int()> action;

    std::string input;
    int k = 2;
    bool relabelings = false;
    auto* witness = app.add_subcommand("witness", "Evaluate W_k = |det W_k| on a behavior file");
    witness->add_option("input", input, "Behavior JSON")->required();
    witness->add_option("--k", k, "Witness order");
    witness->add_flag("--relabelings", relabelings, "Maximize over preparation pairings (k = 2)");
    witness->callback([&] { action = [&] { return cmd_witness(input, k, relabelings); }; });

    OptimizeArgs opt;
    auto* optimize = app.add_subcommand("optimize", "Maximize W_k over d-dimensional strategies");
    optimize->add_option("--kind", opt.kind)->check(CLI::IsMember({"quantum", "classical"}));
    optimize->add_option("--d", opt.d, "Dimension")->required();
    optimize->add_option("--k", opt.k, "Witness order")->required();
    optimize->add_option("--restarts", opt.restarts);
    optimize->add_option("--max-iterations", opt.max_iterations);
    optimize->add_option("--seed", opt.seed);
    optimize->add_flag("--brute-force", opt.brute_force, "Exhaustive search over deterministic classical strategies");
    optimize->callback([&] { action = [&] { return cmd_optimize(opt, threads); }; });

    std::string eta_grid = "1:0:11";
    std::string pn;
    auto* noise = app.add_subcommand("noise-scan", "Witness under preparation-independent noise");
    noise->add_option("input", input, "Behavior JSON")->required();
    noise->add_option("--eta-grid", eta_grid, "start:stop:count or comma list");
    noise->add_option("--pn", pn, "Noise probabilities p_N(y), comma list (default 0.5 each)");
    noise->callback([&] { action = [&] { return cmd_noise_scan(input, eta_grid, pn); }; });

    std::string q_grid;
    int curve_restarts = 100;
    int curve_iterations = 3000;
    std::uint64_t curve_seed = 0;
    std::string out_path;
    auto* curve = app.add_subcommand("randomness-curve", "Certifiable min-entropy as a function of W_2 = Q");
    curve->add_option("--q-grid", q_grid, "start:stop:count, comma list, or a single Q")->required();
    curve->add_option("--restarts", curve_restarts);
    curve->add_option("--max-iterations", curve_iterations);
    curve->add_option("--seed", curve_seed);
    curve->add_option("--out", out_path, "CSV path; raw values go to the .raw.csv sibling");
    curve->callback([&] {
        action = [&] { return cmd_randomness_curve(q_grid, curve_restarts, curve_iterations, curve_seed, out_path, threads); };
    });

    ConstructArgs cons;
    auto* construct = app.add_subcommand("construct", "Emit a named strategy or behavior");
    construct->add_option("--name", cons.name)->required();
    construct->add_option("--theta", cons.theta);
    construct->add_option("--k", cons.k);
    construct->add_option("--d", cons.d);
    construct->add_option("--emit", cons.emit)->check(CLI::IsMember({"strategy", "behavior"}));
    construct->callback([&] { action = [&] { return cmd_construct(cons); }; });

    double tol = kDecompositionTol;
    auto* decompose = app.add_subcommand("decompose", "Search for an independent-device classical bit model");
    decompose->add_option("input", input, "Behavior JSON")->required();
    decompose->add_option("--tol", tol);
    decompose->callback([&] { action = [&] { return cmd_decompose(input, tol); }; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }

    try {
        return action();
    } catch (const ShapeError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kShapeError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInfeasible;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
}
