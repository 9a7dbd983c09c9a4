#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "opmetric/checks.hpp"
#include "opmetric/convexity.hpp"
#include "opmetric/dynamics.hpp"
#include "opmetric/io.hpp"

namespace {

using namespace opmetric;

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNumericalError = 2;
constexpr int kExitNoConvergence = 3;

std::string json_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out;
}

std::vector<ClosedOperator> read_operators(const std::vector<std::string>& paths) {
    std::vector<ClosedOperator> ops;
    ops.reserve(paths.size());
    for (const std::string& p : paths) {
        ops.push_back(read_operator_file(p));
    }
    return ops;
}

IsometryGroup read_group(const std::vector<std::string>& paths) {
    std::vector<HBiholomorphicMap> gens;
    gens.reserve(paths.size());
    for (const std::string& p : paths) {
        gens.emplace_back(read_generator_file(p));
    }
    return IsometryGroup(std::move(gens));
}

struct DistArgs {
    std::string a;
    std::string b;
};

struct PairOutputArgs {
    std::string a;
    std::string b;
    std::string output;
    double frac = 0.5;
};

struct ManyOutputArgs {
    std::vector<std::string> inputs;
    std::string output;
    double tol = 1e-7;
    int max_iter = 500;
};

struct FixedPointArgs {
    std::vector<std::string> generators;
    std::string start;
    std::string output;
    double tol = 1e-8;
    int max_iter = 200;
};

struct OrbitArgs {
    std::vector<std::string> generators;
    std::string start;
    int depth = 6;
    double growth_tol = 0.0; // 0 means the scale-aware default
};

struct CheckArgs {
    std::string suite = "all";
    int samples = 50;
    std::uint64_t seed = 0;
};

int run_dist(const DistArgs& args) {
    const ClosedOperator a = read_operator_file(args.a);
    const ClosedOperator b = read_operator_file(args.b);
    std::cout << "{\n  \"command\": \"dist\",\n  \"value\": "
              << format_double(distance(a, b)) << "\n}\n";
    return kExitOk;
}

int run_midpoint(const PairOutputArgs& args) {
    const ClosedOperator a = read_operator_file(args.a);
    const ClosedOperator b = read_operator_file(args.b);
    const ClosedOperator q = midpoint(a, b);
    write_operator_file(args.output, q);
    std::cout << "{\n  \"command\": \"midpoint\",\n  \"output\": \""
              << json_escape(args.output) << "\",\n  \"distance\": "
              << format_double(distance(a, b)) << ",\n  \"value\": "
              << format_double(distance(a, q)) << "\n}\n";
    return kExitOk;
}

int run_geodesic(const PairOutputArgs& args) {
    const ClosedOperator a = read_operator_file(args.a);
    const ClosedOperator b = read_operator_file(args.b);
    const ClosedOperator q = geodesic_point(a, b, args.frac);
    write_operator_file(args.output, q);
    std::cout << "{\n  \"command\": \"geodesic\",\n  \"output\": \""
              << json_escape(args.output) << "\",\n  \"t\": " << format_double(args.frac)
              << ",\n  \"distance\": " << format_double(distance(a, b))
              << ",\n  \"value\": " << format_double(distance(a, q)) << "\n}\n";
    return kExitOk;
}

int run_barycenter(const ManyOutputArgs& args) {
    const std::vector<ClosedOperator> pts = read_operators(args.inputs);
    const ClosedOperator q = barycenter(pts);
    write_operator_file(args.output, q);
    std::cout << "{\n  \"command\": \"barycenter\",\n  \"output\": \""
              << json_escape(args.output) << "\",\n  \"points\": " << pts.size()
              << ",\n  \"value\": "
              << format_double(radius_at(q, FiniteConfiguration(pts))) << "\n}\n";
    return kExitOk;
}

int run_center(const ManyOutputArgs& args) {
    const std::vector<ClosedOperator> pts = read_operators(args.inputs);
    const FiniteConfiguration config(pts);
    const ChebyshevResult result = chebyshev_center(config, args.tol, args.max_iter);
    write_operator_file(args.output, result.center);
    std::cout << "{\n  \"command\": \"center\",\n  \"output\": \""
              << json_escape(args.output) << "\",\n  \"points\": " << pts.size()
              << ",\n  \"iterations\": " << result.iterations << ",\n  \"converged\": "
              << (result.converged ? "true" : "false") << ",\n  \"value\": "
              << format_double(result.radius) << "\n}\n";
    return result.converged ? kExitOk : kExitNoConvergence;
}

int run_fixed_point(const FixedPointArgs& args) {
    const IsometryGroup group = read_group(args.generators);
    const ClosedOperator start = read_operator_file(args.start);
    const FixedPointResult result = find_fixed_point(group, start, args.tol, args.max_iter);
    write_operator_file(args.output, result.point);
    std::cout << "{\n  \"command\": \"fixed-point\",\n  \"output\": \""
              << json_escape(args.output) << "\",\n  \"iterations\": " << result.iterations
              << ",\n  \"converged\": " << (result.converged ? "true" : "false")
              << ",\n  \"orbitBounded\": " << (result.orbit_bounded ? "true" : "false")
              << ",\n  \"value\": " << format_double(result.residual) << "\n}\n";
    return result.converged ? kExitOk : kExitNoConvergence;
}

int run_orbit(const OrbitArgs& args) {
    const IsometryGroup group = read_group(args.generators);
    const ClosedOperator start = read_operator_file(args.start);
    const OrbitSample sample = orbit(group, start, args.depth);

    std::cout << "{\n  \"command\": \"orbit\",\n  \"depth\": " << args.depth
              << ",\n  \"points\": " << sample.points.size() << ",\n  \"truncated\": "
              << (sample.truncated ? "true" : "false");
    if (args.depth >= 4) {
        const bool bounded = args.growth_tol > 0.0
                                 ? is_orbit_bounded(group, start, args.depth, args.growth_tol)
                                 : is_orbit_bounded(group, start, args.depth);
        std::cout << ",\n  \"bounded\": " << (bounded ? "true" : "false");
    }
    std::cout << ",\n  \"diameterByDepth\": [";
    for (std::size_t i = 0; i < sample.diameter_by_depth.size(); ++i) {
        std::cout << (i == 0 ? "" : ", ") << format_double(sample.diameter_by_depth[i]);
    }
    std::cout << "],\n  \"value\": " << format_double(sample.diameter_by_depth.back())
              << "\n}\n";
    return kExitOk;
}

int run_check(const CheckArgs& args) {
    const CheckSuite suite = parse_suite(args.suite);
    const std::vector<CheckOutcome> outcomes = run_checks(suite, args.samples, args.seed);
    int failures = 0;
    std::cout << "{\n  \"command\": \"check\",\n  \"suite\": \"" << suite_name(suite)
              << "\",\n  \"samples\": " << args.samples << ",\n  \"seed\": " << args.seed
              << ",\n  \"results\": [\n";
    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const CheckOutcome& o = outcomes[i];
        if (!o.pass) {
            ++failures;
        }
        std::cout << "    {\"name\": \"" << o.name << "\", \"pass\": "
                  << (o.pass ? "true" : "false") << ", \"worst\": " << format_double(o.worst)
                  << ", \"tolerance\": " << format_double(o.tolerance)
                  << ", \"samples\": " << o.samples << "}"
                  << (i + 1 < outcomes.size() ? "," : "") << "\n";
    }
    std::cout << "  ],\n  \"failures\": " << failures << ",\n  \"value\": " << failures
              << "\n}\n";
    return failures == 0 ? kExitOk : kExitNumericalError;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hyperbolic geometry of operator spaces: distances, geodesics, "
                 "centers and isometry dynamics on finite matrices"};
    app.require_subcommand(1);

    DistArgs dist_args;
    CLI::App* dist_cmd = app.add_subcommand("dist", "Distance between two operators");
    dist_cmd->add_option("A", dist_args.a, "Operator file")->required();
    dist_cmd->add_option("B", dist_args.b, "Operator file")->required();

    PairOutputArgs midpoint_args;
    CLI::App* midpoint_cmd =
        app.add_subcommand("midpoint", "Metric midpoint of two operators");
    midpoint_cmd->add_option("A", midpoint_args.a, "Operator file")->required();
    midpoint_cmd->add_option("B", midpoint_args.b, "Operator file")->required();
    midpoint_cmd->add_option("-o,--output", midpoint_args.output, "Output operator file")
        ->required();

    PairOutputArgs geodesic_args;
    CLI::App* geodesic_cmd =
        app.add_subcommand("geodesic", "Point on the geodesic from A to B");
    geodesic_cmd->add_option("A", geodesic_args.a, "Operator file")->required();
    geodesic_cmd->add_option("B", geodesic_args.b, "Operator file")->required();
    geodesic_cmd->add_option("-t,--t", geodesic_args.frac, "Parameter in [0, 1]")
        ->required();
    geodesic_cmd->add_option("-o,--output", geodesic_args.output, "Output operator file")
        ->required();

    ManyOutputArgs barycenter_args;
    CLI::App* barycenter_cmd =
        app.add_subcommand("barycenter", "Midpoint-recursion barycenter of a configuration");
    barycenter_cmd->add_option("files", barycenter_args.inputs, "Operator files")
        ->required()
        ->expected(-1);
    barycenter_cmd
        ->add_option("-o,--output", barycenter_args.output, "Output operator file")
        ->required();

    ManyOutputArgs center_args;
    CLI::App* center_cmd =
        app.add_subcommand("center", "Chebyshev center of a configuration");
    center_cmd->add_option("files", center_args.inputs, "Operator files")
        ->required()
        ->expected(-1);
    center_cmd->add_option("-o,--output", center_args.output, "Output operator file")
        ->required();
    center_cmd->add_option("--tol", center_args.tol, "Radius improvement tolerance");
    center_cmd->add_option("--max-iter", center_args.max_iter, "Iteration cap");

    FixedPointArgs fixed_args;
    CLI::App* fixed_cmd = app.add_subcommand(
        "fixed-point", "Common fixed point of a finitely generated isometry group");
    fixed_cmd->add_option("--gen", fixed_args.generators, "Generator file (repeatable)")
        ->required()
        ->expected(-1);
    fixed_cmd->add_option("--start", fixed_args.start, "Starting operator file")
        ->required();
    fixed_cmd->add_option("-o,--output", fixed_args.output, "Output operator file")
        ->required();
    fixed_cmd->add_option("--tol", fixed_args.tol, "Residual tolerance");
    fixed_cmd->add_option("--max-iter", fixed_args.max_iter, "Iteration cap");

    OrbitArgs orbit_args;
    CLI::App* orbit_cmd =
        app.add_subcommand("orbit", "Breadth-first orbit sample of an isometry group");
    orbit_cmd->add_option("--gen", orbit_args.generators, "Generator file (repeatable)")
        ->required()
        ->expected(-1);
    orbit_cmd->add_option("--start", orbit_args.start, "Starting operator file")
        ->required();
    orbit_cmd->add_option("--depth", orbit_args.depth, "Maximum word length");
    orbit_cmd->add_option("--growth-tol", orbit_args.growth_tol,
                          "Plateau tolerance for the boundedness flag");

    CheckArgs check_args;
    CLI::App* check_cmd =
        app.add_subcommand("check", "Seeded property checks over random instances");
    check_cmd->add_option("--suite", check_args.suite,
                          "metric, ball, convexity, dynamics or all");
    check_cmd->add_option("--samples", check_args.samples, "Instances per check");
    check_cmd->add_option("--seed", check_args.seed, "Base seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        if (dist_cmd->parsed()) return run_dist(dist_args);
        if (midpoint_cmd->parsed()) return run_midpoint(midpoint_args);
        if (geodesic_cmd->parsed()) return run_geodesic(geodesic_args);
        if (barycenter_cmd->parsed()) return run_barycenter(barycenter_args);
        if (center_cmd->parsed()) return run_center(center_args);
        if (fixed_cmd->parsed()) return run_fixed_point(fixed_args);
        if (orbit_cmd->parsed()) return run_orbit(orbit_args);
        if (check_cmd->parsed()) return run_check(check_args);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const NumericalError& e) {
        std::cerr << "numerical error: " << e.what() << "\n";
        return kExitNumericalError;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumericalError;
    }
    return kExitOk;
}
