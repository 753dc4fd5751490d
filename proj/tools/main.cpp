#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "helly/errors.hpp"
#include "helly/fourier_motzkin.hpp"
#include "helly/generators.hpp"
#include "helly/helly.hpp"
#include "helly/io.hpp"

namespace {

// Exit-code discipline: 0 only when every requested verdict passes.
constexpr int kExitVerdict = 5;
constexpr int kExitParse = 2;
constexpr int kExitSpec = 3;
constexpr int kExitScale = 4;
constexpr int kExitUsage = 64;

std::string join_invocation(int argc, char** argv) {
    std::ostringstream out;
    for (int i = 0; i < argc; ++i) out << (i ? " " : "") << argv[i];
    return out.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw helly::MalformedInputError("cannot write: " + path);
    out << content;
}

std::vector<helly::Rational> parse_grid(const std::string& text) {
    std::vector<helly::Rational> grid;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (!item.empty()) grid.push_back(helly::parse_rational(item));
    }
    return grid;
}

std::string constraint_line(const helly::LinearConstraint& c) {
    std::ostringstream out;
    for (const auto& coeff : c.coefficients) out << helly::to_string(coeff) << " ";
    out << (c.relation == helly::Relation::Eq ? "=" : "<=") << " " << helly::to_string(c.rhs);
    return out.str();
}

int run_generate(const std::string& kind, int d, int n, const std::string& beta_text,
                 std::uint64_t seed, const std::string& model_name, const std::string& out_path,
                 const std::string& invocation) {
    const helly::Rational beta = helly::parse_rational(beta_text);
    helly::ConstructionSpec spec{d, n, beta, seed};
    nlohmann::json sidecar;
    sidecar["invocation"] = invocation;
    sidecar["kind"] = kind;
    sidecar["d"] = d;
    sidecar["n"] = n;
    sidecar["seed"] = seed;
    helly::Instance instance;
    if (kind == "mono") {
        instance = helly::instance_from_family(d, helly::gen_example_monochromatic(spec));
        sidecar["beta"] = helly::to_string(beta);
        sidecar["predicted_mono_count"] =
            helly::predicted_mono_count(n, beta, d).get_str();
    } else if (kind == "colorful") {
        instance = helly::instance_from_classes(helly::gen_construction_colorful(spec));
        sidecar["beta"] = helly::to_string(beta);
        sidecar["predicted_colorful_count"] =
            helly::predicted_colorful_count(n, beta, d).get_str();
    } else if (kind == "random") {
        helly::SetModel model = helly::SetModel::MixedWithHyperplanes;
        if (model_name == "axis-boxes") model = helly::SetModel::AxisBoxes;
        else if (model_name == "halfspace-systems") model = helly::SetModel::HalfspaceSystems;
        else if (model_name != "mixed-with-hyperplanes") {
            std::cerr << "unknown set model: " << model_name << "\n";
            return kExitUsage;
        }
        sidecar["model"] = model_name;
        instance = helly::instance_from_classes(
            helly::gen_random_classes(d, std::vector<int>(d + 1, n), model, seed));
    } else {
        std::cerr << "unknown kind: " << kind << "\n";
        return kExitUsage;
    }
    helly::save_instance(instance, out_path);
    write_file(out_path + ".json", sidecar.dump(2) + "\n");
    std::cout << "wrote " << out_path << " and " << out_path << ".json\n";
    return 0;
}

int run_analyze(const std::string& in_path, int jobs, const std::string& invocation) {
    const auto instance = helly::load_instance(in_path);
    nlohmann::json out;
    out["invocation"] = invocation;
    out["d"] = instance.dim;
    out["sets"] = instance.sets.size();
    out["colorful"] = instance.is_colorful();
    if (instance.is_colorful()) {
        const auto classes = helly::classes_from_instance(instance);
        const auto profile = helly::count_intersecting_colorful(classes, jobs);
        out["class_sizes"] = classes.sizes();
        out["intersecting_colorful_tuples"] = profile.intersecting_count;
        out["total_colorful_tuples"] = profile.total_count;
        out["alpha"] = helly::to_string(profile.alpha);
    } else {
        const auto profile =
            helly::count_intersecting_monochromatic(instance.sets, instance.dim, jobs);
        out["intersecting_tuples"] = profile.intersecting_count;
        out["total_tuples"] = profile.total_count;
        out["alpha"] = helly::to_string(profile.alpha);
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& in_path, const std::string& out_path, int max_exact_n,
               int jobs, const std::string& invocation) {
    const auto instance = helly::load_instance(in_path);
    const auto classes = helly::classes_from_instance(instance);
    helly::VerifyOptions options;
    options.max_exact_n = max_exact_n;
    options.jobs = jobs;
    // A construction sidecar next to the instance enables the upper-bound gap
    // check against the nominal class size.
    std::ifstream sidecar(in_path + ".json");
    if (sidecar) {
        const auto meta = nlohmann::json::parse(sidecar, nullptr, false);
        if (!meta.is_discarded() && meta.contains("kind") && meta["kind"] == "colorful") {
            options.construction_n = meta["n"].get<int>();
        }
    }
    const auto report = helly::verify_theorem(classes, options);
    const auto json = helly::report_to_json(report, invocation);
    if (out_path.empty()) std::cout << json << "\n";
    else write_file(out_path, json + "\n");
    bool pass = report.lower_bound_passed;
    if (report.upper_gap_within_tolerance) pass = pass && *report.upper_gap_within_tolerance;
    return pass ? 0 : kExitVerdict;
}

int run_sweep(int d, int n, const std::string& grid_text, std::uint64_t seed, int max_exact_n,
              int jobs, const std::string& out_path, const std::string& invocation) {
    const auto grid = parse_grid(grid_text);
    if (grid.empty()) {
        std::cerr << "empty beta grid\n";
        return kExitUsage;
    }
    std::vector<helly::SweepRow> rows;
    for (const auto& beta : grid) {
        helly::ConstructionSpec spec{d, n, beta, seed};
        const auto classes = helly::gen_construction_colorful(spec);
        helly::VerifyOptions options;
        options.max_exact_n = max_exact_n;
        options.jobs = jobs;
        const auto report = helly::verify_theorem(classes, options);
        rows.push_back({report.profile.alpha, report.beta_observed,
                        helly::lower_bound_value_approx(report.profile.alpha, d),
                        helly::upper_bound_value_approx(report.profile.alpha, d)});
    }
    const auto csv = helly::sweep_to_csv(rows, invocation);
    if (out_path.empty()) std::cout << csv;
    else write_file(out_path, csv);
    return 0;
}

int run_oracle_check(int d, int count, std::uint64_t seed) {
    if (d < 1 || d > 3) {
        std::cerr << "oracle-check supports 1 <= dim <= 3\n";
        return kExitUsage;
    }
    for (int i = 0; i < count; ++i) {
        const auto system = helly::gen_random_system(d, 10, seed + i);
        const bool simplex = helly::feasible(system, d).nonempty();
        const bool fm = helly::fm_feasible(system, d);
        if (simplex != fm) {
            std::cerr << "disagreement on case " << i << " (seed " << seed + i << "):\n"
                      << "  simplex=" << (simplex ? "NONEMPTY" : "EMPTY")
                      << " fourier-motzkin=" << (fm ? "NONEMPTY" : "EMPTY") << "\n"
                      << "dim " << d << "\n";
            for (const auto& c : system) std::cerr << constraint_line(c) << "\n";
            return 1;
        }
    }
    std::cout << count << "/" << count << " agree\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Colorful fractional Helly toolkit: exact convex-intersection "
                 "analysis, extremal constructions, and bound verification"};
    app.require_subcommand(1);
    const std::string invocation = join_invocation(argc, argv);

    int dim = 1, n = 4, jobs = 1, count = 500, max_exact_n = 25;
    std::string beta = "1/2", kind = "colorful", model = "mixed-with-hyperplanes";
    std::string in_path, out_path, grid;
    std::uint64_t seed = 1;

    auto* generate = app.add_subcommand("generate", "Write an instance file plus JSON sidecar");
    generate->add_option("--dim", dim)->check(CLI::PositiveNumber);
    generate->add_option("--n", n)->check(CLI::PositiveNumber);
    generate->add_option("--beta", beta);
    generate->add_option("--seed", seed);
    generate->add_option("--kind", kind);
    generate->add_option("--model", model);
    generate->add_option("--out", out_path)->required();

    auto* analyze = app.add_subcommand("analyze", "Count intersecting tuples of an instance");
    analyze->add_option("--in", in_path)->required();
    analyze->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "Full theorem report; exit 0 iff bounds pass");
    verify->add_option("--in", in_path)->required();
    verify->add_option("--out", out_path);
    verify->add_option("--max-exact-n", max_exact_n)->check(CLI::PositiveNumber);
    verify->add_option("--jobs", jobs)->check(CLI::PositiveNumber);

    auto* sweep = app.add_subcommand("sweep", "Alpha-beta curve over a beta grid, as CSV");
    sweep->add_option("--dim", dim)->check(CLI::PositiveNumber);
    sweep->add_option("--n", n)->check(CLI::PositiveNumber);
    sweep->add_option("--beta-grid", grid)->required();
    sweep->add_option("--seed", seed);
    sweep->add_option("--max-exact-n", max_exact_n)->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
    sweep->add_option("--out", out_path);

    auto* oracle = app.add_subcommand("oracle-check",
                                      "Differential test: simplex vs Fourier-Motzkin");
    oracle->add_option("--dim", dim)->check(CLI::PositiveNumber);
    oracle->add_option("--count", count)->check(CLI::PositiveNumber);
    oracle->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (generate->parsed()) {
            return run_generate(kind, dim, n, beta, seed, model, out_path, invocation);
        }
        if (analyze->parsed()) return run_analyze(in_path, jobs, invocation);
        if (verify->parsed()) {
            return run_verify(in_path, out_path, max_exact_n, jobs, invocation);
        }
        if (sweep->parsed()) {
            return run_sweep(dim, n, grid, seed, max_exact_n, jobs, out_path, invocation);
        }
        if (oracle->parsed()) return run_oracle_check(dim, count, seed);
    } catch (const helly::SpecError& e) {
        std::cerr << "spec error: " << e.what() << "\n";
        return kExitSpec;
    } catch (const helly::ScaleLimitError& e) {
        std::cerr << "scale limit: " << e.what() << "\n";
        return kExitScale;
    } catch (const helly::MalformedInputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitUsage;
}
