// Command-line front end: figure reproductions, generic sweeps, witness
// thresholds, and the cross-validation report.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "ecsim/sweeps.hpp"
#include "ecsim/validation.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

constexpr int kExitSuccess = 0;
constexpr int kExitValidationFailure = 1;
constexpr int kExitBadArguments = 2;

struct CommonOptions {
    std::optional<int> n;
    std::optional<double> alpha2;
    std::optional<double> theta;
    std::optional<double> gamma_rate;
    std::optional<double> g;
    std::optional<std::string> grid;
    std::string out;
    std::string format = "csv";
    std::string config_path;
};

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--n", opt.n, "number of excitons");
    cmd->add_option("--alpha2", opt.alpha2, "initial |alpha|^2 of the cavity cat");
    cmd->add_option("--theta", opt.theta, "cat superposition phase in radians");
    cmd->add_option("--gamma-rate", opt.gamma_rate, "cavity decay rate");
    cmd->add_option("--g", opt.g, "per-exciton coupling");
    cmd->add_option("--grid", opt.grid, "sweep grid start:stop:points");
    cmd->add_option("--out", opt.out, "output file (default: stdout)");
    cmd->add_option("--format", opt.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--config", opt.config_path,
                    "JSON file with the same keys; explicit flags win");
}

// Fills unset options from a JSON config file.
void merge_config(CommonOptions& opt) {
    if (opt.config_path.empty()) return;
    std::ifstream in(opt.config_path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + opt.config_path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw CLI::ValidationError("--config", e.what());
    }
    if (!opt.n && doc.contains("n")) opt.n = doc["n"].get<int>();
    if (!opt.alpha2 && doc.contains("alpha2")) opt.alpha2 = doc["alpha2"].get<double>();
    if (!opt.theta && doc.contains("theta")) opt.theta = doc["theta"].get<double>();
    if (!opt.gamma_rate && doc.contains("gamma_rate"))
        opt.gamma_rate = doc["gamma_rate"].get<double>();
    if (!opt.g && doc.contains("g")) opt.g = doc["g"].get<double>();
    if (!opt.grid && doc.contains("grid")) opt.grid = doc["grid"].get<std::string>();
    if (opt.out.empty() && doc.contains("out")) opt.out = doc["out"].get<std::string>();
    if (doc.contains("format") && opt.format == "csv")
        opt.format = doc["format"].get<std::string>();
}

ecsim::Grid parse_grid(const std::string& text) {
    ecsim::Grid grid;
    char trailing;
    if (std::sscanf(text.c_str(), "%lf:%lf:%d%c", &grid.start, &grid.stop,
                    &grid.points, &trailing) != 3)
        throw CLI::ValidationError("--grid", "expected start:stop:points");
    grid.validate();
    return grid;
}

ecsim::Grid grid_or(const CommonOptions& opt, double start, double stop) {
    if (opt.grid) return parse_grid(*opt.grid);
    return ecsim::Grid{start, stop, 1000};
}

int emit(const ecsim::Table& table, const CommonOptions& opt) {
    std::ostringstream buffer;
    if (opt.format == "json")
        ecsim::write_json(table, buffer);
    else
        ecsim::write_csv(table, buffer);
    if (opt.out.empty()) {
        std::cout << buffer.str();
        return kExitSuccess;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file || !(file << buffer.str())) {
        std::cerr << "error: cannot write " << opt.out << "\n";
        return kExitBadArguments;
    }
    return kExitSuccess;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"entangled coherent state dynamics of excitons coupled to a cavity mode"};
    app.require_subcommand(1);

    CommonOptions opt;
    double perturb = 0.0;

    CLI::App* fig1 = app.add_subcommand(
        "fig1", "Bell excess B and fidelity indicator F of the full register vs time");
    CLI::App* fig2 = app.add_subcommand("fig2", "tangle of the full register vs time for N=2,3,5");
    CLI::App* fig3 = app.add_subcommand(
        "fig3", "exciton-register witnesses vs |alpha| at the quarter-period transfer");
    CLI::App* fig4 = app.add_subcommand(
        "fig4", "dissipative GHZ fidelity indicator vs time for N=2,3,4");
    CLI::App* sweep = app.add_subcommand("sweep", "witness sweep of the full register vs time");
    CLI::App* thresholds = app.add_subcommand(
        "thresholds", "zero crossings of the exciton-register B and F in |alpha|");
    CLI::App* validate = app.add_subcommand(
        "validate", "run every closed-form vs oracle cross-check and report");
    for (CLI::App* cmd : {fig1, fig2, fig3, fig4, sweep, thresholds})
        add_common(cmd, opt);
    validate->add_option(
        "--perturb", perturb,
        "self-test offset added to closed-form witness values; nonzero must fail");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitSuccess : kExitBadArguments;
    }

    try {
        merge_config(opt);
        if (fig1->parsed()) {
            const ecsim::Table t = ecsim::run_fig1(opt.n.value_or(3),
                                                   opt.alpha2.value_or(3.0),
                                                   grid_or(opt, 0.0, 2.0 * kPi));
            return emit(t, opt);
        }
        if (fig2->parsed()) {
            const ecsim::Table t = ecsim::run_fig2(opt.alpha2.value_or(0.9),
                                                   opt.theta.value_or(kPi),
                                                   grid_or(opt, 0.0, 2.0 * kPi));
            return emit(t, opt);
        }
        if (fig3->parsed()) {
            const ecsim::Table t = ecsim::run_fig3(opt.n.value_or(5),
                                                   opt.theta.value_or(kPi),
                                                   grid_or(opt, 0.0, 4.0));
            return emit(t, opt);
        }
        if (fig4->parsed()) {
            const ecsim::Table t = ecsim::run_fig4(
                opt.alpha2.value_or(3.0), opt.g.value_or(1.0),
                opt.gamma_rate.value_or(0.5), grid_or(opt, 0.0, 10.0));
            return emit(t, opt);
        }
        if (sweep->parsed()) {
            const ecsim::Table t = ecsim::run_sweep(
                opt.n.value_or(3), opt.alpha2.value_or(3.0),
                opt.theta.value_or(kPi), grid_or(opt, 0.0, 2.0 * kPi));
            return emit(t, opt);
        }
        if (thresholds->parsed()) {
            return emit(ecsim::run_thresholds(opt.n.value_or(5)), opt);
        }
        if (validate->parsed()) {
            const ecsim::ValidationReport report = ecsim::run_validation(perturb);
            std::cout << ecsim::format_report(report);
            return report.all_passed() ? kExitSuccess : kExitValidationFailure;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::logic_error& e) {
        // invalid_argument and domain_error: unusable parameter combinations
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadArguments;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidationFailure;
    }
    return kExitBadArguments;
}
