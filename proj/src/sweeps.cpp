#include "ecsim/sweeps.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include "ecsim/witnesses.hpp"

namespace ecsim {

namespace {

constexpr double kPi = std::numbers::pi;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

std::string cell(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12e", v);
    return buf;
}

std::string grid_echo(const Grid& grid) {
    return num(grid.start) + ":" + num(grid.stop) + ":" + std::to_string(grid.points);
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    return out;
}

}  // namespace

double Grid::at(int i) const {
    return start + (stop - start) * i / (points - 1);
}

void Grid::validate() const {
    if (points < 2)
        throw std::invalid_argument("Grid: need at least two points");
    if (!(start < stop))
        throw std::invalid_argument("Grid: start must be below stop");
    if (!std::isfinite(start) || !std::isfinite(stop))
        throw std::invalid_argument("Grid: bounds must be finite");
}

Table run_fig1(int n_excitons, double alpha_sq, const Grid& grid) {
    grid.validate();
    const Complex alpha{std::sqrt(alpha_sq), 0.0};
    const EncodingScope scope = EncodingScope::full_state(n_excitons);
    const double beta = scope.aligned_phase();
    const SystemConfig cfg = SystemConfig::equal_couplings(n_excitons, 1.0, alpha);

    Table table;
    table.scenario = "fig1";
    table.columns = {"t", "B", "F"};
    table.params = {{"n", std::to_string(n_excitons)},
                    {"alpha2", num(alpha_sq)},
                    {"theta_bell", num(beta)},
                    {"theta_fid", num(kPi / 2.0)},
                    {"gamma", num(kPi / 2.0)},
                    {"grid", grid_echo(grid)}};
    table.rows.reserve(static_cast<size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double t = grid.at(i);
        const AmplitudeSet aset = lossless_amplitudes(cfg, t);
        const double b =
            bell_quantity(bell_expectation(aset, scope, beta), scope.m_qubits);
        const double f = fidelity_indicator(aset, scope, kPi / 2.0, kPi / 2.0);
        table.rows.push_back({t, b, f});
    }
    return table;
}

Table run_fig2(double alpha_sq, double theta, const Grid& grid) {
    grid.validate();
    const Complex alpha{std::sqrt(alpha_sq), 0.0};

    Table table;
    table.scenario = "fig2";
    table.columns = {"t", "tau_n2", "tau_n3", "tau_n5"};
    table.params = {{"alpha2", num(alpha_sq)},
                    {"theta", num(theta)},
                    {"grid", grid_echo(grid)}};
    const int ns[] = {2, 3, 5};
    table.rows.reserve(static_cast<size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double t = grid.at(i);
        std::vector<double> row{t};
        for (int n : ns) {
            const SystemConfig cfg =
                SystemConfig::equal_couplings(n, 1.0, alpha, theta);
            const AmplitudeSet aset = lossless_amplitudes(cfg, t);
            row.push_back(
                squared_concurrence(aset, EncodingScope::full_state(n), theta));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table run_fig3(int n_excitons, double theta, const Grid& grid) {
    grid.validate();
    Table table;
    table.scenario = "fig3";
    table.columns = {"alpha", "B", "F", "tau"};
    table.params = {{"n", std::to_string(n_excitons)},
                    {"theta", num(theta)},
                    {"grid", grid_echo(grid)}};
    table.rows.reserve(static_cast<size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double a = grid.at(i);
        const WitnessReport r =
            exciton_witnesses(Complex{a, 0.0}, n_excitons, theta);
        table.rows.push_back({a, r.bell_q, r.fidelity_f, r.tau});
    }
    return table;
}

Table run_fig4(double alpha_sq, double g, double gamma_rate, const Grid& grid) {
    grid.validate();
    const Complex alpha{std::sqrt(alpha_sq), 0.0};

    Table table;
    table.scenario = "fig4";
    table.columns = {"t", "F_n2", "F_n3", "F_n4"};
    table.params = {{"alpha2", num(alpha_sq)},
                    {"g", num(g)},
                    {"gamma_rate", num(gamma_rate)},
                    {"grid", grid_echo(grid)}};
    table.rows.reserve(static_cast<size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double t = grid.at(i);
        std::vector<double> row{t};
        for (int n : {2, 3, 4}) {
            DecayConfig dc;
            dc.gamma = gamma_rate;
            dc.g = g;
            dc.n_excitons = n;
            row.push_back(dissipative_fidelity_indicator(dc, alpha, t));
        }
        table.rows.push_back(std::move(row));
    }
    return table;
}

Table run_sweep(int n_excitons, double alpha_sq, double theta, const Grid& grid) {
    grid.validate();
    const Complex alpha{std::sqrt(alpha_sq), 0.0};
    const EncodingScope scope = EncodingScope::full_state(n_excitons);
    const double beta = scope.aligned_phase();
    const SystemConfig cfg =
        SystemConfig::equal_couplings(n_excitons, 1.0, alpha, theta);
    const double photons = mean_photon(cfg);

    Table table;
    table.scenario = "sweep";
    table.columns = {"t", "B", "F", "tau", "mean_photon"};
    table.params = {{"n", std::to_string(n_excitons)},
                    {"alpha2", num(alpha_sq)},
                    {"theta_bell", num(beta)},
                    {"theta_fid", num(kPi / 2.0)},
                    {"gamma", num(kPi / 2.0)},
                    {"theta", num(theta)},
                    {"grid", grid_echo(grid)}};
    table.rows.reserve(static_cast<size_t>(grid.points));
    for (int i = 0; i < grid.points; ++i) {
        const double t = grid.at(i);
        const AmplitudeSet aset = lossless_amplitudes(cfg, t);
        const double b =
            bell_quantity(bell_expectation(aset, scope, beta), scope.m_qubits);
        const double f = fidelity_indicator(aset, scope, kPi / 2.0, kPi / 2.0);
        const double tau = squared_concurrence(aset, scope, theta);
        table.rows.push_back({t, b, f, tau, photons});
    }
    return table;
}

Table run_thresholds(int n_excitons) {
    Table table;
    table.scenario = "thresholds";
    table.columns = {"n", "bell_root", "fidelity_root"};
    table.params = {{"n", std::to_string(n_excitons)},
                    {"bracket", "1:2.5"},
                    {"tol", "1e-06"}};
    const double bell =
        witness_threshold(WitnessKind::bell, n_excitons, 1.0, 2.5, 1e-6);
    const double fid =
        witness_threshold(WitnessKind::fidelity, n_excitons, 1.0, 2.5, 1e-6);
    table.rows.push_back({static_cast<double>(n_excitons), bell, fid});
    return table;
}

void write_csv(const Table& table, std::ostream& os) {
    os << "# ";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ",";
        os << table.columns[i];
    }
    os << "\n# scenario=" << table.scenario;
    for (const auto& [key, value] : table.params) os << " " << key << "=" << value;
    os << "\n";
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            if (i) os << ",";
            os << cell(row[i]);
        }
        os << "\n";
    }
}

void write_json(const Table& table, std::ostream& os) {
    os << "{\n  \"scenario\": \"" << json_escape(table.scenario) << "\",\n";
    os << "  \"columns\": [";
    for (size_t i = 0; i < table.columns.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << json_escape(table.columns[i]) << "\"";
    }
    os << "],\n  \"params\": {";
    for (size_t i = 0; i < table.params.size(); ++i) {
        if (i) os << ", ";
        os << "\"" << json_escape(table.params[i].first) << "\": \""
           << json_escape(table.params[i].second) << "\"";
    }
    os << "},\n  \"rows\": [\n";
    for (size_t r = 0; r < table.rows.size(); ++r) {
        os << "    [";
        for (size_t i = 0; i < table.rows[r].size(); ++i) {
            if (i) os << ", ";
            os << cell(table.rows[r][i]);
        }
        os << (r + 1 < table.rows.size() ? "],\n" : "]\n");
    }
    os << "  ]\n}\n";
}

}  // namespace ecsim
