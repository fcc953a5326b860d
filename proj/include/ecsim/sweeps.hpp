#pragma once

#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "ecsim/model.hpp"

namespace ecsim {

/// Uniform closed grid, points >= 2 including both endpoints.
struct Grid {
    double start = 0.0;
    double stop = 1.0;
    int points = 1000;

    double at(int i) const;
    void validate() const;
};

/// Column-oriented numeric table with a parameter echo, the common shape of
/// every sweep output.
struct Table {
    std::string scenario;
    std::vector<std::string> columns;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<std::vector<double>> rows;
};

/// Bell excess and fidelity indicator of the full cavity + exciton register
/// against time.  B uses the aligned operator phase, F the quarter-phase cat
/// and GHZ reference (theta = gamma = pi/2).
Table run_fig1(int n_excitons, double alpha_sq, const Grid& grid);

/// Tangle of the full register against time for N = 2, 3, 5.
Table run_fig2(double alpha_sq, double theta, const Grid& grid);

/// Exciton-register witnesses (B, F, tau) against |alpha| at the
/// quarter-period transfer time.
Table run_fig3(int n_excitons, double theta, const Grid& grid);

/// Dissipative GHZ fidelity indicator against time for N = 2, 3, 4.
Table run_fig4(double alpha_sq, double g, double gamma_rate, const Grid& grid);

/// Generic witness sweep against time: B (aligned phase), F (quarter-phase
/// conventions), tau and the initial mean photon number at the given theta.
Table run_sweep(int n_excitons, double alpha_sq, double theta, const Grid& grid);

/// Zero crossings of the exciton-register B and F in |alpha|.
Table run_thresholds(int n_excitons);

/// '#'-prefixed header lines (column names, then parameters), then one CSV
/// row per grid point; fixed scientific formatting keeps output byte-stable.
void write_csv(const Table& table, std::ostream& os);

/// Same content as a JSON object {scenario, columns, params, rows}.
void write_json(const Table& table, std::ostream& os);

}  // namespace ecsim
