#pragma once
// Command-line frontend: flag container, one function per subcommand, and the
// dispatcher. Subcommands write data to the given stream (JSON, CSV or an
// aligned table); logging goes to standard error. Exit codes: 0 success,
// 1 invariant failure, 2 usage error, 3 numerical failure.

#include <hubswd/hubbard.hpp>

#include <array>
#include <optional>
#include <ostream>
#include <string>

namespace hubswd {

struct RunConfig {
    std::string subcommand;
    int n = 0;
    std::optional<int> ne;
    std::optional<Sector> sector;
    std::optional<std::array<int, 4>> mu;
    double t = 1.0;
    double u = 4.0;
    Boundary boundary = Boundary::periodic;
    Strategy strategy = Strategy::sector;
    std::string format = "json";  // json | csv | table
    std::string out;              // empty writes to stdout
    bool materialize = false;
    double tol = 1e-10;                  // verification threshold
    std::optional<double> spectrum_tol;  // eigenpair residual override
    std::string suite = "all";
};

void cmd_dims(const RunConfig& cfg, std::ostream& os);
void cmd_orbits(const RunConfig& cfg, std::ostream& os);
void cmd_table1(const RunConfig& cfg, std::ostream& os);
void cmd_basis(const RunConfig& cfg, std::ostream& os);
void cmd_spectrum(const RunConfig& cfg, std::ostream& os);
int cmd_verify(const RunConfig& cfg, std::ostream& os);  // 0 pass, 1 fail

// Dispatch on cfg.subcommand, honoring cfg.out. Returns the exit code;
// exceptions map to codes in the caller.
int run_command(const RunConfig& cfg);

}  // namespace hubswd
