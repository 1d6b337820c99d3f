#ifndef LOCDENS_CLI_HPP
#define LOCDENS_CLI_HPP

#include <iosfwd>
#include <string>

#include "locdens/config.hpp"

namespace locdens {

/// Exit codes: 0 = all declared bounds hold, 1 = a bound was violated
/// (the inequality is printed with both sides), 2 = configuration or
/// library error.
enum ExitCode { kExitOk = 0, kExitBoundViolated = 1, kExitError = 2 };

int run_density(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                std::ostream& diag);
int run_convexity(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                  std::ostream& diag);
int run_tails(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
              std::ostream& diag);
int run_spread(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
               std::ostream& diag);
int run_compare(const ScenarioConfig& cfg, int resolution_scale, std::ostream& table,
                std::ostream& diag);
int run_selftest_command(int resolution_scale, std::ostream& table, std::ostream& diag);

/// Dispatch by command name; table output goes to `table`.
int run_command(const std::string& command, const ScenarioConfig& cfg,
                int resolution_scale, std::ostream& table, std::ostream& diag);

/// 12-significant-digit decimal formatting used in every table.
std::string format_number(double v);

} // namespace locdens

#endif
