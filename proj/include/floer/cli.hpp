#ifndef FLOER_CLI_HPP
#define FLOER_CLI_HPP

#include <iosfwd>
#include <optional>
#include <string>

#include "floer/rational.hpp"

namespace floer {

struct RunConfig {
    std::string command;  // intersections, pair, product, verify, reduce, galois, ainfty-check, export
    std::string config_path;
    std::optional<Rational> cutoff;
    std::optional<bool> anchored;  // unset: anchored when every Lagrangian has an anchor
    std::optional<Int> N;
    std::optional<std::string> json_out;
};

enum ExitCode { exit_ok = 0, exit_verification = 1, exit_input = 2 };

// JSON goes to cfg.json_out when set, otherwise to out; diagnostics go to err.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace floer

#endif
