#ifndef FLOER_CONFIG_HPP
#define FLOER_CONFIG_HPP

#include <optional>
#include <string>
#include <vector>

#include "floer/reduce.hpp"

namespace floer {

struct LagrangianSpec {
    std::string name;
    TorusLagrangian lag;
    std::optional<Anchor> anchor;  // polyline from the base lift
    Rational bundle_holonomy = 0;
    std::optional<Int> rationalization_N;
    Rational rationalization_phase = 0;
    std::optional<Point2> rationalization_point;
};

struct Config {
    std::string path;
    Point2 base{0, 0};
    std::vector<LagrangianSpec> lagrangians;
    Prequantum prequantum;
    bool anchored() const;  // every Lagrangian carries an anchor
    std::vector<AnchoredLag> anchored_lags() const;
    std::vector<TorusLagrangian> lags() const;
};

// Throws Error(ErrorKind::input) with "path:line:column: message".
Config parse_config(const std::string& text, const std::string& path = "<string>");
Config load_config(const std::string& path);

}  // namespace floer

#endif
