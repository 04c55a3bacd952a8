#include <iostream>

#include "CLI11.hpp"
#include "floer/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Exact Floer computations for affine lines on the flat torus"};
    app.set_help_all_flag("--help-all");
    floer::RunConfig rc;
    std::string cutoff, json_out;
    bool anchored = false, non_anchored = false;
    floer::Int N = 0;

    app.add_option("command", rc.command, "intersections | pair | product | verify | reduce | galois | ainfty-check | export")
        ->required()
        ->check(CLI::IsMember({"intersections", "pair", "product", "verify", "reduce", "galois", "ainfty-check",
                               "export"}));
    app.add_option("--config", rc.config_path, "TOML configuration (or structure JSON for ainfty-check)")->required();
    app.add_option("--cutoff", cutoff, "energy cutoff p/q");
    auto* a = app.add_flag("--anchored", anchored, "anchored mode");
    app.add_flag("--non-anchored", non_anchored, "non-anchored mode")->excludes(a);
    app.add_option("--N", N, "rationalization level");
    app.add_option("--json", json_out, "write JSON here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : floer::exit_input;
    }
    try {
        if (!cutoff.empty()) rc.cutoff = floer::parse_rational(cutoff);
    } catch (const floer::Error& e) {
        std::cerr << "floer: --cutoff: " << e.what() << "\n";
        return floer::exit_input;
    }
    if (anchored) rc.anchored = true;
    if (non_anchored) rc.anchored = false;
    if (app.count("--N")) rc.N = N;
    if (!json_out.empty()) rc.json_out = json_out;
    return floer::run(rc, std::cout, std::cerr);
}
