#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "syzint/driver.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"syzint - syzygy based integration for overdetermined linear PDE systems"};
    app.require_subcommand(1);

    std::string input, strategy, trace_path, ranking;
    int max_steps = -1;

    CLI::App* solve = app.add_subcommand("solve", "solve or simplify a system file");
    solve->add_option("--input", input, "system file (JSON)")->required();
    solve->add_option("--strategy", strategy,
                      "builtin name (syzygy, conventional) or comma-separated action list");
    solve->add_option("--trace", trace_path, "write the step trace to this file");
    solve->add_option("--max-steps", max_steps, "step limit before reporting incomplete");
    solve->add_option("--ranking", ranking, "derivative ranking: total or lex");

    std::string canon_input;
    CLI::App* canon = app.add_subcommand("canon", "parse a system file and reprint it");
    canon->add_option("--input", canon_input, "system file (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed()) {
            syzint::SystemFile file = syzint::load_system_file(input);
            syzint::SolveOptions opt = syzint::options_from_file(file);
            if (!strategy.empty())
                opt.strategy = syzint::Strategy::parse(strategy);
            if (!ranking.empty())
                opt.ranking = ranking;
            if (max_steps > 0)
                opt.max_steps = max_steps;
            syzint::SolveResult res = syzint::solve(file, opt);
            if (!trace_path.empty()) {
                std::ofstream out(trace_path);
                for (const auto& line : res.trace)
                    out << line << "\n";
            }
            std::cout << res.report_json << "\n";
            return res.exit_code;
        }
        if (canon->parsed()) {
            syzint::SystemFile file = syzint::load_system_file(canon_input);
            syzint::System sys = syzint::build_system(file);
            for (syzint::LabelId id : sys.active())
                std::cout << sys.eq(id).name << ": 0 = "
                          << syzint::print_expr(sys.registry(), sys.eq(id).value) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
