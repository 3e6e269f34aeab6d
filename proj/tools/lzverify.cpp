// lzverify: run the exact identity / group checks and emit a JSON report.

#include "lz/harness.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

void print_cells(const lz::SuiteResult& res)
{
    for (const auto& r : res.reports) {
        std::cout << (r.pass ? "PASS " : "FAIL ") << r.id << "  (" << static_cast<long>(r.elapsed_ms) << " ms)";
        for (const auto& f : r.flags) std::cout << " [" << f << "]";
        std::cout << "\n";
        if (r.mismatch)
            std::cout << "     at " << r.mismatch->monomial << ": " << r.mismatch->lhs << " vs " << r.mismatch->rhs
                      << "\n";
    }
    const auto& s = res.report["summary"];
    std::cout << s["passed"] << "/" << s["cells"] << " cells passed in "
              << static_cast<long>(res.report["runtime_ms"].get<double>()) << " ms\n";
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact verification of unramified zeta integral identities"};
    app.require_subcommand(1);
    app.fallthrough();

    lz::SuiteConfig cfg;
    std::string case_name;
    int rank_m = 0, rank_n = 0, deg_x = 0, deg_y = -1;
    app.add_option("--case", case_name, "restrict to one case key (e.g. d5, a, glue-gl-gl)");
    app.add_option("--rank-m", rank_m, "rank parameter m")->check(CLI::PositiveNumber);
    app.add_option("--rank-n", rank_n, "rank parameter n")->check(CLI::PositiveNumber);
    app.add_option("--deg-x,--degree", deg_x, "x-degree of the truncation box");
    app.add_option("--deg-y", deg_y, "y-degree of the truncation box");
    app.add_option("--trials", cfg.trials, "random Satake points per cell")->capture_default_str();
    app.add_option("--seed", cfg.seed, "base seed")->capture_default_str();
    app.add_option("--json", cfg.json_path, "write the aggregate report here ('-' for stdout)");
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    app.add_option("--only", cfg.only, "suite or suite:key filters (repeatable)");
    bool quiet = false;
    app.add_flag("-q,--quiet", quiet, "print only the summary line");

    auto* registry = app.add_subcommand("registry", "inspect the case registry");
    registry->require_subcommand(1);
    auto* reg_list = registry->add_subcommand("list", "list every case");
    std::string describe_id;
    auto* reg_desc = registry->add_subcommand("describe", "print one case as JSON");
    reg_desc->add_option("id", describe_id)->required();

    std::vector<CLI::App*> suite_cmds;
    for (const auto& s : lz::suite_names())
        suite_cmds.push_back(app.add_subcommand(s, "run the " + s + " suite"));
    auto* all = app.add_subcommand("all", "run every suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    if (reg_list->parsed()) {
        for (const auto& c : lz::list_cases()) {
            std::cout << c.id << "\t" << c.dual_group << "\t" << c.tau;
            if (!c.zeta_cases.empty()) std::cout << "\t-> " << c.zeta_cases.front();
            if (c.table1) std::cout << "\t[table1]";
            if (c.excluded) std::cout << "\t[excluded]";
            if (c.disconnected) std::cout << "\t[disconnected]";
            std::cout << "\n";
        }
        return 0;
    }
    if (reg_desc->parsed()) {
        try {
            std::cout << lz::json(lz::describe_case(describe_id)).dump(2) << "\n";
            return 0;
        } catch (const std::out_of_range& e) {
            std::cerr << e.what() << "\n";
            return 2;
        }
    }

    if (!all->parsed())
        for (std::size_t i = 0; i < suite_cmds.size(); ++i)
            if (suite_cmds[i]->parsed()) cfg.suites.push_back(lz::suite_names()[i]);
    if (!case_name.empty()) cfg.case_name = case_name;
    if (rank_m) cfg.rank_m = rank_m;
    if (rank_n) cfg.rank_n = rank_n;
    if (deg_x) cfg.deg_x = deg_x;
    if (deg_y >= 0) cfg.deg_y = deg_y;

    const bool to_stdout = cfg.json_path == "-";
    if (to_stdout) cfg.json_path.clear();
    try {
        const lz::SuiteResult res = lz::run_suite(cfg);
        if (to_stdout) {
            std::cout << res.report.dump(2) << "\n";
        } else if (quiet) {
            const auto& s = res.report["summary"];
            std::cout << s["passed"] << "/" << s["cells"] << " cells passed\n";
        } else {
            print_cells(res);
        }
        return res.exit_code;
    } catch (const lz::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    }
}
