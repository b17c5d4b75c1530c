// edr: exact linear algebra over Z, Q[x] and F_p[x] from the command line.

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "edr/commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact Smith normal forms, module classification and homology"};
    app.require_subcommand(0, 1);

    bool selftest = false;
    app.add_flag("--selftest", selftest, "run the built-in property suites (seed: EDR_SEED)");

    edr::cli::Options opts;
    std::string strategy;
    const std::map<std::string, edr::SmithStrategy> strategy_names{
        {"euclidean", edr::SmithStrategy::Euclidean},
        {"pid", edr::SmithStrategy::Pid},
        {"kaplansky", edr::SmithStrategy::Kaplansky}};

    struct Sub {
        CLI::App* cmd;
        std::vector<std::string> files;
    };
    std::vector<std::pair<std::string, Sub>> subs;
    auto add_sub = [&](const std::string& name, const std::string& desc,
                       const std::string& files_desc) -> CLI::App* {
        CLI::App* c = app.add_subcommand(name, desc);
        subs.push_back({name, Sub{c, {}}});
        Sub& s = subs.back().second;
        c->add_option("files", s.files, files_desc);
        c->add_option("--strategy", strategy, "smith algorithm: euclidean|pid|kaplansky")
            ->check(CLI::IsMember({"euclidean", "pid", "kaplansky"}));
        c->add_flag("--json", opts.json, "machine-readable output");
        c->add_flag("--full", opts.full, "print transition matrices even above 10x10");
        c->add_flag("--each", opts.each, "treat every file as a separate input");
        return c;
    };

    add_sub("smith", "Smith normal form: invariant factors and transitions", "matrix file");
    add_sub("verify", "re-check a stored (P, d, Q) triple", "matrix file, triple JSON");
    add_sub("rank", "number of nonzero invariant factors", "matrix file");
    add_sub("kernel", "row-space kernel generators", "matrix file");
    add_sub("cokernel", "column-space kernel generators", "matrix file");
    add_sub("solve", "solve X*M = B exactly", "M file, B file");
    add_sub("iso", "decide isomorphism of presented modules", "two presentation files");
    CLI::App* hom = add_sub("homology", "homology of a chain complex", "complex JSON file");
    long long degree = -1;
    bool all_degrees = false;
    hom->add_option("-k,--degree", degree, "homology degree");
    hom->add_flag("--all", all_degrees, "all degrees 0..top");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return edr::cli::kExitInput;
    }

    if (selftest) return edr::cli::run_selftest(std::cout);

    for (auto& [name, sub] : subs) {
        if (sub.cmd->parsed()) {
            if (!strategy.empty()) opts.strategy = strategy_names.at(strategy);
            if (name == "homology") {
                opts.all_degrees = all_degrees;
                if (degree >= 0) opts.degree = degree;
            }
            return edr::cli::run_command(name, sub.files, opts, std::cout, std::cerr);
        }
    }
    std::cerr << app.help();
    return edr::cli::kExitInput;
}
