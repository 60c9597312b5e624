#include <fstream>
#include <iostream>
#include <iterator>
#include <map>
#include <string>

#include "CLI11.hpp"
#include "bipaths/commands.hpp"

namespace {

std::string slurp(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    std::ifstream in(path);
    if (!in) throw bipaths::Error(bipaths::ErrorCode::ParseError, "cannot open '" + path + "'");
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

int main(int argc, char** argv) {
    using namespace bipaths;

    CLI::App app{"Disjoint X-paths in bidirected multigraphs"};
    app.require_subcommand(1);
    app.fallthrough();

    CommandOptions opts;
    std::string format = "human";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"human", "machine"}));

    std::string input = "-";
    std::size_t k = 1;

    auto* solve = app.add_subcommand("solve", "Maximum packing, paths and certificate");
    solve->add_option("instance", input, "BGF file, '-' for stdin");

    auto* certify = app.add_subcommand("certify", "Dual certificate (S, T) only");
    certify->add_option("instance", input, "BGF file, '-' for stdin");

    auto* hitting = app.add_subcommand("hitting-set", "k disjoint X-paths or a hitting set of size <= 2k-2");
    hitting->add_option("instance", input, "BGF file, '-' for stdin");
    hitting->add_option("-k,--k", k, "Number of paths requested")->required();

    std::vector<std::string> files;
    auto* verify = app.add_subcommand("verify", "Solve and audit instances against the exhaustive oracles");
    verify->add_option("instances", files, "BGF files")->required();
    verify->add_option("--limit", opts.limit, "Path-count guard for the oracle cross-check");
    verify->add_option("--jobs", opts.jobs, "Worker threads")->check(CLI::PositiveNumber);

    std::string mode = "digraph";
    auto* convert = app.add_subcommand("convert", "Reduce an arc or edge list to BGF");
    convert->add_option("input", input, "Edge list file, '-' for stdin");
    convert->add_option("--mode", mode, "digraph or undirected")
        ->check(CLI::IsMember({"digraph", "undirected"}));

    GeneratorParams gen;
    std::string signs = "mixed";
    auto* generate = app.add_subcommand("generate", "Random BGF instance");
    generate->add_option("-n,--vertices", gen.vertices, "Number of vertices")->required();
    generate->add_option("-m,--edges", gen.edges, "Number of edges")->required();
    generate->add_option("--x-frac", gen.x_fraction, "Fraction of vertices placed in X");
    generate->add_option("--signs", signs, "mixed, a pair such as '--', or weights a,b,c,d");
    generate->add_option("--seed", gen.seed, "Random seed");

    std::string overlay = "none";
    auto* dot = app.add_subcommand("dot", "Render the instance as DOT");
    dot->add_option("instance", input, "BGF file, '-' for stdin");
    dot->add_option("--overlay", overlay, "none, paths, certificate or hitting-set")
        ->check(CLI::IsMember({"none", "paths", "certificate", "hitting-set"}));
    dot->add_option("-k,--k", k, "k for the hitting-set overlay");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_code::ok : exit_code::usage;
    }
    opts.format = format == "machine" ? OutputFormat::Machine : OutputFormat::Human;

    try {
        if (*solve) return cmd_solve(parse_instance(slurp(input)), opts, std::cout);
        if (*certify) return cmd_certify(parse_instance(slurp(input)), opts, std::cout);
        if (*hitting) {
            if (k == 0) {
                std::cerr << "hitting-set: k must be at least 1\n";
                return exit_code::usage;
            }
            return cmd_hitting_set(parse_instance(slurp(input)), k, opts, std::cout);
        }
        if (*verify) return cmd_verify(files, opts, std::cout);
        if (*convert) {
            std::cout << cmd_convert(slurp(input), mode == "digraph" ? ConvertMode::Digraph
                                                                     : ConvertMode::Undirected);
            return exit_code::ok;
        }
        if (*generate) {
            gen.signs = parse_sign_weights(signs);
            std::cout << cmd_generate(gen);
            return exit_code::ok;
        }
        if (*dot) {
            static const std::map<std::string, Overlay> kinds = {{"none", Overlay::None},
                                                                 {"paths", Overlay::Paths},
                                                                 {"certificate", Overlay::Certificate},
                                                                 {"hitting-set", Overlay::HittingSet}};
            std::cout << cmd_export_dot(parse_instance(slurp(input)), kinds.at(overlay), k);
            return exit_code::ok;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e.code());
    }
    return exit_code::usage;
}
