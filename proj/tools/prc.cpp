#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "prc/cli.hpp"

namespace {

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::uint64_t default_cap() {
    if (const char* env = std::getenv("PRC_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return prc::kDefaultStateCap;
}

struct OutFile {
    std::ofstream file;
    std::ostream* stream = &std::cout;
    void open(const std::string& path) {
        if (path.empty() || path == "-") return;
        file.open(path);
        if (!file) throw std::runtime_error("cannot write " + path);
        stream = &file;
    }
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"prc - path reconfiguration solver"};
    app.require_subcommand(1);

    std::string file, out_path, alg = "auto", mode = "decide", witness_file;
    std::uint64_t cap = default_cap();
    std::uint64_t seed = 1;
    bool json = false, dot = false, color_coding = false;

    auto add_common = [&](CLI::App* cmd, bool needs_file) {
        if (needs_file)
            cmd->add_option("file", file, "instance file ('-' for stdin)")->required();
        cmd->add_option("--cap", cap, "visited-state cap");
        cmd->add_option("--out", out_path, "write output to this file");
        cmd->add_flag("--json", json, "emit JSON");
    };

    auto* solve = app.add_subcommand("solve", "decide or optimize an instance");
    add_common(solve, true);
    solve->add_option("--alg", alg, "auto|bfs|fpt");
    solve->add_option("--mode", mode, "decide|optimize");
    solve->add_option("--seed", seed, "seed for randomized accelerators");
    solve->add_flag("--color-coding", color_coding,
                    "accelerate loose-path detection (sound; exhaustive fallback)");
    solve->add_option("--witness-out", witness_file, "write a verify-ready witness file");

    auto* statespace = app.add_subcommand("statespace", "materialize the state graph");
    add_common(statespace, true);
    statespace->add_flag("--dot", dot, "emit DOT");

    auto* bounds = app.add_subcommand("bounds", "counting bounds report");
    add_common(bounds, true);

    auto* verify = app.add_subcommand("verify", "replay a witness file");
    std::string witness_in;
    verify->add_option("file", file, "instance file")->required();
    verify->add_option("witness", witness_in, "witness file")->required();
    verify->add_option("--out", out_path, "write output to this file");

    auto* gen = app.add_subcommand("gen", "generate an instance");
    prc::cli::GenConfig gcfg;
    gen->add_option("--family", gcfg.family,
                    "path|cycle|complete|star|grid|extremal-td|random-cr|duplicate-flap")
        ->required();
    gen->add_option("--n", gcfg.n, "vertex count");
    gen->add_option("--width", gcfg.w, "grid width");
    gen->add_option("--height", gcfg.h, "grid height");
    gen->add_option("--d", gcfg.d, "extremal tree-depth");
    gen->add_option("--branch", gcfg.branch, "extremal branching factor");
    gen->add_option("--r", gcfg.r, "target circuit rank");
    gen->add_option("--copies", gcfg.copies, "duplicate branch count");
    gen->add_option("--branch-len", gcfg.branch_len, "duplicate branch length");
    gen->add_option("--k", gcfg.k, "path length");
    gen->add_option("--seed", gcfg.seed, "generator seed");
    gen->add_option("--out", out_path, "write output to this file");

    CLI11_PARSE(app, argc, argv);

    try {
        OutFile sink;
        sink.open(out_path);

        prc::cli::RunConfig cfg;
        cfg.state_cap = cap;
        cfg.seed = seed;
        cfg.color_coding = color_coding;
        cfg.emit_json = json;
        cfg.emit_dot = dot;
        cfg.witness_out = witness_file;
        if (alg == "auto")
            cfg.algorithm = prc::cli::Algorithm::Auto;
        else if (alg == "bfs")
            cfg.algorithm = prc::cli::Algorithm::Bfs;
        else if (alg == "fpt")
            cfg.algorithm = prc::cli::Algorithm::Fpt;
        else {
            std::cerr << "error: unknown algorithm '" << alg << "'\n";
            return prc::cli::kExitInputError;
        }
        if (mode == "decide")
            cfg.mode = prc::SearchMode::Decide;
        else if (mode == "optimize")
            cfg.mode = prc::SearchMode::Optimize;
        else {
            std::cerr << "error: unknown mode '" << mode << "'\n";
            return prc::cli::kExitInputError;
        }

        if (solve->parsed())
            return prc::cli::cmd_solve(read_file(file), cfg, *sink.stream, std::cerr);
        if (statespace->parsed())
            return prc::cli::cmd_statespace(read_file(file), cfg, *sink.stream, std::cerr);
        if (bounds->parsed())
            return prc::cli::cmd_bounds(read_file(file), cfg, *sink.stream, std::cerr);
        if (verify->parsed())
            return prc::cli::cmd_verify(read_file(file), read_file(witness_in),
                                        *sink.stream, std::cerr);
        if (gen->parsed()) return prc::cli::cmd_gen(gcfg, *sink.stream, std::cerr);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return prc::cli::kExitInputError;
    }
    return prc::cli::kExitInputError;
}
