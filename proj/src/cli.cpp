#include "prc/cli.hpp"

#include <json.hpp>

#include <fstream>
#include <ostream>
#include <sstream>
#include <unordered_map>

#include "prc/bounds.hpp"
#include "prc/fpt_solver.hpp"
#include "prc/generators.hpp"
#include "prc/instance.hpp"

namespace prc::cli {

namespace {

std::string step_to_text(const Instance& inst, const ReconfigStep& s) {
    return "(" + inst.label(s.add.a) + " " + inst.label(s.add.b) + ") (" +
           inst.label(s.remove.a) + " " + inst.label(s.remove.b) + ")";
}

std::string witness_inline(const Instance& inst, const ReconfigSequence& seq) {
    if (seq.empty()) return "empty";
    std::string out;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) out += ";";
        out += step_to_text(inst, seq[i]);
    }
    return out;
}

void print_stats(std::ostream& out, const SearchStats& st) {
    out << "engine=" << st.engine << '\n';
    out << "states_expanded=" << st.states_expanded << '\n';
    out << "states_visited=" << st.states_visited << '\n';
    out << "frontier_peak=" << st.frontier_peak << '\n';
    out << "wall_ms=" << st.wall_ms << '\n';
}

int input_error(std::ostream& err, const std::string& what) {
    err << "error: " << what << '\n';
    return kExitInputError;
}

}  // namespace

std::string witness_to_text(const Instance& inst, const ReconfigSequence& seq) {
    std::string out;
    for (const auto& s : seq) out += step_to_text(inst, s) + "\n";
    return out;
}

ReconfigSequence witness_from_text(const Instance& inst, const std::string& text) {
    std::unordered_map<std::string, Vertex> by_label;
    for (int v = 0; v < inst.graph.vertex_count(); ++v)
        by_label.emplace(inst.label(v), v);

    ReconfigSequence seq;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        for (char& c : line)
            if (c == '(' || c == ')') c = ' ';
        std::istringstream ls(line);
        std::vector<std::string> toks;
        std::string t;
        while (ls >> t) toks.push_back(t);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (toks.size() != 4)
            throw ParseError(lineno, "witness step needs four labels");
        Vertex ids[4];
        for (int i = 0; i < 4; ++i) {
            auto it = by_label.find(toks[i]);
            if (it == by_label.end())
                throw ParseError(lineno, "unknown vertex label '" + toks[i] + "'");
            ids[i] = it->second;
        }
        seq.push_back({Edge(ids[0], ids[1]), Edge(ids[2], ids[3])});
    }
    return seq;
}

int cmd_solve(const std::string& instance_text, const RunConfig& cfg,
              std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        inst = parse_instance(instance_text);
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }

    if (cfg.mode == SearchMode::Optimize && cfg.algorithm == Algorithm::Fpt)
        return input_error(err,
                           "optimize mode requires --alg auto or bfs (the "
                           "fixed-parameter engine only decides)");

    SearchOptions opts{cfg.mode, cfg.state_cap, cfg.color_coding,
                       cfg.seed.value_or(1)};
    SearchResult res;
    try {
        switch (cfg.algorithm) {
            case Algorithm::Auto: res = solve_auto(inst, cfg.mode, opts); break;
            case Algorithm::Bfs: res = bfs_solve(inst, opts); break;
            case Algorithm::Fpt: res = solve_fpt(inst, opts); break;
        }
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    } catch (const UnsupportedModeError& e) {
        return input_error(err, e.what());
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }

    if (cfg.emit_json) {
        nlohmann::json j;
        j["reachable"] = res.reachable;
        if (res.min_moves)
            j["min_moves"] = *res.min_moves;
        else
            j["min_moves"] = nullptr;
        if (res.witness) {
            nlohmann::json w = nlohmann::json::array();
            for (const auto& s : *res.witness)
                w.push_back({{"add", {inst.label(s.add.a), inst.label(s.add.b)}},
                             {"remove", {inst.label(s.remove.a), inst.label(s.remove.b)}}});
            j["witness"] = w;
        } else {
            j["witness"] = nullptr;
        }
        j["engine"] = res.stats.engine;
        j["stats"] = {{"states_expanded", res.stats.states_expanded},
                      {"states_visited", res.stats.states_visited},
                      {"frontier_peak", res.stats.frontier_peak},
                      {"wall_ms", res.stats.wall_ms}};
        out << j.dump(2) << '\n';
    } else {
        out << "reachable=" << (res.reachable ? "yes" : "no") << '\n';
        out << "min_moves=" << (res.min_moves ? std::to_string(*res.min_moves) : "unknown")
            << '\n';
        out << "witness=" << (res.witness ? witness_inline(inst, *res.witness) : "none")
            << '\n';
        print_stats(out, res.stats);
    }

    if (!cfg.witness_out.empty() && res.witness) {
        std::ofstream wf(cfg.witness_out);
        if (!wf) return input_error(err, "cannot write " + cfg.witness_out);
        wf << witness_to_text(inst, *res.witness);
    }
    return res.reachable ? kExitReachable : kExitUnreachable;
}

int cmd_statespace(const std::string& instance_text, const RunConfig& cfg,
                   std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        inst = parse_instance(instance_text);
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }
    StateGraph sg;
    try {
        sg = build_state_graph(inst.graph, inst.k(), cfg.state_cap);
    } catch (const CapacityError& e) {
        err << "error: " << e.what() << '\n';
        return kExitCapacity;
    }
    out << "states=" << sg.state_count() << " moves=" << sg.move_count() << '\n';
    if (cfg.emit_dot) out << export_dot(sg);
    return kExitOk;
}

int cmd_bounds(const std::string& instance_text, const RunConfig& cfg,
               std::ostream& out, std::ostream& err) {
    Instance inst;
    try {
        inst = parse_instance(instance_text);
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }
    auto rep = bounds_report(inst.graph);
    if (cfg.emit_json) {
        nlohmann::json j;
        j["circuit_rank"] = rep.circuit_rank;
        j["bound_cr"] = rep.bound_cr;
        if (rep.fvs_number) j["fvs_number"] = *rep.fvs_number;
        if (rep.bound_fvs) j["bound_fvs"] = *rep.bound_fvs;
        if (rep.actual_path_count) j["actual_path_count"] = *rep.actual_path_count;
        out << j.dump(2) << '\n';
    } else {
        out << rep.to_kv();
    }
    return kExitOk;
}

int cmd_verify(const std::string& instance_text, const std::string& witness_text,
               std::ostream& out, std::ostream& err) {
    Instance inst;
    ReconfigSequence seq;
    try {
        inst = parse_instance(instance_text);
        seq = witness_from_text(inst, witness_text);
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }
    try {
        Path end = replay(inst.graph, inst.start, seq);
        if (end == inst.goal) {
            out << "verified steps=" << seq.size() << '\n';
            return kExitOk;
        }
        err << "error: witness replays to a different path than the goal\n";
        return kExitReplayFailure;
    } catch (const ReplayError& e) {
        err << "error: " << e.what() << '\n';
        err << "failing_step=" << e.step_index << '\n';
        return kExitReplayFailure;
    }
}

int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Instance inst;
        if (cfg.family == "duplicate-flap") {
            inst = gen_duplicate_flap_instance(cfg.k, cfg.copies, cfg.branch_len,
                                               cfg.seed);
        } else {
            Graph g;
            if (cfg.family == "path")
                g = gen_path(cfg.n);
            else if (cfg.family == "cycle")
                g = gen_cycle(cfg.n);
            else if (cfg.family == "complete")
                g = gen_complete(cfg.n);
            else if (cfg.family == "star")
                g = gen_star(cfg.n);
            else if (cfg.family == "grid")
                g = gen_grid(cfg.w, cfg.h);
            else if (cfg.family == "extremal-td")
                g = gen_extremal_treedepth(cfg.d, cfg.branch);
            else if (cfg.family == "random-cr")
                g = gen_random_fixed_cr(cfg.n, cfg.r, cfg.seed);
            else
                return input_error(err, "unknown family '" + cfg.family + "'");
            inst = default_instance(std::move(g), cfg.k);
        }
        out << serialize_instance(inst);
        return kExitOk;
    } catch (const SolverError& e) {
        return input_error(err, e.what());
    }
}

}  // namespace prc::cli
