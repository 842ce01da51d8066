#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "prc/state_space.hpp"

namespace prc::cli {

// Exit codes shared by all subcommands.
constexpr int kExitReachable = 0;
constexpr int kExitOk = 0;
constexpr int kExitInputError = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitUnreachable = 10;
constexpr int kExitReplayFailure = 11;

enum class Algorithm { Auto, Bfs, Fpt };

struct RunConfig {
    Algorithm algorithm = Algorithm::Auto;
    SearchMode mode = SearchMode::Decide;
    std::uint64_t state_cap = kDefaultStateCap;
    std::optional<std::uint64_t> seed;
    bool color_coding = false;  // accelerate loose-path detection (fpt engine)
    bool emit_json = false;
    bool emit_dot = false;
    std::string witness_out;  // optional path for a verify-ready witness file
};

// solve: prints reachable=/min_moves=/witness=/engine= plus stats.
int cmd_solve(const std::string& instance_text, const RunConfig& cfg,
              std::ostream& out, std::ostream& err);

// statespace: `states=<N> moves=<M>` summary, DOT when cfg.emit_dot.
int cmd_statespace(const std::string& instance_text, const RunConfig& cfg,
                   std::ostream& out, std::ostream& err);

// bounds: BoundsReport as key=value lines.
int cmd_bounds(const std::string& instance_text, const RunConfig& cfg,
               std::ostream& out, std::ostream& err);

// verify: replays a witness file (one `(<u> <v>) (<x> <y>)` step per line)
// from start; exit 0 iff the goal is reached.
int cmd_verify(const std::string& instance_text, const std::string& witness_text,
               std::ostream& out, std::ostream& err);

// gen: emits a generated instance file.
struct GenConfig {
    std::string family;  // path|cycle|complete|star|grid|extremal-td|random-cr|duplicate-flap
    int n = 0, w = 0, h = 0, d = 0, branch = 2, r = 0, copies = 0, k = 1;
    int branch_len = 1;
    std::uint64_t seed = 1;
};
int cmd_gen(const GenConfig& cfg, std::ostream& out, std::ostream& err);

// Witness text helpers (labels, one step per line).
std::string witness_to_text(const Instance& inst, const ReconfigSequence& seq);
ReconfigSequence witness_from_text(const Instance& inst, const std::string& text);

}  // namespace prc::cli
