#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "prc/graph.hpp"
#include "prc/instance.hpp"
#include "prc/state_space.hpp"

namespace prc {

// State-space size certificates from circuit rank and feedback vertex set.
struct BoundsReport {
    int circuit_rank = 0;
    std::optional<int> fvs_number;
    std::uint64_t bound_cr = 0;
    std::optional<std::uint64_t> bound_fvs;
    std::optional<std::uint64_t> actual_path_count;  // all lengths >= 1

    std::string to_kv() const;
};

// m - n + c (per-component sum of the connected-graph formula m - n + 1).
int circuit_rank(const Graph& g);

// 2^r * C(n,2). Saturates at UINT64_MAX instead of overflowing.
std::uint64_t path_count_bound_cr(int n, int r);

// phi! * 2^phi * (C(n-phi,2) + (n-phi) + 1)^(phi+1). Saturating.
std::uint64_t path_count_bound_fvs(int n, int phi);

// Exact minimum feedback vertex set size by subset search in increasing size.
// Throws SizeLimitError past `limit` vertices.
int min_fvs(const Graph& g, int limit = 20);

// Full report; path enumeration runs only while the running count stays
// within enum_cap, fvs only within the min_fvs limit.
BoundsReport bounds_report(const Graph& g, std::uint64_t enum_cap = 1'000'000,
                           int fvs_limit = 20);

// Closed-form decision on complete graphs: yes when the paths use fewer than
// n vertices; for Hamiltonian paths, yes iff one is a cyclic shift of the
// other or of its reversal. Throws WrongSolverError off complete graphs.
SearchResult solve_complete_graph(const Instance& inst);

}  // namespace prc
