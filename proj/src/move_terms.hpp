#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/errors.hpp"
#include "blockselect/priors.hpp"

#include <string>
#include <utility>
#include <vector>

namespace blockselect::detail {

// Before/after statistics of a proposed single-vertex move, restricted to the
// entries the move touches. Nothing in the state is modified.
struct MoveStats {
    Block from = 0;
    Block to = 0;
    Count size_from = 0, size_to = 0;     // n_r, n_t before the move
    Count degree_from = 0, degree_to = 0; // D_r, D_t before the move
    Count vertex_degree = 0;

    struct Pair {
        Block a, b;
        Count edges_before, edges_after;
        Count slots_before, slots_after;
    };
    std::vector<Pair> pairs; // every (r, x) and (t, x), each once
};

inline void validate_move(const BlockState &state, Vertex u, Block t) {
    if (u < 0 || u >= state.num_vertices())
        throw InputError("vertex " + std::to_string(u) + " out of range");
    if (t < 0 || t >= state.num_blocks())
        throw InputError("block " + std::to_string(t) + " out of range");
}

// Fills `out` for moving u to t (t != label(u)). `counts` is scratch space.
inline void collect_move_stats(const Graph &g, const BlockState &state, Vertex u, Block t, NeighborCounts &counts,
                               MoveStats &out) {
    const Block r = state.label(u);
    const Block k = state.num_blocks();
    state.count_neighbors(g, u, counts);
    out.from = r;
    out.to = t;
    out.size_from = state.block_size(r);
    out.size_to = state.block_size(t);
    out.degree_from = state.block_degree(r);
    out.degree_to = state.block_degree(t);
    out.vertex_degree = g.degree(u);
    out.pairs.clear();

    auto new_size = [&](Block x) {
        if (x == r)
            return out.size_from - 1;
        if (x == t)
            return out.size_to + 1;
        return state.block_size(x);
    };
    auto c = [&](Block x) { return counts.per_block[static_cast<std::size_t>(x)]; };
    auto add_pair = [&](Block a, Block b) {
        if (a > b)
            std::swap(a, b);
        const Count before = state.pair_edges(a, b);
        Count after = before;
        // edges from u into block x leave pair (r, x) and join pair (t, x)
        if (a == r || b == r)
            after -= c(a == r ? b : a);
        if (a == t || b == t)
            after += c(a == t ? b : a);
        out.pairs.push_back({a, b, before, after, state.slots(a, b), pair_slots(new_size(a), new_size(b), a == b)});
    };
    for (Block x = 0; x < k; ++x)
        add_pair(r, x);
    for (Block x = 0; x < k; ++x)
        if (x != r)
            add_pair(t, x);
}

// Change of the vanilla vertex and edge factors; defined in sbm_icl.cpp.
double vanilla_move_delta(const MoveStats &mv, const PriorConfig &priors);

} // namespace blockselect::detail
