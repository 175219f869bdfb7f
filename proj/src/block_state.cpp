#include "blockselect/block_state.hpp"

#include "blockselect/errors.hpp"

#include <string>

namespace blockselect {

BlockState BlockState::from_labels(const Graph &g, std::span<const Block> labels, Block k) {
    if (k < 1)
        throw InputError("number of blocks must be positive");
    if (labels.size() != static_cast<std::size_t>(g.num_vertices()))
        throw InputError("label vector has " + std::to_string(labels.size()) + " entries for " +
                         std::to_string(g.num_vertices()) + " vertices");
    BlockState st;
    st.k_ = k;
    st.labels_.assign(labels.begin(), labels.end());
    st.sizes_.assign(static_cast<std::size_t>(k), 0);
    st.block_degrees_.assign(static_cast<std::size_t>(k), 0);
    st.pair_edges_.assign(static_cast<std::size_t>(k) * static_cast<std::size_t>(k), 0);
    st.scratch_.per_block.assign(static_cast<std::size_t>(k), 0);
    for (Vertex u = 0; u < g.num_vertices(); ++u) {
        const Block s = st.labels_[static_cast<std::size_t>(u)];
        if (s < 0 || s >= k)
            throw InputError("label " + std::to_string(s) + " of vertex " + std::to_string(u) + " outside [0, " +
                             std::to_string(k) + ")");
        ++st.sizes_[static_cast<std::size_t>(s)];
        st.block_degrees_[static_cast<std::size_t>(s)] += g.degree(u);
    }
    for (const auto &e : g.edges()) {
        const Block a = st.labels_[static_cast<std::size_t>(e.u)];
        const Block b = st.labels_[static_cast<std::size_t>(e.v)];
        ++st.pair_edges_[st.index(a, b)];
        if (a != b)
            ++st.pair_edges_[st.index(b, a)];
    }
    return st;
}

Count BlockState::total_edges() const {
    Count total = 0;
    for (Block s = 0; s < k_; ++s)
        for (Block t = s; t < k_; ++t)
            total += pair_edges(s, t);
    return total;
}

void BlockState::count_neighbors(const Graph &g, Vertex u, NeighborCounts &out) const {
    if (out.per_block.size() != static_cast<std::size_t>(k_))
        out.per_block.assign(static_cast<std::size_t>(k_), 0);
    for (Block b : out.touched)
        out.per_block[static_cast<std::size_t>(b)] = 0;
    out.touched.clear();
    for (Vertex v : g.neighbors(u)) {
        const Block b = labels_[static_cast<std::size_t>(v)];
        if (out.per_block[static_cast<std::size_t>(b)]++ == 0)
            out.touched.push_back(b);
    }
}

StatDelta BlockState::move_vertex(const Graph &g, Vertex u, Block t) {
    if (u < 0 || u >= num_vertices())
        throw InputError("vertex " + std::to_string(u) + " out of range");
    if (t < 0 || t >= k_)
        throw InputError("block " + std::to_string(t) + " out of range");
    const Block r = labels_[static_cast<std::size_t>(u)];
    StatDelta delta;
    if (r == t)
        return delta;

    count_neighbors(g, u, scratch_);
    work_units_ += static_cast<std::uint64_t>(g.degree(u));

    const Count d = g.degree(u);
    delta.push_back({StatChange::Kind::block_size, r, r, sizes_[static_cast<std::size_t>(r)],
                     sizes_[static_cast<std::size_t>(r)] - 1});
    delta.push_back({StatChange::Kind::block_size, t, t, sizes_[static_cast<std::size_t>(t)],
                     sizes_[static_cast<std::size_t>(t)] + 1});
    --sizes_[static_cast<std::size_t>(r)];
    ++sizes_[static_cast<std::size_t>(t)];
    if (d > 0) {
        delta.push_back({StatChange::Kind::block_degree, r, r, block_degrees_[static_cast<std::size_t>(r)],
                         block_degrees_[static_cast<std::size_t>(r)] - d});
        delta.push_back({StatChange::Kind::block_degree, t, t, block_degrees_[static_cast<std::size_t>(t)],
                         block_degrees_[static_cast<std::size_t>(t)] + d});
        block_degrees_[static_cast<std::size_t>(r)] -= d;
        block_degrees_[static_cast<std::size_t>(t)] += d;
    }

    // Edge u-v with v in block x moves from pair (r, x) to pair (t, x); with
    // x == r or x == t the diagonal and the (r, t) entry both shift.
    auto bump = [&](Block a, Block b, Count by) {
        pair_edges_[index(a, b)] += by;
        if (a != b)
            pair_edges_[index(b, a)] += by;
    };
    std::vector<std::pair<Block, Block>> changed_pairs;
    auto note = [&](Block a, Block b) {
        if (a > b)
            std::swap(a, b);
        for (const auto &p : changed_pairs)
            if (p.first == a && p.second == b)
                return;
        changed_pairs.emplace_back(a, b);
    };
    std::vector<Count> before;
    for (Block x : scratch_.touched) {
        note(r, x);
        note(t, x);
    }
    before.reserve(changed_pairs.size());
    for (const auto &[a, b] : changed_pairs)
        before.push_back(pair_edges(a, b));
    for (Block x : scratch_.touched) {
        const Count c = scratch_.per_block[static_cast<std::size_t>(x)];
        bump(r, x, -c);
        bump(t, x, c);
    }
    work_units_ += static_cast<std::uint64_t>(scratch_.touched.size()) + 2;
    for (std::size_t i = 0; i < changed_pairs.size(); ++i) {
        const auto [a, b] = changed_pairs[i];
        const Count after = pair_edges(a, b);
        if (after != before[i])
            delta.push_back({StatChange::Kind::pair_edges, a, b, before[i], after});
    }
    labels_[static_cast<std::size_t>(u)] = t;
    return delta;
}

void BlockState::check_consistent(const Graph &g) const {
    const auto fresh = from_labels(g, labels_, k_);
    if (fresh.sizes_ != sizes_ || fresh.pair_edges_ != pair_edges_ || fresh.block_degrees_ != block_degrees_)
        throw InvariantError("block statistics diverged from a recount of the labels");
}

} // namespace blockselect
