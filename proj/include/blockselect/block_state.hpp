#pragma once

#include "blockselect/graph.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace blockselect {

using Block = std::int32_t;

// How many vertex pairs can host an edge inside one block. The simple form
// excludes self-pairs; the literal form counts n_s * n_s like the cross-block
// product does.
enum class PairCountConvention { simple, literal };

#ifdef BLOCKSELECT_LITERAL_PAIR_COUNT
inline constexpr PairCountConvention kPairCountConvention = PairCountConvention::literal;
#else
inline constexpr PairCountConvention kPairCountConvention = PairCountConvention::simple;
#endif

template <PairCountConvention C = kPairCountConvention>
constexpr Count pair_slots(Count ns, Count nt, bool same_block) {
    if (!same_block || C == PairCountConvention::literal)
        return ns * nt;
    return ns * (ns - 1) / 2;
}

// One changed sufficient statistic, as reported by BlockState::move_vertex.
struct StatChange {
    enum class Kind { block_size, pair_edges, block_degree };
    Kind kind;
    Block s;
    Block t; // == s except for pair_edges
    Count before;
    Count after;

    friend bool operator==(const StatChange &, const StatChange &) = default;
};

using StatDelta = std::vector<StatChange>;

// Edges from one vertex into each block; filled by BlockState::count_neighbors.
struct NeighborCounts {
    std::vector<Count> per_block;
    std::vector<Block> touched; // blocks with a nonzero count
};

// Block assignment with the sufficient statistics (n_s, m_st, D_s) kept
// consistent under single-vertex moves. k is fixed; blocks may be empty.
class BlockState {
  public:
    BlockState() = default;

    static BlockState from_labels(const Graph &g, std::span<const Block> labels, Block k);

    Block num_blocks() const { return k_; }
    Vertex num_vertices() const { return static_cast<Vertex>(labels_.size()); }
    Block label(Vertex u) const { return labels_[static_cast<std::size_t>(u)]; }
    const std::vector<Block> &labels() const { return labels_; }

    Count block_size(Block s) const { return sizes_[static_cast<std::size_t>(s)]; }
    Count block_degree(Block s) const { return block_degrees_[static_cast<std::size_t>(s)]; }
    Count pair_edges(Block s, Block t) const { return pair_edges_[index(s, t)]; }
    Count slots(Block s, Block t) const { return pair_slots(block_size(s), block_size(t), s == t); }
    Count total_edges() const;

    // Relabels u as t and returns every changed statistic. Moving to the
    // current block is a no-op with an empty delta.
    StatDelta move_vertex(const Graph &g, Vertex u, Block t);

    void count_neighbors(const Graph &g, Vertex u, NeighborCounts &out) const;

    // Throws InvariantError unless the statistics match a recount from labels.
    void check_consistent(const Graph &g) const;

    // Elementary steps spent inside move_vertex since construction.
    std::uint64_t work_units() const { return work_units_; }

    friend bool operator==(const BlockState &a, const BlockState &b) {
        return a.k_ == b.k_ && a.labels_ == b.labels_ && a.sizes_ == b.sizes_ && a.pair_edges_ == b.pair_edges_ &&
               a.block_degrees_ == b.block_degrees_;
    }

  private:
    std::size_t index(Block s, Block t) const {
        return static_cast<std::size_t>(s) * static_cast<std::size_t>(k_) + static_cast<std::size_t>(t);
    }

    Block k_ = 0;
    std::vector<Block> labels_;
    std::vector<Count> sizes_;
    std::vector<Count> pair_edges_; // dense symmetric k x k
    std::vector<Count> block_degrees_;
    NeighborCounts scratch_;
    std::uint64_t work_units_ = 0;
};

} // namespace blockselect
