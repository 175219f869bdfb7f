#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/priors.hpp"
#include "blockselect/sbm_icl.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace blockselect {

enum class Family { vanilla, degree_corrected };

std::string to_string(Family f);        // "sbm" / "dcsbm"
Family family_from_string(const std::string &name);

// Inverse-temperature ramp for the Metropolis chains.
struct Schedule {
    enum class Shape { linear, geometric };
    double beta_start = 0.2;
    double beta_end = 5.0;
    Shape shape = Shape::geometric;

    double at(int sweep, int sweeps) const;
};

struct ChainConfig {
    Family family = Family::vanilla;
    Block k = 1;
    int sweeps = 200;
    int restarts = 4;
    std::uint64_t seed = 0;
    Schedule schedule;
    bool greedy_finish = true;
    // After annealing, try merging two blocks and re-splitting another; see
    // merge_split().
    bool merge_split = true;
    int split_sweeps = 30;
    // Start every chain from these labels instead of a uniform random draw.
    std::optional<std::vector<Block>> initial_labels;
    // Worker threads for the restart chains; results do not depend on it.
    int jobs = 1;

    void validate() const;
};

struct TracePoint {
    int sweep;
    int chain;
    double best_score;
};

struct MapResult {
    BlockState state;
    ScoreBreakdown score;
    std::vector<TracePoint> trace;
    std::int64_t accepted_moves = 0;
    int chain_id = 0;
    std::vector<std::string> warnings;
};

// Scores a state with the family's exact log-ICL.
ScoreBreakdown score_state(const Graph &g, const BlockState &state, Family family, const PriorConfig &priors);
double score_delta(const Graph &g, const BlockState &state, Vertex u, Block t, Family family,
                   const PriorConfig &priors);

// Best state visited by `restarts` independent single-vertex Metropolis
// chains on the collapsed log-ICL. Chain c draws from seed + c.
MapResult find_map(const Graph &g, const ChainConfig &config, const PriorConfig &priors);

// Repairs the two states single-vertex moves cannot leave: one label
// holding two groups while another group is split across labels, and empty
// labels. Each round merges one of the cheapest block pairs, splits a block
// into the freed label with a short annealing run restricted to its
// vertices, and keeps the result only if the exact score rises. Stops when a
// round finds nothing better.
BlockState merge_split(const Graph &g, BlockState state, Family family, const PriorConfig &priors,
                       std::uint64_t seed, int split_sweeps = 30);

// Applies each vertex's best improving move, pass after pass, until no move
// improves the score by more than `min_gain`. Scores after each pass are
// appended to `pass_scores` when given.
BlockState greedy_finish(const Graph &g, BlockState state, Family family, const PriorConfig &priors,
                         std::vector<double> *pass_scores = nullptr, double min_gain = 1e-10);

} // namespace blockselect
