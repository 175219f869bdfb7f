#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/sbm_icl.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace blockselect {

struct SbmSpec {
    Vertex n = 0;
    Block k = 1;
    std::vector<double> q;
    SymmetricMatrix p;
    std::uint64_t seed = 0;

    void validate() const;
    // k equal blocks, p_in on the diagonal and p_out elsewhere.
    static SbmSpec planted(Vertex n, Block k, double p_in, double p_out, std::uint64_t seed);
};

// Per-vertex propensity mixture: low_mean with probability 1 - mix,
// ratio * low_mean otherwise. Renormalized per block before sampling.
struct DegreeProfile {
    double low_mean = 1.0;
    double ratio = 3.0;
    double mix = 0.5;
};

struct DcSpec {
    Vertex n = 0;
    Block k = 1;
    std::vector<double> q;
    SymmetricMatrix omega;
    DegreeProfile degree_profile;
    std::uint64_t seed = 0;

    void validate() const;
    static DcSpec planted(Vertex n, Block k, double w_in, double w_out, DegreeProfile profile,
                          std::uint64_t seed);
};

struct SyntheticGraph {
    Graph graph;
    std::vector<Block> labels;
    std::vector<double> theta;  // propensities used (all 1 for the vanilla sampler)
    double collapse_rate = 0.0; // share of edges that were Poisson multi-edges
    std::vector<std::string> warnings;
};

// Labels i.i.d. from q, then each pair independently with p_{g(u) g(v)}.
SyntheticGraph sample_sbm(const SbmSpec &spec);

// Poisson(theta_u theta_v omega) per pair, thresholded to a simple graph. A
// warning is recorded when more than 1% of the edges collapsed multi-edges.
SyntheticGraph sample_dc_sbm(const DcSpec &spec);

} // namespace blockselect
