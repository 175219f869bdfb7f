#include "blockselect/mdl_codec.hpp"

#include "blockselect/sbm_icl.hpp"
#include "blockselect/special.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace blockselect {

namespace {

double log2_choose(double n, double r) {
    return (log_gamma(n + 1.0) - log_gamma(r + 1.0) - log_gamma(n - r + 1.0)) / std::numbers::ln2;
}

} // namespace

CodeLengthReport sbm_code_lengths(const Graph &g, const BlockState &state) {
    detail::require_matching(g, state);
    const Block k = state.num_blocks();
    const auto n = static_cast<double>(state.num_vertices());
    CodeLengthReport r;
    r.part1_k = std::log2(static_cast<double>(k));
    r.part2_partition = log2_choose(n + k - 1.0, k - 1.0);
    double assignment = log_gamma(n + 1.0);
    for (Block s = 0; s < k; ++s)
        assignment -= log_gamma(static_cast<double>(state.block_size(s)) + 1.0);
    r.part3_assignment = assignment / std::numbers::ln2;
    for (Block s = 0; s < k; ++s) {
        for (Block t = s; t < k; ++t) {
            const auto N = static_cast<double>(state.slots(s, t));
            r.part4_edge_counts += std::log2(N + 1.0);
            r.part5_edge_alloc += log2_choose(N, static_cast<double>(state.pair_edges(s, t)));
        }
    }
    // lgamma round-off can leave a zero-length part a hair below zero
    for (double *part : {&r.part2_partition, &r.part3_assignment, &r.part5_edge_alloc})
        *part = std::max(*part, 0.0);
    r.total_bits = r.part2_partition + r.part3_assignment + r.part4_edge_counts + r.part5_edge_alloc;
    return r;
}

} // namespace blockselect
