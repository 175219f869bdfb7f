#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"

namespace blockselect {

// Idealized code lengths, in bits, of the two-part Bayesian code for a graph
// and its block assignment. part1 (the block count) is implicit and left
// out of total_bits.
struct CodeLengthReport {
    double part1_k = 0.0;            // log2 k
    double part2_partition = 0.0;    // log2 C(n + k - 1, k - 1)
    double part3_assignment = 0.0;   // log2 n! / prod n_s!
    double part4_edge_counts = 0.0;  // sum_{s<=t} log2(N_st + 1)
    double part5_edge_alloc = 0.0;   // sum_{s<=t} log2 C(N_st, m_st)
    double total_bits = 0.0;         // parts 2..5
};

CodeLengthReport sbm_code_lengths(const Graph &g, const BlockState &state);

} // namespace blockselect
