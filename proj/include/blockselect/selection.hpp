#pragma once

#include "blockselect/block_state.hpp"
#include "blockselect/graph.hpp"
#include "blockselect/map_search.hpp"
#include "blockselect/priors.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace blockselect {

// Edge-density scaling of a graph and the matching BIC sample-size term.
// Every asymptotic Theta(.) constant is taken as 1.
struct DensityRegime {
    enum class Kind { dense, sparse };
    Kind regime = Kind::sparse;
    double rho = 0.0;             // m / n^2 when dense, m / n when sparse
    double sample_size_log = 0.0; // ln n^2 when dense, ln n^3 when sparse
};

std::string to_string(DensityRegime::Kind kind);

// Dense iff m >= n^(3/2), the geometric midpoint between m ~ n and m ~ n^2.
DensityRegime density_regime(Count n, Count m);
// Same bookkeeping with the regime forced.
DensityRegime density_regime(Count n, Count m, DensityRegime::Kind forced);

// -2 ln P(G, g | MLE) + k^2 ln n*.
double bic_sbm(const Graph &g, const BlockState &state, const DensityRegime &regime);
// Degree-corrected likelihood at its MLE, plus the extra 2 ln n penalty.
double bic_dc(const Graph &g, const BlockState &state, const DensityRegime &regime);

// Log-likelihood ratio of the degree-corrected model against the vanilla
// one at shared g, q and omega = p: sum_u d_u ln theta_hat_u.
double lambda_dc(const Graph &g, const BlockState &state);

// Mean of lambda_dc under the vanilla null: (1/2 + n / 24m)(n - k). With
// as_printed the logarithm of that quantity is returned instead.
double expected_gap(Count n, Count m, Block k, bool as_printed = false);

using Curve = std::map<Block, double>;

// Shifts every DC value down by expected_gap(n, m, k_ref). The vanilla curve
// is not touched.
Curve normalize_dc_curve(const Curve &dc_scores, const Curve &sbm_scores, Count n, Count m, Block k_ref);

// argmax of a curve, smallest k on ties.
Block curve_argmax(const Curve &curve);

struct ModelScore {
    Family family = Family::vanilla;
    Block k = 1;
    double log_icl = 0.0;
    double log_icl_normalized = 0.0;
    double bic = 0.0;
    double lambda_dc = 0.0;
    std::uint64_t seed = 0;
    std::string map_state_ref; // "<family>:k=<k>"
    std::vector<Block> labels;
};

struct SelectionReport {
    Count n = 0;
    Count m = 0;
    DensityRegime regime;
    std::vector<ModelScore> grid; // ordered by family, then k
    std::size_t best_by_icl = 0;  // index into grid
    std::size_t best_by_bic = 0;
    Block k_ref = 0;
    double gap_at_k_ref = 0.0;
    std::vector<std::string> warnings;
};

struct SweepOptions {
    std::vector<Block> k_values;
    std::vector<Family> families;
    // Overfitting point for normalization; defaults to the argmax of the
    // vanilla curve (or the largest k when vanilla is not swept).
    std::optional<Block> k_ref;
    std::optional<DensityRegime::Kind> regime;
    // Concurrent grid cells; results do not depend on it.
    int jobs = 1;
};

// Runs find_map for every (family, k) cell and ranks the grid. Cell seeds
// are derived from chain.seed, so the report is a pure function of inputs.
SelectionReport sweep(const Graph &g, const SweepOptions &options, const ChainConfig &chain,
                      const PriorConfig &priors);

} // namespace blockselect
