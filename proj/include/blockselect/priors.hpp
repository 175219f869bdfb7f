#pragma once

#include <string>

namespace blockselect {

// Conjugate-prior hyperparameters shared by every entry of a family:
// Beta(alpha, beta) on each edge probability, Dirichlet(delta) on block
// weights, Dirichlet(gamma) on the within-block degree propensities.
struct PriorConfig {
    double alpha = 1.0;
    double beta = 1.0;
    double delta = 1.0;
    double gamma = 1.0;

    static PriorConfig uniform() { return {1.0, 1.0, 1.0, 1.0}; }
    static PriorConfig jeffreys() { return {0.5, 0.5, 0.5, 0.5}; }

    // "uniform", "jeffreys"; throws InputError otherwise.
    static PriorConfig preset(const std::string &name);

    // Throws InputError unless every hyperparameter is finite and positive.
    void validate() const;

    friend bool operator==(const PriorConfig &, const PriorConfig &) = default;
};

} // namespace blockselect
