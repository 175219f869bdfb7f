#include "blockselect/priors.hpp"

#include "blockselect/errors.hpp"

#include <cmath>

namespace blockselect {

PriorConfig PriorConfig::preset(const std::string &name) {
    if (name == "uniform")
        return uniform();
    if (name == "jeffreys")
        return jeffreys();
    throw InputError("unknown prior preset '" + name + "'");
}

void PriorConfig::validate() const {
    for (double v : {alpha, beta, delta, gamma})
        if (!std::isfinite(v) || v <= 0.0)
            throw InputError("prior hyperparameters must be finite and positive");
}

} // namespace blockselect
