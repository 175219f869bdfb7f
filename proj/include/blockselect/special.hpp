#pragma once

#include <cmath>

namespace blockselect {

// Reentrant ln Gamma(x) for x > 0.
inline double log_gamma(double x) {
    int sign = 0;
    return ::lgamma_r(x, &sign);
}

// x * ln(y) with the 0 * ln 0 = 0 convention.
inline double xlogy(double x, double y) { return x == 0.0 ? 0.0 : x * std::log(y); }

// ln of the Beta-Binomial marginal for m successes in N trials under Beta(a, b),
// without the binomial coefficient.
inline double log_beta_ratio(double m, double N, double a, double b) {
    return log_gamma(a + b) - log_gamma(a) - log_gamma(b) + log_gamma(m + a) + log_gamma(N - m + b) -
           log_gamma(N + a + b);
}

} // namespace blockselect
