#pragma once

namespace eulext {

/// Two-sided deviation bound for a sum of independent Bernoulli variables with
/// mean mu: P(|W - mu| >= eps * mu) <= min(1, 2 exp(-eps^2 mu / 4)).
///
/// Requires 0 < eps < 1/2 and mu >= 0; throws std::invalid_argument otherwise.
double chernoff_bound(double mu, double eps);

}  // namespace eulext
