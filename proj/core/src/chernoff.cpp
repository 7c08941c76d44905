#include "eulext/chernoff.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace eulext {

double chernoff_bound(double mu, double eps) {
  if (!(eps > 0.0 && eps < 0.5)) throw std::invalid_argument("eps must lie in (0, 1/2)");
  if (!(mu >= 0.0)) throw std::invalid_argument("mu must be non-negative");
  return std::min(1.0, 2.0 * std::exp(-eps * eps * mu / 4.0));
}

}  // namespace eulext
