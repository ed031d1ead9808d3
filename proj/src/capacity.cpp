#include "zecap/capacity.hpp"

#include <cmath>
#include <stdexcept>

#include "zecap/errors.hpp"

namespace zecap {

CapacityBounds capacity_bounds(const Graph& g, const CapacityOptions& opts) {
  if (opts.n_max == 0) throw std::invalid_argument("n_max must be at least 1");
  CapacityBounds out;

  for (std::size_t n = 1; n <= opts.n_max; ++n) {
    RateEntry entry;
    entry.n = n;
    try {
      const Graph power = strong_power(g, n, opts.max_vertices);
      IndependentSet is = independence_number(power, opts.max_vertices);
      entry.alpha = is.alpha;
      entry.rate = is.alpha > 0 ? std::log2(static_cast<double>(is.alpha)) / static_cast<double>(n) : 0.0;
      entry.witness = std::move(is.witness);
      if (!out.best_n || *entry.rate > out.best_lower) {
        out.best_lower = *entry.rate;
        out.best_n = n;
      }
    } catch (const Error& e) {
      entry.error = e.what();
    }
    out.per_n.push_back(std::move(entry));
  }

  try {
    const ThetaResult t = lovasz_theta(g, opts.theta);
    out.theta = t.value;
    out.theta_upper = std::log2(t.value);
    out.theta_gap = t.gap;
    out.consistent = out.best_lower <= *out.theta_upper + opts.sandwich_tol;
  } catch (const Error& e) {
    out.theta_error = e.what();
  }
  return out;
}

}  // namespace zecap
