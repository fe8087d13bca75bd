#include "linkpred/alias.hpp"

#include <numeric>

#include "linkpred/error.hpp"

namespace linkpred {

AliasArrays make_alias(std::span<const double> weights) {
  const std::size_t n = weights.size();
  if (n == 0) throw ValidationError("alias table needs at least one outcome");
  const double total = std::accumulate(weights.begin(), weights.end(), 0.0);
  if (!(total > 0.0)) throw ValidationError("alias weights must have positive sum");

  AliasArrays out;
  out.prob.assign(n, 0.0);
  out.alias.assign(n, 0);
  std::vector<double> scaled(n);
  std::vector<std::uint32_t> small;
  std::vector<std::uint32_t> large;
  for (std::size_t i = 0; i < n; ++i) {
    scaled[i] = weights[i] / total * static_cast<double>(n);
    (scaled[i] < 1.0 ? small : large).push_back(static_cast<std::uint32_t>(i));
  }
  while (!small.empty() && !large.empty()) {
    const std::uint32_t l = small.back();
    small.pop_back();
    const std::uint32_t g = large.back();
    large.pop_back();
    out.prob[l] = scaled[l];
    out.alias[l] = g;
    scaled[g] = (scaled[g] + scaled[l]) - 1.0;
    (scaled[g] < 1.0 ? small : large).push_back(g);
  }
  for (std::uint32_t g : large) out.prob[g] = 1.0;
  for (std::uint32_t l : small) out.prob[l] = 1.0;
  return out;
}

std::vector<double> alias_reconstruct(const AliasArrays& a) {
  const std::size_t n = a.size();
  std::vector<double> mass(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    mass[i] += a.prob[i];
    mass[a.alias[i]] += 1.0 - a.prob[i];
  }
  for (double& m : mass) m /= static_cast<double>(n);
  return mass;
}

}  // namespace linkpred
