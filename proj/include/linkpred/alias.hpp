#pragma once
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "linkpred/random.hpp"

namespace linkpred {

/**
 * Vose alias arrays for one discrete distribution over n outcomes.
 * Outcome i keeps mass prob[i] / n in its own column; the rest of the column
 * is redirected to alias[i].
 */
struct AliasArrays {
  std::vector<double> prob;
  std::vector<std::uint32_t> alias;

  std::size_t size() const noexcept { return prob.size(); }
};

/**
 * Vose construction from unnormalized positive weights: normalize and scale
 * by n, split into small (< 1) and large worklists, pair each small column
 * with a large donor, then set whatever remains on either list to 1.
 */
AliasArrays make_alias(std::span<const double> weights);

/** O(1) draw of an outcome index: fair column, then a biased coin. */
inline std::size_t alias_draw_index(const AliasArrays& a, Rng& rng) {
  const std::size_t i = uniform_index(rng, a.size());
  const double coin = uniform01(rng);
  return coin < a.prob[i] ? i : a.alias[i];
}

/**
 * Probability of each outcome implied by the arrays:
 * (prob[i] + Σ_{j: alias[j] = i} (1 - prob[j])) / n.
 */
std::vector<double> alias_reconstruct(const AliasArrays& a);

}  // namespace linkpred
