#pragma once
#include <cstddef>
#include <unordered_map>

#include "linkpred/graph.hpp"
#include "linkpred/matrix.hpp"

namespace linkpred {

/**
 * Random walk with restart over a fixed graph.
 *
 * `resolvent` is M = (1 - c) (I - c Pᵀ)⁻¹; column x of M is the stationary
 * visiting distribution of a surfer that restarts at x, so every column sums
 * to 1.
 */
struct RwrModel {
  double c = 0.0;
  Matrix transition;
  Matrix resolvent;
  std::unordered_map<NodeId, std::size_t> index;
};

/** Row-stochastic P with P(i, j) = 1/k_i for each edge (i, j). Dense indices of g. */
Matrix build_transition(const Graph& g);

/** Requires 0 <= c < 1. Uses the parallel resolvent kernel. */
RwrModel build_rwr(const Graph& g, double c);

/**
 * (1 - c) (I - c Pᵀ)⁻¹ by Gauss-Jordan elimination on [I - c Pᵀ | I] with
 * partial pivoting; the row updates for each pivot run under OpenMP.
 */
Matrix rwr_resolvent(const Matrix& transition, double c);

/**
 * Serial reference: LU factorization with partial pivoting, then one
 * forward/back substitution per identity column. Kept for cross-checking
 * `rwr_resolvent`.
 */
Matrix rwr_resolvent_serial(const Matrix& transition, double c);

/** M(u, v) + M(v, u). Throws LookupError for nodes outside the model. */
double rwr_score(const RwrModel& model, NodeId u, NodeId v);

}  // namespace linkpred
