#pragma once
#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "linkpred/graph.hpp"

namespace linkpred {

/** The closed-form neighborhood similarity indices. */
enum class LocalIndexKind {
  CommonNeighbors,
  HubPromoted,
  HubDepressed,
  LHN1,
  AdamicAdar,
  LHN1Variant,
};

inline constexpr std::array<LocalIndexKind, 6> kAllLocalIndices = {
    LocalIndexKind::CommonNeighbors, LocalIndexKind::HubPromoted, LocalIndexKind::HubDepressed,
    LocalIndexKind::LHN1,            LocalIndexKind::AdamicAdar,  LocalIndexKind::LHN1Variant,
};

/** CLI label: cn, hub_prom, hub_depr, lhn1, aa, lhn1_var. */
std::string_view to_string(LocalIndexKind kind);
std::optional<LocalIndexKind> parse_local_index(std::string_view name);

// All scores take node ids of g; unknown ids throw LookupError.

/** |N(u) ∩ N(v)| */
double common_neighbors(const Graph& g, NodeId u, NodeId v);
/** |N(u) ∩ N(v)| / min(k_u, k_v) */
double hub_promoted(const Graph& g, NodeId u, NodeId v);
/** |N(u) ∩ N(v)| / max(k_u, k_v) */
double hub_depressed(const Graph& g, NodeId u, NodeId v);
/** |N(u) ∩ N(v)| / (k_u k_v) */
double lhn1(const Graph& g, NodeId u, NodeId v);
/** Σ_{w ∈ N(u) ∩ N(v)} 1 / log10(k_w), skipping degree-1 terms. */
double adamic_adar(const Graph& g, NodeId u, NodeId v);
/** |N(u) ∩ N(v)| / log10(k_u k_v), or 0 when the denominator is below 1e-9. */
double lhn1_variant(const Graph& g, NodeId u, NodeId v);

struct AdamicAdarDetail {
  double score = 0.0;
  /** Common neighbors skipped for having degree 1. Always 0 on a simple graph. */
  std::size_t skipped_degree_one = 0;
};
AdamicAdarDetail adamic_adar_detail(const Graph& g, NodeId u, NodeId v);

double local_score(LocalIndexKind kind, const Graph& g, NodeId u, NodeId v);
/** Same as local_score but on dense indices; no lookup. */
double local_score_at(LocalIndexKind kind, const Graph& g, std::size_t i, std::size_t j);

}  // namespace linkpred
