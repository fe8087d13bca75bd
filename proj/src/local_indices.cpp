#include "linkpred/local_indices.hpp"

#include <algorithm>
#include <cmath>

namespace linkpred {

namespace {

constexpr double kZeroDenominator = 1e-9;

AdamicAdarDetail adamic_adar_at(const Graph& g, std::size_t i, std::size_t j) {
  AdamicAdarDetail out;
  auto a = g.adjacent(i);
  auto b = g.adjacent(j);
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib) {
      ++ia;
    } else if (*ib < *ia) {
      ++ib;
    } else {
      const std::size_t k = g.degree_at(*ia);
      if (k == 1) {
        ++out.skipped_degree_one;
      } else {
        out.score += 1.0 / std::log10(static_cast<double>(k));
      }
      ++ia;
      ++ib;
    }
  }
  return out;
}

}  // namespace

std::string_view to_string(LocalIndexKind kind) {
  switch (kind) {
    case LocalIndexKind::CommonNeighbors: return "cn";
    case LocalIndexKind::HubPromoted: return "hub_prom";
    case LocalIndexKind::HubDepressed: return "hub_depr";
    case LocalIndexKind::LHN1: return "lhn1";
    case LocalIndexKind::AdamicAdar: return "aa";
    case LocalIndexKind::LHN1Variant: return "lhn1_var";
  }
  return "?";
}

std::optional<LocalIndexKind> parse_local_index(std::string_view name) {
  for (LocalIndexKind kind : kAllLocalIndices) {
    if (to_string(kind) == name) return kind;
  }
  return std::nullopt;
}

double local_score_at(LocalIndexKind kind, const Graph& g, std::size_t i, std::size_t j) {
  if (kind == LocalIndexKind::AdamicAdar) return adamic_adar_at(g, i, j).score;

  const double shared = static_cast<double>(g.count_shared_at(i, j));
  const double ki = static_cast<double>(g.degree_at(i));
  const double kj = static_cast<double>(g.degree_at(j));
  switch (kind) {
    case LocalIndexKind::CommonNeighbors: return shared;
    case LocalIndexKind::HubPromoted: return shared / std::min(ki, kj);
    case LocalIndexKind::HubDepressed: return shared / std::max(ki, kj);
    case LocalIndexKind::LHN1: return shared / (ki * kj);
    case LocalIndexKind::LHN1Variant: {
      const double denom = std::log10(ki) + std::log10(kj);
      if (std::abs(denom) < kZeroDenominator) return 0.0;
      return shared / denom;
    }
    case LocalIndexKind::AdamicAdar: break;
  }
  return 0.0;
}

double local_score(LocalIndexKind kind, const Graph& g, NodeId u, NodeId v) {
  return local_score_at(kind, g, g.index_of(u), g.index_of(v));
}

double common_neighbors(const Graph& g, NodeId u, NodeId v) {
  return local_score(LocalIndexKind::CommonNeighbors, g, u, v);
}
double hub_promoted(const Graph& g, NodeId u, NodeId v) {
  return local_score(LocalIndexKind::HubPromoted, g, u, v);
}
double hub_depressed(const Graph& g, NodeId u, NodeId v) {
  return local_score(LocalIndexKind::HubDepressed, g, u, v);
}
double lhn1(const Graph& g, NodeId u, NodeId v) { return local_score(LocalIndexKind::LHN1, g, u, v); }
double adamic_adar(const Graph& g, NodeId u, NodeId v) {
  return local_score(LocalIndexKind::AdamicAdar, g, u, v);
}
double lhn1_variant(const Graph& g, NodeId u, NodeId v) {
  return local_score(LocalIndexKind::LHN1Variant, g, u, v);
}

AdamicAdarDetail adamic_adar_detail(const Graph& g, NodeId u, NodeId v) {
  return adamic_adar_at(g, g.index_of(u), g.index_of(v));
}

}  // namespace linkpred
