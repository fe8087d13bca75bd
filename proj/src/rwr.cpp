#include "linkpred/rwr.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "linkpred/error.hpp"

namespace linkpred {

namespace {

constexpr double kSingularPivot = 1e-300;

void check_c(double c) {
  if (!(c >= 0.0 && c < 1.0)) throw ValidationError("restart parameter c must lie in [0, 1)");
}

/** I - c Pᵀ */
Matrix system_matrix(const Matrix& transition, double c) {
  const std::size_t n = transition.size();
  Matrix a(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - c * transition(j, i);
  }
  return a;
}

}  // namespace

Matrix build_transition(const Graph& g) {
  const std::size_t n = g.num_nodes();
  Matrix p(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t k = g.degree_at(i);
    if (k == 0) throw NumericError("degree-zero node " + std::to_string(g.node_at(i)));
    const double w = 1.0 / static_cast<double>(k);
    for (std::size_t j : g.adjacent(i)) p(i, j) = w;
  }
  return p;
}

Matrix rwr_resolvent(const Matrix& transition, double c) {
  check_c(c);
  const std::size_t n = transition.size();
  Matrix a = system_matrix(transition, c);
  Matrix inv = Matrix::identity(n);

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(a(r, k)) > std::abs(a(pivot, k))) pivot = r;
    }
    if (std::abs(a(pivot, k)) < kSingularPivot) throw NumericError("singular RWR system");
    if (pivot != k) {
      std::swap_ranges(a.row(k), a.row(k) + n, a.row(pivot));
      std::swap_ranges(inv.row(k), inv.row(k) + n, inv.row(pivot));
    }
    const double scale = 1.0 / a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) *= scale;
      inv(k, j) *= scale;
    }
    const double* pivot_a = a.row(k);
    const double* pivot_inv = inv.row(k);

    #pragma omp parallel for schedule(static)
    for (std::ptrdiff_t rr = 0; rr < static_cast<std::ptrdiff_t>(n); ++rr) {
      const auto r = static_cast<std::size_t>(rr);
      if (r == k) continue;
      const double f = a(r, k);
      if (f == 0.0) continue;
      double* row_a = a.row(r);
      double* row_inv = inv.row(r);
      for (std::size_t j = k; j < n; ++j) row_a[j] -= f * pivot_a[j];
      for (std::size_t j = 0; j < n; ++j) row_inv[j] -= f * pivot_inv[j];
    }
  }

  const double prefactor = 1.0 - c;
  for (std::size_t i = 0; i < n; ++i) {
    double* row = inv.row(i);
    for (std::size_t j = 0; j < n; ++j) row[j] *= prefactor;
  }
  return inv;
}

Matrix rwr_resolvent_serial(const Matrix& transition, double c) {
  check_c(c);
  const std::size_t n = transition.size();
  Matrix lu = system_matrix(transition, c);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r) {
      if (std::abs(lu(r, k)) > std::abs(lu(pivot, k))) pivot = r;
    }
    if (std::abs(lu(pivot, k)) < kSingularPivot) throw NumericError("singular RWR system");
    if (pivot != k) {
      std::swap_ranges(lu.row(k), lu.row(k) + n, lu.row(pivot));
      std::swap(perm[k], perm[pivot]);
    }
    for (std::size_t r = k + 1; r < n; ++r) {
      lu(r, k) /= lu(k, k);
      const double f = lu(r, k);
      for (std::size_t j = k + 1; j < n; ++j) lu(r, j) -= f * lu(k, j);
    }
  }

  Matrix out(n);
  std::vector<double> y(n);
  for (std::size_t col = 0; col < n; ++col) {
    // Solve L U x = P e_col.
    for (std::size_t i = 0; i < n; ++i) {
      double s = perm[i] == col ? 1.0 : 0.0;
      for (std::size_t j = 0; j < i; ++j) s -= lu(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t ii = n; ii-- > 0;) {
      double s = y[ii];
      for (std::size_t j = ii + 1; j < n; ++j) s -= lu(ii, j) * y[j];
      y[ii] = s / lu(ii, ii);
    }
    for (std::size_t i = 0; i < n; ++i) out(i, col) = (1.0 - c) * y[i];
  }
  return out;
}

RwrModel build_rwr(const Graph& g, double c) {
  check_c(c);
  RwrModel model;
  model.c = c;
  model.transition = build_transition(g);
  model.resolvent = rwr_resolvent(model.transition, c);
  for (std::size_t i = 0; i < g.num_nodes(); ++i) model.index.emplace(g.node_at(i), i);
  for (double x : model.resolvent.data()) {
    if (!std::isfinite(x)) throw NumericError("non-finite entry in RWR resolvent");
  }
  return model;
}

double rwr_score(const RwrModel& model, NodeId u, NodeId v) {
  auto iu = model.index.find(u);
  auto iv = model.index.find(v);
  if (iu == model.index.end()) throw LookupError("unknown node " + std::to_string(u));
  if (iv == model.index.end()) throw LookupError("unknown node " + std::to_string(v));
  return model.resolvent(iu->second, iv->second) + model.resolvent(iv->second, iu->second);
}

}  // namespace linkpred
