#include "linkpred/skipgram.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>

#include <omp.h>

#include "linkpred/alias.hpp"
#include "linkpred/error.hpp"
#include "linkpred/format.hpp"

namespace linkpred {

namespace {

constexpr double kMaxExponent = 30.0;

double clamp_z(double z) { return std::clamp(z, -kMaxExponent, kMaxExponent); }
double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-clamp_z(z))); }
/** -log σ(z) */
double neg_log_sigmoid(double z) { return std::log1p(std::exp(-clamp_z(z))); }

double dot(const double* a, const double* b, std::size_t n) {
  double s = 0.0;
  for (std::size_t i = 0; i < n; ++i) s += a[i] * b[i];
  return s;
}

/**
 * In-place SGNS step on raw rows. `grad` is caller scratch of size dim and
 * `coef` scratch of size 1 + negatives. All dot products use the parameters
 * as they were on entry, so this is an exact gradient step even when a row
 * repeats among the targets.
 */
double sgns_update(EmbeddingModel& m, std::size_t center, std::size_t context,
                   std::span<const std::size_t> negatives, double lr, std::vector<double>& grad,
                   std::vector<double>& coef) {
  const std::size_t d = m.dim;
  double* v = m.input.data() + center * d;
  std::fill(grad.begin(), grad.end(), 0.0);
  coef.resize(1 + negatives.size());

  double loss = 0.0;
  for (std::size_t t = 0; t <= negatives.size(); ++t) {
    const std::size_t row = t == 0 ? context : negatives[t - 1];
    const double* u = m.output.data() + row * d;
    const double z = dot(u, v, d);
    const double label = t == 0 ? 1.0 : 0.0;
    loss += t == 0 ? neg_log_sigmoid(z) : neg_log_sigmoid(-z);
    const double g = sigmoid(z) - label;
    coef[t] = g;
    for (std::size_t i = 0; i < d; ++i) grad[i] += g * u[i];
  }
  for (std::size_t t = 0; t <= negatives.size(); ++t) {
    const std::size_t row = t == 0 ? context : negatives[t - 1];
    double* u = m.output.data() + row * d;
    const double step = lr * coef[t];
    for (std::size_t i = 0; i < d; ++i) u[i] -= step * v[i];
  }
  for (std::size_t i = 0; i < d; ++i) v[i] -= lr * grad[i];
  return loss;
}

}  // namespace

std::size_t EmbeddingModel::row_of(NodeId u) const {
  auto it = vocab.find(u);
  if (it == vocab.end()) throw LookupError("unembedded node " + std::to_string(u));
  return it->second;
}

void TrainConfig::validate() const {
  if (dim < 1) throw ValidationError("embedding dimension d must be >= 1");
  if (window < 1) throw ValidationError("context window k must be >= 1");
  if (epochs < 1) throw ValidationError("epochs must be >= 1");
  if (negatives < 1) throw ValidationError("negatives must be >= 1");
  if (!(lr_final > 0.0) || !(lr_initial >= lr_final)) {
    throw ValidationError("learning rates must satisfy lr_initial >= lr_final > 0");
  }
}

std::vector<std::pair<NodeId, NodeId>> pair_stream(std::span<const Walk> corpus, std::size_t window) {
  std::vector<std::pair<NodeId, NodeId>> out;
  for (const Walk& w : corpus) {
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t lo = i >= window ? i - window : 0;
      const std::size_t hi = std::min(n - 1, i + window);
      for (std::size_t j = lo; j <= hi; ++j) {
        if (j != i) out.emplace_back(w[i], w[j]);
      }
    }
  }
  return out;
}

EmbeddingModel make_vocabulary(std::span<const Walk> corpus, std::size_t dim) {
  EmbeddingModel m;
  m.dim = dim;
  for (const Walk& w : corpus) {
    for (NodeId u : w) {
      if (m.vocab.try_emplace(u, m.nodes.size()).second) m.nodes.push_back(u);
    }
  }
  m.input.assign(m.nodes.size() * dim, 0.0);
  m.output.assign(m.nodes.size() * dim, 0.0);
  return m;
}

double sgns_loss(const EmbeddingModel& m, std::size_t center, std::size_t context,
                 std::span<const std::size_t> negatives) {
  const double* v = m.input.data() + center * m.dim;
  double loss = neg_log_sigmoid(dot(m.output.data() + context * m.dim, v, m.dim));
  for (std::size_t r : negatives) loss += neg_log_sigmoid(-dot(m.output.data() + r * m.dim, v, m.dim));
  return loss;
}

SgnsGradient sgns_gradient(const EmbeddingModel& m, std::size_t center, std::size_t context,
                           std::span<const std::size_t> negatives) {
  const std::size_t d = m.dim;
  const double* v = m.input.data() + center * d;
  SgnsGradient g;
  g.center.assign(d, 0.0);
  for (std::size_t t = 0; t <= negatives.size(); ++t) {
    const std::size_t row = t == 0 ? context : negatives[t - 1];
    const double* u = m.output.data() + row * d;
    const double coef = sigmoid(dot(u, v, d)) - (t == 0 ? 1.0 : 0.0);
    std::vector<double> du(d);
    for (std::size_t i = 0; i < d; ++i) {
      g.center[i] += coef * u[i];
      du[i] = coef * v[i];
    }
    g.outputs.emplace_back(row, std::move(du));
  }
  return g;
}

double sgns_step(EmbeddingModel& m, std::size_t center, std::size_t context,
                 std::span<const std::size_t> negatives, double lr) {
  std::vector<double> grad(m.dim);
  std::vector<double> coef;
  return sgns_update(m, center, context, negatives, lr, grad, coef);
}

TrainResult train(std::span<const Walk> corpus, const TrainConfig& config) {
  config.validate();
  if (corpus.empty()) throw ValidationError("cannot train on an empty corpus");

  TrainResult result;
  EmbeddingModel& m = result.model;
  m = make_vocabulary(corpus, config.dim);
  const std::size_t d = config.dim;

  Rng rng(config.seed);
  const double half_width = 0.5 / static_cast<double>(d);
  for (double& x : m.input) x = (uniform01(rng) * 2.0 - 1.0) * half_width;

  std::vector<double> noise_weights(m.rows(), 0.0);
  for (const Walk& w : corpus) {
    for (NodeId u : w) noise_weights[m.vocab.at(u)] += 1.0;
  }
  for (double& w : noise_weights) w = std::pow(w, 0.75);
  const AliasArrays noise = make_alias(noise_weights);

  std::vector<RowPair> pairs;
  for (const auto& [a, b] : pair_stream(corpus, config.window)) {
    pairs.emplace_back(static_cast<std::uint32_t>(m.vocab.at(a)), static_cast<std::uint32_t>(m.vocab.at(b)));
  }
  if (pairs.empty()) {
    result.epoch_loss.assign(config.epochs, 0.0);
    return result;
  }

  const double total_steps = static_cast<double>(pairs.size() * config.epochs);
  const double lr_span = config.lr_initial - config.lr_final;
  auto lr_at = [&](std::size_t step) {
    return config.lr_initial - lr_span * static_cast<double>(step) / total_steps;
  };

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[uniform_index(rng, i)]);
    const std::size_t base = epoch * pairs.size();
    double epoch_loss = 0.0;

    if (config.deterministic) {
      std::vector<double> grad(d);
      std::vector<double> coef;
      std::vector<std::size_t> negs;
      for (std::size_t s = 0; s < pairs.size(); ++s) {
        const auto [center, context] = pairs[s];
        negs.clear();
        for (std::size_t k = 0; k < config.negatives; ++k) {
          const std::size_t r = alias_draw_index(noise, rng);
          if (r != context) negs.push_back(r);
        }
        epoch_loss += sgns_update(m, center, context, negs, lr_at(base + s), grad, coef);
      }
    } else {
      const std::uint64_t epoch_seed = rng();
      #pragma omp parallel reduction(+ : epoch_loss)
      {
        Rng local(mix_seed(epoch_seed, static_cast<std::uint64_t>(omp_get_thread_num())));
        std::vector<double> grad(d);
        std::vector<double> coef;
        std::vector<std::size_t> negs;
        #pragma omp for schedule(static)
        for (std::ptrdiff_t ss = 0; ss < static_cast<std::ptrdiff_t>(pairs.size()); ++ss) {
          const auto s = static_cast<std::size_t>(ss);
          const auto [center, context] = pairs[s];
          negs.clear();
          for (std::size_t k = 0; k < config.negatives; ++k) {
            const std::size_t r = alias_draw_index(noise, local);
            if (r != context) negs.push_back(r);
          }
          epoch_loss += sgns_update(m, center, context, negs, lr_at(base + s), grad, coef);
        }
      }
    }
    result.epoch_loss.push_back(epoch_loss / static_cast<double>(pairs.size()));
  }
  for (double x : m.input) {
    if (!std::isfinite(x)) throw NumericError("embedding training diverged");
  }
  return result;
}

void save_embedding(const EmbeddingModel& m, std::ostream& out) {
  out << m.rows() << ' ' << m.dim << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    out << m.nodes[r];
    for (double x : m.input_row(r)) out << ' ' << format_double(x);
    out << '\n';
  }
}

void save_embedding_file(const EmbeddingModel& m, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("cannot write '" + path.string() + "'");
  save_embedding(m, out);
}

namespace {

std::vector<std::string_view> tokens_of(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto space = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (i < line.size()) {
    while (i < line.size() && space(line[i])) ++i;
    std::size_t j = i;
    while (j < line.size() && !space(line[j])) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

template <class T>
T parse_number(std::string_view tok, std::size_t line_no) {
  T value{};
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError(line_no, "bad number '" + std::string(tok) + "'");
  }
  return value;
}

}  // namespace

EmbeddingModel load_embedding(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t count = 0;
  EmbeddingModel m;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++line_no;
    auto toks = tokens_of(line);
    if (toks.empty()) continue;
    if (!have_header) {
      if (toks.size() != 2) throw ParseError(line_no, "header must be '<count> <dimension>'");
      count = parse_number<std::size_t>(toks[0], line_no);
      m.dim = parse_number<std::size_t>(toks[1], line_no);
      have_header = true;
      continue;
    }
    if (toks.size() != m.dim + 1) {
      throw ParseError(line_no, "row has " + std::to_string(toks.size() - 1) + " values, header says " +
                                    std::to_string(m.dim));
    }
    if (m.rows() == count) throw ParseError(line_no, "more rows than the header count");
    const auto id = parse_number<NodeId>(toks[0], line_no);
    if (!m.vocab.try_emplace(id, m.nodes.size()).second) {
      throw ParseError(line_no, "duplicate node " + std::to_string(id));
    }
    m.nodes.push_back(id);
    for (std::size_t i = 1; i < toks.size(); ++i) m.input.push_back(parse_number<double>(toks[i], line_no));
  }
  if (!have_header) throw ParseError(line_no, "missing header");
  if (m.rows() != count) {
    throw ParseError(line_no, "expected " + std::to_string(count) + " rows, found " + std::to_string(m.rows()));
  }
  return m;
}

EmbeddingModel load_embedding_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path.string() + "'");
  return load_embedding(in);
}

double cosine_similarity(std::span<const double> a, std::span<const double> b) {
  const double na = std::sqrt(dot(a.data(), a.data(), a.size()));
  const double nb = std::sqrt(dot(b.data(), b.data(), b.size()));
  if (na == 0.0 || nb == 0.0) return 0.0;
  return dot(a.data(), b.data(), a.size()) / (na * nb);
}

}  // namespace linkpred
