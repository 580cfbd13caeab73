#include "scfe/signed_graph.hpp"

#include <algorithm>
#include <string>

#include "scfe/errors.hpp"

namespace scfe {

namespace {

void check_pair(int n, const VertexPair& p) {
  if (p.u == p.v) throw PreconditionError("self-loop on vertex " + std::to_string(p.u));
  if (p.u < 1 || p.v > n)
    throw PreconditionError("vertex id out of range in pair {" + std::to_string(p.u) + "," +
                            std::to_string(p.v) + "}");
}

}  // namespace

PlainGraph::PlainGraph(int n, const std::vector<VertexPair>& edges)
    : n_(n), adj_(n + 1), matrix_(n + 1, std::vector<char>(n + 1, 0)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  for (const auto& e : edges) {
    check_pair(n, e);
    if (!edges_.insert(e).second) continue;
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
    matrix_[e.u][e.v] = matrix_[e.v][e.u] = 1;
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool PlainGraph::has_edge(Vertex a, Vertex b) const {
  if (a < 1 || b < 1 || a > n_ || b > n_) throw PreconditionError("vertex id out of range");
  return matrix_[a][b] != 0;
}

const std::vector<Vertex>& PlainGraph::neighbors(Vertex v) const {
  if (v < 1 || v > n_) throw PreconditionError("vertex id out of range");
  return adj_[v];
}

bool PlainGraph::is_complete() const {
  return edges_.size() == static_cast<std::size_t>(n_) * (n_ - 1) / 2;
}

SignedGraph::SignedGraph(int n, const std::vector<VertexPair>& positive,
                         const std::vector<VertexPair>& negative)
    : n_(n), pos_adj_(n + 1), neg_adj_(n + 1) {
  if (n < 1) throw PreconditionError("a signed graph needs at least one vertex");
  for (const auto& e : positive) {
    check_pair(n, e);
    pos_.insert(e);
  }
  for (const auto& e : negative) {
    check_pair(n, e);
    if (pos_.count(e))
      throw PreconditionError("pair {" + std::to_string(e.u) + "," + std::to_string(e.v) +
                              "} is both positive and negative");
    neg_.insert(e);
  }
  for (const auto& e : pos_) {
    pos_adj_[e.u].push_back(e.v);
    pos_adj_[e.v].push_back(e.u);
  }
  for (const auto& e : neg_) {
    neg_adj_[e.u].push_back(e.v);
    neg_adj_[e.v].push_back(e.u);
  }
  for (auto& a : pos_adj_) std::sort(a.begin(), a.end());
  for (auto& a : neg_adj_) std::sort(a.begin(), a.end());
}

void SignedGraph::check_vertex(Vertex i) const {
  if (i < 1 || i > n_) throw PreconditionError("vertex id " + std::to_string(i) + " out of range");
}

std::optional<Sign> SignedGraph::sign(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  if (a == b) return std::nullopt;
  VertexPair p(a, b);
  if (pos_.count(p)) return Sign::Positive;
  if (neg_.count(p)) return Sign::Negative;
  return std::nullopt;
}

std::size_t SignedGraph::missing_count() const {
  return static_cast<std::size_t>(n_) * (n_ - 1) / 2 - pos_.size() - neg_.size();
}

const std::vector<Vertex>& SignedGraph::positive_neighbors(Vertex i) const {
  check_vertex(i);
  return pos_adj_[i];
}

std::vector<Vertex> SignedGraph::closed_positive_neighbors(Vertex i) const {
  check_vertex(i);
  std::vector<Vertex> out = pos_adj_[i];
  out.insert(std::lower_bound(out.begin(), out.end(), i), i);
  return out;
}

const std::vector<Vertex>& SignedGraph::negative_neighbors(Vertex i) const {
  check_vertex(i);
  return neg_adj_[i];
}

std::vector<VertexPair> missing_pairs(const SignedGraph& g) {
  std::vector<VertexPair> out;
  for (Vertex u = 1; u <= g.order(); ++u)
    for (Vertex v = u + 1; v <= g.order(); ++v) {
      VertexPair p(u, v);
      if (!g.positive_edges().count(p) && !g.negative_edges().count(p)) out.push_back(p);
    }
  return out;
}

SignedGraph apply_completion(const SignedGraph& g, const Completion& c) {
  auto missing = missing_pairs(g);
  if (missing.size() != c.size())
    throw PreconditionError("completion does not cover exactly the missing pairs");
  std::vector<VertexPair> pos(g.positive_edges().begin(), g.positive_edges().end());
  std::vector<VertexPair> neg(g.negative_edges().begin(), g.negative_edges().end());
  for (const auto& p : missing) {
    auto it = c.find(p);
    if (it == c.end())
      throw PreconditionError("completion misses pair {" + std::to_string(p.u) + "," +
                              std::to_string(p.v) + "}");
    (it->second == Sign::Positive ? pos : neg).push_back(p);
  }
  return SignedGraph(g.order(), pos, neg);
}

PlainGraph positive_subgraph(const SignedGraph& g) {
  return PlainGraph(g.order(), {g.positive_edges().begin(), g.positive_edges().end()});
}

SignedGraph complete_from_positive(const PlainGraph& h) {
  std::vector<VertexPair> pos, neg;
  for (Vertex u = 1; u <= h.order(); ++u)
    for (Vertex v = u + 1; v <= h.order(); ++v)
      (h.has_edge(u, v) ? pos : neg).emplace_back(u, v);
  return SignedGraph(h.order(), pos, neg);
}

}  // namespace scfe
