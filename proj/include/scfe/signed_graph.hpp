#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <vector>

namespace scfe {

using Vertex = int;  // 1-based

struct VertexPair {
  Vertex u;
  Vertex v;

  VertexPair(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}
  auto operator<=>(const VertexPair&) const = default;
};

enum class Sign { Positive, Negative };

using Completion = std::map<VertexPair, Sign>;

class PlainGraph {
 public:
  explicit PlainGraph(int n, const std::vector<VertexPair>& edges = {});

  int order() const { return n_; }
  const std::set<VertexPair>& edges() const { return edges_; }
  std::size_t size() const { return edges_.size(); }
  bool has_edge(Vertex a, Vertex b) const;
  const std::vector<Vertex>& neighbors(Vertex v) const;
  bool is_complete() const;

  bool operator==(const PlainGraph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_;
  std::set<VertexPair> edges_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::vector<char>> matrix_;
};

class SignedGraph {
 public:
  SignedGraph(int n, const std::vector<VertexPair>& positive,
              const std::vector<VertexPair>& negative);

  int order() const { return n_; }
  const std::set<VertexPair>& positive_edges() const { return pos_; }
  const std::set<VertexPair>& negative_edges() const { return neg_; }
  std::optional<Sign> sign(Vertex a, Vertex b) const;
  std::size_t missing_count() const;
  bool is_complete() const { return missing_count() == 0; }

  const std::vector<Vertex>& positive_neighbors(Vertex i) const;
  std::vector<Vertex> closed_positive_neighbors(Vertex i) const;
  const std::vector<Vertex>& negative_neighbors(Vertex i) const;

  bool operator==(const SignedGraph& other) const {
    return n_ == other.n_ && pos_ == other.pos_ && neg_ == other.neg_;
  }

 private:
  void check_vertex(Vertex i) const;

  int n_;
  std::set<VertexPair> pos_;
  std::set<VertexPair> neg_;
  std::vector<std::vector<Vertex>> pos_adj_;
  std::vector<std::vector<Vertex>> neg_adj_;
};

std::vector<VertexPair> missing_pairs(const SignedGraph& g);
SignedGraph apply_completion(const SignedGraph& g, const Completion& c);
PlainGraph positive_subgraph(const SignedGraph& g);

// The complete signed graph whose positive part is h.
SignedGraph complete_from_positive(const PlainGraph& h);

}  // namespace scfe
