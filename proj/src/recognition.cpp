#include "scfe/recognition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "scfe/errors.hpp"
#include "scfe/log.hpp"

namespace scfe {

bool is_proper_word(const EndpointWord& w) {
  const long len = static_cast<long>(w.size());
  if (len % 2) return false;
  const int n = static_cast<int>(len / 2);
  std::vector<long> lpos(n + 1, -1), rpos(n + 1, -1);
  for (long i = 0; i < len; ++i) {
    const auto& e = w[i];
    if (e.v < 1 || e.v > n) return false;
    long& slot = e.start ? lpos[e.v] : rpos[e.v];
    if (slot >= 0) return false;
    slot = i;
  }
  // arc j nests in arc i when both its ends fall strictly inside i, start first
  for (Vertex i = 1; i <= n; ++i) {
    auto rel = [&](long p) { return ((p - lpos[i]) % len + len) % len; };
    for (Vertex j = 1; j <= n; ++j)
      if (j != i && rel(lpos[j]) < rel(rpos[j]) && rel(rpos[j]) < rel(rpos[i])) return false;
  }
  return true;
}

ArcModel realize_word(const EndpointWord& w) {
  const int n = static_cast<int>(w.size()) / 2;
  const long den = 2L * n + 1;
  std::vector<long> lpos(n + 1, -1), rpos(n + 1, -1);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& e = w[i];
    if (e.v < 1 || e.v > n) throw PreconditionError("endpoint word names an unknown arc");
    long& slot = e.start ? lpos[e.v] : rpos[e.v];
    if (slot >= 0) throw PreconditionError("endpoint word repeats a symbol");
    slot = static_cast<long>(i);
  }
  ArcModel m;
  for (Vertex v = 1; v <= n; ++v) {
    Angle s(lpos[v], den);
    Rational len = forward(s, Angle(rpos[v], den));
    m.arcs.emplace_back(s, len, true, true);
  }
  return m;
}

bool verify_model(const PlainGraph& h, const ArcModel& m) {
  if (h.order() != m.order()) throw PreconditionError("model and graph have different vertex sets");
  return intersection_graph(m) == h && is_proper_model(m);
}

namespace {

using Matrix = std::vector<std::vector<char>>;
// (local index, is start)
using LocalWord = std::vector<std::pair<int, bool>>;

int count_row(const Matrix& adj, int v) {
  return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1));
}

// Intersection test on a word with distinct endpoints, against adj; also checks properness.
bool word_matches(const LocalWord& w, const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  const int len = 2 * n;
  if (static_cast<int>(w.size()) != len) return false;
  std::vector<int> lp(n, -1), rp(n, -1);
  for (int i = 0; i < len; ++i) (w[i].second ? lp : rp)[w[i].first] = i;
  auto inside = [&](int x, int v) {
    int off = ((x - lp[v]) % len + len) % len;
    int span = ((rp[v] - lp[v]) % len + len) % len;
    return off <= span;
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      bool meet = inside(lp[u], v) || inside(lp[v], u);
      if (meet != (adj[u][v] != 0)) return false;
    }
  std::vector<int> ls, rs;
  for (const auto& [v, s] : w) (s ? ls : rs).push_back(v);
  auto it = std::find(rs.begin(), rs.end(), ls.front());
  std::rotate(rs.begin(), it, rs.end());
  return ls == rs;
}

// order[i] is the vertex at round position i; e[i] is the lifted index of the last
// vertex whose start lies in arc order[i].
bool runs_are_monotone(const std::vector<int>& e) {
  const int n = static_cast<int>(e.size());
  for (int i = 0; i < n; ++i) {
    if (e[i] < i || e[i] > i + n - 1) return false;
    if (i + 1 < n && e[i] > e[i + 1]) return false;
  }
  return e[n - 1] <= e[0] + n;
}

LocalWord word_from_runs(const std::vector<int>& order, const std::vector<int>& e) {
  const int n = static_cast<int>(order.size());
  std::vector<std::vector<int>> wrapped(n), plain(n);
  for (int i = 0; i < n; ++i) (e[i] >= n ? wrapped[e[i] - n] : plain[e[i]]).push_back(i);
  LocalWord w;
  for (int m = 0; m < n; ++m) {
    w.emplace_back(order[m], true);
    for (int i : wrapped[m]) w.emplace_back(order[i], false);
    for (int i : plain[m]) w.emplace_back(order[i], false);
  }
  return w;
}

std::optional<LocalWord> word_from_order(const std::vector<int>& order, const Matrix& adj) {
  const int n = static_cast<int>(order.size());
  std::vector<int> reach(n, -1);
  std::vector<char> universal(n, 0);
  for (int i = 0; i < n; ++i) {
    int v = order[i];
    int deg = count_row(adj, v);
    if (deg == n - 1) {
      universal[i] = 1;
      continue;
    }
    int r = 0;
    while (adj[v][order[(i + r + 1) % n]]) ++r;
    int l = 0;
    while (adj[v][order[((i - l - 1) % n + n) % n]]) ++l;
    if (l + r != deg) return std::nullopt;
    reach[i] = r;
  }
  for (int i = 0; i < n; ++i) {
    if (!universal[i]) continue;
    int need = 0;
    for (int k = 1; k < n; ++k) {
      int j = (i + k) % n;
      bool covered = !universal[j] && reach[j] >= n - k;
      if (!covered) need = k;
    }
    int prev = (i + n - 1) % n;
    if (!universal[prev]) need = std::max(need, reach[prev] - 1);
    reach[i] = need;
  }
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = i + reach[i];
  if (!runs_are_monotone(e)) return std::nullopt;
  LocalWord w = word_from_runs(order, e);
  if (!word_matches(w, adj)) return std::nullopt;
  return w;
}

std::vector<std::vector<int>> components(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> members{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t q = 0; q < members.size(); ++q)
      for (int v = 0; v < n; ++v)
        if (adj[members[q]][v] && comp[v] < 0) {
          comp[v] = comp[s];
          members.push_back(v);
        }
    std::sort(members.begin(), members.end());
    out.push_back(members);
  }
  return out;
}

// Straight ordering of a twin-free connected proper interval graph, as a linear word.
std::optional<LocalWord> interval_word(const std::vector<int>& comp, const Matrix& adj) {
  const int c = static_cast<int>(comp.size());
  const int n = static_cast<int>(adj.size());
  std::vector<int> closed_deg(n);
  for (int v : comp) closed_deg[v] = count_row(adj, v) + 1;
  for (int s : comp) {
    std::vector<int> order{s};
    std::vector<int> pos(n, -1);
    pos[s] = 0;
    while (static_cast<int>(order.size()) < c) {
      int best = -1, best_key = 0;
      for (int x : comp) {
        if (pos[x] >= 0) continue;
        int first = -1;
        for (int t = 0; t < static_cast<int>(order.size()); ++t)
          if (adj[x][order[t]]) {
            first = t;
            break;
          }
        if (first < 0) continue;
        if (best < 0 || first < best_key ||
            (first == best_key && closed_deg[x] < closed_deg[best])) {
          best = x;
          best_key = first;
        }
      }
      if (best < 0) break;
      pos[best] = static_cast<int>(order.size());
      order.push_back(best);
    }
    if (static_cast<int>(order.size()) < c) continue;

    std::vector<int> lo(c), hi(c);
    bool ok = true;
    for (int t = 0; t < c && ok; ++t) {
      int v = order[t];
      lo[t] = hi[t] = t;
      while (lo[t] > 0 && adj[v][order[lo[t] - 1]]) --lo[t];
      while (hi[t] + 1 < c && adj[v][order[hi[t] + 1]]) ++hi[t];
      if (hi[t] - lo[t] + 1 != closed_deg[v]) ok = false;
      if (t > 0 && (lo[t] < lo[t - 1] || hi[t] < hi[t - 1])) ok = false;
    }
    if (!ok) continue;
    LocalWord w;
    for (int t = 0; t < c; ++t) {
      w.emplace_back(order[t], true);
      for (int i = 0; i < c; ++i)
        if (hi[i] == t) w.emplace_back(order[i], false);
    }
    return w;
  }
  return std::nullopt;
}

bool complement_bipartite(const Matrix& adj, std::vector<int>& side) {
  const int n = static_cast<int>(adj.size());
  side.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    if (side[s] >= 0) continue;
    side[s] = 0;
    std::vector<int> queue{s};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      for (int v = 0; v < n; ++v) {
        if (v == u || adj[u][v]) continue;
        if (side[v] < 0) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          return false;
        }
      }
    }
  }
  return true;
}

// Transitive orientation by implication classes; out[a][b] = 1 means a -> b.
std::optional<Matrix> transitive_orientation(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  Matrix cur = adj;
  Matrix out(n, std::vector<char>(n, 0));
  std::vector<std::vector<int>> mark(n, std::vector<int>(n, -1));
  int cls = 0;
  for (int a0 = 0; a0 < n; ++a0)
    for (int b0 = a0 + 1; b0 < n; ++b0) {
      if (!cur[a0][b0]) continue;
      std::vector<std::pair<int, int>> members{{a0, b0}};
      mark[a0][b0] = cls;
      for (std::size_t q = 0; q < members.size(); ++q) {
        auto [a, b] = members[q];
        auto visit = [&](int x, int y) {
          if (mark[x][y] == cls) return;
          mark[x][y] = cls;
          members.emplace_back(x, y);
        };
        for (int c = 0; c < n; ++c) {
          if (c == a || c == b) continue;
          if (cur[a][c] && !cur[b][c]) visit(a, c);
          if (cur[c][b] && !cur[a][c]) visit(c, b);
        }
      }
      for (auto [a, b] : members)
        if (mark[b][a] == cls) return std::nullopt;
      for (auto [a, b] : members) {
        out[a][b] = 1;
        cur[a][b] = cur[b][a] = 0;
      }
      ++cls;
    }
  return out;
}

std::optional<LocalWord> cobipartite_word(const Matrix& adj, const std::vector<int>& side) {
  const int n = static_cast<int>(adj.size());
  auto orient = transitive_orientation(adj);
  if (!orient) return std::nullopt;
  std::vector<int> indeg(n, 0);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v) continue;
      bool before = adj[u][v] ? (*orient)[u][v] != 0 : side[u] == 0;
      if (before) ++indeg[v];
    }
  std::vector<int> rank(n);
  std::iota(rank.begin(), rank.end(), 0);
  std::sort(rank.begin(), rank.end(), [&](int a, int b) { return indeg[a] < indeg[b]; });
  for (int i = 0; i < n; ++i)
    if (indeg[rank[i]] != i) return std::nullopt;
  std::vector<int> xs, ys;
  for (int v : rank) (side[v] == 0 ? xs : ys).push_back(v);
  for (int variant = 0; variant < 4; ++variant) {
    std::vector<int> x = xs, y = ys;
    if (variant & 1) std::reverse(y.begin(), y.end());
    if (variant & 2) std::reverse(x.begin(), x.end());
    std::vector<int> order = x;
    order.insert(order.end(), y.begin(), y.end());
    if (auto w = word_from_order(order, adj)) return w;
  }
  return std::nullopt;
}

struct ParityUnion {
  std::vector<int> parent, parity;
  explicit ParityUnion(int n) : parent(n), parity(n, 0) { std::iota(parent.begin(), parent.end(), 0); }

  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [r, p] = find(parent[x]);
    parity[x] ^= p;
    parent[x] = r;
    return {r, parity[x]};
  }

  bool unite(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

// Local tournament orientation: in every neighbourhood, non-adjacent neighbours sit on
// opposite sides. The walk along out-neighbourhoods then yields the round order.
std::optional<LocalWord> oriented_word(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> edge_id(n, std::vector<int>(n, -1));
  int m = 0;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (adj[u][v]) edge_id[u][v] = edge_id[v][u] = m++;
  ParityUnion uf(m);
  for (int v = 0; v < n; ++v)
    for (int a = 0; a < n; ++a) {
      if (!adj[v][a]) continue;
      for (int b = a + 1; b < n; ++b) {
        if (!adj[v][b] || adj[a][b]) continue;
        int rel = 1 ^ (v > a ? 1 : 0) ^ (v > b ? 1 : 0);
        if (!uf.unite(edge_id[v][a], edge_id[v][b], rel)) return std::nullopt;
      }
    }
  std::vector<int> roots;
  std::vector<int> root_slot(m, -1);
  for (int e = 0; e < m; ++e) {
    int r = uf.find(e).first;
    if (root_slot[r] < 0) {
      root_slot[r] = static_cast<int>(roots.size());
      roots.push_back(r);
    }
  }
  const int free_bits = std::min<int>(std::max<int>(static_cast<int>(roots.size()) - 1, 0), 10);
  for (long mask = 0; mask < (1L << free_bits); ++mask) {
    long gray = mask ^ (mask >> 1);
    Matrix out(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) {
        if (!adj[u][v]) continue;
        auto [r, p] = uf.find(edge_id[u][v]);
        int slot = root_slot[r];
        int bit = slot >= 1 && slot <= free_bits ? static_cast<int>((gray >> (slot - 1)) & 1) : 0;
        if (p ^ bit) out[u][v] = 1;
        else out[v][u] = 1;
      }
    std::vector<int> outdeg(n, 0), indeg(n, 0);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        if (out[u][v]) {
          ++outdeg[u];
          ++indeg[v];
        }
    int start = 0;
    for (int v = 0; v < n; ++v)
      if (indeg[v] == 0) {
        start = v;
        break;
      }
    std::vector<int> order{start};
    std::vector<char> used(n, 0);
    used[start] = 1;
    bool ok = true;
    while (ok && static_cast<int>(order.size()) < n) {
      int cur = order.back();
      int next = -1;
      for (int x = 0; x < n && next < 0; ++x) {
        if (!out[cur][x]) continue;
        bool beats_all = true;
        for (int y = 0; y < n && beats_all; ++y)
          if (y != x && out[cur][y] && !out[x][y]) beats_all = false;
        if (beats_all) next = x;
      }
      if (next < 0 || used[next]) ok = false;
      else {
        used[next] = 1;
        order.push_back(next);
      }
    }
    if (!ok) continue;
    std::vector<int> e(n);
    for (int i = 0; i < n; ++i) {
      e[i] = i + outdeg[order[i]];
      for (int k = 1; k <= outdeg[order[i]] && ok; ++k)
        if (!out[order[i]][order[(i + k) % n]]) ok = false;
    }
    if (!ok || !runs_are_monotone(e)) continue;
    LocalWord w = word_from_runs(order, e);
    if (word_matches(w, adj)) return w;
  }
  return std::nullopt;
}

std::optional<LocalWord> twin_free_word(const Matrix& adj) {
  const int n = static_cast<int>(adj.size());
  if (n == 1) return LocalWord{{0, true}, {0, false}};
  auto comps = components(adj);
  if (comps.size() > 1) {
    LocalWord w;
    for (const auto& c : comps) {
      auto part = interval_word(c, adj);
      if (!part) return std::nullopt;
      w.insert(w.end(), part->begin(), part->end());
    }
    return w;
  }
  std::vector<int> side;
  if (complement_bipartite(adj, side)) {
    if (auto w = cobipartite_word(adj, side)) return w;
    log_debug("co-bipartite route failed, trying orientation route");
    return oriented_word(adj);
  }
  if (auto w = oriented_word(adj)) return w;
  log_debug("orientation route failed, trying interval route");
  return interval_word(comps.front(), adj);
}

}  // namespace

RecognitionResult recognize_pca(const PlainGraph& h) {
  const int n = h.order();
  RecognitionResult result;
  if (n == 0) {
    result.model = ArcModel{};
    result.word = EndpointWord{};
    return result;
  }
  // closed twins collapse onto their smallest member
  std::map<std::vector<char>, std::vector<Vertex>> classes;
  for (Vertex v = 1; v <= n; ++v) {
    std::vector<char> key(n, 0);
    key[v - 1] = 1;
    for (Vertex u : h.neighbors(v)) key[u - 1] = 1;
    classes[key].push_back(v);
  }
  std::vector<std::vector<Vertex>> groups;
  for (auto& [key, members] : classes) groups.push_back(members);
  std::sort(groups.begin(), groups.end());
  const int r = static_cast<int>(groups.size());
  Matrix adj(r, std::vector<char>(r, 0));
  for (int a = 0; a < r; ++a)
    for (int b = 0; b < r; ++b)
      if (a != b && h.has_edge(groups[a].front(), groups[b].front())) adj[a][b] = 1;

  auto local = twin_free_word(adj);
  if (!local) {
    log_debug("graph on " + std::to_string(n) + " vertices refused");
    return result;
  }
  EndpointWord word;
  for (const auto& [g, start] : *local)
    for (Vertex v : groups[g]) word.push_back({v, start});
  ArcModel model = realize_word(word);
  if (!verify_model(h, model)) throw InternalError("recognizer produced a model that does not verify");
  result.model = std::move(model);
  result.word = std::move(word);
  return result;
}

}  // namespace scfe
