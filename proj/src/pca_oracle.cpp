#include <algorithm>
#include <bit>
#include <cstdint>
#include <tuple>

#include "scfe/errors.hpp"
#include "scfe/recognition.hpp"

namespace scfe {

namespace {

// Round shapes: ends[i] is the lifted index of the last start covered by the arc at
// position i. Position graph: i<j adjacent iff j <= ends[i] or i+n <= ends[j].
class ShapeSearch {
 public:
  ShapeSearch(const PlainGraph& h) : n_(h.order()), target_(n_, 0), target_deg_(n_) {
    for (Vertex u = 1; u <= n_; ++u)
      for (Vertex v : h.neighbors(u)) target_[u - 1] |= std::uint32_t{1} << (v - 1);
    for (int v = 0; v < n_; ++v) target_deg_[v] = std::popcount(target_[v]);
    sorted_deg_ = target_deg_;
    std::sort(sorted_deg_.begin(), sorted_deg_.end());
  }

  std::optional<EndpointWord> run() {
    ends_.assign(n_, 0);
    if (extend(0)) return word_;
    return std::nullopt;
  }

 private:
  bool extend(int i) {
    if (i == n_) {
      if (ends_[n_ - 1] > ends_[0] + n_) return false;
      return try_shape();
    }
    int lo = i == 0 ? 0 : std::max(ends_[i - 1], i);
    for (int e = lo; e <= i + n_ - 1; ++e) {
      ends_[i] = e;
      if (extend(i + 1)) return true;
    }
    return false;
  }

  bool try_shape() {
    shape_.assign(n_, 0);
    for (int i = 0; i < n_; ++i)
      for (int j = i + 1; j < n_; ++j)
        if (j <= ends_[i] || i + n_ <= ends_[j]) {
          shape_[i] |= std::uint32_t{1} << j;
          shape_[j] |= std::uint32_t{1} << i;
        }
    std::vector<int> deg(n_);
    for (int i = 0; i < n_; ++i) deg[i] = std::popcount(shape_[i]);
    std::vector<int> sorted = deg;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != sorted_deg_) return false;
    assign_.assign(n_, -1);
    used_ = 0;
    assign_[0] = 0;
    used_ = 1;
    if (target_deg_[0] != deg[0]) return false;
    if (!place(1, deg)) return false;
    build_word();
    return true;
  }

  bool place(int pos, const std::vector<int>& deg) {
    if (pos == n_) return true;
    for (int v = 0; v < n_; ++v) {
      if (used_ >> v & 1 || target_deg_[v] != deg[pos]) continue;
      bool ok = true;
      for (int q = 0; q < pos && ok; ++q) {
        bool want = shape_[pos] >> q & 1;
        bool have = target_[v] >> assign_[q] & 1;
        ok = want == have;
      }
      if (!ok) continue;
      assign_[pos] = v;
      used_ |= std::uint32_t{1} << v;
      if (place(pos + 1, deg)) return true;
      used_ &= ~(std::uint32_t{1} << v);
    }
    return false;
  }

  void build_word() {
    // sort keys: the gap after start m holds wrapped ends before plain ones
    std::vector<std::pair<std::tuple<int, int, int, int>, Endpoint>> keyed;
    for (int i = 0; i < n_; ++i) {
      keyed.push_back({{i, 0, 0, 0}, Endpoint{assign_[i] + 1, true}});
      int gap = ends_[i] % n_;
      int wrapped = ends_[i] >= n_ ? 0 : 1;
      keyed.push_back({{gap, 1, wrapped, i}, Endpoint{assign_[i] + 1, false}});
    }
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    word_.clear();
    for (const auto& [k, e] : keyed) word_.push_back(e);
  }

  int n_;
  std::vector<std::uint32_t> target_;
  std::vector<int> target_deg_, sorted_deg_;
  std::vector<int> ends_;
  std::vector<std::uint32_t> shape_;
  std::vector<int> assign_;
  std::uint32_t used_ = 0;
  EndpointWord word_;
};

}  // namespace

OracleResult oracle_pca(const PlainGraph& h, int n_max) {
  if (h.order() > n_max)
    throw PreconditionError("oracle limited to " + std::to_string(n_max) + " vertices");
  if (h.order() > 31) throw PreconditionError("oracle limited to 31 vertices");
  OracleResult result;
  if (h.order() == 0) {
    result.pca = true;
    result.word = EndpointWord{};
    return result;
  }
  ShapeSearch search(h);
  result.word = search.run();
  result.pca = result.word.has_value();
  if (result.pca && !verify_model(h, realize_word(*result.word)))
    throw InternalError("oracle word does not realize the graph");
  return result;
}

}  // namespace scfe
