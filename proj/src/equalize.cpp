#include <algorithm>
#include <numeric>

#include "scfe/construction.hpp"
#include "scfe/errors.hpp"
#include "scfe/log.hpp"
#include "scfe/recognition.hpp"

namespace scfe {

namespace {

// P[to] - P[from] <= span_coef*span + gap_coef*min_gap + k over round positions.
struct Constraint {
  int from, to;
  int span_coef, gap_coef;
  long k;
};

enum class Verdict { Feasible, DeltaTooSmall, DeltaTooLarge, Impossible };

class DifferenceSystem {
 public:
  explicit DifferenceSystem(int n) : n_(n) {}

  // Constraint on lifted positions a, b: P_b - P_a <= span_coef*span + gap_coef*min_gap + k.
  void add(long a, long b, int span_coef, int gap_coef, long k) {
    auto fl = [&](long x) { return x >= 0 ? x / n_ : -((-x + n_ - 1) / n_); };
    long fa = fl(a), fb = fl(b);
    int am = static_cast<int>(a - fa * n_), bm = static_cast<int>(b - fb * n_);
    edges_.push_back({am, bm, span_coef, gap_coef, k - fb + fa});
  }

  Verdict check(const Rational& span, const Rational& min_gap, std::vector<Rational>* dist_out) const {
    std::vector<Rational> dist(n_, Rational(0));
    std::vector<int> pred(n_, -1);
    std::vector<Rational> w(edges_.size());
    for (std::size_t i = 0; i < edges_.size(); ++i)
      w[i] = edges_[i].span_coef * span + edges_[i].gap_coef * min_gap + edges_[i].k;
    int last = -1;
    for (int pass = 0; pass < n_; ++pass) {
      last = -1;
      for (std::size_t i = 0; i < edges_.size(); ++i) {
        const auto& e = edges_[i];
        Rational cand = dist[e.from] + w[i];
        if (cand < dist[e.to]) {
          dist[e.to] = cand;
          pred[e.to] = static_cast<int>(i);
          last = e.to;
        }
      }
      if (last < 0) break;
    }
    if (last < 0) {
      if (dist_out) *dist_out = std::move(dist);
      return Verdict::Feasible;
    }
    int v = last;
    for (int i = 0; i < n_; ++i) v = edges_[pred[v]].from;
    long dsum = 0;
    int u = v;
    do {
      const auto& e = edges_[pred[u]];
      dsum += e.span_coef;
      u = e.from;
    } while (u != v);
    if (dsum > 0) return Verdict::DeltaTooSmall;
    if (dsum < 0) return Verdict::DeltaTooLarge;
    return Verdict::Impossible;
  }

 private:
  int n_;
  std::vector<Constraint> edges_;
};

std::vector<Rational> farey(int n) {
  std::vector<Rational> out;
  for (int b = 1; b <= n; ++b)
    for (int a = 0; a <= b; ++a) out.push_back(ratio(a, b));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

EqualLengthModel build_model(const PlainGraph& h, const std::vector<Angle>& ends, const Rational& span) {
  const int n = h.order();
  ArcModel m;
  for (int v = 0; v < n; ++v) m.arcs.emplace_back(ends[v] - span, span, true, true);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || forward(ends[u], ends[v]) != span) continue;
      bool meet = h.has_edge(u + 1, v + 1);
      m.arcs[u].closed_end = meet;
      m.arcs[v].closed_start = meet;
    }
  return {m, span};
}

void check_equal_length(const PlainGraph& h, const EqualLengthModel& e) {
  for (const auto& a : e.model.arcs)
    if (a.length != e.length) throw InternalError("equal-length model has unequal arcs");
  if (!verify_model(h, e.model)) throw InternalError("equal-length model does not verify");
  if (!h.is_complete() && e.length > Rational(1, 2))
    throw InternalError("equal-length model of a non-complete graph has length above a half turn");
}

}  // namespace

EqualLengthModel equalize_lengths(const ArcModel& m) {
  const int n = m.order();
  PlainGraph h = intersection_graph(m);
  if (!is_proper_model(m)) throw PreconditionError("equalize_lengths needs a proper model");
  if (n == 0) return {m, Rational(1, 2)};

  bool same = std::all_of(m.arcs.begin(), m.arcs.end(),
                          [&](const Arc& a) { return a.length == m.arcs.front().length; });
  if (same) {
    EqualLengthModel e{m, m.arcs.front().length};
    check_equal_length(h, e);
    return e;
  }

  if (h.is_complete()) {
    std::vector<Angle> ends;
    for (int i = 0; i < n; ++i) ends.emplace_back(ratio(i, n));
    EqualLengthModel e = build_model(h, ends, Rational(1, 2));
    check_equal_length(h, e);
    return e;
  }

  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    const Arc &x = m.at(a), &y = m.at(b);
    if (x.start != y.start) return x.start < y.start;
    if (x.length != y.length) return x.length < y.length;
    return a < b;
  });
  auto at = [&](long p) { return order[((p % n) + n) % n]; };

  DifferenceSystem sys(n);
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int deg = static_cast<int>(h.neighbors(v).size());
    int r = 0, l = 0;
    if (deg == n - 1) {
      const Arc& a = m.at(v);
      while (r < n - 1 && forward(a.start, m.at(at(i + r + 1)).start) <= a.length) ++r;
      while (l < n - 1 && forward(m.at(at(i - l - 1)).start, a.start) <= m.at(at(i - l - 1)).length) ++l;
    } else {
      while (h.has_edge(v, at(i + r + 1))) ++r;
      while (h.has_edge(v, at(i - l - 1))) ++l;
      if (l + r != deg) throw PreconditionError("neighbourhoods are not intervals of the model order");
    }
    if (r >= 1) sys.add(i, i + r, 1, 0, 0);
    if (l >= 1) sys.add(i - l, i, 1, 0, 0);
    if (deg != n - 1) {
      sys.add(i + r + 1, i, -1, 0, 0);
      sys.add(i, i - l - 1, -1, 0, 0);
    }
  }
  for (int t = 0; t < n; ++t) sys.add(t + 1, t, 0, -1, 0);

  const Rational zero(0);
  auto fs = farey(n);
  auto verdict = [&](std::size_t idx) { return sys.check(fs[idx], zero, nullptr); };
  std::size_t lo = 0, hi = fs.size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (verdict(mid) == Verdict::DeltaTooSmall) lo = mid + 1;
    else hi = mid;
  }
  if (lo == fs.size() || verdict(lo) != Verdict::Feasible)
    throw EqualizationError("no equal-length model in the model order");
  std::size_t first = lo;
  hi = fs.size();
  lo = first + 1;
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (verdict(mid) == Verdict::DeltaTooLarge) hi = mid;
    else lo = mid + 1;
  }
  std::size_t last = lo - 1;
  Rational span = first == last ? fs[first] : Rational((fs[first] + fs[last]) / 2);
  if (span <= 0) throw EqualizationError("no positive arc length fits the model order");

  Rational gap_floor = ratio(1, n);
  gap_floor /= span.get_den();
  std::vector<Rational> dist;
  bool found = false;
  for (Rational min_gap = ratio(1, 2 * n); !found; min_gap /= 2) {
    if (min_gap < gap_floor) min_gap = gap_floor;
    if (sys.check(span, min_gap, &dist) == Verdict::Feasible) found = true;
    else if (min_gap == gap_floor) break;
  }
  if (!found) {
    log_info("arc ends must coincide for equal lengths; no injective equal-length model");
    throw EqualizationError("equal-length models of this graph need coincident arc ends");
  }

  std::vector<Angle> ends(n);
  for (int i = 0; i < n; ++i) ends[order[i] - 1] = Angle(dist[i] - dist[0]);
  EqualLengthModel e = build_model(h, ends, span);
  check_equal_length(h, e);
  return e;
}

}  // namespace scfe
