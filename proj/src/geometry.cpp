#include "scfe/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "scfe/errors.hpp"

namespace scfe {

Rational frac(const Rational& x) {
  mpz_class q;
  mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rational r = x - Rational(q);
  r.canonicalize();
  return r;
}

Rational ratio(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

double Angle::radians() const { return v_.get_d() * 2.0 * std::numbers::pi; }

std::string Angle::str() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

Rational forward(const Angle& p, const Angle& q) { return frac(q.turns() - p.turns()); }

Rational distance(const Angle& p, const Angle& q) {
  Rational t = forward(p, q);
  Rational s = 1 - t;
  if (t == 0) return t;
  return t < s ? t : s;
}

bool in_right_half(const Angle& p, const Angle& q) { return forward(p, q) <= Rational(1, 2); }

bool in_left_half(const Angle& p, const Angle& q) { return forward(q, p) <= Rational(1, 2); }

Angle midpoint_forward(const Angle& from, const Angle& to) {
  return from + Rational(forward(from, to) / 2);
}

void check_drawing(int n, const Drawing& d) {
  if (d.order() != n)
    throw PreconditionError("drawing has " + std::to_string(d.order()) + " positions for " +
                            std::to_string(n) + " vertices");
  std::vector<Angle> sorted = d.pos;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw PreconditionError("drawing is not injective");
}

Drawing equally_spaced(int n) {
  Drawing d;
  for (int i = 0; i < n; ++i) d.pos.emplace_back(ratio(i, n));
  return d;
}

ValidityReport is_valid_drawing(const SignedGraph& g, const Drawing& d) {
  check_drawing(g.order(), d);
  ValidityReport report;
  for (Vertex i = 1; i <= g.order(); ++i) {
    const auto& friends = g.positive_neighbors(i);
    const auto& enemies = g.negative_neighbors(i);
    if (friends.empty() || enemies.empty()) continue;
    std::vector<Rational> ek;
    ek.reserve(enemies.size());
    for (Vertex k : enemies) ek.push_back(distance(d.at(i), d.at(k)));
    for (Vertex j : friends) {
      Rational dj = distance(d.at(i), d.at(j));
      for (std::size_t t = 0; t < enemies.size(); ++t)
        if (dj >= ek[t]) report.violations.push_back({i, j, enemies[t]});
    }
  }
  report.valid = report.violations.empty();
  return report;
}

std::optional<Window> almost_valid_window(const SignedGraph& g, const Drawing& d) {
  check_drawing(g.order(), d);
  Window w{Rational(0), Rational(1, 2)};
  for (Vertex i = 1; i <= g.order(); ++i) {
    const auto& friends = g.positive_neighbors(i);
    const auto& enemies = g.negative_neighbors(i);
    if (friends.empty() || enemies.empty()) continue;
    for (Vertex j : friends) w.lo = std::max(w.lo, distance(d.at(i), d.at(j)));
    for (Vertex k : enemies) w.hi = std::min(w.hi, distance(d.at(i), d.at(k)));
  }
  if (w.lo > w.hi) return std::nullopt;
  return w;
}

bool window_contains(const std::optional<Window>& w, const Rational& threshold) {
  return w && threshold > 0 && w->lo <= threshold && threshold <= w->hi;
}

std::vector<Vertex> cyclic_labeling(const Drawing& d) {
  std::vector<Vertex> order(d.order());
  for (int i = 0; i < d.order(); ++i) order[i] = i + 1;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return d.at(a) < d.at(b); });
  return order;
}

bool same_cyclic_order(const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
  if (a.size() != b.size()) return false;
  if (a.empty()) return true;
  auto it = std::find(b.begin(), b.end(), a.front());
  if (it == b.end()) return false;
  std::vector<Vertex> r(it, b.end());
  r.insert(r.end(), b.begin(), it);
  return r == a;
}

Arc::Arc(Angle s, Rational len, bool cs, bool ce)
    : start(s), length(std::move(len)), closed_start(cs), closed_end(ce) {
  if (length <= 0 || length >= 1) throw PreconditionError("arc length must lie in (0,1)");
}

bool Arc::contains(const Angle& p) const {
  Rational t = forward(start, p);
  if (t == 0) return closed_start;
  if (t < length) return true;
  if (t == length) return closed_end;
  return false;
}

namespace {

// Lifted closed/open interval on the real line.
struct Span {
  Rational lo, hi;
  bool clo, chi;

  bool has(const Rational& x) const {
    if (x < lo || x > hi) return false;
    if (x == lo && !clo) return false;
    if (x == hi && !chi) return false;
    return true;
  }
};

Span lift(const Arc& a, long shift) {
  Rational lo = a.start.turns() + shift;
  return {lo, lo + a.length, a.closed_start, a.closed_end};
}

bool spans_meet(const Span& a, const Span& b) {
  const Rational& lo = a.lo > b.lo ? a.lo : b.lo;
  const Rational& hi = a.hi < b.hi ? a.hi : b.hi;
  if (lo < hi) return true;
  if (lo > hi) return false;
  return a.has(lo) && b.has(lo);
}

}  // namespace

bool arcs_intersect(const Arc& a, const Arc& b) {
  Span sa = lift(a, 0);
  for (long k = -1; k <= 1; ++k)
    if (spans_meet(sa, lift(b, k))) return true;
  return false;
}

bool arc_subset(const Arc& inner, const Arc& outer) {
  if (inner.length > outer.length) return false;
  Rational t = forward(outer.start, inner.start);
  Rational lo = t, hi = t + inner.length;
  if (lo == 0 && inner.closed_start && !outer.closed_start) return false;
  if (hi > outer.length) return false;
  if (hi == outer.length && inner.closed_end && !outer.closed_end) return false;
  return true;
}

PlainGraph intersection_graph(const ArcModel& m) {
  std::vector<VertexPair> edges;
  for (Vertex u = 1; u <= m.order(); ++u)
    for (Vertex v = u + 1; v <= m.order(); ++v)
      if (arcs_intersect(m.at(u), m.at(v))) edges.emplace_back(u, v);
  return PlainGraph(m.order(), edges);
}

bool is_proper_model(const ArcModel& m) {
  for (Vertex u = 1; u <= m.order(); ++u)
    for (Vertex v = 1; v <= m.order(); ++v) {
      if (u == v) continue;
      if (arc_subset(m.at(v), m.at(u)) && !arc_subset(m.at(u), m.at(v))) return false;
    }
  return true;
}

ArcModel rotate(const ArcModel& m, const Rational& t) {
  ArcModel out = m;
  for (auto& a : out.arcs) a.start = a.start + t;
  return out;
}

ArcModel mirror(const ArcModel& m) {
  ArcModel out = m;
  for (auto& a : out.arcs) {
    Angle new_start(-(a.start.turns() + a.length));
    a.start = new_start;
    std::swap(a.closed_start, a.closed_end);
  }
  return out;
}

}  // namespace scfe
