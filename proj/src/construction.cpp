#include "scfe/construction.hpp"

#include <algorithm>
#include <map>

#include "scfe/errors.hpp"
#include "scfe/lp.hpp"
#include "scfe/recognition.hpp"

namespace scfe {

namespace {

// Farthest friend reached going forward (right) or backward (left) within half a turn.
// A vertex without friends on that side is its own end.
Vertex friend_end(const SignedGraph& g, const Drawing& d, Vertex i, bool right) {
  Vertex best = i;
  Rational best_dist = 0;
  for (Vertex j : g.positive_neighbors(i)) {
    bool side = right ? in_right_half(d.at(i), d.at(j)) : in_left_half(d.at(i), d.at(j));
    if (!side) continue;
    Rational dj = distance(d.at(i), d.at(j));
    if (dj > best_dist) {
      best = j;
      best_dist = dj;
    }
  }
  return best;
}

Rational min_consecutive_gap(const Drawing& d) {
  auto order = cyclic_labeling(d);
  const int n = static_cast<int>(order.size());
  Rational best = 1;
  for (int t = 0; t < n; ++t) {
    Rational gap = distance(d.at(order[t]), d.at(order[(t + 1) % n]));
    if (gap < best) best = gap;
  }
  return best;
}

}  // namespace

AlmostValidDrawing model_to_almost_valid(const EqualLengthModel& meq, const SignedGraph& g) {
  if (!g.is_complete()) throw PreconditionError("model_to_almost_valid needs a complete signed graph");
  if (meq.model.order() != g.order()) throw PreconditionError("model and graph sizes differ");
  if (!(intersection_graph(meq.model) == positive_subgraph(g)))
    throw PreconditionError("model does not represent the positive part of the graph");
  const int n = g.order();
  Drawing d;
  for (const auto& a : meq.model.arcs) d.pos.push_back(a.end());

  std::vector<Angle> sorted = d.pos;
  std::sort(sorted.begin(), sorted.end());
  bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
  if (!injective) {
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    Rational nudge = 1;
    for (std::size_t t = 0; t < sorted.size(); ++t) {
      Rational gap = forward(sorted[t], sorted[(t + 1) % sorted.size()]);
      if (gap > 0 && gap < nudge) nudge = gap;
    }
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) {
        Rational off = distance(d.at(u), d.at(v)) - meq.length;
        if (off < 0) off = -off;
        if (off > 0 && off < nudge) nudge = off;
      }
    nudge /= 4 * n;
    std::map<Angle, int> seen;
    for (Vertex v = 1; v <= n; ++v) {
      int k = seen[d.at(v)]++;
      d.at(v) = d.at(v) + Rational(nudge * k);
    }
  }
  auto w = almost_valid_window(g, d);
  if (window_contains(w, meq.length)) return {d, meq.length};
  if (!injective && w && w->lo > 0) return {d, w->lo};
  if (injective) throw InternalError("clockwise ends of an equal-length model are not almost valid");
  throw PreconditionError("coincident arc ends cannot be separated");
}

bool ViolationProfile::contains(Vertex v) const {
  return std::binary_search(vertices.begin(), vertices.end(), v);
}

ViolationProfile violating_vertices(const SignedGraph& g, const Drawing& d, const Rational& threshold) {
  if (!window_contains(almost_valid_window(g, d), threshold))
    throw PreconditionError("threshold lies outside the almost-valid window");
  ViolationProfile profile;
  for (Vertex a = 1; a <= g.order(); ++a) {
    bool tied_friend = false, tied_enemy = false;
    for (Vertex j : g.positive_neighbors(a))
      if (distance(d.at(a), d.at(j)) == threshold) tied_friend = true;
    for (Vertex k : g.negative_neighbors(a))
      if (distance(d.at(a), d.at(k)) == threshold) tied_enemy = true;
    if (!tied_friend || !tied_enemy) continue;
    profile.vertices.push_back(a);
    Witnesses w;
    Rational lf = -1, rf = -1, le = 2, re = 2;
    for (Vertex j : g.positive_neighbors(a)) {
      Rational dj = distance(d.at(a), d.at(j));
      if (in_left_half(d.at(a), d.at(j)) && dj > lf) {
        lf = dj;
        w.left_friend = j;
      }
      if (in_right_half(d.at(a), d.at(j)) && dj > rf) {
        rf = dj;
        w.right_friend = j;
      }
    }
    for (Vertex k : g.negative_neighbors(a)) {
      Rational dk = distance(d.at(a), d.at(k));
      if (in_left_half(d.at(a), d.at(k)) && dk < le) {
        le = dk;
        w.left_enemy = k;
      }
      if (in_right_half(d.at(a), d.at(k)) && dk < re) {
        re = dk;
        w.right_enemy = k;
      }
    }
    profile.witnesses[a] = w;
  }
  return profile;
}

Drawing perturb_step(const SignedGraph& g, const Drawing& d, const Rational& threshold, Vertex a) {
  auto profile = violating_vertices(g, d, threshold);
  if (!profile.contains(a)) throw PreconditionError("vertex is not tied at threshold");
  const Witnesses& w = profile.witnesses.at(a);
  auto tied = [&](const std::optional<Vertex>& v) {
    return v && distance(d.at(a), d.at(*v)) == threshold;
  };
  Rational shift = min_consecutive_gap(d) / 4;
  Drawing out = d;
  if (tied(w.right_friend) && tied(w.left_enemy)) {
    out.at(a) = d.at(a) + shift;
  } else if (tied(w.left_friend) && tied(w.right_enemy)) {
    out.at(a) = d.at(a) - shift;
  } else {
    throw InternalError("tied vertex matches neither tie pattern");
  }

  if (!same_cyclic_order(cyclic_labeling(out), cyclic_labeling(d)))
    throw InternalError("perturbation changed the cyclic order");
  auto after = violating_vertices(g, out, threshold);
  if (after.contains(a)) throw InternalError("perturbation left the vertex tied");
  for (Vertex v : after.vertices)
    if (!profile.contains(v)) throw InternalError("perturbation created a new tie");
  return out;
}

PerturbationResult almost_valid_to_valid(const SignedGraph& g, const Drawing& d) {
  auto w = almost_valid_window(g, d);
  if (!w) throw PreconditionError("drawing is not almost valid");
  PerturbationResult result{d, w->lo, 0, 0};
  if (w->lo == 0) {
    if (!is_valid_drawing(g, d).valid) throw InternalError("unconstrained drawing reported invalid");
    return result;
  }
  const auto labels = cyclic_labeling(d);
  auto profile = violating_vertices(g, d, result.threshold);
  result.initial_ties = static_cast<int>(profile.vertices.size());
  while (!profile.vertices.empty()) {
    Vertex next = 0;
    for (Vertex v : labels)
      if (profile.contains(v)) {
        next = v;
        break;
      }
    result.drawing = perturb_step(g, result.drawing, result.threshold, next);
    if (++result.steps > result.initial_ties)
      throw InternalError("perturbation loop exceeded the initial tie count");
    profile = violating_vertices(g, result.drawing, result.threshold);
  }
  if (!is_valid_drawing(g, result.drawing).valid)
    throw InternalError("perturbed drawing is not valid");
  return result;
}

Completion drawing_to_completion(const SignedGraph& g, const Drawing& d) {
  if (!is_valid_drawing(g, d).valid) throw PreconditionError("drawing is not valid");
  const int n = g.order();
  std::vector<Vertex> right(n + 1), left(n + 1);
  for (Vertex i = 1; i <= n; ++i) {
    right[i] = friend_end(g, d, i, true);
    left[i] = friend_end(g, d, i, false);
  }
  auto inside = [&](Vertex i, Vertex j) {
    Rational f = forward(d.at(i), d.at(j));
    if (f < forward(d.at(i), d.at(right[i]))) return true;
    Rational b = forward(d.at(j), d.at(i));
    return b < forward(d.at(left[i]), d.at(i));
  };
  Completion c;
  for (const auto& p : missing_pairs(g))
    c[p] = inside(p.u, p.v) || inside(p.v, p.u) ? Sign::Positive : Sign::Negative;
  return c;
}

ArcModel drawing_to_model(const SignedGraph& cg, const Drawing& d) {
  if (!cg.is_complete()) throw PreconditionError("drawing_to_model needs a complete signed graph");
  if (!is_valid_drawing(cg, d).valid) throw PreconditionError("drawing is not valid");
  const int n = cg.order();
  std::vector<std::optional<Arc>> arcs(n + 1);
  std::vector<Vertex> lonely;
  for (Vertex i = 1; i <= n; ++i) {
    Vertex r = friend_end(cg, d, i, true), l = friend_end(cg, d, i, false);
    Rational back = forward(d.at(l), d.at(i)) / 2, ahead = forward(d.at(i), d.at(r)) / 2;
    if (back + ahead == 0) {
      lonely.push_back(i);
      continue;
    }
    arcs[i] = Arc(d.at(i) - back, back + ahead, true, true);
  }
  for (Vertex i : lonely) {
    Rational radius = Rational(1, 4);
    for (Vertex j = 1; j <= n; ++j) {
      if (j == i) continue;
      std::vector<Angle> marks{d.at(j)};
      if (arcs[j]) {
        marks.push_back(arcs[j]->start);
        marks.push_back(arcs[j]->end());
      }
      for (const auto& p : marks) radius = std::min(radius, Rational(distance(d.at(i), p) / 4));
    }
    arcs[i] = Arc(d.at(i) - radius, 2 * radius, true, true);
  }
  ArcModel m;
  for (Vertex i = 1; i <= n; ++i) m.arcs.push_back(*arcs[i]);
  if (!verify_model(positive_subgraph(cg), m))
    throw InternalError("midpoint arcs do not model the positive part");
  return m;
}

std::optional<Drawing> valid_drawing_in_order(const SignedGraph& g, const std::vector<Vertex>& order) {
  if (!g.is_complete()) throw PreconditionError("valid_drawing_in_order needs a complete signed graph");
  const int n = g.order();
  if (static_cast<int>(order.size()) != n) throw PreconditionError("order must list every vertex");
  if (n == 1) return Drawing({Angle(0)});
  auto at = [&](long p) { return order[((p % n) + n) % n]; };
  // variables: gaps 0..n-1 (gap t runs from position t to t+1), slack s at index n
  lp::Program prog(n + 1);
  prog.objective[n] = 1;
  std::vector<Rational> row(n + 1);
  for (int t = 0; t < n; ++t) row[t] = 1;
  prog.add(row, lp::Relation::Equal, 1);
  for (int t = 0; t < n; ++t) {
    std::vector<Rational> r(n + 1);
    r[n] = 1;
    r[t] = -1;
    prog.add(r, lp::Relation::LessEq, 0);
  }
  auto span = [&](std::vector<Rational>& r, long from, long count, int sign) {
    for (long t = from; t < from + count; ++t) r[((t % n) + n) % n] += sign;
  };
  for (int i = 0; i < n; ++i) {
    Vertex v = order[i];
    int deg = static_cast<int>(g.positive_neighbors(v).size());
    if (deg == 0 || g.negative_neighbors(v).empty()) continue;
    int r = 0, l = 0;
    while (g.sign(v, at(i + r + 1)) == Sign::Positive) ++r;
    while (g.sign(v, at(i - l - 1)) == Sign::Positive) ++l;
    if (r + l != deg) return std::nullopt;
    // farthest right friend + s <= nearest left enemy, and mirrored
    std::vector<Rational> a(n + 1), b(n + 1);
    span(a, i, r, 1);
    span(a, i - l - 1, l + 1, -1);
    a[n] += 1;
    span(b, i - l, l, 1);
    span(b, i, r + 1, -1);
    b[n] += 1;
    prog.add(a, lp::Relation::LessEq, 0);
    prog.add(b, lp::Relation::LessEq, 0);
  }
  auto sol = lp::solve(prog);
  if (sol.status != lp::Status::Optimal || sol.x[n] <= 0) return std::nullopt;
  Drawing d;
  d.pos.resize(n);
  Rational p = 0;
  for (int t = 0; t < n; ++t) {
    d.at(order[t]) = Angle(p);
    p += sol.x[t];
  }
  if (!is_valid_drawing(g, d).valid) throw InternalError("LP drawing is not valid");
  return d;
}

}  // namespace scfe
