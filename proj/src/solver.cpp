#include "scfe/solver.hpp"

#include <algorithm>
#include <numeric>

#include "scfe/errors.hpp"
#include "scfe/log.hpp"
#include "scfe/recognition.hpp"

namespace scfe {

namespace {

std::vector<Vertex> start_order(const ArcModel& m) {
  std::vector<Vertex> order(m.order());
  std::iota(order.begin(), order.end(), 1);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return m.at(a).start < m.at(b).start; });
  return order;
}

void fill_drawing(const SignedGraph& g, const ArcModel& proper, SolveResult& out) {
  bool no_friends = g.positive_edges().empty(), no_enemies = g.negative_edges().empty();
  try {
    out.equal_model = equalize_lengths(proper);
  } catch (const EqualizationError& e) {
    log_info(std::string("equalization unavailable: ") + e.what());
  }
  if (no_friends || no_enemies) {
    out.drawing = equally_spaced(g.order());
    out.route = Route::Degenerate;
    return;
  }
  if (out.equal_model) {
    auto almost = model_to_almost_valid(*out.equal_model, g);
    auto fixed = almost_valid_to_valid(g, almost.drawing);
    out.drawing = fixed.drawing;
    out.perturbation_steps = fixed.steps;
    out.route = Route::EqualLength;
    return;
  }
  auto direct = valid_drawing_in_order(g, start_order(proper));
  if (!direct) throw InternalError("no valid drawing found in the proper model's order");
  out.drawing = *direct;
  out.route = Route::DirectProgram;
}

}  // namespace

SolveResult decide_complete(const SignedGraph& g) {
  if (!g.is_complete()) throw PreconditionError("decide_complete needs a complete signed graph");
  SolveResult out;
  out.completions_examined = 1;
  auto rec = recognize_pca(positive_subgraph(g));
  if (!rec.accepted()) {
    out.completions_refuted = 1;
    return out;
  }
  out.status = Status::Drawable;
  out.proper_model = rec.model;
  fill_drawing(g, *rec.model, out);
  if (!is_valid_drawing(g, *out.drawing).valid) throw InternalError("solver drawing is not valid");
  return out;
}

SolveResult decide_general(const SignedGraph& g, const SolveOptions& opts) {
  auto missing = missing_pairs(g);
  const int k = static_cast<int>(missing.size());
  if (k > opts.max_k)
    throw PreconditionError(std::to_string(k) + " missing pairs exceed the ceiling of " +
                            std::to_string(opts.max_k));
  if (k == 0) {
    SolveResult r = decide_complete(g);
    if (opts.exhaustive && r.drawable()) r.drawable_completions = 1;
    return r;
  }

  SolveResult out;
  std::optional<std::uint64_t> first;
  const std::uint64_t total = std::uint64_t{1} << k;
  std::vector<VertexPair> pos(g.positive_edges().begin(), g.positive_edges().end());
  std::vector<VertexPair> neg(g.negative_edges().begin(), g.negative_edges().end());
  auto completion_of = [&](std::uint64_t index) {
    Completion c;
    for (int p = 0; p < k; ++p)
      c[missing[p]] = (index >> (k - 1 - p)) & 1 ? Sign::Negative : Sign::Positive;
    return c;
  };
  for (std::uint64_t index = 0; index < total; ++index) {
    ++out.completions_examined;
    std::vector<VertexPair> cp = pos;
    for (int p = 0; p < k; ++p)
      if (!((index >> (k - 1 - p)) & 1)) cp.push_back(missing[p]);
    if (recognize_pca(PlainGraph(g.order(), cp)).accepted()) {
      ++out.drawable_completions;
      if (!first) first = index;
      if (!opts.exhaustive) break;
    } else {
      ++out.completions_refuted;
    }
  }
  if (!first) return out;

  Completion c = completion_of(*first);
  SignedGraph cg = apply_completion(g, c);
  SolveResult inner = decide_complete(cg);
  if (!inner.drawable()) throw InternalError("accepted completion failed to solve");
  inner.completion = c;
  inner.completions_examined = out.completions_examined;
  inner.completions_refuted = out.completions_refuted;
  inner.drawable_completions = opts.exhaustive ? out.drawable_completions : 0;
  if (!is_valid_drawing(g, *inner.drawing).valid)
    throw InternalError("drawing of the completion is not valid for the input");
  return inner;
}

OracleDecision oracle_decide(const SignedGraph& g, int n_max, int max_k) {
  auto missing = missing_pairs(g);
  const int k = static_cast<int>(missing.size());
  if (k > max_k)
    throw PreconditionError(std::to_string(k) + " missing pairs exceed the ceiling of " +
                            std::to_string(max_k));
  OracleDecision out;
  for (std::uint64_t index = 0; index < (std::uint64_t{1} << k); ++index) {
    ++out.completions_examined;
    Completion c;
    for (int p = 0; p < k; ++p)
      c[missing[p]] = (index >> (k - 1 - p)) & 1 ? Sign::Negative : Sign::Positive;
    auto r = oracle_pca(positive_subgraph(apply_completion(g, c)), n_max);
    if (r.pca) {
      out.drawable = true;
      out.completion = c;
      out.word = r.word;
      break;
    }
  }
  return out;
}

VerifyReport verify(const SignedGraph& g, const Drawing& d) {
  VerifyReport r;
  auto v = is_valid_drawing(g, d);
  r.valid = v.valid;
  r.violations = std::move(v.violations);
  r.window = almost_valid_window(g, d);
  return r;
}

}  // namespace scfe
