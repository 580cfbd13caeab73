#pragma once

#include <cstdint>
#include <optional>

#include "scfe/construction.hpp"
#include "scfe/geometry.hpp"
#include "scfe/recognition.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

enum class Status { Drawable, NotDrawable };

// How the drawing was obtained.
enum class Route {
  Degenerate,     // no friends or no enemies anywhere: any injective drawing
  EqualLength,    // equal-length model, clockwise ends, perturbation of ties
  DirectProgram,  // exact LP on the proper model's cyclic order
};

struct SolveResult {
  Status status = Status::NotDrawable;
  Completion completion;
  std::optional<ArcModel> proper_model;
  std::optional<EqualLengthModel> equal_model;
  std::optional<Drawing> drawing;
  std::optional<Route> route;
  int perturbation_steps = 0;
  std::uint64_t completions_examined = 0;
  std::uint64_t completions_refuted = 0;
  std::uint64_t drawable_completions = 0;  // counted only in exhaustive mode

  bool drawable() const { return status == Status::Drawable; }
};

struct SolveOptions {
  int max_k = 25;
  bool exhaustive = false;
};

SolveResult decide_complete(const SignedGraph& g);
SolveResult decide_general(const SignedGraph& g, const SolveOptions& opts = {});

struct VerifyReport {
  bool valid = false;
  std::optional<Window> window;
  std::vector<Triple> violations;
};

// Brute force: oracle_pca on the positive part of every completion.
struct OracleDecision {
  bool drawable = false;
  std::uint64_t completions_examined = 0;
  std::optional<Completion> completion;
  std::optional<EndpointWord> word;
};

OracleDecision oracle_decide(const SignedGraph& g, int n_max = 7, int max_k = 20);

VerifyReport verify(const SignedGraph& g, const Drawing& d);

}  // namespace scfe
