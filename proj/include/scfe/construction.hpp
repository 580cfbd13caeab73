#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

struct EqualLengthModel {
  ArcModel model;
  Rational length;
};

// No equal-length model with pairwise distinct clockwise ends exists in the model's order.
class EqualizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EqualLengthModel equalize_lengths(const ArcModel& m);

struct AlmostValidDrawing {
  Drawing drawing;
  Rational threshold;
};

AlmostValidDrawing model_to_almost_valid(const EqualLengthModel& meq, const SignedGraph& g);

struct Witnesses {
  std::optional<Vertex> left_friend;   // farthest friend in the left half
  std::optional<Vertex> right_friend;  // farthest friend in the right half
  std::optional<Vertex> left_enemy;    // closest enemy in the left half
  std::optional<Vertex> right_enemy;   // closest enemy in the right half
};

struct ViolationProfile {
  std::vector<Vertex> vertices;  // ascending id
  std::map<Vertex, Witnesses> witnesses;
  bool contains(Vertex v) const;
};

ViolationProfile violating_vertices(const SignedGraph& g, const Drawing& d, const Rational& threshold);
Drawing perturb_step(const SignedGraph& g, const Drawing& d, const Rational& threshold, Vertex a);

struct PerturbationResult {
  Drawing drawing;
  Rational threshold;
  int steps = 0;
  int initial_ties = 0;
};

PerturbationResult almost_valid_to_valid(const SignedGraph& g, const Drawing& d);

Completion drawing_to_completion(const SignedGraph& g, const Drawing& d);
ArcModel drawing_to_model(const SignedGraph& cg, const Drawing& d);

// Exact LP for a valid drawing of a complete signed graph with vertices placed in the
// given cyclic order. Empty when the order admits none.
std::optional<Drawing> valid_drawing_in_order(const SignedGraph& g, const std::vector<Vertex>& order);

}  // namespace scfe
