#pragma once

#include <optional>
#include <vector>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

struct Endpoint {
  Vertex v;
  bool start;  // L_v when true, R_v otherwise
  bool operator==(const Endpoint&) const = default;
};

// Cyclic sequence of the 2n arc endpoints in increasing angle.
using EndpointWord = std::vector<Endpoint>;

bool is_proper_word(const EndpointWord& w);
// Endpoints at i/(2n+1) in word order, all ends closed.
ArcModel realize_word(const EndpointWord& w);

struct RecognitionResult {
  std::optional<ArcModel> model;
  std::optional<EndpointWord> word;
  bool accepted() const { return model.has_value(); }
};

RecognitionResult recognize_pca(const PlainGraph& h);

struct OracleResult {
  bool pca = false;
  std::optional<EndpointWord> word;
};

// Exhaustive search over endpoint words; throws PreconditionError when n > n_max.
OracleResult oracle_pca(const PlainGraph& h, int n_max = 7);

bool verify_model(const PlainGraph& h, const ArcModel& m);

}  // namespace scfe
