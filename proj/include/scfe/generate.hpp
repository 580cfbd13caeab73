#pragma once

#include <cstdint>
#include <string>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

enum class GenMode { Pca, Random };

// Pca: complete signed graph whose positive part is the intersection graph of random
// equal-length closed arcs. Random: each pair missing with probability missing_prob,
// otherwise a fair sign. Deterministic per seed.
SignedGraph gen_instance(std::uint64_t seed, int n, GenMode mode, const Rational& missing_prob = 0);

GenMode parse_gen_mode(const std::string& s);

}  // namespace scfe
