#include "scfe/generate.hpp"

#include <numeric>
#include <random>

#include "scfe/errors.hpp"

namespace scfe {

namespace {

// Portable draw in [0, bound): std distributions differ across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = rng();
  while (x >= limit);
  return x % bound;
}

}  // namespace

GenMode parse_gen_mode(const std::string& s) {
  if (s == "pca") return GenMode::Pca;
  if (s == "random") return GenMode::Random;
  throw PreconditionError("unknown generator mode '" + s + "'");
}

SignedGraph gen_instance(std::uint64_t seed, int n, GenMode mode, const Rational& missing_prob) {
  if (n < 1) throw PreconditionError("generator needs n >= 1");
  std::mt19937_64 rng(seed);
  if (mode == GenMode::Pca) {
    const long den = 8L * n;
    std::vector<long> slots(den);
    std::iota(slots.begin(), slots.end(), 0);
    for (long i = 0; i < n; ++i) std::swap(slots[i], slots[i + below(rng, den - i)]);
    Rational delta = ratio(1 + static_cast<long>(below(rng, den / 2)), den);
    ArcModel m;
    for (int i = 0; i < n; ++i) m.arcs.emplace_back(Angle(slots[i], den), delta, true, true);
    return complete_from_positive(intersection_graph(m));
  }
  if (missing_prob < 0 || missing_prob > 1) throw PreconditionError("missing probability must lie in [0,1]");
  const mpz_class& num = missing_prob.get_num();
  const mpz_class& dn = missing_prob.get_den();
  if (!dn.fits_ulong_p()) throw PreconditionError("missing probability denominator too large");
  std::uint64_t den = dn.get_ui(), cut = num.get_ui();
  std::vector<VertexPair> pos, neg;
  for (Vertex u = 1; u <= n; ++u)
    for (Vertex v = u + 1; v <= n; ++v) {
      if (below(rng, den) < cut) continue;
      (rng() & 1 ? pos : neg).emplace_back(u, v);
    }
  return SignedGraph(n, pos, neg);
}

}  // namespace scfe
