// Acceptance run: one PASS/FAIL line per criterion.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "scfe/cli.hpp"
#include "scfe/construction.hpp"
#include "scfe/generate.hpp"
#include "scfe/io.hpp"
#include "scfe/recognition.hpp"
#include "scfe/solver.hpp"

using namespace scfe;

namespace {

constexpr double kNetSeconds = 1.0;
constexpr double kEquivalenceSeconds = 300.0;
constexpr double kInstanceSeconds = 1.0;
constexpr int kSoundnessInstances = 500;
constexpr int kSoundnessMinN = 5;
constexpr int kSoundnessMaxN = 40;
constexpr int kFptBaseN = 12;
constexpr int kFptMaxK = 10;
constexpr int kDoubleOracleInstances = 500;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(int id, const std::string& name, const Outcome& o) {
  std::printf("%s %d %s: %s\n", o.pass ? "PASS" : "FAIL", id, name.c_str(), o.detail.c_str());
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

int cli(std::vector<std::string> args) {
  args.insert(args.begin(), "scfe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

std::string cli_out(std::vector<std::string> args) {
  args.insert(args.begin(), "scfe");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return out.str();
}

std::filesystem::path workdir() {
  auto dir = std::filesystem::temp_directory_path() / "scfe_acceptance";
  std::filesystem::create_directories(dir);
  return dir;
}

// Models accepted in criterion 2 and drawings produced in criterion 3, reused later.
std::vector<std::pair<PlainGraph, ArcModel>> accepted_models;
std::vector<std::pair<SignedGraph, Drawing>> produced_drawings;

void net_rejection() {
  Outcome o;
  auto start = Clock::now();
  std::string file = (workdir() / "net.txt").string();
  write_file(file, format_graph(testkit::net_complete()));
  int decide = cli({"decide", file});
  int oracle = cli({"oracle", file});
  double t = seconds_since(start);
  if (decide != 1) o.fail("decide exit code " + std::to_string(decide));
  if (oracle != 1) o.fail("oracle exit code " + std::to_string(oracle));
  if (t >= kNetSeconds) o.fail("took " + std::to_string(t) + " s");
  if (o.pass) o.detail = "decide and oracle both not drawable in " + std::to_string(t) + " s";
  report(1, "net rejection", o);
}

void theorem_equivalence() {
  Outcome o;
  auto start = Clock::now();
  int checked = 0, drawable = 0, disagreements = 0;
  auto check = [&](const PlainGraph& h) {
    SignedGraph g = complete_from_positive(h);
    auto r = decide_complete(g);
    bool oracle = oracle_pca(h).pca;
    ++checked;
    if (r.drawable() != oracle) {
      ++disagreements;
      return;
    }
    if (!r.drawable()) return;
    ++drawable;
    if (!is_valid_drawing(g, *r.drawing).valid) o.fail("invalid drawing returned");
    accepted_models.emplace_back(h, *r.proper_model);
  };
  for (int n = 1; n <= 5; ++n)
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << testkit::pair_count(n)); ++mask)
      check(testkit::graph_from_mask(n, mask));
  auto classes = testkit::unlabeled_graphs(6);
  if (classes.size() != 156) o.fail("expected 156 six-vertex classes, got " + std::to_string(classes.size()));
  for (const auto& h : classes) check(h);
  double t = seconds_since(start);
  if (disagreements) o.fail(std::to_string(disagreements) + " disagreements");
  if (t >= kEquivalenceSeconds) o.fail("took " + std::to_string(t) + " s");
  if (o.pass)
    o.detail = std::to_string(checked) + " graphs (" + std::to_string(drawable) +
               " drawable), 0 disagreements, " + std::to_string(t) + " s";
  report(2, "complete-graph decision equals proper circular arc oracle", o);
}

void constructive_soundness() {
  Outcome o;
  std::mt19937_64 rng(20240601);
  double worst = 0;
  for (int i = 0; i < kSoundnessInstances; ++i) {
    int n = kSoundnessMinN + static_cast<int>(rng() % (kSoundnessMaxN - kSoundnessMinN + 1));
    std::string seed = std::to_string(1000 + i);
    SignedGraph g = parse_graph(cli_out({"gen", "--seed", seed, "--n", std::to_string(n), "--mode", "pca"}));
    auto start = Clock::now();
    auto r = decide_general(g);
    double t = seconds_since(start);
    worst = std::max(worst, t);
    if (!r.drawable()) {
      o.fail("seed " + seed + " not drawable");
      continue;
    }
    auto v = verify(g, *r.drawing);
    if (!v.valid || !v.violations.empty()) o.fail("seed " + seed + " drawing has violations");
    if (t >= kInstanceSeconds) o.fail("seed " + seed + " took " + std::to_string(t) + " s");
    produced_drawings.emplace_back(g, *r.drawing);
  }
  if (o.pass)
    o.detail = std::to_string(kSoundnessInstances) + " instances drawable and verified, slowest " +
               std::to_string(worst) + " s";
  report(3, "generated instances are drawn and verified", o);
}

struct TieCase {
  std::string name;
  SignedGraph g;
  Drawing d;
};

std::vector<TieCase> tie_suite() {
  auto q = [](long a, long b) { return ratio(a, b); };
  std::vector<TieCase> suite;
  suite.push_back({"three-vertex tie", SignedGraph(3, {{1, 2}}, {{1, 3}}), testkit::drawing({0, q(1, 4), q(3, 4)})});
  suite.push_back({"mirrored three-vertex tie", SignedGraph(3, {{1, 2}}, {{1, 3}}), testkit::drawing({0, q(3, 4), q(1, 4)})});
  suite.push_back({"antipodal double tie", SignedGraph(4, {{1, 2}, {3, 4}}, {{1, 4}, {2, 3}}),
                   testkit::drawing({0, q(1, 4), q(1, 2), q(3, 4)})});
  suite.push_back({"tie next to its mirror", SignedGraph(6, {{1, 2}, {4, 5}}, {{1, 3}, {4, 6}}),
                   testkit::drawing({0, q(1, 8), q(7, 8), q(1, 2), q(3, 8), q(5, 8)})});
  for (int n : {8, 12, 16, 24}) {
    std::vector<VertexPair> pos;
    for (Vertex v = 1; v <= n; ++v) pos.emplace_back(v, v % n + 1);
    for (Vertex v = 1; v + 2 <= n; v += 4) pos.emplace_back(v, v + 2);
    suite.push_back({"chorded " + std::to_string(n) + "-gon", complete_from_positive(PlainGraph(n, pos)),
                     equally_spaced(n)});
  }
  // clockwise ends of equal-length models of generated instances
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    SignedGraph g = gen_instance(seed, 6 + static_cast<int>(seed % 20), GenMode::Pca);
    auto r = recognize_pca(positive_subgraph(g));
    try {
      auto e = equalize_lengths(*r.model);
      suite.push_back({"generated seed " + std::to_string(seed), g, model_to_almost_valid(e, g).drawing});
    } catch (const EqualizationError&) {
    }
  }
  return suite;
}

void tie_perturbation() {
  Outcome o;
  int with_ties = 0, total_steps = 0;
  auto suite = tie_suite();
  for (const auto& c : suite) {
    auto w = almost_valid_window(c.g, c.d);
    if (!w) {
      o.fail(c.name + ": not almost valid");
      continue;
    }
    auto labels = cyclic_labeling(c.d);
    Drawing d = c.d;
    int steps = 0, ties = 0;
    if (w->lo > 0) {
      auto profile = violating_vertices(c.g, d, w->lo);
      ties = static_cast<int>(profile.vertices.size());
      while (!profile.vertices.empty() && steps <= ties) {
        Vertex next = 0;
        for (Vertex v : labels)
          if (profile.contains(v)) {
            next = v;
            break;
          }
        d = perturb_step(c.g, d, w->lo, next);
        ++steps;
        if (!same_cyclic_order(cyclic_labeling(d), labels)) o.fail(c.name + ": cyclic order changed");
        profile = violating_vertices(c.g, d, w->lo);
      }
    }
    auto r = almost_valid_to_valid(c.g, c.d);
    if (steps > ties || r.steps > r.initial_ties) o.fail(c.name + ": more steps than initial ties");
    if (r.steps != steps || !(r.drawing == d)) o.fail(c.name + ": loop differs from stepwise run");
    if (!same_cyclic_order(cyclic_labeling(r.drawing), labels)) o.fail(c.name + ": cyclic order changed");
    if (!verify(c.g, r.drawing).valid) o.fail(c.name + ": output not valid");
    with_ties += ties > 0;
    total_steps += steps;
  }
  if (with_ties < 8) o.fail("suite has only " + std::to_string(with_ties) + " tied cases");
  if (o.pass)
    o.detail = std::to_string(suite.size()) + " drawings (" + std::to_string(with_ties) + " with ties), " +
               std::to_string(total_steps) + " steps, all within tie counts and valid";
  report(4, "tie perturbation", o);
}

void equal_length_contract() {
  Outcome o;
  for (const auto& [h, m] : accepted_models) {
    EqualLengthModel e;
    try {
      e = equalize_lengths(m);
    } catch (const std::exception& ex) {
      o.fail(std::string("equalization failed: ") + ex.what());
      continue;
    }
    for (const auto& a : e.model.arcs)
      if (a.length != e.length) o.fail("unequal arc lengths");
    for (Vertex u = 1; u <= h.order(); ++u)
      for (Vertex v = u + 1; v <= h.order(); ++v)
        if (arcs_intersect(e.model.at(u), e.model.at(v)) != h.has_edge(u, v))
          o.fail("pair " + std::to_string(u) + "," + std::to_string(v) + " differs");
  }
  if (accepted_models.empty()) o.fail("no accepted models from criterion 2");
  if (o.pass) o.detail = std::to_string(accepted_models.size()) + " models equalized, intersections identical";
  report(5, "equal-length models", o);
}

void round_trip() {
  Outcome o;
  for (const auto& [g, d] : produced_drawings) {
    Completion c = drawing_to_completion(g, d);
    SignedGraph full = apply_completion(g, c);
    ArcModel m = drawing_to_model(full, d);
    if (!verify_model(positive_subgraph(full), m)) o.fail("midpoint model does not verify");
  }
  if (produced_drawings.empty()) o.fail("no drawings from criterion 3");
  if (o.pass) o.detail = std::to_string(produced_drawings.size()) + " drawings turned back into verified models";
  report(6, "drawing to model round trip", o);
}

void fpt_behaviour() {
  Outcome o;
  std::mt19937_64 rng(12);
  SignedGraph base = gen_instance(4242, kFptBaseN, GenMode::Pca);
  if (!decide_complete(base).drawable()) o.fail("base instance not drawable");

  // undrawable base: an induced net on 1..6 next to a path on 7..12
  PlainGraph net = testkit::net();
  std::vector<VertexPair> bad_pos(net.edges().begin(), net.edges().end());
  for (Vertex v = 7; v < kFptBaseN; ++v) bad_pos.emplace_back(v, v + 1);
  SignedGraph bad = complete_from_positive(PlainGraph(kFptBaseN, bad_pos));
  std::vector<VertexPair> outside;
  for (Vertex u = 1; u <= kFptBaseN; ++u)
    for (Vertex v = u + 1; v <= kFptBaseN; ++v)
      if (v > 6) outside.emplace_back(u, v);

  std::vector<VertexPair> all;
  for (Vertex u = 1; u <= kFptBaseN; ++u)
    for (Vertex v = u + 1; v <= kFptBaseN; ++v) all.emplace_back(u, v);
  std::shuffle(all.begin(), all.end(), rng);
  std::shuffle(outside.begin(), outside.end(), rng);

  std::ostringstream counts;
  for (int k = 1; k <= kFptMaxK; ++k) {
    const std::uint64_t bound = std::uint64_t{1} << k;
    SignedGraph g = testkit::delete_pairs(base, {all.begin(), all.begin() + k});
    auto r = decide_general(g);
    if (!r.drawable()) o.fail("k=" + std::to_string(k) + " drawable base refused");
    else if (!verify(g, *r.drawing).valid) o.fail("k=" + std::to_string(k) + " invalid drawing");
    if (r.completions_examined > bound) o.fail("k=" + std::to_string(k) + " examined too many");

    SignedGraph h = testkit::delete_pairs(bad, {outside.begin(), outside.begin() + k});
    auto s = decide_general(h);
    if (s.drawable()) o.fail("k=" + std::to_string(k) + " net instance drawable");
    if (s.completions_examined != bound || s.completions_refuted != bound)
      o.fail("k=" + std::to_string(k) + " undrawable instance examined " + std::to_string(s.completions_examined));
    counts << (k > 1 ? "," : "") << r.completions_examined;
  }

  int disagreements = 0, drawable = 0;
  for (int t = 0; t < kDoubleOracleInstances; ++t) {
    int n = 4 + static_cast<int>(rng() % 3);
    int k = std::min(static_cast<int>(rng() % 5), testkit::pair_count(n));
    std::vector<VertexPair> pairs;
    for (Vertex u = 1; u <= n; ++u)
      for (Vertex v = u + 1; v <= n; ++v) pairs.emplace_back(u, v);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    std::vector<VertexPair> pos, neg;
    const auto bias = rng() % 4;
    for (std::size_t i = k; i < pairs.size(); ++i) (rng() % 4 < bias ? pos : neg).push_back(pairs[i]);
    SignedGraph g(n, pos, neg);
    auto r = decide_general(g);
    auto d = oracle_decide(g);
    disagreements += r.drawable() != d.drawable;
    drawable += r.drawable();
    if (!r.drawable() && r.completions_examined != (std::uint64_t{1} << k)) o.fail("refusal did not examine 2^k");
  }
  if (disagreements) o.fail(std::to_string(disagreements) + " disagreements with the double oracle");
  if (o.pass)
    o.detail = "drawable base examined " + counts.str() + " for k=1.." + std::to_string(kFptMaxK) +
               "; undrawable exactly 2^k; " + std::to_string(kDoubleOracleInstances) + " small instances (" +
               std::to_string(drawable) + " drawable) match the double oracle";
  report(7, "completion search", o);
}

void determinism() {
  Outcome o;
  auto dir = workdir();
  std::vector<std::string> graphs;
  for (int s : {3, 17, 99}) {
    std::string f = (dir / ("det_pca_" + std::to_string(s) + ".txt")).string();
    write_file(f, cli_out({"gen", "--seed", std::to_string(s), "--n", "15", "--mode", "pca"}));
    graphs.push_back(f);
  }
  std::string gen_a = cli_out({"gen", "--seed", "5", "--n", "7", "--mode", "random", "--missing-prob", "1/4"});
  std::string gen_b = cli_out({"gen", "--seed", "5", "--n", "7", "--mode", "random", "--missing-prob", "1/4"});
  if (gen_a != gen_b) o.fail("gen output differs");
  std::string rnd = (dir / "det_random.txt").string();
  write_file(rnd, gen_a);
  graphs.push_back(rnd);
  std::string lp = (dir / "det_direct.txt").string();
  write_file(lp, format_graph(complete_from_positive(testkit::graph_from_mask(7, 48627))));
  graphs.push_back(lp);

  int compared = 0;
  for (const auto& g : graphs) {
    std::vector<std::string> files[2];
    for (int run = 0; run < 2; ++run) {
      std::string stem = g + ".run" + std::to_string(run);
      files[run] = {stem + ".drawing", stem + ".svg", stem + ".model.svg"};
      int code = cli({"draw", g, "-o", files[run][0], "--svg", files[run][1], "--model-svg", files[run][2]});
      if (code == 1) files[run].clear();
      else if (code != 0) o.fail(g + ": draw exit code " + std::to_string(code));
    }
    if (files[0].size() != files[1].size()) o.fail(g + ": decisions differ");
    for (std::size_t i = 0; i < files[0].size() && i < files[1].size(); ++i) {
      if (read_file(files[0][i]) != read_file(files[1][i])) o.fail(files[0][i] + " differs between runs");
      ++compared;
    }
  }
  if (compared == 0) o.fail("nothing compared");
  if (o.pass) o.detail = std::to_string(compared) + " output files byte-identical across two runs";
  report(8, "determinism", o);
}

}  // namespace

int main() {
  std::vector<std::function<void()>> criteria{net_rejection,       theorem_equivalence, constructive_soundness,
                                              tie_perturbation, equal_length_contract, round_trip,
                                              fpt_behaviour,       determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      Outcome o;
      o.fail(std::string("exception: ") + e.what());
      report(static_cast<int>(i + 1), "criterion", o);
    }
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
