#include "scfe/cli.hpp"

#include <CLI11.hpp>

#include "scfe/errors.hpp"
#include "scfe/generate.hpp"
#include "scfe/io.hpp"
#include "scfe/log.hpp"
#include "scfe/solver.hpp"
#include "scfe/svg.hpp"

namespace scfe {

namespace {

constexpr int kDrawable = 0;
constexpr int kNotDrawable = 1;
constexpr int kUsage = 2;
constexpr int kInternal = 3;

const char* route_name(Route r) {
  switch (r) {
    case Route::Degenerate: return "degenerate";
    case Route::EqualLength: return "equal-length";
    case Route::DirectProgram: return "direct-program";
  }
  return "?";
}

void print_completion(std::ostream& out, const Completion& c) {
  for (const auto& [p, s] : c)
    out << "completion " << p.u << ' ' << p.v << ' ' << (s == Sign::Positive ? '+' : '-') << '\n';
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  init_logging();
  CLI::App app{"Signed graph drawings on the circle: friends closer than enemies"};
  app.require_subcommand(1);

  std::string graph_path, drawing_path, out_path, svg_path, model_svg_path, mode_name = "pca",
                                                                             missing = "0";
  int max_k = 25, n_max = 7, n = 0;
  bool exhaustive = false;
  std::uint64_t seed = 0;

  auto* decide = app.add_subcommand("decide", "Decide whether the graph has a valid drawing");
  decide->add_option("graph", graph_path, "Graph file")->required();
  decide->add_option("--max-k", max_k, "Ceiling on the number of missing pairs");
  decide->add_flag("--exhaustive", exhaustive, "Examine every completion");

  auto* draw = app.add_subcommand("draw", "Construct a valid drawing");
  draw->add_option("graph", graph_path, "Graph file")->required();
  draw->add_option("-o,--output", out_path, "Drawing file (default: stdout)");
  draw->add_option("--svg", svg_path, "SVG of the drawing");
  draw->add_option("--model-svg", model_svg_path, "SVG of the arc model");
  draw->add_option("--max-k", max_k, "Ceiling on the number of missing pairs");

  auto* check = app.add_subcommand("verify", "Check a drawing against a graph");
  check->add_option("graph", graph_path, "Graph file")->required();
  check->add_option("drawing", drawing_path, "Drawing file")->required();

  auto* oracle = app.add_subcommand("oracle", "Brute-force decision for small graphs");
  oracle->add_option("graph", graph_path, "Graph file")->required();
  oracle->add_option("--n-max", n_max, "Largest order the oracle accepts");

  auto* gen = app.add_subcommand("gen", "Generate an instance");
  gen->add_option("--seed", seed, "Random seed")->required();
  gen->add_option("--n", n, "Number of vertices")->required();
  gen->add_option("--mode", mode_name, "pca or random")->check(CLI::IsMember({"pca", "random"}));
  gen->add_option("--missing-prob", missing, "Missing-pair probability for random mode");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*gen) {
      out << format_graph(gen_instance(seed, n, parse_gen_mode(mode_name), parse_rational(missing)));
      return 0;
    }

    SignedGraph g = parse_graph(read_file(graph_path));

    if (*decide || *draw) {
      SolveResult r = decide_general(g, {max_k, exhaustive});
      if (*decide) {
        out << (r.drawable() ? "drawable" : "not drawable") << '\n';
        out << "completions-examined " << r.completions_examined << '\n';
        if (exhaustive) out << "drawable-completions " << r.drawable_completions << '\n';
        if (r.drawable()) {
          out << "route " << route_name(*r.route) << '\n';
          print_completion(out, r.completion);
        }
      } else if (!r.drawable()) {
        err << "not drawable\n";
      } else {
        std::string text = format_drawing(*r.drawing);
        if (out_path.empty()) out << text;
        else write_file(out_path, text);
        if (!svg_path.empty()) write_file(svg_path, render_svg(g, *r.drawing));
        if (!model_svg_path.empty())
          write_file(model_svg_path,
                     render_svg(r.equal_model ? r.equal_model->model : *r.proper_model));
      }
      return r.drawable() ? kDrawable : kNotDrawable;
    }

    if (*check) {
      Drawing d = parse_drawing(read_file(drawing_path));
      VerifyReport r = verify(g, d);
      out << (r.valid ? "valid" : "invalid") << '\n';
      if (r.window) out << "window " << r.window->lo.get_str() << ' ' << r.window->hi.get_str() << '\n';
      else out << "window none\n";
      for (const auto& t : r.violations)
        out << "violation " << t.i << ' ' << t.j << ' ' << t.k << '\n';
      return r.valid ? kDrawable : kNotDrawable;
    }

    OracleDecision r = oracle_decide(g, n_max);
    out << (r.drawable ? "drawable" : "not drawable") << '\n';
    out << "completions-examined " << r.completions_examined << '\n';
    if (r.completion) print_completion(out, *r.completion);
    return r.drawable ? kDrawable : kNotDrawable;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInternal;
  }
}

}  // namespace scfe
