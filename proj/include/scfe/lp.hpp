#pragma once

#include <vector>

#include "scfe/geometry.hpp"

namespace scfe::lp {

enum class Relation { LessEq, GreaterEq, Equal };
enum class Status { Optimal, Infeasible, Unbounded };

// maximize objective·x  subject to rows, x >= 0. Exact arithmetic.
struct Program {
  explicit Program(int vars) : num_vars(vars), objective(vars) {}

  struct Row {
    std::vector<Rational> coef;
    Relation rel;
    Rational rhs;
  };

  void add(std::vector<Rational> coef, Relation rel, Rational rhs) {
    coef.resize(num_vars);
    rows.push_back({std::move(coef), rel, std::move(rhs)});
  }

  int num_vars;
  std::vector<Rational> objective;
  std::vector<Row> rows;
};

struct Solution {
  Status status = Status::Infeasible;
  Rational value;
  std::vector<Rational> x;
};

Solution solve(const Program& p);

}  // namespace scfe::lp
