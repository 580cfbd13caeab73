#include <doctest.h>

#include <random>

#include "scfe/lp.hpp"

using namespace scfe;
using lp::Relation;

namespace {

Rational q(long a, long b) { return ratio(a, b); }

}  // namespace

TEST_CASE("small programs") {
  lp::Program p(2);
  p.objective = {3, 2};
  p.add({1, 1}, Relation::LessEq, 4);
  p.add({1, 3}, Relation::LessEq, 6);
  p.add({1, 0}, Relation::LessEq, 3);
  auto s = lp::solve(p);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == 11);
  CHECK(s.x == std::vector<Rational>{3, 1});

  lp::Program eq(3);
  eq.objective = {0, 0, 1};
  eq.add({1, 1, 0}, Relation::Equal, 1);
  eq.add({-1, 0, 1}, Relation::LessEq, 0);
  eq.add({0, -1, 1}, Relation::LessEq, 0);
  auto e = lp::solve(eq);
  REQUIRE(e.status == lp::Status::Optimal);
  CHECK(e.value == q(1, 2));

  lp::Program ge(2);
  ge.objective = {-1, -1};
  ge.add({1, 2}, Relation::GreaterEq, 4);
  ge.add({3, 1}, Relation::GreaterEq, 6);
  auto g = lp::solve(ge);
  REQUIRE(g.status == lp::Status::Optimal);
  CHECK(g.value == q(-14, 5));
}

TEST_CASE("infeasible and unbounded programs") {
  lp::Program p(1);
  p.objective = {1};
  p.add({1}, Relation::LessEq, 1);
  p.add({1}, Relation::GreaterEq, 2);
  CHECK(lp::solve(p).status == lp::Status::Infeasible);

  lp::Program u(2);
  u.objective = {1, 0};
  u.add({1, -1}, Relation::LessEq, 1);
  CHECK(lp::solve(u).status == lp::Status::Unbounded);

  lp::Program neg(1);
  neg.objective = {1};
  neg.add({1}, Relation::Equal, -1);
  CHECK(lp::solve(neg).status == lp::Status::Infeasible);
}

TEST_CASE("degenerate program that cycles under the textbook rule") {
  lp::Program p(4);
  p.objective = {q(3, 4), -20, q(1, 2), -6};
  p.add({q(1, 4), -8, -1, 9}, Relation::LessEq, 0);
  p.add({q(1, 2), -12, q(-1, 2), 3}, Relation::LessEq, 0);
  p.add({0, 0, 1, 0}, Relation::LessEq, 1);
  auto s = lp::solve(p);
  REQUIRE(s.status == lp::Status::Optimal);
  CHECK(s.value == q(5, 4));
}

TEST_CASE("random two-variable programs agree with vertex enumeration") {
  std::mt19937_64 rng(41);
  auto pick = [&](int lo, int hi) { return lo + static_cast<long>(rng() % (hi - lo + 1)); };
  for (int t = 0; t < 300; ++t) {
    struct Line {
      Rational a, b, c;
    };
    std::vector<Line> lines{{1, 0, 10}, {0, 1, 10}};
    lp::Program p(2);
    p.objective = {Rational(pick(-5, 5)), Rational(pick(-5, 5))};
    p.add({1, 0}, Relation::LessEq, 10);
    p.add({0, 1}, Relation::LessEq, 10);
    int rows = static_cast<int>(pick(1, 4));
    for (int r = 0; r < rows; ++r) {
      Line l{pick(-4, 4), pick(-4, 4), pick(-6, 12)};
      lines.push_back(l);
      p.add({l.a, l.b}, Relation::LessEq, l.c);
    }
    std::vector<Line> all = lines;
    all.push_back({-1, 0, 0});
    all.push_back({0, -1, 0});
    std::optional<Rational> best;
    for (std::size_t i = 0; i < all.size(); ++i)
      for (std::size_t j = i + 1; j < all.size(); ++j) {
        Rational det = all[i].a * all[j].b - all[i].b * all[j].a;
        if (det == 0) continue;
        Rational x = (all[i].c * all[j].b - all[i].b * all[j].c) / det;
        Rational y = (all[i].a * all[j].c - all[i].c * all[j].a) / det;
        bool ok = x >= 0 && y >= 0;
        for (const auto& l : lines) ok = ok && l.a * x + l.b * y <= l.c;
        if (!ok) continue;
        Rational v = p.objective[0] * x + p.objective[1] * y;
        if (!best || v > *best) best = v;
      }
    auto s = lp::solve(p);
    if (!best) {
      REQUIRE(s.status == lp::Status::Infeasible);
      continue;
    }
    REQUIRE(s.status == lp::Status::Optimal);
    REQUIRE(s.value == *best);
    for (const auto& l : lines) REQUIRE(l.a * s.x[0] + l.b * s.x[1] <= l.c);
  }
}
