#include "scfe/lp.hpp"

namespace scfe::lp {

namespace {

class Tableau {
 public:
  Tableau(int rows, int cols) : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)),
                                basis_(rows, -1), blocked_(cols, false) {}

  Rational& at(int r, int c) { return a_[r][c]; }
  Rational& rhs(int r) { return a_[r][n_]; }
  int rows() const { return m_; }
  int cols() const { return n_; }
  std::vector<int>& basis() { return basis_; }
  void block(int c) { blocked_[c] = true; }

  // Maximizes cost·x from the current basic feasible solution.
  Status optimize(const std::vector<Rational>& cost) {
    std::vector<Rational> d(n_ + 1);
    for (int j = 0; j < n_; ++j) d[j] = cost[j];
    d[n_] = 0;
    for (int r = 0; r < m_; ++r) {
      const Rational& cb = cost[basis_[r]];
      if (cb == 0) continue;
      for (int j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) d[j] -= cb * a_[r][j];
    }
    int degenerate = 0;
    while (true) {
      bool bland = degenerate > 50;
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (blocked_[j] || d[j] <= 0) continue;
        if (enter < 0) {
          enter = j;
          if (bland) break;
        } else if (d[j] > d[enter]) {
          enter = j;
        }
      }
      if (enter < 0) return Status::Optimal;
      int leave = -1;
      Rational best;
      for (int r = 0; r < m_; ++r) {
        if (a_[r][enter] <= 0) continue;
        Rational ratio = a_[r][n_] / a_[r][enter];
        if (leave < 0 || ratio < best || (ratio == best && basis_[r] < basis_[leave])) {
          leave = r;
          best = ratio;
        }
      }
      if (leave < 0) return Status::Unbounded;
      degenerate = best == 0 ? degenerate + 1 : 0;
      pivot(leave, enter, d);
    }
  }

  void pivot(int r, int c, std::vector<Rational>& d) {
    Rational p = a_[r][c];
    for (int j = 0; j <= n_; ++j)
      if (a_[r][j] != 0) a_[r][j] /= p;
    for (int i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (int j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
    }
    if (d[c] != 0) {
      Rational f = d[c];
      for (int j = 0; j <= n_; ++j)
        if (a_[r][j] != 0) d[j] -= f * a_[r][j];
    }
    basis_[r] = c;
  }

 private:
  int m_, n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<int> basis_;
  std::vector<bool> blocked_;
};

}  // namespace

Solution solve(const Program& p) {
  const int m = static_cast<int>(p.rows.size());
  const int nv = p.num_vars;
  int slacks = 0, artificials = 0;
  for (const auto& row : p.rows) {
    bool flip = row.rhs < 0;
    Relation rel = row.rel;
    if (flip && rel != Relation::Equal)
      rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
    if (rel != Relation::Equal) ++slacks;
    if (rel != Relation::LessEq) ++artificials;
  }
  const int cols = nv + slacks + artificials;
  Tableau t(m, cols);
  int next_slack = nv, next_art = nv + slacks;
  for (int r = 0; r < m; ++r) {
    const auto& row = p.rows[r];
    bool flip = row.rhs < 0;
    Relation rel = row.rel;
    if (flip && rel != Relation::Equal)
      rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
    for (int j = 0; j < nv; ++j) t.at(r, j) = flip ? Rational(-row.coef[j]) : row.coef[j];
    t.rhs(r) = flip ? Rational(-row.rhs) : row.rhs;
    if (rel == Relation::LessEq) {
      t.at(r, next_slack) = 1;
      t.basis()[r] = next_slack++;
    } else {
      if (rel == Relation::GreaterEq) t.at(r, next_slack++) = -1;
      t.at(r, next_art) = 1;
      t.basis()[r] = next_art++;
    }
  }

  Solution sol;
  if (artificials > 0) {
    std::vector<Rational> phase1(cols);
    for (int j = nv + slacks; j < cols; ++j) phase1[j] = -1;
    t.optimize(phase1);
    Rational infeas = 0;
    for (int r = 0; r < m; ++r)
      if (t.basis()[r] >= nv + slacks) infeas += t.rhs(r);
    if (infeas != 0) {
      sol.status = Status::Infeasible;
      return sol;
    }
    std::vector<Rational> dummy(cols + 1);
    for (int r = 0; r < m; ++r) {
      if (t.basis()[r] < nv + slacks) continue;
      for (int j = 0; j < nv + slacks; ++j)
        if (t.at(r, j) != 0) {
          t.pivot(r, j, dummy);
          break;
        }
    }
    for (int j = nv + slacks; j < cols; ++j) t.block(j);
  }

  std::vector<Rational> cost(cols);
  for (int j = 0; j < nv; ++j) cost[j] = p.objective[j];
  sol.status = t.optimize(cost);
  if (sol.status != Status::Optimal) return sol;
  sol.x.assign(nv, Rational(0));
  for (int r = 0; r < m; ++r)
    if (t.basis()[r] < nv) sol.x[t.basis()[r]] = t.rhs(r);
  sol.value = 0;
  for (int j = 0; j < nv; ++j) sol.value += p.objective[j] * sol.x[j];
  return sol;
}

}  // namespace scfe::lp
