#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "scfe/signed_graph.hpp"

namespace scfe {

using Rational = mpq_class;

Rational frac(const Rational& x);  // x - floor(x), in [0,1)
Rational ratio(long num, long den);  // canonical num/den

// A point on the circumference, in turns.
class Angle {
 public:
  Angle() = default;
  Angle(const Rational& turns) : v_(frac(turns)) {}  // NOLINT: implicit on purpose
  Angle(long num, long den) : Angle(ratio(num, den)) {}

  const Rational& turns() const { return v_; }
  double radians() const;
  std::string str() const;  // "p/q", always with a denominator

  Angle operator+(const Rational& t) const { return Angle(v_ + t); }
  Angle operator-(const Rational& t) const { return Angle(v_ - t); }
  auto operator<=>(const Angle& o) const { return cmp(v_, o.v_) <=> 0; }
  bool operator==(const Angle& o) const { return v_ == o.v_; }

 private:
  Rational v_{0};
};

// How far one travels from p to reach q in increasing direction.
Rational forward(const Angle& p, const Angle& q);
Rational distance(const Angle& p, const Angle& q);
bool in_right_half(const Angle& p, const Angle& q);
bool in_left_half(const Angle& p, const Angle& q);
Angle midpoint_forward(const Angle& from, const Angle& to);

struct Drawing {
  std::vector<Angle> pos;  // pos[v-1]

  Drawing() = default;
  explicit Drawing(std::vector<Angle> p) : pos(std::move(p)) {}
  int order() const { return static_cast<int>(pos.size()); }
  const Angle& at(Vertex v) const { return pos.at(v - 1); }
  Angle& at(Vertex v) { return pos.at(v - 1); }
  bool operator==(const Drawing&) const = default;
};

// Throws PreconditionError unless D covers 1..n injectively.
void check_drawing(int n, const Drawing& d);
Drawing equally_spaced(int n);

struct Triple {
  Vertex i, j, k;
  bool operator==(const Triple&) const = default;
};

struct ValidityReport {
  bool valid = true;
  std::vector<Triple> violations;  // d(i,j) >= d(i,k) with j friend, k enemy of i
};

ValidityReport is_valid_drawing(const SignedGraph& g, const Drawing& d);

struct Window {
  Rational lo;  // 0 when nothing bounds from below
  Rational hi;  // at most 1/2
};

std::optional<Window> almost_valid_window(const SignedGraph& g, const Drawing& d);
bool window_contains(const std::optional<Window>& w, const Rational& threshold);

std::vector<Vertex> cyclic_labeling(const Drawing& d);
// Equal as cyclic sequences, i.e. up to rotation.
bool same_cyclic_order(const std::vector<Vertex>& a, const std::vector<Vertex>& b);

struct Arc {
  Angle start;
  Rational length;
  bool closed_start = true;
  bool closed_end = true;

  Arc() = default;
  Arc(Angle s, Rational len, bool cs = true, bool ce = true);
  Angle end() const { return start + length; }
  bool contains(const Angle& p) const;
  bool operator==(const Arc& o) const {
    return start == o.start && length == o.length && closed_start == o.closed_start &&
           closed_end == o.closed_end;
  }
};

struct ArcModel {
  std::vector<Arc> arcs;  // arcs[v-1]

  ArcModel() = default;
  explicit ArcModel(std::vector<Arc> a) : arcs(std::move(a)) {}
  int order() const { return static_cast<int>(arcs.size()); }
  const Arc& at(Vertex v) const { return arcs.at(v - 1); }
  Arc& at(Vertex v) { return arcs.at(v - 1); }
};

bool arcs_intersect(const Arc& a, const Arc& b);
bool arc_subset(const Arc& inner, const Arc& outer);
PlainGraph intersection_graph(const ArcModel& m);
bool is_proper_model(const ArcModel& m);

ArcModel rotate(const ArcModel& m, const Rational& t);
ArcModel mirror(const ArcModel& m);

}  // namespace scfe
