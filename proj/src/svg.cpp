#include "scfe/svg.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace scfe {

namespace {

constexpr double kCenter = 200.0;
constexpr double kRadius = 150.0;

std::string num(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

struct Point {
  double x, y;
};

Point on_circle(double turns, double radius) {
  double a = turns * 2.0 * std::numbers::pi;
  return {kCenter + radius * std::sin(a), kCenter - radius * std::cos(a)};
}

std::string header() {
  return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"400\" height=\"400\" viewBox=\"0 0 400 400\">\n"
         "<rect width=\"400\" height=\"400\" fill=\"white\"/>\n";
}

}  // namespace

std::string render_svg(const SignedGraph& g, const Drawing& d) {
  check_drawing(g.order(), d);
  std::ostringstream out;
  out << header();
  out << "<circle cx=\"" << num(kCenter) << "\" cy=\"" << num(kCenter) << "\" r=\"" << num(kRadius)
      << "\" fill=\"none\" stroke=\"#999999\"/>\n";
  auto chord = [&](const VertexPair& e, bool positive) {
    Point a = on_circle(d.at(e.u).turns().get_d(), kRadius);
    Point b = on_circle(d.at(e.v).turns().get_d(), kRadius);
    out << "<line class=\"" << (positive ? "positive" : "negative") << "\" x1=\"" << num(a.x)
        << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\"" << num(b.y)
        << "\" stroke=\"" << (positive ? "#1f5fbf" : "#bf3f1f") << "\" stroke-width=\"1.5\""
        << (positive ? "" : " stroke-dasharray=\"6,4\"") << "/>\n";
  };
  for (const auto& e : g.positive_edges()) chord(e, true);
  for (const auto& e : g.negative_edges()) chord(e, false);
  for (Vertex v = 1; v <= g.order(); ++v) {
    double t = d.at(v).turns().get_d();
    Point p = on_circle(t, kRadius);
    Point label = on_circle(t, kRadius + 18.0);
    out << "<circle class=\"vertex\" cx=\"" << num(p.x) << "\" cy=\"" << num(p.y)
        << "\" r=\"5\" fill=\"black\"/>\n";
    out << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y)
        << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">" << v
        << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_svg(const ArcModel& m) {
  std::ostringstream out;
  out << header();
  const int n = m.order();
  const double inner = 40.0;
  const double step = n > 0 ? (kRadius + 20.0 - inner) / n : 0.0;
  for (Vertex v = 1; v <= n; ++v) {
    const Arc& a = m.at(v);
    double r = inner + step * (v - 1) + step / 2;
    double s = a.start.turns().get_d();
    double len = a.length.get_d();
    Point p0 = on_circle(s, r), p1 = on_circle(s + len, r);
    out << "<path class=\"arc\" d=\"M " << num(p0.x) << " " << num(p0.y) << " A " << num(r) << " "
        << num(r) << " 0 " << (len > 0.5 ? 1 : 0) << " 1 " << num(p1.x) << " " << num(p1.y)
        << "\" fill=\"none\" stroke=\"#1f5fbf\" stroke-width=\"3\"/>\n";
    auto cap = [&](Point p, bool closed) {
      out << "<circle class=\"" << (closed ? "closed" : "open") << "\" cx=\"" << num(p.x)
          << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\"" << (closed ? "#1f5fbf" : "white")
          << "\" stroke=\"#1f5fbf\"/>\n";
    };
    cap(p0, a.closed_start);
    cap(p1, a.closed_end);
    Point label = on_circle(s + len / 2, r);
    out << "<text x=\"" << num(label.x) << "\" y=\"" << num(label.y - 6)
        << "\" font-size=\"10\" text-anchor=\"middle\">" << v << "</text>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace scfe
