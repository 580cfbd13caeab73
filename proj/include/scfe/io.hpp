#pragma once

#include <string>

#include "scfe/geometry.hpp"
#include "scfe/signed_graph.hpp"

namespace scfe {

SignedGraph parse_graph(const std::string& text);
std::string format_graph(const SignedGraph& g);

Drawing parse_drawing(const std::string& text);
std::string format_drawing(const Drawing& d);

// Accepts "p/q", an integer, or a decimal such as "0.25".
Rational parse_rational(const std::string& token);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace scfe
