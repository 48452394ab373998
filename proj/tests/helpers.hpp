#pragma once
#include <string>
#include <vector>

#include "algrest/germ.hpp"
#include "algrest/textio.hpp"

namespace algrest::testing {

inline Branch make_branch(const std::string& name, const std::vector<std::string>& coords) {
  Branch b{name, {}};
  for (const auto& c : coords) b.coords.push_back(parse_unipoly(c));
  return b;
}

// T7: x1^2 + x2^3 + x3^3 = x2*x3 = 0, weights (3,2,2).
inline MultiGerm t7_germ() {
  VarSetPtr vs = make_varset({"x1", "x2", "x3"}, {3, 2, 2});
  MultiGerm g;
  g.vs = vs;
  g.branches = {make_branch("B1", {"t^3", "0", "-t^2"}),
                make_branch("B2", {"t^3", "-t^2", "0"})};
  g.ideal = {vs, {parse_polynomial("x1^2+x2^3+x3^3", vs), parse_polynomial("x2*x3", vs)}};
  g.components = {
      Component{"B1", {0},
                IdealPresentation{vs, {parse_polynomial("x2", vs),
                                       parse_polynomial("x1^2+x3^3", vs)}}},
      Component{"B2", {1},
                IdealPresentation{vs, {parse_polynomial("x3", vs),
                                       parse_polynomial("x1^2+x2^3", vs)}}}};
  return g;
}

// T8: x1^2 + x2^3 - x3^4 = x2*x3 = 0, weights (6,4,3).
inline MultiGerm t8_germ() {
  VarSetPtr vs = make_varset({"x1", "x2", "x3"}, {6, 4, 3});
  MultiGerm g;
  g.vs = vs;
  g.branches = {make_branch("C1", {"t^3", "-t^2", "0"}),
                make_branch("Bp", {"-t^2", "0", "t"}),
                make_branch("Bm", {"t^2", "0", "-t"})};
  g.ideal = {vs, {parse_polynomial("x1^2+x2^3-x3^4", vs), parse_polynomial("x2*x3", vs)}};
  g.components = {
      Component{"C1", {0},
                IdealPresentation{vs, {parse_polynomial("x3", vs),
                                       parse_polynomial("x1^2+x2^3", vs)}}},
      Component{"C2", {1, 2},
                IdealPresentation{vs, {parse_polynomial("x2", vs),
                                       parse_polynomial("x1^2-x3^4", vs)}}}};
  return g;
}

// A2 as the planar cusp x1^3 - x2^2 = 0, weights (2,3), branch (t^2, t^3).
inline MultiGerm a2_germ() {
  VarSetPtr vs = make_varset({"x1", "x2"}, {2, 3});
  MultiGerm g;
  g.vs = vs;
  g.branches = {make_branch("C", {"t^2", "t^3"})};
  g.ideal = {vs, {parse_polynomial("x1^3-x2^2", vs)}};
  return g;
}

// D4: x1^2*x2 - x2^3 = 0, weights (1,1); three lines through the origin.
inline MultiGerm d4_germ() {
  VarSetPtr vs = make_varset({"x1", "x2"}, {1, 1});
  MultiGerm g;
  g.vs = vs;
  g.branches = {make_branch("L", {"t", "0"}), make_branch("Bp", {"t", "t"}),
                make_branch("Bm", {"-t", "t"})};
  g.ideal = {vs, {parse_polynomial("x1^2*x2-x2^3", vs)}};
  g.components = {
      Component{"C1", {0}, IdealPresentation{vs, {parse_polynomial("x2", vs)}}},
      Component{"C2", {1, 2},
                IdealPresentation{vs, {parse_polynomial("x1^2-x2^2", vs)}}}};
  return g;
}

}  // namespace algrest::testing
