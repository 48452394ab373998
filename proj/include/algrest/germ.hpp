#pragma once
#include <optional>
#include <string>
#include <vector>

#include "algrest/forms.hpp"
#include "algrest/linalg.hpp"
#include "algrest/poly.hpp"

namespace algrest {

// Parameterized branch of a curve germ: one polynomial in t per ambient
// variable, vanishing at t = 0.
struct Branch {
  std::string name;
  std::vector<UniPoly> coords;

  void check() const {
    bool nonzero = false;
    for (const auto& c : coords) {
      if (c.coeff(0) != 0) throw Error("branch " + name + " does not pass through 0");
      nonzero |= !c.is_zero();
    }
    if (!nonzero) throw Error("branch " + name + " is constant");
  }
};

// Exact composition of a polynomial with a branch parameterization.
inline UniPoly substitute_branch(const Polynomial& p, const Branch& b) {
  return substitute(p, b.coords);
}

struct IdealPresentation {
  VarSetPtr vs;
  std::vector<Polynomial> generators;
};

struct Component {
  std::string name;
  std::vector<std::size_t> branch_indices;
  std::optional<IdealPresentation> ideal;
};

struct MultiGerm {
  VarSetPtr vs;
  std::vector<Branch> branches;
  IdealPresentation ideal;
  std::vector<Component> components;
  std::vector<std::string> dropped_coordinates;  // from reduce_ambient

  const Branch& branch(const std::string& name) const {
    for (const auto& b : branches)
      if (b.name == name) return b;
    throw Error("no branch named " + name);
  }
  const Component* component(const std::string& name) const {
    for (const auto& c : components)
      if (c.name == name) return &c;
    return nullptr;
  }
};

struct ValidationReport {
  bool ok = true;
  std::vector<std::string> errors;
  std::vector<std::string> warnings;
};

// Checks that every ideal generator vanishes identically on every branch,
// that generators are quasi-homogeneous, and (warning only) that branch
// coordinates are single monomials with exponents proportional to the
// weights.
inline ValidationReport validate(const MultiGerm& g) {
  ValidationReport rep;
  auto fail = [&](const std::string& m) {
    rep.ok = false;
    rep.errors.push_back(m);
  };
  if (g.branches.empty()) fail("germ has no branches");
  for (const auto& b : g.branches) {
    if (b.coords.size() != g.vs->size()) {
      fail("branch " + b.name + " arity mismatch");
      continue;
    }
    try {
      b.check();
    } catch (const Error& e) {
      fail(e.what());
    }
  }
  for (const auto& h : g.ideal.generators) {
    auto qd = h.quasi_degree();
    if (qd.kind == Polynomial::QDeg::None)
      fail("ideal generator " + h.str() + " is not quasi-homogeneous");
    for (const auto& b : g.branches) {
      if (b.coords.size() != g.vs->size()) continue;
      UniPoly comp = substitute(h, b.coords);
      if (!comp.is_zero())
        fail("generator " + h.str() + " does not vanish on branch " + b.name +
             " (composition " + comp.str() + ")");
    }
  }
  for (const auto& c : g.components) {
    for (std::size_t i : c.branch_indices)
      if (i >= g.branches.size()) fail("component " + c.name + " references missing branch");
    if (c.ideal)
      for (const auto& h : c.ideal->generators)
        for (std::size_t i : c.branch_indices) {
          if (i >= g.branches.size()) continue;
          if (!substitute(h, g.branches[i].coords).is_zero())
            fail("component " + c.name + " ideal generator " + h.str() +
                 " does not vanish on branch " + g.branches[i].name);
        }
  }
  // monomial-coordinate warning: coordinates should be c*t^(lambda*w_i)
  for (const auto& b : g.branches) {
    if (b.coords.size() != g.vs->size()) continue;
    bool monomial = true;
    std::optional<Rat> speed;  // exponent / weight, common across coordinates
    for (std::size_t i = 0; i < b.coords.size(); ++i) {
      const auto& c = b.coords[i];
      if (c.is_zero()) continue;
      if (c.terms().size() != 1) {
        monomial = false;
        break;
      }
      Rat s = make_rat(Int(c.terms().begin()->first), Int(g.vs->weights[i]));
      if (!speed) speed = s;
      else if (*speed != s) monomial = false;
    }
    if (!monomial)
      rep.warnings.push_back("branch " + b.name +
                             " coordinates are not weight-proportional monomials");
  }
  return rep;
}

inline void validate_or_throw(const MultiGerm& g) {
  ValidationReport r = validate(g);
  if (!r.ok) {
    std::string msg = "invalid germ:";
    for (const auto& e : r.errors) msg += "\n  " + e;
    throw Error(msg);
  }
}

// Drops the named ambient coordinates. Every dropped coordinate must vanish
// identically on every branch; dropped names are recorded on the result (they
// are implicit ideal generators).
inline MultiGerm reduce_ambient(const MultiGerm& g, const std::vector<std::string>& drop) {
  std::vector<bool> dropped(g.vs->size(), false);
  for (const auto& name : drop) {
    auto idx = g.vs->index_of(name);
    if (!idx) throw Error("reduce_ambient: unknown coordinate " + name);
    for (const auto& b : g.branches)
      if (!b.coords[*idx].is_zero())
        throw Error("reduce_ambient: coordinate " + name + " is nonzero on branch " + b.name);
    dropped[*idx] = true;
  }
  std::vector<std::string> names;
  std::vector<long> weights;
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < g.vs->size(); ++i)
    if (!dropped[i]) {
      names.push_back(g.vs->names[i]);
      weights.push_back(g.vs->weights[i]);
      keep.push_back(i);
    }
  VarSetPtr nvs = make_varset(names, weights);

  auto convert_poly = [&](const Polynomial& p) {
    Polynomial out(nvs);
    for (const auto& [m, c] : p.terms()) {
      Monomial nm(nvs->size());
      bool uses_dropped = false;
      for (std::size_t i = 0; i < g.vs->size(); ++i)
        if (dropped[i] && m.e[i] != 0) uses_dropped = true;
      if (uses_dropped) continue;  // lies in the ideal generated by dropped coords
      for (std::size_t k = 0; k < keep.size(); ++k) nm.e[k] = m.e[keep[k]];
      out += Polynomial::term(nvs, nm, c);
    }
    return out;
  };

  MultiGerm out;
  out.vs = nvs;
  for (const auto& b : g.branches) {
    Branch nb{b.name, {}};
    for (std::size_t k : keep) nb.coords.push_back(b.coords[k]);
    out.branches.push_back(std::move(nb));
  }
  out.ideal.vs = nvs;
  for (const auto& h : g.ideal.generators) {
    Polynomial p = convert_poly(h);
    if (!p.is_zero()) out.ideal.generators.push_back(std::move(p));
  }
  for (const auto& c : g.components) {
    Component nc{c.name, c.branch_indices, std::nullopt};
    if (c.ideal) {
      IdealPresentation ip{nvs, {}};
      for (const auto& h : c.ideal->generators) {
        Polynomial p = convert_poly(h);
        if (!p.is_zero()) ip.generators.push_back(std::move(p));
      }
      nc.ideal = std::move(ip);
    }
    out.components.push_back(std::move(nc));
  }
  out.dropped_coordinates = g.dropped_coordinates;
  for (const auto& n : drop) out.dropped_coordinates.push_back(n);
  validate_or_throw(out);
  return out;
}

// The germ of a single component, with its own ideal presentation.
inline MultiGerm component_germ(const MultiGerm& g, const Component& c) {
  if (!c.ideal) throw Error("component " + c.name + " has no ideal presentation");
  MultiGerm out;
  out.vs = g.vs;
  for (std::size_t i : c.branch_indices) out.branches.push_back(g.branches[i]);
  out.ideal = *c.ideal;
  out.dropped_coordinates = g.dropped_coordinates;
  return out;
}

// Tangent frame of a two-component germ: l1, l2 the tangent lines of the two
// components, l3 the intersection of their 2-jet planes.
struct TangentFrame {
  Vec l1, l2, l3;          // direction vectors
  std::vector<Vec> w;      // spanning set of the 3-space W = l1 + l2 + l3
};

namespace detail {

// Direction vectors of the successive jets of a branch: coefficient vectors
// of t, t^2, ... reduced to an independent list, in order.
inline std::vector<Vec> jet_directions(const Branch& b, std::size_t nvars, std::size_t want) {
  long maxdeg = 0;
  for (const auto& c : b.coords)
    if (!c.is_zero()) maxdeg = std::max(maxdeg, c.terms().rbegin()->first);
  std::vector<Vec> dirs;
  Echelon ech(nvars);
  for (long k = 1; k <= maxdeg && dirs.size() < want; ++k) {
    Vec v(nvars);
    bool nz = false;
    for (std::size_t i = 0; i < nvars; ++i) {
      v[i] = b.coords[i].coeff(k);
      nz |= v[i] != 0;
    }
    if (!nz) continue;
    Vec red = ech.reduce(v);
    if (is_zero(red)) continue;
    ech.add_row(red);
    dirs.push_back(v);
  }
  return dirs;
}

inline Vec common_direction(const std::vector<Vec>& a, const std::vector<Vec>& b,
                            std::size_t nvars) {
  // intersection of span(a) and span(b), expected 1-dimensional:
  // solve sum x_i a_i - sum y_j b_j = 0
  Matrix m(nvars, a.size() + b.size());
  for (std::size_t c = 0; c < a.size(); ++c)
    for (std::size_t r = 0; r < nvars; ++r) m.at(r, c) = a[c][r];
  for (std::size_t c = 0; c < b.size(); ++c)
    for (std::size_t r = 0; r < nvars; ++r) m.at(r, a.size() + c) = -b[c][r];
  auto kern = kernel_basis(m);
  std::vector<Vec> inter;
  Echelon ech(nvars);
  for (const auto& k : kern) {
    Vec v(nvars, Rat(0));
    for (std::size_t c = 0; c < a.size(); ++c)
      for (std::size_t r = 0; r < nvars; ++r) v[r] += k[c] * a[c][r];
    if (!is_zero(v) && ech.add_row(v)) inter.push_back(v);
  }
  if (inter.size() != 1) throw Error("degenerate 2-jet planes: intersection is not a line");
  return inter[0];
}

}  // namespace detail

inline TangentFrame tangent_frame(const MultiGerm& g) {
  if (g.components.size() != 2)
    throw Error("tangent_frame requires a germ with two declared components");
  std::size_t n = g.vs->size();
  std::vector<Vec> lines;
  std::vector<std::vector<Vec>> planes;
  for (const auto& comp : g.components) {
    std::optional<Vec> tangent;
    Echelon plane_ech(n);
    std::vector<Vec> plane;
    for (std::size_t bi : comp.branch_indices) {
      auto dirs = detail::jet_directions(g.branches[bi], n, 2);
      if (dirs.empty()) throw Error("branch has no jet directions");
      if (!tangent) {
        tangent = dirs[0];
      } else {
        // tangent lines of all branches in a component must agree
        Echelon e(n);
        e.add_row(*tangent);
        if (!is_zero(e.reduce(dirs[0])))
          throw Error("component " + comp.name + " branches have distinct tangents");
      }
      for (const auto& d : dirs)
        if (plane_ech.add_row(d)) plane.push_back(d);
    }
    if (plane.size() < 2) throw Error("component " + comp.name + " has a degenerate 2-jet plane");
    lines.push_back(*tangent);
    planes.push_back(plane);
  }
  TangentFrame f;
  f.l1 = lines[0];
  f.l2 = lines[1];
  f.l3 = detail::common_direction(planes[0], planes[1], n);
  Echelon e(n);
  e.add_row(f.l1);
  e.add_row(f.l2);
  e.add_row(f.l3);
  if (e.rank() != 3) throw Error("tangent frame does not span a 3-space");
  f.w = {f.l1, f.l2, f.l3};
  return f;
}

}  // namespace algrest
