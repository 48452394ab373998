#pragma once
#include <cstdlib>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "algrest/tangent_fields.hpp"

namespace algrest {

// ---------------------------------------------------------------------------
// Index of isotropy: the maximal order of vanishing at 0 over closed 2-forms
// representing the class. Both the class constraint and the jet constraints
// split by quasi-degree, so each graded piece is searched independently and
// the index is the minimum over the support.
// ---------------------------------------------------------------------------

namespace detail {

inline long max_jet_order(const MultiGerm& g, long d) {
  long best = 0;
  const VarSet& vs = *g.vs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (const auto& m :
           monomials_of_quasi_degree(vs, d - vs.weights[i] - vs.weights[j]))
        best = std::max(best, m.ordinary_degree());
  return best;
}

// Max k such that some closed representative R + sum v G (G the degree-d
// A^2_0 generators) vanishes to order k at 0.
inline long degree_piece_isotropy(const MultiGerm& g, const DiffForm& piece, long d,
                                  long cap) {
  std::vector<DiffForm> gens = a20_generators(g, d);
  // column layout for 2-form jets
  std::vector<Monomial2Form> cols2;
  const VarSet& vs = *g.vs;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j)
      for (const auto& m :
           monomials_of_quasi_degree(vs, d - vs.weights[i] - vs.weights[j]))
        cols2.push_back({static_cast<int>(i), static_cast<int>(j), m});
  std::map<Monomial2Form, std::size_t> idx2;
  for (std::size_t c = 0; c < cols2.size(); ++c) idx2[cols2[c]] = c;
  auto coords2 = [&](const DiffForm& f) {
    Vec v(cols2.size(), Rat(0));
    for (const auto& [idx, p] : f.terms())
      for (const auto& [m, c] : p.terms()) v[idx2.at({idx[0], idx[1], m})] = c;
    return v;
  };
  std::vector<Vec> gen2;
  for (const auto& gjj : gens) gen2.push_back(coords2(gjj));
  Vec rep2 = coords2(piece);

  // closedness rows over 3-form monomial coordinates
  struct Col3 {
    IndexTuple idx;
    Monomial m;
    bool operator<(const Col3& o) const {
      if (idx != o.idx) return idx < o.idx;
      return m < o.m;
    }
  };
  std::map<Col3, std::size_t> idx3;
  std::vector<Vec> gen3;
  if (vs.size() >= 3) {
    std::vector<DiffForm> dgens;
    for (const auto& gjj : gens) dgens.push_back(exterior_derivative(gjj));
    for (const auto& dgj : dgens)
      for (const auto& [it, p] : dgj.terms())
        for (const auto& [m, c] : p.terms())
          idx3.emplace(Col3{it, m}, idx3.size());
    for (const auto& dgj : dgens) {
      Vec v(idx3.size(), Rat(0));
      for (const auto& [it, p] : dgj.terms())
        for (const auto& [m, c] : p.terms()) v[idx3.at({it, m})] = c;
      gen3.push_back(std::move(v));
    }
  }

  long jet_max = max_jet_order(g, d);
  long k = 0;
  while (k <= std::min(cap, jet_max + 1)) {
    // feasibility of order >= k+1... try order k+1: all coefficients of
    // ordinary degree <= k vanish
    long try_k = k + 1;
    Echelon ech(gens.size() + 1);
    bool feasible = true;
    auto add = [&](Vec row, const Rat& rhs) {
      row.push_back(rhs);
      ech.add_row(std::move(row));
    };
    for (std::size_t c3 = 0; c3 < idx3.size() && feasible; ++c3) {
      Vec row(gens.size(), Rat(0));
      for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gen3[j][c3];
      add(std::move(row), 0);
    }
    for (std::size_t c = 0; c < cols2.size(); ++c) {
      if (cols2[c].m.ordinary_degree() >= try_k) continue;
      Vec row(gens.size(), Rat(0));
      for (std::size_t j = 0; j < gens.size(); ++j) row[j] = gen2[j][c];
      add(std::move(row), -rep2[c]);
    }
    for (std::size_t p : ech.pivots())
      if (p == gens.size()) feasible = false;
    if (!feasible) break;
    k = try_k;
  }
  if (k > jet_max) throw Error("isotropy search exceeded the jet bound: zero piece?");
  return k;
}

}  // namespace detail

inline ExtInt index_of_isotropy(const GradedBasisPtr& closed_basis,
                                const RestrictionClass& a, long cap = -1) {
  if (a.is_zero()) return ExtInt::infinity();
  if (cap < 0) cap = 3 * std::max<long>(closed_basis->stabilization_degree(), 1);
  DiffForm rep = closed_basis->representative_form(a.coords);
  ExtInt best = ExtInt::infinity();
  for (long d : closed_basis->graded_class_support(a)) {
    long kd = detail::degree_piece_isotropy(closed_basis->germ(),
                                            rep.graded_component(d), d, cap);
    best = min(best, ExtInt(kd));
  }
  return best;
}

// ---------------------------------------------------------------------------
// Lagrangian tangency orders, via 1-forms alpha with [d alpha] = [omega]: the
// order of alpha on a branch is the minimal vanishing order of its coefficient
// functions along the branch, and Lt is the maximal order achievable. One
// elimination per branch set serves every query; layer k carries the t^{k-1}
// jet rows.
// ---------------------------------------------------------------------------

class LtSolver {
 public:
  LtSolver(GradedBasisPtr basis, std::vector<Branch> branches)
      : basis_(std::move(basis)), branches_(std::move(branches)) {
    build(10);
  }

  // Lt of the class over this branch set; infinity decided by the caller.
  long query(const Vec& class_coords, long cap) {
    for (;;) {
      std::size_t level = sys_->max_consistent_layer(class_coords);
      if (level == 0) throw Error("tangency solver: class rows are infeasible");
      if (level < sys_->layers()) return static_cast<long>(level) - 1;
      if (k_built_ > cap)
        throw Error("tangency order exceeded the cap on a nonzero class");
      build(k_built_ * 2);
    }
  }

 private:
  void build(long k_build) {
    k_built_ = k_build;
    const MultiGerm& g = basis_->germ();
    const VarSet& vs = *g.vs;
    // slowest branch speed: ord(m o f) >= speed * qdeg(m)
    Rat min_speed = 0;
    for (const auto& b : branches_) {
      Rat s = 0;
      bool first = true;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (b.coords[i].is_zero()) continue;
        ExtInt o = b.coords[i].vanishing_order();
        Rat si = make_rat(Int(o.v), Int(vs.weights[i]));
        if (first || si < s) s = si, first = false;
      }
      if (min_speed == 0 || s < min_speed) min_speed = s;
    }
    if (min_speed == 0) min_speed = 1;
    long maxw = 0;
    for (long w : vs.weights) maxw = std::max(maxw, w);
    Rat bound = Rat(k_build) / min_speed + maxw;
    long qbound = std::max<long>(basis_->stabilization_degree(),
                                 static_cast<long>(bound.get_num().get_si() /
                                                   bound.get_den().get_si()) +
                                     1);
    columns_.clear();
    for (long d = 0; d <= qbound; ++d)
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (const auto& m : monomials_of_quasi_degree(vs, d - vs.weights[i]))
          columns_.emplace_back(m, static_cast<int>(i));

    comp_.assign(branches_.size(), {});
    for (std::size_t b = 0; b < branches_.size(); ++b) {
      comp_[b].reserve(columns_.size());
      for (const auto& [m, i] : columns_) {
        Polynomial mono = Polynomial::term(g.vs, m, 1);
        comp_[b].push_back(substitute(mono, branches_[b].coords));
      }
    }

    std::size_t dim = basis_->dimension();
    sys_ = std::make_unique<LayeredSystem>(columns_.size(), dim);
    // layer 1: the class constraint [d alpha] = a
    sys_->begin_layer();
    std::vector<Vec> class_cols(columns_.size());
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      const auto& [m, i] = columns_[c];
      long q = quasi_degree(vs, m) + vs.weights[i];
      if (q > basis_->verified_degree()) {
        class_cols[c] = Vec(dim, Rat(0));  // stabilized: zero class
        continue;
      }
      DiffForm u = DiffForm::monomial_form(g.vs, {columns_[c].second},
                                           Polynomial::term(g.vs, m, 1));
      class_cols[c] = basis_->restrict(exterior_derivative(u)).coords;
    }
    for (std::size_t r = 0; r < dim; ++r) {
      Vec row(columns_.size());
      for (std::size_t c = 0; c < columns_.size(); ++c) row[c] = class_cols[c][r];
      Vec rhs(dim, Rat(0));
      rhs[r] = 1;
      sys_->add_row(std::move(row), rhs);
    }
    // layer k+1: order >= k rows, i.e. the t^{k-1} coefficients vanish
    for (long k = 1; k <= k_build; ++k) {
      sys_->begin_layer();
      for (std::size_t b = 0; b < branches_.size(); ++b)
        for (std::size_t i = 0; i < vs.size(); ++i) {
          Vec row(columns_.size(), Rat(0));
          bool any = false;
          for (std::size_t c = 0; c < columns_.size(); ++c) {
            if (columns_[c].second != static_cast<int>(i)) continue;
            Rat x = comp_[b][c].coeff(k - 1);
            if (x != 0) {
              row[c] = x;
              any = true;
            }
          }
          if (any) sys_->add_row(std::move(row), Vec(basis_->dimension(), Rat(0)));
        }
    }
  }

  GradedBasisPtr basis_;
  std::vector<Branch> branches_;
  long k_built_ = 0;
  std::vector<std::pair<Monomial, int>> columns_;
  std::vector<std::vector<UniPoly>> comp_;  // per branch, m o f per column
  std::unique_ptr<LayeredSystem> sys_;
};

// ---------------------------------------------------------------------------
// Relative tangency orders: maximize the order on the free branches subject
// to prescribed exact orders on the constrained ones. Exact order t means
// "at least t and not at least t+1"; over the rationals a nonempty affine
// solution set cannot be covered by finitely many proper affine subspaces,
// so exactness reduces to rank comparisons.
// ---------------------------------------------------------------------------

struct RelativeConstraint {
  std::size_t branch;  // index into the germ's branches
  ExtInt order;        // required exact tangency order (may be infinity)
};

namespace detail {

struct AlphaSpace {
  std::vector<std::pair<Monomial, int>> columns;
  std::vector<std::vector<UniPoly>> comp;  // per germ branch
  GradedBasisPtr basis;

  AlphaSpace(const GradedBasisPtr& b, long qbound) : basis(b) {
    const MultiGerm& g = b->germ();
    const VarSet& vs = *g.vs;
    for (long d = 0; d <= qbound; ++d)
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (const auto& m : monomials_of_quasi_degree(vs, d - vs.weights[i]))
          columns.emplace_back(m, static_cast<int>(i));
    comp.assign(g.branches.size(), {});
    for (std::size_t br = 0; br < g.branches.size(); ++br)
      for (const auto& [m, i] : columns)
        comp[br].push_back(
            substitute(Polynomial::term(g.vs, m, 1), g.branches[br].coords));
  }

  // rows asserting the coefficient of t^j of alpha along branch br vanishes
  std::vector<Vec> jet_rows(std::size_t br, long j) const {
    const VarSet& vs = *basis->germ().vs;
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      Vec row(columns.size(), Rat(0));
      bool any = false;
      for (std::size_t c = 0; c < columns.size(); ++c) {
        if (columns[c].second != static_cast<int>(i)) continue;
        Rat x = comp[br][c].coeff(j);
        if (x != 0) row[c] = x, any = true;
      }
      if (any) rows.push_back(std::move(row));
    }
    return rows;
  }

  long max_jet(std::size_t br) const {
    long best = 0;
    for (const auto& u : comp[br])
      if (!u.is_zero()) best = std::max(best, u.terms().rbegin()->first);
    return best;
  }

  std::vector<Vec> class_rows(const Vec& a, std::vector<Rat>* rhs) const {
    const MultiGerm& g = basis->germ();
    std::size_t dim = basis->dimension();
    std::vector<Vec> cols(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
      const auto& [m, i] = columns[c];
      long q = quasi_degree(*g.vs, m) + g.vs->weights[i];
      if (q > basis->verified_degree()) {
        cols[c] = Vec(dim, Rat(0));
        continue;
      }
      DiffForm u =
          DiffForm::monomial_form(g.vs, {columns[c].second}, Polynomial::term(g.vs, m, 1));
      cols[c] = basis->restrict(exterior_derivative(u)).coords;
    }
    std::vector<Vec> rows;
    for (std::size_t r = 0; r < dim; ++r) {
      Vec row(columns.size());
      for (std::size_t c = 0; c < columns.size(); ++c) row[c] = cols[c][r];
      rows.push_back(std::move(row));
      rhs->push_back(a[r]);
    }
    return rows;
  }
};

// Affine feasibility with "exact order" side conditions. Returns whether the
// system rows*u = rhs admits a solution avoiding each bad subspace (rows
// forcing higher-than-required order).
inline bool feasible_avoiding(const std::vector<Vec>& rows, const std::vector<Rat>& rhs,
                              const std::vector<std::vector<Vec>>& bad_sets,
                              std::size_t width) {
  Echelon ech(width + 1);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    Vec v = rows[r];
    v.push_back(rhs[r]);
    ech.add_row(std::move(v));
  }
  for (std::size_t p : ech.pivots())
    if (p == width) return false;  // inconsistent
  // particular solution u0 (free unknowns zero)
  Vec u0(width, Rat(0));
  for (std::size_t i = 0; i < ech.rank(); ++i) u0[ech.pivots()[i]] = ech.rows()[i][width];
  for (const auto& bad : bad_sets) {
    // B = P iff every bad row annihilates both ker(A) and u0
    bool contains_all = true;
    for (const Vec& brow : bad) {
      Rat dot = 0;
      for (std::size_t c = 0; c < width; ++c)
        if (brow[c] != 0) dot += brow[c] * u0[c];
      if (dot != 0) {
        contains_all = false;
        break;
      }
      // brow must be in the row space of A for it to annihilate ker(A)
      Vec ext = brow;
      ext.push_back(dot);
      Vec res = ech.reduce(ext);
      bool zero_u = true;
      for (std::size_t c = 0; c < width; ++c)
        if (res[c] != 0) zero_u = false;
      if (!zero_u) {
        contains_all = false;
        break;
      }
    }
    if (contains_all) return false;  // the bad subspace exhausts all solutions
  }
  return true;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Analysis context: one germ, its closed basis, cached solvers and component
// analyses. All invariant computations go through here.
// ---------------------------------------------------------------------------

class GermAnalysis {
 public:
  explicit GermAnalysis(MultiGerm g, BasisOptions opts = {})
      : germ_(std::move(g)), closed_(restriction_basis(germ_, Flavor::Closed2Forms, opts)) {}

  const MultiGerm& germ() const { return germ_; }
  const GradedBasisPtr& closed() const { return closed_; }

  // search cap for the feasibility scans: 3x the stabilization degree, times
  // the ALGREST_CAP_MULT stress knob, unless overridden
  long cap() const {
    if (explicit_cap_ > 0) return explicit_cap_;
    long mult = 1;
    if (const char* env = std::getenv("ALGREST_CAP_MULT")) mult = std::max(1L, std::atol(env));
    return mult * 3 * std::max<long>(closed_->stabilization_degree(), 1);
  }
  void set_cap(long cap) { explicit_cap_ = cap; }

  GermAnalysis& component(const std::string& name) {
    auto it = components_.find(name);
    if (it != components_.end()) return *it->second;
    const Component* c = germ_.component(name);
    if (!c) throw Error("no component named " + name);
    auto sub = std::make_unique<GermAnalysis>(component_germ(germ_, *c));
    return *components_.emplace(name, std::move(sub)).first->second;
  }

  RestrictionClass restrict(const DiffForm& w) { return closed_->restrict(w); }

  RestrictionClass class_on_component(const std::string& name,
                                      const RestrictionClass& a) {
    DiffForm rep = closed_->representative_form(a.coords);
    return component(name).closed()->restrict(rep);
  }

  // Lt over all branches of this germ.
  ExtInt lt(const RestrictionClass& a) {
    if (a.is_zero()) return ExtInt::infinity();
    return ExtInt(full_solver().query(a.coords, cap()));
  }

  // Lt of a component (over the component's own basis and branches).
  ExtInt lt_component(const std::string& name, const RestrictionClass& a) {
    return component(name).lt(class_on_component(name, a));
  }

  ExtInt isotropy(const RestrictionClass& a) {
    return index_of_isotropy(closed_, a, cap());
  }
  ExtInt isotropy_component(const std::string& name, const RestrictionClass& a) {
    return component(name).isotropy(class_on_component(name, a));
  }

  long symplectic_multiplicity(const RestrictionClass& a) {
    long bound = closed_->stabilization_degree();
    return static_cast<long>(closed_->dimension()) -
           static_cast<long>(orbit_tangent_space(closed_, a, bound).size());
  }

  // Relative Lagrangian tangency order: maximize the joint order on the
  // branches not in S, subject to exact orders on the branches of S.
  ExtInt relative_lt(const std::vector<std::size_t>& free_branches,
                     const std::vector<RelativeConstraint>& constraints,
                     const RestrictionClass& a) {
    long qcap = cap();
    long k_hint = 12;
    for (;;) {
      auto res = relative_attempt(free_branches, constraints, a, k_hint);
      if (res) return *res;
      k_hint *= 2;
      if (k_hint > 4 * qcap) throw Error("relative tangency order exceeded the cap");
    }
  }

  LtSolver& full_solver() {
    if (!full_solver_) {
      full_solver_ = std::make_unique<LtSolver>(closed_, germ_.branches);
    }
    return *full_solver_;
  }

 private:
  // One attempt with jets materialized to k_build; nullopt = need more jets.
  std::optional<ExtInt> relative_attempt(const std::vector<std::size_t>& free_branches,
                                         const std::vector<RelativeConstraint>& cons,
                                         const RestrictionClass& a, long k_build) {
    const VarSet& vs = *germ_.vs;
    Rat min_speed = 0;
    for (const auto& b : germ_.branches) {
      Rat s = 0;
      bool first = true;
      for (std::size_t i = 0; i < vs.size(); ++i) {
        if (b.coords[i].is_zero()) continue;
        Rat si = make_rat(Int(b.coords[i].vanishing_order().v), Int(vs.weights[i]));
        if (first || si < s) s = si, first = false;
      }
      if (min_speed == 0 || s < min_speed) min_speed = s;
    }
    if (min_speed == 0) min_speed = 1;
    long maxw = 0;
    for (long w : vs.weights) maxw = std::max(maxw, w);
    Rat boundq = Rat(k_build) / min_speed + maxw;
    long qbound = std::max<long>(closed_->stabilization_degree(),
                                 static_cast<long>(boundq.get_num().get_si() /
                                                   boundq.get_den().get_si()) +
                                     1);
    detail::AlphaSpace space(closed_, qbound);
    std::size_t width = space.columns.size();

    std::vector<Vec> base_rows;
    std::vector<Rat> base_rhs;
    base_rows = space.class_rows(a.coords, &base_rhs);
    std::vector<std::vector<Vec>> bad_sets;
    for (const auto& c : cons) {
      if (c.order == ExtInt::infinity()) {
        // identically zero along the branch: all jets vanish
        long mj = space.max_jet(c.branch);
        for (long j = 0; j <= mj; ++j)
          for (auto& r : space.jet_rows(c.branch, j)) {
            base_rows.push_back(std::move(r));
            base_rhs.push_back(0);
          }
      } else {
        if (!c.order.is_finite() || c.order.v < 0)
          throw Error("invalid exact order constraint");
        if (c.order.v > k_build) return std::nullopt;
        for (long j = 0; j < c.order.v; ++j)
          for (auto& r : space.jet_rows(c.branch, j)) {
            base_rows.push_back(std::move(r));
            base_rhs.push_back(0);
          }
        bad_sets.push_back(space.jet_rows(c.branch, c.order.v));
      }
    }
    if (!detail::feasible_avoiding(base_rows, base_rhs, bad_sets, width))
      return ExtInt::neg_infinity();

    // infinity on the free branches?
    {
      std::vector<Vec> rows = base_rows;
      std::vector<Rat> rhs = base_rhs;
      for (std::size_t br : free_branches) {
        long mj = space.max_jet(br);
        for (long j = 0; j <= mj; ++j)
          for (auto& r : space.jet_rows(br, j)) {
            rows.push_back(std::move(r));
            rhs.push_back(0);
          }
      }
      if (detail::feasible_avoiding(rows, rhs, bad_sets, width))
        return ExtInt::infinity();
    }

    std::vector<Vec> rows = base_rows;
    std::vector<Rat> rhs = base_rhs;
    long k = 0;
    while (k < k_build) {
      for (std::size_t br : free_branches)
        for (auto& r : space.jet_rows(br, k)) {
          rows.push_back(std::move(r));
          rhs.push_back(0);
        }
      if (!detail::feasible_avoiding(rows, rhs, bad_sets, width)) return ExtInt(k);
      ++k;
    }
    return std::nullopt;  // still feasible at the jet ceiling
  }

  MultiGerm germ_;
  GradedBasisPtr closed_;
  long explicit_cap_ = 0;
  std::map<std::string, std::unique_ptr<GermAnalysis>> components_;
  std::unique_ptr<LtSolver> full_solver_;
};

// ---------------------------------------------------------------------------
// Geometric report: values of the form on the tangent frame planes, the four
// Lie-derivative conditions, and Lagrangian containment per component.
// ---------------------------------------------------------------------------

struct GeometricReport {
  // omega(0) restricted to the planes l1+l2, l1+l3, l2+l3
  bool pair_nonzero_12 = false, pair_nonzero_13 = false, pair_nonzero_23 = false;
  bool cond_I = false, cond_II = false, cond_III = false, cond_IV = false;
  std::vector<std::pair<std::string, bool>> component_in_lagrangian;
  bool germ_in_lagrangian = false;
};

namespace detail {

inline Rat eval_at_zero(const DiffForm& w, const Vec& u, const Vec& v) {
  Rat acc = 0;
  Monomial one(w.varset()->size());
  for (const auto& [idx, p] : w.terms()) {
    Rat c = p.coeff(one);
    if (c == 0) continue;
    acc += c * (u[idx[0]] * v[idx[1]] - u[idx[1]] * v[idx[0]]);
  }
  return acc;
}

inline DiffForm lie_along_constant(const DiffForm& w, const Vec& v) {
  const VarSetPtr& vs = w.varset();
  std::vector<Polynomial> comp;
  for (std::size_t i = 0; i < vs->size(); ++i)
    comp.push_back(Polynomial::constant(vs, v[i]));
  VectorFieldGerm V(vs, comp);
  DiffForm res = exterior_derivative(interior_product(V, w));
  if (!is_closed(w)) res += interior_product(V, exterior_derivative(w));
  return res;
}

}  // namespace detail

inline GeometricReport geometric_report(GermAnalysis& an, const DiffForm& omega) {
  GeometricReport rep;
  TangentFrame f = tangent_frame(an.germ());
  rep.pair_nonzero_12 = detail::eval_at_zero(omega, f.l1, f.l2) != 0;
  rep.pair_nonzero_13 = detail::eval_at_zero(omega, f.l1, f.l3) != 0;
  rep.pair_nonzero_23 = detail::eval_at_zero(omega, f.l2, f.l3) != 0;
  rep.cond_I = !rep.pair_nonzero_12 && !rep.pair_nonzero_13 && !rep.pair_nonzero_23;
  {
    Monomial one(omega.varset()->size());
    for (const auto& [idx, p] : omega.terms())
      if (p.coeff(one) != 0) rep.cond_I = false;
  }
  DiffForm L1 = detail::lie_along_constant(omega, f.l1);
  DiffForm L2 = detail::lie_along_constant(omega, f.l2);
  DiffForm L3 = detail::lie_along_constant(omega, f.l3);
  rep.cond_II = detail::eval_at_zero(L3, f.l1, f.l2) == 0;
  rep.cond_III = detail::eval_at_zero(L1, f.l3, f.l1) == 0 &&
                 detail::eval_at_zero(L2, f.l3, f.l2) == 0;
  rep.cond_IV =
      detail::eval_at_zero(L1, f.l3, f.l2) == detail::eval_at_zero(L2, f.l3, f.l1);
  for (const auto& c : an.germ().components)
    rep.component_in_lagrangian.emplace_back(
        c.name, an.class_on_component(c.name, an.restrict(omega)).is_zero());
  rep.germ_in_lagrangian = an.restrict(omega).is_zero();
  return rep;
}

// ---------------------------------------------------------------------------
// Invariant report over a class.
// ---------------------------------------------------------------------------

enum class ComponentStyle { NearestFarthest, PerComponent, Single };

struct InvariantReport {
  ExtInt lt_full;
  std::vector<std::pair<std::string, ExtInt>> lt_components;
  ExtInt ind_full;
  std::vector<std::pair<std::string, ExtInt>> ind_components;
  long mu_sympl = 0;
  ComponentStyle style = ComponentStyle::Single;

  // nearest/farthest views (style NearestFarthest)
  ExtInt lt_nearest() const {
    ExtInt m = ExtInt::neg_infinity();
    for (const auto& [n, v] : lt_components) m = max(m, v);
    return m;
  }
  ExtInt lt_farthest() const {
    ExtInt m = ExtInt::infinity();
    for (const auto& [n, v] : lt_components) m = min(m, v);
    return m;
  }
  ExtInt ind_nearest() const {
    ExtInt m = ExtInt::neg_infinity();
    for (const auto& [n, v] : ind_components) m = max(m, v);
    return m;
  }
  ExtInt ind_farthest() const {
    ExtInt m = ExtInt::infinity();
    for (const auto& [n, v] : ind_components) m = min(m, v);
    return m;
  }
};

// Named entry points matching the operation surface: the joint tangency
// order over all branches, and over one named component of the germ.
inline ExtInt lagrangian_tangency_multi(GermAnalysis& an, const RestrictionClass& a) {
  return an.lt(a);
}
inline ExtInt lagrangian_tangency_single(GermAnalysis& an, const std::string& component,
                                         const RestrictionClass& a) {
  return an.lt_component(component, a);
}
inline long symplectic_multiplicity(GermAnalysis& an, const RestrictionClass& a) {
  return an.symplectic_multiplicity(a);
}

inline InvariantReport invariant_report(GermAnalysis& an, const RestrictionClass& a,
                                        ComponentStyle style) {
  InvariantReport rep;
  rep.style = style;
  rep.lt_full = an.lt(a);
  rep.ind_full = an.isotropy(a);
  for (const auto& c : an.germ().components) {
    rep.lt_components.emplace_back(c.name, an.lt_component(c.name, a));
    rep.ind_components.emplace_back(c.name, an.isotropy_component(c.name, a));
  }
  rep.mu_sympl = an.symplectic_multiplicity(a);
  return rep;
}

}  // namespace algrest
