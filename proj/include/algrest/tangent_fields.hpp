#pragma once
#include <utility>
#include <vector>

#include "algrest/restriction.hpp"

namespace algrest {

// E = sum_i w_i x_i d/dx_i for the weight system.
inline VectorFieldGerm euler_field(const VarSetPtr& vs) {
  std::vector<Polynomial> comp;
  for (std::size_t i = 0; i < vs->size(); ++i)
    comp.push_back(rat(vs->weights[i]) * Polynomial::variable(vs, i));
  return VectorFieldGerm(vs, std::move(comp));
}

// Hamiltonian field of a complete intersection H_1 = ... = H_p = 0 on the
// index set i_1 < ... < i_{p+1}: cofactor expansion along the first row of
// the symbolic matrix whose later rows are the gradients of the H_j in the
// chosen coordinates.
inline VectorFieldGerm hamiltonian_field(const std::vector<Polynomial>& H,
                                         const std::vector<int>& idx) {
  if (H.empty()) throw Error("hamiltonian_field: no equations");
  const VarSetPtr& vs = H[0].varset();
  std::size_t p = H.size();
  if (idx.size() != p + 1) throw Error("hamiltonian_field: need p+1 indices");
  for (std::size_t k = 0; k < idx.size(); ++k) {
    if (idx[k] < 0 || idx[k] >= static_cast<int>(vs->size()))
      throw Error("hamiltonian_field: index out of range");
    if (k + 1 < idx.size() && idx[k] >= idx[k + 1])
      throw Error("hamiltonian_field: indices must be strictly increasing");
  }
  // minor determinant of the p x p submatrix of [dH_j/dx_{idx[l]}] skipping
  // column `skip`, by cofactor expansion (p is small here)
  auto minor_det = [&](auto&& self, std::vector<std::size_t> rows,
                       std::vector<std::size_t> colpos) -> Polynomial {
    if (rows.empty()) return Polynomial::constant(vs, 1);
    Polynomial acc = Polynomial::zero(vs);
    for (std::size_t k = 0; k < colpos.size(); ++k) {
      Polynomial entry = H[rows[0]].derivative(idx[colpos[k]]);
      if (entry.is_zero()) continue;
      std::vector<std::size_t> subrows(rows.begin() + 1, rows.end());
      std::vector<std::size_t> subcols;
      for (std::size_t l = 0; l < colpos.size(); ++l)
        if (l != k) subcols.push_back(colpos[l]);
      Polynomial sub = self(self, subrows, subcols);
      Polynomial term = entry * sub;
      acc += (k % 2 == 0) ? term : Rat(-1) * term;
    }
    return acc;
  };
  std::vector<Polynomial> comp(vs->size(), Polynomial::zero(vs));
  std::vector<std::size_t> all_rows(p);
  for (std::size_t j = 0; j < p; ++j) all_rows[j] = j;
  for (std::size_t l = 0; l < idx.size(); ++l) {
    std::vector<std::size_t> cols;
    for (std::size_t k = 0; k < idx.size(); ++k)
      if (k != l) cols.push_back(k);
    Polynomial m = minor_det(minor_det, all_rows, cols);
    comp[idx[l]] = (l % 2 == 0) ? m : Rat(-1) * m;
  }
  return VectorFieldGerm(vs, std::move(comp));
}

// X is tangent to N when X(H) vanishes on N for every ideal generator H;
// checked by substitution along every branch.
inline bool is_tangent(const MultiGerm& g, const VectorFieldGerm& X) {
  for (const auto& h : g.ideal.generators) {
    Polynomial xh = X.apply(h);
    for (const auto& b : g.branches)
      if (!substitute(xh, b.coords).is_zero()) return false;
  }
  return true;
}

struct TangentGeneratorSet {
  VectorFieldGerm euler;
  // monomial multiples m E ordered by quasi-degree of m (the identity first)
  std::vector<std::pair<Monomial, VectorFieldGerm>> euler_multiples;
  std::vector<VectorFieldGerm> hamiltonians;
  long degree_bound = 0;
  bool hamiltonians_complete = true;  // false when not a complete intersection
};

// Euler field, its monomial multiples up to the degree bound, and the
// Hamiltonian fields of the presentation (when it is a complete intersection
// of positive dimension).
inline TangentGeneratorSet tangent_generators(const MultiGerm& g, long degree_bound) {
  TangentGeneratorSet out{euler_field(g.vs), {}, {}, degree_bound, true};
  for (long d = 0; d <= degree_bound; ++d)
    for (const auto& m : monomials_of_quasi_degree(*g.vs, d))
      out.euler_multiples.emplace_back(
          m, poly_multiple(Polynomial::term(g.vs, m, 1), out.euler));
  std::size_t p = g.ideal.generators.size();
  std::size_t n = g.vs->size();
  if (p + 1 > n) {
    out.hamiltonians_complete = false;  // presentation is not a complete intersection
  } else {
    // all strictly increasing index sets of size p+1
    std::vector<int> idx(p + 1);
    auto rec = [&](auto&& self, std::size_t k, int start) -> void {
      if (k == p + 1) {
        out.hamiltonians.push_back(hamiltonian_field(g.ideal.generators, idx));
        return;
      }
      for (int i = start; i < static_cast<int>(n); ++i) {
        idx[k] = i;
        self(self, k + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  for (const auto& [m, X] : out.euler_multiples)
    if (!is_tangent(g, X)) throw Error("euler multiple is not tangent");
  for (const auto& X : out.hamiltonians)
    if (!is_tangent(g, X)) throw Error("hamiltonian field is not tangent");
  return out;
}

// Class of L_X(rep) over the closed basis; representatives are closed, so
// L_X rep = d(X -| rep).
inline RestrictionClass lie_action(const GradedBasisPtr& closed_basis,
                                   const VectorFieldGerm& X,
                                   const RestrictionClass& a) {
  if (closed_basis->flavor() != Flavor::Closed2Forms)
    throw Error("lie_action needs the closed-flavor basis");
  if (!is_tangent(closed_basis->germ(), X))
    throw Error("lie_action: field is not tangent to the germ");
  DiffForm rep = closed_basis->representative_form(a.coords);
  return closed_basis->restrict(lie_derivative_closed(X, rep));
}

// Full action table: one row per generator, one column per basis element.
inline std::vector<std::vector<RestrictionClass>> action_table(
    const GradedBasisPtr& closed_basis, const std::vector<VectorFieldGerm>& gens) {
  std::vector<std::vector<RestrictionClass>> table;
  for (const auto& X : gens) {
    std::vector<RestrictionClass> row;
    for (std::size_t j = 0; j < closed_basis->dimension(); ++j) {
      Vec unit(closed_basis->dimension(), Rat(0));
      unit[j] = 1;
      row.push_back(lie_action(closed_basis, X, closed_basis->make_class(unit)));
    }
    table.push_back(std::move(row));
  }
  return table;
}

// Tangent space to the orbit of a at a: the span of L_{mE}(a) over monomials
// up to the degree bound. Hamiltonian generators act trivially, so they add
// nothing; echelonized spanning set is returned.
inline std::vector<Vec> orbit_tangent_space(const GradedBasisPtr& closed_basis,
                                            const RestrictionClass& a,
                                            long degree_bound) {
  VectorFieldGerm E = euler_field(closed_basis->germ().vs);
  Echelon ech(closed_basis->dimension());
  std::vector<Vec> span;
  for (long d = 0; d <= degree_bound; ++d)
    for (const auto& m : monomials_of_quasi_degree(*closed_basis->germ().vs, d)) {
      VectorFieldGerm X = poly_multiple(Polynomial::term(closed_basis->germ().vs, m, 1), E);
      Vec v = lie_action(closed_basis, X, a).coords;
      if (ech.add_row(v)) span.push_back(std::move(v));
    }
  // deterministic output: the reduced echelon rows
  return ech.rows();
}

}  // namespace algrest
