#pragma once
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "algrest/poly.hpp"

namespace algrest {

// Strictly increasing coordinate index tuple dx_{i1} ^ ... ^ dx_{ik}.
using IndexTuple = std::vector<int>;

// Sorts indices, returns the permutation sign, or 0 on a repeated index.
inline int sort_indices(IndexTuple& idx) {
  int sign = 1;
  for (std::size_t i = 1; i < idx.size(); ++i)
    for (std::size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
      if (idx[j - 1] == idx[j]) return 0;
      std::swap(idx[j - 1], idx[j]);
      sign = -sign;
    }
  return sign;
}

// Differential k-form with polynomial coefficients, k bounded by the number
// of variables. The quasi-degree of a term c_m dx_{i1}^...^dx_{ik} is
// qdeg(m) + w_{i1} + ... + w_{ik}.
class DiffForm {
 public:
  DiffForm() = default;
  DiffForm(VarSetPtr vs, int degree) : vs_(std::move(vs)), deg_(degree) {
    if (deg_ < 0 || deg_ > static_cast<int>(vs_->size()))
      throw Error("form degree out of range");
  }

  static DiffForm zero(VarSetPtr vs, int degree) { return DiffForm(std::move(vs), degree); }
  static DiffForm from_function(const Polynomial& p) {
    DiffForm f(p.varset(), 0);
    if (!p.is_zero()) f.t_[{}] = p;
    return f;
  }
  static DiffForm monomial_form(VarSetPtr vs, IndexTuple idx, const Polynomial& coef) {
    DiffForm f(vs, static_cast<int>(idx.size()));
    f.add_term(std::move(idx), coef);
    return f;
  }
  static DiffForm dx(VarSetPtr vs, int i) {
    return monomial_form(vs, {i}, Polynomial::constant(vs, 1));
  }

  const VarSetPtr& varset() const { return vs_; }
  int degree() const { return deg_; }
  bool is_zero() const { return t_.empty(); }
  const std::map<IndexTuple, Polynomial>& terms() const { return t_; }

  Polynomial coeff(const IndexTuple& idx) const {
    auto it = t_.find(idx);
    return it == t_.end() ? Polynomial::zero(vs_) : it->second;
  }

  void add_term(IndexTuple idx, const Polynomial& coef) {
    if (static_cast<int>(idx.size()) != deg_) throw Error("index tuple arity");
    int sign = sort_indices(idx);
    if (sign == 0 || coef.is_zero()) return;
    Polynomial c = sign == 1 ? coef : Rat(-1) * coef;
    auto it = t_.find(idx);
    if (it == t_.end()) {
      t_.emplace(std::move(idx), std::move(c));
    } else {
      it->second += c;
      if (it->second.is_zero()) t_.erase(it);
    }
  }

  DiffForm& operator+=(const DiffForm& o) {
    require_same_vars(vs_, o.vs_);
    if (deg_ != o.deg_) throw Error("form degree mismatch in +");
    for (const auto& [idx, c] : o.t_) add_term(idx, c);
    return *this;
  }
  friend DiffForm operator+(DiffForm a, const DiffForm& b) { return a += b; }
  friend DiffForm operator*(const Rat& c, const DiffForm& a) {
    DiffForm r(a.vs_, a.deg_);
    if (c == 0) return r;
    for (const auto& [idx, p] : a.t_) r.t_[idx] = c * p;
    return r;
  }
  friend DiffForm operator*(const Polynomial& c, const DiffForm& a) {
    DiffForm r(a.vs_, a.deg_);
    for (const auto& [idx, p] : a.t_) {
      Polynomial q = c * p;
      if (!q.is_zero()) r.add_term(idx, q);
    }
    return r;
  }
  friend DiffForm operator-(DiffForm a, const DiffForm& b) { return a += Rat(-1) * b; }

  bool operator==(const DiffForm& o) const { return deg_ == o.deg_ && t_ == o.t_; }

  // Quasi-degrees present, counting covector weights.
  std::vector<long> quasi_degrees_present() const {
    std::vector<long> ds;
    for (const auto& [idx, p] : t_) {
      long widx = 0;
      for (int i : idx) widx += vs_->weights[i];
      for (long d : p.quasi_degrees_present()) {
        long q = d + widx;
        bool seen = false;
        for (long x : ds) seen |= (x == q);
        if (!seen) ds.push_back(q);
      }
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  DiffForm graded_component(long q) const {
    DiffForm r(vs_, deg_);
    for (const auto& [idx, p] : t_) {
      long widx = 0;
      for (int i : idx) widx += vs_->weights[i];
      Polynomial comp = p.graded_component(q - widx);
      if (!comp.is_zero()) r.t_[idx] = comp;
    }
    return r;
  }

  // Order of vanishing at 0: smallest ordinary degree over all coefficients.
  ExtInt order_at_origin() const {
    if (t_.empty()) return ExtInt::infinity();
    long best = -1;
    for (const auto& [idx, p] : t_) {
      long d = p.min_ordinary_degree();
      if (best < 0 || d < best) best = d;
    }
    return ExtInt(best);
  }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [idx, p] : t_) {
      std::string cs = p.str();
      bool simple = p.terms().size() == 1;
      bool neg = simple && cs[0] == '-';
      if (neg) cs = cs.substr(1);
      if (!first) os << (neg ? " - " : " + ");
      else if (neg) os << "-";
      first = false;
      if (deg_ == 0) { os << cs; continue; }
      if (simple && cs == "1") {
      } else if (simple) {
        os << cs << "*";
      } else {
        os << "(" << cs << ")*";
      }
      for (std::size_t k = 0; k < idx.size(); ++k) {
        if (k) os << "^";
        os << "d" << vs_->names[idx[k]];
      }
    }
    return os.str();
  }

 private:
  VarSetPtr vs_;
  int deg_ = 0;
  std::map<IndexTuple, Polynomial> t_;
};

// Polynomial vector field, one component per variable.
struct VectorFieldGerm {
  VarSetPtr vs;
  std::vector<Polynomial> components;

  VectorFieldGerm(VarSetPtr v, std::vector<Polynomial> comp)
      : vs(std::move(v)), components(std::move(comp)) {
    if (components.size() != vs->size()) throw Error("vector field arity");
  }

  // X(p) = sum_i X_i dp/dx_i
  Polynomial apply(const Polynomial& p) const {
    Polynomial r = Polynomial::zero(vs);
    for (std::size_t i = 0; i < components.size(); ++i)
      if (!components[i].is_zero()) r += components[i] * p.derivative(i);
    return r;
  }
};

inline VectorFieldGerm poly_multiple(const Polynomial& f, const VectorFieldGerm& X) {
  std::vector<Polynomial> comp;
  comp.reserve(X.components.size());
  for (const auto& c : X.components) comp.push_back(f * c);
  return VectorFieldGerm(X.vs, std::move(comp));
}

inline DiffForm wedge(const DiffForm& a, const DiffForm& b) {
  require_same_vars(a.varset(), b.varset());
  int deg = a.degree() + b.degree();
  if (deg > static_cast<int>(a.varset()->size()))
    throw Error("wedge: degree exceeds tracked range");
  DiffForm r(a.varset(), deg);
  for (const auto& [ia, pa] : a.terms())
    for (const auto& [ib, pb] : b.terms()) {
      IndexTuple idx = ia;
      idx.insert(idx.end(), ib.begin(), ib.end());
      r.add_term(std::move(idx), pa * pb);
    }
  return r;
}

inline DiffForm exterior_derivative(const DiffForm& a) {
  const VarSetPtr& vs = a.varset();
  if (a.degree() >= static_cast<int>(vs->size()))
    return DiffForm::zero(vs, std::min<int>(a.degree() + 1, static_cast<int>(vs->size())));
  DiffForm r(vs, a.degree() + 1);
  for (const auto& [idx, p] : a.terms())
    for (std::size_t i = 0; i < vs->size(); ++i) {
      Polynomial dp = p.derivative(i);
      if (dp.is_zero()) continue;
      IndexTuple nidx;
      nidx.push_back(static_cast<int>(i));
      nidx.insert(nidx.end(), idx.begin(), idx.end());
      r.add_term(std::move(nidx), dp);
    }
  return r;
}

inline bool is_closed(const DiffForm& a) {
  if (a.degree() >= static_cast<int>(a.varset()->size())) return true;
  return exterior_derivative(a).is_zero();
}

// Interior product X -| a (contraction in the first slot).
inline DiffForm interior_product(const VectorFieldGerm& X, const DiffForm& a) {
  require_same_vars(X.vs, a.varset());
  if (a.degree() < 1) throw Error("interior product of a 0-form");
  DiffForm r(a.varset(), a.degree() - 1);
  for (const auto& [idx, p] : a.terms())
    for (std::size_t k = 0; k < idx.size(); ++k) {
      const Polynomial& xc = X.components[idx[k]];
      if (xc.is_zero()) continue;
      IndexTuple rest;
      for (std::size_t j = 0; j < idx.size(); ++j)
        if (j != k) rest.push_back(idx[j]);
      Polynomial c = xc * p;
      if (k % 2 == 1) c = Rat(-1) * c;
      if (!c.is_zero()) r.add_term(std::move(rest), c);
    }
  return r;
}

// Lie derivative of a closed form: L_X a = d(X -| a).
inline DiffForm lie_derivative_closed(const VectorFieldGerm& X, const DiffForm& a) {
  if (!is_closed(a)) throw Error("lie_derivative_closed: form is not closed");
  return exterior_derivative(interior_product(X, a));
}

// Pullback along a parameterized branch t -> (f_1(t),...,f_n(t)).
// Result is g(t) for 0-forms, g(t) dt for 1-forms, and 0 for k >= 2.
struct PulledBack {
  UniPoly g;
  int dt_power = 0;  // 0 for functions, 1 for g dt
};

inline PulledBack pullback(const DiffForm& a, const std::vector<UniPoly>& coords) {
  PulledBack out;
  out.dt_power = a.degree() >= 1 ? 1 : 0;
  if (a.degree() >= 2) return out;  // target is 1-dimensional
  if (a.degree() == 0) {
    for (const auto& [idx, p] : a.terms()) out.g += substitute(p, coords);
    return out;
  }
  for (const auto& [idx, p] : a.terms())
    out.g += substitute(p, coords) * coords[idx[0]].derivative();
  return out;
}

inline ExtInt vanishing_order(const PulledBack& f) { return f.g.vanishing_order(); }

}  // namespace algrest
