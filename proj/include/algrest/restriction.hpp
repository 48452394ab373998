#pragma once
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "algrest/germ.hpp"
#include "algrest/linalg.hpp"

namespace algrest {

enum class Flavor { All2Forms, Closed2Forms };

// A monomial 2-form m dx_i ^ dx_j with i < j.
struct Monomial2Form {
  int i, j;
  Monomial m;

  bool operator<(const Monomial2Form& o) const {
    if (i != o.i) return i < o.i;
    if (j != o.j) return j < o.j;
    return m < o.m;
  }
};

// Generators of the degree-d piece of A^2_0(N): for each ideal generator H,
// the pointwise-vanishing forms m H dx_i^dx_j and the exact forms d(m H)^dx_a
// of quasi-degree d.
inline std::vector<DiffForm> a20_generators(const MultiGerm& g, long d) {
  std::vector<DiffForm> out;
  const VarSet& vs = *g.vs;
  for (const auto& h : g.ideal.generators) {
    auto qd = h.quasi_degree();
    if (qd.kind != Polynomial::QDeg::Value)
      throw Error("ideal generator is not quasi-homogeneous: " + h.str());
    long hd = qd.d;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        long md = d - hd - vs.weights[i] - vs.weights[j];
        for (const auto& m : monomials_of_quasi_degree(vs, md))
          out.push_back(DiffForm::monomial_form(
              g.vs, {static_cast<int>(i), static_cast<int>(j)},
              Polynomial::term(g.vs, m, 1) * h));
      }
    for (std::size_t a = 0; a < vs.size(); ++a) {
      long md = d - hd - vs.weights[a];
      for (const auto& m : monomials_of_quasi_degree(vs, md)) {
        Polynomial mh = Polynomial::term(g.vs, m, 1) * h;
        DiffForm dmh = exterior_derivative(DiffForm::from_function(mh));
        out.push_back(wedge(dmh, DiffForm::dx(g.vs, static_cast<int>(a))));
      }
    }
  }
  return out;
}

// Quotient bookkeeping for one quasi-degree: monomial 2-forms of that degree
// modulo the A^2_0 generators, in reduced echelon form.
class DegreeReducer {
 public:
  DegreeReducer(const MultiGerm& g, long d) : degree_(d), ech_(0) {
    const VarSet& vs = *g.vs;
    for (std::size_t i = 0; i < vs.size(); ++i)
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        long md = d - vs.weights[i] - vs.weights[j];
        for (const auto& m : monomials_of_quasi_degree(vs, md))
          cols_.push_back({static_cast<int>(i), static_cast<int>(j), m});
      }
    for (std::size_t c = 0; c < cols_.size(); ++c) col_index_[cols_[c]] = c;
    ech_ = Echelon(cols_.size());
    for (const auto& gen : a20_generators(g, d)) {
      ech_.add_row(to_coords(gen));
      if (ech_.rank() == cols_.size()) break;  // quotient already zero
    }
    std::vector<bool> pivot(cols_.size(), false);
    for (std::size_t p : ech_.pivots()) pivot[p] = true;
    for (std::size_t c = 0; c < cols_.size(); ++c)
      if (!pivot[c]) free_cols_.push_back(c);
  }

  long degree() const { return degree_; }
  std::size_t quotient_dim() const { return free_cols_.size(); }
  const std::vector<Monomial2Form>& columns() const { return cols_; }
  const std::vector<std::size_t>& free_columns() const { return free_cols_; }

  Vec to_coords(const DiffForm& f) const {
    Vec v(cols_.size(), Rat(0));
    for (const auto& [idx, p] : f.terms())
      for (const auto& [m, c] : p.terms()) {
        auto it = col_index_.find({idx[0], idx[1], m});
        if (it == col_index_.end())
          throw Error("form term of unexpected quasi-degree in reducer");
        v[it->second] = c;
      }
    return v;
  }

  // Canonical quotient coordinates of a quasi-degree-d 2-form piece.
  Vec raw_reduce(const DiffForm& piece) const {
    Vec res = ech_.reduce(to_coords(piece));
    Vec out(free_cols_.size());
    for (std::size_t k = 0; k < free_cols_.size(); ++k) out[k] = res[free_cols_[k]];
    return out;
  }

 private:
  long degree_;
  std::vector<Monomial2Form> cols_;
  std::map<Monomial2Form, std::size_t> col_index_;
  Echelon ech_;
  std::vector<std::size_t> free_cols_;
};

class GradedBasis;
using GradedBasisPtr = std::shared_ptr<const GradedBasis>;

// Coordinates of an algebraic restriction over a basis of representatives.
struct RestrictionClass {
  GradedBasisPtr basis;
  Vec coords;

  bool is_zero() const { return algrest::is_zero(coords); }
  std::string str() const;
};

struct BasisOptions {
  std::optional<long> degree_cap;
  std::vector<std::string> rep_names;   // used with preferred reps
  std::vector<DiffForm> preferred_reps;  // must span the computed space
};

// Graded basis of [Lambda^2]_N or [Z^2]_N: per-quasi-degree quotient
// machinery, a stabilization proof window, and representative 2-forms
// (closed ones for the closed flavor). A finished basis is logically
// immutable; restricting a form whose quasi-degree exceeds the verified
// range lazily checks the new degrees and caches them, so sharing one basis
// across threads needs external synchronization.
class GradedBasis : public std::enable_shared_from_this<GradedBasis> {
 public:
  static GradedBasisPtr build(const MultiGerm& g, Flavor flavor,
                              const BasisOptions& opt = {}) {
    auto b = std::shared_ptr<GradedBasis>(new GradedBasis(g, flavor, opt));
    return b;
  }

  const MultiGerm& germ() const { return germ_; }
  Flavor flavor() const { return flavor_; }
  std::size_t dimension() const { return reps_.size(); }
  const std::vector<DiffForm>& representatives() const { return reps_; }
  const std::vector<std::string>& rep_names() const { return rep_names_; }
  long stabilization_degree() const { return stab_degree_; }
  long window() const { return window_; }
  // all quotient pieces are verified zero on (stabilization, verified] and,
  // by the stabilization window, vanish beyond
  long verified_degree() const { return max_degree_; }
  std::size_t raw_width() const { return raw_width_; }

  // quasi-degrees where the class has nonzero graded pieces
  std::vector<long> graded_class_support(const RestrictionClass& a) const {
    Vec raw = raw_coords(representative_form(a.coords));
    std::vector<long> out;
    for (const auto& [d, off] : raw_offset_) {
      std::size_t width = reducers_.at(d).quotient_dim();
      for (std::size_t k = 0; k < width; ++k)
        if (raw[off + k] != 0) {
          out.push_back(d);
          break;
        }
    }
    return out;
  }

  // Per-degree dimensions of the quotient (all 2-forms) and, for the closed
  // flavor, of the image of closed forms.
  const std::map<long, std::size_t>& degree_dims() const { return degree_dims_; }

  Vec raw_coords(const DiffForm& w) const {
    if (w.degree() != 2) throw Error("restriction expects a 2-form");
    require_same_vars(w.varset(), germ_.vs);
    Vec out(raw_width_, Rat(0));
    for (long d : w.quasi_degrees_present()) {
      DiffForm piece = w.graded_component(d);
      const DegreeReducer* red = reducer(d);
      if (!red) {
        // beyond the verified range: extend, requiring a zero quotient
        verify_zero_beyond(d);
        Vec r = ext_reducers_.at(d).raw_reduce(piece);
        if (!algrest::is_zero(r))
          throw Error("basis did not stabilize: nonzero class at degree " +
                      std::to_string(d));
        continue;
      }
      Vec r = red->raw_reduce(piece);
      std::size_t off = raw_offset_.at(d);
      for (std::size_t k = 0; k < r.size(); ++k) out[off + k] = r[k];
    }
    return out;
  }

  // Coordinates over the representatives. Throws when the class is not in
  // their span (for the closed flavor this means the form was not closed).
  RestrictionClass restrict(const DiffForm& w) const {
    if (flavor_ == Flavor::Closed2Forms && !is_closed(w))
      throw Error("closed-flavor restriction of a non-closed form");
    Vec t = raw_coords(w);
    auto x = solve(rep_matrix_, t);
    if (!x) throw Error("class does not lie in the representative span");
    return RestrictionClass{shared_from_this(), *x};
  }

  DiffForm representative_form(const Vec& coords) const {
    if (coords.size() != reps_.size()) throw Error("coordinate arity");
    DiffForm f = DiffForm::zero(germ_.vs, 2);
    for (std::size_t i = 0; i < reps_.size(); ++i)
      if (coords[i] != 0) f += coords[i] * reps_[i];
    return f;
  }

  RestrictionClass make_class(Vec coords) const {
    if (coords.size() != reps_.size()) throw Error("coordinate arity");
    return RestrictionClass{shared_from_this(), std::move(coords)};
  }

 private:
  GradedBasis(const MultiGerm& g, Flavor flavor, const BasisOptions& opt)
      : germ_(g), flavor_(flavor) {
    validate_or_throw(germ_);
    long maxgen = 0;
    for (const auto& h : germ_.ideal.generators) {
      auto qd = h.quasi_degree();
      if (qd.kind == Polynomial::QDeg::Value) maxgen = std::max(maxgen, qd.d);
    }
    long wsum = 0;
    for (long w : germ_.vs->weights) wsum += w;
    window_ = maxgen + wsum;
    long hard_cap = opt.degree_cap.value_or(10 * window_);

    std::vector<std::pair<long, DiffForm>> canonical;  // (degree, closed rep)
    long zeros_in_a_row = 0;
    long d = 0;
    for (; d <= hard_cap; ++d) {
      reducers_.emplace(d, DegreeReducer(germ_, d));
      const DegreeReducer& red = reducers_.at(d);
      raw_offset_[d] = raw_width_;
      raw_width_ += red.quotient_dim();
      if (red.quotient_dim() > 0) {
        if (flavor_ == Flavor::All2Forms) {
          for (std::size_t c : red.free_columns()) {
            const Monomial2Form& mf = red.columns()[c];
            canonical.emplace_back(
                d, DiffForm::monomial_form(germ_.vs, {mf.i, mf.j},
                                           Polynomial::term(germ_.vs, mf.m, 1)));
          }
          degree_dims_[d] = red.quotient_dim();
        } else {
          // span of exact classes at this degree, with closed representatives
          Echelon sub(red.quotient_dim(), /*track=*/true);
          std::vector<DiffForm> exact_gens;
          std::size_t closed_dim = 0;
          for (std::size_t a = 0; a < germ_.vs->size(); ++a) {
            long md = d - germ_.vs->weights[a];
            for (const auto& m : monomials_of_quasi_degree(*germ_.vs, md)) {
              DiffForm u = DiffForm::monomial_form(germ_.vs, {static_cast<int>(a)},
                                                   Polynomial::term(germ_.vs, m, 1));
              DiffForm du = exterior_derivative(u);
              exact_gens.push_back(du);
              if (sub.add_row(red.raw_reduce(du))) ++closed_dim;
            }
          }
          for (std::size_t r = 0; r < sub.rank(); ++r) {
            DiffForm rep = DiffForm::zero(germ_.vs, 2);
            const Vec& h = sub.history()[r];
            for (std::size_t k = 0; k < h.size(); ++k)
              if (h[k] != 0) rep += h[k] * exact_gens[k];
            canonical.emplace_back(d, std::move(rep));
          }
          if (closed_dim > 0) degree_dims_[d] = closed_dim;
        }
      }
      if (red.quotient_dim() == 0) {
        if (++zeros_in_a_row >= window_ && d >= window_) break;
      } else {
        zeros_in_a_row = 0;
      }
    }
    if (d > hard_cap)
      throw Error("restriction basis failed to stabilize below the degree cap");
    max_degree_ = d;
    stab_degree_ = 0;
    for (const auto& [deg, n] : degree_dims_) stab_degree_ = std::max(stab_degree_, deg);

    for (auto& [deg, rep] : canonical) {
      reps_.push_back(rep);
      rep_degrees_.push_back(deg);
    }
    rep_names_.clear();
    for (std::size_t i = 0; i < reps_.size(); ++i)
      rep_names_.push_back("e" + std::to_string(i + 1));

    if (!opt.preferred_reps.empty()) {
      if (opt.preferred_reps.size() != reps_.size())
        throw Error("preferred basis has " + std::to_string(opt.preferred_reps.size()) +
                    " elements, computed dimension is " + std::to_string(reps_.size()));
      Echelon span(raw_width_);
      for (const auto& r : reps_) span.add_row(raw_coords(r));
      Echelon indep(raw_width_);
      for (const auto& p : opt.preferred_reps) {
        if (flavor_ == Flavor::Closed2Forms && !is_closed(p))
          throw Error("preferred representative is not closed: " + p.str());
        Vec rc = raw_coords(p);
        if (!span.contains(rc))
          throw Error("preferred representative outside computed span: " + p.str());
        if (!indep.add_row(rc))
          throw Error("preferred representatives are linearly dependent");
      }
      reps_ = opt.preferred_reps;
      rep_degrees_.clear();
      for (const auto& r : reps_) {
        auto ds = r.quasi_degrees_present();
        rep_degrees_.push_back(ds.size() == 1 ? ds[0] : -1);
      }
      if (!opt.rep_names.empty()) {
        if (opt.rep_names.size() != reps_.size()) throw Error("rep name arity");
        rep_names_ = opt.rep_names;
      }
    }

    rep_matrix_ = Matrix(raw_width_, reps_.size());
    for (std::size_t c = 0; c < reps_.size(); ++c) {
      Vec rc = raw_coords(reps_[c]);
      for (std::size_t r = 0; r < raw_width_; ++r) rep_matrix_.at(r, c) = rc[r];
    }
  }

  const DegreeReducer* reducer(long d) const {
    auto it = reducers_.find(d);
    return it == reducers_.end() ? nullptr : &it->second;
  }

  void verify_zero_beyond(long d) const {
    if (ext_reducers_.count(d)) return;
    if (d > 100 * window_) throw Error("degree far beyond stabilization cap");
    ext_reducers_.emplace(d, DegreeReducer(germ_, d));
  }

  MultiGerm germ_;
  Flavor flavor_;
  long window_ = 0;
  long max_degree_ = 0;
  long stab_degree_ = 0;
  std::size_t raw_width_ = 0;
  std::map<long, DegreeReducer> reducers_;
  mutable std::map<long, DegreeReducer> ext_reducers_;
  std::map<long, std::size_t> raw_offset_;
  std::map<long, std::size_t> degree_dims_;
  std::vector<DiffForm> reps_;
  std::vector<long> rep_degrees_;
  std::vector<std::string> rep_names_;
  Matrix rep_matrix_;
};

inline std::string RestrictionClass::str() const {
  bool all_zero = true;
  std::ostringstream os;
  for (std::size_t i = 0; i < coords.size(); ++i) {
    if (coords[i] == 0) continue;
    std::string cs = to_string(coords[i]);
    if (!all_zero) os << (cs[0] == '-' ? " - " : " + ");
    else if (cs[0] == '-') os << "-";
    all_zero = false;
    std::string mag = cs[0] == '-' ? cs.substr(1) : cs;
    if (mag != "1") os << mag << "*";
    os << basis->rep_names()[i];
  }
  return all_zero ? "0" : os.str();
}

// ---- spec surface -----------------------------------------------------------

inline GradedBasisPtr restriction_basis(const MultiGerm& g, Flavor flavor,
                                        const BasisOptions& opt = {}) {
  return GradedBasis::build(g, flavor, opt);
}

inline RestrictionClass restrict_form(const GradedBasisPtr& basis, const DiffForm& w) {
  return basis->restrict(w);
}

inline bool is_zero_restriction(const GradedBasisPtr& basis, const DiffForm& w) {
  return basis->restrict(w).is_zero();
}

// Restriction of a form to a named component, over that component's own basis.
inline RestrictionClass restrict_to_component(const MultiGerm& g,
                                              const std::string& component_name,
                                              const DiffForm& w, Flavor flavor,
                                              const BasisOptions& opt = {}) {
  const Component* c = g.component(component_name);
  if (!c) throw Error("no component named " + component_name);
  auto basis = restriction_basis(component_germ(g, *c), flavor, opt);
  return basis->restrict(w);
}

}  // namespace algrest
