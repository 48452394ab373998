#pragma once
#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "algrest/rational.hpp"

namespace algrest {

// Weighted variable set. Weights are positive integers; callers with rational
// weight ratios pre-scale to integers.
struct VarSet {
  std::vector<std::string> names;
  std::vector<long> weights;

  std::size_t size() const { return names.size(); }
  long weight(std::size_t i) const { return weights[i]; }

  std::optional<std::size_t> index_of(const std::string& n) const {
    for (std::size_t i = 0; i < names.size(); ++i)
      if (names[i] == n) return i;
    return std::nullopt;
  }

  bool operator==(const VarSet& o) const {
    return names == o.names && weights == o.weights;
  }

  void check() const {
    if (names.empty()) throw Error("empty variable set");
    if (names.size() != weights.size()) throw Error("names/weights length mismatch");
    for (long w : weights)
      if (w <= 0) throw Error("weights must be positive");
    for (std::size_t i = 0; i < names.size(); ++i)
      for (std::size_t j = i + 1; j < names.size(); ++j)
        if (names[i] == names[j]) throw Error("duplicate variable " + names[i]);
  }
};

using VarSetPtr = std::shared_ptr<const VarSet>;

inline VarSetPtr make_varset(std::vector<std::string> names, std::vector<long> weights) {
  VarSet v{std::move(names), std::move(weights)};
  v.check();
  return std::make_shared<const VarSet>(std::move(v));
}

inline void require_same_vars(const VarSetPtr& a, const VarSetPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) throw Error("variable set mismatch");
}

struct Monomial {
  std::vector<int> e;

  explicit Monomial(std::size_t n = 0) : e(n, 0) {}
  explicit Monomial(std::vector<int> exps) : e(std::move(exps)) {}

  bool is_one() const {
    for (int x : e)
      if (x) return false;
    return true;
  }
  long ordinary_degree() const {
    long d = 0;
    for (int x : e) d += x;
    return d;
  }
  bool operator<(const Monomial& o) const { return e < o.e; }
  bool operator==(const Monomial& o) const { return e == o.e; }
};

inline long quasi_degree(const VarSet& vs, const Monomial& m) {
  long d = 0;
  for (std::size_t i = 0; i < m.e.size(); ++i) d += m.e[i] * vs.weights[i];
  return d;
}

inline Monomial mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.e.size());
  for (std::size_t i = 0; i < a.e.size(); ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

// Univariate polynomials in the curve parameter t.
class UniPoly {
 public:
  UniPoly() = default;
  static UniPoly term(long k, const Rat& c) {
    UniPoly p;
    if (c != 0) p.t_[k] = c;
    return p;
  }

  bool is_zero() const { return t_.empty(); }
  const std::map<long, Rat>& terms() const { return t_; }

  Rat coeff(long k) const {
    auto it = t_.find(k);
    return it == t_.end() ? Rat(0) : it->second;
  }

  UniPoly& operator+=(const UniPoly& o) {
    for (const auto& [k, c] : o.t_) {
      Rat& r = t_[k];
      r += c;
      if (r == 0) t_.erase(k);
    }
    return *this;
  }
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    for (const auto& [ka, ca] : a.t_)
      for (const auto& [kb, cb] : b.t_) {
        Rat& x = r.t_[ka + kb];
        x += ca * cb;
        if (x == 0) r.t_.erase(ka + kb);
      }
    return r;
  }
  friend UniPoly operator*(const Rat& c, const UniPoly& a) {
    UniPoly r;
    if (c == 0) return r;
    for (const auto& [k, x] : a.t_) r.t_[k] = c * x;
    return r;
  }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a += Rat(-1) * b; }

  UniPoly derivative() const {
    UniPoly r;
    for (const auto& [k, c] : t_)
      if (k != 0) r.t_[k - 1] = c * k;
    return r;
  }

  UniPoly pow(int n) const {
    UniPoly r = term(0, 1);
    for (int i = 0; i < n; ++i) r = r * (*this);
    return r;
  }

  // Lowest power of t with nonzero coefficient; infinity for the zero poly.
  ExtInt vanishing_order() const {
    if (t_.empty()) return ExtInt::infinity();
    return ExtInt(t_.begin()->first);
  }

  bool operator==(const UniPoly& o) const { return t_ == o.t_; }

  std::string str() const {
    if (t_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : t_) {
      std::string cs = to_string(c);
      if (!first && cs[0] != '-') os << "+";
      first = false;
      if (k == 0) { os << cs; continue; }
      if (c == -1) os << "-";
      else if (c != 1) os << cs << "*";
      os << "t";
      if (k != 1) os << "^" << k;
    }
    return os.str();
  }

 private:
  std::map<long, Rat> t_;
};

// Multivariate polynomial over an ordered, weighted variable set. Terms are
// kept sparse with no zero coefficients stored.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarSetPtr vs) : vs_(std::move(vs)) {}

  static Polynomial zero(VarSetPtr vs) { return Polynomial(std::move(vs)); }
  static Polynomial constant(VarSetPtr vs, const Rat& c) {
    Polynomial p(vs);
    if (c != 0) p.t_[Monomial(vs->size())] = c;
    return p;
  }
  static Polynomial term(VarSetPtr vs, const Monomial& m, const Rat& c) {
    Polynomial p(vs);
    if (c != 0) p.t_[m] = c;
    return p;
  }
  static Polynomial variable(VarSetPtr vs, std::size_t i) {
    Monomial m(vs->size());
    m.e[i] = 1;
    return term(std::move(vs), m, 1);
  }

  const VarSetPtr& varset() const { return vs_; }
  const std::map<Monomial, Rat>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }

  Rat coeff(const Monomial& m) const {
    auto it = t_.find(m);
    return it == t_.end() ? Rat(0) : it->second;
  }

  Polynomial& operator+=(const Polynomial& o) {
    require_same_vars(vs_, o.vs_);
    for (const auto& [m, c] : o.t_) {
      Rat& r = t_[m];
      r += c;
      if (r == 0) t_.erase(m);
    }
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    return a += Rat(-1) * b;
  }
  friend Polynomial operator*(const Rat& c, const Polynomial& a) {
    Polynomial r(a.vs_);
    if (c == 0) return r;
    for (const auto& [m, x] : a.t_) r.t_[m] = c * x;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    require_same_vars(a.vs_, b.vs_);
    Polynomial r(a.vs_);
    for (const auto& [ma, ca] : a.t_)
      for (const auto& [mb, cb] : b.t_) {
        Monomial m = mul(ma, mb);
        Rat& x = r.t_[m];
        x += ca * cb;
        if (x == 0) r.t_.erase(m);
      }
    return r;
  }

  Polynomial derivative(std::size_t i) const {
    Polynomial r(vs_);
    for (const auto& [m, c] : t_) {
      if (m.e[i] == 0) continue;
      Monomial n = m;
      n.e[i] -= 1;
      r.t_[n] = c * m.e[i];
    }
    return r;
  }

  // d such that every term has quasi-degree d. The zero polynomial is
  // quasi-homogeneous of every degree ("any"); mixed degrees give "none".
  struct QDeg {
    enum Kind { None, Any, Value } kind;
    long d;
  };
  QDeg quasi_degree() const {
    if (t_.empty()) return {QDeg::Any, 0};
    long d = algrest::quasi_degree(*vs_, t_.begin()->first);
    for (const auto& [m, c] : t_)
      if (algrest::quasi_degree(*vs_, m) != d) return {QDeg::None, 0};
    return {QDeg::Value, d};
  }

  Polynomial graded_component(long d) const {
    Polynomial r(vs_);
    for (const auto& [m, c] : t_)
      if (algrest::quasi_degree(*vs_, m) == d) r.t_[m] = c;
    return r;
  }

  std::vector<long> quasi_degrees_present() const {
    std::vector<long> ds;
    for (const auto& [m, c] : t_) {
      long d = algrest::quasi_degree(*vs_, m);
      bool seen = false;
      for (long x : ds) seen |= (x == d);
      if (!seen) ds.push_back(d);
    }
    std::sort(ds.begin(), ds.end());
    return ds;
  }

  long min_ordinary_degree() const {
    long best = -1;
    for (const auto& [m, c] : t_) {
      long d = m.ordinary_degree();
      if (best < 0 || d < best) best = d;
    }
    return best;  // -1 for zero polynomial
  }

  bool operator==(const Polynomial& o) const { return t_ == o.t_; }

  std::string str() const;

 private:
  VarSetPtr vs_;
  std::map<Monomial, Rat> t_;
};

// Exact composition p(f_1(t), ..., f_n(t)) for a parameterized branch given
// by one univariate polynomial per variable.
inline UniPoly substitute(const Polynomial& p, const std::vector<UniPoly>& coords) {
  if (coords.size() != p.varset()->size())
    throw Error("substitute: coordinate count mismatch");
  UniPoly out;
  std::map<std::pair<std::size_t, int>, UniPoly> powcache;
  auto power = [&](std::size_t i, int e) -> const UniPoly& {
    auto key = std::make_pair(i, e);
    auto it = powcache.find(key);
    if (it != powcache.end()) return it->second;
    return powcache.emplace(key, coords[i].pow(e)).first->second;
  };
  for (const auto& [m, c] : p.terms()) {
    UniPoly term = UniPoly::term(0, c);
    for (std::size_t i = 0; i < m.e.size(); ++i)
      if (m.e[i] != 0) term = term * power(i, m.e[i]);
    out += term;
  }
  return out;
}

// All monomials of the given quasi-degree, in deterministic (map) order.
inline std::vector<Monomial> monomials_of_quasi_degree(const VarSet& vs, long d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  Monomial cur(vs.size());
  // depth-first over exponents of each variable
  auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
    if (i == vs.size()) {
      if (rem == 0) out.push_back(cur);
      return;
    }
    if (i + 1 == vs.size()) {
      if (rem % vs.weights[i] == 0) {
        cur.e[i] = static_cast<int>(rem / vs.weights[i]);
        out.push_back(cur);
        cur.e[i] = 0;
      }
      return;
    }
    for (long k = 0; k * vs.weights[i] <= rem; ++k) {
      cur.e[i] = static_cast<int>(k);
      self(self, i + 1, rem - k * vs.weights[i]);
    }
    cur.e[i] = 0;
  };
  rec(rec, 0, d);
  std::sort(out.begin(), out.end());
  return out;
}

inline std::string monomial_str(const VarSet& vs, const Monomial& m) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.e.size(); ++i) {
    if (m.e[i] == 0) continue;
    if (!first) os << "*";
    first = false;
    os << vs.names[i];
    if (m.e[i] != 1) os << "^" << m.e[i];
  }
  return first ? "1" : os.str();
}

inline std::string Polynomial::str() const {
  if (t_.empty()) return "0";
  // canonical print order: graded by quasi-degree, then lexicographic
  std::vector<std::pair<Monomial, Rat>> ts(t_.begin(), t_.end());
  std::stable_sort(ts.begin(), ts.end(), [&](const auto& a, const auto& b) {
    long da = algrest::quasi_degree(*vs_, a.first);
    long db = algrest::quasi_degree(*vs_, b.first);
    if (da != db) return da < db;
    return a.first < b.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : ts) {
    std::string cs = to_string(c);
    if (m.is_one()) {
      if (!first && cs[0] != '-') os << "+";
      os << cs;
    } else {
      if (c == 1) {
        if (!first) os << "+";
      } else if (c == -1) {
        os << "-";
      } else {
        if (!first && cs[0] != '-') os << "+";
        os << cs << "*";
      }
      os << monomial_str(*vs_, m);
    }
    first = false;
  }
  return os.str();
}

}  // namespace algrest
