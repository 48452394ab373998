#pragma once
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "algrest/invariants.hpp"

namespace algrest {

// Exact scaled value c * base^(p/q). Normal-form moduli pick up weighted
// rescalings whose exponents need not be integers; the value is kept symbolic
// unless the root is rational.
struct ScaledValue {
  Rat coef = 0;
  Rat base = 1;
  Rat expo = 0;  // exponent of base

  ScaledValue() = default;
  ScaledValue(Rat c) : coef(std::move(c)) { normalize(); }
  ScaledValue(Rat c, Rat b, Rat e)
      : coef(std::move(c)), base(std::move(b)), expo(std::move(e)) {
    normalize();
  }

  bool is_zero() const { return coef == 0; }
  bool is_rational() const { return expo == 0; }
  Rat rational() const {
    if (!is_rational()) throw Error("scaled value is irrational: " + str());
    return coef;
  }

  void normalize() {
    if (coef == 0 || base == 1) {
      base = 1;
      expo = 0;
      return;
    }
    if (base == 0) throw Error("zero base");
    if (expo == 0) {
      base = 1;
      return;
    }
    // negative exponent: invert the base
    if (expo < 0) {
      base = 1 / base;
      expo = -expo;
    }
    // try to fold base^(num/den) into the rational coefficient
    Int en = expo.get_num(), ed = expo.get_den();
    auto rn = nth_root_exact(base.get_num(), ed.get_ui());
    auto rd = nth_root_exact(base.get_den(), ed.get_ui());
    if (rn && rd) {
      Rat root = make_rat(*rn, *rd);
      long e = en.get_si();
      coef *= pow_rat(root, e);
      base = 1;
      expo = 0;
    }
  }

  ScaledValue negated() const { return ScaledValue(-coef, base, expo); }

  bool operator==(const ScaledValue& o) const {
    return coef == o.coef && base == o.base && expo == o.expo;
  }

  std::string str() const {
    if (is_rational()) return to_string(coef);
    std::ostringstream os;
    if (coef != 1) os << to_string(coef) << "*";
    os << "(" << to_string(base) << ")^(" << to_string(expo) << ")";
    return os.str();
  }
};

struct ModulusValue {
  std::string name;
  ScaledValue value;
};

struct ClassLabel {
  std::string family;  // "T7", "T8", "A", "D", "E6"
  std::string name;    // e.g. "T7^3", "(T8)^4", "A4^1"
  std::string subcase;
  std::vector<ModulusValue> moduli;
  long codim = 0;
  long min_2n = 4;  // realizable ambient dimensions: every 2n >= min_2n
  std::vector<std::size_t> moduli_directions;  // basis indices of the parameters
};

struct AmbiguousClassification {
  std::vector<std::string> candidates;
  std::string signature;
};

using ClassifyResult = std::variant<ClassLabel, AmbiguousClassification>;

// ---------------------------------------------------------------------------
// T7: total decision tree on the vanishing pattern of (c1..c7) over the
// closed basis th1..th7.
// ---------------------------------------------------------------------------

inline ClassLabel classify_t7(const Vec& c) {
  if (c.size() != 7) throw Error("classify_t7 expects 7 coordinates");
  auto nz = [&](int i) { return c[i - 1] != 0; };
  ClassLabel l;
  l.family = "T7";
  if (nz(1) && nz(2) && nz(3)) {
    l.name = "T7^0";
    l.subcase = "c1*c2*c3 != 0";
    l.codim = 0;
    l.min_2n = 4;
    l.moduli_directions = {1, 2};  // th2, th3
  } else if (nz(2) || nz(3)) {
    l.name = "T7^1";
    l.subcase = (nz(2) && nz(3)) ? "c1 = 0, c2*c3 != 0" : "c2*c3 = 0, c2+c3 != 0";
    l.codim = 1;
    l.min_2n = 4;
    l.moduli_directions = {0, 4};  // th1, th5
  } else if (nz(1) && (nz(4) || nz(5))) {
    l.name = "T7^2";
    l.subcase = "c2 = c3 = 0, c1 != 0, (c4,c5) != (0,0)";
    l.codim = 2;
    l.min_2n = 4;
    l.moduli_directions = {3, 4};  // th4, th5
  } else if (!nz(1) && (nz(4) || nz(5))) {
    l.name = "T7^3";
    l.subcase = "c1 = c2 = c3 = 0, (c4,c5) != (0,0)";
    l.codim = 3;
    l.min_2n = 6;
    l.moduli_directions = {4, 5};  // th5, th6
  } else if (nz(1)) {
    l.name = "T7^4";
    l.subcase = "c1 != 0, c2 = c3 = c4 = c5 = 0";
    l.codim = 4;
    l.min_2n = 4;
    l.moduli_directions = {6};  // th7
  } else if (nz(6)) {
    l.name = "T7^5";
    l.subcase = "c1 = ... = c5 = 0, c6 != 0";
    l.codim = 5;
    l.min_2n = 6;
    l.moduli_directions = {6};  // th7
  } else if (nz(7)) {
    l.name = "T7^6";
    l.subcase = "c1 = ... = c6 = 0, c7 != 0";
    l.codim = 6;
    l.min_2n = 6;
  } else {
    l.name = "T7^7";
    l.subcase = "zero class";
    l.codim = 7;
    l.min_2n = 6;
  }
  return l;
}

inline long realizable_min_2n_t7(const std::string& name) {
  if (name == "T7^0" || name == "T7^1" || name == "T7^2" || name == "T7^4") return 4;
  return 6;
}

// The swap symmetry x2 <-> x3 transported to coordinates over th1..th7.
inline Vec t7_swap(const Vec& c) {
  return Vec{-c[0], c[2], c[1], c[4], c[3], -c[5], -c[6]};
}

struct NormalizedT7 {
  ClassLabel label;
  // coordinate vector of the normal form when every modulus is rational
  std::optional<Vec> rational_coords;
};

// Reduces a coordinate vector to its normal form: zero the reducible higher
// coefficients (the reductions never feed back into the kept block), scale
// the leading coefficient to +-1 with the quasi-degree scaling law
// (th_k picks up s^{delta_k}, delta = (4,5,5,7,7,7,9)), and canonicalize with
// the branch swap. Moduli are exact scaled values.
inline NormalizedT7 normalize_t7(const Vec& c_in) {
  static const long delta[7] = {4, 5, 5, 7, 7, 7, 9};
  Vec c = c_in;
  ClassLabel label = classify_t7(c);

  // scaled value of c[i] after rescaling that sends c[pivot] to +-1
  auto scaled = [&](const Rat& v, int i, const Rat& pivot_mag, int pivot) {
    return ScaledValue(v, pivot_mag, make_rat(Int(-delta[i]), Int(delta[pivot])));
  };
  auto fix_pair_sign = [](ScaledValue& a, ScaledValue& b) {
    // residual scaling s = -1 flips both; make the first nonzero positive
    const ScaledValue& lead = a.is_zero() ? b : a;
    if (lead.coef < 0) {
      a = a.negated();
      b = b.negated();
    }
  };
  NormalizedT7 out;
  out.label = label;
  auto finish = [&](std::vector<ModulusValue> moduli, Vec coords,
                    const std::vector<std::size_t>& dirs) {
    bool rational = true;
    for (const auto& m : moduli) rational &= m.value.is_rational();
    out.label.moduli = std::move(moduli);
    if (rational) {
      for (std::size_t k = 0; k < dirs.size(); ++k)
        coords[dirs[k]] = out.label.moduli[k].value.rational();
      out.rational_coords = std::move(coords);
    }
  };

  if (label.name == "T7^0") {
    if (c[0] < 0) c = t7_swap(c);
    Rat mag = abs(c[0]);
    ScaledValue m1 = scaled(c[1], 1, mag, 0), m2 = scaled(c[2], 2, mag, 0);
    fix_pair_sign(m1, m2);
    Vec coords(7, Rat(0));
    coords[0] = 1;
    finish({{"c1", m1}, {"c2", m2}}, coords, {1, 2});
  } else if (label.name == "T7^1") {
    if (c[1] == 0) c = t7_swap(c);
    if (c[2] == 0) {
      // standard family [c1 th1 + th2 + c2 th5]
      ScaledValue m1 = scaled(c[0], 0, c[1], 1), m5 = scaled(c[4], 4, c[1], 1);
      Vec coords(7, Rat(0));
      coords[1] = 1;
      finish({{"c1", m1}, {"c2", m5}}, coords, {0, 4});
    } else {
      // both degree-5 coefficients nonzero: reduced form [th2 + a th3 + b th6]
      // with the th6 coefficient absorbed along the reduction of c4, c5, c7
      Rat b6 = c[5] + rat(3, 7) * (c[1] * c[1] * c[4] - c[2] * c[2] * c[3]) /
                          (c[1] * c[2]);
      Rat a = c[2] / c[1];
      ScaledValue sb(b6, c[1], rat(-7, 5));
      // swap presentation: (a, b) ~ (1/a, -b6 scaled by the other pivot)
      Rat a2 = 1 / a;
      ScaledValue sb2(-b6, c[2], rat(-7, 5));
      if (abs(a2) < abs(a) || (a == 1 && sb.coef < 0)) {
        a = a2;
        sb = sb2;
      }
      Vec coords(7, Rat(0));
      coords[1] = 1;
      finish({{"a", ScaledValue(a)}, {"b", sb}}, coords, {2, 5});
    }
  } else if (label.name == "T7^2") {
    if (c[0] < 0) c = t7_swap(c);
    Rat mag = abs(c[0]);
    ScaledValue m4 = scaled(c[3], 3, mag, 0), m5 = scaled(c[4], 4, mag, 0);
    fix_pair_sign(m4, m5);
    Vec coords(7, Rat(0));
    coords[0] = 1;
    finish({{"c1", m4}, {"c2", m5}}, coords, {3, 4});
  } else if (label.name == "T7^3") {
    if (c[3] == 0) c = t7_swap(c);
    Rat a = c[4] / c[3], b = c[5] / c[3];
    if (a != 0 && abs(a) > 1) {
      // swapped presentation scores lower: (a,b) ~ (1/a, -b/a)
      Rat a2 = 1 / a, b2 = -b / a;
      a = a2;
      b = b2;
    } else if (a == 1 && b < 0) {
      b = -b;
    }
    Vec coords(7, Rat(0));
    coords[3] = 1;
    finish({{"c1", ScaledValue(a)}, {"c2", ScaledValue(b)}}, coords, {4, 5});
  } else if (label.name == "T7^4") {
    if (c[0] < 0) c = t7_swap(c);
    Rat mag = abs(c[0]);
    ScaledValue m7 = scaled(c[6], 6, mag, 0);
    if (m7.coef < 0) m7 = m7.negated();
    Vec coords(7, Rat(0));
    coords[0] = 1;
    finish({{"c", m7}}, coords, {6});
  } else if (label.name == "T7^5") {
    ScaledValue m7 = scaled(c[6], 6, c[5], 5);
    Vec coords(7, Rat(0));
    coords[5] = 1;
    finish({{"c", m7}}, coords, {6});
  } else if (label.name == "T7^6") {
    Vec coords(7, Rat(0));
    coords[6] = 1;
    finish({}, coords, {});
  } else {
    finish({}, Vec(7, Rat(0)), {});
  }
  return out;
}

// Moduli report: which of the candidate directions lie outside the orbit
// tangent space at a. The count equals mu_sympl minus the class codimension.
inline std::vector<std::size_t> moduli_report(const GradedBasisPtr& closed_basis,
                                              const RestrictionClass& a,
                                              const std::vector<std::size_t>& dirs) {
  long bound = closed_basis->stabilization_degree();
  auto span = orbit_tangent_space(closed_basis, a, bound);
  Echelon ech(closed_basis->dimension());
  for (const auto& v : span) ech.add_row(v);
  std::vector<std::size_t> out;
  for (std::size_t d : dirs) {
    Vec unit(closed_basis->dimension(), Rat(0));
    unit[d] = 1;
    if (!ech.contains(unit)) out.push_back(d);
  }
  return out;
}

// ---------------------------------------------------------------------------
// T8: classification through the invariant signature
// (Lt, L1, L2, ind, ind1, ind2) plus the relative orders Lt[C2:C1] where two
// rows collide. Signatures that stay ambiguous are reported, not guessed.
// ---------------------------------------------------------------------------

struct T8SignatureRow {
  const char* name;
  const char* conditions;
  const char* sig[6];  // Lt, L1, L2, ind, ind1, ind2
  int tie;             // Lt[C2:C1]; -1 when not used
  long min_2n;
};

inline const std::vector<T8SignatureRow>& t8_signature_table() {
  static const std::vector<T8SignatureRow> rows = {
      {"(T8)^0", "c1*c2 != 0", {"2", "3", "2", "0", "0", "0"}, 1, 4},
      {"(T8)^1_2", "c1 = 0, c2 != 0", {"2", "3", "2", "0", "0", "0"}, 2, 4},
      {"(T8)^1_2", "c2 = 0, c3 != 0", {"2", "5", "2", "0", "1", "0"}, -1, 4},
      {"(T8)^1_2", "c2 = c3 = 0", {"2", "inf", "2", "0", "inf", "0"}, -1, 4},
      // tie values 1 and 2 below were derived with the relative-order engine
      // and frozen (the classical table names the invariant but not its values)
      {"(T8)^1_3", "c1*c2 != 0", {"2", "3", "3", "0", "0", "1"}, 1, 4},
      {"(T8)^2_3", "c1 = 0, c2 != 0", {"2", "3", "3", "0", "0", "1"}, 2, 4},
      {"(T8)^2_3", "c2 = 0, c3 != 0", {"2", "3", "4", "0", "0", "2"}, -1, 4},
      {"(T8)^2_3", "c2 = c3 = 0", {"2", "3", "inf", "0", "0", "inf"}, -1, 4},
      {"(T8)^2_>3", "c1*c2 != 0", {"2", "5", "3", "0", "1", "1"}, -1, 4},
      {"(T8)^2_>3", "c1 != 0, c2 = 0", {"2", "inf", "3", "0", "inf", "1"}, -1, 4},
      {"(T8)^3_0", "c1*c2 != 0", {"2", "5", "4", "0", "1", "2"}, -1, 4},
      {"(T8)^3_0", "c1 != 0, c2 = 0", {"2", "5", "inf", "0", "1", "inf"}, -1, 4},
      {"(T8)^3_0", "c1 = 0, c2 != 0", {"2", "inf", "4", "0", "inf", "2"}, -1, 4},
      {"(T8)^5_0", "", {"2", "inf", "inf", "0", "inf", "inf"}, -1, 4},
      {"(T8)^3_1", "c2 != 0", {"3", "5", "3", "1", "1", "1"}, -1, 6},
      {"(T8)^3_1", "c2 = 0", {"3", "inf", "3", "1", "inf", "1"}, -1, 6},
      {"(T8)^4", "c1*c2 != 0", {"4", "5", "4", "1", "1", "2"}, -1, 6},
      {"(T8)^4", "c1 = 0, c2 != 0", {"4", "inf", "4", "1", "inf", "2"}, 3, 6},
      {"(T8)^4", "c1 != 0, c2 = 0", {"5", "5", "inf", "1", "1", "inf"}, -1, 6},
      {"(T8)^6_1", "", {"5", "inf", "inf", "1", "inf", "inf"}, -1, 6},
      {"(T8)^5_1", "c != 0", {"4", "5", "4", "1", "1", "2"}, -1, 6},
      {"(T8)^5_1", "c = 0", {"5", "5", "inf", "1", "1", "inf"}, -1, 6},
      {"(T8)^6_2", "", {"4", "inf", "4", "2", "inf", "2"}, 4, 6},
      {"(T8)^7", "", {"7", "inf", "inf", "3", "inf", "inf"}, -1, 6},
      {"(T8)^8", "", {"inf", "inf", "inf", "inf", "inf", "inf"}, -1, 6},
  };
  return rows;
}

inline ClassifyResult classify_t8(GermAnalysis& an, const RestrictionClass& a) {
  InvariantReport rep = invariant_report(an, a, ComponentStyle::PerComponent);
  std::string sig[6] = {to_string(rep.lt_full),
                        to_string(rep.lt_components[0].second),
                        to_string(rep.lt_components[1].second),
                        to_string(rep.ind_full),
                        to_string(rep.ind_components[0].second),
                        to_string(rep.ind_components[1].second)};
  std::string sig_str;
  for (int i = 0; i < 6; ++i) sig_str += (i ? "," : "") + sig[i];

  std::vector<const T8SignatureRow*> hits;
  for (const auto& row : t8_signature_table()) {
    bool match = true;
    for (int i = 0; i < 6; ++i) match &= sig[i] == row.sig[i];
    if (match) hits.push_back(&row);
  }
  if (hits.empty())
    throw Error("T8 signature (" + sig_str + ") matches no table row");
  if (hits.size() > 1) {
    bool ties_defined = true;
    for (const auto* h : hits) ties_defined &= h->tie >= 0;
    if (ties_defined) {
      ExtInt l1 = rep.lt_components[0].second;
      std::vector<std::size_t> c2_branches;
      for (std::size_t bi : an.germ().component("C2")->branch_indices)
        c2_branches.push_back(bi);
      std::size_t c1_branch = an.germ().component("C1")->branch_indices[0];
      ExtInt tie = an.relative_lt(c2_branches, {{c1_branch, l1}}, a);
      std::vector<const T8SignatureRow*> refined;
      for (const auto* h : hits)
        if (tie.is_finite() && h->tie == tie.v) refined.push_back(h);
      hits = refined;
    }
  }
  if (hits.size() == 1) {
    ClassLabel l;
    l.family = "T8";
    l.name = hits[0]->name;
    l.subcase = hits[0]->conditions;
    l.min_2n = hits[0]->min_2n;
    return l;
  }
  AmbiguousClassification amb;
  amb.signature = sig_str;
  for (const auto* h : hits)
    amb.candidates.push_back(std::string(h->name) +
                             (h->conditions[0] ? std::string(" [") + h->conditions + "]"
                                               : std::string()));
  if (amb.candidates.empty())
    throw Error("T8 signature (" + sig_str + ") eliminated all candidates");
  return amb;
}

// ---------------------------------------------------------------------------
// A_k, D_k, E6 by invariant lookup.
// ---------------------------------------------------------------------------

inline ClassifyResult classify_ak(GermAnalysis& an, long k, const RestrictionClass& a) {
  ExtInt lt = an.lt(a);
  ExtInt ind = an.isotropy(a);
  ClassLabel l;
  l.family = "A";
  if (a.is_zero()) {
    l.name = "A" + std::to_string(k) + "^" + std::to_string(k);
    l.subcase = "zero class";
    return l;
  }
  for (long i = 0; i < k; ++i) {
    long expect_lt = (k % 2 == 0) ? k + 1 + 2 * i : (k + 1) / 2 + i;
    if (lt == ExtInt(expect_lt) && ind == ExtInt(i)) {
      l.name = "A" + std::to_string(k) + "^" + std::to_string(i);
      return l;
    }
  }
  AmbiguousClassification amb;
  amb.signature = "Lt=" + to_string(lt) + ",ind=" + to_string(ind);
  return amb;
}

struct DkRow {
  std::string name;
  ExtInt lt, lt_c2;
};

inline std::vector<DkRow> dk_rows(long k) {
  // conventionally scaled by lambda_k = 1 (k odd) or 1/2 (k even); integral here
  auto lam = [&](long v) { return k % 2 ? v : v / 2; };
  std::vector<DkRow> rows;
  rows.push_back({"D" + std::to_string(k) + "^0", ExtInt(lam(2)), ExtInt(lam(k - 2))});
  if (k >= 5)
    rows.push_back({"D" + std::to_string(k) + "^1", ExtInt(lam(k)), ExtInt(lam(k))});
  for (long i = 2; i < k - 3; ++i) {
    rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(i) + " (b != 0)",
                    ExtInt(lam(k)), ExtInt(lam(k - 2 + 2 * i))});
    rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(i) + " (b = 0)",
                    ExtInt(lam(k - 2 + 2 * i)), ExtInt(lam(k - 2 + 2 * i))});
  }
  rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(k - 3) + ",+-",
                  ExtInt(lam(k)), ExtInt::infinity()});
  rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(k - 2),
                  ExtInt(lam(3 * k - 8)), ExtInt::infinity()});
  rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(k - 1),
                  ExtInt(lam(3 * k - 6)), ExtInt::infinity()});
  rows.push_back({"D" + std::to_string(k) + "^" + std::to_string(k),
                  ExtInt::infinity(), ExtInt::infinity()});
  return rows;
}

inline ClassifyResult classify_dk(GermAnalysis& an, long k, const RestrictionClass& a) {
  ExtInt lt = an.lt(a);
  ExtInt ltc2 = an.lt_component("C2", a);
  std::vector<std::string> hits;
  for (const auto& row : dk_rows(k))
    if (row.lt == lt && row.lt_c2 == ltc2) hits.push_back(row.name);
  if (hits.size() == 1) {
    ClassLabel l;
    l.family = "D";
    l.name = hits[0];
    return l;
  }
  AmbiguousClassification amb;
  amb.signature = "Lt=" + to_string(lt) + ",Lt(C2)=" + to_string(ltc2);
  amb.candidates = hits;
  return amb;
}

inline ClassifyResult classify_e6(GermAnalysis& an, const RestrictionClass& a);

// Family dispatch over the invariant-lookup classifiers.
inline ClassifyResult classify_by_invariants(const std::string& family, long k,
                                             GermAnalysis& an,
                                             const RestrictionClass& a);

inline ClassifyResult classify_e6(GermAnalysis& an, const RestrictionClass& a) {
  ExtInt lt = an.lt(a);
  struct Row {
    const char* name;
    ExtInt lt;
  };
  const Row rows[] = {{"E6^0", ExtInt(4)},      {"E6^1,+-", ExtInt(7)},
                      {"E6^2", ExtInt(8)},      {"E6^3", ExtInt(10)},
                      {"E6^4,+-", ExtInt(11)},  {"E6^5", ExtInt(14)},
                      {"E6^6", ExtInt::infinity()}};
  for (const auto& r : rows)
    if (r.lt == lt) {
      ClassLabel l;
      l.family = "E6";
      l.name = r.name;
      return l;
    }
  AmbiguousClassification amb;
  amb.signature = "Lt=" + to_string(lt);
  return amb;
}

inline ClassifyResult classify_by_invariants(const std::string& family, long k,
                                             GermAnalysis& an,
                                             const RestrictionClass& a) {
  if (family == "ak" || family == "A") return classify_ak(an, k, a);
  if (family == "dk" || family == "D") return classify_dk(an, k, a);
  if (family == "e6" || family == "E6") return classify_e6(an, a);
  throw Error("no invariant classifier for family '" + family + "'");
}

}  // namespace algrest
