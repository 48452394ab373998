#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algrest/classify.hpp"
#include "algrest/textio.hpp"
#include "helpers.hpp"

using namespace algrest;
using namespace algrest::testing;

namespace {

Vec coords7(std::initializer_list<long> cs) {
  Vec v;
  for (long c : cs) v.push_back(rat(c));
  return v;
}

BasisOptions t7_opts(const VarSetPtr& vs) {
  BasisOptions opt;
  opt.rep_names = {"th1", "th2", "th3", "th4", "th5", "th6", "th7"};
  const char* exprs[] = {"dx2^dx3",    "dx1^dx3",    "dx1^dx2",
                         "x3*dx1^dx3", "x2*dx1^dx2", "x3*dx1^dx2-x1*dx2^dx3",
                         "x3^2*dx1^dx3"};
  for (const char* e : exprs) opt.preferred_reps.push_back(parse_form(e, vs));
  return opt;
}

BasisOptions t8_opts(const VarSetPtr& vs) {
  BasisOptions opt;
  opt.rep_names = {"th1", "th2", "th3", "th4", "th5", "th6", "th7", "th8"};
  const char* exprs[] = {"dx2^dx3",
                         "dx1^dx3",
                         "dx1^dx2",
                         "x3*dx1^dx3",
                         "x3*dx1^dx2-x1*dx2^dx3",
                         "x2*dx1^dx2",
                         "x3^2*dx1^dx3",
                         "x2^2*dx1^dx2"};
  for (const char* e : exprs) opt.preferred_reps.push_back(parse_form(e, vs));
  return opt;
}

}  // namespace

TEST_CASE("scaled values fold rational roots") {
  ScaledValue a(rat(1), rat(16), rat(-5, 4));
  CHECK(a.is_rational());
  CHECK(a.rational() == rat(1, 32));
  ScaledValue b(rat(3), rat(2), rat(-5, 4));
  CHECK(!b.is_rational());
  CHECK(b.str() == "3*(1/2)^(5/4)");
  ScaledValue c(rat(5), rat(-32), rat(2, 5));  // (-32)^(2/5) = 4
  CHECK(c.is_rational());
  CHECK(c.rational() == rat(20));
  CHECK(ScaledValue(rat(0), rat(7), rat(1, 2)).is_zero());
}

TEST_CASE("T7 decision tree on the given examples") {
  CHECK(classify_t7(coords7({1, 2, 3, 0, 0, 0, 0})).name == "T7^0");
  CHECK(classify_t7(coords7({0, 0, 0, 1, 5, 7, 0})).name == "T7^3");
  CHECK(classify_t7(coords7({0, 0, 0, 0, 0, 0, 0})).name == "T7^7");
  CHECK(classify_t7(coords7({0, 1, 0, 0, 0, 0, 0})).name == "T7^1");
  CHECK(classify_t7(coords7({0, 2, 3, 0, 0, 1, 0})).name == "T7^1");
  CHECK(classify_t7(coords7({2, 0, 0, 1, 0, 0, 0})).name == "T7^2");
  CHECK(classify_t7(coords7({2, 0, 0, 0, 0, 4, 9})).name == "T7^4");
  CHECK(classify_t7(coords7({0, 0, 0, 0, 0, 4, 9})).name == "T7^5");
  CHECK(classify_t7(coords7({0, 0, 0, 0, 0, 0, 9})).name == "T7^6");
}

TEST_CASE("decision tree is total and single-valued on the zero pattern grid") {
  for (int mask = 0; mask < (1 << 7); ++mask) {
    Vec c(7, Rat(0));
    for (int i = 0; i < 7; ++i)
      if (mask & (1 << i)) c[i] = rat((i % 2) ? 2 : -3);
    ClassLabel l = classify_t7(c);
    CHECK(!l.name.empty());
    // codimension consistent with Table-7 indices
    CHECK(l.codim >= 0);
    CHECK(l.codim <= 7);
    CHECK(l.min_2n == realizable_min_2n_t7(l.name));
  }
}

TEST_CASE("label is invariant under swap and quasi-degree rescaling") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> pick(-4, 4);
  std::uniform_int_distribution<long> sden(1, 3);
  static const long delta[7] = {4, 5, 5, 7, 7, 7, 9};
  for (int trial = 0; trial < 200; ++trial) {
    Vec c(7);
    for (auto& x : c) x = rat(pick(rng));
    ClassLabel base = classify_t7(c);
    CHECK(classify_t7(t7_swap(c)).name == base.name);
    Rat s = rat(sden(rng) + 1, sden(rng));
    Vec scaled(7);
    for (int i = 0; i < 7; ++i) scaled[i] = c[i] * pow_rat(s, delta[i]);
    CHECK(classify_t7(scaled).name == base.name);
  }
}

TEST_CASE("normalization of the leading block") {
  // T7^0 with c1 = 16: moduli scale by 16^(-5/4) = 1/32
  NormalizedT7 n0 = normalize_t7(coords7({16, 1, 1, 3, -2, 7, 5}));
  CHECK(n0.label.name == "T7^0");
  REQUIRE(n0.label.moduli.size() == 2);
  CHECK(n0.label.moduli[0].value.rational() == rat(1, 32));
  CHECK(n0.label.moduli[1].value.rational() == rat(1, 32));
  REQUIRE(n0.rational_coords.has_value());
  CHECK((*n0.rational_coords)[0] == 1);
  CHECK((*n0.rational_coords)[3] == 0);

  // T7^4 already normalized: modulus is c7 itself
  NormalizedT7 n4 = normalize_t7(coords7({1, 0, 0, 0, 0, 0, 5}));
  CHECK(n4.label.name == "T7^4");
  REQUIRE(n4.label.moduli.size() == 1);
  CHECK(n4.label.moduli[0].value.rational() == rat(5));

  // irrational scalings stay symbolic as (base, exponent) pairs
  NormalizedT7 n0b = normalize_t7(coords7({2, 1, 1, 0, 0, 0, 0}));
  CHECK(!n0b.label.moduli[0].value.is_rational());
  CHECK(!n0b.rational_coords.has_value());

  // T7^5: c6 = 128 = 2^7 gives rational scaling 128^(-9/7) = 2^-9
  NormalizedT7 n5 = normalize_t7(coords7({0, 0, 0, 0, 0, 128, 3}));
  CHECK(n5.label.name == "T7^5");
  CHECK(n5.label.moduli[0].value.rational() == rat(3, 512));
}

TEST_CASE("swap-related inputs normalize to the same moduli") {
  Vec a = coords7({16, 2, 3, 0, 0, 0, 0});
  Vec b = t7_swap(a);  // [-16 th1 + 3 th2 + 2 th3]
  NormalizedT7 na = normalize_t7(a), nb = normalize_t7(b);
  CHECK(na.label.name == nb.label.name);
  REQUIRE(na.rational_coords.has_value());
  REQUIRE(nb.rational_coords.has_value());
  CHECK(*na.rational_coords == *nb.rational_coords);
}

TEST_CASE("normalization preserves every invariant (rational pivots)") {
  GermAnalysis an(t7_germ(), t7_opts(t7_germ().vs));
  auto invariants = [&](const Vec& c) {
    RestrictionClass a = an.closed()->make_class(c);
    InvariantReport r = invariant_report(an, a, ComponentStyle::NearestFarthest);
    return std::make_tuple(r.mu_sympl, to_string(r.ind_full), to_string(r.lt_full),
                           to_string(r.lt_nearest()), to_string(r.lt_farthest()));
  };
  std::vector<Vec> cases = {
      coords7({16, 3, -2, 5, 7, -1, 4}),    // T7^0, pivot 16 = 2^4
      coords7({3, 32, 0, 7, 5, -2, 11}),    // T7^1 standard, pivot 32 = 2^5
      coords7({0, 32, 2, 7, 5, -2, 11}),    // T7^1 with both degree-5 terms
      coords7({16, 0, 0, 3, -5, 2, 9}),     // T7^2
      coords7({0, 0, 0, 2, 3, -4, 7}),      // T7^3 (rational: same-degree scaling)
      coords7({16, 0, 0, 0, 0, 6, -3}),     // T7^4
      coords7({0, 0, 0, 0, 0, 128, 5}),     // T7^5
  };
  for (const Vec& c : cases) {
    NormalizedT7 n = normalize_t7(c);
    REQUIRE(n.rational_coords.has_value());
    CAPTURE(n.label.name);
    CHECK(invariants(c) == invariants(*n.rational_coords));
    CHECK(classify_t7(*n.rational_coords).name == n.label.name);
    // idempotence on the normalized output
    NormalizedT7 again = normalize_t7(*n.rational_coords);
    REQUIRE(again.rational_coords.has_value());
    CHECK(*again.rational_coords == *n.rational_coords);
  }
}

TEST_CASE("moduli report returns the parameter directions outside the orbit") {
  GermAnalysis an(t7_germ(), t7_opts(t7_germ().vs));
  // at [c1 th1 + th2 + c2 th3], c1 c2 != 0: exactly {th1, th3}
  RestrictionClass a = an.closed()->make_class(coords7({2, 1, 3, 0, 0, 0, 0}));
  CHECK(moduli_report(an.closed(), a, {0, 2}) == std::vector<std::size_t>{0, 2});
  // all directions: th2 is also outside, the higher ones are inside
  CHECK(moduli_report(an.closed(), a, {0, 1, 2, 3, 4, 5, 6}) ==
        std::vector<std::size_t>{0, 1, 2});
  // at [th7]: the orbit span is {th7} itself, no parameter directions
  RestrictionClass th7 = an.closed()->make_class(coords7({0, 0, 0, 0, 0, 0, 1}));
  CHECK(moduli_report(an.closed(), th7, {6}).empty());
  // at [th6 + c th7]: th7 escapes the orbit span: one modulus
  RestrictionClass t5 = an.closed()->make_class(coords7({0, 0, 0, 0, 0, 1, 2}));
  CHECK(moduli_report(an.closed(), t5, {6}) == std::vector<std::size_t>{6});
  // count = mu - codim across the classified families
  for (auto cs : {coords7({1, 2, 3, 0, 0, 0, 0}), coords7({2, 1, 0, 0, 3, 0, 0}),
                  coords7({1, 0, 0, 2, 3, 0, 0}), coords7({0, 0, 0, 1, 2, 3, 0}),
                  coords7({1, 0, 0, 0, 0, 0, 2}), coords7({0, 0, 0, 0, 0, 1, 2}),
                  coords7({0, 0, 0, 0, 0, 0, 1})}) {
    ClassLabel l = classify_t7(cs);
    RestrictionClass x = an.closed()->make_class(cs);
    long mu = an.symplectic_multiplicity(x);
    CHECK(moduli_report(an.closed(), x, l.moduli_directions).size() ==
          static_cast<std::size_t>(mu - l.codim));
  }
}

TEST_CASE("realizable ambient dimensions per class") {
  CHECK(classify_t7(coords7({1, 2, 3, 0, 0, 0, 0})).min_2n == 4);
  CHECK(classify_t7(coords7({0, 0, 0, 1, 5, 7, 0})).min_2n == 6);
  CHECK(classify_t7(coords7({0, 0, 0, 0, 0, 0, 0})).min_2n == 6);
  CHECK(classify_t7(coords7({1, 0, 0, 0, 0, 0, 1})).min_2n == 4);
}

TEST_CASE("T8 classification through invariant signatures") {
  GermAnalysis an(t8_germ(), t8_opts(t8_germ().vs));
  auto one = [&](std::initializer_list<long> cs) {
    Vec v;
    for (long c : cs) v.push_back(rat(c));
    return classify_t8(an, an.closed()->make_class(v));
  };
  // bold row (4, inf, 4, 1, inf, 2): (T8)^4 with c1 = 0, c2 != 0
  auto r1 = one({0, 0, 0, 0, 1, 0, 2, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r1));
  CHECK(std::get<ClassLabel>(r1).name == "(T8)^4");
  CHECK(std::get<ClassLabel>(r1).min_2n == 6);
  // (T8)^{6,2} shares it except ind = 2, then the relative order says 4
  auto r2 = one({0, 0, 0, 0, 0, 0, 1, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r2));
  CHECK(std::get<ClassLabel>(r2).name == "(T8)^6_2");
  // zero class
  auto r3 = one({0, 0, 0, 0, 0, 0, 0, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r3));
  CHECK(std::get<ClassLabel>(r3).name == "(T8)^8");
  // (2,3,2|0,0,0) needs the relative tie-breaker: 1 vs 2
  auto r4 = one({2, 1, 3, 0, 0, 0, 0, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r4));
  CHECK(std::get<ClassLabel>(r4).name == "(T8)^0");
  auto r5 = one({0, 1, 3, 0, 0, 1, 0, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r5));
  CHECK(std::get<ClassLabel>(r5).name == "(T8)^1_2");
  CHECK(std::get<ClassLabel>(r5).subcase == "c1 = 0, c2 != 0");
  // the derived pair (2,3,3|0,0,1)
  auto r6 = one({2, 0, 1, 3, 0, 0, 0, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r6));
  CHECK(std::get<ClassLabel>(r6).name == "(T8)^1_3");
  auto r7 = one({0, 0, 1, 3, 0, 0, 1, 0});
  REQUIRE(std::holds_alternative<ClassLabel>(r7));
  CHECK(std::get<ClassLabel>(r7).name == "(T8)^2_3");
  // (4,5,4|1,1,2) stays ambiguous between (T8)^4 and (T8)^{5,1}
  auto r8 = one({0, 0, 0, 0, 1, 2, 3, 0});
  REQUIRE(std::holds_alternative<AmbiguousClassification>(r8));
  CHECK(std::get<AmbiguousClassification>(r8).candidates.size() == 2);
  auto r9 = one({0, 0, 0, 0, 0, 1, 2, 0});  // (T8)^{5,1} c != 0: same signature
  REQUIRE(std::holds_alternative<AmbiguousClassification>(r9));
}

TEST_CASE("A_k and E6 classification by invariants") {
  {
    VarSetPtr vs = make_varset({"x1", "x2"}, {2, 5});
    MultiGerm a4;
    a4.vs = vs;
    a4.branches = {make_branch("C", {"t^2", "t^5"})};
    a4.ideal = {vs, {parse_polynomial("x1^5-x2^2", vs)}};
    GermAnalysis an(a4);
    auto r = classify_ak(an, 4, an.restrict(parse_form("x1*dx1^dx2", vs)));
    REQUIRE(std::holds_alternative<ClassLabel>(r));
    CHECK(std::get<ClassLabel>(r).name == "A4^1");
    auto rz = classify_ak(an, 4, an.restrict(DiffForm::zero(vs, 2)));
    CHECK(std::get<ClassLabel>(rz).name == "A4^4");
  }
  {
    VarSetPtr vs = make_varset({"x1", "x2"}, {4, 3});
    MultiGerm e6;
    e6.vs = vs;
    e6.branches = {make_branch("C", {"t^4", "t^3"})};
    e6.ideal = {vs, {parse_polynomial("x1^3-x2^4", vs)}};
    GermAnalysis an(e6);
    auto r = classify_e6(an, an.restrict(parse_form("x2^2*dx1^dx2+x1*x2*dx1^dx2", vs)));
    REQUIRE(std::holds_alternative<ClassLabel>(r));
    CHECK(std::get<ClassLabel>(r).name == "E6^3");
    auto r4 = classify_e6(an, an.restrict(parse_form("x1*x2*dx1^dx2", vs)));
    CHECK(std::get<ClassLabel>(r4).name == "E6^4,+-");
  }
}

TEST_CASE("D_k classification and the D4 collision") {
  {
    VarSetPtr vs = make_varset({"x1", "x2"}, {3, 2});
    MultiGerm d5;
    d5.vs = vs;
    d5.branches = {make_branch("C1", {"t", "0"}), make_branch("C2", {"t^3", "t^2"})};
    d5.ideal = {vs, {parse_polynomial("x1^2*x2-x2^4", vs)}};
    d5.components = {
        Component{"C1", {0}, IdealPresentation{vs, {parse_polynomial("x2", vs)}}},
        Component{"C2", {1},
                  IdealPresentation{vs, {parse_polynomial("x1^2-x2^3", vs)}}}};
    GermAnalysis an(d5);
    auto get = [&](const char* f) {
      auto r = classify_dk(an, 5, an.restrict(parse_form(f, vs)));
      REQUIRE(std::holds_alternative<ClassLabel>(r));
      return std::get<ClassLabel>(r).name;
    };
    CHECK(get("dx1^dx2") == "D5^0");
    CHECK(get("x1*dx1^dx2 + x2*dx1^dx2") == "D5^1");
    CHECK(get("x1*dx1^dx2 + x2^2*dx1^dx2") == "D5^2,+-");
    CHECK(get("x2^2*dx1^dx2") == "D5^3");
    CHECK(get("x2^3*dx1^dx2") == "D5^4");
    auto rz = classify_dk(an, 5, an.restrict(DiffForm::zero(vs, 2)));
    CHECK(std::get<ClassLabel>(rz).name == "D5^5");
  }
  {
    MultiGerm d4 = d4_germ();
    GermAnalysis an(d4);
    // the two rows with identical (Lt, Lt(C2)) stay ambiguous
    auto r = classify_dk(an, 4, an.restrict(parse_form("x2*dx1^dx2", d4.vs)));
    REQUIRE(std::holds_alternative<AmbiguousClassification>(r));
    CHECK(std::get<AmbiguousClassification>(r).candidates.size() == 2);
    auto r0 = classify_dk(an, 4, an.restrict(parse_form("dx1^dx2", d4.vs)));
    REQUIRE(std::holds_alternative<ClassLabel>(r0));
    CHECK(std::get<ClassLabel>(r0).name == "D4^0");
  }
}
