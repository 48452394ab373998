#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "algrest/restriction.hpp"
#include "algrest/textio.hpp"
#include "helpers.hpp"

using namespace algrest;
using namespace algrest::testing;

namespace {

BasisOptions t7_closed_options(const VarSetPtr& vs) {
  BasisOptions opt;
  opt.rep_names = {"th1", "th2", "th3", "th4", "th5", "th6", "th7"};
  const char* exprs[] = {"dx2^dx3",    "dx1^dx3",    "dx1^dx2",
                         "x3*dx1^dx3", "x2*dx1^dx2", "x3*dx1^dx2-x1*dx2^dx3",
                         "x3^2*dx1^dx3"};
  for (const char* e : exprs) opt.preferred_reps.push_back(parse_form(e, vs));
  return opt;
}

BasisOptions t7_all_options(const VarSetPtr& vs) {
  BasisOptions opt;
  opt.rep_names = {"th1", "th2", "th3", "th4", "th5", "s1", "s2", "th7"};
  const char* exprs[] = {"dx2^dx3",    "dx1^dx3",    "dx1^dx2",    "x3*dx1^dx3",
                         "x2*dx1^dx2", "x3*dx1^dx2", "x1*dx2^dx3", "x3^2*dx1^dx3"};
  for (const char* e : exprs) opt.preferred_reps.push_back(parse_form(e, vs));
  return opt;
}

// Independent oracle: one dense elimination over every monomial 2-form and
// every A^2_0 generator of quasi-degree <= cap, no grading.
struct BruteQuotient {
  std::vector<Monomial2Form> cols;
  std::map<Monomial2Form, std::size_t> index;
  Echelon ech{0};

  BruteQuotient(const MultiGerm& g, long cap) {
    const VarSet& vs = *g.vs;
    for (long d = 0; d <= cap; ++d)
      for (std::size_t i = 0; i < vs.size(); ++i)
        for (std::size_t j = i + 1; j < vs.size(); ++j)
          for (const auto& m :
               monomials_of_quasi_degree(vs, d - vs.weights[i] - vs.weights[j]))
            cols.push_back({static_cast<int>(i), static_cast<int>(j), m});
    for (std::size_t c = 0; c < cols.size(); ++c) index[cols[c]] = c;
    ech = Echelon(cols.size());
    for (long d = 0; d <= cap; ++d)
      for (const auto& gen : a20_generators(g, d)) ech.add_row(coords_of(gen));
  }

  Vec coords_of(const DiffForm& f) const {
    Vec v(cols.size(), Rat(0));
    for (const auto& [idx, p] : f.terms())
      for (const auto& [m, c] : p.terms()) {
        auto it = index.find({idx[0], idx[1], m});
        REQUIRE(it != index.end());
        v[it->second] = c;
      }
    return v;
  }

  std::size_t all_dim() const { return cols.size() - ech.rank(); }

  // dimension of the span of the classes of exact forms
  std::size_t closed_dim(const MultiGerm& g, long cap) const {
    Echelon sub(cols.size());
    std::size_t dim = 0;
    for (long d = 0; d <= cap; ++d)
      for (std::size_t a = 0; a < g.vs->size(); ++a)
        for (const auto& m :
             monomials_of_quasi_degree(*g.vs, d - g.vs->weights[a])) {
          DiffForm u = DiffForm::monomial_form(g.vs, {static_cast<int>(a)},
                                               Polynomial::term(g.vs, m, 1));
          Vec red = ech.reduce(coords_of(exterior_derivative(u)));
          if (sub.add_row(red)) ++dim;
        }
    return dim;
  }

  // coordinates of [w] over the given representatives
  Vec restrict_over(const std::vector<DiffForm>& reps, const DiffForm& w) const {
    Vec target = ech.reduce(coords_of(w));
    Matrix m(cols.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) {
      Vec rc = ech.reduce(coords_of(reps[c]));
      for (std::size_t r = 0; r < cols.size(); ++r) m.at(r, c) = rc[r];
    }
    auto x = solve(m, target);
    REQUIRE(x.has_value());
    return *x;
  }
};

DiffForm random_2form(std::mt19937& rng, const VarSetPtr& vs, int max_exp = 2) {
  std::uniform_int_distribution<int> nterms(1, 4);
  std::uniform_int_distribution<int> expo(0, max_exp);
  std::uniform_int_distribution<long> coef(-5, 5);
  std::uniform_int_distribution<int> var(0, static_cast<int>(vs->size()) - 1);
  DiffForm f(vs, 2);
  for (int i = 0, n = nterms(rng); i < n; ++i) {
    int a = var(rng), b = var(rng);
    if (a == b) continue;
    Monomial m(vs->size());
    for (auto& e : m.e) e = expo(rng);
    f.add_term({a, b}, Polynomial::term(vs, m, rat(coef(rng))));
  }
  return f;
}

}  // namespace

TEST_CASE("T7 spaces have dimensions 8 and 7") {
  MultiGerm g = t7_germ();
  auto all = restriction_basis(g, Flavor::All2Forms);
  CHECK(all->dimension() == 8);
  auto closed = restriction_basis(g, Flavor::Closed2Forms);
  CHECK(closed->dimension() == 7);

  // the preferred representative sets are valid bases
  auto all_p = restriction_basis(g, Flavor::All2Forms, t7_all_options(g.vs));
  CHECK(all_p->dimension() == 8);
  auto closed_p = restriction_basis(g, Flavor::Closed2Forms, t7_closed_options(g.vs));
  CHECK(closed_p->dimension() == 7);
}

TEST_CASE("the eight T7 relations hold as restriction identities") {
  MultiGerm g = t7_germ();
  auto basis = restriction_basis(g, Flavor::All2Forms, t7_all_options(g.vs));
  auto zero = [&](const char* expr) {
    return is_zero_restriction(basis, parse_form(expr, g.vs));
  };
  CHECK(zero("x2*dx2^dx3"));                   // 1
  CHECK(zero("x3*dx2^dx3"));                   // 2
  CHECK(zero("x3*dx1^dx2 - x2*dx3^dx1"));      // 3
  CHECK(zero("x1*dx1^dx2"));                   // 4
  CHECK(zero("x1*dx1^dx3"));                   // 5
  CHECK(zero("x2^2*dx1^dx2 - x3^2*dx3^dx1"));  // 6
  CHECK(zero("x1^2*dx2^dx3"));                 // 7
  CHECK(zero("x3^2*dx1^dx2"));                 // 8
  // the relations do not collapse everything: th7 is nonzero
  CHECK(!zero("x3^2*dx1^dx3"));
}

TEST_CASE("a20 generator lists") {
  MultiGerm g = t7_germ();
  CHECK(a20_generators(g, 0).empty());
  CHECK(a20_generators(g, 3).empty());
  // d = 6: dH2 ^ dx2 and dH2 ^ dx3
  CHECK(a20_generators(g, 6).size() == 2);

  MultiGerm a2 = a2_germ();
  // d = 8: only d(H)^dx1; the pointwise forms m H dx1^dx2 start at 6+5=11
  auto gens8 = a20_generators(a2, 8);
  REQUIRE(gens8.size() == 1);
  CHECK(gens8[0] == wedge(exterior_derivative(DiffForm::from_function(
                              parse_polynomial("x1^3-x2^2", a2.vs))),
                          DiffForm::dx(a2.vs, 0)));
}

TEST_CASE("restrict matches hand values on T7") {
  MultiGerm g = t7_germ();
  auto basis = restriction_basis(g, Flavor::All2Forms, t7_all_options(g.vs));
  // [s1] = [x2 dx3^dx1]
  RestrictionClass s1 = restrict_form(basis, parse_form("x3*dx1^dx2", g.vs));
  RestrictionClass other = restrict_form(basis, parse_form("x2*dx3^dx1", g.vs));
  CHECK(s1.coords == other.coords);
  CHECK(!s1.is_zero());

  CHECK(is_zero_restriction(
      basis, wedge(exterior_derivative(DiffForm::from_function(
                       parse_polynomial("x1^2+x2^3+x3^3", g.vs))),
                   DiffForm::dx(g.vs, 0))));
  CHECK(!is_zero_restriction(basis, parse_form("x3^2*dx1^dx3", g.vs)));
  CHECK(is_zero_restriction(basis, DiffForm::zero(g.vs, 2)));
}

TEST_CASE("restrict is linear") {
  MultiGerm g = t7_germ();
  auto basis = restriction_basis(g, Flavor::All2Forms);
  std::mt19937 rng(77);
  for (int i = 0; i < 10; ++i) {
    DiffForm w1 = random_2form(rng, g.vs), w2 = random_2form(rng, g.vs);
    Rat a = rat(3, 2), b = rat(-2, 5);
    Vec lhs = restrict_form(basis, a * w1 + b * w2).coords;
    Vec r1 = restrict_form(basis, w1).coords, r2 = restrict_form(basis, w2).coords;
    for (std::size_t k = 0; k < lhs.size(); ++k) CHECK(lhs[k] == a * r1[k] + b * r2[k]);
  }
}

TEST_CASE("closed flavor rejects non-closed forms and spans exact classes") {
  MultiGerm g = t7_germ();
  auto closed = restriction_basis(g, Flavor::Closed2Forms, t7_closed_options(g.vs));
  CHECK_THROWS_AS(restrict_form(closed, parse_form("x3*dx1^dx2", g.vs)), Error);
  // th6 = s1 - s2 is closed and restricts to the unit vector on th6
  RestrictionClass c =
      restrict_form(closed, parse_form("x3*dx1^dx2-x1*dx2^dx3", g.vs));
  Vec expect(7, Rat(0));
  expect[5] = 1;
  CHECK(c.coords == expect);
  CHECK(c.str() == "th6");
}

TEST_CASE("graded and brute-force computations agree") {
  std::mt19937 rng(5);
  struct CaseDef {
    MultiGerm germ;
    long cap;
  };
  std::vector<CaseDef> cases;
  cases.push_back({a2_germ(), 24});
  {
    VarSetPtr vs = make_varset({"x1", "x2"}, {1, 2});
    MultiGerm a3;
    a3.vs = vs;
    a3.branches = {make_branch("Bp", {"t", "t^2"}), make_branch("Bm", {"t", "-t^2"})};
    a3.ideal = {vs, {parse_polynomial("x1^4-x2^2", vs)}};
    cases.push_back({std::move(a3), 16});
  }
  cases.push_back({d4_germ(), 12});

  for (const auto& c : cases) {
    auto all = restriction_basis(c.germ, Flavor::All2Forms);
    auto closed = restriction_basis(c.germ, Flavor::Closed2Forms);
    BruteQuotient oracle(c.germ, c.cap);
    CHECK(all->dimension() == oracle.all_dim());
    CHECK(closed->dimension() == oracle.closed_dim(c.germ, c.cap));
    for (int i = 0; i < 20; ++i) {
      DiffForm w = random_2form(rng, c.germ.vs);
      Vec graded = restrict_form(all, w).coords;
      Vec brute = oracle.restrict_over(all->representatives(), w);
      CHECK(graded == brute);
    }
  }
}

TEST_CASE("A2 basis dimensions") {
  MultiGerm g = a2_germ();
  CHECK(restriction_basis(g, Flavor::All2Forms)->dimension() == 2);
  CHECK(restriction_basis(g, Flavor::Closed2Forms)->dimension() == 2);
}

TEST_CASE("T8 closed space has dimension 8") {
  MultiGerm g = t8_germ();
  auto closed = restriction_basis(g, Flavor::Closed2Forms);
  CHECK(closed->dimension() == 8);
  BruteQuotient oracle(g, 50);
  CHECK(oracle.closed_dim(g, 50) == 8);
  CHECK(restriction_basis(g, Flavor::All2Forms)->dimension() == oracle.all_dim());
}

TEST_CASE("restriction to components") {
  MultiGerm g = t7_germ();
  // omega^1-style form c1 th1 + th2 + c2 th5 with c1 = 2, c2 = 3
  DiffForm w = parse_form("2*dx2^dx3 + dx1^dx3 + 3*x2*dx1^dx2", g.vs);
  RestrictionClass on_b1 = restrict_to_component(g, "B1", w, Flavor::Closed2Forms);
  RestrictionClass th2_b1 = restrict_to_component(g, "B1", parse_form("dx1^dx3", g.vs),
                                                  Flavor::Closed2Forms);
  CHECK(on_b1.coords == th2_b1.coords);
  CHECK(!on_b1.is_zero());

  RestrictionClass on_b2 = restrict_to_component(g, "B2", w, Flavor::Closed2Forms);
  RestrictionClass th5_b2 = restrict_to_component(
      g, "B2", parse_form("3*x2*dx1^dx2", g.vs), Flavor::Closed2Forms);
  CHECK(on_b2.coords == th5_b2.coords);
  CHECK(!on_b2.is_zero());

  CHECK(restrict_to_component(g, "B1", DiffForm::zero(g.vs, 2), Flavor::Closed2Forms)
            .is_zero());
  // th3 = dx1^dx2 dies on B1: its primitive -x2 dx1 vanishes there
  CHECK(restrict_to_component(g, "B1", parse_form("dx1^dx2", g.vs),
                              Flavor::Closed2Forms)
            .is_zero());
  CHECK_THROWS_AS(restrict_to_component(g, "nope", w, Flavor::Closed2Forms), Error);
}

TEST_CASE("forms beyond the verified degree range reduce to zero classes") {
  MultiGerm g = t7_germ();
  auto basis = restriction_basis(g, Flavor::All2Forms);
  // a monomial 2-form of quasi-degree far above stabilization
  Monomial m(3);
  m.e[0] = 10;  // x1^10, quasi-degree 30 + 5
  DiffForm high = DiffForm::monomial_form(g.vs, {0, 1}, Polynomial::term(g.vs, m, 1));
  CHECK(is_zero_restriction(basis, high));
}

TEST_CASE("preferred basis validation errors") {
  MultiGerm g = t7_germ();
  // wrong count
  BasisOptions short_opt;
  short_opt.rep_names = {"a"};
  short_opt.preferred_reps = {parse_form("dx2^dx3", g.vs)};
  CHECK_THROWS_AS(restriction_basis(g, Flavor::Closed2Forms, short_opt), Error);
  // dependent set (th1 listed twice)
  BasisOptions dep;
  dep.rep_names = {"a", "b", "c", "d", "e", "f", "g"};
  const char* exprs[] = {"dx2^dx3", "dx2^dx3", "dx1^dx2",
                         "x3*dx1^dx3", "x2*dx1^dx2", "x3*dx1^dx2-x1*dx2^dx3",
                         "x3^2*dx1^dx3"};
  for (const char* e : exprs) dep.preferred_reps.push_back(parse_form(e, g.vs));
  CHECK_THROWS_AS(restriction_basis(g, Flavor::Closed2Forms, dep), Error);
  // a representative with zero class is outside no span issue but dependent
  BasisOptions outside;
  outside.rep_names = {"a", "b", "c", "d", "e", "f", "g"};
  const char* exprs2[] = {"x2*dx2^dx3", "dx1^dx3", "dx1^dx2",
                          "x3*dx1^dx3", "x2*dx1^dx2", "x3*dx1^dx2-x1*dx2^dx3",
                          "x3^2*dx1^dx3"};
  for (const char* e : exprs2) outside.preferred_reps.push_back(parse_form(e, g.vs));
  CHECK_THROWS_AS(restriction_basis(g, Flavor::Closed2Forms, outside), Error);
  // a non-closed preferred representative for the closed flavor
  BasisOptions nonclosed;
  nonclosed.rep_names = {"a", "b", "c", "d", "e", "f", "g"};
  const char* exprs3[] = {"dx2^dx3", "dx1^dx3", "dx1^dx2",
                          "x3*dx1^dx3", "x2*dx1^dx2", "x3*dx1^dx2",
                          "x3^2*dx1^dx3"};
  for (const char* e : exprs3) nonclosed.preferred_reps.push_back(parse_form(e, g.vs));
  CHECK_THROWS_AS(restriction_basis(g, Flavor::Closed2Forms, nonclosed), Error);
}

TEST_CASE("stabilization data is exposed") {
  MultiGerm g = t7_germ();
  auto basis = restriction_basis(g, Flavor::Closed2Forms);
  CHECK(basis->stabilization_degree() == 9);  // th7 lives in quasi-degree 9
  CHECK(basis->window() == 6 + 7);
  std::map<long, std::size_t> expect{{4, 1}, {5, 2}, {7, 3}, {9, 1}};
  CHECK(basis->degree_dims() == expect);
}
