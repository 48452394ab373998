// algrest: algebraic restrictions of 2-forms to quasi-homogeneous curve
// germs, discrete symplectic invariants, and normal-form classification.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "algrest/classify.hpp"
#include "algrest/scenario.hpp"
#include "algrest/tables.hpp"

using namespace algrest;
using nlohmann::json;

namespace {

enum class Format { Text, Csv, JsonLines };

Format parse_format(const std::string& f) {
  if (f == "text") return Format::Text;
  if (f == "csv") return Format::Csv;
  if (f == "json-lines" || f == "jsonl") return Format::JsonLines;
  throw Error("unknown format '" + f + "' (expected text, csv or json-lines)");
}

std::string csv_cell(std::string s) {
  for (auto& c : s)
    if (c == ',') c = ';';
  return s;
}

// one table sink for all three formats
void emit_table(const std::string& id, const std::vector<std::string>& header,
                const std::vector<std::vector<std::string>>& rows, Format fmt,
                std::ostream& os) {
  if (fmt == Format::Csv) {
    for (std::size_t i = 0; i < header.size(); ++i)
      os << (i ? "," : "") << csv_cell(header[i]);
    os << "\n";
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << "\n";
    }
    return;
  }
  if (fmt == Format::JsonLines) {
    for (const auto& r : rows) {
      json o;
      o["table"] = id;
      for (std::size_t i = 0; i < header.size() && i < r.size(); ++i)
        o[header[i]] = r[i];
      os << o.dump() << "\n";
    }
    return;
  }
  std::vector<std::size_t> width(header.size());
  for (std::size_t i = 0; i < header.size(); ++i) width[i] = header[i].size();
  for (const auto& r : rows)
    for (std::size_t i = 0; i < r.size() && i < width.size(); ++i)
      width[i] = std::max(width[i], r[i].size());
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << cells[i];
      if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
    }
    os << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
}

Vec parse_coords(const std::string& s) {
  Vec v;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      v.push_back(parse_rational(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) v.push_back(parse_rational(cur));
  return v;
}

struct Session {
  Scenario sc;
  std::unique_ptr<GermAnalysis> an;

  explicit Session(const std::string& name)
      : sc(load_scenario(name)),
        an(std::make_unique<GermAnalysis>(sc.germ, sc.closed_options)) {}

  DiffForm form_from(const std::string& omega) {
    for (const auto& [n, f] : sc.expr_forms)
      if (n == omega) return f;
    for (const auto& [n, v] : sc.coord_forms)
      if (n == omega) return an->closed()->representative_form(v);
    return parse_form(omega, sc.germ.vs);
  }

  RestrictionClass class_from(const std::string& omega, const std::string& coords,
                              long lt_cap) {
    if (lt_cap > 0) an->set_cap(lt_cap);
    if (!coords.empty()) return an->closed()->make_class(parse_coords(coords));
    if (!omega.empty()) {
      if (omega.rfind("coords:", 0) == 0)
        return an->closed()->make_class(parse_coords(omega.substr(7)));
      return an->restrict(form_from(omega));
    }
    throw Error("need --omega or --coords");
  }
};

int run_basis(const std::string& scenario, const std::string& flavor, Format fmt,
              long degree_cap) {
  Scenario sc = load_scenario(scenario);
  Flavor fl = flavor == "all" ? Flavor::All2Forms : Flavor::Closed2Forms;
  BasisOptions opt = fl == Flavor::All2Forms ? sc.all_options : sc.closed_options;
  if (degree_cap > 0) opt.degree_cap = degree_cap;
  auto basis = restriction_basis(sc.germ, fl, opt);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < basis->dimension(); ++i) {
    auto ds = basis->representatives()[i].quasi_degrees_present();
    rows.push_back({basis->rep_names()[i],
                    ds.size() == 1 ? std::to_string(ds[0]) : "mixed",
                    basis->representatives()[i].str()});
  }
  std::cout << "scenario " << scenario << ": dim ["
            << (fl == Flavor::All2Forms ? "Lambda^2" : "Z^2")
            << "] = " << basis->dimension() << " (stabilizes at quasi-degree "
            << basis->stabilization_degree() << ", window " << basis->window() << ")\n";
  emit_table("basis", {"name", "qdeg", "representative"}, rows, fmt, std::cout);
  return 0;
}

int run_restrict(Session& s, const std::string& omega, const std::string& component,
                 const std::string& flavor, Format fmt) {
  DiffForm w = s.form_from(omega);
  RestrictionClass c =
      !component.empty()
          ? s.an->component(component).closed()->restrict(w)
      : flavor == "all"
          ? restrict_form(restriction_basis(s.sc.germ, Flavor::All2Forms, s.sc.all_options), w)
          : s.an->restrict(w);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < c.coords.size(); ++i)
    rows.push_back({c.basis->rep_names()[i], to_string(c.coords[i])});
  std::cout << "[omega]" << (component.empty() ? "" : "_" + component) << " = " << c.str()
            << "\n";
  emit_table("restrict", {"basis", "coefficient"}, rows, fmt, std::cout);
  return 0;
}

int run_classify(Session& s, const std::string& omega, const std::string& coords,
                 Format fmt, long lt_cap) {
  RestrictionClass a = s.class_from(omega, coords, lt_cap);
  std::vector<std::vector<std::string>> rows;
  auto emit_label = [&](const ClassLabel& l) {
    rows.push_back({"family", l.family});
    rows.push_back({"class", l.name});
    if (!l.subcase.empty()) rows.push_back({"subcase", l.subcase});
    for (const auto& m : l.moduli) rows.push_back({"modulus " + m.name, m.value.str()});
    rows.push_back({"realizable", "2n >= " + std::to_string(l.min_2n)});
  };
  auto emit_ambiguous = [&](const AmbiguousClassification& amb) {
    std::cout << "ambiguous signature (" << amb.signature << "); candidates:\n";
    for (const auto& c : amb.candidates) std::cout << "  " << c << "\n";
    return 1;
  };
  if (s.sc.family == "t7") {
    NormalizedT7 n = normalize_t7(a.coords);
    emit_label(n.label);
    rows.push_back({"codim", std::to_string(n.label.codim)});
    auto dirs = moduli_report(s.an->closed(), a, n.label.moduli_directions);
    std::string names;
    for (std::size_t d : dirs)
      names += (names.empty() ? "" : ",") + s.an->closed()->rep_names()[d];
    rows.push_back({"independent moduli",
                    std::to_string(dirs.size()) + (names.empty() ? "" : " (" + names + ")")});
    rows.push_back({"mu_sympl", std::to_string(s.an->symplectic_multiplicity(a))});
  } else if (s.sc.family == "t8") {
    ClassifyResult r = classify_t8(*s.an, a);
    if (std::holds_alternative<AmbiguousClassification>(r))
      return emit_ambiguous(std::get<AmbiguousClassification>(r));
    emit_label(std::get<ClassLabel>(r));
  } else if (s.sc.family == "ak" || s.sc.family == "dk" || s.sc.family == "e6") {
    ClassifyResult r = s.sc.family == "ak"   ? classify_ak(*s.an, s.sc.k, a)
                       : s.sc.family == "dk" ? classify_dk(*s.an, s.sc.k, a)
                                             : classify_e6(*s.an, a);
    if (std::holds_alternative<AmbiguousClassification>(r))
      return emit_ambiguous(std::get<AmbiguousClassification>(r));
    emit_label(std::get<ClassLabel>(r));
  } else {
    std::cout << "scenario family '" << s.sc.family
              << "' has no classifier; reporting invariants instead\n";
    InvariantReport rep = invariant_report(*s.an, a, s.sc.style);
    rows.push_back({"Lt", to_string(rep.lt_full)});
    rows.push_back({"ind", to_string(rep.ind_full)});
    rows.push_back({"mu_sympl", std::to_string(rep.mu_sympl)});
  }
  emit_table("classify", {"key", "value"}, rows, fmt, std::cout);
  return 0;
}

int run_invariants(Session& s, const std::string& omega, const std::string& coords,
                   const std::string& component, const std::string& relative,
                   Format fmt, long lt_cap) {
  RestrictionClass a = s.class_from(omega, coords, lt_cap);
  std::vector<std::vector<std::string>> rows;
  if (!component.empty()) {
    rows.push_back({"Lt(" + component + ")", to_string(s.an->lt_component(component, a))});
    rows.push_back(
        {"ind(" + component + ")", to_string(s.an->isotropy_component(component, a))});
    emit_table("invariants", {"invariant", "value"}, rows, fmt, std::cout);
    return 0;
  }
  InvariantReport rep = invariant_report(*s.an, a, s.sc.style);
  rows.push_back({"Lt(N)", to_string(rep.lt_full)});
  if (s.sc.style == ComponentStyle::NearestFarthest) {
    rows.push_back({"L_n", to_string(rep.lt_nearest())});
    rows.push_back({"L_f", to_string(rep.lt_farthest())});
  } else {
    for (const auto& [n, v] : rep.lt_components)
      rows.push_back({"Lt(" + n + ")", to_string(v)});
  }
  rows.push_back({"ind", to_string(rep.ind_full)});
  if (s.sc.style == ComponentStyle::NearestFarthest) {
    rows.push_back({"ind_n", to_string(rep.ind_nearest())});
    rows.push_back({"ind_f", to_string(rep.ind_farthest())});
  } else {
    for (const auto& [n, v] : rep.ind_components)
      rows.push_back({"ind(" + n + ")", to_string(v)});
  }
  rows.push_back({"mu_sympl", std::to_string(rep.mu_sympl)});
  if (!relative.empty()) {
    // NAME=order[,NAME=order...]: constrained branches; the rest are maximized.
    // order is an integer, "inf", or "lt" for the branch's own tangency order.
    std::vector<RelativeConstraint> cons;
    std::vector<bool> constrained(s.sc.germ.branches.size(), false);
    auto flush = [&](const std::string& item) {
      auto eq = item.find('=');
      if (eq == std::string::npos) throw Error("--relative expects NAME=order");
      std::string name = item.substr(0, eq), ord = item.substr(eq + 1);
      bool matched = false;
      for (std::size_t i = 0; i < s.sc.germ.branches.size(); ++i)
        if (s.sc.germ.branches[i].name == name) {
          ExtInt o = ExtInt(0);
          if (ord == "inf") {
            o = ExtInt::infinity();
          } else if (ord == "lt") {
            RestrictionClass sub = s.an->class_on_component(name, a);
            o = s.an->component(name).lt(sub);
          } else {
            o = ExtInt(std::stol(ord));
          }
          cons.push_back({i, o});
          constrained[i] = true;
          matched = true;
        }
      if (!matched) throw Error("--relative names unknown branch " + name);
    };
    std::string cur;
    for (char c : relative) {
      if (c == ',') {
        flush(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!cur.empty()) flush(cur);
    std::vector<std::size_t> free_branches;
    for (std::size_t i = 0; i < constrained.size(); ++i)
      if (!constrained[i]) free_branches.push_back(i);
    rows.push_back({"relative Lt", to_string(s.an->relative_lt(free_branches, cons, a))});
  }
  auto b = [](bool x) { return std::string(x ? "yes" : "no"); };
  if (s.sc.germ.components.size() == 2) {
    GeometricReport g =
        geometric_report(*s.an, s.an->closed()->representative_form(a.coords));
    rows.push_back({"omega|l1+l2 nonzero", b(g.pair_nonzero_12)});
    rows.push_back({"omega|l1+l3 nonzero", b(g.pair_nonzero_13)});
    rows.push_back({"omega|l2+l3 nonzero", b(g.pair_nonzero_23)});
    rows.push_back({"condition I", b(g.cond_I)});
    rows.push_back({"condition II", b(g.cond_II)});
    rows.push_back({"condition III", b(g.cond_III)});
    rows.push_back({"condition IV", b(g.cond_IV)});
    for (const auto& [n, in] : g.component_in_lagrangian)
      rows.push_back({n + " in Lagrangian", b(in)});
  }
  rows.push_back({"N in Lagrangian", b(a.is_zero())});
  emit_table("invariants", {"invariant", "value"}, rows, fmt, std::cout);
  return 0;
}

int run_action_table(Session& s, Format fmt, long max_degree) {
  auto basis = s.an->closed();
  const VarSetPtr& vs = s.sc.germ.vs;
  VectorFieldGerm E = euler_field(vs);
  long bound = max_degree;
  if (bound < 0) {
    long minrep = basis->stabilization_degree();
    for (const auto& [d, n] : basis->degree_dims()) minrep = std::min(minrep, d);
    bound = basis->stabilization_degree() - minrep;
  }
  std::vector<std::string> header{"generator"};
  for (const auto& n : basis->rep_names()) header.push_back(n);
  std::vector<std::vector<std::string>> rows;
  for (long d = 0; d <= bound; ++d)
    for (const auto& m : monomials_of_quasi_degree(*vs, d)) {
      VectorFieldGerm X = poly_multiple(Polynomial::term(vs, m, 1), E);
      std::vector<std::string> row;
      bool nonzero = false;
      for (std::size_t j = 0; j < basis->dimension(); ++j) {
        Vec unit(basis->dimension(), Rat(0));
        unit[j] = 1;
        RestrictionClass r = lie_action(basis, X, basis->make_class(unit));
        nonzero |= !r.is_zero();
        row.push_back(r.str());
      }
      if (!nonzero && !m.is_one()) continue;  // trivial actions are omitted
      row.insert(row.begin(), m.is_one() ? "E" : monomial_str(*vs, m) + "*E");
      rows.push_back(std::move(row));
    }
  emit_table("action-table", header, rows, fmt, std::cout);
  return 0;
}

int run_reproduce(const std::string& id, Format fmt) {
  std::vector<std::string> ids =
      id == "all" ? reproduce_ids() : std::vector<std::string>{id};
  bool ok = true;
  for (const auto& tid : ids) {
    TableResult t = reproduce(tid);
    std::cout << "== " << t.id << " ==\n";
    emit_table(t.id, t.header, t.rows, fmt, std::cout);
    if (t.ok()) {
      std::cout << "OK: " << t.rows.size() << " rows match\n";
    } else {
      ok = false;
      for (const auto& m : t.mismatches)
        std::cout << "MISMATCH row " << m.row << " [" << m.column << "]: got " << m.got
                  << ", want " << m.want << "\n";
    }
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "algrest: spaces of algebraic restrictions of 2-forms to quasi-homogeneous "
      "curve germs, symplectic invariants, and normal-form classification"};
  app.require_subcommand(1);
  app.fallthrough();  // accept global options after the subcommand
  std::string format = "text";
  app.add_option("--format", format, "text, csv or json-lines")->capture_default_str();

  std::string scenario, flavor = "closed", omega, coords, component, relative;
  long degree_cap = 0, lt_cap = 0, max_degree = -1;
  std::string table_id;

  auto* basis = app.add_subcommand("basis", "print a restriction-space basis");
  basis->add_option("scenario", scenario)->required();
  basis->add_option("--flavor", flavor, "all or closed")->capture_default_str();
  basis->add_option("--degree-cap", degree_cap, "hard quasi-degree cap");

  auto* restrict_cmd = app.add_subcommand("restrict", "restrict a 2-form");
  restrict_cmd->add_option("scenario", scenario)->required();
  restrict_cmd->add_option("--omega", omega, "2-form expression or scenario form name")
      ->required();
  restrict_cmd->add_option("--component", component, "restrict to a named component");
  restrict_cmd->add_option("--flavor", flavor, "all or closed");

  auto* classify = app.add_subcommand("classify", "normal-form classification");
  classify->add_option("scenario", scenario)->required();
  classify->add_option("--coords", coords, "coordinates over the closed basis");
  classify->add_option("--omega", omega, "2-form expression or scenario form name");
  classify->add_option("--lt-cap", lt_cap, "tangency search cap");

  auto* invariants = app.add_subcommand("invariants", "symplectic invariants");
  invariants->add_option("scenario", scenario)->required();
  invariants->add_option("--coords", coords, "coordinates over the closed basis");
  invariants->add_option("--omega", omega, "2-form expression or scenario form name");
  invariants->add_option("--component", component, "only this component");
  invariants->add_option("--relative", relative,
                         "relative order constraints NAME=order[,..]; order is an "
                         "integer, inf, or lt");
  invariants->add_option("--lt-cap", lt_cap, "tangency search cap");

  auto* action = app.add_subcommand("action-table", "infinitesimal action table");
  action->add_option("scenario", scenario)->required();
  action->add_option("--max-degree", max_degree, "max quasi-degree of the multiplier");

  auto* repro =
      app.add_subcommand("reproduce", "recompute a regression table and diff it");
  repro->add_option("table", table_id, "table id or 'all'")->required();

  auto* list = app.add_subcommand("list", "list shipped scenarios and tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;  // spec: usage errors exit with 2
  }

  try {
    Format fmt = parse_format(format);
    if (basis->parsed()) return run_basis(scenario, flavor, fmt, degree_cap);
    if (restrict_cmd->parsed()) {
      Session s(scenario);
      return run_restrict(s, omega, component, flavor, fmt);
    }
    if (classify->parsed()) {
      Session s(scenario);
      return run_classify(s, omega, coords, fmt, lt_cap);
    }
    if (invariants->parsed()) {
      Session s(scenario);
      return run_invariants(s, omega, coords, component, relative, fmt, lt_cap);
    }
    if (action->parsed()) {
      Session s(scenario);
      return run_action_table(s, fmt, max_degree);
    }
    if (repro->parsed()) return run_reproduce(table_id, fmt);
    if (list->parsed()) {
      std::cout << "scenarios:";
      for (const auto& n : shipped_scenario_names()) std::cout << " " << n;
      std::cout << "\ntables:";
      for (const auto& n : reproduce_ids()) std::cout << " " << n;
      std::cout << "\n";
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
