#pragma once
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "algrest/invariants.hpp"
#include "algrest/scenario_data.hpp"
#include "algrest/textio.hpp"

namespace algrest {

// A scenario file bundles one curve germ with its preferred bases and named
// 2-forms. Sections: [curve], [basis], [forms].
//
// [curve]   family = t7|t8|ak|dk|e6|other      (optional, default other)
//           k = 4                              (A_k / D_k index)
//           ambient = 6                        (2n of the ambient space)
//           style = nearest-farthest | per-component | single
//           vars = x1, x2, x3
//           weights = 3, 2, 2
//           ideal = poly ; poly ; ...
//           branch NAME = (poly-in-t, ...)
//           component NAME = branch[, branch]
//           component_ideal NAME = poly ; poly
// [basis]   closed NAME = 2-form expr          (in quasi-degree order)
//           all NAME = 2-form expr
// [forms]   NAME = 2-form expr
//           NAME = coords: c1, c2, ...         (over the closed basis)
struct Scenario {
  std::string name;
  std::string family = "other";
  long k = 0;
  long ambient_2n = 4;
  ComponentStyle style = ComponentStyle::Single;
  MultiGerm germ;
  BasisOptions closed_options;
  BasisOptions all_options;
  std::vector<std::pair<std::string, DiffForm>> expr_forms;
  std::vector<std::pair<std::string, Vec>> coord_forms;
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

[[noreturn]] inline void parse_fail(int line, const std::string& msg) {
  throw Error("scenario line " + std::to_string(line) + ": " + msg);
}

}  // namespace detail

inline Scenario parse_scenario(const std::string& text, const std::string& name = "") {
  using detail::parse_fail;
  Scenario sc;
  sc.name = name;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;

  std::vector<std::string> var_names;
  std::vector<long> var_weights;
  std::vector<std::string> ideal_src;
  std::vector<std::pair<std::string, std::string>> branch_src, comp_src, comp_ideal_src;
  std::vector<std::pair<std::string, std::string>> basis_closed_src, basis_all_src,
      form_src;

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = detail::trim(line);
    if (s.empty() || s[0] == '#') continue;
    if (s.front() == '[') {
      if (s.back() != ']') parse_fail(lineno, "malformed section header");
      section = s.substr(1, s.size() - 2);
      if (section != "curve" && section != "basis" && section != "forms")
        parse_fail(lineno, "unknown section [" + section + "]");
      continue;
    }
    std::size_t eq = s.find('=');
    if (eq == std::string::npos) parse_fail(lineno, "expected key = value");
    std::string key = detail::trim(s.substr(0, eq));
    std::string val = detail::trim(s.substr(eq + 1));
    if (section == "curve") {
      if (key == "family") sc.family = val;
      else if (key == "k") sc.k = std::stol(val);
      else if (key == "ambient") sc.ambient_2n = std::stol(val);
      else if (key == "style") {
        if (val == "nearest-farthest") sc.style = ComponentStyle::NearestFarthest;
        else if (val == "per-component") sc.style = ComponentStyle::PerComponent;
        else if (val == "single") sc.style = ComponentStyle::Single;
        else parse_fail(lineno, "unknown style " + val);
      } else if (key == "vars") {
        for (auto& n : detail::split(val, ',')) var_names.push_back(n);
      } else if (key == "weights") {
        for (auto& w : detail::split(val, ',')) var_weights.push_back(std::stol(w));
      } else if (key == "ideal") {
        for (auto& p : detail::split(val, ';')) ideal_src.push_back(p);
      } else if (key.rfind("branch ", 0) == 0) {
        branch_src.emplace_back(detail::trim(key.substr(7)), val);
      } else if (key.rfind("component_ideal ", 0) == 0) {
        comp_ideal_src.emplace_back(detail::trim(key.substr(16)), val);
      } else if (key.rfind("component ", 0) == 0) {
        comp_src.emplace_back(detail::trim(key.substr(10)), val);
      } else {
        parse_fail(lineno, "unknown [curve] key " + key);
      }
    } else if (section == "basis") {
      if (key.rfind("closed ", 0) == 0)
        basis_closed_src.emplace_back(detail::trim(key.substr(7)), val);
      else if (key.rfind("all ", 0) == 0)
        basis_all_src.emplace_back(detail::trim(key.substr(4)), val);
      else
        parse_fail(lineno, "unknown [basis] key " + key);
    } else if (section == "forms") {
      form_src.emplace_back(key, val);
    } else {
      parse_fail(lineno, "content before any section header");
    }
  }

  if (var_names.empty()) throw Error("scenario declares no variables");
  VarSetPtr vs = make_varset(var_names, var_weights);
  sc.germ.vs = vs;
  for (const auto& p : ideal_src)
    sc.germ.ideal.generators.push_back(parse_polynomial(p, vs));
  sc.germ.ideal.vs = vs;
  for (const auto& [bname, bval] : branch_src) {
    std::string v = bval;
    if (v.size() >= 2 && v.front() == '(' && v.back() == ')')
      v = v.substr(1, v.size() - 2);
    Branch b{bname, {}};
    for (auto& c : detail::split(v, ',')) b.coords.push_back(parse_unipoly(c));
    if (b.coords.size() != vs->size())
      throw Error("branch " + bname + " has wrong coordinate count");
    sc.germ.branches.push_back(std::move(b));
  }
  for (const auto& [cname, cval] : comp_src) {
    Component comp{cname, {}, std::nullopt};
    for (auto& bn : detail::split(cval, ',')) {
      bool found = false;
      for (std::size_t i = 0; i < sc.germ.branches.size(); ++i)
        if (sc.germ.branches[i].name == bn) {
          comp.branch_indices.push_back(i);
          found = true;
        }
      if (!found) throw Error("component " + cname + " references unknown branch " + bn);
    }
    sc.germ.components.push_back(std::move(comp));
  }
  for (const auto& [cname, cval] : comp_ideal_src) {
    bool found = false;
    for (auto& comp : sc.germ.components)
      if (comp.name == cname) {
        IdealPresentation ip{vs, {}};
        for (auto& p : detail::split(cval, ';'))
          ip.generators.push_back(parse_polynomial(p, vs));
        comp.ideal = std::move(ip);
        found = true;
      }
    if (!found) throw Error("component_ideal for unknown component " + cname);
  }
  validate_or_throw(sc.germ);

  for (const auto& [n, e] : basis_closed_src) {
    sc.closed_options.rep_names.push_back(n);
    sc.closed_options.preferred_reps.push_back(parse_form(e, vs));
  }
  for (const auto& [n, e] : basis_all_src) {
    sc.all_options.rep_names.push_back(n);
    sc.all_options.preferred_reps.push_back(parse_form(e, vs));
  }
  for (const auto& [n, e] : form_src) {
    if (e.rfind("coords:", 0) == 0) {
      Vec v;
      for (auto& c : detail::split(e.substr(7), ',')) v.push_back(parse_rational(c));
      sc.coord_forms.emplace_back(n, std::move(v));
    } else {
      sc.expr_forms.emplace_back(n, parse_form(e, vs));
    }
  }
  return sc;
}

inline std::string print_scenario(const Scenario& sc) {
  std::ostringstream os;
  os << "[curve]\n";
  os << "family = " << sc.family << "\n";
  if (sc.k) os << "k = " << sc.k << "\n";
  os << "ambient = " << sc.ambient_2n << "\n";
  os << "style = "
     << (sc.style == ComponentStyle::NearestFarthest ? "nearest-farthest"
         : sc.style == ComponentStyle::PerComponent  ? "per-component"
                                                     : "single")
     << "\n";
  const VarSet& vs = *sc.germ.vs;
  os << "vars = ";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs.names[i];
  os << "\nweights = ";
  for (std::size_t i = 0; i < vs.size(); ++i) os << (i ? ", " : "") << vs.weights[i];
  os << "\nideal = ";
  for (std::size_t i = 0; i < sc.germ.ideal.generators.size(); ++i)
    os << (i ? " ; " : "") << sc.germ.ideal.generators[i].str();
  os << "\n";
  for (const auto& b : sc.germ.branches) {
    os << "branch " << b.name << " = (";
    for (std::size_t i = 0; i < b.coords.size(); ++i)
      os << (i ? ", " : "") << b.coords[i].str();
    os << ")\n";
  }
  for (const auto& c : sc.germ.components) {
    os << "component " << c.name << " = ";
    for (std::size_t i = 0; i < c.branch_indices.size(); ++i)
      os << (i ? ", " : "") << sc.germ.branches[c.branch_indices[i]].name;
    os << "\n";
    if (c.ideal) {
      os << "component_ideal " << c.name << " = ";
      for (std::size_t i = 0; i < c.ideal->generators.size(); ++i)
        os << (i ? " ; " : "") << c.ideal->generators[i].str();
      os << "\n";
    }
  }
  if (!sc.closed_options.preferred_reps.empty() ||
      !sc.all_options.preferred_reps.empty()) {
    os << "\n[basis]\n";
    for (std::size_t i = 0; i < sc.closed_options.preferred_reps.size(); ++i)
      os << "closed " << sc.closed_options.rep_names[i] << " = "
         << sc.closed_options.preferred_reps[i].str() << "\n";
    for (std::size_t i = 0; i < sc.all_options.preferred_reps.size(); ++i)
      os << "all " << sc.all_options.rep_names[i] << " = "
         << sc.all_options.preferred_reps[i].str() << "\n";
  }
  if (!sc.expr_forms.empty() || !sc.coord_forms.empty()) {
    os << "\n[forms]\n";
    for (const auto& [n, f] : sc.expr_forms) os << n << " = " << f.str() << "\n";
    for (const auto& [n, v] : sc.coord_forms) {
      os << n << " = coords:";
      for (std::size_t i = 0; i < v.size(); ++i)
        os << (i ? ", " : " ") << to_string(v[i]);
      os << "\n";
    }
  }
  return os.str();
}

// Loads a shipped scenario by name, or any scenario file by path.
inline Scenario load_scenario(const std::string& name_or_path) {
  const auto& shipped = shipped_scenarios();
  auto it = shipped.find(name_or_path);
  if (it != shipped.end()) return parse_scenario(it->second, name_or_path);
  std::ifstream in(name_or_path);
  if (!in) throw UsageError("no shipped scenario or file named '" + name_or_path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_scenario(ss.str(), name_or_path);
}

inline std::vector<std::string> shipped_scenario_names() {
  std::vector<std::string> out;
  for (const auto& [n, t] : shipped_scenarios()) out.push_back(n);
  return out;
}

}  // namespace algrest
