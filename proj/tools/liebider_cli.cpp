#include <cstdio>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "liebider/free_lie.hpp"
#include "liebider/graded_window.hpp"
#include "liebider/oracle.hpp"
#include "liebider/reproduce.hpp"

using namespace liebider;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Common {
  std::string algebra;
  std::string module;
  std::string field = "Q";
  bool json = false;
};

Field parse_field(const std::string& s) {
  if (s == "Q" || s == "q") return Field::rationals();
  try {
    std::size_t used = 0;
    const unsigned long p = std::stoul(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return Field::prime(static_cast<std::uint32_t>(p));
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    throw JsonInputError("--field must be Q or an odd prime, got '" + s + "'");
  }
}

LieAlgebra load_algebra(const Common& c) {
  if (c.algebra.empty()) throw JsonInputError("--algebra is required");
  if (c.algebra[0] == '@') return algebra_from_json(load_json_file(c.algebra.substr(1)));
  const Field f = parse_field(c.field);
  if (auto l = catalog(c.algebra, f)) return *l;
  std::string known;
  for (const auto& n : catalog_names()) known += " " + n;
  throw JsonInputError("unknown algebra '" + c.algebra + "'; catalog:" + known);
}

LModule load_module(const Common& c) {
  if (!c.module.empty()) {
    if (c.module[0] != '@') throw JsonInputError("--module takes @file.json");
    return module_from_json(load_json_file(c.module.substr(1)));
  }
  return LModule::adjoint(std::make_shared<const LieAlgebra>(load_algebra(c)));
}

void print_text(const Json& j, const std::string& indent = "") {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !(v.is_array() && !v.empty() && !v.front().is_structured())) {
        std::cout << indent << k << ":\n";
        print_text(v, indent + "  ");
      } else {
        std::cout << indent << k << ": " << v.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_structured()) {
        std::cout << indent << "-\n";
        print_text(v, indent + "  ");
      } else {
        std::cout << indent << "- " << v.dump() << "\n";
      }
    }
  } else {
    std::cout << indent << j.dump() << "\n";
  }
}

int emit(const Common& c, const Json& j, bool ok = true) {
  if (c.json) {
    std::cout << j.dump() << "\n";
  } else {
    print_text(j);
  }
  return ok ? kOk : kCheckFailed;
}

Json triples(const std::vector<Triple>& t, const std::vector<std::string>& a, const std::vector<std::string>& b,
             const std::vector<std::string>& c) {
  Json out = Json::array();
  for (const auto& x : t) out.push_back({a[x[0]], b[x[1]], c[x[2]]});
  return out;
}

Scalar parse_rational(const std::string& s, const char* flag) {
  try {
    return Scalar::parse(s, Field::rationals());
  } catch (const Error&) {
    throw JsonInputError(std::string(flag) + " must be a rational p or p/q, got '" + s + "'");
  }
}

struct WindowArgs {
  std::string family = "wab";
  std::string a = "0", b = "0", q = "0";
  int window = 6;
  int inner = -1;
  bool quotient = false;
  bool no_c3 = false;
  std::string op = "summary";
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Biderivations, commuting maps and centroids of Lie algebras over Q and F_p"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s, bool module = true) {
    s->add_option("--algebra", c.algebra, "catalog name or @file.json");
    if (module) s->add_option("--module", c.module, "@file.json with an L-module (default: adjoint)");
    s->add_option("--field", c.field, "Q or an odd prime (catalog algebras)");
    s->add_flag("--json", c.json, "machine-readable output");
  };

  auto* check = app.add_subcommand("check", "Jacobi and module axioms");
  add_common(check);
  auto* cen = app.add_subcommand("center", "center of L, or Z_M(L) with --module");
  add_common(cen);
  auto* der = app.add_subcommand("derived", "derived algebra [L, L]");
  add_common(der, false);
  auto* cent = app.add_subcommand("centroid", "centroid Cent(M)");
  add_common(cent);
  auto* derivs = app.add_subcommand("derivations", "derivations L -> M");
  add_common(derivs);

  auto* bider = app.add_subcommand("bider", "biderivation spaces");
  add_common(bider);
  bool symmetric = false, trivial = false, special = false, skew = false;
  bider->add_flag("--skew", skew, "skew-symmetric biderivations (default)");
  bider->add_flag("--symmetric", symmetric, "symmetric biderivations");
  bider->add_flag("--trivial", trivial, "trivial biderivations");
  bider->add_flag("--special", special, "special biderivations");

  auto* com = app.add_subcommand("commuting", "commuting linear maps");
  add_common(com);
  bool central = false, special_com = false;
  com->add_flag("--central", central, "central maps only");
  com->add_flag("--special", special_com, "special commuting maps only");

  auto* dec = app.add_subcommand("decompose", "split a biderivation or commuting map");
  add_common(dec);
  std::string map_file;
  int basis_index = -1;
  std::string dec_kind = "bider";
  dec->add_option("--map", map_file, "@file.json with {\"values\": ...} or {\"images\": ...}");
  dec->add_option("--basis-element", basis_index, "decompose the k-th basis element of the solved space");
  dec->add_option("--kind", dec_kind, "bider or commuting (with --basis-element)")->check(CLI::IsMember({"bider", "commuting"}));

  auto* tower = app.add_subcommand("tower", "center or module tower");
  add_common(tower);
  std::string tower_kind = "center";
  std::size_t depth = kDefaultDepthLimit;
  bool audit = false;
  tower->add_option("--kind", tower_kind, "center or module")->check(CLI::IsMember({"center", "module"}));
  tower->add_option("--depth", depth, "depth limit");
  tower->add_flag("--audit", audit, "run the lifting audits");

  auto* fl = app.add_subcommand("free-lie", "free Lie algebra on three generators");
  fl->add_flag("--json", c.json, "machine-readable output");
  int max_degree = 5;
  std::string element;
  fl->add_option("--degree", max_degree, "maximal degree");
  fl->add_option("--element", element, "element to put in Hall coordinates, e.g. [[x1,x2],x3]");

  auto* win = app.add_subcommand("window", "graded families on an index window");
  win->add_flag("--json", c.json, "machine-readable output");
  WindowArgs w;
  win->add_option("--family", w.family, "wab, w00, wtilde0m1, sv, block, msl2");
  win->add_option("--a", w.a, "parameter a");
  win->add_option("--b", w.b, "parameter b (wab, msl2) or lifting scalar (wtilde0m1 --op lift)");
  win->add_option("--q", w.q, "Block parameter q");
  win->add_option("--window", w.window, "outer radius N");
  win->add_option("--inner", w.inner, "inner radius (default N/3)");
  win->add_flag("--quotient", w.quotient, "Schrodinger-Virasoro modulo M_0");
  win->add_flag("--no-c3", w.no_c3, "W~(0,-1) without the [I,I] term");
  win->add_option("--op", w.op, "summary, centroid, bider, lift, center, sym-bider")
      ->check(CLI::IsMember({"summary", "centroid", "bider", "lift", "center", "sym-bider"}));

  auto* orc = app.add_subcommand("oracle", "brute-force enumeration over F_p");
  add_common(orc, false);
  std::string space = "skew-bider";
  unsigned oracle_p = 3;
  orc->remove_option(orc->get_option("--field"));
  orc->add_option("--field", oracle_p, "odd prime");
  orc->add_option("--space", space, "skew-bider, sym-bider, commuting")
      ->check(CLI::IsMember({"skew-bider", "sym-bider", "commuting"}));

  auto* rep = app.add_subcommand("reproduce", "run registry items");
  rep->add_flag("--json", c.json, "machine-readable output");
  std::string item;
  bool all = false, list = false;
  std::string rep_b = "1";
  rep->add_option("item", item, "registry item");
  rep->add_flag("--all", all, "run every item");
  rep->add_flag("--list", list, "list registry items");
  rep->add_option("--b", rep_b, "scalar for example-2.11-obstruction");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) {
      const LModule m = load_module(c);
      const auto jac = check_jacobi(m.lie());
      const auto mod = check_module(m);
      const auto& ln = m.lie().names();
      Json out = {{"dim", m.lie().dim()},
                  {"jacobi_ok", jac.empty()},
                  {"jacobi_violations", triples(jac, ln, ln, ln)},
                  {"module_ok", mod.empty()},
                  {"module_violations", triples(mod, ln, ln, m.names())}};
      return emit(c, out, jac.empty() && mod.empty());
    }
    if (*cen) {
      if (!c.module.empty()) {
        const LModule m = load_module(c);
        return emit(c, subspace_to_json(centralizer(m, Subspace::full(m.lie().dim(), m.field()))));
      }
      return emit(c, subspace_to_json(center(load_algebra(c))));
    }
    if (*der) return emit(c, subspace_to_json(derived(load_algebra(c))));
    if (*cent) return emit(c, space_to_json(centroid(load_module(c))));
    if (*derivs) return emit(c, space_to_json(derivations(load_module(c))));
    if (*bider) {
      const LModule m = load_module(c);
      if (symmetric + trivial + special + skew > 1) throw JsonInputError("choose one of --skew, --symmetric, --trivial, --special");
      if (symmetric) return emit(c, space_to_json(symmetric_biderivations(m)));
      if (trivial) return emit(c, space_to_json(trivial_biderivations(m)));
      if (special) return emit(c, space_to_json(special_biderivations(m)));
      return emit(c, space_to_json(skew_biderivations(m)));
    }
    if (*com) {
      const LModule m = load_module(c);
      if (central && special_com) throw JsonInputError("choose one of --central, --special");
      if (central) return emit(c, space_to_json(central_maps(m)));
      if (special_com) return emit(c, space_to_json(special_commuting_maps(m)));
      return emit(c, space_to_json(commuting_maps(m)));
    }
    if (*dec) {
      const LModule m = load_module(c);
      const Field f = m.field();
      const std::size_t n = m.lie().dim(), d = m.dim();
      std::optional<BilinearMap> delta;
      std::optional<LinearMap> lin;
      if (!map_file.empty()) {
        if (map_file[0] != '@') throw JsonInputError("--map takes @file.json");
        const Json j = load_json_file(map_file.substr(1));
        if (j.contains("values")) {
          BilinearMap b = BilinearMap::zero(n, d, f);
          const Json& v = j.at("values");
          if (!v.is_array() || v.size() != n) throw JsonInputError("'values' must be dim L rows");
          for (std::size_t i = 0; i < n; ++i) {
            if (!v[i].is_array() || v[i].size() != n) throw JsonInputError("'values' rows must have dim L entries");
            for (std::size_t k = 0; k < n; ++k) {
              if (!v[i][k].is_array() || v[i][k].size() != d) throw JsonInputError("each value must have dim M entries");
              for (std::size_t t = 0; t < d; ++t) b.at(i, k)[t] = scalar_from_json(v[i][k][t], f);
            }
          }
          delta = b;
        } else if (j.contains("images")) {
          LinearMap g = LinearMap::zero(n, d, f);
          const Json& v = j.at("images");
          if (!v.is_array() || v.size() != n) throw JsonInputError("'images' must have dim L entries");
          for (std::size_t i = 0; i < n; ++i) {
            if (!v[i].is_array() || v[i].size() != d) throw JsonInputError("each image must have dim M entries");
            for (std::size_t t = 0; t < d; ++t) g.images[i][t] = scalar_from_json(v[i][t], f);
          }
          lin = g;
        } else {
          throw JsonInputError("map file needs 'values' (bilinear) or 'images' (linear)");
        }
      } else if (basis_index >= 0) {
        const auto k = static_cast<std::size_t>(basis_index);
        if (dec_kind == "bider") {
          const auto basis = skew_biderivations(m).basis();
          if (k >= basis.size()) throw JsonInputError("--basis-element out of range");
          delta = basis[k];
        } else {
          const auto basis = commuting_maps(m).basis();
          if (k >= basis.size()) throw JsonInputError("--basis-element out of range");
          lin = basis[k];
        }
      } else {
        throw JsonInputError("decompose needs --map or --basis-element");
      }
      if (delta) {
        if (!delta->is_skew() || !is_skew_biderivation(m, *delta)) {
          return emit(c, Json{{"is_skew_biderivation", false}}, false);
        }
        const auto r = decompose_biderivation(m, *delta);
        Json out = {{"is_skew_biderivation", true}, {"decomposable", r.decomposable}, {"gamma", linear_map_to_json(r.gamma)},
                    {"residual_zero", r.residual_zero}, {"obstruction", vector_to_json(r.obstruction)}};
        return emit(c, out, r.decomposable);
      }
      if (!is_commuting(m, *lin)) return emit(c, Json{{"is_commuting", false}}, false);
      const auto r = decompose_commuting(m, *lin);
      Json ws = Json::array();
      for (const auto& wi : r.witnesses) {
        ws.push_back({{"x", m.lie().names()[wi.x]}, {"y", m.lie().names()[wi.y]},
                      {"f_of_bracket", vector_to_json(wi.f_of_bracket)}, {"x_on_f", vector_to_json(wi.x_on_f)}});
      }
      Json out = {{"is_commuting", true}, {"success", r.success}, {"witnesses", ws}};
      if (r.success) {
        out["gamma"] = linear_map_to_json(r.gamma);
        out["mu"] = linear_map_to_json(r.mu);
      }
      return emit(c, out, r.success);
    }
    if (*tower) {
      if (depth == 0) throw JsonInputError("--depth must be positive");
      if (tower_kind == "center") {
        const LieAlgebra l = load_algebra(c);
        Json out = tower_to_json(center_tower(l, depth));
        if (audit) out["audit"] = audit_to_json(tower_audit_biderivations(l));
        return emit(c, out, !audit || out["audit"]["passed"].get<bool>());
      }
      const LModule m = load_module(c);
      Json out = tower_to_json(module_tower(m, depth));
      if (audit) out["audit"] = audit_to_json(tower_audit_commuting(m));
      return emit(c, out, !audit || out["audit"]["passed"].get<bool>());
    }
    if (*fl) {
      if (max_degree < 1 || max_degree > 8) throw JsonInputError("--degree must be in 1..8");
      FreeLieAlgebra free(3, max_degree);
      Json out = {{"generators", 3}, {"max_degree", max_degree}, {"degree_counts", free.degree_counts()}};
      if (!element.empty()) {
        try {
          const auto e = free.parse(element);
          out["element"] = free.to_string(e);
        } catch (const Error& e) {
          throw JsonInputError(e.what());
        }
      }
      const auto jk = check_eq_jk_report();
      out["jk"] = {{"ideal_I_dim", jk.symmetrized_dim}, {"ideal_J_dim", jk.derived_dim},
                   {"listed_independent", jk.listed_independent}, {"target_outside", jk.target_outside},
                   {"holds", jk.holds()}};
      if (max_degree >= 5) {
        const auto t = truncated_quotient(max_degree);
        out["quotient"] = {{"dim", t.algebra.dim()}, {"center_dim", center(t.algebra).dim()}, {"basis", t.algebra.names()}};
      }
      return emit(c, out);
    }
    if (*win) {
      if (w.window < 1) throw JsonInputError("--window must be positive");
      if (w.family == "msl2") {
        const auto m = window_module(parse_rational(w.a, "--a"), parse_rational(w.b, "--b"), w.window);
        const auto bad = check_module(m);
        Json out = {{"family", "msl2"}, {"dim", m.dim()}, {"module_ok", bad.empty()}};
        if (w.op == "center" || w.op == "summary") out["center"] = subspace_to_json(centralizer(m, Subspace::full(3, Field::rationals())));
        if (w.op == "sym-bider") out["symmetric"] = space_to_json(symmetric_biderivations(m));
        return emit(c, out, bad.empty());
      }
      FamilyParams p;
      const Family fam = parse_family(w.family);
      if (w.family == "w00") {
        p.a = Scalar(0, Field::rationals());
        p.b = Scalar(0, Field::rationals());
      } else {
        p.a = parse_rational(w.a, "--a");
        p.b = parse_rational(w.b, "--b");
      }
      p.q = parse_rational(w.q, "--q");
      p.quotient = w.quotient;
      p.c3 = !w.no_c3;
      if (w.op == "lift") {
        if (fam != Family::WTilde0m1) throw JsonInputError("--op lift needs --family wtilde0m1");
        if (w.window < 4) throw JsonInputError("--op lift needs --window >= 4");
        const auto r = lift_obstruction_w0minus1(p.b, w.window, p.c3);
        Json out = {{"b", scalar_to_json(p.b)},
                    {"window", w.window},
                    {"solvable", r.solvable},
                    {"equations", r.equations},
                    {"unknowns", r.unknowns},
                    {"solvable_l_triples_only", r.solvable_l_only},
                    {"hand_system_solvable", r.hand_solvable},
                    {"displayed_sign_solvable", r.displayed_sign_solvable}};
        return emit(c, out);
      }
      const auto inst = instantiate(fam, p, w.window, w.inner);
      const auto bad = check_jacobi(inst.algebra);
      Json out = {{"family", family_name(fam)},
                  {"window", inst.radius},
                  {"inner", inst.inner_radius},
                  {"dim", inst.algebra.dim()},
                  {"jacobi_ok", bad.empty()},
                  {"jacobi_violations", bad.size()},
                  {"generic_parameters", inst.generic_parameters}};
      if (w.op == "centroid") {
        const auto r = window_centroid(inst);
        out["centroid"] = {{"dim", r.space.dim()}, {"inner_dim", r.inner_dim()}};
      } else if (w.op == "bider") {
        const auto r = window_skew_biderivations(inst);
        const auto br = composed_with_bracket(inst.algebra, LinearMap::identity(inst.algebra.dim(), Field::rationals()));
        out["bider"] = {{"dim", r.space.dim()}, {"inner_dim", r.inner_dim()}, {"bracket_member", r.contains(br)}};
      } else if (w.op == "center") {
        out["center"] = subspace_to_json(center(inst.algebra));
      }
      return emit(c, out, bad.empty());
    }
    if (*orc) {
      const LModule m = adjoint_mod_p(load_algebra(Common{c.algebra, "", "Q", c.json}), oracle_p);
      const auto budget = EnumerationBudget::from_env(oracle_p);
      OracleResult r;
      Subspace solver;
      if (space == "skew-bider") {
        r = enumerate_skew_biderivations(m, budget);
        solver = skew_biderivations(m).coeffs;
      } else if (space == "sym-bider") {
        r = enumerate_symmetric_biderivations(m, budget);
        solver = symmetric_biderivations(m).coeffs;
      } else {
        r = enumerate_commuting(m, budget);
        solver = commuting_maps(m).coeffs;
      }
      const bool equal = r.space == solver;
      Json out = {{"space", space},        {"p", oracle_p},         {"unknowns", r.unknowns}, {"count", r.members.size()},
                  {"dim", r.space.dim()},  {"closed", r.closed},    {"solver_dim", solver.dim()},
                  {"equal_to_solver", equal}, {"nodes", r.nodes}};
      return emit(c, out, equal && r.closed);
    }
    if (*rep) {
      if (list) {
        Json out = Json::array();
        for (const auto& n : registry_names()) out.push_back({{"item", n}, {"criteria", registry_criteria(n)}});
        return emit(c, out);
      }
      ReproOptions opt;
      opt.b = parse_rational(rep_b, "--b");
      std::vector<std::string> items;
      if (all) {
        items = registry_names();
      } else if (!item.empty()) {
        registry_criteria(item);
        items = {item};
      } else {
        throw JsonInputError("reproduce needs an item, --all or --list");
      }
      Json out = Json::array();
      bool ok = true;
      for (const auto& n : items) {
        const auto r = reproduce(n, opt);
        ok = ok && r.passed;
        out.push_back(r.to_json());
      }
      if (items.size() == 1) return emit(c, out.front(), ok);
      return emit(c, Json{{"items", out}, {"passed", ok}}, ok);
    }
  } catch (const JsonInputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
  return kOk;
}
