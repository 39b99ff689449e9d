#include "liebider/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

namespace liebider {

namespace {

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

const Json& member(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw JsonInputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

std::size_t index_value(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) throw JsonInputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::vector<std::string> names_from(const Json& j, std::size_t dim) {
  std::vector<std::string> names;
  if (j.contains("basis")) {
    const Json& b = j.at("basis");
    if (!b.is_array()) throw JsonInputError("'basis' must be an array of names");
    for (const auto& s : b) {
      if (!s.is_string()) throw JsonInputError("basis names must be strings");
      names.push_back(s.get<std::string>());
    }
    if (names.size() != dim) throw JsonInputError("'basis' length does not match 'dim'");
  } else {
    for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  }
  return names;
}

SparseVector coeffs_from(const Json& j, std::size_t dim, Field f) {
  if (!j.is_object()) throw JsonInputError("'coeffs' must be an object keyed by basis index");
  SparseVector out;
  for (const auto& [key, val] : j.items()) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw JsonInputError("coefficient key '" + key + "' is not an index");
    }
    if (k >= dim) throw JsonInputError("coefficient index " + key + " out of range");
    const Scalar c = scalar_from_json(val, f);
    if (!c.is_zero()) out.emplace_back(static_cast<std::uint32_t>(k), c);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

Json coeffs_to(const SparseVector& v) {
  Json out = Json::object();
  for (const auto& [k, c] : v) out[std::to_string(k)] = scalar_to_json(c);
  return out;
}

std::optional<std::vector<Degree>> degrees_from(const Json& j, std::size_t dim) {
  if (!j.contains("degrees")) return std::nullopt;
  std::vector<Degree> out;
  for (const auto& d : j.at("degrees")) {
    if (!d.is_array()) throw JsonInputError("each degree must be an array of integers");
    Degree deg;
    for (const auto& x : d) {
      if (!x.is_number_integer()) throw JsonInputError("degrees must be integers");
      deg.push_back(x.get<int>());
    }
    out.push_back(std::move(deg));
  }
  if (out.size() != dim) throw JsonInputError("'degrees' length does not match 'dim'");
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> pairs_from(const Json& j, const char* key) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  if (!j.contains(key)) return out;
  for (const auto& p : j.at(key)) {
    if (!p.is_array() || p.size() != 2) throw JsonInputError(std::string("'") + key + "' entries must be [i, j]");
    out.emplace_back(index_value(p[0], "index"), index_value(p[1], "index"));
  }
  return out;
}

template <class F>
auto rethrow_as_input(F&& f) {
  try {
    return f();
  } catch (const JsonInputError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw JsonInputError(e.what());
  } catch (const Error& e) {
    throw JsonInputError(e.what());
  }
}

}  // namespace

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    const auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw JsonInputError("malformed JSON at line " + std::to_string(line) + ", column " + std::to_string(col) + ": " +
                             e.what(),
                         line, col);
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw JsonInputError("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json_text(ss.str());
}

Json scalar_to_json(const Scalar& s) {
  if (s.field().is_rational()) return s.to_string();
  return s.residue();
}

Scalar scalar_from_json(const Json& j, Field f) {
  if (j.is_number_integer()) return Scalar(j.get<long>(), f);
  if (j.is_string()) {
    try {
      return Scalar::parse(j.get<std::string>(), f);
    } catch (const Error& e) {
      throw JsonInputError("bad scalar '" + j.get<std::string>() + "': " + e.what());
    }
  }
  throw JsonInputError("scalars must be strings \"p/q\" or integers");
}

Json field_to_json(Field f) {
  if (f.is_rational()) return "Q";
  return Json{{"Fp", f.modulus()}};
}

Field field_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_object() && j.contains("Fp") && j.at("Fp").is_number_integer()) {
    const long p = j.at("Fp").get<long>();
    if (p <= 0) throw JsonInputError("field modulus must be positive");
    try {
      return Field::prime(static_cast<std::uint32_t>(p));
    } catch (const Error& e) {
      throw JsonInputError(e.what());
    }
  }
  throw JsonInputError("'field' must be \"Q\" or {\"Fp\": p}");
}

Json vector_to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_to_json(x));
  return out;
}

Json algebra_to_json(const LieAlgebra& l) {
  Json out;
  out["field"] = field_to_json(l.field());
  out["dim"] = l.dim();
  out["basis"] = l.names();
  Json br = Json::array();
  for (const auto& e : l.upper_entries()) br.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", coeffs_to(e.coeffs)}});
  out["brackets"] = br;
  const auto und = l.undefined_pairs();
  if (!und.empty()) {
    Json u = Json::array();
    for (auto [i, j] : und) u.push_back({i, j});
    out["undefined"] = u;
  }
  if (l.graded()) out["degrees"] = l.degrees();
  return out;
}

LieAlgebra algebra_from_json(const Json& j) {
  return rethrow_as_input([&] {
    if (!j.is_object()) throw JsonInputError("algebra must be a JSON object");
    const Field f = field_from_json(member(j, "field"));
    const std::size_t n = index_value(member(j, "dim"), "'dim'");
    auto names = names_from(j, n);
    std::vector<LieAlgebra::Entry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("brackets")) {
      for (const auto& b : j.at("brackets")) {
        const std::size_t i = index_value(member(b, "i"), "'i'");
        const std::size_t k = index_value(member(b, "j"), "'j'");
        if (i >= k) throw JsonInputError("bracket entries need i < j, got (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        if (k >= n) throw JsonInputError("bracket index out of range");
        if (!seen.insert({i, k}).second) throw JsonInputError("duplicate bracket (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        entries.push_back({i, k, coeffs_from(member(b, "coeffs"), n, f)});
      }
    }
    return LieAlgebra(f, std::move(names), entries, pairs_from(j, "undefined"), degrees_from(j, n));
  });
}

Json module_to_json(const LModule& m) {
  Json out;
  out["algebra"] = algebra_to_json(m.lie());
  out["dim"] = m.dim();
  out["basis"] = m.names();
  Json act = Json::array();
  for (const auto& e : m.entries()) act.push_back({{"i", e.i}, {"j", e.j}, {"coeffs", coeffs_to(e.coeffs)}});
  out["action"] = act;
  const auto und = m.undefined_pairs();
  if (!und.empty()) {
    Json u = Json::array();
    for (auto [i, j] : und) u.push_back({i, j});
    out["undefined"] = u;
  }
  if (m.graded()) out["degrees"] = m.degrees();
  return out;
}

LModule module_from_json(const Json& j) {
  return rethrow_as_input([&] {
    auto lie = std::make_shared<const LieAlgebra>(algebra_from_json(member(j, "algebra")));
    const std::size_t n = index_value(member(j, "dim"), "'dim'");
    auto names = names_from(j, n);
    std::vector<LModule::Entry> entries;
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (j.contains("action")) {
      for (const auto& a : j.at("action")) {
        const std::size_t i = index_value(member(a, "i"), "'i'");
        const std::size_t k = index_value(member(a, "j"), "'j'");
        if (i >= lie->dim() || k >= n) throw JsonInputError("action index out of range");
        if (!seen.insert({i, k}).second) throw JsonInputError("duplicate action (" + std::to_string(i) + ", " + std::to_string(k) + ")");
        entries.push_back({i, k, coeffs_from(member(a, "coeffs"), n, lie->field())});
      }
    }
    return LModule(lie, std::move(names), entries, pairs_from(j, "undefined"), degrees_from(j, n));
  });
}

Json subspace_to_json(const Subspace& s) {
  Json basis = Json::array();
  for (const auto& v : s.basis()) basis.push_back(vector_to_json(v));
  return {{"ambient", s.ambient()}, {"dim", s.dim()}, {"basis", basis}, {"field", field_to_json(s.field())}};
}

Json space_to_json(const LinearMapSpace& s) {
  return {{"kind", "linear"}, {"name", s.name}, {"src", s.src}, {"tgt", s.tgt}, {"dim", s.dim()},
          {"layout", "i*tgt+k"}, {"coeffs", subspace_to_json(s.coeffs)}};
}

Json space_to_json(const BilinearMapSpace& s) {
  return {{"kind", "bilinear"},
          {"name", s.name},
          {"src", s.src},
          {"tgt", s.tgt},
          {"dim", s.dim()},
          {"symmetry", s.symmetry == Symmetry::Skew ? "skew" : "symmetric"},
          {"layout", "pair*tgt+k"},
          {"coeffs", subspace_to_json(s.coeffs)}};
}

Json linear_map_to_json(const LinearMap& f) {
  Json images = Json::array();
  for (std::size_t i = 0; i < f.src; ++i) images.push_back(f.is_known(i) ? vector_to_json(f.images[i]) : Json());
  return {{"src", f.src}, {"tgt", f.tgt}, {"images", images}};
}

Json bilinear_map_to_json(const BilinearMap& d) {
  Json values = Json::array();
  for (std::size_t i = 0; i < d.src; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < d.src; ++j) row.push_back(d.is_known(i, j) ? vector_to_json(d.at(i, j)) : Json());
    values.push_back(row);
  }
  return {{"src", d.src}, {"tgt", d.tgt}, {"values", values}};
}

Json tower_to_json(const CenterTower& t) {
  Json centers = Json::array();
  for (const auto& q : t.quotients) centers.push_back(q.kernel.dim());
  return {{"kind", "center"}, {"dims", t.dims()}, {"center_dims", centers}, {"terminated", t.terminated},
          {"limit_hit", t.limit_hit}, {"collapsed", t.collapsed}};
}

Json tower_to_json(const ModuleTower& t) {
  Json kernels = Json::array();
  for (const auto& q : t.quotients) kernels.push_back(q.kernel.dim());
  return {{"kind", "module"}, {"dims", t.dims()}, {"kernel_dims", kernels}, {"terminated", t.terminated},
          {"limit_hit", t.limit_hit}};
}

Json audit_to_json(const BiderivationAudit& a) {
  return {{"dim_source", a.dim_source},
          {"dim_quotient", a.dim_quotient},
          {"dim_image", a.dim_image},
          {"dim_kernel", a.dim_kernel},
          {"dim_range_in_center", a.dim_range_in_center},
          {"dim_trivial", a.dim_trivial},
          {"image_inside_quotient_space", a.image_inside_quotient_space},
          {"kernel_is_range_in_center", a.kernel_is_range_in_center},
          {"kernel_is_trivial", a.kernel_is_trivial},
          {"rank_nullity", a.rank_nullity},
          {"passed", a.passed()}};
}

Json audit_to_json(const CommutingAudit& a) {
  return {{"dim_source", a.dim_source},
          {"dim_quotient", a.dim_quotient},
          {"dim_image", a.dim_image},
          {"dim_kernel", a.dim_kernel},
          {"dim_special_plus_central", a.dim_special_plus_central},
          {"image_inside_quotient_space", a.image_inside_quotient_space},
          {"kernel_is_special_plus_central", a.kernel_is_special_plus_central},
          {"rank_nullity", a.rank_nullity},
          {"passed", a.passed()}};
}

}  // namespace liebider
