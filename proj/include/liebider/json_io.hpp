#pragma once

#include <cstddef>
#include <string>

#include "json.hpp"
#include "liebider/towers.hpp"

namespace liebider {

/// Keys are kept sorted, so dumps are deterministic.
using Json = nlohmann::json;

/// Malformed input; line and column are 1-based, 0 when unknown.
class JsonInputError : public Error {
 public:
  JsonInputError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : Error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

/// "p/q" or "p" over Q; the residue as an integer over F_p.
Json scalar_to_json(const Scalar& s);
Scalar scalar_from_json(const Json& j, Field f);
/// "Q" or {"Fp": p}.
Json field_to_json(Field f);
Field field_from_json(const Json& j);
Json vector_to_json(const Vector& v);

/// { "field", "dim", "basis", "brackets": [{"i","j","coeffs":{"k": c}}] },
/// optionally "undefined": [[i, j], ...] and "degrees": [[d, ...], ...].
Json algebra_to_json(const LieAlgebra& l);
LieAlgebra algebra_from_json(const Json& j);

/// { "algebra": {...}, "dim", "basis", "action": [{"i","j","coeffs"}] }.
Json module_to_json(const LModule& m);
LModule module_from_json(const Json& j);

Json subspace_to_json(const Subspace& s);
Json space_to_json(const LinearMapSpace& s);
Json space_to_json(const BilinearMapSpace& s);
Json linear_map_to_json(const LinearMap& f);
Json bilinear_map_to_json(const BilinearMap& d);

Json tower_to_json(const CenterTower& t);
Json tower_to_json(const ModuleTower& t);
Json audit_to_json(const BiderivationAudit& a);
Json audit_to_json(const CommutingAudit& a);

}  // namespace liebider
