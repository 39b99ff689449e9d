#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "liebider/map_spaces.hpp"

namespace liebider {

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Limits for brute-force enumeration over F_p.
struct EnumerationBudget {
  std::uint32_t p = 3;
  /// Number of coefficient unknowns allowed.
  std::size_t max_unknowns = 18;
  /// Budget with max_unknowns taken from LIEBIDER_MAX_UNKNOWNS when set.
  static EnumerationBudget from_env(std::uint32_t p);
};

/// p^unknowns may not exceed this, whatever max_unknowns says.
inline constexpr double kEnumerationCeiling = 1e10;

struct OracleResult {
  /// Every coefficient vector passing the definition, in enumeration order.
  std::vector<Vector> members;
  Subspace space;
  /// members is exactly the span of members (p^dim elements).
  bool closed = false;
  std::size_t unknowns = 0;
  /// Partial assignments visited by the depth-first search.
  std::size_t nodes = 0;
};

// The module must be over F_p with p = budget.p and have no undefined
// brackets or actions. Coefficient layouts match the solvers: pair-major for
// bilinear maps, source-major for linear maps.

/// delta([x,y],z) = x.delta(y,z) - y.delta(x,z) on basis triples, delta skew.
OracleResult enumerate_skew_biderivations(const LModule& m, const EnumerationBudget& budget);
/// Same identity, delta symmetric.
OracleResult enumerate_symmetric_biderivations(const LModule& m, const EnumerationBudget& budget);
/// x . f(x) = 0 for every vector x in F_p^n (not just basis vectors).
OracleResult enumerate_commuting(const LModule& m, const EnumerationBudget& budget);

/// Adjoint module of a rational algebra reduced mod p.
LModule adjoint_mod_p(const LieAlgebra& l, std::uint32_t p);

}  // namespace liebider
