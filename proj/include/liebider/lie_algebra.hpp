#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebider/linalg.hpp"

namespace liebider {

/// Grading label of a basis element (one integer per grading direction).
using Degree = std::vector<int>;

Degree operator+(const Degree& a, const Degree& b);

/// Raised when a quotient is requested by something that is not an ideal or
/// submodule; carries the offending (acting basis index, subspace row) pair.
class NotInvariant : public Error {
 public:
  NotInvariant(const std::string& what, std::size_t actor, std::size_t row)
      : Error(what), actor_(actor), row_(row) {}
  std::size_t actor() const { return actor_; }
  std::size_t row() const { return row_; }

 private:
  std::size_t actor_;
  std::size_t row_;
};

/// Finite-dimensional Lie algebra given by structure constants.
///
/// Brackets are supplied for i < j only; the table is completed by
/// antisymmetry. A bracket may be marked undefined: this models index
/// windows of graded algebras, where the true value lies outside the
/// window. Every consumer treats an undefined bracket as having no
/// in-window component, and skips identity instances that would feed an
/// undefined value into a further bracket or map.
class LieAlgebra {
 public:
  struct Entry {
    std::size_t i;
    std::size_t j;
    SparseVector coeffs;
  };

  LieAlgebra() = default;
  LieAlgebra(Field field, std::vector<std::string> names, const std::vector<Entry>& brackets,
             const std::vector<std::pair<std::size_t, std::size_t>>& undefined = {},
             std::optional<std::vector<Degree>> degrees = std::nullopt);

  std::size_t dim() const { return names_.size(); }
  Field field() const { return field_; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<std::size_t> index_of(const std::string& name) const;

  const SparseVector& bracket(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  bool defined(std::size_t i, std::size_t j) const { return defined_[i * dim() + j] != 0; }
  bool is_partial() const { return partial_; }

  /// [x, y] with undefined basis brackets dropped.
  Vector bracket(const Vector& x, const Vector& y) const;
  /// True when every basis bracket needed for [x, y] is defined.
  bool bracket_defined(const Vector& x, const Vector& y) const;

  bool graded() const { return degrees_.has_value(); }
  const std::vector<Degree>& degrees() const;
  const Degree& degree(std::size_t i) const { return degrees().at(i); }
  /// Basis indices of the given degree.
  std::vector<std::size_t> slice(const Degree& d) const;
  /// Whether values of this degree are representable: always for complete
  /// algebras, and for windows only when the degree slice is nonempty.
  bool representable(const Degree& d) const;

  /// ad(e_i) as a dim x dim matrix acting on columns (undefined entries zero).
  Matrix ad(std::size_t i) const;

  /// Brackets in upper-triangular form, as supplied.
  std::vector<Entry> upper_entries() const;
  std::vector<std::pair<std::size_t, std::size_t>> undefined_pairs() const;

  LieAlgebra with_field(Field f) const;

 private:
  Field field_;
  std::vector<std::string> names_;
  std::vector<SparseVector> table_;
  std::vector<char> defined_;
  bool partial_ = false;
  std::optional<std::vector<Degree>> degrees_;
};

using LieAlgebraPtr = std::shared_ptr<const LieAlgebra>;

/// Module over a Lie algebra via action constants e_i . v_j.
class LModule {
 public:
  struct Entry {
    std::size_t i;
    std::size_t j;
    SparseVector coeffs;
  };

  LModule() = default;
  LModule(LieAlgebraPtr lie, std::vector<std::string> names, const std::vector<Entry>& action,
          const std::vector<std::pair<std::size_t, std::size_t>>& undefined = {},
          std::optional<std::vector<Degree>> degrees = std::nullopt);

  static LModule adjoint(LieAlgebraPtr lie);

  const LieAlgebra& lie() const { return *lie_; }
  const LieAlgebraPtr& lie_ptr() const { return lie_; }
  std::size_t dim() const { return names_.size(); }
  Field field() const { return lie_->field(); }
  const std::vector<std::string>& names() const { return names_; }

  const SparseVector& act(std::size_t i, std::size_t j) const { return table_[i * dim() + j]; }
  bool defined(std::size_t i, std::size_t j) const { return defined_[i * dim() + j] != 0; }
  bool is_partial() const { return partial_; }
  bool is_adjoint() const { return adjoint_; }

  /// x . v with undefined basis actions dropped.
  Vector act(const Vector& x, const Vector& v) const;
  bool act_defined(const Vector& x, const Vector& v) const;

  bool graded() const { return degrees_.has_value(); }
  const std::vector<Degree>& degrees() const;
  std::vector<std::size_t> slice(const Degree& d) const;
  bool representable(const Degree& d) const;

  std::vector<Entry> entries() const;
  /// (i, j) with e_i . v_j undefined.
  std::vector<std::pair<std::size_t, std::size_t>> undefined_pairs() const;

 private:
  LieAlgebraPtr lie_;
  std::vector<std::string> names_;
  std::vector<SparseVector> table_;
  std::vector<char> defined_;
  bool partial_ = false;
  bool adjoint_ = false;
  std::optional<std::vector<Degree>> degrees_;
};

using Triple = std::array<std::size_t, 3>;

/// Basis triples i<j<k on which the Jacobi sum is nonzero (in-window part).
std::vector<Triple> check_jacobi(const LieAlgebra& l);
/// Basis triples (i, j, k) violating [e_i,e_j].v_k = e_i.(e_j.v_k) - e_j.(e_i.v_k).
std::vector<Triple> check_module(const LModule& m);

Subspace center(const LieAlgebra& l);
Subspace derived(const LieAlgebra& l);
/// Span of [a, b] over basis vectors of a and b.
Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b);
/// Z_M(S) = {v : s.v = 0 for all s in S}.
Subspace centralizer(const LModule& m, const Subspace& s);
bool is_perfect(const LieAlgebra& l);
bool is_centerless(const LieAlgebra& l);

struct QuotientAlgebra {
  LieAlgebra original;
  LieAlgebra quotient;
  Subspace kernel;
  QuotientMaps maps;
};

struct QuotientModule {
  LModule original;
  LModule quotient;
  Subspace kernel;
  QuotientMaps maps;
};

/// L / ideal, with induced brackets via the complement section. Throws
/// NotInvariant when [L, ideal] is not inside ideal.
QuotientAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal);
/// M / sub; throws NotInvariant unless L . sub is inside sub.
QuotientModule quotient_module(const LModule& m, const Subspace& sub);

/// Subalgebra on a subspace closed under brackets, in coordinates of the
/// subspace's canonical basis. `inclusion` maps subalgebra coordinates to L.
struct Subalgebra {
  LieAlgebra algebra;
  Matrix inclusion;
};
Subalgebra subalgebra(const LieAlgebra& l, const Subspace& s);

// Catalog ------------------------------------------------------------------

LieAlgebra sl2(Field f = Field::rationals());
LieAlgebra heisenberg(Field f = Field::rationals());
LieAlgebra abelian(std::size_t n, Field f = Field::rationals());
/// Two-dimensional nonabelian algebra [e1, e2] = e2.
LieAlgebra nonabelian2(Field f = Field::rationals());
/// 4x4 matrices with rows (x11 x12 x13 x14 / 0 x11 0 x24 / 0 0 0 x34 / 0 0 0 0).
/// Basis order: x11 (= e11 + e22), x12, x13, x14, x24, x34.
LieAlgebra example_3_4(Field f = Field::rationals());
/// sl2 + V (standard representation) + F d, with d acting as the identity on V.
/// Centerless, not perfect, with perfect derived algebra sl2 + V.
LieAlgebra sl2_plane_extension(Field f = Field::rationals());
/// g (x) (t F[t] / t^{2n+1} F[t]); basis g_a (x) t^k at index (k-1) dim(g) + a.
LieAlgebra current_algebra(const LieAlgebra& g, std::size_t n);

/// Lie algebra spanned by the given square matrices under the commutator.
/// Throws if the span is not closed.
LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> names);

/// Catalog lookup by name: sl2, heisenberg, abelianN, nonabelian2, example_3_4,
/// sl2_plane_extension, current_sl2_N.
std::optional<LieAlgebra> catalog(const std::string& name, Field f = Field::rationals());
std::vector<std::string> catalog_names();

}  // namespace liebider
