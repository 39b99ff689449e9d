#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "liebider/scalar.hpp"

namespace liebider {

using Vector = std::vector<Scalar>;

/// Sparse vector: (index, value) pairs, indices strictly increasing, values nonzero.
using SparseVector = std::vector<std::pair<std::uint32_t, Scalar>>;

Vector zero_vector(std::size_t n, Field f);
Vector unit_vector(std::size_t n, std::size_t i, Field f);
bool is_zero(const Vector& v);
Vector to_dense(const SparseVector& v, std::size_t n, Field f);
SparseVector to_sparse(const Vector& v);

/// a + c * b on sparse vectors.
SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b);
SparseVector scaled(const SparseVector& a, const Scalar& c);
Scalar sparse_at(const SparseVector& v, std::uint32_t index, Field f);

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Scalar& c, const Vector& v);

/// Dense matrix over a single field, row-major.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, Field f);
  /// Rows must agree in length and field; mixed fields raise FieldMismatch.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f);
  static Matrix identity(std::size_t n, Field f);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  Vector apply(const Vector& v) const;
  Matrix transpose() const;

  /// Throws FieldMismatch unless every entry belongs to field().
  void check_field() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  Field field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Unique reduced row echelon form. Rationals go through fraction-free
/// (Bareiss) elimination on a cleared-denominator copy.
RrefResult rref(const Matrix& m);

/// Incremental sparse Gaussian elimination. Rows are reduced against the
/// current pivots as they arrive; finish() back-substitutes to RREF.
class SparseEliminator {
 public:
  SparseEliminator(std::size_t cols, Field f);

  /// Returns true if the row increased the rank.
  bool add_row(SparseVector row);

  std::size_t cols() const { return cols_; }
  Field field() const { return field_; }
  std::size_t rank() const { return rank_; }

  /// Residual of v after reduction by the current pivot rows (leading-term only).
  SparseVector reduce(SparseVector v) const;

  /// Fully reduced pivot rows ordered by pivot column.
  std::vector<SparseVector> rref_rows();
  std::vector<std::uint32_t> pivot_columns() const;

  /// Basis of {x : row . x = 0 for every added row}, one vector per free column.
  std::vector<SparseVector> kernel_basis();

 private:
  std::size_t cols_;
  Field field_;
  std::size_t rank_ = 0;
  std::vector<std::optional<SparseVector>> pivot_rows_;
  bool fully_reduced_ = true;
};

/// A subspace of field^ambient stored by its canonical RREF basis.
class Subspace {
 public:
  Subspace() = default;
  Subspace(std::size_t ambient, Field f) : ambient_(ambient), field_(f) {}

  static Subspace zero(std::size_t ambient, Field f) { return Subspace(ambient, f); }
  static Subspace full(std::size_t ambient, Field f);
  static Subspace span(std::size_t ambient, Field f, const std::vector<SparseVector>& rows);
  static Subspace span_dense(std::size_t ambient, Field f, const std::vector<Vector>& rows);

  std::size_t ambient() const { return ambient_; }
  Field field() const { return field_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  bool is_full() const { return rows_.size() == ambient_; }

  const std::vector<SparseVector>& rows() const { return rows_; }
  const std::vector<std::uint32_t>& pivots() const { return pivots_; }
  std::vector<Vector> basis() const;
  Matrix basis_matrix() const;

  /// Canonical representative of v modulo this subspace (zero iff v is a member).
  SparseVector residual(SparseVector v) const;
  Vector residual(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const SparseVector& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of a member v in the canonical basis; nullopt if v is not a member.
  std::optional<Vector> coordinates(const Vector& v) const;

  friend bool operator==(const Subspace& a, const Subspace& b);
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  std::size_t ambient_ = 0;
  Field field_;
  std::vector<SparseVector> rows_;
  std::vector<std::uint32_t> pivots_;
};

/// A particular solution of a.x = b (free variables set to zero), if any.
std::optional<Vector> solve_linear(const Matrix& a, const Vector& b);

/// Kernel of m as a canonical subspace.
Subspace nullspace(const Matrix& m);
Subspace row_space(const Matrix& m);
Subspace column_space(const Matrix& m);

Subspace subspace_sum(const Subspace& a, const Subspace& b);
Subspace subspace_intersect(const Subspace& a, const Subspace& b);
bool subspace_contains(const Subspace& a, const Vector& v);

/// Image of a subspace under a linear map given as a matrix acting on columns.
Subspace image(const Matrix& map, const Subspace& s);

/// Projection onto ambient/sub and a section back. Quotient coordinates are the
/// non-pivot columns of sub, in increasing order; section sends quotient
/// coordinate t to the unit vector of the t-th complementary column.
struct QuotientMaps {
  Matrix projection;  // quotient_dim x ambient
  Matrix section;     // ambient x quotient_dim
  std::vector<std::size_t> complement;
};

QuotientMaps quotient_with_section(std::size_t ambient, const Subspace& sub);

/// Expresses target as a combination of the given vectors. Vectors are
/// taken greedily in order; a vector dependent on earlier ones gets
/// coefficient zero. On failure `residual` is the canonical remainder of
/// target modulo the span.
struct Combination {
  bool solvable = false;
  Vector coeffs;
  SparseVector residual;
};
Combination solve_combination(std::size_t ambient, Field f, const std::vector<SparseVector>& vectors,
                              const SparseVector& target);

}  // namespace liebider
