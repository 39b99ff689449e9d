#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liebider/lie_algebra.hpp"

namespace liebider {

/// Linear map f: L -> M stored by images of basis vectors. A block (the
/// image of one basis vector) may be unknown, which happens for window
/// maps whose true value leaves the window.
struct LinearMap {
  std::size_t src = 0;
  std::size_t tgt = 0;
  Field field;
  std::vector<Vector> images;
  std::vector<char> known;  // empty means every block is known

  static LinearMap zero(std::size_t src, std::size_t tgt, Field f);
  static LinearMap identity(std::size_t n, Field f);
  static LinearMap from_matrix(const Matrix& m);  // m is tgt x src, acting on columns

  bool is_known(std::size_t i) const { return known.empty() || known[i] != 0; }
  Vector apply(const Vector& x) const;  // unknown blocks contribute nothing
  /// Coefficients in the flattened layout index = i * tgt + k (f(e_i) has v_k-component).
  Vector coeffs() const;
  static LinearMap from_coeffs(const Vector& c, std::size_t src, std::size_t tgt, Field f);

  friend LinearMap operator+(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator-(const LinearMap& a, const LinearMap& b);
  friend LinearMap operator*(const Scalar& c, const LinearMap& a);
  friend bool operator==(const LinearMap& a, const LinearMap& b);
};

enum class Symmetry { Skew, Symmetric };

/// Bilinear map delta: L x L -> M stored as a full table of basis values.
struct BilinearMap {
  std::size_t src = 0;
  std::size_t tgt = 0;
  Field field;
  std::vector<Vector> values;  // values[i * src + j] = delta(e_i, e_j)
  std::vector<char> known;     // same indexing; empty means all known

  static BilinearMap zero(std::size_t src, std::size_t tgt, Field f);
  /// delta(x, y) = [x, y] on an algebra (undefined brackets become unknown).
  static BilinearMap bracket(const LieAlgebra& l);

  const Vector& at(std::size_t i, std::size_t j) const { return values[i * src + j]; }
  Vector& at(std::size_t i, std::size_t j) { return values[i * src + j]; }
  bool is_known(std::size_t i, std::size_t j) const { return known.empty() || known[i * src + j] != 0; }
  void set_unknown(std::size_t i, std::size_t j);
  Vector apply(const Vector& x, const Vector& y) const;

  bool is_skew() const;
  bool is_symmetric() const;

  /// Flattened coefficients over pairs (i<j for skew, i<=j for symmetric),
  /// lexicographic, each pair contributing tgt entries.
  Vector coeffs(Symmetry s) const;
  static BilinearMap from_coeffs(const Vector& c, Symmetry s, std::size_t src, std::size_t tgt, Field f);

  friend BilinearMap operator+(const BilinearMap& a, const BilinearMap& b);
  friend BilinearMap operator-(const BilinearMap& a, const BilinearMap& b);
  friend BilinearMap operator*(const Scalar& c, const BilinearMap& a);
  friend bool operator==(const BilinearMap& a, const BilinearMap& b);
};

std::size_t pair_count(std::size_t n, Symmetry s);
/// Pair index of (i, j) in the flattened layout; requires i < j (skew) or i <= j (symmetric).
std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n, Symmetry s);
std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n, Symmetry s);

/// Per-block ansatz for the unknowns. Entry b lists the target coordinates
/// allowed in block b, or nullopt when the block's value is not
/// representable (every identity instance touching it is skipped). An
/// empty support means no restriction.
using BlockSupport = std::vector<std::optional<std::vector<std::size_t>>>;

/// Homogeneous ansatz of a fixed degree shift: f(e_i) lies in degree
/// deg(i) + shift. When no target basis element has that degree the block
/// is nullopt if `partial` (the value leaves a window) and empty otherwise
/// (the value must vanish).
BlockSupport graded_linear_support(const std::vector<Degree>& src, const std::vector<Degree>& tgt,
                                   const Degree& shift, bool partial);
/// delta(e_i, e_j) lies in degree deg(i) + deg(j) + shift.
BlockSupport graded_bilinear_support(const std::vector<Degree>& src, const std::vector<Degree>& tgt,
                                     const Degree& shift, Symmetry s, bool partial);

struct LinearMapSpace {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
  Subspace coeffs;

  std::size_t dim() const { return coeffs.dim(); }
  std::vector<LinearMap> basis() const;
  bool contains(const LinearMap& f) const { return coeffs.contains(f.coeffs()); }
  LinearMap element(const Vector& coords) const;
};

struct BilinearMapSpace {
  std::string name;
  std::size_t src = 0;
  std::size_t tgt = 0;
  Symmetry symmetry = Symmetry::Skew;
  Subspace coeffs;

  std::size_t dim() const { return coeffs.dim(); }
  std::vector<BilinearMap> basis() const;
  bool contains(const BilinearMap& d) const;
};

LinearMapSpace operator+(const LinearMapSpace& a, const LinearMapSpace& b);
BilinearMapSpace operator+(const BilinearMapSpace& a, const BilinearMapSpace& b);
bool operator==(const LinearMapSpace& a, const LinearMapSpace& b);
bool operator==(const BilinearMapSpace& a, const BilinearMapSpace& b);

// Solvers --------------------------------------------------------------------
//
// All solvers impose an identity instance only when every term in it is
// defined: brackets and actions that leave a window, and blocks whose
// support is nullopt, cause the instance to be skipped. On complete
// algebras nothing is skipped.

LinearMapSpace centroid(const LModule& m, const BlockSupport& support = {});
LinearMapSpace derivations(const LModule& m, const BlockSupport& support = {});
LinearMapSpace commuting_maps(const LModule& m, const BlockSupport& support = {});
LinearMapSpace central_maps(const LModule& m);
LinearMapSpace special_commuting_maps(const LModule& m);

BilinearMapSpace skew_biderivations(const LModule& m, const BlockSupport& support = {});
BilinearMapSpace symmetric_biderivations(const LModule& m, const BlockSupport& support = {});
/// Skew maps into Z_M(L) vanishing on L x L'.
BilinearMapSpace trivial_biderivations(const LModule& m);
/// Skew biderivations vanishing on L' x L' with range in Z_M(L').
BilinearMapSpace special_biderivations(const LModule& m);

// Membership by direct evaluation of the defining identity (with the same
// skip rules as the solvers); these do not go through a solved space.
bool is_centroid_element(const LModule& m, const LinearMap& g);
bool is_derivation(const LModule& m, const LinearMap& d);
/// Linearized condition e_i.f(e_j) + e_j.f(e_i) = 0.
bool is_commuting(const LModule& m, const LinearMap& f);
bool is_skew_biderivation(const LModule& m, const BilinearMap& d);
bool is_symmetric_biderivation(const LModule& m, const BilinearMap& d);

// Constructions ----------------------------------------------------------------

/// delta(x, y) = gamma([x, y]). Throws if gamma is not in the centroid.
BilinearMap from_centroid(const LModule& m, const LinearMap& gamma);

/// delta(x, y) = omega(x, y) z0. omega is an n x n matrix; throws, naming
/// the failed precondition, unless omega is skew, omega(L, L') = 0 and z0 lies
/// in Z_M(L).
BilinearMap make_trivial_biderivation(const LModule& m, const Matrix& omega, const Vector& z0);

struct BiderivationDecomposition {
  bool decomposable = false;
  LinearMap gamma;         // centroid part
  BilinearMap residual;    // delta - gamma o bracket (a trivial biderivation when decomposable)
  bool residual_zero = false;
  Vector obstruction;      // coefficients of delta modulo (from_centroid(Cent) + trivial), skew layout
};

/// Writes delta = gamma o bracket + tau with tau trivial, preferring the
/// trivial part when the split is not unique (free coordinates on the
/// centroid side are set to zero). `gamma_support` restricts the centroid
/// ansatz; an empty support means the full centroid.
BiderivationDecomposition decompose_biderivation(const LModule& m, const BilinearMap& delta,
                                                 const BlockSupport& gamma_support = {});

struct CommutingWitness {
  std::size_t x;
  std::size_t y;
  Vector f_of_bracket;   // f([e_x, e_y])
  Vector x_on_f;         // e_x . f(e_y)
};

struct CommutingDecomposition {
  bool success = false;
  LinearMap gamma;
  LinearMap mu;
  /// Basis pairs with f([x,y]) - x.f(y) outside Z_M(L); any one of them rules
  /// out f = gamma + mu.
  std::vector<CommutingWitness> witnesses;
};

/// Throws unless f is commuting.
CommutingDecomposition decompose_commuting(const LModule& m, const LinearMap& f,
                                           const BlockSupport& gamma_support = {});

// Identity checks on a skew biderivation -------------------------------------------

/// delta(u, [x, y]) - u . delta(x, y) lies in Z_M(L') for all basis u, x, y.
bool verify_lemma_bl(const LModule& m, const BilinearMap& delta);
/// [x,y].delta(z,w) = [w,z].delta(x,y) on basis quadruples.
bool verify_identity_ena(const LModule& m, const BilinearMap& delta);
/// [x,z].delta(y,w) + [y,w].delta(x,z) = [x,w].delta(y,z) + [y,z].delta(x,w).
bool verify_identity_q(const LModule& m, const BilinearMap& delta);

}  // namespace liebider
