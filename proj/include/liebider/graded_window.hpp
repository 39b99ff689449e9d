#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "liebider/map_spaces.hpp"
#include "liebider/towers.hpp"

namespace liebider {

enum class Family {
  Wab,        // L_m, I_m with [L_m, I_n] = (n + a + b m) I_{m+n}
  WTilde0m1,  // W(0,-1) with central c1, c2, c3
  SchrodingerVirasoro,
  Block,      // L_{m,i}, two-dimensional index lattice
};

struct FamilyParams {
  Scalar a = Scalar(0, Field::rationals());
  Scalar b = Scalar(0, Field::rationals());
  Scalar q = Scalar(0, Field::rationals());
  /// Schrodinger-Virasoro only: drop M_0, i.e. work in S / Z.
  bool quotient = false;
  /// W~(0,-1) only: keep the [I_m, I_n] = delta_{m,-n} (m^3 - m)/12 c3 term.
  /// With it the (L, I, I) Jacobi sums are nonzero.
  bool c3 = true;
};

std::string family_name(Family f);
/// Accepts the CLI names wab, w00, wtilde0m1, sv, block.
Family parse_family(const std::string& name);

/// A graded family truncated to indices in [-N, N] (both coordinates for
/// Block). Brackets whose value leaves the window are undefined; brackets
/// that vanish identically are kept as zero.
struct WindowInstance {
  Family family = Family::Wab;
  FamilyParams params;
  int radius = 0;        // N
  int inner_radius = 0;  // N'
  LieAlgebra algebra;
  std::vector<char> inner;  // basis elements with every index inside [-N', N']
  /// For W(a,b): whether (a, b) avoids Z x {0, -1}.
  bool generic_parameters = true;
};

/// N' defaults to floor(N / 3).
WindowInstance instantiate(Family family, const FamilyParams& params, int radius, int inner_radius = -1);

/// Degree-preserving ansatz on a window.
BlockSupport window_linear_support(const LieAlgebra& l);
BlockSupport window_bilinear_support(const LieAlgebra& l, Symmetry s = Symmetry::Skew);

struct WindowCentroid {
  LinearMapSpace space;
  Subspace inner_space;  // images of inner basis elements only
  std::size_t inner_dim() const { return inner_space.dim(); }
};

WindowCentroid window_centroid(const WindowInstance& w, bool degree_zero_ansatz = true);

struct WindowBiderivations {
  BilinearMapSpace space;
  Subspace inner_space;  // values on pairs of inner elements only
  std::size_t inner_dim() const { return inner_space.dim(); }
  /// Membership after projection to inner pairs.
  bool contains(const BilinearMap& d) const;
  std::vector<char> inner;
};

WindowBiderivations window_skew_biderivations(const WindowInstance& w);

/// Skew map delta(x, y) = gamma([x, y]) on the window, with undefined
/// brackets left unknown.
BilinearMap composed_with_bracket(const LieAlgebra& l, const LinearMap& gamma);
/// gamma_{a,b} on a W(0,-1) or W(a,b) window: L_m -> a L_m + b I_m, I_m -> a I_m.
LinearMap gamma_ab(const WindowInstance& w, const Scalar& a, const Scalar& b);

/// The lifting system for gamma_{0,b} from W(0,-1) to its central extension.
///
/// Ansatz: h(L_m, L_n) = (n - m) b I_{m+n} + C_{m,n}, h(L, I) = h(I, I) = 0,
/// h(c_i, x) = D_{i,x}, with C and D unknown central values. The full system
/// imposes h([x,y],z) = [h(x,z),y] + [x,h(y,z)] on every basis triple whose
/// terms are all in-window.
struct LiftObstruction {
  bool solvable = false;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  /// Same system restricted to triples of L's.
  bool solvable_l_only = false;
  /// Closed-form (L, L, L) equations (n - m) C_{m+n,r} = rhs c2 solved on
  /// their own, with the correct sign and with the flipped sign.
  bool hand_solvable = false;
  bool displayed_sign_solvable = false;
  /// Value of the c2-coefficient of C_{-r,r} forced by the closed-form
  /// equation at (m, n = -m - r, r); two different values for one r are a
  /// contradiction.
  struct Forced {
    int m;
    int r;
    Scalar value;
  };
  std::vector<Forced> forced;
};

/// `c3` selects whether [I_m, I_n] carries the c3 term.
LiftObstruction lift_obstruction_w0minus1(const Scalar& b, int radius, bool c3 = true);
/// phi: L_m -> I_m, c1 -> c2, everything else -> 0, on a W~(0,-1) window.
/// b phi o [,] lifts gamma_{0,b} exactly when c3 is dropped.
LinearMap lift_map_w0minus1(const WindowInstance& w);

/// sl2 with basis d_-1, d_0, d_1 and [d_i, d_j] = (j - i) d_{i+j}, graded by i.
LieAlgebra sl2_d();
/// M(a,b) on v_-N..v_N with d_i . v_j = (j + a + b i) v_{i+j}; actions
/// leaving the window are undefined.
LModule window_module(const Scalar& a, const Scalar& b, int radius);
/// delta_k(d_m, d_n) = v_{m+n+k} into M(a, 0) and delta'_k(d_m, d_n) =
/// (m + n + k + a) v_{m+n+k} into M(a, 1), with values outside the window unknown.
BilinearMap delta_k(const LModule& m, int k);
BilinearMap delta_prime_k(const LModule& m, const Scalar& a, int k);

/// The center tower audit on the W(0,0) window, degree-preserving ansatz and
/// every space projected to inner pairs.
BiderivationAudit w00_quotient_audit(int radius);

}  // namespace liebider
