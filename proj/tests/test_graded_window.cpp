#include <algorithm>
#include <set>

#include "doctest.h"
#include "liebider/graded_window.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

Scalar q(long n, long d = 1) { return Scalar::rational(n, d); }

FamilyParams wab(const Scalar& a, const Scalar& b) {
  FamilyParams p;
  p.a = a;
  p.b = b;
  return p;
}

FamilyParams sv_quotient() {
  FamilyParams p;
  p.quotient = true;
  return p;
}

FamilyParams block(long qq) {
  FamilyParams p;
  p.q = q(qq);
  return p;
}

LModule adjoint(const LieAlgebra& l) { return LModule::adjoint(std::make_shared<const LieAlgebra>(l)); }

std::size_t idx(const LieAlgebra& l, const std::string& name) {
  auto i = l.index_of(name);
  REQUIRE(i.has_value());
  return *i;
}

Scalar coeff(const SparseVector& v, std::size_t k) {
  for (const auto& [i, c] : v) {
    if (i == k) return c;
  }
  return Scalar::zero(Q);
}

BilinearMap bracket_map(const WindowInstance& w) {
  return composed_with_bracket(w.algebra, LinearMap::identity(w.algebra.dim(), Q));
}

}  // namespace

TEST_CASE("W(a,b) structure constants follow the closed form") {
  const Scalar a = q(1, 2), b = q(1, 3);
  auto w = instantiate(Family::Wab, wab(a, b), 6);
  const LieAlgebra& l = w.algebra;
  CHECK(l.dim() == 26);
  CHECK(w.generic_parameters);
  for (int m = -6; m <= 6; ++m) {
    for (int n = -6; n <= 6; ++n) {
      const auto lm = idx(l, "L_" + std::to_string(m));
      const auto in = idx(l, "I_" + std::to_string(n));
      if (m + n < -6 || m + n > 6) {
        CHECK_FALSE(l.defined(lm, in));
        continue;
      }
      const auto target = idx(l, "I_" + std::to_string(m + n));
      CHECK(coeff(l.bracket(lm, in), target) == q(n) + a + b * q(m));
      if (m != n) {
        const auto ln = idx(l, "L_" + std::to_string(n));
        CHECK(coeff(l.bracket(lm, ln), idx(l, "L_" + std::to_string(m + n))) == q(n - m));
      }
    }
  }
  CHECK_FALSE(instantiate(Family::Wab, wab(q(2), q(-1)), 4).generic_parameters);
  CHECK_FALSE(instantiate(Family::Wab, wab(q(0), q(0)), 4).generic_parameters);
}

TEST_CASE("window families satisfy in-window Jacobi") {
  CHECK(check_jacobi(instantiate(Family::Wab, wab(q(1, 2), q(1, 3)), 6).algebra).empty());
  CHECK(check_jacobi(instantiate(Family::Wab, wab(q(0), q(0)), 6).algebra).empty());
  CHECK(check_jacobi(instantiate(Family::Wab, wab(q(0), q(-1)), 6).algebra).empty());
  CHECK(check_jacobi(instantiate(Family::SchrodingerVirasoro, FamilyParams{}, 6).algebra).empty());
  CHECK(check_jacobi(instantiate(Family::SchrodingerVirasoro, sv_quotient(), 6).algebra).empty());
  CHECK(check_jacobi(instantiate(Family::Block, block(1), 4).algebra).empty());
  FamilyParams no_c3;
  no_c3.c3 = false;
  CHECK(check_jacobi(instantiate(Family::WTilde0m1, no_c3, 6).algebra).empty());
}

TEST_CASE("the c3 term of the W(0,-1) extension breaks Jacobi on (L, I, I)") {
  auto w = instantiate(Family::WTilde0m1, FamilyParams{}, 6);
  const auto bad = check_jacobi(w.algebra);
  CHECK(bad.size() == 42);
  for (const auto& t : bad) {
    std::multiset<char> tags;
    for (auto i : t) tags.insert(w.algebra.names()[i][0]);
    CHECK(tags == std::multiset<char>{'I', 'I', 'L'});
  }
  // hand value: (I_1, I_2, L_-3) has central part (2b+a) f(a) - (2a+b) f(b) = -2
  const LieAlgebra& l = w.algebra;
  const auto i1 = idx(l, "I_1"), i2 = idx(l, "I_2"), l3 = idx(l, "L_-3");
  const std::size_t n = l.dim();
  auto e = [&](std::size_t i) {
    Vector v(n, Scalar::zero(Q));
    v[i] = q(1);
    return v;
  };
  Vector sum = l.bracket(l.bracket(e(i1), e(i2)), e(l3));
  const Vector s2 = l.bracket(l.bracket(e(i2), e(l3)), e(i1));
  const Vector s3 = l.bracket(l.bracket(e(l3), e(i1)), e(i2));
  for (std::size_t k = 0; k < n; ++k) sum[k] = sum[k] + s2[k] + s3[k];
  CHECK(sum[idx(l, "c3")] == q(-2));
}

TEST_CASE("central elements of the W(0,-1) extension annihilate everything") {
  auto w = instantiate(Family::WTilde0m1, FamilyParams{}, 6);
  const LieAlgebra& l = w.algebra;
  for (const char* c : {"c1", "c2", "c3"}) {
    const auto k = idx(l, c);
    for (std::size_t j = 0; j < l.dim(); ++j) CHECK(l.bracket(k, j).empty());
  }
  CHECK(center(l).dim() == 3);
}

TEST_CASE("centroid of W(1/2,1/3) is scalar and stable") {
  for (int n : {8, 10}) {
    auto w = instantiate(Family::Wab, wab(q(1, 2), q(1, 3)), n);
    auto c = window_centroid(w);
    CHECK(c.space.dim() == 1);
    CHECK(c.inner_dim() == 1);
    CHECK(c.space.contains(LinearMap::identity(w.algebra.dim(), Q)));
  }
}

TEST_CASE("centroid of W(0,-1) is the gamma_{a,b} family") {
  std::size_t inner8 = 0;
  for (int n : {8, 10}) {
    auto w = instantiate(Family::Wab, wab(q(0), q(-1)), n);
    auto c = window_centroid(w);
    CHECK(c.space.dim() == 2);
    CHECK(c.space.contains(gamma_ab(w, q(1), q(0))));
    CHECK(c.space.contains(gamma_ab(w, q(0), q(1))));
    CHECK(c.space.contains(gamma_ab(w, q(-3), q(5, 7))));
    if (n == 8) inner8 = c.inner_dim();
    else CHECK(c.inner_dim() == inner8);
  }
  CHECK(inner8 == 2);
}

TEST_CASE("centroid of the Schrodinger-Virasoro quotient is scalar") {
  std::size_t inner = 0;
  for (int n : {8, 10}) {
    auto w = instantiate(Family::SchrodingerVirasoro, sv_quotient(), n);
    auto c = window_centroid(w);
    CHECK(c.space.dim() == 1);
    CHECK(c.space.contains(LinearMap::identity(w.algebra.dim(), Q)));
    if (n == 8) inner = c.inner_dim();
    else CHECK(c.inner_dim() == inner);
  }
  CHECK(inner == 1);
}

TEST_CASE("closed-form biderivations are window members") {
  SUBCASE("W(1/2,1/3)") {
    auto w = instantiate(Family::Wab, wab(q(1, 2), q(1, 3)), 6);
    auto b = window_skew_biderivations(w);
    CHECK(b.inner_dim() == 1);
    CHECK(b.contains(bracket_map(w)));
    CHECK(b.contains(q(-4, 3) * bracket_map(w)));
    CHECK(is_skew_biderivation(adjoint(w.algebra), bracket_map(w)));
  }
  SUBCASE("W(0,-1)") {
    auto w = instantiate(Family::Wab, wab(q(0), q(-1)), 6);
    auto b = window_skew_biderivations(w);
    CHECK(b.contains(composed_with_bracket(w.algebra, gamma_ab(w, q(1), q(0)))));
    CHECK(b.contains(composed_with_bracket(w.algebra, gamma_ab(w, q(0), q(1)))));
    CHECK(b.inner_dim() == 2);
  }
  SUBCASE("Block(1)") {
    auto w = instantiate(Family::Block, block(1), 4);
    auto b = window_skew_biderivations(w);
    CHECK(b.inner_dim() == 1);
    CHECK(b.contains(bracket_map(w)));
  }
}

TEST_CASE("a skew map that is not a biderivation is rejected") {
  auto w = instantiate(Family::Wab, wab(q(1, 2), q(1, 3)), 6);
  auto b = window_skew_biderivations(w);
  // gamma_{0,1} o bracket is not a biderivation for generic (a,b)
  auto d = composed_with_bracket(w.algebra, gamma_ab(w, q(0), q(1)));
  CHECK_FALSE(b.contains(d));
}

TEST_CASE("lifting gamma_{0,b} to the W(0,-1) extension") {
  SUBCASE("literal algebra: solvable iff b = 0") {
    CHECK(lift_obstruction_w0minus1(q(0), 6).solvable);
    for (const Scalar& b : {q(1), q(-2), q(7, 3)}) {
      auto r = lift_obstruction_w0minus1(b, 6);
      CHECK_FALSE(r.solvable);
      // the (L, L, L) equations alone do not obstruct
      CHECK(r.solvable_l_only);
      CHECK(r.hand_solvable);
      CHECK_FALSE(r.displayed_sign_solvable);
    }
  }
  SUBCASE("monotone in the window") {
    for (const Scalar& b : {q(1), q(-2)}) {
      CHECK_FALSE(lift_obstruction_w0minus1(b, 6).solvable);
      CHECK_FALSE(lift_obstruction_w0minus1(b, 8).solvable);
    }
  }
  SUBCASE("without c3 every b lifts") {
    for (const Scalar& b : {q(0), q(1), q(-2), q(7, 3)}) CHECK(lift_obstruction_w0minus1(b, 6, false).solvable);
  }
  SUBCASE("forced values agree per r with -b (r^3 - r) / 12") {
    const Scalar b = q(5, 2);
    auto r = lift_obstruction_w0minus1(b, 6);
    REQUIRE_FALSE(r.forced.empty());
    for (const auto& f : r.forced) CHECK(f.value == -b * q(static_cast<long>(f.r) * f.r * f.r - f.r, 12));
  }
  SUBCASE("explicit lift phi o bracket") {
    FamilyParams p;
    p.c3 = false;
    auto w = instantiate(Family::WTilde0m1, p, 6);
    auto m = adjoint(w.algebra);
    auto phi = lift_map_w0minus1(w);
    CHECK(is_centroid_element(m, phi));
    auto h = q(3) * composed_with_bracket(w.algebra, phi);
    CHECK(is_skew_biderivation(m, h));
    // h(L_m, L_n) = 3 (n - m) I_{m+n} modulo the center
    const LieAlgebra& l = w.algebra;
    const auto l1 = idx(l, "L_1"), l2 = idx(l, "L_2");
    CHECK(h.at(l1, l2)[idx(l, "I_3")] == q(3));

    auto w3 = instantiate(Family::WTilde0m1, FamilyParams{}, 6);
    CHECK_FALSE(is_centroid_element(adjoint(w3.algebra), lift_map_w0minus1(w3)));
  }
  CHECK_THROWS_AS(lift_obstruction_w0minus1(q(1), 3), Error);
}

TEST_CASE("sl2 modules M(a,b) on a window") {
  for (const Scalar& a : {q(1, 2), q(0), q(1)}) {
    for (const Scalar& b : {q(0), q(1)}) CHECK(check_module(window_module(a, b, 5)).empty());
  }
  const Subspace all = Subspace::full(3, Q);
  CHECK(centralizer(window_module(q(1, 2), q(0), 5), all).dim() == 0);
  CHECK(centralizer(window_module(q(7, 3), q(0), 5), all).dim() == 0);
  for (long a : {-3L, 0L, 2L, 4L}) {
    auto m = window_module(q(a), q(0), 5);
    Vector v(m.dim(), Scalar::zero(Q));
    v[static_cast<std::size_t>(-a + 5)] = q(1);
    CHECK(centralizer(m, all) == Subspace::span_dense(m.dim(), Q, {v}));
  }
  // -a outside the window
  CHECK(centralizer(window_module(q(8), q(0), 5), all).dim() == 0);
}

TEST_CASE("delta_k and delta'_k are symmetric biderivations") {
  auto m0 = window_module(q(1, 2), q(0), 6);
  auto m1 = window_module(q(1, 2), q(1), 6);
  const auto s0 = symmetric_biderivations(m0);
  const auto s1 = symmetric_biderivations(m1);
  for (int k = -2; k <= 2; ++k) {
    auto d = delta_k(m0, k);
    auto dp = delta_prime_k(m1, q(1, 2), k);
    CHECK(d.is_symmetric());
    CHECK(is_symmetric_biderivation(m0, d));
    CHECK(s0.contains(d));
    CHECK(is_symmetric_biderivation(m1, dp));
    CHECK(s1.contains(dp));
  }
  // the M(a,0) family is not a biderivation into M(a,1)
  CHECK_FALSE(is_symmetric_biderivation(m1, delta_k(m1, 0)));
}

TEST_CASE("W(0,0) center tower audit on the window") {
  auto a = w00_quotient_audit(6);
  CHECK(a.passed());
  CHECK(a.rank_nullity);
  CHECK(a.kernel_is_trivial);
  CHECK(a.dim_source == 1);
  CHECK(a.dim_kernel == 0);
}
