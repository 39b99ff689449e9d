#include "doctest.h"
#include "liebider/lie_algebra.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i, Q); }

SparseVector sv(std::initializer_list<std::pair<std::uint32_t, long>> terms) {
  SparseVector out;
  for (auto [k, x] : terms) out.emplace_back(k, Scalar(x, Q));
  return out;
}

std::vector<LieAlgebra> catalog_instances() {
  std::vector<LieAlgebra> out{sl2(), heisenberg(), nonabelian2(), example_3_4(), sl2_plane_extension(),
                              current_algebra(sl2(), 1), current_algebra(sl2(), 2)};
  for (std::size_t n = 1; n <= 4; ++n) out.push_back(abelian(n));
  return out;
}

}  // namespace

TEST_CASE("catalog algebras satisfy Jacobi") {
  for (const auto& l : catalog_instances()) {
    CHECK(check_jacobi(l).empty());
    CHECK(check_module(LModule::adjoint(std::make_shared<const LieAlgebra>(l))).empty());
  }
}

TEST_CASE("corrupted sl2 fails Jacobi") {
  // Rescaling [e,f] to 2h is still a Lie algebra (isomorphic to sl2), so
  // perturb it off the h-line instead.
  LieAlgebra rescaled(Q, {"e", "f", "h"}, {{0, 1, sv({{2, 2}})}, {0, 2, sv({{0, -2}})}, {1, 2, sv({{1, 2}})}});
  CHECK(check_jacobi(rescaled).empty());
  LieAlgebra bad(Q, {"e", "f", "h"}, {{0, 1, sv({{0, 1}, {2, 1}})}, {0, 2, sv({{0, -2}})}, {1, 2, sv({{1, 2}})}});
  CHECK_FALSE(check_jacobi(bad).empty());
}

TEST_CASE("sl2 structure constants") {
  LieAlgebra l = sl2();
  // [h, e] = 2e, [h, f] = -2f, [e, f] = h
  CHECK(l.bracket(e(3, 2), e(3, 0)) == Scalar(2, Q) * e(3, 0));
  CHECK(l.bracket(e(3, 2), e(3, 1)) == Scalar(-2, Q) * e(3, 1));
  CHECK(l.bracket(e(3, 0), e(3, 1)) == e(3, 2));
}

TEST_CASE("constructor validation") {
  CHECK_THROWS(LieAlgebra(Q, {"a", "b"}, {{1, 0, sv({{0, 1}})}}));
  CHECK_THROWS(LieAlgebra(Q, {"a", "b"}, {{0, 1, sv({{0, 1}})}, {0, 1, sv({{1, 1}})}}));
  CHECK_THROWS(LieAlgebra(Q, {"a", "b"}, {{0, 1, sv({{5, 1}})}}));
}

TEST_CASE("center and derived") {
  CHECK(center(sl2()).is_zero());
  CHECK(derived(sl2()).is_full());
  CHECK(is_perfect(sl2()));
  CHECK(is_centerless(sl2()));

  LieAlgebra h = heisenberg();
  Subspace z = Subspace::span_dense(3, Q, {e(3, 2)});
  CHECK(center(h) == z);
  CHECK(derived(h) == z);
  CHECK_FALSE(is_perfect(h));
  CHECK_FALSE(is_centerless(h));

  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(center(abelian(n)).is_full());
    CHECK(derived(abelian(n)).is_zero());
    CHECK_FALSE(is_perfect(abelian(n)));
    CHECK_FALSE(is_centerless(abelian(n)));
  }
}

TEST_CASE("centralizers") {
  auto hp = std::make_shared<const LieAlgebra>(heisenberg());
  LModule ad = LModule::adjoint(hp);
  CHECK(centralizer(ad, Subspace::zero(3, Q)).is_full());
  CHECK(centralizer(ad, derived(*hp)).is_full());

  // The 4x4 example: centerless, derived algebra has nonzero centralizer.
  auto lp = std::make_shared<const LieAlgebra>(example_3_4());
  CHECK(lp->dim() == 6);
  CHECK(is_centerless(*lp));
  Subspace zl = centralizer(LModule::adjoint(lp), derived(*lp));
  // L' = span{x13, x14, x24} is abelian and is its own centralizer.
  CHECK(derived(*lp) == Subspace::span_dense(6, Q, {e(6, 2), e(6, 3), e(6, 4)}));
  CHECK(zl == derived(*lp));
}

TEST_CASE("center lies in the centralizer of the derived algebra") {
  for (const auto& l : catalog_instances()) {
    auto p = std::make_shared<const LieAlgebra>(l);
    CHECK(centralizer(LModule::adjoint(p), derived(l)).contains(center(l)));
  }
}

TEST_CASE("quotients") {
  LieAlgebra h = heisenberg();
  auto q0 = quotient_algebra(h, Subspace::zero(3, Q));
  CHECK(q0.quotient.upper_entries().size() == h.upper_entries().size());
  CHECK(q0.quotient.bracket(0, 1) == h.bracket(0, 1));

  auto qz = quotient_algebra(h, center(h));
  CHECK(qz.quotient.dim() == 2);
  CHECK(derived(qz.quotient).is_zero());

  Subspace not_ideal = Subspace::span_dense(3, Q, {e(3, 0)});
  CHECK_THROWS_AS(quotient_algebra(h, not_ideal), NotInvariant);

  // derived(L/I) = projection(derived(L))
  for (const auto& l : catalog_instances()) {
    auto q = quotient_algebra(l, center(l));
    CHECK(check_jacobi(q.quotient).empty());
    CHECK(derived(q.quotient) == image(q.maps.projection, derived(l)));
    // the projection is a homomorphism
    for (std::size_t i = 0; i < l.dim(); ++i) {
      for (std::size_t j = 0; j < l.dim(); ++j) {
        Vector lhs = q.maps.projection.apply(l.bracket(e(l.dim(), i), e(l.dim(), j)));
        Vector rhs = q.quotient.bracket(q.maps.projection.column(i), q.maps.projection.column(j));
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("module quotients") {
  auto p = std::make_shared<const LieAlgebra>(current_algebra(sl2(), 2));
  LModule ad = LModule::adjoint(p);
  auto q0 = quotient_module(ad, Subspace::zero(ad.dim(), Q));
  CHECK(q0.quotient.dim() == ad.dim());
  auto qall = quotient_module(ad, Subspace::full(ad.dim(), Q));
  CHECK(qall.quotient.dim() == 0);
  auto qz = quotient_module(ad, centralizer(ad, derived(*p)));
  CHECK(check_module(qz.quotient).empty());
  for (std::size_t i = 0; i < p->dim(); ++i) {
    for (std::size_t j = 0; j < ad.dim(); ++j) {
      Vector lhs = qz.maps.projection.apply(ad.act(e(p->dim(), i), e(ad.dim(), j)));
      Vector rhs = qz.quotient.act(e(p->dim(), i), qz.maps.projection.column(j));
      CHECK(lhs == rhs);
    }
  }
  CHECK_THROWS_AS(quotient_module(ad, Subspace::span_dense(ad.dim(), Q, {e(ad.dim(), 0)})), NotInvariant);
}

TEST_CASE("current algebra") {
  LieAlgebra c = current_algebra(sl2(), 1);
  CHECK(c.dim() == 6);
  Subspace top = Subspace::span_dense(6, Q, {e(6, 3), e(6, 4), e(6, 5)});
  CHECK(center(c) == top);

  LieAlgebra c2 = current_algebra(sl2(), 2);
  // [e t^4, f t] = 0
  CHECK(is_zero(c2.bracket(e(12, 9), e(12, 1))));
  // [e t, f t] = h t^2
  CHECK(c2.bracket(e(12, 0), e(12, 1)) == e(12, 5));

  // lower central series reaches zero
  Subspace s = Subspace::full(12, Q);
  Subspace all = Subspace::full(12, Q);
  int steps = 0;
  while (!s.is_zero() && steps < 10) {
    s = bracket_span(c2, all, s);
    ++steps;
  }
  CHECK(s.is_zero());
  CHECK(steps == 4);
}

TEST_CASE("matrix algebras") {
  LieAlgebra ext = sl2_plane_extension();
  CHECK(ext.dim() == 6);
  CHECK(is_centerless(ext));
  CHECK_FALSE(is_perfect(ext));
  auto d = subalgebra(ext, derived(ext));
  CHECK(d.algebra.dim() == 5);
  CHECK(is_perfect(d.algebra));

  Matrix a(2, 2, Q);
  a.at(0, 1) = Scalar(1, Q);
  Matrix b(2, 2, Q);
  b.at(1, 0) = Scalar(1, Q);
  CHECK_THROWS(matrix_lie_algebra({a, b}, {"a", "b"}));
}

TEST_CASE("field reduction") {
  LieAlgebra s3 = sl2().with_field(Field::prime(3));
  CHECK(s3.field() == Field::prime(3));
  CHECK(check_jacobi(s3).empty());
  CHECK(catalog("abelian3")->dim() == 3);
  CHECK(catalog("current_sl2_2")->dim() == 12);
  CHECK_FALSE(catalog("nope"));
}
