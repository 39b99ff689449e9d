#include <random>

#include "doctest.h"
#include "liebider/towers.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

LModule adjoint(const LieAlgebra& l) { return LModule::adjoint(std::make_shared<const LieAlgebra>(l)); }

BilinearMap random_combination(const BilinearMapSpace& s, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(-3, 3);
  BilinearMap out = BilinearMap::zero(s.src, s.tgt, Q);
  for (const auto& b : s.basis()) out = out + Scalar(d(rng), Q) * b;
  return out;
}

}  // namespace

TEST_CASE("center tower of sl2 stops at once") {
  auto t = center_tower(sl2());
  CHECK(t.terminated);
  CHECK_FALSE(t.limit_hit);
  CHECK(t.dims() == std::vector<std::size_t>{3});
}

TEST_CASE("center tower of the heisenberg algebra collapses") {
  auto t = center_tower(heisenberg());
  CHECK_FALSE(t.terminated);
  CHECK(t.collapsed);
  CHECK(t.limit_hit);
  CHECK(t.dims() == std::vector<std::size_t>{3, 2});
}

TEST_CASE("center tower respects the depth limit") {
  auto t = center_tower(current_algebra(sl2(), 4), 2);
  CHECK(t.limit_hit);
  CHECK(t.stages.size() == 2);
  CHECK_THROWS_AS(center_tower(sl2(), 0), Error);
}

TEST_CASE("center tower of a truncated current algebra peels one layer per stage") {
  auto t = center_tower(current_algebra(sl2(), 3));
  CHECK(t.collapsed);
  CHECK(t.dims() == std::vector<std::size_t>{18, 15, 12, 9, 6, 3});
  for (const auto& s : t.stages) CHECK(check_jacobi(s).empty());
}

TEST_CASE("module tower of the adjoint current algebra") {
  auto t = module_tower(adjoint(current_algebra(sl2(), 2)));
  CHECK(t.terminated);
  CHECK(t.dims() == std::vector<std::size_t>{12, 6, 0});
  auto t4 = module_tower(adjoint(current_algebra(sl2(), 4)));
  CHECK(t4.terminated);
  CHECK(t4.dims() == std::vector<std::size_t>{24, 18, 12, 6, 0});
  for (const auto& s : t4.stages) CHECK(check_module(s).empty());
}

TEST_CASE("projection of biderivations is linear and lands in the quotient space") {
  std::mt19937 rng(7);
  for (const auto& l : {heisenberg(), current_algebra(sl2(), 2), example_3_4()}) {
    const auto q = quotient_algebra(l, center(l));
    const auto b = skew_biderivations(adjoint(l));
    const auto bq = skew_biderivations(adjoint(q.quotient));
    for (int trial = 0; trial < 4; ++trial) {
      auto d1 = random_combination(b, rng);
      auto d2 = random_combination(b, rng);
      auto p1 = project_biderivation(d1, q);
      auto p2 = project_biderivation(d2, q);
      CHECK(project_biderivation(d1 + d2, q) == p1 + p2);
      CHECK(bq.contains(p1));
    }
  }
}

TEST_CASE("biderivation audit") {
  for (const auto& l : {heisenberg(), current_algebra(sl2(), 2), current_algebra(sl2(), 3), sl2(), example_3_4()}) {
    CAPTURE(l.dim());
    auto a = tower_audit_biderivations(l);
    CHECK(a.image_inside_quotient_space);
    CHECK(a.kernel_is_range_in_center);
    CHECK(a.rank_nullity);
  }
  for (const auto& l : {heisenberg(), current_algebra(sl2(), 1), current_algebra(sl2(), 2), sl2()}) {
    auto a = tower_audit_biderivations(l);
    CHECK(a.kernel_is_trivial);
    CHECK(a.passed());
  }
  auto s = tower_audit_biderivations(sl2());
  CHECK(s.dim_kernel == 0);
  CHECK(s.dim_source == s.dim_image);
}

TEST_CASE("commuting audit") {
  for (const auto& l : {heisenberg(), current_algebra(sl2(), 2), example_3_4(), sl2(), nonabelian2()}) {
    CAPTURE(l.dim());
    auto a = tower_audit_commuting(adjoint(l));
    CHECK(a.passed());
  }
}

TEST_CASE("restriction to the derived algebra") {
  for (const auto& l : {sl2(), example_3_4(), sl2_plane_extension()}) {
    if (!is_centerless(l)) continue;
    auto a = restriction_audit(l);
    CAPTURE(l.dim());
    CHECK(a.passed());
  }
  CHECK_THROWS_AS(restrict_biderivation_to_derived(BilinearMap::zero(3, 3, Q), heisenberg()), Error);
}
