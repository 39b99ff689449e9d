#include <cmath>
#include <cstdlib>

#include "doctest.h"
#include "liebider/oracle.hpp"

using namespace liebider;

namespace {

EnumerationBudget budget(std::uint32_t p) {
  EnumerationBudget b;
  b.p = p;
  return b;
}

}  // namespace

TEST_CASE("abelian plane over F_3: every skew map is a biderivation") {
  auto m = adjoint_mod_p(abelian(2), 3);
  auto r = enumerate_skew_biderivations(m, budget(3));
  CHECK(r.unknowns == 2);
  CHECK(r.members.size() == 9);
  CHECK(r.closed);
  CHECK(r.space.dim() == 2);
}

TEST_CASE("oracle agrees with the solvers over F_3") {
  for (const auto& l : {abelian(2), nonabelian2(), heisenberg()}) {
    auto m = adjoint_mod_p(l, 3);
    auto skew = enumerate_skew_biderivations(m, budget(3));
    CHECK(skew.closed);
    CHECK(skew.space == skew_biderivations(m).coeffs);
    CHECK(skew.members.size() == static_cast<std::size_t>(std::pow(3, skew.space.dim())));

    auto sym = enumerate_symmetric_biderivations(m, budget(3));
    CHECK(sym.closed);
    CHECK(sym.space == symmetric_biderivations(m).coeffs);

    auto com = enumerate_commuting(m, budget(3));
    CHECK(com.closed);
    CHECK(com.space == commuting_maps(m).coeffs);
  }
}

TEST_CASE("sl2 over F_5 has only multiples of the bracket") {
  auto m = adjoint_mod_p(sl2(), 5);
  auto r = enumerate_skew_biderivations(m, budget(5));
  CHECK(r.members.size() == 5);
  CHECK(r.space == skew_biderivations(m).coeffs);
  CHECK(r.space.contains(BilinearMap::bracket(m.lie()).coeffs(Symmetry::Skew)));
}

TEST_CASE("centroid members pass the commuting oracle") {
  auto m = adjoint_mod_p(heisenberg(), 3);
  auto com = enumerate_commuting(m, budget(3));
  for (const auto& g : centroid(m).basis()) CHECK(com.space.contains(g.coeffs()));
}

TEST_CASE("a map with x.f(x) != 0 is excluded") {
  // on nonabelian2, f = ad(e1) has e2 . f(e2) = [e2, e2] = 0 but e1 . f(e2) = e2
  // and f(e1) = 0; take x = e1 + e2: x . f(x) = [e1 + e2, e2] = e2 != 0
  auto m = adjoint_mod_p(nonabelian2(), 3);
  auto com = enumerate_commuting(m, budget(3));
  const Field f = Field::prime(3);
  LinearMap ad = LinearMap::zero(2, 2, f);
  ad.images[1][1] = Scalar(1, f);
  CHECK_FALSE(is_commuting(m, ad));
  CHECK_FALSE(com.space.contains(ad.coeffs()));
  for (const auto& v : com.members) CHECK(v != ad.coeffs());
}

TEST_CASE("budget and field guards") {
  auto m = adjoint_mod_p(heisenberg(), 3);
  EnumerationBudget tight = budget(3);
  tight.max_unknowns = 4;
  CHECK_THROWS_AS(enumerate_skew_biderivations(m, tight), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_skew_biderivations(m, budget(5)), FieldMismatch);
  CHECK_THROWS_AS(enumerate_skew_biderivations(m, budget(2)), Error);
  CHECK_THROWS_AS(enumerate_skew_biderivations(LModule::adjoint(std::make_shared<const LieAlgebra>(heisenberg())),
                                               budget(3)),
                  FieldMismatch);

  setenv("LIEBIDER_MAX_UNKNOWNS", "7", 1);
  CHECK(EnumerationBudget::from_env(3).max_unknowns == 7);
  setenv("LIEBIDER_MAX_UNKNOWNS", "x", 1);
  CHECK_THROWS_AS(EnumerationBudget::from_env(3), Error);
  unsetenv("LIEBIDER_MAX_UNKNOWNS");
  CHECK(EnumerationBudget::from_env(5).max_unknowns == 18);
}
