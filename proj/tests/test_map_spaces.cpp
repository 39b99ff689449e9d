#include <random>

#include "doctest.h"
#include "liebider/map_spaces.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

LModule adjoint(const LieAlgebra& l) { return LModule::adjoint(std::make_shared<const LieAlgebra>(l)); }

std::vector<LieAlgebra> small_catalog() {
  return {sl2(), heisenberg(), nonabelian2(), abelian(1), abelian(2), abelian(3), example_3_4(),
          current_algebra(sl2(), 1), sl2_plane_extension()};
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i, Q); }

std::size_t binom2(std::size_t n) { return n * (n - 1) / 2; }

LinearMap ad_map(const LieAlgebra& l, std::size_t x) {
  LinearMap out = LinearMap::zero(l.dim(), l.dim(), l.field());
  for (std::size_t j = 0; j < l.dim(); ++j) out.images[j] = l.bracket(e(l.dim(), x), e(l.dim(), j));
  return out;
}

/// x . f(x) = 0 tested on every e_i and e_i + e_j.
bool unlinearized_commuting(const LModule& m, const LinearMap& f) {
  const std::size_t n = m.lie().dim();
  std::vector<Vector> probes;
  for (std::size_t i = 0; i < n; ++i) {
    probes.push_back(e(n, i));
    for (std::size_t j = i + 1; j < n; ++j) probes.push_back(e(n, i) + e(n, j));
  }
  for (const auto& x : probes) {
    if (!is_zero(m.act(x, f.apply(x)))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("pair layout") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (Symmetry s : {Symmetry::Skew, Symmetry::Symmetric}) {
      auto pairs = pair_list(n, s);
      CHECK(pairs.size() == pair_count(n, s));
      for (std::size_t p = 0; p < pairs.size(); ++p) CHECK(pair_index(pairs[p].first, pairs[p].second, n, s) == p);
    }
  }
}

TEST_CASE("centroid") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(centroid(adjoint(abelian(n))).dim() == n * n);
  auto c = centroid(adjoint(sl2()));
  CHECK(c.dim() == 1);
  CHECK(c.contains(LinearMap::identity(3, Q)));
}

TEST_CASE("derivations") {
  for (std::size_t n = 1; n <= 3; ++n) CHECK(derivations(adjoint(abelian(n))).dim() == n * n);
  auto d = derivations(adjoint(sl2()));
  CHECK(d.dim() == 3);
  for (std::size_t x = 0; x < 3; ++x) CHECK(d.contains(ad_map(sl2(), x)));

  LieAlgebra h = heisenberg();
  auto dh = derivations(adjoint(h));
  // gl2 acting on span{x, y} with trace on z, plus maps into z: 4 + 2
  CHECK(dh.dim() == 6);
  for (std::size_t x = 0; x < 3; ++x) CHECK(dh.contains(ad_map(h, x)));
  for (const auto& b : dh.basis()) CHECK(is_derivation(adjoint(h), b));
}

TEST_CASE("skew biderivations") {
  auto s = skew_biderivations(adjoint(sl2()));
  CHECK(s.dim() == 1);
  CHECK(s.contains(BilinearMap::bracket(sl2())));
  for (std::size_t n = 1; n <= 3; ++n) CHECK(skew_biderivations(adjoint(abelian(n))).dim() == n * binom2(n));
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    for (const auto& b : skew_biderivations(m).basis()) CHECK(is_skew_biderivation(m, b));
  }
}

TEST_CASE("symmetric biderivations") {
  CHECK(symmetric_biderivations(adjoint(sl2())).dim() == 0);
  for (std::size_t n = 1; n <= 3; ++n) {
    CHECK(symmetric_biderivations(adjoint(abelian(n))).dim() == n * n * (n + 1) / 2);
  }
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    for (const auto& b : symmetric_biderivations(m).basis()) CHECK(is_symmetric_biderivation(m, b));
  }
}

TEST_CASE("commuting maps") {
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    auto com = commuting_maps(m);
    auto cen = centroid(m);
    CHECK(com.coeffs.contains(cen.coeffs));
    for (const auto& f : com.basis()) {
      CHECK(is_commuting(m, f));
      CHECK(unlinearized_commuting(m, f));
    }
    for (const auto& f : special_commuting_maps(m).basis()) CHECK(com.contains(f));
    for (const auto& f : central_maps(m).basis()) CHECK(com.contains(f));
  }
}

TEST_CASE("linearization agrees with the unlinearized condition") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> d(-2, 2);
  for (const auto& l : {heisenberg(), nonabelian2(), sl2()}) {
    LModule m = adjoint(l);
    auto com = commuting_maps(m);
    for (int t = 0; t < 30; ++t) {
      LinearMap f = LinearMap::zero(l.dim(), l.dim(), Q);
      // half the samples start inside the space
      if (t % 2 == 0 && com.dim() > 0) {
        Vector coords;
        for (std::size_t k = 0; k < com.dim(); ++k) coords.emplace_back(d(rng), Q);
        f = com.element(coords);
      }
      if (t % 3 == 0) f.images[static_cast<std::size_t>(t) % l.dim()][0] += Scalar(1, Q);
      CHECK(com.contains(f) == unlinearized_commuting(m, f));
    }
  }
}

TEST_CASE("example_3_4 commuting map") {
  LieAlgebra l = example_3_4();
  LModule m = adjoint(l);
  // x13 -> x12 and x24 -> x34, everything else to zero
  LinearMap f = LinearMap::zero(6, 6, Q);
  f.images[2] = e(6, 1);
  f.images[4] = e(6, 5);
  CHECK(commuting_maps(m).contains(f));
  CHECK_FALSE(centroid(m).contains(f));
  auto dec = decompose_commuting(m, f);
  CHECK_FALSE(dec.success);
  bool found = false;
  for (const auto& w : dec.witnesses) {
    if (w.x == 2 && w.y == 4) {
      found = true;
      CHECK(is_zero(w.f_of_bracket));
      CHECK(w.x_on_f == e(6, 3));
    }
  }
  CHECK(found);
}

TEST_CASE("central and special maps") {
  CHECK(central_maps(adjoint(sl2())).dim() == 0);
  CHECK(central_maps(adjoint(heisenberg())).dim() == 3);
  CHECK(trivial_biderivations(adjoint(sl2())).dim() == 0);
  CHECK(trivial_biderivations(adjoint(heisenberg())).dim() == 1);
  // centerless with perfect derived algebra: no special biderivations
  LieAlgebra ext = sl2_plane_extension();
  REQUIRE(is_centerless(ext));
  CHECK(special_biderivations(adjoint(ext)).dim() == 0);
  CHECK(special_biderivations(adjoint(sl2())).dim() == 0);
}

TEST_CASE("trivial biderivation construction") {
  LieAlgebra h = heisenberg();
  LModule m = adjoint(h);
  Matrix omega(3, 3, Q);
  omega.at(0, 1) = Scalar(1, Q);
  omega.at(1, 0) = Scalar(-1, Q);
  BilinearMap d = make_trivial_biderivation(m, omega, e(3, 2));
  auto triv = trivial_biderivations(m);
  CHECK(triv.contains(d));
  CHECK(triv.basis().front() == d);
  CHECK(make_trivial_biderivation(m, Matrix(3, 3, Q), e(3, 2)) == BilinearMap::zero(3, 3, Q));

  Matrix bad = omega;
  bad.at(0, 2) = Scalar(1, Q);
  bad.at(2, 0) = Scalar(-1, Q);
  CHECK_THROWS_WITH(make_trivial_biderivation(m, bad, e(3, 2)), doctest::Contains("omega(L, L')"));
  CHECK_THROWS_WITH(make_trivial_biderivation(m, omega, e(3, 0)), doctest::Contains("z0"));
  Matrix not_skew(3, 3, Q);
  not_skew.at(0, 1) = Scalar(1, Q);
  CHECK_THROWS_WITH(make_trivial_biderivation(m, not_skew, e(3, 2)), doctest::Contains("skew"));

  // perfect L admits only omega = 0
  Matrix w(3, 3, Q);
  w.at(0, 1) = Scalar(1, Q);
  w.at(1, 0) = Scalar(-1, Q);
  CHECK_THROWS(make_trivial_biderivation(adjoint(sl2()), w, zero_vector(3, Q)));
}

TEST_CASE("from_centroid") {
  LModule s = adjoint(sl2());
  CHECK(from_centroid(s, LinearMap::identity(3, Q)) == BilinearMap::bracket(sl2()));
  CHECK(from_centroid(s, LinearMap::zero(3, 3, Q)) == BilinearMap::zero(3, 3, Q));
  LinearMap not_cent = LinearMap::zero(3, 3, Q);
  not_cent.images[0] = e(3, 1);
  CHECK_THROWS(from_centroid(s, not_cent));
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    auto skew = skew_biderivations(m);
    for (const auto& g : centroid(m).basis()) CHECK(skew.contains(from_centroid(m, g)));
  }
}

TEST_CASE("perfect centerless algebras decompose") {
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    const bool zl = centralizer(m, Subspace::full(l.dim(), Q)).is_zero();
    if (is_perfect(l) && zl) {
      BilinearMapSpace img{"img", l.dim(), l.dim(), Symmetry::Skew, Subspace(pair_count(l.dim(), Symmetry::Skew) * l.dim(), Q)};
      std::vector<SparseVector> rows;
      for (const auto& g : centroid(m).basis()) rows.push_back(to_sparse(from_centroid(m, g).coeffs(Symmetry::Skew)));
      img.coeffs = Subspace::span(img.coeffs.ambient(), Q, rows);
      CHECK(skew_biderivations(m) == img);
    }
    if (centralizer(m, derived(l)).is_zero()) CHECK(commuting_maps(m) == centroid(m));
  }
  LModule s = adjoint(sl2());
  for (const auto& d : skew_biderivations(s).basis()) {
    auto dec = decompose_biderivation(s, d);
    CHECK(dec.decomposable);
    CHECK(dec.residual_zero);
  }
  auto id = decompose_commuting(s, LinearMap::identity(3, Q));
  CHECK(id.success);
  CHECK(id.gamma == LinearMap::identity(3, Q));
  CHECK(id.mu == LinearMap::zero(3, 3, Q));
}

TEST_CASE("heisenberg trivial generator prefers the trivial part") {
  LModule m = adjoint(heisenberg());
  BilinearMap d = trivial_biderivations(m).basis().front();
  auto dec = decompose_biderivation(m, d);
  CHECK(dec.decomposable);
  CHECK(dec.gamma == LinearMap::zero(3, 3, Q));
  CHECK(dec.residual == d);
  CHECK_FALSE(dec.residual_zero);
}

TEST_CASE("identity lemmas on catalog skew spaces") {
  for (const auto& l : small_catalog()) {
    LModule m = adjoint(l);
    for (const auto& d : skew_biderivations(m).basis()) {
      CHECK(verify_lemma_bl(m, d));
      CHECK(verify_identity_ena(m, d));
      CHECK(verify_identity_q(m, d));
    }
  }
  CHECK(verify_identity_ena(adjoint(sl2()), BilinearMap::bracket(sl2())));
  CHECK(verify_identity_q(adjoint(sl2()), BilinearMap::bracket(sl2())));
}

TEST_CASE("negative control: a skew map that is not a biderivation") {
  LModule m = adjoint(sl2());
  BilinearMap d = BilinearMap::zero(3, 3, Q);
  d.at(0, 1) = e(3, 0);
  d.at(1, 0) = Scalar(-1, Q) * e(3, 0);
  CHECK(d.is_skew());
  CHECK_FALSE(is_skew_biderivation(m, d));
  CHECK_FALSE(skew_biderivations(m).contains(d));
  const bool all = verify_lemma_bl(m, d) && verify_identity_ena(m, d) && verify_identity_q(m, d);
  CHECK_FALSE(all);
}

TEST_CASE("derivation-like negative controls") {
  LModule m = adjoint(sl2());
  LinearMap f = LinearMap::zero(3, 3, Q);
  f.images[0] = e(3, 1);
  CHECK_FALSE(is_derivation(m, f));
  CHECK_FALSE(is_commuting(m, f));
  CHECK_FALSE(unlinearized_commuting(m, f));
  CHECK_FALSE(is_centroid_element(m, f));
  CHECK_THROWS(decompose_commuting(m, f));
}
