#include <random>

#include "doctest.h"
#include "liebider/linalg.hpp"

using namespace liebider;

namespace {

const Field Q = Field::rationals();

Matrix mat(std::initializer_list<std::initializer_list<long>> rows, Field f = Q) {
  std::vector<Vector> out;
  std::size_t cols = 0;
  for (auto r : rows) {
    Vector v;
    for (long x : r) v.emplace_back(x, f);
    cols = v.size();
    out.push_back(v);
  }
  return Matrix::from_rows(out, cols, f);
}

Matrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, Field f, int spread = 3) {
  std::uniform_int_distribution<int> d(-spread, spread);
  Matrix m(r, c, f);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m.at(i, j) = Scalar(d(rng), f);
  }
  return m;
}

}  // namespace

TEST_CASE("rref small cases") {
  auto id = rref(Matrix::identity(3, Q));
  CHECK(id.reduced == Matrix::identity(3, Q));
  CHECK(id.pivots == std::vector<std::size_t>{0, 1, 2});
  CHECK(id.rank == 3);

  auto z = rref(Matrix(2, 4, Q));
  CHECK(z.rank == 0);
  CHECK(z.pivots.empty());

  auto r = rref(mat({{2, 4}, {1, 2}}));
  CHECK(r.reduced == mat({{1, 2}, {0, 0}}));
  CHECK(r.rank == 1);
}

TEST_CASE("rref rejects mixed fields") {
  Matrix m(1, 2, Q);
  m.at(0, 1) = Scalar(1, Field::prime(3));
  CHECK_THROWS_AS(rref(m), FieldMismatch);
}

TEST_CASE("rref is idempotent and agrees with sparse elimination") {
  std::mt19937 rng(7);
  for (Field f : {Q, Field::prime(5)}) {
    for (int t = 0; t < 40; ++t) {
      Matrix m = random_matrix(rng, 1 + t % 5, 2 + t % 4, f, 1);
      auto a = rref(m);
      auto b = rref(a.reduced);
      CHECK(a.reduced == b.reduced);
      CHECK(a.rank == a.pivots.size());
      std::vector<SparseVector> rows;
      for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
      CHECK(Subspace::span(m.cols(), f, rows).dim() == a.rank);
    }
  }
}

TEST_CASE("nullspace basics") {
  CHECK(nullspace(Matrix::identity(4, Q)).is_zero());
  CHECK(nullspace(Matrix(2, 3, Q)).dim() == 3);
}

TEST_CASE("nullspace over F_3 matches exhaustive search") {
  const Field f = Field::prime(3);
  Matrix m = mat({{1, 1, 0}}, f);
  Subspace k = nullspace(m);
  CHECK(k.dim() == 2);
  for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  int count = 0;
  for (int a = 0; a < 3; ++a) {
    for (int b = 0; b < 3; ++b) {
      for (int c = 0; c < 3; ++c) {
        Vector v{Scalar(a, f), Scalar(b, f), Scalar(c, f)};
        bool in_kernel = is_zero(m.apply(v));
        CHECK(k.contains(v) == in_kernel);
        count += in_kernel ? 1 : 0;
      }
    }
  }
  CHECK(count == 9);
}

TEST_CASE("nullspace vectors are annihilated") {
  std::mt19937 rng(11);
  for (int t = 0; t < 30; ++t) {
    Matrix m = random_matrix(rng, 3, 6, Q);
    Subspace k = nullspace(m);
    CHECK(k.dim() == m.cols() - rref(m).rank);
    for (const auto& v : k.basis()) CHECK(is_zero(m.apply(v)));
  }
}

TEST_CASE("subspace arithmetic") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    Subspace a = row_space(random_matrix(rng, 1 + t % 3, 4, Q, 1));
    Subspace b = row_space(random_matrix(rng, 1 + (t / 3) % 3, 4, Q, 1));
    CHECK(subspace_sum(a, Subspace::zero(4, Q)) == a);
    CHECK(subspace_intersect(a, a) == a);
    Subspace s = subspace_sum(a, b);
    Subspace i = subspace_intersect(a, b);
    CHECK(s.dim() + i.dim() == a.dim() + b.dim());
    CHECK(s.contains(a));
    CHECK(a.contains(i));
    CHECK(b.contains(i));
  }
  CHECK_THROWS(subspace_sum(Subspace::zero(3, Q), Subspace::zero(4, Q)));
}

TEST_CASE("canonical form is independent of the spanning set") {
  std::vector<Vector> s1{{Scalar(1, Q), Scalar(2, Q), Scalar(0, Q)}, {Scalar(0, Q), Scalar(1, Q), Scalar(1, Q)}};
  std::vector<Vector> s2{{Scalar(1, Q), Scalar(3, Q), Scalar(1, Q)},
                         {Scalar(2, Q), Scalar(1, Q), Scalar(-3, Q)},
                         {Scalar(3, Q), Scalar(4, Q), Scalar(-2, Q)}};
  Subspace a = Subspace::span_dense(3, Q, s1);
  Subspace b = Subspace::span_dense(3, Q, s2);
  CHECK(a == b);
  CHECK(a.rows() == b.rows());
}

TEST_CASE("rational elimination keeps exact fractions") {
  Matrix m = mat({{3, 7}, {5, 11}});
  auto x = solve_linear(m, {Scalar(1, Q), Scalar(0, Q)});
  REQUIRE(x);
  CHECK((*x)[0] == Scalar::rational(-11, 2));
  CHECK((*x)[1] == Scalar::rational(5, 2));
  CHECK_FALSE(solve_linear(mat({{1, 1}, {2, 2}}), {Scalar(1, Q), Scalar(3, Q)}));
}

TEST_CASE("quotient with section") {
  auto check_ps = [](const QuotientMaps& q) {
    const std::size_t d = q.complement.size();
    CHECK(q.projection * q.section == Matrix::identity(d, Q));
  };
  QuotientMaps zero = quotient_with_section(3, Subspace::zero(3, Q));
  CHECK(zero.projection == Matrix::identity(3, Q));
  CHECK(zero.section == Matrix::identity(3, Q));

  QuotientMaps full = quotient_with_section(3, Subspace::full(3, Q));
  CHECK(full.complement.empty());

  Subspace line = Subspace::span_dense(3, Q, {{Scalar(1, Q), Scalar(0, Q), Scalar(0, Q)}});
  QuotientMaps q = quotient_with_section(3, line);
  CHECK(q.complement.size() == 2);
  check_ps(q);
  CHECK(is_zero(q.projection.apply(line.basis()[0])));

  std::mt19937 rng(5);
  for (int t = 0; t < 20; ++t) {
    Subspace s = row_space(random_matrix(rng, 2, 5, Q));
    QuotientMaps qm = quotient_with_section(5, s);
    check_ps(qm);
    for (const auto& v : s.basis()) CHECK(is_zero(qm.projection.apply(v)));
    CHECK(qm.complement.size() == 5 - s.dim());
  }
}

TEST_CASE("image of a subspace") {
  Matrix swap = mat({{0, 1}, {1, 0}});
  Subspace x = Subspace::span_dense(2, Q, {{Scalar(1, Q), Scalar(0, Q)}});
  Subspace y = Subspace::span_dense(2, Q, {{Scalar(0, Q), Scalar(1, Q)}});
  CHECK(image(swap, x) == y);
}

TEST_CASE("scalars") {
  CHECK_THROWS(Field::prime(2));
  CHECK_THROWS(Field::prime(9));
  CHECK(Scalar::parse("6/4", Q).to_string() == "3/2");
  CHECK(Scalar::parse("-4/-2", Q).to_string() == "2");
  CHECK(Scalar::parse("7", Field::prime(5)).residue() == 2);
  CHECK(Scalar::parse("-1", Field::prime(5)).residue() == 4);
  CHECK_THROWS_AS(Scalar(1, Q) + Scalar(1, Field::prime(3)), FieldMismatch);
  const Field f7 = Field::prime(7);
  for (long a = 1; a < 7; ++a) CHECK((Scalar(a, f7) * Scalar(a, f7).inverse()).is_one());
}
