#include "liebider/linalg.hpp"

#include <algorithm>
#include <map>

namespace liebider {

Vector zero_vector(std::size_t n, Field f) { return Vector(n, Scalar::zero(f)); }

Vector unit_vector(std::size_t n, std::size_t i, Field f) {
  Vector v = zero_vector(n, f);
  v.at(i) = Scalar::one(f);
  return v;
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

Vector to_dense(const SparseVector& v, std::size_t n, Field f) {
  Vector out = zero_vector(n, f);
  for (const auto& [i, x] : v) {
    if (i >= n) throw DimensionMismatch("sparse index out of range");
    out[i] = x;
  }
  return out;
}

SparseVector to_sparse(const Vector& v) {
  SparseVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out.emplace_back(static_cast<std::uint32_t>(i), v[i]);
  }
  return out;
}

SparseVector axpy(const SparseVector& a, const Scalar& c, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      out.push_back(a[i++]);
    } else if (i == a.size() || b[j].first < a[i].first) {
      Scalar x = c * b[j].second;
      if (!x.is_zero()) out.emplace_back(b[j].first, std::move(x));
      ++j;
    } else {
      Scalar x = a[i].second + c * b[j].second;
      if (!x.is_zero()) out.emplace_back(a[i].first, std::move(x));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector scaled(const SparseVector& a, const Scalar& c) {
  SparseVector out;
  if (c.is_zero()) return out;
  out.reserve(a.size());
  for (const auto& [i, x] : a) out.emplace_back(i, x * c);
  return out;
}

Scalar sparse_at(const SparseVector& v, std::uint32_t index, Field f) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& e, std::uint32_t k) { return e.first < k; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar::zero(f);
}

Vector operator+(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector operator-(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw DimensionMismatch("vector length mismatch");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector operator*(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x *= c;
  return out;
}

// ---------------------------------------------------------------------------

Matrix::Matrix(std::size_t rows, std::size_t cols, Field f)
    : rows_(rows), cols_(cols), field_(f), data_(rows * cols, Scalar::zero(f)) {}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols, Field f) {
  Matrix m(rows.size(), cols, f);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw DimensionMismatch("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  m.check_field();
  return m;
}

Matrix Matrix::identity(std::size_t n, Field f) {
  Matrix m(n, n, f);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(f);
  return m;
}

Vector Matrix::row(std::size_t r) const {
  return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const {
  Vector out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw DimensionMismatch("matrix-vector size mismatch");
  Vector out = zero_vector(rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) {
      if (!v[c].is_zero() && !at(r, c).is_zero()) out[r] += at(r, c) * v[c];
    }
  }
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

void Matrix::check_field() const {
  for (const auto& x : data_) require_same_field(field_, x.field());
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size mismatch");
  require_same_field(a.field_, b.field_);
  Matrix out(a.rows_, b.cols_, a.field_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(i, k);
      if (x.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b.at(k, j).is_zero()) out.at(i, j) += x * b.at(k, j);
      }
    }
  }
  return out;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.field_ == b.field_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------

namespace {

RrefResult rref_prime(const Matrix& m) {
  Matrix a = m;
  const Field f = m.field();
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && a.at(p, c).is_zero()) ++p;
    if (p == a.rows()) continue;
    for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a.at(p, j), a.at(r, j));
    const Scalar inv = a.at(r, c).inverse();
    for (std::size_t j = c; j < a.cols(); ++j) a.at(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      const Scalar factor = a.at(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a.at(i, j) -= factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  (void)f;
  return {a, pivots, pivots.size()};
}

RrefResult rref_rational(const Matrix& m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  // Clear denominators row by row; row scaling preserves the row space.
  std::vector<std::vector<mpz_class>> a(rows, std::vector<mpz_class>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (std::size_t j = 0; j < cols; ++j) {
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), m.at(i, j).rational().get_den_mpz_t());
    }
    for (std::size_t j = 0; j < cols; ++j) {
      const mpq_class& q = m.at(i, j).rational();
      a[i][j] = q.get_num() * (lcm / q.get_den());
    }
  }

  // Fraction-free forward elimination.
  std::vector<std::size_t> pivots;
  mpz_class prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        mpz_class t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }

  // Normalize and back-substitute over Q.
  Matrix out(rows, cols, Field::rationals());
  std::vector<std::vector<mpq_class>> q(r, std::vector<mpq_class>(cols));
  for (std::size_t i = 0; i < r; ++i) {
    const mpz_class& lead = a[i][pivots[i]];
    for (std::size_t j = 0; j < cols; ++j) {
      q[i][j] = mpq_class(a[i][j], lead);
      q[i][j].canonicalize();
    }
  }
  for (std::size_t k = r; k-- > 0;) {
    const std::size_t pc = pivots[k];
    for (std::size_t i = 0; i < k; ++i) {
      if (sgn(q[i][pc]) == 0) continue;
      const mpq_class factor = q[i][pc];
      for (std::size_t j = pc; j < cols; ++j) {
        if (sgn(q[k][j]) != 0) q[i][j] -= factor * q[k][j];
      }
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < cols; ++j) out.at(i, j) = Scalar(q[i][j]);
  }
  return {out, pivots, r};
}

}  // namespace

RrefResult rref(const Matrix& m) {
  m.check_field();
  if (m.field().is_rational()) return rref_rational(m);
  return rref_prime(m);
}

// ---------------------------------------------------------------------------

SparseEliminator::SparseEliminator(std::size_t cols, Field f)
    : cols_(cols), field_(f), pivot_rows_(cols) {}

SparseVector SparseEliminator::reduce(SparseVector v) const {
  if (v.empty()) return v;
  std::map<std::uint32_t, Scalar> acc;
  for (auto& [i, x] : v) {
    if (i >= cols_) throw DimensionMismatch("row index out of range");
    require_same_field(field_, x.field());
    if (!x.is_zero()) acc.emplace(i, std::move(x));
  }
  SparseVector out;
  while (!acc.empty()) {
    auto it = acc.begin();
    const std::uint32_t c = it->first;
    if (!pivot_rows_[c]) {
      out.emplace_back(c, std::move(it->second));
      acc.erase(it);
      continue;
    }
    const Scalar coef = it->second;
    acc.erase(it);
    for (const auto& [j, x] : *pivot_rows_[c]) {
      if (j == c) continue;
      auto [pos, inserted] = acc.try_emplace(j, Scalar::zero(field_));
      pos->second -= coef * x;
      if (pos->second.is_zero()) acc.erase(pos);
    }
  }
  return out;
}

bool SparseEliminator::add_row(SparseVector row) {
  SparseVector r = reduce(std::move(row));
  if (r.empty()) return false;
  const Scalar inv = r.front().second.inverse();
  for (auto& e : r) e.second *= inv;
  const std::uint32_t c = r.front().first;
  pivot_rows_[c] = std::move(r);
  ++rank_;
  fully_reduced_ = false;
  return true;
}

std::vector<std::uint32_t> SparseEliminator::pivot_columns() const {
  std::vector<std::uint32_t> out;
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (pivot_rows_[c]) out.push_back(c);
  }
  return out;
}

std::vector<SparseVector> SparseEliminator::rref_rows() {
  const auto pivots = pivot_columns();
  if (!fully_reduced_) {
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::uint32_t pc = pivots[k];
      const SparseVector& pivot_row = *pivot_rows_[pc];
      for (std::size_t i = 0; i < k; ++i) {
        SparseVector& other = *pivot_rows_[pivots[i]];
        Scalar x = sparse_at(other, pc, field_);
        if (!x.is_zero()) other = axpy(other, -x, pivot_row);
      }
    }
    fully_reduced_ = true;
  }
  std::vector<SparseVector> out;
  out.reserve(pivots.size());
  for (auto pc : pivots) out.push_back(*pivot_rows_[pc]);
  return out;
}

std::vector<SparseVector> SparseEliminator::kernel_basis() {
  const auto rows = rref_rows();
  std::vector<char> is_pivot(cols_, 0);
  for (const auto& r : rows) is_pivot[r.front().first] = 1;
  std::vector<SparseVector> by_free(cols_);
  for (const auto& r : rows) {
    const std::uint32_t pc = r.front().first;
    for (std::size_t k = 1; k < r.size(); ++k) {
      by_free[r[k].first].emplace_back(pc, -r[k].second);
    }
  }
  std::vector<SparseVector> out;
  for (std::uint32_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    SparseVector v = std::move(by_free[c]);
    v.emplace_back(c, Scalar::one(field_));
    std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    out.push_back(std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------

Subspace Subspace::full(std::size_t ambient, Field f) {
  Subspace s(ambient, f);
  for (std::uint32_t i = 0; i < ambient; ++i) {
    s.rows_.push_back({{i, Scalar::one(f)}});
    s.pivots_.push_back(i);
  }
  return s;
}

Subspace Subspace::span(std::size_t ambient, Field f, const std::vector<SparseVector>& rows) {
  SparseEliminator elim(ambient, f);
  for (const auto& r : rows) elim.add_row(r);
  Subspace s(ambient, f);
  s.rows_ = elim.rref_rows();
  s.pivots_ = elim.pivot_columns();
  return s;
}

Subspace Subspace::span_dense(std::size_t ambient, Field f, const std::vector<Vector>& rows) {
  std::vector<SparseVector> sparse;
  sparse.reserve(rows.size());
  for (const auto& r : rows) {
    if (r.size() != ambient) throw DimensionMismatch("spanning vector has wrong length");
    sparse.push_back(to_sparse(r));
  }
  return span(ambient, f, sparse);
}

std::vector<Vector> Subspace::basis() const {
  std::vector<Vector> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(to_dense(r, ambient_, field_));
  return out;
}

Matrix Subspace::basis_matrix() const { return Matrix::from_rows(basis(), ambient_, field_); }

SparseVector Subspace::residual(SparseVector v) const {
  // Rows are fully reduced, so one pass in pivot order suffices.
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Scalar x = sparse_at(v, pivots_[k], field_);
    if (!x.is_zero()) v = axpy(v, -x, rows_[k]);
  }
  return v;
}

Vector Subspace::residual(const Vector& v) const {
  if (v.size() != ambient_) throw DimensionMismatch("vector length does not match ambient dimension");
  return to_dense(residual(to_sparse(v)), ambient_, field_);
}

bool Subspace::contains(const Vector& v) const { return liebider::is_zero(residual(v)); }

bool Subspace::contains(const SparseVector& v) const { return residual(v).empty(); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("ambient dimension mismatch");
  return std::all_of(other.rows_.begin(), other.rows_.end(),
                     [this](const SparseVector& r) { return contains(r); });
}

std::optional<Vector> Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) return std::nullopt;
  Vector c;
  c.reserve(rows_.size());
  for (auto p : pivots_) c.push_back(v[p]);
  return c;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.ambient_ == b.ambient_ && a.field_ == b.field_ && a.rows_ == b.rows_;
}

std::optional<Vector> solve_linear(const Matrix& a, const Vector& b) {
  if (b.size() != a.rows()) throw DimensionMismatch("right-hand side has wrong length");
  Matrix aug(a.rows(), a.cols() + 1, a.field());
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) aug.at(r, c) = a.at(r, c);
    aug.at(r, a.cols()) = b[r];
  }
  const RrefResult red = rref(aug);
  Vector x = zero_vector(a.cols(), a.field());
  for (std::size_t k = 0; k < red.rank; ++k) {
    if (red.pivots[k] == a.cols()) return std::nullopt;
    x[red.pivots[k]] = red.reduced.at(k, a.cols());
  }
  return x;
}

Subspace nullspace(const Matrix& m) {
  const RrefResult r = rref(m);
  std::vector<char> is_pivot(m.cols(), 0);
  for (auto p : r.pivots) is_pivot[p] = 1;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vector v = unit_vector(m.cols(), f, m.field());
    for (std::size_t k = 0; k < r.rank; ++k) v[r.pivots[k]] = -r.reduced.at(k, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span_dense(m.cols(), m.field(), basis);
}

Subspace row_space(const Matrix& m) {
  std::vector<Vector> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return Subspace::span_dense(m.cols(), m.field(), rows);
}

Subspace column_space(const Matrix& m) { return row_space(m.transpose()); }

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (a.ambient() != b.ambient()) throw DimensionMismatch("ambient dimension mismatch");
  require_same_field(a.field(), b.field());
}

std::vector<SparseVector> annihilator(const Subspace& s) {
  SparseEliminator e(s.ambient(), s.field());
  for (const auto& r : s.rows()) e.add_row(r);
  return e.kernel_basis();
}

}  // namespace

Subspace subspace_sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  std::vector<SparseVector> rows = a.rows();
  rows.insert(rows.end(), b.rows().begin(), b.rows().end());
  return Subspace::span(a.ambient(), a.field(), rows);
}

Subspace subspace_intersect(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  SparseEliminator e(a.ambient(), a.field());
  for (auto& r : annihilator(a)) e.add_row(std::move(r));
  for (auto& r : annihilator(b)) e.add_row(std::move(r));
  return Subspace::span(a.ambient(), a.field(), e.kernel_basis());
}

bool subspace_contains(const Subspace& a, const Vector& v) { return a.contains(v); }

Subspace image(const Matrix& map, const Subspace& s) {
  if (map.cols() != s.ambient()) throw DimensionMismatch("map does not match subspace ambient");
  std::vector<Vector> rows;
  for (const auto& b : s.basis()) rows.push_back(map.apply(b));
  return Subspace::span_dense(map.rows(), map.field(), rows);
}

QuotientMaps quotient_with_section(std::size_t ambient, const Subspace& sub) {
  if (sub.ambient() != ambient) throw DimensionMismatch("subspace is not inside the ambient space");
  const Field f = sub.field();
  std::vector<char> is_pivot(ambient, 0);
  for (auto p : sub.pivots()) is_pivot[p] = 1;
  QuotientMaps q;
  std::vector<std::size_t> position(ambient, 0);
  for (std::size_t j = 0; j < ambient; ++j) {
    if (!is_pivot[j]) {
      position[j] = q.complement.size();
      q.complement.push_back(j);
    }
  }
  const std::size_t qdim = q.complement.size();
  q.projection = Matrix(qdim, ambient, f);
  q.section = Matrix(ambient, qdim, f);
  for (std::size_t t = 0; t < qdim; ++t) {
    q.projection.at(t, q.complement[t]) = Scalar::one(f);
    q.section.at(q.complement[t], t) = Scalar::one(f);
  }
  for (std::size_t k = 0; k < sub.dim(); ++k) {
    const std::uint32_t pc = sub.pivots()[k];
    for (const auto& [j, x] : sub.rows()[k]) {
      if (j != pc) q.projection.at(position[j], pc) = -x;
    }
  }
  return q;
}

}  // namespace liebider

namespace liebider {

Combination solve_combination(std::size_t ambient, Field f, const std::vector<SparseVector>& vectors,
                              const SparseVector& target) {
  // Each vector is tagged with a unit coordinate past the ambient range, so the
  // tag part of a reduced row records which inputs it came from.
  const std::size_t k = vectors.size();
  SparseEliminator elim(ambient + k, f);
  for (std::size_t c = 0; c < k; ++c) {
    SparseVector row = vectors[c];
    row.emplace_back(static_cast<std::uint32_t>(ambient + c), Scalar::one(f));
    SparseVector reduced = elim.reduce(row);
    if (reduced.empty() || reduced.front().first >= ambient) continue;
    elim.add_row(std::move(row));
  }
  SparseVector r = elim.reduce(target);
  Combination out;
  out.coeffs = zero_vector(k, f);
  for (const auto& [i, x] : r) {
    if (i < ambient) {
      out.residual.emplace_back(i, x);
    } else {
      out.coeffs[i - ambient] = -x;
    }
  }
  out.solvable = out.residual.empty();
  if (!out.solvable) out.coeffs = zero_vector(k, f);
  return out;
}

}  // namespace liebider
