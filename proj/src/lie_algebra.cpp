#include "liebider/lie_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace liebider {

Degree operator+(const Degree& a, const Degree& b) {
  if (a.size() != b.size()) throw DimensionMismatch("degree arity mismatch");
  Degree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

namespace {

void check_sparse(const SparseVector& v, std::size_t dim, Field f) {
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k].first >= dim) throw Error("coefficient index out of range");
    if (k > 0 && v[k - 1].first >= v[k].first) throw Error("coefficient indices must increase");
    if (v[k].second.is_zero()) throw Error("zero coefficient stored explicitly");
    require_same_field(f, v[k].second.field());
  }
}

SparseVector canonical(SparseVector v) {
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVector out;
  for (auto& e : v) {
    if (!out.empty() && out.back().first == e.first) {
      out.back().second += e.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!e.second.is_zero()) {
      out.push_back(std::move(e));
    }
  }
  return out;
}

/// Accumulates sum_k x_k e_k into a dense vector.
void add_scaled(Vector& out, const Scalar& c, const SparseVector& v) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) out[k] += c * x;
}

SparseVector dense_to_sparse_with_field(const Vector& v) { return to_sparse(v); }

}  // namespace

// ---------------------------------------------------------------------------

LieAlgebra::LieAlgebra(Field field, std::vector<std::string> names, const std::vector<Entry>& brackets,
                       const std::vector<std::pair<std::size_t, std::size_t>>& undefined,
                       std::optional<std::vector<Degree>> degrees)
    : field_(field), names_(std::move(names)), degrees_(std::move(degrees)) {
  const std::size_t n = names_.size();
  table_.assign(n * n, SparseVector{});
  defined_.assign(n * n, 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : brackets) {
    if (e.i >= e.j) throw Error("brackets must be given with i < j");
    if (e.j >= n) throw Error("bracket index out of range");
    if (!seen.insert({e.i, e.j}).second) throw Error("duplicate bracket entry");
    SparseVector c = canonical(e.coeffs);
    check_sparse(c, n, field_);
    table_[e.j * n + e.i] = scaled(c, Scalar(-1, field_));
    table_[e.i * n + e.j] = std::move(c);
  }
  for (auto [i, j] : undefined) {
    if (i >= n || j >= n) throw Error("undefined-bracket index out of range");
    if (i == j) continue;
    if (seen.count({std::min(i, j), std::max(i, j)}) != 0) {
      throw Error("bracket marked undefined but also given");
    }
    defined_[i * n + j] = 0;
    defined_[j * n + i] = 0;
    partial_ = true;
  }
  if (degrees_ && degrees_->size() != n) throw Error("degree list length mismatch");
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw DimensionMismatch("bracket operand length");
  Vector out = zero_vector(dim(), field_);
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (y[j].is_zero() || !defined(i, j)) continue;
      add_scaled(out, x[i] * y[j], bracket(i, j));
    }
  }
  return out;
}

bool LieAlgebra::bracket_defined(const Vector& x, const Vector& y) const {
  if (!partial_) return true;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!y[j].is_zero() && !defined(i, j)) return false;
    }
  }
  return true;
}

const std::vector<Degree>& LieAlgebra::degrees() const {
  if (!degrees_) throw Error("algebra carries no grading");
  return *degrees_;
}

std::vector<std::size_t> LieAlgebra::slice(const Degree& d) const {
  std::vector<std::size_t> out;
  const auto& deg = degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] == d) out.push_back(i);
  }
  return out;
}

bool LieAlgebra::representable(const Degree& d) const {
  if (!partial_) return true;
  return !slice(d).empty();
}

Matrix LieAlgebra::ad(std::size_t i) const {
  Matrix m(dim(), dim(), field_);
  for (std::size_t j = 0; j < dim(); ++j) {
    if (!defined(i, j)) continue;
    for (const auto& [k, x] : bracket(i, j)) m.at(k, j) = x;
  }
  return m;
}

std::vector<LieAlgebra::Entry> LieAlgebra::upper_entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (defined(i, j) && !bracket(i, j).empty()) out.push_back({i, j, bracket(i, j)});
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> LieAlgebra::undefined_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    for (std::size_t j = i + 1; j < dim(); ++j) {
      if (!defined(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

LieAlgebra LieAlgebra::with_field(Field f) const {
  if (f == field_) return *this;
  if (!field_.is_rational()) throw FieldMismatch("can only reduce rational structure constants");
  std::vector<Entry> entries;
  for (const auto& e : upper_entries()) {
    SparseVector c;
    for (const auto& [k, x] : e.coeffs) {
      const mpq_class& q = x.rational();
      const unsigned long p = f.modulus();
      const unsigned long den = mpz_fdiv_ui(q.get_den_mpz_t(), p);
      if (den == 0) throw Error("structure constant denominator divisible by p");
      const unsigned long num = mpz_fdiv_ui(q.get_num_mpz_t(), p);
      Scalar s = Scalar(static_cast<long>(num), f) / Scalar(static_cast<long>(den), f);
      if (!s.is_zero()) c.emplace_back(k, s);
    }
    entries.push_back({e.i, e.j, c});
  }
  return LieAlgebra(f, names_, entries, undefined_pairs(), degrees_);
}

// ---------------------------------------------------------------------------

LModule::LModule(LieAlgebraPtr lie, std::vector<std::string> names, const std::vector<Entry>& action,
                 const std::vector<std::pair<std::size_t, std::size_t>>& undefined,
                 std::optional<std::vector<Degree>> degrees)
    : lie_(std::move(lie)), names_(std::move(names)), degrees_(std::move(degrees)) {
  const std::size_t n = names_.size();
  const std::size_t dl = lie_->dim();
  table_.assign(dl * n, SparseVector{});
  defined_.assign(dl * n, 1);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& e : action) {
    if (e.i >= dl || e.j >= n) throw Error("action index out of range");
    if (!seen.insert({e.i, e.j}).second) throw Error("duplicate action entry");
    SparseVector c = canonical(e.coeffs);
    check_sparse(c, n, field());
    table_[e.i * n + e.j] = std::move(c);
  }
  for (auto [i, j] : undefined) {
    if (i >= dl || j >= n) throw Error("undefined-action index out of range");
    defined_[i * n + j] = 0;
    partial_ = true;
  }
  if (degrees_ && degrees_->size() != n) throw Error("degree list length mismatch");
}

std::vector<std::pair<std::size_t, std::size_t>> LModule::undefined_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < lie_->dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!defined(i, j)) out.emplace_back(i, j);
    }
  }
  return out;
}

LModule LModule::adjoint(LieAlgebraPtr lie) {
  const LieAlgebra& l = *lie;
  std::vector<Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!l.defined(i, j)) {
        undefined.emplace_back(i, j);
      } else if (!l.bracket(i, j).empty()) {
        entries.push_back({i, j, l.bracket(i, j)});
      }
    }
  }
  std::optional<std::vector<Degree>> deg;
  if (l.graded()) deg = l.degrees();
  LModule m(lie, l.names(), entries, undefined, deg);
  m.adjoint_ = true;
  return m;
}

Vector LModule::act(const Vector& x, const Vector& v) const {
  if (x.size() != lie_->dim() || v.size() != dim()) throw DimensionMismatch("action operand length");
  Vector out = zero_vector(dim(), field());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero() || !defined(i, j)) continue;
      add_scaled(out, x[i] * v[j], act(i, j));
    }
  }
  return out;
}

bool LModule::act_defined(const Vector& x, const Vector& v) const {
  if (!partial_) return true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (!v[j].is_zero() && !defined(i, j)) return false;
    }
  }
  return true;
}

const std::vector<Degree>& LModule::degrees() const {
  if (!degrees_) throw Error("module carries no grading");
  return *degrees_;
}

std::vector<std::size_t> LModule::slice(const Degree& d) const {
  std::vector<std::size_t> out;
  const auto& deg = degrees();
  for (std::size_t i = 0; i < deg.size(); ++i) {
    if (deg[i] == d) out.push_back(i);
  }
  return out;
}

bool LModule::representable(const Degree& d) const {
  if (!partial_) return true;
  return !slice(d).empty();
}

std::vector<LModule::Entry> LModule::entries() const {
  std::vector<Entry> out;
  for (std::size_t i = 0; i < lie_->dim(); ++i) {
    for (std::size_t j = 0; j < dim(); ++j) {
      if (defined(i, j) && !act(i, j).empty()) out.push_back({i, j, act(i, j)});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

// Dense accumulator that only clears the entries it touched.
class Accumulator {
 public:
  Accumulator(std::size_t n, Field f) : acc_(zero_vector(n, f)), zero_(Scalar::zero(f)) {}
  void add(const Scalar& c, const SparseVector& v) {
    for (const auto& [k, x] : v) {
      acc_[k] += c * x;
      touched_.push_back(k);
    }
  }
  // true when every touched entry is zero; clears for the next use
  bool take_zero() {
    bool zero = true;
    for (auto k : touched_) {
      if (!acc_[k].is_zero()) zero = false;
      acc_[k] = zero_;
    }
    touched_.clear();
    return zero;
  }

 private:
  Vector acc_;
  Scalar zero_;
  std::vector<std::uint32_t> touched_;
};

}  // namespace

std::vector<Triple> check_jacobi(const LieAlgebra& l) {
  const std::size_t n = l.dim();
  std::vector<Triple> bad;
  Accumulator acc(n, l.field());
  // [[a,b],c] evaluated with in-window semantics; false when [a,b] is undefined.
  auto nested = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (!l.defined(a, b)) return false;
    for (const auto& [k, x] : l.bracket(a, b)) {
      if (!l.defined(k, c)) continue;
      acc.add(x, l.bracket(k, c));
    }
    return true;
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        const bool ok = nested(i, j, k) && nested(j, k, i) && nested(k, i, j);
        if (!acc.take_zero() && ok) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

std::vector<Triple> check_module(const LModule& m) {
  const LieAlgebra& l = m.lie();
  const std::size_t n = m.dim();
  std::vector<Triple> bad;
  Accumulator acc(n, m.field());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!l.defined(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (!m.defined(j, k) || !m.defined(i, k)) continue;
        for (const auto& [c, x] : l.bracket(i, j)) {
          if (m.defined(c, k)) acc.add(x, m.act(c, k));
        }
        for (const auto& [c, x] : m.act(j, k)) {
          if (m.defined(i, c)) acc.add(-x, m.act(i, c));
        }
        for (const auto& [c, x] : m.act(i, k)) {
          if (m.defined(j, c)) acc.add(x, m.act(j, c));
        }
        if (!acc.take_zero()) bad.push_back({i, j, k});
      }
    }
  }
  return bad;
}

namespace {

/// Rows of the system s.v = 0 (unknown v) for each s in `actors`, one row
/// per output coordinate.
Subspace annihilated_by(const LModule& m, const std::vector<Vector>& actors) {
  const std::size_t n = m.dim();
  const Field f = m.field();
  SparseEliminator elim(n, f);
  for (const auto& s : actors) {
    std::vector<SparseVector> rows(n);
    std::vector<std::map<std::uint32_t, Scalar>> acc(n);
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!m.defined(i, j)) continue;
        for (const auto& [k, x] : m.act(i, j)) {
          auto [it, ins] = acc[k].try_emplace(static_cast<std::uint32_t>(j), Scalar::zero(f));
          it->second += s[i] * x;
        }
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      SparseVector row;
      for (auto& [j, x] : acc[k]) {
        if (!x.is_zero()) row.emplace_back(j, x);
      }
      if (!row.empty()) elim.add_row(std::move(row));
    }
  }
  return Subspace::span(n, f, elim.kernel_basis());
}

}  // namespace

Subspace center(const LieAlgebra& l) {
  auto ptr = std::make_shared<const LieAlgebra>(l);
  std::vector<Vector> actors;
  for (std::size_t i = 0; i < l.dim(); ++i) actors.push_back(unit_vector(l.dim(), i, l.field()));
  return annihilated_by(LModule::adjoint(ptr), actors);
}

Subspace derived(const LieAlgebra& l) {
  std::vector<SparseVector> rows;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      if (l.defined(i, j) && !l.bracket(i, j).empty()) rows.push_back(l.bracket(i, j));
    }
  }
  return Subspace::span(l.dim(), l.field(), rows);
}

Subspace bracket_span(const LieAlgebra& l, const Subspace& a, const Subspace& b) {
  std::vector<Vector> rows;
  for (const auto& x : a.basis()) {
    for (const auto& y : b.basis()) rows.push_back(l.bracket(x, y));
  }
  return Subspace::span_dense(l.dim(), l.field(), rows);
}

Subspace centralizer(const LModule& m, const Subspace& s) {
  if (s.ambient() != m.lie().dim()) throw DimensionMismatch("subspace is not inside the algebra");
  return annihilated_by(m, s.basis());
}

bool is_perfect(const LieAlgebra& l) { return derived(l).is_full(); }

bool is_centerless(const LieAlgebra& l) { return center(l).is_zero(); }

namespace {

std::optional<std::vector<Degree>> quotient_degrees(const std::optional<std::vector<Degree>>& degrees,
                                                    const Subspace& kernel,
                                                    const std::vector<std::size_t>& complement) {
  if (!degrees) return std::nullopt;
  for (const auto& row : kernel.rows()) {
    for (const auto& [k, x] : row) {
      if ((*degrees)[k] != (*degrees)[row.front().first]) return std::nullopt;
    }
  }
  std::vector<Degree> out;
  for (auto c : complement) out.push_back((*degrees)[c]);
  return out;
}

}  // namespace

QuotientAlgebra quotient_algebra(const LieAlgebra& l, const Subspace& ideal) {
  if (ideal.ambient() != l.dim()) throw DimensionMismatch("ideal is not inside the algebra");
  const Field f = l.field();
  const std::size_t n = l.dim();
  const auto rows = ideal.basis();
  for (std::size_t i = 0; i < n; ++i) {
    const Vector ei = unit_vector(n, i, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!ideal.contains(l.bracket(ei, rows[r]))) {
        throw NotInvariant("subspace is not an ideal: [" + l.names()[i] + ", row " +
                               std::to_string(r) + "] leaves it",
                           i, r);
      }
    }
  }
  QuotientMaps maps = quotient_with_section(n, ideal);
  const std::size_t q = maps.complement.size();
  std::vector<std::string> names;
  for (auto c : maps.complement) names.push_back(l.names()[c]);
  std::vector<LieAlgebra::Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (std::size_t a = 0; a < q; ++a) {
    for (std::size_t b = a + 1; b < q; ++b) {
      const std::size_t i = maps.complement[a];
      const std::size_t j = maps.complement[b];
      if (!l.defined(i, j)) {
        undefined.emplace_back(a, b);
        continue;
      }
      Vector v = maps.projection.apply(to_dense(l.bracket(i, j), n, f));
      SparseVector c = dense_to_sparse_with_field(v);
      if (!c.empty()) entries.push_back({a, b, std::move(c)});
    }
  }
  std::optional<std::vector<Degree>> deg;
  if (l.graded()) deg = quotient_degrees(l.degrees(), ideal, maps.complement);
  LieAlgebra quotient(f, names, entries, undefined, deg);
  return {l, std::move(quotient), ideal, std::move(maps)};
}

QuotientModule quotient_module(const LModule& m, const Subspace& sub) {
  if (sub.ambient() != m.dim()) throw DimensionMismatch("subspace is not inside the module");
  const Field f = m.field();
  const std::size_t n = m.dim();
  const std::size_t dl = m.lie().dim();
  const auto rows = sub.basis();
  for (std::size_t i = 0; i < dl; ++i) {
    const Vector ei = unit_vector(dl, i, f);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (!sub.contains(m.act(ei, rows[r]))) {
        throw NotInvariant("subspace is not a submodule: " + m.lie().names()[i] + " . row " +
                               std::to_string(r) + " leaves it",
                           i, r);
      }
    }
  }
  QuotientMaps maps = quotient_with_section(n, sub);
  const std::size_t q = maps.complement.size();
  std::vector<std::string> names;
  for (auto c : maps.complement) names.push_back(m.names()[c]);
  std::vector<LModule::Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (std::size_t i = 0; i < dl; ++i) {
    for (std::size_t b = 0; b < q; ++b) {
      const std::size_t j = maps.complement[b];
      if (!m.defined(i, j)) {
        undefined.emplace_back(i, b);
        continue;
      }
      SparseVector c = to_sparse(maps.projection.apply(to_dense(m.act(i, j), n, f)));
      if (!c.empty()) entries.push_back({i, b, std::move(c)});
    }
  }
  std::optional<std::vector<Degree>> deg;
  if (m.graded()) deg = quotient_degrees(m.degrees(), sub, maps.complement);
  LModule quotient(m.lie_ptr(), names, entries, undefined, deg);
  return {m, std::move(quotient), sub, std::move(maps)};
}

Subalgebra subalgebra(const LieAlgebra& l, const Subspace& s) {
  if (s.ambient() != l.dim()) throw DimensionMismatch("subspace is not inside the algebra");
  const Field f = l.field();
  const auto basis = s.basis();
  const std::size_t k = basis.size();
  std::vector<std::string> names;
  for (std::size_t a = 0; a < k; ++a) names.push_back(l.names()[s.pivots()[a]]);
  std::vector<LieAlgebra::Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      if (!l.bracket_defined(basis[a], basis[b])) {
        undefined.emplace_back(a, b);
        continue;
      }
      auto coords = s.coordinates(l.bracket(basis[a], basis[b]));
      if (!coords) throw Error("subspace is not closed under the bracket");
      SparseVector c = to_sparse(*coords);
      if (!c.empty()) entries.push_back({a, b, std::move(c)});
    }
  }
  Matrix inclusion(l.dim(), k, f);
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t r = 0; r < l.dim(); ++r) inclusion.at(r, a) = basis[a][r];
  }
  return {LieAlgebra(f, names, entries, undefined), inclusion};
}

// Catalog --------------------------------------------------------------------

namespace {

SparseVector sv(std::initializer_list<std::pair<std::uint32_t, long>> terms, Field f) {
  SparseVector out;
  for (auto [k, x] : terms) out.emplace_back(k, Scalar(x, f));
  return canonical(out);
}

Matrix unit_matrix(std::size_t n, std::size_t r, std::size_t c, Field f) {
  Matrix m(n, n, f);
  m.at(r, c) = Scalar::one(f);
  return m;
}

Matrix add(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) += b.at(r, c);
  }
  return out;
}

Matrix sub(const Matrix& a, const Matrix& b) {
  Matrix out = a;
  for (std::size_t r = 0; r < a.rows(); ++r) {
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) -= b.at(r, c);
  }
  return out;
}

Vector flatten(const Matrix& m) {
  Vector out;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(m.at(r, c));
  }
  return out;
}

}  // namespace

LieAlgebra sl2(Field f) {
  // [e,f] = h, [h,e] = 2e, [h,f] = -2f.
  return LieAlgebra(f, {"e", "f", "h"},
                    {{0, 1, sv({{2, 1}}, f)}, {0, 2, sv({{0, -2}}, f)}, {1, 2, sv({{1, 2}}, f)}});
}

LieAlgebra heisenberg(Field f) { return LieAlgebra(f, {"x", "y", "z"}, {{0, 1, sv({{2, 1}}, f)}}); }

LieAlgebra abelian(std::size_t n, Field f) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieAlgebra(f, names, {});
}

LieAlgebra nonabelian2(Field f) { return LieAlgebra(f, {"e1", "e2"}, {{0, 1, sv({{1, 1}}, f)}}); }

LieAlgebra matrix_lie_algebra(const std::vector<Matrix>& basis, std::vector<std::string> names) {
  if (basis.empty()) throw Error("empty matrix basis");
  const Field f = basis.front().field();
  const std::size_t k = basis.size();
  const std::size_t flat = basis.front().rows() * basis.front().cols();
  Matrix columns(flat, k, f);
  for (std::size_t a = 0; a < k; ++a) {
    const Vector v = flatten(basis[a]);
    for (std::size_t r = 0; r < flat; ++r) columns.at(r, a) = v[r];
  }
  if (rref(columns).rank != k) throw Error("matrix basis is linearly dependent");
  std::vector<LieAlgebra::Entry> entries;
  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a + 1; b < k; ++b) {
      const Matrix comm = sub(basis[a] * basis[b], basis[b] * basis[a]);
      auto coords = solve_linear(columns, flatten(comm));
      if (!coords) throw Error("matrix span is not closed under the commutator");
      SparseVector c = to_sparse(*coords);
      if (!c.empty()) entries.push_back({a, b, std::move(c)});
    }
  }
  return LieAlgebra(f, std::move(names), entries);
}

LieAlgebra example_3_4(Field f) {
  auto e = [f](std::size_t r, std::size_t c) { return unit_matrix(4, r - 1, c - 1, f); };
  return matrix_lie_algebra({add(e(1, 1), e(2, 2)), e(1, 2), e(1, 3), e(1, 4), e(2, 4), e(3, 4)},
                            {"x11", "x12", "x13", "x14", "x24", "x34"});
}

LieAlgebra sl2_plane_extension(Field f) {
  auto e = [f](std::size_t r, std::size_t c) { return unit_matrix(3, r - 1, c - 1, f); };
  return matrix_lie_algebra({e(1, 2), e(2, 1), sub(e(1, 1), e(2, 2)), e(1, 3), e(2, 3), add(e(1, 1), e(2, 2))},
                            {"e", "f", "h", "v1", "v2", "d"});
}

LieAlgebra current_algebra(const LieAlgebra& g, std::size_t n) {
  if (n < 1) throw Error("current algebra needs n >= 1");
  if (g.is_partial()) throw Error("current algebra needs a complete base algebra");
  const std::size_t dg = g.dim();
  const std::size_t top = 2 * n;
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (std::size_t k = 1; k <= top; ++k) {
    for (std::size_t a = 0; a < dg; ++a) {
      names.push_back(g.names()[a] + "*t^" + std::to_string(k));
      degrees.push_back({static_cast<int>(k)});
    }
  }
  std::vector<LieAlgebra::Entry> entries;
  const std::size_t total = dg * top;
  for (std::size_t x = 0; x < total; ++x) {
    for (std::size_t y = x + 1; y < total; ++y) {
      const std::size_t i = x / dg + 1;
      const std::size_t j = y / dg + 1;
      if (i + j > top) continue;
      const SparseVector& c = g.bracket(x % dg, y % dg);
      if (c.empty()) continue;
      SparseVector shifted;
      for (const auto& [k, v] : c) {
        shifted.emplace_back(static_cast<std::uint32_t>((i + j - 1) * dg + k), v);
      }
      entries.push_back({x, y, shifted});
    }
  }
  return LieAlgebra(g.field(), names, entries, {}, degrees);
}

std::optional<LieAlgebra> catalog(const std::string& name, Field f) {
  if (name == "sl2") return sl2(f);
  if (name == "heisenberg") return heisenberg(f);
  if (name == "nonabelian2") return nonabelian2(f);
  if (name == "example_3_4") return example_3_4(f);
  if (name == "sl2_plane_extension") return sl2_plane_extension(f);
  auto number_after = [&](const std::string& prefix) -> std::optional<std::size_t> {
    if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) return std::nullopt;
    const std::string rest = name.substr(prefix.size());
    if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(std::stoul(rest));
  };
  if (auto n = number_after("abelian")) return abelian(*n, f);
  if (auto n = number_after("current_sl2_"); n && *n >= 1) return current_algebra(sl2(f), *n);
  return std::nullopt;
}

std::vector<std::string> catalog_names() {
  return {"sl2", "heisenberg", "abelianN", "nonabelian2", "example_3_4", "sl2_plane_extension",
          "current_sl2_N"};
}

}  // namespace liebider
