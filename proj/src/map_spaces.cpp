#include "liebider/map_spaces.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace liebider {

namespace {

void require_known_shape(const LinearMap& f, const LModule& m) {
  if (f.src != m.lie().dim() || f.tgt != m.dim()) throw DimensionMismatch("linear map does not match module");
  require_same_field(f.field, m.field());
}

void require_known_shape(const BilinearMap& d, const LModule& m) {
  if (d.src != m.lie().dim() || d.tgt != m.dim()) throw DimensionMismatch("bilinear map does not match module");
  require_same_field(d.field, m.field());
}

SparseVector sparse_sum(std::map<std::uint32_t, Scalar>& acc) {
  SparseVector out;
  for (auto& [k, x] : acc) {
    if (!x.is_zero()) out.emplace_back(k, std::move(x));
  }
  return out;
}

void accumulate(std::map<std::uint32_t, Scalar>& acc, const Scalar& c, const SparseVector& v, Field f) {
  if (c.is_zero()) return;
  for (const auto& [k, x] : v) {
    auto [it, ins] = acc.try_emplace(k, Scalar::zero(f));
    it->second += c * x;
  }
}

// Sparse evaluation with window semantics: nullopt when any basis term
// actually used is undefined.

std::optional<SparseVector> act_opt(const LModule& m, const SparseVector& x, const SparseVector& v) {
  std::map<std::uint32_t, Scalar> acc;
  for (const auto& [i, a] : x) {
    for (const auto& [j, b] : v) {
      if (!m.defined(i, j)) return std::nullopt;
      accumulate(acc, a * b, m.act(i, j), m.field());
    }
  }
  return sparse_sum(acc);
}

/// Sparse views of a concrete map, with unknown blocks left as nullopt.
struct SparseLinear {
  std::vector<std::optional<SparseVector>> images;
  Field field;

  explicit SparseLinear(const LinearMap& f) : field(f.field) {
    for (std::size_t i = 0; i < f.src; ++i) {
      if (f.is_known(i)) {
        images.emplace_back(to_sparse(f.images[i]));
      } else {
        images.emplace_back(std::nullopt);
      }
    }
  }

  std::optional<SparseVector> apply(const SparseVector& x) const {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [i, a] : x) {
      if (!images[i]) return std::nullopt;
      accumulate(acc, a, *images[i], field);
    }
    return sparse_sum(acc);
  }
};

struct SparseBilinear {
  std::size_t n;
  std::vector<std::optional<SparseVector>> values;
  Field field;

  explicit SparseBilinear(const BilinearMap& d) : n(d.src), field(d.field) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d.is_known(i, j)) {
          values.emplace_back(to_sparse(d.at(i, j)));
        } else {
          values.emplace_back(std::nullopt);
        }
      }
    }
  }

  const std::optional<SparseVector>& at(std::size_t i, std::size_t j) const { return values[i * n + j]; }

  std::optional<SparseVector> apply(const SparseVector& x, const SparseVector& y) const {
    std::map<std::uint32_t, Scalar> acc;
    for (const auto& [i, a] : x) {
      for (const auto& [j, b] : y) {
        const auto& v = at(i, j);
        if (!v) return std::nullopt;
        accumulate(acc, a * b, *v, field);
      }
    }
    return sparse_sum(acc);
  }
};

SparseVector unit(std::size_t i, Field f) { return {{static_cast<std::uint32_t>(i), Scalar::one(f)}}; }

SparseVector minus(const SparseVector& a, const SparseVector& b, Field f) { return axpy(a, Scalar(-1, f), b); }

// Constraint engine ------------------------------------------------------------

/// Unknown layout: blocks of target coordinates, compressed by a support.
class Layout {
 public:
  Layout(std::size_t blocks, std::size_t tgt, const BlockSupport& support) : tgt_(tgt) {
    if (!support.empty() && support.size() != blocks) throw Error("block support has wrong length");
    targets_.resize(blocks);
    representable_.assign(blocks, 1);
    offset_.resize(blocks + 1, 0);
    for (std::size_t b = 0; b < blocks; ++b) {
      if (support.empty()) {
        targets_[b].resize(tgt);
        std::iota(targets_[b].begin(), targets_[b].end(), 0);
      } else if (!support[b]) {
        representable_[b] = 0;
      } else {
        targets_[b] = *support[b];
        std::sort(targets_[b].begin(), targets_[b].end());
        targets_[b].erase(std::unique(targets_[b].begin(), targets_[b].end()), targets_[b].end());
        for (auto t : targets_[b]) {
          if (t >= tgt) throw Error("block support index out of range");
        }
      }
      offset_[b + 1] = offset_[b] + targets_[b].size();
    }
  }

  std::size_t blocks() const { return targets_.size(); }
  std::size_t unknowns() const { return offset_.back(); }
  bool representable(std::size_t b) const { return representable_[b] != 0; }
  const std::vector<std::size_t>& targets(std::size_t b) const { return targets_[b]; }
  std::size_t offset(std::size_t b) const { return offset_[b]; }

  /// Expands a compressed vector to the full coefficient layout.
  SparseVector expand(const SparseVector& v) const {
    SparseVector out;
    out.reserve(v.size());
    std::size_t b = 0;
    for (const auto& [idx, x] : v) {
      while (offset_[b + 1] <= idx) ++b;
      const std::size_t t = targets_[b][idx - offset_[b]];
      out.emplace_back(static_cast<std::uint32_t>(b * tgt_ + t), x);
    }
    return out;
  }

 private:
  std::size_t tgt_;
  std::vector<std::vector<std::size_t>> targets_;
  std::vector<char> representable_;
  std::vector<std::size_t> offset_;
};

/// A block reference with a sign (skew maps read delta(e_b, e_a) as -delta(e_a, e_b)).
struct BlockRef {
  std::optional<std::size_t> block;  // nullopt: identically zero
  int sign = 1;
};

BlockRef bilinear_block(std::size_t a, std::size_t b, std::size_t n, Symmetry s) {
  if (s == Symmetry::Skew) {
    if (a == b) return {std::nullopt, 1};
    if (a < b) return {pair_index(a, b, n, s), 1};
    return {pair_index(b, a, n, s), -1};
  }
  return {pair_index(std::min(a, b), std::max(a, b), n, s), 1};
}

/// One identity instance, accumulated as tgt rows over compressed unknowns.
class Instance {
 public:
  Instance(const Layout& layout, const LModule& m) : layout_(layout), m_(m), acc_(m.dim()) {}

  bool skipped() const { return skip_; }

  /// += c * X(block)
  void value(const BlockRef& ref, const Scalar& c) {
    if (skip_ || !ref.block || c.is_zero()) return;
    const std::size_t b = *ref.block;
    if (!layout_.representable(b)) {
      skip_ = true;
      return;
    }
    const Scalar s = ref.sign > 0 ? c : -c;
    const auto& ts = layout_.targets(b);
    for (std::size_t p = 0; p < ts.size(); ++p) add(ts[p], layout_.offset(b) + p, s);
  }

  /// += c * e_i . X(block)
  void action(std::size_t i, const BlockRef& ref, const Scalar& c) {
    if (skip_ || !ref.block || c.is_zero()) return;
    const std::size_t b = *ref.block;
    if (!layout_.representable(b)) {
      skip_ = true;
      return;
    }
    const Scalar s = ref.sign > 0 ? c : -c;
    const auto& ts = layout_.targets(b);
    for (std::size_t p = 0; p < ts.size(); ++p) {
      if (!m_.defined(i, ts[p])) {
        skip_ = true;
        return;
      }
    }
    for (std::size_t p = 0; p < ts.size(); ++p) {
      for (const auto& [k, x] : m_.act(i, ts[p])) add(k, layout_.offset(b) + p, s * x);
    }
  }

  /// += c * (raw unknown row): coefficient c on target t of block b.
  void raw(std::size_t out, std::size_t b, std::size_t t, const Scalar& c) {
    if (skip_ || c.is_zero()) return;
    if (!layout_.representable(b)) {
      skip_ = true;
      return;
    }
    const auto& ts = layout_.targets(b);
    auto it = std::lower_bound(ts.begin(), ts.end(), t);
    if (it == ts.end() || *it != t) return;
    add(out, layout_.offset(b) + static_cast<std::size_t>(it - ts.begin()), c);
  }

  void emit(SparseEliminator& elim) {
    if (skip_) return;
    for (auto& row : acc_) {
      SparseVector r = sparse_sum(row);
      if (!r.empty()) elim.add_row(std::move(r));
    }
  }

 private:
  void add(std::size_t out, std::size_t unknown, const Scalar& c) {
    auto [it, ins] = acc_[out].try_emplace(static_cast<std::uint32_t>(unknown), Scalar::zero(m_.field()));
    it->second += c;
  }

  const Layout& layout_;
  const LModule& m_;
  std::vector<std::map<std::uint32_t, Scalar>> acc_;
  bool skip_ = false;
};

BlockRef linear_block(std::size_t i) { return {i, 1}; }

Subspace solved(const Layout& layout, SparseEliminator& elim, std::size_t ambient, Field f) {
  std::vector<SparseVector> rows;
  for (const auto& k : elim.kernel_basis()) rows.push_back(layout.expand(k));
  return Subspace::span(ambient, f, rows);
}

// Identity generators; each feeds one eliminator.

void centroid_rows(const LModule& m, const Layout& layout, SparseEliminator& elim) {
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!l.defined(i, j)) continue;
      Instance inst(layout, m);
      for (const auto& [c, x] : l.bracket(i, j)) inst.value(linear_block(c), x);
      inst.action(i, linear_block(j), Scalar(-1, f));
      inst.emit(elim);
    }
  }
}

void derivation_rows(const LModule& m, const Layout& layout, SparseEliminator& elim) {
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      if (!l.defined(i, j)) continue;
      Instance inst(layout, m);
      for (const auto& [c, x] : l.bracket(i, j)) inst.value(linear_block(c), x);
      inst.action(i, linear_block(j), Scalar(-1, f));
      inst.action(j, linear_block(i), Scalar(1, f));
      inst.emit(elim);
    }
  }
}

void commuting_rows(const LModule& m, const Layout& layout, SparseEliminator& elim) {
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i; j < l.dim(); ++j) {
      Instance inst(layout, m);
      inst.action(i, linear_block(j), Scalar::one(f));
      if (i != j) inst.action(j, linear_block(i), Scalar::one(f));
      inst.emit(elim);
    }
  }
}

void biderivation_rows(const LModule& m, Symmetry s, const Layout& layout, SparseEliminator& elim) {
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  const std::size_t n = l.dim();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (!l.defined(i, j)) continue;
      for (std::size_t k = 0; k < n; ++k) {
        Instance inst(layout, m);
        for (const auto& [c, x] : l.bracket(i, j)) inst.value(bilinear_block(c, k, n, s), x);
        inst.action(i, bilinear_block(j, k, n, s), Scalar(-1, f));
        inst.action(j, bilinear_block(i, k, n, s), Scalar(1, f));
        inst.emit(elim);
      }
    }
  }
}

/// Rows forcing every block value into the subspace `range`.
void range_rows(const Subspace& range, const Layout& layout, const LModule& m, SparseEliminator& elim) {
  SparseEliminator a(range.ambient(), range.field());
  for (const auto& r : range.rows()) a.add_row(r);
  const auto annihilator = a.kernel_basis();
  for (std::size_t b = 0; b < layout.blocks(); ++b) {
    for (const auto& row : annihilator) {
      Instance inst(layout, m);
      for (const auto& [t, x] : row) inst.raw(0, b, t, x);
      inst.emit(elim);
    }
  }
}

LinearMapSpace linear_space(std::string name, const LModule& m, Subspace s) {
  return {std::move(name), m.lie().dim(), m.dim(), std::move(s)};
}

BilinearMapSpace bilinear_space(std::string name, const LModule& m, Symmetry sym, Subspace s) {
  return {std::move(name), m.lie().dim(), m.dim(), sym, std::move(s)};
}

template <typename Gen>
LinearMapSpace solve_linear_space(std::string name, const LModule& m, const BlockSupport& support, Gen gen) {
  const std::size_t n = m.lie().dim();
  Layout layout(n, m.dim(), support);
  SparseEliminator elim(layout.unknowns(), m.field());
  gen(layout, elim);
  return linear_space(std::move(name), m, solved(layout, elim, n * m.dim(), m.field()));
}

template <typename Gen>
BilinearMapSpace solve_bilinear_space(std::string name, const LModule& m, Symmetry s, const BlockSupport& support,
                                      Gen gen) {
  const std::size_t n = m.lie().dim();
  const std::size_t blocks = pair_count(n, s);
  Layout layout(blocks, m.dim(), support);
  SparseEliminator elim(layout.unknowns(), m.field());
  gen(layout, elim);
  return bilinear_space(std::move(name), m, s, solved(layout, elim, blocks * m.dim(), m.field()));
}

}  // namespace

// LinearMap ------------------------------------------------------------------

LinearMap LinearMap::zero(std::size_t src, std::size_t tgt, Field f) {
  return {src, tgt, f, std::vector<Vector>(src, zero_vector(tgt, f)), {}};
}

LinearMap LinearMap::identity(std::size_t n, Field f) {
  LinearMap out = zero(n, n, f);
  for (std::size_t i = 0; i < n; ++i) out.images[i][i] = Scalar::one(f);
  return out;
}

LinearMap LinearMap::from_matrix(const Matrix& m) {
  LinearMap out = zero(m.cols(), m.rows(), m.field());
  for (std::size_t i = 0; i < m.cols(); ++i) out.images[i] = m.column(i);
  return out;
}

Vector LinearMap::apply(const Vector& x) const {
  Vector out = zero_vector(tgt, field);
  for (std::size_t i = 0; i < src; ++i) {
    if (x[i].is_zero() || !is_known(i)) continue;
    for (std::size_t k = 0; k < tgt; ++k) out[k] += x[i] * images[i][k];
  }
  return out;
}

Vector LinearMap::coeffs() const {
  Vector out;
  out.reserve(src * tgt);
  for (std::size_t i = 0; i < src; ++i) {
    for (std::size_t k = 0; k < tgt; ++k) out.push_back(is_known(i) ? images[i][k] : Scalar::zero(field));
  }
  return out;
}

LinearMap LinearMap::from_coeffs(const Vector& c, std::size_t src, std::size_t tgt, Field f) {
  if (c.size() != src * tgt) throw DimensionMismatch("coefficient vector has wrong length");
  LinearMap out = zero(src, tgt, f);
  for (std::size_t i = 0; i < src; ++i) {
    for (std::size_t k = 0; k < tgt; ++k) out.images[i][k] = c[i * tgt + k];
  }
  return out;
}

LinearMap operator+(const LinearMap& a, const LinearMap& b) {
  LinearMap out = a;
  for (std::size_t i = 0; i < a.src; ++i) out.images[i] = a.images[i] + b.images[i];
  if (!b.known.empty()) {
    if (out.known.empty()) out.known.assign(a.src, 1);
    for (std::size_t i = 0; i < a.src; ++i) out.known[i] = out.known[i] && b.known[i];
  }
  return out;
}

LinearMap operator*(const Scalar& c, const LinearMap& a) {
  LinearMap out = a;
  for (auto& v : out.images) v = c * v;
  return out;
}

LinearMap operator-(const LinearMap& a, const LinearMap& b) { return a + Scalar(-1, b.field) * b; }

bool operator==(const LinearMap& a, const LinearMap& b) {
  return a.src == b.src && a.tgt == b.tgt && a.coeffs() == b.coeffs();
}

// BilinearMap ----------------------------------------------------------------

BilinearMap BilinearMap::zero(std::size_t src, std::size_t tgt, Field f) {
  return {src, tgt, f, std::vector<Vector>(src * src, zero_vector(tgt, f)), {}};
}

BilinearMap BilinearMap::bracket(const LieAlgebra& l) {
  BilinearMap out = zero(l.dim(), l.dim(), l.field());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!l.defined(i, j)) {
        out.set_unknown(i, j);
      } else {
        out.at(i, j) = to_dense(l.bracket(i, j), l.dim(), l.field());
      }
    }
  }
  return out;
}

void BilinearMap::set_unknown(std::size_t i, std::size_t j) {
  if (known.empty()) known.assign(src * src, 1);
  known[i * src + j] = 0;
  values[i * src + j] = zero_vector(tgt, field);
}

Vector BilinearMap::apply(const Vector& x, const Vector& y) const {
  Vector out = zero_vector(tgt, field);
  for (std::size_t i = 0; i < src; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < src; ++j) {
      if (y[j].is_zero() || !is_known(i, j)) continue;
      const Scalar c = x[i] * y[j];
      for (std::size_t k = 0; k < tgt; ++k) out[k] += c * at(i, j)[k];
    }
  }
  return out;
}

bool BilinearMap::is_skew() const {
  for (std::size_t i = 0; i < src; ++i) {
    if (is_known(i, i) && !liebider::is_zero(at(i, i))) return false;
    for (std::size_t j = i + 1; j < src; ++j) {
      if (is_known(i, j) != is_known(j, i)) return false;
      if (at(i, j) + at(j, i) != zero_vector(tgt, field)) return false;
    }
  }
  return true;
}

bool BilinearMap::is_symmetric() const {
  for (std::size_t i = 0; i < src; ++i) {
    for (std::size_t j = i + 1; j < src; ++j) {
      if (is_known(i, j) != is_known(j, i) || at(i, j) != at(j, i)) return false;
    }
  }
  return true;
}

Vector BilinearMap::coeffs(Symmetry s) const {
  Vector out;
  for (auto [i, j] : pair_list(src, s)) {
    for (std::size_t k = 0; k < tgt; ++k) out.push_back(is_known(i, j) ? at(i, j)[k] : Scalar::zero(field));
  }
  return out;
}

BilinearMap BilinearMap::from_coeffs(const Vector& c, Symmetry s, std::size_t src, std::size_t tgt, Field f) {
  if (c.size() != pair_count(src, s) * tgt) throw DimensionMismatch("coefficient vector has wrong length");
  BilinearMap out = zero(src, tgt, f);
  std::size_t p = 0;
  for (auto [i, j] : pair_list(src, s)) {
    for (std::size_t k = 0; k < tgt; ++k) {
      const Scalar& x = c[p * tgt + k];
      out.at(i, j)[k] = x;
      out.at(j, i)[k] = s == Symmetry::Skew ? -x : x;
    }
    ++p;
  }
  return out;
}

BilinearMap operator+(const BilinearMap& a, const BilinearMap& b) {
  BilinearMap out = a;
  for (std::size_t p = 0; p < a.values.size(); ++p) out.values[p] = a.values[p] + b.values[p];
  if (!b.known.empty()) {
    if (out.known.empty()) out.known.assign(a.values.size(), 1);
    for (std::size_t p = 0; p < a.values.size(); ++p) out.known[p] = out.known[p] && b.known[p];
  }
  return out;
}

BilinearMap operator*(const Scalar& c, const BilinearMap& a) {
  BilinearMap out = a;
  for (auto& v : out.values) v = c * v;
  return out;
}

BilinearMap operator-(const BilinearMap& a, const BilinearMap& b) { return a + Scalar(-1, b.field) * b; }

bool operator==(const BilinearMap& a, const BilinearMap& b) {
  return a.src == b.src && a.tgt == b.tgt && a.values == b.values && a.known == b.known;
}

std::size_t pair_count(std::size_t n, Symmetry s) {
  return s == Symmetry::Skew ? n * (n - (n > 0 ? 1 : 0)) / 2 : n * (n + 1) / 2;
}

std::size_t pair_index(std::size_t i, std::size_t j, std::size_t n, Symmetry s) {
  if (s == Symmetry::Skew) {
    if (i >= j) throw Error("skew pair index needs i < j");
    // pairs (a, b) with a < i come first: sum_{a<i} (n - 1 - a)
    return i * (2 * n - i - 1) / 2 + (j - i - 1);
  }
  if (i > j) throw Error("symmetric pair index needs i <= j");
  return i * (2 * n - i + 1) / 2 + (j - i);
}

std::vector<std::pair<std::size_t, std::size_t>> pair_list(std::size_t n, Symmetry s) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = s == Symmetry::Skew ? i + 1 : i; j < n; ++j) out.emplace_back(i, j);
  }
  return out;
}

// Spaces ---------------------------------------------------------------------

std::vector<LinearMap> LinearMapSpace::basis() const {
  std::vector<LinearMap> out;
  for (const auto& v : coeffs.basis()) out.push_back(LinearMap::from_coeffs(v, src, tgt, coeffs.field()));
  return out;
}

LinearMap LinearMapSpace::element(const Vector& coords) const {
  Vector v = zero_vector(src * tgt, coeffs.field());
  const auto b = coeffs.basis();
  if (coords.size() != b.size()) throw DimensionMismatch("coordinate vector has wrong length");
  for (std::size_t k = 0; k < b.size(); ++k) v = v + coords[k] * b[k];
  return LinearMap::from_coeffs(v, src, tgt, coeffs.field());
}

std::vector<BilinearMap> BilinearMapSpace::basis() const {
  std::vector<BilinearMap> out;
  for (const auto& v : coeffs.basis()) {
    out.push_back(BilinearMap::from_coeffs(v, symmetry, src, tgt, coeffs.field()));
  }
  return out;
}

bool BilinearMapSpace::contains(const BilinearMap& d) const {
  if (symmetry == Symmetry::Skew ? !d.is_skew() : !d.is_symmetric()) return false;
  return coeffs.contains(d.coeffs(symmetry));
}

LinearMapSpace operator+(const LinearMapSpace& a, const LinearMapSpace& b) {
  return {a.name + "+" + b.name, a.src, a.tgt, subspace_sum(a.coeffs, b.coeffs)};
}

BilinearMapSpace operator+(const BilinearMapSpace& a, const BilinearMapSpace& b) {
  if (a.symmetry != b.symmetry) throw Error("cannot add spaces of different symmetry");
  return {a.name + "+" + b.name, a.src, a.tgt, a.symmetry, subspace_sum(a.coeffs, b.coeffs)};
}

bool operator==(const LinearMapSpace& a, const LinearMapSpace& b) {
  return a.src == b.src && a.tgt == b.tgt && a.coeffs == b.coeffs;
}

bool operator==(const BilinearMapSpace& a, const BilinearMapSpace& b) {
  return a.src == b.src && a.tgt == b.tgt && a.symmetry == b.symmetry && a.coeffs == b.coeffs;
}

// Solvers --------------------------------------------------------------------

LinearMapSpace centroid(const LModule& m, const BlockSupport& support) {
  return solve_linear_space("centroid", m, support,
                            [&](const Layout& layout, SparseEliminator& e) { centroid_rows(m, layout, e); });
}

LinearMapSpace derivations(const LModule& m, const BlockSupport& support) {
  return solve_linear_space("derivations", m, support,
                            [&](const Layout& layout, SparseEliminator& e) { derivation_rows(m, layout, e); });
}

LinearMapSpace commuting_maps(const LModule& m, const BlockSupport& support) {
  return solve_linear_space("commuting", m, support,
                            [&](const Layout& layout, SparseEliminator& e) { commuting_rows(m, layout, e); });
}

LinearMapSpace central_maps(const LModule& m) {
  const Subspace z = centralizer(m, Subspace::full(m.lie().dim(), m.field()));
  return solve_linear_space("central", m, {},
                            [&](const Layout& layout, SparseEliminator& e) { range_rows(z, layout, m, e); });
}

LinearMapSpace special_commuting_maps(const LModule& m) {
  const LieAlgebra& l = m.lie();
  const Subspace d = derived(l);
  const Subspace z = centralizer(m, d);
  return solve_linear_space("special-commuting", m, {}, [&](const Layout& layout, SparseEliminator& e) {
    commuting_rows(m, layout, e);
    range_rows(z, layout, m, e);
    // f(L') = 0
    for (const auto& row : d.rows()) {
      for (std::size_t k = 0; k < m.dim(); ++k) {
        Instance inst(layout, m);
        for (const auto& [i, x] : row) inst.raw(0, i, k, x);
        inst.emit(e);
      }
    }
  });
}

BilinearMapSpace skew_biderivations(const LModule& m, const BlockSupport& support) {
  return solve_bilinear_space("skew-bider", m, Symmetry::Skew, support,
                              [&](const Layout& layout, SparseEliminator& e) {
                                biderivation_rows(m, Symmetry::Skew, layout, e);
                              });
}

BilinearMapSpace symmetric_biderivations(const LModule& m, const BlockSupport& support) {
  return solve_bilinear_space("symmetric-bider", m, Symmetry::Symmetric, support,
                              [&](const Layout& layout, SparseEliminator& e) {
                                biderivation_rows(m, Symmetry::Symmetric, layout, e);
                              });
}

namespace {

/// Rows forcing delta(u, v) = 0 for u in a, v in b (given by sparse rows).
void vanish_rows(const LModule& m, const std::vector<SparseVector>& a, const std::vector<SparseVector>& b,
                 const Layout& layout, SparseEliminator& e) {
  const std::size_t n = m.lie().dim();
  for (const auto& u : a) {
    for (const auto& v : b) {
      Instance inst(layout, m);
      for (const auto& [i, x] : u) {
        for (const auto& [j, y] : v) inst.value(bilinear_block(i, j, n, Symmetry::Skew), x * y);
      }
      inst.emit(e);
    }
  }
}

std::vector<SparseVector> unit_rows(std::size_t n, Field f) {
  std::vector<SparseVector> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(unit(i, f));
  return out;
}

}  // namespace

BilinearMapSpace trivial_biderivations(const LModule& m) {
  const LieAlgebra& l = m.lie();
  const Subspace z = centralizer(m, Subspace::full(l.dim(), m.field()));
  const Subspace d = derived(l);
  return solve_bilinear_space("trivial-bider", m, Symmetry::Skew, {},
                              [&](const Layout& layout, SparseEliminator& e) {
                                range_rows(z, layout, m, e);
                                vanish_rows(m, unit_rows(l.dim(), m.field()), d.rows(), layout, e);
                              });
}

BilinearMapSpace special_biderivations(const LModule& m) {
  const LieAlgebra& l = m.lie();
  const Subspace d = derived(l);
  const Subspace z = centralizer(m, d);
  return solve_bilinear_space("special-bider", m, Symmetry::Skew, {},
                              [&](const Layout& layout, SparseEliminator& e) {
                                biderivation_rows(m, Symmetry::Skew, layout, e);
                                range_rows(z, layout, m, e);
                                vanish_rows(m, d.rows(), d.rows(), layout, e);
                              });
}

// Direct evaluation ----------------------------------------------------------

bool is_centroid_element(const LModule& m, const LinearMap& g) {
  require_known_shape(g, m);
  const LieAlgebra& l = m.lie();
  const SparseLinear s(g);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (!l.defined(i, j) || !s.images[j]) continue;
      auto lhs = s.apply(l.bracket(i, j));
      auto rhs = act_opt(m, unit(i, m.field()), *s.images[j]);
      if (!lhs || !rhs) continue;
      if (*lhs != *rhs) return false;
    }
  }
  return true;
}

bool is_derivation(const LModule& m, const LinearMap& d) {
  require_known_shape(d, m);
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  const SparseLinear s(d);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      if (!l.defined(i, j) || !s.images[i] || !s.images[j]) continue;
      auto lhs = s.apply(l.bracket(i, j));
      auto a = act_opt(m, unit(i, f), *s.images[j]);
      auto b = act_opt(m, unit(j, f), *s.images[i]);
      if (!lhs || !a || !b) continue;
      if (*lhs != minus(*a, *b, f)) return false;
    }
  }
  return true;
}

bool is_commuting(const LModule& m, const LinearMap& fm) {
  require_known_shape(fm, m);
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  const SparseLinear s(fm);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i; j < l.dim(); ++j) {
      if (!s.images[i] || !s.images[j]) continue;
      auto a = act_opt(m, unit(i, f), *s.images[j]);
      auto b = act_opt(m, unit(j, f), *s.images[i]);
      if (!a || !b) continue;
      if (!(i == j ? a->empty() : axpy(*a, Scalar::one(f), *b).empty())) return false;
    }
  }
  return true;
}

namespace {

bool first_slot_derivation(const LModule& m, const BilinearMap& d) {
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  const SparseBilinear s(d);
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = i + 1; j < l.dim(); ++j) {
      if (!l.defined(i, j)) continue;
      for (std::size_t k = 0; k < l.dim(); ++k) {
        auto lhs = s.apply(l.bracket(i, j), unit(k, f));
        if (!lhs || !s.at(j, k) || !s.at(i, k)) continue;
        auto a = act_opt(m, unit(i, f), *s.at(j, k));
        auto b = act_opt(m, unit(j, f), *s.at(i, k));
        if (!a || !b) continue;
        if (*lhs != minus(*a, *b, f)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool is_skew_biderivation(const LModule& m, const BilinearMap& d) {
  require_known_shape(d, m);
  return d.is_skew() && first_slot_derivation(m, d);
}

bool is_symmetric_biderivation(const LModule& m, const BilinearMap& d) {
  require_known_shape(d, m);
  return d.is_symmetric() && first_slot_derivation(m, d);
}

// Constructions ----------------------------------------------------------------

BilinearMap from_centroid(const LModule& m, const LinearMap& gamma) {
  require_known_shape(gamma, m);
  if (!is_centroid_element(m, gamma)) throw Error("map is not in the centroid");
  const LieAlgebra& l = m.lie();
  const SparseLinear s(gamma);
  BilinearMap out = BilinearMap::zero(l.dim(), m.dim(), m.field());
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      auto v = l.defined(i, j) ? s.apply(l.bracket(i, j)) : std::nullopt;
      if (!v) {
        out.set_unknown(i, j);
      } else {
        out.at(i, j) = to_dense(*v, m.dim(), m.field());
      }
    }
  }
  return out;
}

BilinearMap make_trivial_biderivation(const LModule& m, const Matrix& omega, const Vector& z0) {
  const LieAlgebra& l = m.lie();
  const std::size_t n = l.dim();
  if (omega.rows() != n || omega.cols() != n) throw DimensionMismatch("omega must be dim L x dim L");
  if (z0.size() != m.dim()) throw DimensionMismatch("z0 has wrong length");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (omega.at(i, j) + omega.at(j, i) != Scalar::zero(m.field())) {
        throw Error("precondition failed: omega is not skew-symmetric");
      }
    }
  }
  for (const auto& d : derived(l).basis()) {
    if (!is_zero(omega.apply(d))) throw Error("precondition failed: omega(L, L') != 0");
  }
  if (!centralizer(m, Subspace::full(n, m.field())).contains(z0)) {
    throw Error("precondition failed: z0 is not in Z_M(L)");
  }
  BilinearMap out = BilinearMap::zero(n, m.dim(), m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = omega.at(i, j) * z0;
  }
  return out;
}

BiderivationDecomposition decompose_biderivation(const LModule& m, const BilinearMap& delta,
                                                 const BlockSupport& gamma_support) {
  require_known_shape(delta, m);
  if (!is_skew_biderivation(m, delta)) throw Error("map is not a skew-symmetric biderivation");
  const std::size_t n = m.lie().dim();
  const Field f = m.field();
  const BilinearMapSpace trivial = trivial_biderivations(m);
  const LinearMapSpace cent = centroid(m, gamma_support);
  const auto gammas = cent.basis();

  std::vector<SparseVector> columns = trivial.coeffs.rows();
  for (const auto& g : gammas) columns.push_back(to_sparse(from_centroid(m, g).coeffs(Symmetry::Skew)));
  const std::size_t ambient = pair_count(n, Symmetry::Skew) * m.dim();
  Combination c = solve_combination(ambient, f, columns, to_sparse(delta.coeffs(Symmetry::Skew)));

  BiderivationDecomposition out;
  out.gamma = LinearMap::zero(n, m.dim(), f);
  out.decomposable = c.solvable;
  if (!c.solvable) {
    out.obstruction = to_dense(c.residual, ambient, f);
    out.residual = delta;
    return out;
  }
  const std::size_t t = trivial.dim();
  for (std::size_t k = 0; k < gammas.size(); ++k) out.gamma = out.gamma + c.coeffs[t + k] * gammas[k];
  out.residual = delta - from_centroid(m, out.gamma);
  out.residual_zero = is_zero(out.residual.coeffs(Symmetry::Skew));
  out.obstruction = zero_vector(ambient, f);
  return out;
}

CommutingDecomposition decompose_commuting(const LModule& m, const LinearMap& fmap,
                                           const BlockSupport& gamma_support) {
  require_known_shape(fmap, m);
  if (!is_commuting(m, fmap)) throw Error("map is not commuting");
  const LieAlgebra& l = m.lie();
  const std::size_t n = l.dim();
  const Field f = m.field();
  const LinearMapSpace central = central_maps(m);
  const LinearMapSpace cent = centroid(m, gamma_support);

  CommutingDecomposition out;
  out.gamma = LinearMap::zero(n, m.dim(), f);
  out.mu = LinearMap::zero(n, m.dim(), f);

  std::vector<SparseVector> columns = central.coeffs.rows();
  const auto gammas = cent.basis();
  for (const auto& g : gammas) columns.push_back(to_sparse(g.coeffs()));
  Combination c = solve_combination(n * m.dim(), f, columns, to_sparse(fmap.coeffs()));
  if (c.solvable) {
    out.success = true;
    const auto mus = central.basis();
    for (std::size_t k = 0; k < mus.size(); ++k) out.mu = out.mu + c.coeffs[k] * mus[k];
    for (std::size_t k = 0; k < gammas.size(); ++k) out.gamma = out.gamma + c.coeffs[mus.size() + k] * gammas[k];
    return out;
  }

  const Subspace z = centralizer(m, Subspace::full(n, f));
  const SparseLinear s(fmap);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!l.defined(i, j) || !s.images[j]) continue;
      auto lhs = s.apply(l.bracket(i, j));
      auto rhs = act_opt(m, unit(i, f), *s.images[j]);
      if (!lhs || !rhs) continue;
      SparseVector diff = minus(*lhs, *rhs, f);
      if (!z.contains(diff)) {
        out.witnesses.push_back({i, j, to_dense(*lhs, m.dim(), f), to_dense(*rhs, m.dim(), f)});
      }
    }
  }
  return out;
}

// Identity checks ------------------------------------------------------------

bool verify_lemma_bl(const LModule& m, const BilinearMap& delta) {
  require_known_shape(delta, m);
  const LieAlgebra& l = m.lie();
  const Field f = m.field();
  const std::size_t n = l.dim();
  const Subspace z = centralizer(m, derived(l));
  const SparseBilinear s(delta);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (!l.defined(x, y) || !s.at(x, y)) continue;
        auto a = s.apply(unit(u, f), l.bracket(x, y));
        auto b = act_opt(m, unit(u, f), *s.at(x, y));
        if (!a || !b) continue;
        if (!z.contains(minus(*a, *b, f))) return false;
      }
    }
  }
  return true;
}

namespace {

/// Precomputed sparse brackets of basis pairs (nullopt when undefined).
std::vector<std::optional<SparseVector>> bracket_table(const LieAlgebra& l) {
  std::vector<std::optional<SparseVector>> out;
  for (std::size_t i = 0; i < l.dim(); ++i) {
    for (std::size_t j = 0; j < l.dim(); ++j) {
      if (l.defined(i, j)) {
        out.emplace_back(l.bracket(i, j));
      } else {
        out.emplace_back(std::nullopt);
      }
    }
  }
  return out;
}

/// [a,b] . delta(c,d), nullopt if anything is undefined.
class ActionTerm {
 public:
  ActionTerm(const LModule& m, const BilinearMap& d) : m_(m), n_(m.lie().dim()), s_(d), br_(bracket_table(m.lie())) {}

  std::optional<SparseVector> operator()(std::size_t a, std::size_t b, std::size_t c, std::size_t d) const {
    const auto& x = br_[a * n_ + b];
    const auto& v = s_.at(c, d);
    if (!x || !v) return std::nullopt;
    return act_opt(m_, *x, *v);
  }

 private:
  const LModule& m_;
  std::size_t n_;
  SparseBilinear s_;
  std::vector<std::optional<SparseVector>> br_;
};

}  // namespace

bool verify_identity_ena(const LModule& m, const BilinearMap& delta) {
  require_known_shape(delta, m);
  const std::size_t n = m.lie().dim();
  const ActionTerm t(m, delta);
  // Both sides are skew in (x, y) and in (z, w).
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = z + 1; w < n; ++w) {
          auto lhs = t(x, y, z, w);
          auto rhs = t(w, z, x, y);
          if (!lhs || !rhs) continue;
          if (*lhs != *rhs) return false;
        }
      }
    }
  }
  return true;
}

bool verify_identity_q(const LModule& m, const BilinearMap& delta) {
  require_known_shape(delta, m);
  const std::size_t n = m.lie().dim();
  const Field f = m.field();
  const ActionTerm t(m, delta);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t w = 0; w < n; ++w) {
          auto a = t(x, z, y, w);
          auto b = t(y, w, x, z);
          auto c = t(x, w, y, z);
          auto d = t(y, z, x, w);
          if (!a || !b || !c || !d) continue;
          if (axpy(*a, Scalar::one(f), *b) != axpy(*c, Scalar::one(f), *d)) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace liebider

namespace liebider {

namespace {

std::optional<std::vector<std::size_t>> slice_of(const std::map<Degree, std::vector<std::size_t>>& slices,
                                                 const Degree& d, bool partial) {
  auto it = slices.find(d);
  if (it != slices.end()) return it->second;
  if (partial) return std::nullopt;
  return std::vector<std::size_t>{};
}

std::map<Degree, std::vector<std::size_t>> slices_of(const std::vector<Degree>& degrees) {
  std::map<Degree, std::vector<std::size_t>> out;
  for (std::size_t k = 0; k < degrees.size(); ++k) out[degrees[k]].push_back(k);
  return out;
}

}  // namespace

BlockSupport graded_linear_support(const std::vector<Degree>& src, const std::vector<Degree>& tgt,
                                   const Degree& shift, bool partial) {
  const auto slices = slices_of(tgt);
  BlockSupport out;
  for (const auto& d : src) out.push_back(slice_of(slices, d + shift, partial));
  return out;
}

BlockSupport graded_bilinear_support(const std::vector<Degree>& src, const std::vector<Degree>& tgt,
                                     const Degree& shift, Symmetry s, bool partial) {
  const auto slices = slices_of(tgt);
  BlockSupport out;
  for (auto [i, j] : pair_list(src.size(), s)) out.push_back(slice_of(slices, src[i] + src[j] + shift, partial));
  return out;
}

}  // namespace liebider
