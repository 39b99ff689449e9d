#include "liebider/towers.hpp"

#include <functional>

namespace liebider {

namespace {

LModule adjoint_of(const LieAlgebra& l) { return LModule::adjoint(std::make_shared<const LieAlgebra>(l)); }

/// Image and kernel of a linear map between coefficient spaces, given on a
/// basis of the source subspace.
struct LinearImage {
  Subspace image;
  Subspace kernel;
};

LinearImage image_and_kernel(const Subspace& source, std::size_t target_ambient,
                             const std::function<Vector(const Vector&)>& map) {
  const Field f = source.field();
  const auto basis = source.basis();
  std::vector<Vector> images;
  images.reserve(basis.size());
  for (const auto& b : basis) images.push_back(map(b));

  // kernel: combinations c with sum_k c_k images[k] = 0
  SparseEliminator elim(basis.size(), f);
  for (std::size_t r = 0; r < target_ambient; ++r) {
    SparseVector row;
    for (std::size_t k = 0; k < images.size(); ++k) {
      if (!images[k][r].is_zero()) row.emplace_back(static_cast<std::uint32_t>(k), images[k][r]);
    }
    if (!row.empty()) elim.add_row(std::move(row));
  }
  std::vector<Vector> kernel;
  for (const auto& c : elim.kernel_basis()) {
    Vector v = zero_vector(source.ambient(), f);
    for (const auto& [k, x] : c) v = v + x * basis[k];
    kernel.push_back(std::move(v));
  }
  return {Subspace::span_dense(target_ambient, f, images), Subspace::span_dense(source.ambient(), f, kernel)};
}

/// Zeroes every skew-pair block (i, j) unless both i and j are inner.
Subspace project_inner(const Subspace& s, std::size_t n, std::size_t tgt, const std::vector<char>& inner) {
  if (inner.empty()) return s;
  const auto pairs = pair_list(n, Symmetry::Skew);
  std::vector<SparseVector> rows;
  for (const auto& r : s.rows()) {
    SparseVector out;
    for (const auto& [idx, x] : r) {
      const auto [i, j] = pairs[idx / tgt];
      if (inner[i] && inner[j]) out.emplace_back(idx, x);
    }
    rows.push_back(std::move(out));
  }
  return Subspace::span(s.ambient(), s.field(), rows);
}

/// Coefficient vectors whose every block lies in `range`.
Subspace blocks_in(const Subspace& range, std::size_t blocks, std::size_t tgt) {
  std::vector<SparseVector> rows;
  for (std::size_t b = 0; b < blocks; ++b) {
    for (const auto& z : range.rows()) {
      SparseVector v;
      for (const auto& [k, x] : z) v.emplace_back(static_cast<std::uint32_t>(b * tgt + k), x);
      rows.push_back(std::move(v));
    }
  }
  return Subspace::span(blocks * tgt, range.field(), rows);
}

/// Coefficient vectors supported where the block support allows.
Subspace support_space(const BlockSupport& support, std::size_t blocks, std::size_t tgt, Field f) {
  if (support.empty()) return Subspace::full(blocks * tgt, f);
  std::vector<SparseVector> rows;
  for (std::size_t b = 0; b < blocks; ++b) {
    if (!support[b]) continue;
    for (auto t : *support[b]) rows.push_back({{static_cast<std::uint32_t>(b * tgt + t), Scalar::one(f)}});
  }
  return Subspace::span(blocks * tgt, f, rows);
}

}  // namespace

std::vector<std::size_t> CenterTower::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : stages) out.push_back(s.dim());
  return out;
}

std::vector<std::size_t> ModuleTower::dims() const {
  std::vector<std::size_t> out;
  for (const auto& s : stages) out.push_back(s.dim());
  return out;
}

CenterTower center_tower(const LieAlgebra& l, std::size_t depth_limit) {
  if (depth_limit < 1) throw Error("depth limit must be at least 1");
  CenterTower t;
  t.stages.push_back(l);
  while (true) {
    const LieAlgebra& cur = t.stages.back();
    const Subspace z = center(cur);
    if (z.is_zero()) {
      t.terminated = true;
      break;
    }
    if (z.is_full()) {
      t.collapsed = true;
      t.limit_hit = true;
      break;
    }
    if (t.stages.size() >= depth_limit) {
      t.limit_hit = true;
      break;
    }
    QuotientAlgebra q = quotient_algebra(cur, z);
    LieAlgebra next = q.quotient;
    t.quotients.push_back(std::move(q));
    t.stages.push_back(std::move(next));
  }
  return t;
}

ModuleTower module_tower(const LModule& m, std::size_t depth_limit) {
  if (depth_limit < 1) throw Error("depth limit must be at least 1");
  ModuleTower t;
  const Subspace d = derived(m.lie());
  t.stages.push_back(m);
  while (true) {
    const LModule& cur = t.stages.back();
    const Subspace z = centralizer(cur, d);
    if (z.is_zero()) {
      t.terminated = true;
      break;
    }
    if (t.stages.size() >= depth_limit) {
      t.limit_hit = true;
      break;
    }
    QuotientModule q = quotient_module(cur, z);
    LModule next = q.quotient;
    t.quotients.push_back(std::move(q));
    t.stages.push_back(std::move(next));
  }
  return t;
}

BilinearMap project_biderivation(const BilinearMap& delta, const QuotientAlgebra& q) {
  const LieAlgebra& l = q.original;
  const std::size_t n = l.dim();
  if (delta.src != n || delta.tgt != n) throw DimensionMismatch("biderivation does not match the algebra");
  const Field f = l.field();
  for (const auto& z : q.kernel.basis()) {
    for (std::size_t j = 0; j < n; ++j) {
      bool known = true;
      for (std::size_t i = 0; i < n; ++i) {
        if (!z[i].is_zero() && !delta.is_known(i, j)) known = false;
      }
      if (known && !q.kernel.contains(delta.apply(z, unit_vector(n, j, f)))) {
        throw Error("internal: delta(Z, L) is not inside Z");
      }
    }
  }
  const auto& comp = q.maps.complement;
  BilinearMap out = BilinearMap::zero(comp.size(), comp.size(), f);
  for (std::size_t a = 0; a < comp.size(); ++a) {
    for (std::size_t b = 0; b < comp.size(); ++b) {
      if (!delta.is_known(comp[a], comp[b])) {
        out.set_unknown(a, b);
      } else {
        out.at(a, b) = q.maps.projection.apply(delta.at(comp[a], comp[b]));
      }
    }
  }
  return out;
}

LinearMap project_commuting(const LinearMap& fmap, const QuotientModule& q) {
  if (fmap.tgt != q.original.dim()) throw DimensionMismatch("map does not land in the module");
  LinearMap out = LinearMap::zero(fmap.src, q.quotient.dim(), fmap.field);
  out.known = fmap.known;
  for (std::size_t i = 0; i < fmap.src; ++i) out.images[i] = q.maps.projection.apply(fmap.images[i]);
  return out;
}

BiderivationAudit tower_audit_biderivations(const LieAlgebra& l, const AuditOptions& opt) {
  const std::size_t n = l.dim();
  const Field f = l.field();
  const LModule m = adjoint_of(l);
  const Subspace z = center(l);
  const QuotientAlgebra q = quotient_algebra(l, z);
  const std::size_t nq = q.quotient.dim();
  std::vector<char> inner_q;
  if (!opt.inner.empty()) {
    for (auto c : q.maps.complement) inner_q.push_back(opt.inner[c]);
  }

  const Subspace b = project_inner(skew_biderivations(m, opt.source_support).coeffs, n, n, opt.inner);
  const Subspace bq =
      project_inner(skew_biderivations(adjoint_of(q.quotient), opt.quotient_support).coeffs, nq, nq, inner_q);
  const std::size_t src_pairs = pair_count(n, Symmetry::Skew);
  const std::size_t q_pairs = pair_count(nq, Symmetry::Skew);

  auto project = [&](const Vector& coeffs) {
    BilinearMap d = BilinearMap::from_coeffs(coeffs, Symmetry::Skew, n, n, f);
    return project_biderivation(d, q).coeffs(Symmetry::Skew);
  };
  auto pieces = image_and_kernel(b, q_pairs * nq, project);

  const Subspace range_z = subspace_intersect(b, blocks_in(z, src_pairs, n));
  const Subspace triv = project_inner(
      subspace_intersect(trivial_biderivations(m).coeffs, support_space(opt.source_support, src_pairs, n, f)), n, n,
      opt.inner);

  BiderivationAudit out;
  out.dim_source = b.dim();
  out.dim_quotient = bq.dim();
  out.dim_image = pieces.image.dim();
  out.dim_kernel = pieces.kernel.dim();
  out.dim_range_in_center = range_z.dim();
  out.dim_trivial = triv.dim();
  out.image_inside_quotient_space = bq.contains(pieces.image);
  out.kernel_is_range_in_center = pieces.kernel == range_z;
  out.kernel_is_trivial = pieces.kernel == triv;
  out.rank_nullity = b.dim() == pieces.image.dim() + pieces.kernel.dim();
  return out;
}

CommutingAudit tower_audit_commuting(const LModule& m) {
  const std::size_t n = m.lie().dim();
  const Subspace zl = centralizer(m, derived(m.lie()));
  const QuotientModule q = quotient_module(m, zl);
  const LinearMapSpace com = commuting_maps(m);
  const LinearMapSpace comq = commuting_maps(q.quotient);
  const std::size_t qd = q.quotient.dim();

  auto project = [&](const Vector& coeffs) {
    LinearMap fm = LinearMap::from_coeffs(coeffs, n, m.dim(), m.field());
    return project_commuting(fm, q).coeffs();
  };
  auto pieces = image_and_kernel(com.coeffs, n * qd, project);
  const Subspace sc = subspace_sum(special_commuting_maps(m).coeffs, central_maps(m).coeffs);

  CommutingAudit out;
  out.dim_source = com.dim();
  out.dim_quotient = comq.dim();
  out.dim_image = pieces.image.dim();
  out.dim_kernel = pieces.kernel.dim();
  out.dim_special_plus_central = sc.dim();
  out.image_inside_quotient_space = comq.coeffs.contains(pieces.image);
  out.kernel_is_special_plus_central = pieces.kernel == sc;
  out.rank_nullity = com.dim() == pieces.image.dim() + pieces.kernel.dim();
  return out;
}

Restriction restrict_biderivation_to_derived(const BilinearMap& delta, const LieAlgebra& l) {
  if (!is_centerless(l)) throw Error("precondition failed: L has a nonzero center");
  const LModule m = adjoint_of(l);
  if (!is_skew_biderivation(m, delta)) throw Error("precondition failed: not a skew-symmetric biderivation");
  const Subspace d = derived(l);
  Restriction out{subalgebra(l, d), BilinearMap::zero(d.dim(), d.dim(), l.field())};
  const auto basis = d.basis();
  for (std::size_t a = 0; a < basis.size(); ++a) {
    for (std::size_t b = 0; b < basis.size(); ++b) {
      auto coords = d.coordinates(delta.apply(basis[a], basis[b]));
      if (!coords) throw Error("internal: delta(L', L') is not inside L'");
      out.delta.at(a, b) = *coords;
    }
  }
  return out;
}

RestrictionAudit restriction_audit(const LieAlgebra& l) {
  const LModule m = adjoint_of(l);
  const BilinearMapSpace b = skew_biderivations(m);
  const Subspace d = derived(l);
  const LModule md = adjoint_of(subalgebra(l, d).algebra);
  const std::size_t n = l.dim();
  const std::size_t k = d.dim();

  RestrictionAudit out;
  out.dim_source = b.dim();
  out.restrictions_are_biderivations = true;
  for (const auto& delta : b.basis()) {
    const Restriction r = restrict_biderivation_to_derived(delta, l);
    if (!is_skew_biderivation(md, r.delta)) out.restrictions_are_biderivations = false;
  }
  auto restrict_coeffs = [&](const Vector& c) {
    return restrict_biderivation_to_derived(BilinearMap::from_coeffs(c, Symmetry::Skew, n, n, l.field()), l)
        .delta.coeffs(Symmetry::Skew);
  };
  auto pieces = image_and_kernel(b.coeffs, pair_count(k, Symmetry::Skew) * k, restrict_coeffs);
  out.dim_kernel = pieces.kernel.dim();
  out.kernel_inside_special = special_biderivations(m).coeffs.contains(pieces.kernel);
  return out;
}

}  // namespace liebider
