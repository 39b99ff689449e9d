#include "liebider/graded_window.hpp"

#include <cstdlib>
#include <functional>
#include <map>
#include <tuple>

namespace liebider {

namespace {

const Field Q = Field::rationals();

Scalar num(long v) { return Scalar(v, Q); }

// Basis element of a family: tag plus one or two indices (k numbers central elements).
struct Elem {
  char tag;
  int m;
  int i;
  friend bool operator<(const Elem& a, const Elem& b) {
    return std::tie(a.tag, a.m, a.i) < std::tie(b.tag, b.m, b.i);
  }
};

using Terms = std::vector<std::pair<Elem, Scalar>>;

int tag_rank(char t) {
  switch (t) {
    case 'L': return 0;
    case 'I':
    case 'Y': return 1;
    case 'M': return 2;
    default: return 3;
  }
}

Scalar cocycle(int m) { return Scalar::rational(static_cast<long>(m) * m * m - m, 12); }

/// [x, y] for tag_rank(x) <= tag_rank(y).
Terms direct(Family fam, const FamilyParams& p, const Elem& x, const Elem& y) {
  if (x.tag == 'c' || y.tag == 'c') return {};
  switch (fam) {
    case Family::Wab:
    case Family::WTilde0m1: {
      const bool tilde = fam == Family::WTilde0m1;
      const Scalar a = tilde ? num(0) : p.a;
      const Scalar b = tilde ? num(-1) : p.b;
      const int m = x.m, n = y.m;
      if (x.tag == 'L' && y.tag == 'L') {
        Terms t{{{'L', m + n, 0}, num(n - m)}};
        if (tilde && m == -n) t.push_back({{'c', 1, 0}, cocycle(m)});
        return t;
      }
      if (x.tag == 'L' && y.tag == 'I') {
        Terms t{{{'I', m + n, 0}, num(n) + a + b * num(m)}};
        if (tilde && m == -n) t.push_back({{'c', 2, 0}, cocycle(m)});
        return t;
      }
      if (tilde && p.c3 && m == -n) return {{{'c', 3, 0}, cocycle(m)}};
      return {};
    }
    case Family::SchrodingerVirasoro: {
      const int m = x.m, n = y.m;
      if (x.tag == 'L' && y.tag == 'L') return {{{'L', m + n, 0}, num(n - m)}};
      if (x.tag == 'L' && y.tag == 'Y') return {{{'Y', m + n, 0}, num(n) - Scalar::rational(m, 2)}};
      if (x.tag == 'L' && y.tag == 'M') return {{{'M', m + n, 0}, num(n)}};
      if (x.tag == 'Y' && y.tag == 'Y') return {{{'M', m + n, 0}, num(n - m)}};
      return {};
    }
    case Family::Block: {
      const Scalar c = num(y.m) * (num(x.i) + p.q) - num(x.m) * (num(y.i) + p.q);
      return {{{'L', x.m + y.m, x.i + y.i}, c}};
    }
  }
  return {};
}

Terms bracket_terms(Family fam, const FamilyParams& p, const Elem& x, const Elem& y) {
  if (tag_rank(x.tag) <= tag_rank(y.tag)) return direct(fam, p, x, y);
  Terms t = direct(fam, p, y, x);
  for (auto& [e, c] : t) c = -c;
  return t;
}

std::string elem_name(Family fam, const Elem& e) {
  if (e.tag == 'c') return "c" + std::to_string(e.m);
  if (fam == Family::Block) return "L_" + std::to_string(e.m) + "," + std::to_string(e.i);
  return std::string(1, e.tag) + "_" + std::to_string(e.m);
}

bool is_integer(const Scalar& s) { return s.rational().get_den() == 1; }

Subspace project_blocks(const Subspace& s, std::size_t tgt, const std::vector<char>& keep_block) {
  std::vector<SparseVector> rows;
  for (const auto& r : s.rows()) {
    SparseVector out;
    for (const auto& [idx, x] : r) {
      if (keep_block[idx / tgt]) out.emplace_back(idx, x);
    }
    rows.push_back(std::move(out));
  }
  return Subspace::span(s.ambient(), s.field(), rows);
}

std::vector<char> inner_pairs(const std::vector<char>& inner, Symmetry s) {
  std::vector<char> out;
  for (auto [i, j] : pair_list(inner.size(), s)) out.push_back(inner[i] && inner[j]);
  return out;
}

Vector project_vector(const Vector& v, std::size_t tgt, const std::vector<char>& keep_block) {
  Vector out = v;
  for (std::size_t k = 0; k < out.size(); ++k) {
    if (!keep_block[k / tgt]) out[k] = Scalar::zero(out[k].field());
  }
  return out;
}

}  // namespace

std::string family_name(Family f) {
  switch (f) {
    case Family::Wab: return "wab";
    case Family::WTilde0m1: return "wtilde0m1";
    case Family::SchrodingerVirasoro: return "sv";
    case Family::Block: return "block";
  }
  return "?";
}

Family parse_family(const std::string& name) {
  if (name == "wab" || name == "w00") return Family::Wab;
  if (name == "wtilde0m1") return Family::WTilde0m1;
  if (name == "sv") return Family::SchrodingerVirasoro;
  if (name == "block") return Family::Block;
  throw Error("unknown family '" + name + "'");
}

WindowInstance instantiate(Family family, const FamilyParams& params, int radius, int inner_radius) {
  if (radius < 3) throw Error("window radius must be at least 3");
  for (const Scalar* s : {&params.a, &params.b, &params.q}) {
    if (s->field() != Q) throw FieldMismatch("family parameters must be rational");
  }
  WindowInstance w;
  w.family = family;
  w.params = params;
  w.radius = radius;
  w.inner_radius = inner_radius < 0 ? radius / 3 : inner_radius;
  if (w.inner_radius > radius) throw Error("inner radius exceeds the window");
  if (family == Family::Wab) {
    w.generic_parameters = !(is_integer(params.a) && (params.b.is_zero() || params.b == num(-1)));
  }

  std::vector<Elem> basis;
  auto tags = [&]() -> std::vector<char> {
    switch (family) {
      case Family::Wab:
      case Family::WTilde0m1: return {'L', 'I'};
      case Family::SchrodingerVirasoro: return {'L', 'Y', 'M'};
      case Family::Block: return {'L'};
    }
    return {};
  }();
  for (char t : tags) {
    for (int m = -radius; m <= radius; ++m) {
      if (family == Family::Block) {
        for (int i = -radius; i <= radius; ++i) basis.push_back({t, m, i});
      } else {
        if (family == Family::SchrodingerVirasoro && params.quotient && t == 'M' && m == 0) continue;
        basis.push_back({t, m, 0});
      }
    }
  }
  if (family == Family::WTilde0m1) {
    for (int k = 1; k <= 3; ++k) basis.push_back({'c', k, 0});
  }

  std::map<Elem, std::size_t> index;
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const Elem& e = basis[k];
    index[e] = k;
    names.push_back(elem_name(family, e));
    if (family == Family::Block) {
      degrees.push_back({e.m, e.i});
    } else {
      degrees.push_back({e.tag == 'c' ? 0 : e.m});
    }
    const bool in = e.tag == 'c' || (std::abs(e.m) <= w.inner_radius && std::abs(e.i) <= w.inner_radius);
    w.inner.push_back(in ? 1 : 0);
  }

  std::vector<LieAlgebra::Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      std::map<std::uint32_t, Scalar> acc;
      bool defined = true;
      for (const auto& [e, c] : bracket_terms(family, params, basis[i], basis[j])) {
        if (c.is_zero()) continue;
        auto it = index.find(e);
        if (it == index.end()) {
          // M_0 in the quotient is zero; anything else left the window
          if (family == Family::SchrodingerVirasoro && params.quotient && e.tag == 'M' && e.m == 0) continue;
          defined = false;
          break;
        }
        auto [a, ins] = acc.try_emplace(static_cast<std::uint32_t>(it->second), Scalar::zero(Q));
        a->second += c;
      }
      if (!defined) {
        undefined.emplace_back(i, j);
        continue;
      }
      SparseVector v;
      for (auto& [k, x] : acc) {
        if (!x.is_zero()) v.emplace_back(k, x);
      }
      if (!v.empty()) entries.push_back({i, j, std::move(v)});
    }
  }
  w.algebra = LieAlgebra(Q, names, entries, undefined, degrees);
  return w;
}

BlockSupport window_linear_support(const LieAlgebra& l) {
  const Degree zero(l.degrees().front().size(), 0);
  return graded_linear_support(l.degrees(), l.degrees(), zero, true);
}

BlockSupport window_bilinear_support(const LieAlgebra& l, Symmetry s) {
  const Degree zero(l.degrees().front().size(), 0);
  return graded_bilinear_support(l.degrees(), l.degrees(), zero, s, true);
}

WindowCentroid window_centroid(const WindowInstance& w, bool degree_zero_ansatz) {
  const LModule m = LModule::adjoint(std::make_shared<const LieAlgebra>(w.algebra));
  WindowCentroid out;
  out.space = centroid(m, degree_zero_ansatz ? window_linear_support(w.algebra) : BlockSupport{});
  out.inner_space = project_blocks(out.space.coeffs, m.dim(), w.inner);
  return out;
}

bool WindowBiderivations::contains(const BilinearMap& d) const {
  if (!d.is_skew()) return false;
  return inner_space.contains(project_vector(d.coeffs(Symmetry::Skew), space.tgt, inner_pairs(inner, Symmetry::Skew)));
}

WindowBiderivations window_skew_biderivations(const WindowInstance& w) {
  const LModule m = LModule::adjoint(std::make_shared<const LieAlgebra>(w.algebra));
  WindowBiderivations out;
  out.space = skew_biderivations(m, window_bilinear_support(w.algebra));
  out.inner = w.inner;
  out.inner_space = project_blocks(out.space.coeffs, m.dim(), inner_pairs(w.inner, Symmetry::Skew));
  return out;
}

BilinearMap composed_with_bracket(const LieAlgebra& l, const LinearMap& gamma) {
  const std::size_t n = l.dim();
  BilinearMap out = BilinearMap::zero(n, gamma.tgt, l.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!l.defined(i, j)) {
        out.set_unknown(i, j);
        continue;
      }
      out.at(i, j) = gamma.apply(to_dense(l.bracket(i, j), n, l.field()));
    }
  }
  return out;
}

LinearMap gamma_ab(const WindowInstance& w, const Scalar& a, const Scalar& b) {
  if (w.family != Family::Wab && w.family != Family::WTilde0m1) throw Error("gamma_ab needs a W family");
  const LieAlgebra& l = w.algebra;
  const std::size_t n = l.dim();
  LinearMap g = LinearMap::zero(n, n, Q);
  for (std::size_t k = 0; k < n; ++k) {
    const std::string& name = l.names()[k];
    g.images[k][k] = a;
    if (name[0] == 'L') {
      auto partner = l.index_of("I" + name.substr(1));
      if (partner) g.images[k][*partner] = b;
    }
  }
  return g;
}

namespace {

struct HandSystem {
  bool solvable = true;
  std::vector<LiftObstruction::Forced> forced;
};

// (n - m) C_{m+n, r} = [m + n + r = 0] b ((r-m)(n-n^3) + (r-n)(m^3-m)) / 12 c2
HandSystem hand_system(const Scalar& b, int radius, bool flip) {
  std::map<std::pair<int, int>, std::size_t> pair_col;
  for (int p = -radius; p <= radius; ++p) {
    for (int r = p + 1; r <= radius; ++r) pair_col[{p, r}] = pair_col.size();
  }
  const std::uint32_t rhs_col = static_cast<std::uint32_t>(pair_col.size());
  SparseEliminator elim(pair_col.size() + 1, Q);
  HandSystem out;
  auto in_window = [&](int k) { return k >= -radius && k <= radius; };
  for (int m = -radius; m <= radius; ++m) {
    for (int n = -radius; n <= radius; ++n) {
      if (m == n || m + n == 0 || !in_window(m + n)) continue;
      const int r = -m - n;
      const long rm = r - m, rn = r - n;
      const long nn = static_cast<long>(n) - static_cast<long>(n) * n * n;
      const long mm = static_cast<long>(m) * m * m - m;
      const Scalar rhs = b * Scalar::rational(rm * nn + (flip ? -rn : rn) * mm, 12);
      const int p = m + n;
      SparseVector row;
      if (p != r) {
        const auto key = p < r ? std::make_pair(p, r) : std::make_pair(r, p);
        row.emplace_back(static_cast<std::uint32_t>(pair_col.at(key)), (p < r ? num(1) : num(-1)) * num(n - m));
      }
      if (!rhs.is_zero()) row.emplace_back(rhs_col, -rhs);
      if (r != 0) out.forced.push_back({m, r, rhs / num(n - m)});
      if (!row.empty()) elim.add_row(std::move(row));
    }
  }
  for (auto c : elim.pivot_columns()) {
    if (c == rhs_col) out.solvable = false;
  }
  return out;
}

// Affine value of h on a basis pair: constant vector plus unknown columns,
// each unknown contributing to one central coordinate.
struct Affine {
  bool defined = true;
  SparseVector constant;
  std::vector<std::tuple<std::uint32_t, std::size_t, Scalar>> unknown;  // column, coordinate, coefficient
};

}  // namespace

LiftObstruction lift_obstruction_w0minus1(const Scalar& b, int radius, bool c3) {
  if (radius < 4) throw Error("window radius must be at least 4");
  if (b.field() != Q) throw FieldMismatch("b must be rational");
  FamilyParams params;
  params.c3 = c3;
  const WindowInstance w = instantiate(Family::WTilde0m1, params, radius, radius / 3);
  const LieAlgebra& l = w.algebra;
  const std::size_t n = l.dim();
  std::vector<char> tag(n);
  std::vector<int> index(n);
  std::vector<std::size_t> central;
  for (std::size_t i = 0; i < n; ++i) {
    const std::string& name = l.names()[i];
    tag[i] = name[0];
    index[i] = tag[i] == 'c' ? 0 : std::stoi(name.substr(2));
    if (tag[i] == 'c') central.push_back(i);
  }
  auto i_index = [&](int k) { return l.index_of("I_" + std::to_string(k)); };

  // unknown slots: unordered pairs (L, L) and (c, anything)
  std::map<std::pair<std::size_t, std::size_t>, std::uint32_t> slot;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool ll = tag[i] == 'L' && tag[j] == 'L';
      const bool cx = tag[i] == 'c' || tag[j] == 'c';
      if (ll || cx) slot[{i, j}] = static_cast<std::uint32_t>(3 * slot.size());
    }
  }
  const std::size_t unknowns = 3 * slot.size();
  const std::uint32_t rhs_col = static_cast<std::uint32_t>(unknowns);

  auto h = [&](std::size_t i, std::size_t j) {
    Affine a;
    if (i == j) return a;
    const bool swap = i > j;
    const std::size_t p = swap ? j : i, q = swap ? i : j;
    const Scalar sign = swap ? num(-1) : num(1);
    auto it = slot.find({p, q});
    if (it == slot.end()) return a;  // h(L, I) = h(I, I) = 0
    for (std::size_t k = 0; k < 3; ++k) a.unknown.emplace_back(it->second + k, central[k], sign);
    if (tag[p] == 'L' && tag[q] == 'L') {
      const auto target = i_index(index[p] + index[q]);
      if (!target) {
        a.defined = false;
        return a;
      }
      const Scalar c = sign * num(index[q] - index[p]) * b;
      if (!c.is_zero()) a.constant.emplace_back(static_cast<std::uint32_t>(*target), c);
    }
    return a;
  };

  LiftObstruction out;
  out.unknowns = unknowns;
  SparseEliminator full(unknowns + 1, Q);
  SparseEliminator l_only(unknowns + 1, Q);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!l.defined(x, y)) continue;
      for (std::size_t z = 0; z < n; ++z) {
        // accumulate h([x,y],z) - [h(x,z),y] - [x,h(y,z)]
        std::map<std::size_t, std::map<std::uint32_t, Scalar>> eq;  // coordinate -> column -> coeff
        bool ok = true;
        auto add_affine = [&](const Affine& a, const Scalar& c) {
          for (const auto& [k, v] : a.constant) {
            auto& cell = eq[k][rhs_col];
            cell = cell + c * v;
          }
          for (const auto& [col, k, v] : a.unknown) {
            auto& cell = eq[k][col];
            cell = cell + c * v;
          }
        };
        for (const auto& [t, c] : l.bracket(x, y)) {
          const Affine a = h(t, z);
          if (!a.defined) ok = false;
          add_affine(a, c);
        }
        auto bracket_const = [&](const Affine& a, std::size_t other, bool left) {
          // the unknown part is central and drops out of the bracket
          if (!a.defined) {
            ok = false;
            return;
          }
          for (const auto& [k, v] : a.constant) {
            const std::size_t i = left ? k : other, j = left ? other : k;
            if (!l.defined(i, j)) {
              ok = false;
              return;
            }
            Affine val;
            for (const auto& [t, c] : l.bracket(i, j)) val.constant.emplace_back(t, c * v);
            add_affine(val, num(-1));
          }
        };
        bracket_const(h(x, z), y, true);
        bracket_const(h(y, z), x, false);
        if (!ok) continue;
        const bool all_l = tag[x] == 'L' && tag[y] == 'L' && tag[z] == 'L';
        for (auto& [k, cells] : eq) {
          SparseVector row;
          for (auto& [col, v] : cells) {
            if (!v.is_zero()) row.emplace_back(col, v);
          }
          if (row.empty()) continue;
          ++out.equations;
          if (all_l) l_only.add_row(row);
          full.add_row(std::move(row));
        }
      }
    }
  }
  auto consistent = [&](const SparseEliminator& e) {
    for (auto c : e.pivot_columns()) {
      if (c == rhs_col) return false;
    }
    return true;
  };
  out.solvable = consistent(full);
  out.solvable_l_only = consistent(l_only);
  const HandSystem hand = hand_system(b, radius, false);
  out.hand_solvable = hand.solvable;
  out.forced = hand.forced;
  out.displayed_sign_solvable = hand_system(b, radius, true).solvable;
  return out;
}

LinearMap lift_map_w0minus1(const WindowInstance& w) {
  if (w.family != Family::WTilde0m1) throw Error("lift map needs a W~(0,-1) window");
  const auto& names = w.algebra.names();
  const std::size_t n = names.size();
  auto index = [&](const std::string& s) {
    for (std::size_t i = 0; i < n; ++i) {
      if (names[i] == s) return i;
    }
    throw Error("missing basis element " + s);
  };
  LinearMap phi = LinearMap::zero(n, n, Q);
  for (int m = -w.radius; m <= w.radius; ++m) {
    phi.images[index("L_" + std::to_string(m))][index("I_" + std::to_string(m))] = num(1);
  }
  phi.images[index("c1")][index("c2")] = num(1);
  return phi;
}

LieAlgebra sl2_d() {
  // basis d_-1, d_0, d_1
  std::vector<LieAlgebra::Entry> entries;
  for (int i = -1; i <= 1; ++i) {
    for (int j = i + 1; j <= 1; ++j) {
      const int k = i + j;
      if (k < -1 || k > 1) continue;
      entries.push_back({static_cast<std::size_t>(i + 1), static_cast<std::size_t>(j + 1),
                         {{static_cast<std::uint32_t>(k + 1), num(j - i)}}});
    }
  }
  return LieAlgebra(Q, {"d_-1", "d_0", "d_1"}, entries, {}, std::vector<Degree>{{-1}, {0}, {1}});
}

LModule window_module(const Scalar& a, const Scalar& b, int radius) {
  if (radius < 1) throw Error("window radius must be positive");
  auto lie = std::make_shared<const LieAlgebra>(sl2_d());
  std::vector<std::string> names;
  std::vector<Degree> degrees;
  for (int j = -radius; j <= radius; ++j) {
    names.push_back("v_" + std::to_string(j));
    degrees.push_back({j});
  }
  std::vector<LModule::Entry> entries;
  std::vector<std::pair<std::size_t, std::size_t>> undefined;
  for (int i = -1; i <= 1; ++i) {
    for (int j = -radius; j <= radius; ++j) {
      const Scalar c = num(j) + a + b * num(i);
      const std::size_t ai = static_cast<std::size_t>(i + 1);
      const std::size_t vj = static_cast<std::size_t>(j + radius);
      if (c.is_zero()) continue;
      if (std::abs(i + j) > radius) {
        undefined.emplace_back(ai, vj);
        continue;
      }
      entries.push_back({ai, vj, {{static_cast<std::uint32_t>(i + j + radius), c}}});
    }
  }
  return LModule(lie, names, entries, undefined, degrees);
}

namespace {

BilinearMap symmetric_family(const LModule& m, int k, const std::function<Scalar(int)>& coeff) {
  const int radius = static_cast<int>(m.dim() / 2);
  BilinearMap d = BilinearMap::zero(3, m.dim(), Q);
  for (int i = -1; i <= 1; ++i) {
    for (int j = -1; j <= 1; ++j) {
      const int t = i + j + k;
      const Scalar c = coeff(t);
      const std::size_t a = static_cast<std::size_t>(i + 1), b = static_cast<std::size_t>(j + 1);
      if (c.is_zero()) continue;
      if (std::abs(t) > radius) {
        d.set_unknown(a, b);
        continue;
      }
      d.at(a, b)[static_cast<std::size_t>(t + radius)] = c;
    }
  }
  return d;
}

}  // namespace

BilinearMap delta_k(const LModule& m, int k) {
  return symmetric_family(m, k, [](int) { return num(1); });
}

BilinearMap delta_prime_k(const LModule& m, const Scalar& a, int k) {
  return symmetric_family(m, k, [&](int t) { return num(t) + a; });
}

BiderivationAudit w00_quotient_audit(int radius) {
  const WindowInstance w = instantiate(Family::Wab, FamilyParams{}, radius);
  const LieAlgebra& l = w.algebra;
  const QuotientAlgebra q = quotient_algebra(l, center(l));
  AuditOptions opt;
  opt.source_support = window_bilinear_support(l);
  opt.quotient_support = window_bilinear_support(q.quotient);
  opt.inner = w.inner;
  return tower_audit_biderivations(l, opt);
}

}  // namespace liebider
