#include "liebider/free_lie.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <numeric>

#include <gmpxx.h>

namespace liebider {

namespace {

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  if (n > 1) result = -result;
  return result;
}

mpz_class factorial(int n) {
  mpz_class r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

int total(const Multidegree& a) { return std::accumulate(a.begin(), a.end(), 0); }

bool leq(const Multidegree& a, const Multidegree& b) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > b[i]) return false;
  }
  return true;
}

Multidegree minus(const Multidegree& a, const Multidegree& b) {
  Multidegree out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

}  // namespace

std::size_t witt_number(std::size_t generators, int degree) {
  if (degree < 1) return 0;
  mpz_class sum = 0;
  for (int e = 1; e <= degree; ++e) {
    if (degree % e != 0) continue;
    mpz_class p;
    mpz_ui_pow_ui(p.get_mpz_t(), generators, static_cast<unsigned long>(degree / e));
    sum += mobius(e) * p;
  }
  sum /= degree;
  return sum.get_ui();
}

std::size_t witt_number(const Multidegree& alpha) {
  const int n = total(alpha);
  if (n < 1) return 0;
  int g = 0;
  for (int a : alpha) g = std::gcd(g, a);
  mpz_class sum = 0;
  for (int e = 1; e <= g; ++e) {
    if (g % e != 0) continue;
    mpz_class term = factorial(n / e);
    for (int a : alpha) term /= factorial(a / e);
    sum += mobius(e) * term;
  }
  sum /= n;
  return sum.get_ui();
}

FreeLieAlgebra::FreeLieAlgebra(std::size_t generators, int max_degree, Field f)
    : generators_(generators), max_degree_(max_degree), field_(f) {
  if (generators < 1) throw Error("free Lie algebra needs at least one generator");
  if (max_degree < 1) throw Error("degree bound must be at least 1");

  std::vector<HallElement> letters;
  for (std::size_t i = 0; i < generators; ++i) {
    HallElement h;
    h.letter = static_cast<int>(i);
    h.multidegree.assign(generators, 0);
    h.multidegree[i] = 1;
    h.degree = 1;
    h.text = "x" + std::to_string(i + 1);
    letters.push_back(std::move(h));
  }
  std::stable_sort(letters.begin(), letters.end(),
                   [](const HallElement& a, const HallElement& b) { return a.text < b.text; });
  hall_ = letters;

  for (int d = 2; d <= max_degree; ++d) {
    std::vector<HallElement> fresh;
    const std::size_t known = hall_.size();
    for (std::size_t a = 0; a < known; ++a) {
      for (std::size_t b = a + 1; b < known; ++b) {
        const HallElement& ha = hall_[a];
        const HallElement& hb = hall_[b];
        if (ha.degree + hb.degree != d) continue;
        if (!hb.is_letter() && static_cast<std::size_t>(hb.left) > a) continue;
        HallElement h;
        h.left = static_cast<int>(a);
        h.right = static_cast<int>(b);
        h.multidegree = ha.multidegree + hb.multidegree;
        h.degree = d;
        h.text = "[" + ha.text + "," + hb.text + "]";
        fresh.push_back(std::move(h));
      }
    }
    std::sort(fresh.begin(), fresh.end(), [](const HallElement& a, const HallElement& b) { return a.text < b.text; });
    for (auto& h : fresh) hall_.push_back(std::move(h));
  }

  for (const auto& h : hall_) {
    Poly p;
    if (h.is_letter()) {
      p[Word(1, static_cast<char>(h.letter))] = Scalar::one(field_);
    } else {
      const Poly& l = expansion_[h.left];
      const Poly& r = expansion_[h.right];
      for (const auto& [u, cu] : l) {
        for (const auto& [v, cv] : r) {
          p[u + v] += cu * cv;
          p[v + u] -= cu * cv;
        }
      }
      std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
    }
    expansion_.push_back(std::move(p));
  }

  // every multidegree up to the bound, by total degree then descending
  std::function<void(Multidegree&, std::size_t, int)> rec = [&](Multidegree& cur, std::size_t pos, int left) {
    if (pos == generators_) {
      if (total(cur) >= 1) multidegrees_.push_back(cur);
      return;
    }
    for (int k = 0; k <= left; ++k) {
      cur[pos] = k;
      rec(cur, pos + 1, left - k);
    }
    cur[pos] = 0;
  };
  Multidegree cur(generators_, 0);
  rec(cur, 0, max_degree_);
  std::sort(multidegrees_.begin(), multidegrees_.end(), [](const Multidegree& a, const Multidegree& b) {
    const int ta = total(a);
    const int tb = total(b);
    if (ta != tb) return ta < tb;
    return a > b;
  });

  for (const auto& alpha : multidegrees_) components_[alpha];
  for (std::size_t i = 0; i < hall_.size(); ++i) {
    Component& c = components_.at(hall_[i].multidegree);
    c.hall.push_back(i);
    SparseVector v;
    for (const auto& [w, x] : expansion_[i]) {
      auto [it, inserted] = c.words.emplace(w, static_cast<std::uint32_t>(c.words.size()));
      (void)inserted;
      v.emplace_back(it->second, x);
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    c.expansions.push_back(std::move(v));
  }
}

const FreeLieAlgebra::Component& FreeLieAlgebra::component_data(const Multidegree& alpha) const {
  auto it = components_.find(alpha);
  if (it == components_.end()) throw Error("multidegree outside the degree bound");
  return it->second;
}

const std::vector<std::size_t>& FreeLieAlgebra::component(const Multidegree& alpha) const {
  return component_data(alpha).hall;
}

std::vector<std::size_t> FreeLieAlgebra::degree_counts() const {
  std::vector<std::size_t> out(static_cast<std::size_t>(max_degree_), 0);
  for (const auto& h : hall_) ++out[static_cast<std::size_t>(h.degree - 1)];
  return out;
}

FreeLieElement FreeLieAlgebra::generator(std::size_t i) const {
  for (std::size_t k = 0; k < hall_.size(); ++k) {
    if (hall_[k].letter == static_cast<int>(i)) return {{k, Scalar::one(field_)}};
  }
  throw Error("no such generator");
}

FreeLieElement FreeLieAlgebra::element(std::size_t hall_index) const {
  if (hall_index >= hall_.size()) throw Error("Hall index out of range");
  return {{hall_index, Scalar::one(field_)}};
}

FreeLieElement FreeLieAlgebra::parse(const std::string& raw) const {
  std::string text;
  for (char c : raw) {
    if (!std::isspace(static_cast<unsigned char>(c))) text.push_back(c);
  }
  std::size_t pos = 0;
  std::function<FreeLieElement()> term = [&]() -> FreeLieElement {
    if (pos < text.size() && text[pos] == '[') {
      ++pos;
      FreeLieElement a = term();
      if (pos >= text.size() || text[pos] != ',') throw Error("expected ',' in bracket expression");
      ++pos;
      FreeLieElement b = term();
      if (pos >= text.size() || text[pos] != ']') throw Error("expected ']' in bracket expression");
      ++pos;
      return bracket(a, b);
    }
    if (pos >= text.size() || text[pos] != 'x') throw Error("expected a generator x1..xn");
    ++pos;
    const std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw Error("expected a generator index");
    const std::size_t k = std::stoul(text.substr(start, pos - start));
    if (k < 1 || k > generators_) throw Error("generator index out of range");
    return generator(k - 1);
  };
  FreeLieElement out = term();
  if (pos != text.size()) throw Error("trailing characters in bracket expression");
  return out;
}

FreeLieAlgebra::Poly FreeLieAlgebra::expand(const FreeLieElement& a) const {
  Poly out;
  for (const auto& [k, c] : a) {
    for (const auto& [w, x] : expansion_.at(k)) out[w] += c * x;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

Multidegree FreeLieAlgebra::multidegree_of(const FreeLieElement& a) const {
  if (a.empty()) throw Error("zero element has no multidegree");
  const Multidegree& m = hall_.at(a.begin()->first).multidegree;
  for (const auto& [k, c] : a) {
    if (hall_.at(k).multidegree != m) throw Error("element is not homogeneous");
  }
  return m;
}

Vector FreeLieAlgebra::coordinates(const FreeLieElement& a, const Multidegree& alpha) const {
  const Component& c = component_data(alpha);
  Vector out = zero_vector(c.hall.size(), field_);
  for (const auto& [k, x] : a) {
    auto it = std::find(c.hall.begin(), c.hall.end(), k);
    if (it == c.hall.end()) throw Error("element has a term outside the requested multidegree");
    out[static_cast<std::size_t>(it - c.hall.begin())] += x;
  }
  return out;
}

FreeLieElement FreeLieAlgebra::from_coordinates(const Vector& v, const Multidegree& alpha) const {
  const Component& c = component_data(alpha);
  if (v.size() != c.hall.size()) throw DimensionMismatch("coordinate vector does not match the component");
  FreeLieElement out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) out[c.hall[i]] = v[i];
  }
  return out;
}

FreeLieElement FreeLieAlgebra::bracket(const FreeLieElement& a, const FreeLieElement& b) const {
  // commutator in the associative algebra, grouped by multidegree
  std::map<Multidegree, Poly> parts;
  for (const auto& [i, ci] : a) {
    for (const auto& [j, cj] : b) {
      if (hall_[i].degree + hall_[j].degree > max_degree_) throw Error("bracket exceeds the degree bound");
      const Multidegree md = hall_[i].multidegree + hall_[j].multidegree;
      Poly& p = parts[md];
      const Scalar c = ci * cj;
      for (const auto& [u, xu] : expansion_[i]) {
        for (const auto& [v, xv] : expansion_[j]) {
          p[u + v] += c * xu * xv;
          p[v + u] -= c * xu * xv;
        }
      }
    }
  }
  FreeLieElement out;
  for (auto& [md, p] : parts) {
    std::erase_if(p, [](const auto& kv) { return kv.second.is_zero(); });
    if (p.empty()) continue;
    const Component& comp = component_data(md);
    SparseVector target;
    for (const auto& [w, x] : p) {
      auto it = comp.words.find(w);
      if (it == comp.words.end()) throw Error("internal: word outside the Hall expansions");
      target.emplace_back(it->second, x);
    }
    std::sort(target.begin(), target.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
    Combination sol = solve_combination(comp.words.size(), field_, comp.expansions, target);
    if (!sol.solvable) throw Error("internal: commutator outside the Hall span");
    for (std::size_t k = 0; k < comp.hall.size(); ++k) {
      if (!sol.coeffs[k].is_zero()) out[comp.hall[k]] = sol.coeffs[k];
    }
  }
  return out;
}

std::string FreeLieAlgebra::to_string(const FreeLieElement& a) const {
  if (a.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : a) {
    std::string coef = c.to_string();
    if (!out.empty()) {
      if (coef.front() == '-') {
        out += " - ";
        coef.erase(0, 1);
      } else {
        out += " + ";
      }
    } else if (coef.front() == '-') {
      out += "-";
      coef.erase(0, 1);
    }
    if (coef != "1") out += coef + "*";
    out += hall_[k].text;
  }
  return out;
}

std::vector<Vector> FreeLieAlgebra::ideal_generators(IdealSchema schema, const Multidegree& alpha) const {
  std::vector<Vector> out;
  if (alpha[0] < 1) return out;
  const FreeLieElement x1 = generator(0);
  Multidegree e1(generators_, 0);
  e1[0] = 1;
  const Multidegree beta = minus(alpha, e1);
  const int min_degree = schema == IdealSchema::Derived ? 2 : 1;
  for (std::size_t f1 = 0; f1 < hall_.size(); ++f1) {
    if (hall_[f1].degree < min_degree || !leq(hall_[f1].multidegree, beta)) continue;
    const Multidegree rest = minus(beta, hall_[f1].multidegree);
    if (total(rest) < min_degree) continue;
    for (std::size_t f2 : component(rest)) {
      const FreeLieElement a = element(f1);
      const FreeLieElement b = element(f2);
      FreeLieElement g;
      if (schema == IdealSchema::Symmetrized) {
        if (f2 < f1) continue;
        g = bracket(bracket(x1, a), b);
        for (const auto& [k, c] : bracket(bracket(x1, b), a)) {
          g[k] += c;
          if (g[k].is_zero()) g.erase(k);
        }
      } else {
        g = bracket(bracket(x1, a), b);
      }
      if (!g.empty()) out.push_back(coordinates(g, alpha));
    }
  }
  return out;
}

Subspace FreeLieAlgebra::ideal_component(IdealSchema schema, const Multidegree& alpha) const {
  const auto key = std::make_pair(static_cast<int>(schema), alpha);
  if (auto it = ideal_cache_.find(key); it != ideal_cache_.end()) return it->second;
  const Component& comp = component_data(alpha);
  std::vector<Vector> rows = ideal_generators(schema, alpha);
  for (std::size_t i = 0; i < generators_; ++i) {
    if (alpha[i] < 1) continue;
    Multidegree lower = alpha;
    --lower[i];
    if (total(lower) < 1) continue;
    const FreeLieElement xi = generator(i);
    for (const auto& v : ideal_component(schema, lower).basis()) {
      FreeLieElement b = bracket(from_coordinates(v, lower), xi);
      if (!b.empty()) rows.push_back(coordinates(b, alpha));
    }
  }
  Subspace s = Subspace::span_dense(comp.hall.size(), field_, rows);
  ideal_cache_.emplace(key, s);
  return s;
}

Vector TruncatedQuotient::project(const FreeLieElement& a) const {
  Vector out = zero_vector(basis_multidegree.size(), free.field());
  std::map<Multidegree, FreeLieElement> parts;
  for (const auto& [k, c] : a) parts[free.hall().at(k).multidegree][k] = c;
  for (const auto& [md, part] : parts) {
    auto it = maps.find(md);
    if (it == maps.end()) continue;
    const Vector q = it->second.projection.apply(free.coordinates(part, md));
    const std::size_t off = offset.at(md);
    for (std::size_t i = 0; i < q.size(); ++i) out[off + i] += q[i];
  }
  return out;
}

TruncatedQuotient truncated_quotient(int max_degree) {
  if (max_degree < 1) throw Error("degree bound must be at least 1");
  TruncatedQuotient t{FreeLieAlgebra(3, max_degree), LieAlgebra(), {}, {}, {}};
  const FreeLieAlgebra& fl = t.free;
  const Field f = fl.field();

  std::vector<std::string> names;
  std::vector<Degree> degrees;
  std::vector<std::size_t> hall_of_basis;
  for (const auto& alpha : fl.multidegrees()) {
    const std::size_t h = fl.component(alpha).size();
    if (h == 0) continue;
    const Subspace k = subspace_sum(fl.ideal_component(IdealSchema::Symmetrized, alpha),
                                    fl.ideal_component(IdealSchema::Derived, alpha));
    QuotientMaps qm = quotient_with_section(h, k);
    if (qm.complement.empty()) continue;
    t.offset[alpha] = names.size();
    for (auto c : qm.complement) {
      const std::size_t hi = fl.component(alpha)[c];
      names.push_back(fl.hall()[hi].text);
      degrees.push_back(alpha);
      hall_of_basis.push_back(hi);
    }
    t.maps.emplace(alpha, std::move(qm));
  }
  t.basis_multidegree = degrees;

  std::vector<LieAlgebra::Entry> entries;
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (fl.hall()[hall_of_basis[i]].degree + fl.hall()[hall_of_basis[j]].degree > max_degree) continue;
      const FreeLieElement b = fl.bracket(fl.element(hall_of_basis[i]), fl.element(hall_of_basis[j]));
      SparseVector v = to_sparse(t.project(b));
      if (!v.empty()) entries.push_back({i, j, std::move(v)});
    }
  }
  t.algebra = LieAlgebra(f, names, entries, {}, degrees);
  return t;
}

JkReport check_eq_jk_report() {
  const FreeLieAlgebra fl(3, 5);
  const Multidegree alpha{1, 1, 3};
  JkReport r;
  const Subspace i_part = fl.ideal_component(IdealSchema::Symmetrized, alpha);
  const Subspace j_part = fl.ideal_component(IdealSchema::Derived, alpha);
  r.symmetrized_dim = i_part.dim();
  r.derived_dim = j_part.dim();

  auto coords = [&](const std::string& s) { return fl.coordinates(fl.parse(s), alpha); };
  const std::vector<Vector> listed = {
      coords("[[[[x1,x2],x3],x3],x3]"),
      coords("[[[[x1,x3],x2],x3],x3]"),
      coords("[[[[x1,x3],x3],x2],x3]"),
      coords("[[[[x1,x3],x3],x3],x2]"),
  };
  r.listed_independent = Subspace::span_dense(fl.component(alpha).size(), fl.field(), listed).dim() == 4;

  const std::vector<Vector> listed_i = {
      listed[0] + listed[1],
      coords("[[[x1,x3],x3],[x2,x3]]"),
      listed[2],
  };
  r.listed_span_symmetrized = Subspace::span_dense(fl.component(alpha).size(), fl.field(), listed_i) == i_part;
  r.target_outside = !subspace_sum(i_part, j_part).contains(listed[0]);
  return r;
}

bool check_eq_jk() { return check_eq_jk_report().holds(); }

}  // namespace liebider
