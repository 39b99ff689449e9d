#include "liebider/oracle.hpp"

#include <cmath>
#include <cstdlib>
#include <functional>
#include <string>

namespace liebider {

EnumerationBudget EnumerationBudget::from_env(std::uint32_t p) {
  EnumerationBudget b;
  b.p = p;
  if (const char* s = std::getenv("LIEBIDER_MAX_UNKNOWNS")) {
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (end == s || *end != '\0' || v < 0) throw Error("LIEBIDER_MAX_UNKNOWNS must be a non-negative integer");
    b.max_unknowns = static_cast<std::size_t>(v);
  }
  return b;
}

LModule adjoint_mod_p(const LieAlgebra& l, std::uint32_t p) {
  return LModule::adjoint(std::make_shared<const LieAlgebra>(l.with_field(Field::prime(p))));
}

namespace {

using Table = std::vector<std::vector<std::uint32_t>>;  // dense residues per basis pair

struct Setup {
  std::uint32_t p;
  std::size_t n;    // dim L
  std::size_t dm;   // dim M
  Table bracket;    // [e_i, e_j] at i * n + j
  Table action;     // e_i . v_j at i * dm + j
};

Setup prepare(const LModule& m, const EnumerationBudget& budget, std::size_t unknowns) {
  if (budget.p == 2 || !is_prime(budget.p)) throw Error("oracle modulus must be an odd prime");
  if (m.field() != Field::prime(budget.p)) throw FieldMismatch("module is not over F_" + std::to_string(budget.p));
  const LieAlgebra& l = m.lie();
  if (l.is_partial() || m.is_partial()) throw Error("oracle needs complete brackets and actions");
  if (unknowns > budget.max_unknowns) {
    throw BudgetExceeded(std::to_string(unknowns) + " unknowns exceed the budget of " +
                         std::to_string(budget.max_unknowns));
  }
  if (std::pow(static_cast<double>(budget.p), static_cast<double>(unknowns)) > kEnumerationCeiling) {
    throw BudgetExceeded("p^unknowns exceeds the hard ceiling");
  }
  Setup s{budget.p, l.dim(), m.dim(), {}, {}};
  s.bracket.assign(s.n * s.n, std::vector<std::uint32_t>(s.n, 0));
  s.action.assign(s.n * s.dm, std::vector<std::uint32_t>(s.dm, 0));
  for (std::size_t i = 0; i < s.n; ++i) {
    for (std::size_t j = 0; j < s.n; ++j) {
      for (const auto& [k, c] : l.bracket(i, j)) s.bracket[i * s.n + j][k] = c.residue();
    }
    for (std::size_t j = 0; j < s.dm; ++j) {
      for (const auto& [k, c] : m.act(i, j)) s.action[i * s.dm + j][k] = c.residue();
    }
  }
  return s;
}

// Depth-first enumeration over coefficient blocks of width `width`. After
// block b is fully assigned, check(b, values) must accept the partial
// assignment; it only inspects blocks 0..b.
OracleResult search(const Setup& s, std::size_t blocks, std::size_t width,
                    const std::function<bool(std::size_t, const std::vector<std::uint32_t>&)>& check) {
  OracleResult out;
  const std::size_t unknowns = blocks * width;
  out.unknowns = unknowns;
  std::vector<std::uint32_t> values(unknowns, 0);
  const Field f = Field::prime(s.p);
  std::function<void(std::size_t)> rec = [&](std::size_t pos) {
    ++out.nodes;
    if (pos > 0 && pos % width == 0 && !check(pos / width - 1, values)) return;
    if (pos == unknowns) {
      Vector v;
      v.reserve(unknowns);
      for (auto x : values) v.emplace_back(static_cast<long>(x), f);
      out.members.push_back(std::move(v));
      return;
    }
    for (std::uint32_t a = 0; a < s.p; ++a) {
      values[pos] = a;
      rec(pos + 1);
    }
    values[pos] = 0;
  };
  if (unknowns == 0) {
    if (check(0, values)) out.members.emplace_back();
  } else {
    rec(0);
  }
  out.space = Subspace::span_dense(unknowns, f, out.members);
  // members lies in its span; equal cardinality makes them equal
  const double expected = std::pow(static_cast<double>(s.p), static_cast<double>(out.space.dim()));
  out.closed = static_cast<double>(out.members.size()) == expected;
  return out;
}

OracleResult enumerate_bider(const LModule& m, const EnumerationBudget& budget, Symmetry sym) {
  const std::size_t n = m.lie().dim();
  const std::size_t blocks = pair_count(n, sym);
  const Setup s = prepare(m, budget, blocks * m.dim());
  const std::uint64_t p = s.p;
  const Scalar minus = Scalar(-1, Field::prime(s.p));
  const std::uint64_t sign_swap = sym == Symmetry::Skew ? minus.residue() : 1;

  // block of delta(e_i, e_j) and the sign relating it to the stored pair
  auto locate = [&](std::size_t i, std::size_t j, std::size_t& block, std::uint64_t& sign) {
    if (i == j && sym == Symmetry::Skew) return false;
    const bool swap = i > j;
    block = pair_index(swap ? j : i, swap ? i : j, n, sym);
    sign = swap ? sign_swap : 1;
    return true;
  };

  // instances (x < y, z) grouped by the largest block they read
  struct Instance {
    std::size_t x, y, z;
  };
  std::vector<std::vector<Instance>> by_block(std::max<std::size_t>(blocks, 1));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        std::size_t top = 0, b = 0;
        std::uint64_t sg = 0;
        const auto& br = s.bracket[x * n + y];
        for (std::size_t t = 0; t < n; ++t) {
          if (br[t] != 0 && locate(t, z, b, sg)) top = std::max(top, b);
        }
        if (locate(y, z, b, sg)) top = std::max(top, b);
        if (locate(x, z, b, sg)) top = std::max(top, b);
        by_block[top].push_back({x, y, z});
      }
    }
  }

  const std::size_t dm = s.dm;
  auto value = [&](const std::vector<std::uint32_t>& v, std::size_t i, std::size_t j, std::vector<std::uint64_t>& out,
                   std::uint64_t c) {
    std::size_t b = 0;
    std::uint64_t sg = 0;
    if (!locate(i, j, b, sg)) return;
    for (std::size_t k = 0; k < dm; ++k) out[k] = (out[k] + c * sg % p * v[b * dm + k]) % p;
  };
  auto act_into = [&](std::size_t x, const std::vector<std::uint64_t>& w, std::vector<std::uint64_t>& out,
                      std::uint64_t c) {
    for (std::size_t j = 0; j < dm; ++j) {
      if (w[j] == 0) continue;
      const auto& a = s.action[x * dm + j];
      for (std::size_t k = 0; k < dm; ++k) out[k] = (out[k] + c * w[j] % p * a[k]) % p;
    }
  };

  auto check = [&](std::size_t block, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint64_t> lhs(dm), dyz(dm), dxz(dm);
    for (const auto& in : by_block[block]) {
      std::fill(lhs.begin(), lhs.end(), 0);
      std::fill(dyz.begin(), dyz.end(), 0);
      std::fill(dxz.begin(), dxz.end(), 0);
      const auto& br = s.bracket[in.x * n + in.y];
      for (std::size_t t = 0; t < n; ++t) {
        if (br[t] != 0) value(v, t, in.z, lhs, br[t]);
      }
      value(v, in.y, in.z, dyz, 1);
      value(v, in.x, in.z, dxz, 1);
      // lhs - x.delta(y,z) + y.delta(x,z)
      act_into(in.x, dyz, lhs, p - 1);
      act_into(in.y, dxz, lhs, 1);
      for (auto c : lhs) {
        if (c != 0) return false;
      }
    }
    return true;
  };
  return search(s, blocks, dm, check);
}

}  // namespace

OracleResult enumerate_skew_biderivations(const LModule& m, const EnumerationBudget& budget) {
  return enumerate_bider(m, budget, Symmetry::Skew);
}

OracleResult enumerate_symmetric_biderivations(const LModule& m, const EnumerationBudget& budget) {
  return enumerate_bider(m, budget, Symmetry::Symmetric);
}

OracleResult enumerate_commuting(const LModule& m, const EnumerationBudget& budget) {
  const std::size_t n = m.lie().dim();
  const Setup s = prepare(m, budget, n * m.dim());
  const std::uint64_t p = s.p;
  const std::size_t dm = s.dm;

  // every nonzero x in F_p^n, grouped by its highest nonzero coordinate
  std::vector<std::vector<std::vector<std::uint32_t>>> by_block(std::max<std::size_t>(n, 1));
  std::vector<std::uint32_t> x(n, 0);
  std::function<void(std::size_t)> gen = [&](std::size_t i) {
    if (i == n) {
      for (std::size_t t = n; t-- > 0;) {
        if (x[t] != 0) {
          by_block[t].push_back(x);
          break;
        }
      }
      return;
    }
    for (std::uint32_t a = 0; a < s.p; ++a) {
      x[i] = a;
      gen(i + 1);
    }
    x[i] = 0;
  };
  gen(0);

  auto check = [&](std::size_t block, const std::vector<std::uint32_t>& v) {
    std::vector<std::uint64_t> fx(dm), out(dm);
    for (const auto& vec : by_block[block]) {
      std::fill(fx.begin(), fx.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (vec[i] == 0) continue;
        for (std::size_t k = 0; k < dm; ++k) fx[k] = (fx[k] + std::uint64_t{vec[i]} * v[i * dm + k]) % p;
      }
      std::fill(out.begin(), out.end(), 0);
      for (std::size_t i = 0; i < n; ++i) {
        if (vec[i] == 0) continue;
        for (std::size_t j = 0; j < dm; ++j) {
          if (fx[j] == 0) continue;
          const std::uint64_t c = std::uint64_t{vec[i]} * fx[j] % p;
          const auto& a = s.action[i * dm + j];
          for (std::size_t k = 0; k < dm; ++k) out[k] = (out[k] + c * a[k]) % p;
        }
      }
      for (auto c : out) {
        if (c != 0) return false;
      }
    }
    return true;
  };
  return search(s, n, dm, check);
}

}  // namespace liebider
