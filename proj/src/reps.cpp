#include "crossed_s/reps.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crossed_s {

namespace {

// ---- arithmetic mod p ------------------------------------------------------

using i64 = long long;

i64 mod(i64 a, i64 p) { return ((a % p) + p) % p; }

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 q : factors)
      if (powmod(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using ModMat = std::vector<std::vector<i64>>;  // row major

/// Nullspace basis (as column vectors) of a rows x cols matrix mod p.
std::vector<std::vector<i64>> nullspace_mod(ModMat a, int cols, i64 p) {
  const int rows = static_cast<int>(a.size());
  std::vector<int> pivots;
  int row = 0;
  for (int c = 0; c < cols && row < rows; ++c) {
    int piv = row;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[row]);
    i64 inv = invmod(a[row][c], p);
    for (int j = 0; j < cols; ++j) a[row][j] = a[row][j] * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == row || a[r][c] == 0) continue;
      i64 f = a[r][c];
      for (int j = 0; j < cols; ++j) a[r][j] = mod(a[r][j] - f * a[row][j], p);
    }
    pivots.push_back(c);
    ++row;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<i64>> basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<i64> v(cols, 0);
    v[f] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = mod(-a[r][f], p);
    basis.push_back(v);
  }
  return basis;
}

struct ModTable {
  std::vector<std::vector<i64>> chi;  // [row][class] mod p
  std::vector<int> degree;
};

/// Splits the class-sum algebra into joint eigenlines mod p. Returns nullopt when p is unsuitable.
std::optional<ModTable> dixon_mod_p(const FiniteGroup& g, i64 p) {
  const auto& classes = g.classes();
  const int r = static_cast<int>(classes.size());
  const int id_class = g.class_of(g.identity());
  // c[i][j][k] = #{(x, y) in C_i x C_j : x y = rep_k}
  std::vector<ModMat> m(r, ModMat(r, std::vector<i64>(r, 0)));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      std::vector<i64> count(r, 0);
      for (int x : classes[i])
        for (int y : classes[j]) {
          int z = g.mul(x, y);
          int k = g.class_of(z);
          if (classes[k][0] == z) ++count[k];
        }
      for (int k = 0; k < r; ++k) m[i][j][k] = count[k] % p;
    }
  // joint eigenspaces of v -> M_i v with (M_i)_{jk} = c_{ijk}
  std::vector<std::vector<std::vector<i64>>> spaces;  // each: list of basis vectors
  {
    std::vector<std::vector<i64>> full;
    for (int k = 0; k < r; ++k) {
      std::vector<i64> e(r, 0);
      e[k] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (int i = 0; i < r; ++i) {
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& w : spaces) {
      const int d = static_cast<int>(w.size());
      if (d == 1) {
        next.push_back(w);
        continue;
      }
      // (M_i - lambda) W for each lambda
      ModMat mw(r, std::vector<i64>(d, 0));
      for (int row = 0; row < r; ++row)
        for (int c = 0; c < d; ++c) {
          i64 acc = 0;
          for (int k = 0; k < r; ++k) acc += m[i][row][k] * w[c][k] % p;
          mw[row][c] = acc % p;
        }
      int found = 0;
      for (i64 lambda = 0; lambda < p && found < d; ++lambda) {
        ModMat a = mw;
        for (int row = 0; row < r; ++row)
          for (int c = 0; c < d; ++c) a[row][c] = mod(a[row][c] - lambda * w[c][row], p);
        auto ns = nullspace_mod(a, d, p);
        if (ns.empty()) continue;
        std::vector<std::vector<i64>> sub;
        for (const auto& coeffs : ns) {
          std::vector<i64> v(r, 0);
          for (int c = 0; c < d; ++c)
            for (int k = 0; k < r; ++k) v[k] = (v[k] + coeffs[c] * w[c][k]) % p;
          sub.push_back(v);
        }
        found += static_cast<int>(sub.size());
        next.push_back(sub);
      }
      if (found != d) return std::nullopt;
    }
    spaces = std::move(next);
  }
  if (static_cast<int>(spaces.size()) != r) return std::nullopt;

  ModTable out;
  const i64 order = g.order();
  // k* = class of inverses
  std::vector<int> inv_class(r);
  for (int k = 0; k < r; ++k) inv_class[k] = g.class_of(g.inv(classes[k][0]));
  for (auto& w1 : spaces) {
    std::vector<i64> w = w1[0];
    if (w[id_class] == 0) return std::nullopt;
    i64 s = invmod(w[id_class], p);
    for (auto& v : w) v = v * s % p;
    i64 denom = 0;
    for (int k = 0; k < r; ++k) {
      i64 sz = static_cast<i64>(classes[k].size());
      denom = (denom + w[k] * w[inv_class[k]] % p * invmod(sz, p)) % p;
    }
    if (denom == 0) return std::nullopt;
    i64 d2 = order % p * invmod(denom, p) % p;
    int degree = -1;
    for (int d = 1; static_cast<i64>(d) * d <= order; ++d)
      if (static_cast<i64>(d) * d % p == d2) {
        degree = d;
        break;
      }
    if (degree < 0) return std::nullopt;
    std::vector<i64> chi(r);
    for (int k = 0; k < r; ++k)
      chi[k] = degree * w[k] % p * invmod(static_cast<i64>(classes[k].size()), p) % p;
    out.chi.push_back(chi);
    out.degree.push_back(degree);
  }
  return out;
}

struct LiftedRow {
  std::vector<Cyclo> values;
  std::vector<std::vector<int>> multiplicities;  // per class: eigenvalue multiplicities
  int degree;
};

}  // namespace

CharTable char_table(const FiniteGroup& g) {
  const int n = g.order();
  const int e = g.exponent();
  const auto& classes = g.classes();
  const int r = static_cast<int>(classes.size());
  const i64 bound = std::max<i64>(n, 2 * static_cast<i64>(std::ceil(std::sqrt(static_cast<double>(n))))) + 1;
  i64 p = bound + (e - (bound - 1) % e) % e;  // first p >= bound with p = 1 mod e
  for (int attempt = 0; attempt < 200; ++attempt, p += e) {
    if (!is_prime(p)) {
      --attempt;
      continue;
    }
    auto mt = dixon_mod_p(g, p);
    if (!mt) continue;
    const i64 z = powmod(primitive_root(p), (p - 1) / e, p);
    std::vector<LiftedRow> rows;
    bool ok = true;
    for (std::size_t row = 0; row < mt->chi.size() && ok; ++row) {
      LiftedRow lr;
      lr.degree = mt->degree[row];
      for (int k = 0; k < r && ok; ++k) {
        const int x = classes[k][0];
        const int o = g.element_order(x);
        const i64 zo = powmod(z, e / o, p);
        const i64 inv_o = invmod(o, p);
        std::vector<int> mult(o, 0);
        std::vector<Rational> coeffs(o);
        int total = 0;
        for (int t = 0; t < o; ++t) {
          i64 acc = 0;
          for (int j = 0; j < o; ++j) {
            i64 val = mt->chi[row][g.class_of(g.pow(x, j))];
            acc = (acc + val * powmod(zo, mod(-static_cast<i64>(j) * t, o), p)) % p;
          }
          i64 mt_val = acc * inv_o % p;
          if (mt_val > lr.degree) {
            ok = false;
            break;
          }
          mult[t] = static_cast<int>(mt_val);
          coeffs[t] = static_cast<long>(mt_val);
          total += mult[t];
        }
        if (!ok || total != lr.degree) {
          ok = false;
          break;
        }
        lr.values.push_back(Cyclo::from_powers(o, coeffs).reduced());
        lr.multiplicities.push_back(mult);
      }
      rows.push_back(std::move(lr));
    }
    if (!ok) continue;
    // exact orthogonality
    for (int a = 0; a < r && ok; ++a)
      for (int b = 0; b < r && ok; ++b) {
        Cyclo acc;
        for (int k = 0; k < r; ++k)
          acc += Cyclo(static_cast<long>(classes[k].size())) * rows[a].values[k] * conj(rows[b].values[k]);
        if (acc != Cyclo(a == b ? n : 0)) ok = false;
      }
    if (!ok) continue;
    std::sort(rows.begin(), rows.end(), [](const LiftedRow& x, const LiftedRow& y) {
      if (x.degree != y.degree) return x.degree < y.degree;
      return x.multiplicities > y.multiplicities;
    });
    CharTable t;
    t.exponent = e;
    t.classes = classes;
    t.class_of.resize(n);
    for (int x = 0; x < n; ++x) t.class_of[x] = g.class_of(x);
    t.class_of_identity = g.class_of(g.identity());
    for (auto& lr : rows) t.values.push_back(std::move(lr.values));
    return t;
  }
  throw std::runtime_error("character table computation failed for group of order " + std::to_string(n));
}

std::vector<Cyclo> character_of(const Irrep& rho) {
  std::vector<Cyclo> out;
  for (const auto& m : rho.matrices) out.push_back(trace(m));
  return out;
}

bool is_homomorphism(const FiniteGroup& g, const Irrep& rho) {
  if (!equal(rho(g.identity()), CMat(CMat::Identity(rho.dim, rho.dim)))) return false;
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (!equal(rho(g.mul(a, b)), mul(rho(a), rho(b)))) return false;
  return true;
}

namespace {

using Algebra = std::vector<Cyclo>;  // group algebra element, coefficient per element

Algebra algebra_mul(const FiniteGroup& g, const Algebra& a, const Algebra& b) {
  Algebra out(g.order());
  for (int x = 0; x < g.order(); ++x) {
    if (a[x].is_zero()) continue;
    for (int y = 0; y < g.order(); ++y)
      if (!b[y].is_zero()) out[g.mul(x, y)] += a[x] * b[y];
  }
  return out;
}

struct LinearCandidate {
  std::vector<int> subgroup;   // elements of an abelian subgroup H
  std::vector<Cyclo> lambda;   // lambda(h) per entry of `subgroup`
};

/// Abelian subgroups (cyclic first, then 2-generated) with all their linear characters.
std::vector<LinearCandidate> linear_candidates(const FiniteGroup& g) {
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> subgroups;
  for (int x = 0; x < g.order(); ++x) {
    auto h = generated_subgroup(g, {x});
    if (seen.insert(h).second) subgroups.push_back(h);
  }
  for (int x = 0; x < g.order(); ++x)
    for (int y = x + 1; y < g.order(); ++y) {
      if (g.mul(x, y) != g.mul(y, x)) continue;
      auto h = generated_subgroup(g, {x, y});
      if (seen.insert(h).second) subgroups.push_back(h);
    }
  std::vector<LinearCandidate> out;
  for (const auto& h : subgroups) {
    Subgroup sub = make_subgroup(g, h);
    if (!sub.group.is_abelian()) continue;
    CharTable t = char_table(sub.group);
    for (int row = 0; row < t.size(); ++row) {
      LinearCandidate c;
      c.subgroup = h;
      for (std::size_t l = 0; l < h.size(); ++l) c.lambda.push_back(t.value(row, static_cast<int>(l)));
      out.push_back(std::move(c));
    }
  }
  return out;
}

Irrep build_from_vector(const FiniteGroup& g, const Algebra& v, int dim) {
  const int n = g.order();
  auto translate = [&](int s, const Algebra& a) {
    Algebra out(n);
    for (int x = 0; x < n; ++x)
      if (!a[x].is_zero()) out[g.mul(s, x)] = a[x];
    return out;
  };
  std::vector<Algebra> basis;
  CMat reduced(0, n);
  for (int s = 0; s < n && static_cast<int>(basis.size()) < dim; ++s) {
    Algebra w = translate(s, v);
    CMat cand(basis.size() + 1, n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int x = 0; x < n; ++x) cand(i, x) = basis[i][x];
    for (int x = 0; x < n; ++x) cand(basis.size(), x) = w[x];
    if (rank(cand) == static_cast<int>(basis.size()) + 1) basis.push_back(w);
  }
  if (static_cast<int>(basis.size()) != dim) throw std::runtime_error("irrep module has wrong dimension");
  CMat b(n, dim);
  for (int j = 0; j < dim; ++j)
    for (int x = 0; x < n; ++x) b(x, j) = basis[j][x];
  // rows where B is invertible
  std::vector<int> rows = rref(CMat(b.transpose())).pivots;
  CMat bp(dim, dim);
  for (int i = 0; i < dim; ++i) bp.row(i) = b.row(rows[i]);
  CMat bp_inv = *inverse(bp);
  Irrep rho;
  rho.dim = dim;
  for (int s = 0; s < n; ++s) {
    CMat img(dim, dim);
    for (int j = 0; j < dim; ++j) {
      Algebra w = translate(s, basis[j]);
      for (int i = 0; i < dim; ++i) img(i, j) = w[rows[i]];
    }
    rho.matrices.push_back(mul(bp_inv, img));
  }
  return rho;
}

}  // namespace

std::vector<Irrep> irreps(const FiniteGroup& g, const CharTable& table) {
  const int n = g.order();
  std::vector<Irrep> out;
  std::vector<LinearCandidate> candidates;
  bool have_candidates = false;
  for (int row = 0; row < table.size(); ++row) {
    const int d = table.degree(row);
    Irrep rho;
    if (d == 1) {
      rho.dim = 1;
      for (int x = 0; x < n; ++x) {
        CMat m(1, 1);
        m(0, 0) = table.value(row, x);
        rho.matrices.push_back(m);
      }
    } else {
      if (!have_candidates) {
        candidates = linear_candidates(g);
        have_candidates = true;
      }
      Algebra e_chi(n);
      for (int x = 0; x < n; ++x) e_chi[x] = Cyclo(d) * conj(table.value(row, x)) / Cyclo(n);
      bool built = false;
      for (const auto& c : candidates) {
        Cyclo mult;
        for (std::size_t i = 0; i < c.subgroup.size(); ++i)
          mult += table.value(row, c.subgroup[i]) * conj(c.lambda[i]);
        mult /= Cyclo(static_cast<long>(c.subgroup.size()));
        if (!mult.is_one()) continue;
        Algebra f(n);
        for (std::size_t i = 0; i < c.subgroup.size(); ++i)
          f[c.subgroup[i]] = conj(c.lambda[i]) / Cyclo(static_cast<long>(c.subgroup.size()));
        Algebra v = algebra_mul(g, e_chi, f);
        rho = build_from_vector(g, v, d);
        built = true;
        break;
      }
      if (!built)
        throw std::runtime_error("no multiplicity-one linear character found for irrep of degree " +
                                 std::to_string(d));
    }
    if (!is_homomorphism(g, rho)) throw std::runtime_error("constructed irrep is not a homomorphism");
    auto chi = character_of(rho);
    for (int x = 0; x < n; ++x)
      if (chi[x] != table.value(row, x)) throw std::runtime_error("constructed irrep has the wrong character");
    out.push_back(std::move(rho));
  }
  return out;
}

Irrep pullback(const Irrep& rho, const std::vector<int>& phi) {
  if (phi.size() != rho.matrices.size()) throw std::invalid_argument("pullback: domain mismatch");
  Irrep out;
  out.dim = rho.dim;
  for (int x : phi) {
    if (x < 0 || x >= static_cast<int>(rho.matrices.size())) throw std::invalid_argument("pullback: image out of range");
    out.matrices.push_back(rho.matrices[x]);
  }
  return out;
}

std::string char_table_csv(const CharTable& table) {
  std::ostringstream os;
  os << "character";
  for (const auto& cls : table.classes) os << ",g" << cls[0] << " (size " << cls.size() << ")";
  os << "\n";
  for (int row = 0; row < table.size(); ++row) {
    os << "chi" << row;
    for (const auto& v : table.values[row]) os << "," << v.str();
    os << "\n";
  }
  return os.str();
}

}  // namespace crossed_s
