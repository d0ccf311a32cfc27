#include "crossed_s/cyclo.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <memory>
#include <numbers>
#include <ostream>
#include <sstream>

namespace crossed_s {

long gcd(long a, long b) {
  a = std::labs(a);
  b = std::labs(b);
  while (b != 0) {
    long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

long lcm(long a, long b) { return a / gcd(a, b) * b; }

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

namespace {

std::vector<int> prime_divisors(int n) {
  std::vector<int> out;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

using IntPoly = std::vector<long>;  // ascending coefficients

IntPoly cyclotomic_polynomial(int n) {
  // x^n - 1 divided by Phi_d for every proper divisor d.
  IntPoly num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    IntPoly den = cyclotomic_polynomial(d);
    int deg_num = static_cast<int>(num.size()) - 1;
    int deg_den = static_cast<int>(den.size()) - 1;
    IntPoly quot(deg_num - deg_den + 1, 0);
    for (int i = deg_num - deg_den; i >= 0; --i) {
      long q = num[i + deg_den];  // den is monic
      quot[i] = q;
      for (int j = 0; j <= deg_den; ++j) num[i + j] -= q * den[j];
    }
    num = quot;
  }
  return num;
}

/// Per-order tables: phi(n) and the canonical form of every power zeta_n^j.
struct FieldTable {
  int n = 1;
  int phi = 1;
  std::vector<std::vector<long>> power;  // power[j][k], j in [0, n), k in [0, phi)
};

const FieldTable& field(int n) {
  thread_local std::map<int, std::unique_ptr<FieldTable>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;
  auto table = std::make_unique<FieldTable>();
  table->n = n;
  table->phi = euler_phi(n);
  const int phi = table->phi;
  IntPoly poly = cyclotomic_polynomial(n);
  table->power.assign(n, std::vector<long>(phi, 0));
  std::vector<long> cur(phi, 0);
  cur[0] = 1;
  for (int j = 0; j < n; ++j) {
    table->power[j] = cur;
    // multiply by z and reduce with the monic Phi_n
    long top = cur[phi - 1];
    for (int k = phi - 1; k > 0; --k) cur[k] = cur[k - 1];
    cur[0] = 0;
    if (top != 0)
      for (int k = 0; k < phi; ++k) cur[k] -= top * poly[k];
  }
  auto& ref = *table;
  cache.emplace(n, std::move(table));
  return ref;
}

std::vector<Rational> reduce_powers(int n, const std::vector<Rational>& full) {
  const FieldTable& f = field(n);
  std::vector<Rational> out(f.phi);
  for (int j = 0; j < n; ++j) {
    if (sgn(full[j]) == 0) continue;
    if (j < f.phi) {
      out[j] += full[j];
      continue;
    }
    const auto& row = f.power[j];
    for (int k = 0; k < f.phi; ++k)
      if (row[k] != 0) out[k] += full[j] * row[k];
  }
  return out;
}

/// Solves for the coordinates of an order-n element inside Q(zeta_m), m = n/p with
/// p not dividing m, using the columns zeta_n^(p j), j < phi(m).
struct Demotion {
  std::vector<int> rows;                       // phi(m) independent rows
  std::vector<std::vector<Rational>> inverse;  // inverse of the selected square block
  std::vector<std::vector<long>> basis;        // [k][j] full phi(n) x phi(m) matrix
};

const Demotion& demotion(int n, int p) {
  thread_local std::map<std::pair<int, int>, std::unique_ptr<Demotion>> cache;
  auto key = std::make_pair(n, p);
  auto it = cache.find(key);
  if (it != cache.end()) return *it->second;
  const int m = n / p;
  const FieldTable& fn = field(n);
  const int pm = euler_phi(m);
  auto d = std::make_unique<Demotion>();
  d->basis.assign(fn.phi, std::vector<long>(pm, 0));
  for (int j = 0; j < pm; ++j) {
    const auto& col = fn.power[(static_cast<long>(p) * j) % n];
    for (int k = 0; k < fn.phi; ++k) d->basis[k][j] = col[k];
  }
  // Gaussian elimination on [B | I] restricted to a greedy choice of rows.
  std::vector<std::vector<Rational>> work;
  std::vector<int> chosen;
  std::vector<std::vector<Rational>> reduced_rows;
  std::vector<int> pivot_col;
  for (int k = 0; k < fn.phi && static_cast<int>(chosen.size()) < pm; ++k) {
    std::vector<Rational> row(pm);
    for (int j = 0; j < pm; ++j) row[j] = d->basis[k][j];
    for (std::size_t r = 0; r < reduced_rows.size(); ++r) {
      Rational f = row[pivot_col[r]];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < pm; ++j) row[j] -= f * reduced_rows[r][j];
    }
    int piv = -1;
    for (int j = 0; j < pm; ++j)
      if (sgn(row[j]) != 0) {
        piv = j;
        break;
      }
    if (piv < 0) continue;
    Rational s = row[piv];
    for (auto& v : row) v /= s;
    for (std::size_t r = 0; r < reduced_rows.size(); ++r) {
      Rational f = reduced_rows[r][piv];
      if (sgn(f) == 0) continue;
      for (int j = 0; j < pm; ++j) reduced_rows[r][j] -= f * row[j];
    }
    reduced_rows.push_back(row);
    pivot_col.push_back(piv);
    chosen.push_back(k);
  }
  if (static_cast<int>(chosen.size()) != pm) throw std::logic_error("demotion basis is singular");
  d->rows = chosen;
  // invert the square block B[rows, :]
  std::vector<std::vector<Rational>> a(pm, std::vector<Rational>(2 * pm));
  for (int r = 0; r < pm; ++r) {
    for (int j = 0; j < pm; ++j) a[r][j] = d->basis[chosen[r]][j];
    a[r][pm + r] = 1;
  }
  for (int c = 0; c < pm; ++c) {
    int piv = c;
    while (sgn(a[piv][c]) == 0) ++piv;
    std::swap(a[piv], a[c]);
    Rational s = a[c][c];
    for (auto& v : a[c]) v /= s;
    for (int r = 0; r < pm; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (int j = 0; j < 2 * pm; ++j) a[r][j] -= f * a[c][j];
    }
  }
  d->inverse.assign(pm, std::vector<Rational>(pm));
  for (int r = 0; r < pm; ++r)
    for (int j = 0; j < pm; ++j) d->inverse[r][j] = a[r][pm + j];
  auto& ref = *d;
  cache.emplace(key, std::move(d));
  return ref;
}

std::string rational_str(const Rational& q) {
  std::string s = q.get_str();
  return s;
}

}  // namespace

Cyclo::Cyclo() : n_(1), c_(1) {}
Cyclo::Cyclo(int value) : n_(1), c_{Rational(value)} {}
Cyclo::Cyclo(long value) : n_(1), c_{Rational(value)} {}
Cyclo::Cyclo(const Rational& value) : n_(1), c_{value} {}

Cyclo Cyclo::root(int n, long k) {
  if (n <= 0) throw DomainError("root of unity order must be positive");
  long e = ((k % n) + n) % n;
  const FieldTable& f = field(n);
  std::vector<Rational> c(f.phi);
  for (int i = 0; i < f.phi; ++i) c[i] = f.power[e][i];
  return Cyclo(n, std::move(c));
}

Cyclo Cyclo::from_powers(int n, const std::vector<Rational>& coeffs) {
  if (n <= 0 || static_cast<int>(coeffs.size()) != n)
    throw DomainError("from_powers expects exactly n coefficients");
  return Cyclo(n, reduce_powers(n, coeffs));
}

bool Cyclo::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

bool Cyclo::is_one() const { return is_rational() && to_rational() == 1; }

bool Cyclo::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (sgn(c_[i]) != 0) return false;
  return true;
}

Rational Cyclo::to_rational() const {
  if (!is_rational()) throw DomainError("value is not rational");
  return c_[0];
}

bool Cyclo::is_integral() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& q) { return q.get_den() == 1; });
}

Cyclo Cyclo::promoted(int m) const {
  if (m <= 0 || m % n_ != 0)
    throw DomainError("cannot promote order " + std::to_string(n_) + " to " + std::to_string(m));
  if (m == n_) return *this;
  const int step = m / n_;
  std::vector<Rational> full(m);
  for (std::size_t i = 0; i < c_.size(); ++i) full[i * step] = c_[i];
  return Cyclo(m, reduce_powers(m, full));
}

Cyclo Cyclo::reduced() const {
  Cyclo cur = *this;
  if (cur.is_rational()) return Cyclo(cur.c_[0]);
  bool progress = true;
  while (progress && cur.n_ > 1) {
    progress = false;
    for (int p : prime_divisors(cur.n_)) {
      const int m = cur.n_ / p;
      const int pm = euler_phi(m);
      if (m % p == 0) {
        bool ok = true;
        for (std::size_t i = 0; i < cur.c_.size() && ok; ++i)
          if (i % p != 0 && sgn(cur.c_[i]) != 0) ok = false;
        if (!ok) continue;
        std::vector<Rational> c(pm);
        for (int j = 0; j < pm; ++j) c[j] = cur.c_[static_cast<std::size_t>(j) * p];
        cur = Cyclo(m, std::move(c));
      } else {
        const Demotion& d = demotion(cur.n_, p);
        std::vector<Rational> y(pm);
        for (int r = 0; r < pm; ++r)
          for (int j = 0; j < pm; ++j)
            if (sgn(d.inverse[r][j]) != 0) y[r] += d.inverse[r][j] * cur.c_[d.rows[j]];
        bool ok = true;
        for (std::size_t k = 0; k < cur.c_.size() && ok; ++k) {
          Rational acc = 0;
          for (int j = 0; j < pm; ++j)
            if (d.basis[k][j] != 0) acc += y[j] * d.basis[k][j];
          if (acc != cur.c_[k]) ok = false;
        }
        if (!ok) continue;
        cur = Cyclo(m, std::move(y));
      }
      progress = true;
      break;
    }
  }
  return cur;
}

Cyclo Cyclo::galois(long k) const {
  if (n_ == 1) return *this;
  long kk = ((k % n_) + n_) % n_;
  if (gcd(kk, n_) != 1) throw DomainError("Galois exponent must be coprime to the order");
  std::vector<Rational> full(n_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    full[(static_cast<long>(i) * kk) % n_] += c_[i];
  }
  return Cyclo(n_, reduce_powers(n_, full));
}

void Cyclo::scale(const Rational& q) {
  for (auto& v : c_) v *= q;
}

Cyclo Cyclo::operator-() const {
  Cyclo r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (o.n_ == 1) {
    c_[0] += o.c_[0];
    return *this;
  }
  if (n_ == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  const int m = static_cast<int>(lcm(n_, o.n_));
  if (m != n_) *this = promoted(m);
  if (m == o.n_) {
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  } else {
    Cyclo b = o.promoted(m);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
  }
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) { return *this += -o; }

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == 1) {
    Cyclo r = b;
    r.scale(a.c_[0]);
    return r;
  }
  if (b.n_ == 1) {
    Cyclo r = a;
    r.scale(b.c_[0]);
    return r;
  }
  const int m = static_cast<int>(lcm(a.n_, b.n_));
  Cyclo xtmp, ytmp;
  const Cyclo* xp = &a;
  const Cyclo* yp = &b;
  if (a.n_ != m) xp = &(xtmp = a.promoted(m));
  if (b.n_ != m) yp = &(ytmp = b.promoted(m));
  std::vector<Rational> full(m);
  const auto& xc = xp->c_;
  const auto& yc = yp->c_;
  for (std::size_t i = 0; i < xc.size(); ++i) {
    if (sgn(xc[i]) == 0) continue;
    for (std::size_t j = 0; j < yc.size(); ++j) {
      if (sgn(yc[j]) == 0) continue;
      full[(i + j) % m] += xc[i] * yc[j];
    }
  }
  return Cyclo(m, reduce_powers(m, full));
}

Cyclo& Cyclo::operator*=(const Cyclo& o) {
  *this = *this * o;
  return *this;
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  if (a.n_ == b.n_) return a.c_ == b.c_;
  const int m = static_cast<int>(lcm(a.n_, b.n_));
  return a.promoted(m).c_ == b.promoted(m).c_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (n_ == 1) return Cyclo(Rational(1) / c_[0]);
  // Solve (multiplication by x) y = 1 over Q.
  const int phi = static_cast<int>(c_.size());
  std::vector<std::vector<Rational>> a(phi, std::vector<Rational>(phi + 1));
  for (int j = 0; j < phi; ++j) {
    Cyclo col = *this * Cyclo::root(n_, j);
    const auto& cc = col.promoted(n_).c_;
    for (int k = 0; k < phi; ++k) a[k][j] = cc[k];
  }
  a[0][phi] = 1;
  for (int c = 0; c < phi; ++c) {
    int piv = c;
    while (piv < phi && sgn(a[piv][c]) == 0) ++piv;
    if (piv == phi) throw DomainError("singular multiplication matrix");
    std::swap(a[piv], a[c]);
    Rational s = a[c][c];
    for (auto& v : a[c]) v /= s;
    for (int r = 0; r < phi; ++r) {
      if (r == c || sgn(a[r][c]) == 0) continue;
      Rational f = a[r][c];
      for (int j = c; j <= phi; ++j) a[r][j] -= f * a[c][j];
    }
  }
  std::vector<Rational> y(phi);
  for (int r = 0; r < phi; ++r) y[r] = a[r][phi];
  return Cyclo(n_, std::move(y));
}

Cyclo Cyclo::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Cyclo result(1);
  Cyclo base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

std::complex<double> Cyclo::embed() const {
  std::complex<double> acc = 0;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (sgn(c_[i]) == 0) continue;
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / n_;
    acc += c_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return acc;
}

std::string Cyclo::str() const {
  Cyclo r = reduced();
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < r.c_.size(); ++i) {
    const Rational& q = r.c_[i];
    if (sgn(q) == 0) continue;
    Rational mag = abs(q);
    if (first) {
      if (sgn(q) < 0) os << "-";
    } else {
      os << (sgn(q) < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << rational_str(mag);
      continue;
    }
    if (mag != 1) os << rational_str(mag) << "*";
    os << "z" << r.n_;
    if (i != 1) os << "^" << i;
  }
  if (first) return "0";
  return os.str();
}

namespace {

struct Parser {
  std::string_view s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool at_end() {
    skip();
    return pos >= s.size();
  }
  bool accept(char ch) {
    skip();
    if (pos < s.size() && s[pos] == ch) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw DomainError("cannot parse cyclotomic '" + std::string(s) + "': " + what);
  }
  std::string digits() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) fail("expected digits at offset " + std::to_string(start));
    return std::string(s.substr(start, pos - start));
  }
  bool peek_digit() {
    skip();
    return pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]));
  }
  bool peek(char ch) {
    skip();
    return pos < s.size() && s[pos] == ch;
  }

  // term := rational ['*' zpow] | zpow
  Cyclo term() {
    Rational coef = 1;
    bool have_coef = false;
    if (peek_digit()) {
      std::string num = digits();
      if (accept('/')) num += "/" + digits();
      coef = Rational(num);
      coef.canonicalize();
      have_coef = true;
      if (!accept('*')) return Cyclo(coef);
    }
    if (!accept('z')) {
      if (have_coef) fail("expected z after '*'");
      fail("expected a term");
    }
    long n = std::stol(digits());
    long k = 1;
    if (accept('^')) {
      bool neg = accept('-');
      k = std::stol(digits());
      if (neg) k = -k;
    }
    if (n <= 0) fail("order must be positive");
    return Cyclo(coef) * Cyclo::root(static_cast<int>(n), k);
  }
};

}  // namespace

Cyclo Cyclo::parse(std::string_view text) {
  Parser p{text};
  Cyclo acc;
  bool first = true;
  while (!p.at_end()) {
    bool neg = false;
    if (p.accept('-')) {
      neg = true;
    } else if (p.accept('+')) {
      neg = false;
    } else if (!first) {
      p.fail("expected '+' or '-'");
    }
    Cyclo t = p.term();
    acc += neg ? -t : t;
    first = false;
  }
  if (first) p.fail("empty input");
  return acc;
}

std::optional<RootOfUnity> as_root_of_unity(const Cyclo& x) {
  if (x.is_zero() || !x.is_integral()) return std::nullopt;
  Cyclo r = x.reduced();
  if (!(r * r.conj()).is_one()) return std::nullopt;
  const int big = static_cast<int>(lcm(2, r.order()));
  for (int k = 0; k < big; ++k) {
    if (Cyclo::root(big, k) == r) {
      int g = static_cast<int>(gcd(k, big));
      if (k == 0) return RootOfUnity{1, 0};
      return RootOfUnity{big / g, k / g};
    }
  }
  return std::nullopt;
}

std::vector<Cyclo> roots_of_root_of_unity(const Cyclo& x, int m) {
  auto r = as_root_of_unity(x);
  if (!r) throw DomainError("value is not a root of unity: " + x.str());
  // x = zeta_q^k; the m-th roots are zeta_(q m)^(k + q j).
  const int q = r->order;
  std::vector<Cyclo> out;
  for (int j = 0; j < m; ++j) out.push_back(Cyclo::root(q * m, r->exponent + static_cast<long>(q) * j));
  std::sort(out.begin(), out.end(),
            [](const Cyclo& a, const Cyclo& b) { return argument(a) < argument(b); });
  return out;
}

double argument(const Cyclo& x) {
  auto z = x.embed();
  double a = std::atan2(z.imag(), z.real());
  if (a < 0) a += 2 * std::numbers::pi;
  if (a > 2 * std::numbers::pi - 1e-9) a = 0;
  if (a < 1e-12) a = 0;
  return a;
}

std::ostream& operator<<(std::ostream& os, const Cyclo& x) { return os << x.str(); }

}  // namespace crossed_s
