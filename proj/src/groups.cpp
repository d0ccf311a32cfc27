#include "crossed_s/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>
#include <sstream>

namespace crossed_s {

FiniteGroup::FiniteGroup(std::vector<std::vector<int>> table, std::string name)
    : table_(std::move(table)), name_(std::move(name)) {
  const int n = order();
  if (n == 0) throw std::invalid_argument("group must be nonempty");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw std::invalid_argument("table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw std::invalid_argument("no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("table is not associative");
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (table_[a][b] == identity_) {
        if (table_[b][a] != identity_) throw std::invalid_argument("one-sided inverse");
        inverse_[a] = b;
      }
  for (int a = 0; a < n; ++a)
    if (inverse_[a] < 0) throw std::invalid_argument("element without inverse");

  element_order_.assign(n, 1);
  for (int a = 0; a < n; ++a) {
    int x = a, k = 1;
    while (x != identity_) {
      x = table_[x][a];
      ++k;
    }
    element_order_[a] = k;
    exponent_ = static_cast<int>(std::lcm(exponent_, k));
  }

  class_of_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (class_of_[x] >= 0) continue;
    std::set<int> cls;
    for (int g = 0; g < n; ++g) cls.insert(conjugate(g, x));
    for (int y : cls) class_of_[y] = static_cast<int>(classes_.size());
    classes_.emplace_back(cls.begin(), cls.end());
  }
}

int FiniteGroup::pow(int a, long k) const {
  const long o = element_order_[a];
  long e = ((k % o) + o) % o;
  int x = identity_;
  for (long i = 0; i < e; ++i) x = table_[x][a];
  return x;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order(); ++a)
    for (int b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<int> FiniteGroup::centralizer(int x) const {
  std::vector<int> out;
  for (int g = 0; g < order(); ++g)
    if (mul(g, x) == mul(x, g)) out.push_back(g);
  return out;
}

FiniteGroup cyclic_group(int n) {
  if (n <= 0) throw ParseError("cyclic group order must be positive");
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return FiniteGroup(std::move(t), "cyclic:" + std::to_string(n));
}

FiniteGroup klein_group() {
  std::vector<std::vector<int>> t(4, std::vector<int>(4));
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return FiniteGroup(std::move(t), "klein");
}

FiniteGroup dihedral_group(int n) {
  if (n <= 0) throw ParseError("dihedral parameter must be positive");
  const int m = 2 * n;
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      int k = x % n, e = x / n, l = y % n, f = y / n;
      int r = ((e == 0 ? k + l : k - l) % n + n) % n;
      t[x][y] = r + n * ((e + f) % 2);
    }
  return FiniteGroup(std::move(t), "dihedral:" + std::to_string(n));
}

FiniteGroup symmetric_group(int n) {
  if (n <= 0 || n > 5) throw ParseError("symmetric group degree must be in 1..5");
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  const int m = static_cast<int>(perms.size());
  auto index_of = [&](const std::vector<int>& q) {
    return static_cast<int>(std::lower_bound(perms.begin(), perms.end(), q) - perms.begin());
  };
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  std::vector<int> c(n);
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      for (int i = 0; i < n; ++i) c[i] = perms[a][perms[b][i]];
      t[a][b] = index_of(c);
    }
  return FiniteGroup(std::move(t), "sym:" + std::to_string(n));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const int a = g.order(), b = h.order();
  std::vector<std::vector<int>> t(a * b, std::vector<int>(a * b));
  for (int x = 0; x < a * b; ++x)
    for (int y = 0; y < a * b; ++y)
      t[x][y] = g.mul(x % a, y % a) + a * h.mul(x / a, y / a);
  return FiniteGroup(std::move(t), "product:(" + g.name() + "," + h.name() + ")");
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

int parse_int(std::string_view text, std::string_view what) {
  std::string t = trim(text);
  if (t.empty() || !std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    throw ParseError("expected a nonnegative integer for " + std::string(what) + ", got '" + t + "'");
  if (t.size() > 6) throw ParseError("integer too large for " + std::string(what));
  return std::stoi(t);
}

}  // namespace

FiniteGroup parse_group(std::string_view spec_in) {
  std::string spec = trim(spec_in);
  auto colon = spec.find(':');
  std::string kind = spec.substr(0, colon);
  std::string arg = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (kind == "klein") {
    if (colon != std::string::npos) throw ParseError("klein takes no argument");
    return klein_group();
  }
  if (kind == "trivial" && colon == std::string::npos) return cyclic_group(1);
  if (colon == std::string::npos) throw ParseError("unknown group spec '" + spec + "'");
  if (kind == "cyclic") return cyclic_group(parse_int(arg, "cyclic order"));
  if (kind == "dihedral") return dihedral_group(parse_int(arg, "dihedral parameter"));
  if (kind == "sym") return symmetric_group(parse_int(arg, "symmetric degree"));
  if (kind == "product") {
    std::string inner = trim(arg);
    if (inner.size() < 2 || inner.front() != '(' || inner.back() != ')')
      throw ParseError("product expects (G,H)");
    inner = inner.substr(1, inner.size() - 2);
    int depth = 0;
    std::size_t split = std::string::npos;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (inner[i] == '(') ++depth;
      if (inner[i] == ')') --depth;
      if (inner[i] == ',' && depth == 0) {
        if (split != std::string::npos) throw ParseError("product expects exactly two factors");
        split = i;
      }
    }
    if (split == std::string::npos) throw ParseError("product expects two factors");
    FiniteGroup a = parse_group(inner.substr(0, split));
    FiniteGroup b = parse_group(inner.substr(split + 1));
    return direct_product(a, b);
  }
  throw ParseError("unknown group kind '" + kind + "'");
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  std::vector<int> local(g.order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i) local[elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> t(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) {
      int p = g.mul(elements[i], elements[j]);
      if (local[p] < 0) throw std::invalid_argument("subset is not closed under multiplication");
      t[i][j] = local[p];
    }
  return Subgroup{elements, local, FiniteGroup(std::move(t))};
}

std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<int> out{g.identity()};
  in[g.identity()] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (int s : generators) {
      int y = g.mul(out[i], s);
      if (!in[y]) {
        in[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

Automorphism::Automorphism(GroupPtr group, std::vector<int> images)
    : group_(std::move(group)), images_(std::move(images)) {
  const FiniteGroup& g = *group_;
  const int n = g.order();
  if (static_cast<int>(images_.size()) != n)
    throw ParseError("automorphism needs exactly " + std::to_string(n) + " images");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 0 || v >= n) throw ParseError("automorphism image out of range");
    if (seen[v]) throw ParseError("automorphism images are not a bijection");
    seen[v] = true;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (images_[g.mul(a, b)] != g.mul(images_[a], images_[b]))
        throw ParseError("images do not define a homomorphism");
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  powers_.push_back(id);
  std::vector<int> cur = images_;
  while (cur != id) {
    powers_.push_back(cur);
    std::vector<int> next(n);
    for (int x = 0; x < n; ++x) next[x] = images_[cur[x]];
    cur = next;
  }
  order_ = static_cast<int>(powers_.size());
}

int Automorphism::apply_pow(long k, int x) const {
  long e = ((k % order_) + order_) % order_;
  return powers_[e][x];
}

Automorphism Automorphism::power(long k) const {
  long e = ((k % order_) + order_) % order_;
  return Automorphism(group_, powers_[e]);
}

Automorphism parse_automorphism(GroupPtr group, std::string_view spec_in) {
  std::string spec = trim(spec_in);
  const FiniteGroup& g = *group;
  const int n = g.order();
  std::vector<int> images(n);
  if (spec == "id") {
    std::iota(images.begin(), images.end(), 0);
  } else if (spec == "inv") {
    if (!g.is_abelian()) throw ParseError("'inv' is only an automorphism of abelian groups");
    for (int x = 0; x < n; ++x) images[x] = g.inv(x);
  } else if (spec.rfind("inner:", 0) == 0) {
    std::string arg = trim(spec.substr(6));
    if (arg.empty() || arg[0] != 'g') throw ParseError("inner automorphism expects inner:gK");
    int k = parse_int(arg.substr(1), "inner element");
    if (k >= n) throw ParseError("inner element index out of range");
    for (int x = 0; x < n; ++x) images[x] = g.conjugate(k, x);
  } else if (spec.rfind("images:", 0) == 0) {
    std::string arg = trim(spec.substr(7));
    if (arg.size() < 2 || arg.front() != '[' || arg.back() != ']')
      throw ParseError("images expects a bracketed list");
    std::string body = arg.substr(1, arg.size() - 2);
    images.clear();
    std::stringstream ss(body);
    std::string item;
    while (std::getline(ss, item, ',')) images.push_back(parse_int(item, "image"));
  } else {
    throw ParseError("unknown automorphism spec '" + spec + "'");
  }
  return Automorphism(std::move(group), std::move(images));
}

std::vector<TwistedOrbit> twisted_classes(const Automorphism& f, long a) {
  const FiniteGroup& g = *f.group();
  const int n = g.order();
  std::vector<bool> done(n, false);
  std::vector<TwistedOrbit> out;
  for (int x = 0; x < n; ++x) {
    if (done[x]) continue;
    std::set<int> orbit;
    for (int s = 0; s < n; ++s) orbit.insert(g.mul(g.mul(s, x), g.inv(f.apply_pow(a, s))));
    for (int y : orbit) done[y] = true;
    out.push_back({x, std::vector<int>(orbit.begin(), orbit.end()), twisted_centralizer(f, a, x)});
  }
  return out;
}

std::vector<int> twisted_centralizer(const Automorphism& f, long a, int x) {
  const FiniteGroup& g = *f.group();
  std::vector<int> out;
  for (int s = 0; s < g.order(); ++s)
    if (g.mul(g.mul(s, x), g.inv(f.apply_pow(a, s))) == x) out.push_back(s);
  return out;
}

ExtendedGroup::ExtendedGroup(Automorphism f) : f_(std::move(f)) {
  const FiniteGroup& g = base();
  const int n = g.order(), big_n = f_.order();
  std::vector<std::vector<int>> t(n * big_n, std::vector<int>(n * big_n));
  for (int x = 0; x < n * big_n; ++x)
    for (int y = 0; y < n * big_n; ++y) {
      int s = x % n, a = x / n, u = y % n, b = y / n;
      t[x][y] = g.mul(s, f_.apply_pow(a, u)) + n * ((a + b) % big_n);
    }
  std::string name = g.name() + " x| <F>";
  tilde_ = std::make_shared<const FiniteGroup>(std::move(t), name);
}

int ExtendedGroup::element(int s, long a) const { return s + base().order() * reduce(a); }

int ExtendedGroup::reduce(long a) const {
  const long big_n = modulus();
  return static_cast<int>(((a % big_n) + big_n) % big_n);
}

namespace {

std::vector<int> small_generating_set(const FiniteGroup& g) {
  std::vector<int> gens;
  std::vector<int> span = generated_subgroup(g, gens);
  // greedily add the element of largest order not yet covered
  std::vector<int> by_order(g.order());
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
  while (static_cast<int>(span.size()) < g.order()) {
    for (int x : by_order)
      if (!std::binary_search(span.begin(), span.end(), x)) {
        gens.push_back(x);
        break;
      }
    span = generated_subgroup(g, gens);
  }
  return gens;
}

/// Extends gens -> imgs to a map on all of G by breadth-first words; nullopt when inconsistent.
std::optional<std::vector<int>> extend_hom(const FiniteGroup& g, const FiniteGroup& h,
                                           const std::vector<int>& gens, const std::vector<int>& imgs) {
  std::vector<int> map(g.order(), -1);
  map[g.identity()] = h.identity();
  std::vector<int> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i)
    for (std::size_t k = 0; k < gens.size(); ++k) {
      int x = g.mul(queue[i], gens[k]);
      int y = h.mul(map[queue[i]], imgs[k]);
      if (map[x] < 0) {
        map[x] = y;
        queue.push_back(x);
      } else if (map[x] != y) {
        return std::nullopt;
      }
    }
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != h.mul(map[a], map[b])) return std::nullopt;
  return map;
}

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h) {
  if (g.order() != h.order()) return std::nullopt;
  std::vector<int> gens = small_generating_set(g);
  std::vector<int> imgs(gens.size());
  std::optional<std::vector<int>> found;
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == gens.size()) {
      auto m = extend_hom(g, h, gens, imgs);
      if (!m) return false;
      std::vector<int> sorted = *m;
      std::sort(sorted.begin(), sorted.end());
      for (int i = 0; i < h.order(); ++i)
        if (sorted[i] != i) return false;
      found = m;
      return true;
    }
    for (int y = 0; y < h.order(); ++y) {
      if (h.element_order(y) != g.element_order(gens[k])) continue;
      imgs[k] = y;
      if (self(self, k + 1)) return true;
    }
    return false;
  };
  rec(rec, 0);
  return found;
}

}  // namespace crossed_s
