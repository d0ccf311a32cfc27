#include "crossed_s/eqcat.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace crossed_s {

namespace {

CMat eye(int n) { return CMat::Identity(n, n); }
CMat zeros(int r, int c) { return CMat::Zero(r, c); }

// off[z][x]: start of the summand V_x (x) W_{x^-1 z} inside (V (x) W)_z, or -1.
struct Layout {
  std::vector<std::vector<int>> off;
  std::vector<int> dims;
};

Layout layout(const EqObject& v, const EqObject& w) {
  const FiniteGroup& g = v.category()->grading();
  const int n = g.order();
  Layout l;
  l.off.assign(n, std::vector<int>(n, -1));
  l.dims.assign(n, 0);
  for (int z = 0; z < n; ++z) {
    int run = 0;
    for (int x = 0; x < n; ++x) {
      const int d = v.dim(x) * w.dim(g.mul(g.inv(x), z));
      if (d == 0) continue;
      l.off[z][x] = run;
      run += d;
    }
    l.dims[z] = run;
  }
  return l;
}

void require_same_category(const EqObject& a, const EqObject& b) {
  if (a.category() != b.category()) throw std::invalid_argument("objects live in different categories");
}

// Greedy generating set of a subgroup given by its elements.
std::vector<int> generators_of(const FiniteGroup& g, const std::vector<int>& elements) {
  std::vector<int> gens;
  std::vector<int> span{g.identity()};
  for (int x : elements) {
    if (std::find(span.begin(), span.end(), x) != span.end()) continue;
    gens.push_back(x);
    span = generated_subgroup(g, gens);
  }
  return gens;
}

int homogeneous_sector(const EqObject& v) {
  auto s = v.sector();
  if (!s) throw std::invalid_argument("object is not homogeneous");
  return *s;
}

}  // namespace

// ---------------------------------------------------------------- category

EqCategory::EqCategory(ExtendedGroup ext) : ext_(std::move(ext)) {}
EqCategory::~EqCategory() = default;

std::shared_ptr<const EqCategory> EqCategory::create(ExtendedGroup ext) {
  std::shared_ptr<EqCategory> c(new EqCategory(std::move(ext)));
  c->init();
  return c;
}

std::shared_ptr<const EqCategory> EqCategory::double_of(const FiniteGroup& g) {
  auto gp = std::make_shared<const FiniteGroup>(g);
  std::vector<int> id(g.order());
  std::iota(id.begin(), id.end(), 0);
  return create(ExtendedGroup(Automorphism(gp, id)));
}

void EqCategory::init() {
  const int n = grading().order();
  const int m = acting().order();
  orbit_rep_.assign(n, -1);
  transversal_.assign(n, -1);
  for (int x = 0; x < n; ++x) {
    if (orbit_rep_[x] >= 0) continue;
    std::vector<int> stab;
    for (int g = 0; g < m; ++g) {
      const int y = act(g, x);
      if (transversal_[y] < 0) {
        orbit_rep_[y] = x;
        transversal_[y] = g;
      }
      if (y == x) stab.push_back(g);
    }
    stabilizers_[x] = std::move(stab);
  }
  for (const auto& [rep, stab] : stabilizers_) {
    const int rows = stabilizer_data(rep).table.size();
    for (int i = 0; i < rows; ++i) simples_.push_back({sector(rep), rep, i});
  }
}

const StabilizerData& EqCategory::stabilizer_data(int rep) const {
  std::lock_guard lock(mutex_);
  auto it = stab_cache_.find(rep);
  if (it != stab_cache_.end()) return *it->second;
  Subgroup sub = make_subgroup(acting(), stabilizers_.at(rep));
  CharTable t = char_table(sub.group);
  std::vector<Irrep> reps = irreps(sub.group, t);
  auto data = std::make_unique<StabilizerData>(StabilizerData{std::move(sub), std::move(t), std::move(reps)});
  return *stab_cache_.emplace(rep, std::move(data)).first->second;
}

std::vector<int> EqCategory::simples_in_sector(int a) const {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(simples_.size()); ++i)
    if (simples_[i].sector == a) out.push_back(i);
  return out;
}

int EqCategory::index_of(const SimpleLabel& l) const {
  auto it = std::find(simples_.begin(), simples_.end(), l);
  if (it == simples_.end()) throw std::out_of_range("unknown simple label");
  return static_cast<int>(it - simples_.begin());
}

const EqObject& EqCategory::simple(int index) const {
  std::lock_guard lock(mutex_);
  auto it = simple_cache_.find(index);
  if (it != simple_cache_.end()) return *it->second;
  EqObject obj = simple_object(shared_from_this(), simples_.at(index));
  return *simple_cache_.emplace(index, std::make_unique<EqObject>(std::move(obj))).first->second;
}

EqObject EqCategory::unit() const {
  const int n = grading().order(), m = acting().order();
  std::vector<int> dims(n, 0);
  dims[grading().identity()] = 1;
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x) action[g][x] = x == grading().identity() ? eye(1) : zeros(0, 0);
  return EqObject(shared_from_this(), std::move(dims), std::move(action));
}

// ---------------------------------------------------------------- objects

EqObject::EqObject(CatPtr cat, std::vector<int> dims, std::vector<std::vector<CMat>> action) {
  const int n = cat->grading().order(), m = cat->acting().order();
  if (static_cast<int>(dims.size()) != n || static_cast<int>(action.size()) != m)
    throw std::invalid_argument("EqObject: wrong number of stalks or group elements");
  for (int g = 0; g < m; ++g) {
    if (static_cast<int>(action[g].size()) != n) throw std::invalid_argument("EqObject: wrong action shape");
    for (int x = 0; x < n; ++x) {
      const CMat& b = action[g][x];
      if (b.rows() != dims[cat->act(g, x)] || b.cols() != dims[x])
        throw std::invalid_argument("EqObject: action block has wrong size");
    }
  }
  d_ = std::make_shared<const Data>(Data{std::move(cat), std::move(dims), std::move(action)});
}

int EqObject::total_dim() const { return std::accumulate(d_->dims.begin(), d_->dims.end(), 0); }

std::vector<int> EqObject::support() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(d_->dims.size()); ++x)
    if (d_->dims[x] > 0) out.push_back(x);
  return out;
}

std::optional<int> EqObject::sector() const {
  std::optional<int> s;
  for (int x : support()) {
    const int a = d_->cat->sector(x);
    if (s && *s != a) return std::nullopt;
    s = a;
  }
  return s;
}

bool EqObject::is_valid() const {
  const EqCategory& c = *d_->cat;
  const FiniteGroup& gam = c.acting();
  const int n = c.grading().order(), m = gam.order();
  for (int x = 0; x < n; ++x)
    if (!equal(act(gam.identity(), x), eye(dim(x)))) return false;
  for (int g = 0; g < m; ++g)
    for (int h = 0; h < m; ++h)
      for (int x = 0; x < n; ++x) {
        if (dim(x) == 0) continue;
        if (!equal(mul(act(g, c.act(h, x)), act(h, x)), act(gam.mul(g, h), x))) return false;
      }
  return true;
}

bool operator==(const EqObject& a, const EqObject& b) {
  if (a.d_ == b.d_) return true;
  return a.d_->cat == b.d_->cat && a.d_->dims == b.d_->dims && a.d_->action == b.d_->action;
}

// ---------------------------------------------------------------- morphisms

EqMorphism::EqMorphism(EqObject source, EqObject target, std::vector<CMat> blocks)
    : src_(std::move(source)), tgt_(std::move(target)), blocks_(std::move(blocks)) {
  require_same_category(src_, tgt_);
  const int n = src_.category()->grading().order();
  if (static_cast<int>(blocks_.size()) != n) throw std::invalid_argument("EqMorphism: wrong number of blocks");
  for (int x = 0; x < n; ++x)
    if (blocks_[x].rows() != tgt_.dim(x) || blocks_[x].cols() != src_.dim(x))
      throw std::invalid_argument("EqMorphism: block has wrong size");
}

bool EqMorphism::is_zero() const {
  return std::all_of(blocks_.begin(), blocks_.end(), [](const CMat& b) { return is_zero_matrix(b); });
}

bool EqMorphism::is_equivariant() const {
  const EqCategory& c = *src_.category();
  const int n = c.grading().order(), m = c.acting().order();
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x) {
      const int y = c.act(g, x);
      if (!equal(mul(blocks_[y], src_.act(g, x)), mul(tgt_.act(g, x), blocks_[x]))) return false;
    }
  return true;
}

bool EqMorphism::is_invertible() const {
  for (const CMat& b : blocks_)
    if (b.rows() != b.cols() || (b.rows() > 0 && !crossed_s::inverse(b))) return false;
  return true;
}

EqMorphism EqMorphism::operator+(const EqMorphism& o) const {
  if (src_ != o.src_ || tgt_ != o.tgt_) throw std::invalid_argument("EqMorphism +: mismatched objects");
  std::vector<CMat> b(blocks_.size());
  for (std::size_t x = 0; x < b.size(); ++x) b[x] = blocks_[x] + o.blocks_[x];
  return EqMorphism(src_, tgt_, std::move(b));
}

EqMorphism EqMorphism::operator-(const EqMorphism& o) const { return *this + o * Cyclo(-1); }

EqMorphism EqMorphism::operator*(const Cyclo& c) const {
  std::vector<CMat> b(blocks_.size());
  for (std::size_t x = 0; x < b.size(); ++x) b[x] = blocks_[x].unaryExpr([&](const Cyclo& v) { return v * c; });
  return EqMorphism(src_, tgt_, std::move(b));
}

bool operator==(const EqMorphism& a, const EqMorphism& b) {
  return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.blocks_ == b.blocks_;
}

EqMorphism identity(const EqObject& v) {
  const int n = v.category()->grading().order();
  std::vector<CMat> b(n);
  for (int x = 0; x < n; ++x) b[x] = eye(v.dim(x));
  return EqMorphism(v, v, std::move(b));
}

EqMorphism zero_morphism(const EqObject& v, const EqObject& w) {
  const int n = v.category()->grading().order();
  std::vector<CMat> b(n);
  for (int x = 0; x < n; ++x) b[x] = zeros(w.dim(x), v.dim(x));
  return EqMorphism(v, w, std::move(b));
}

EqMorphism compose(const EqMorphism& g, const EqMorphism& f) {
  if (g.source() != f.target()) throw std::invalid_argument("compose: source/target mismatch");
  std::vector<CMat> b(f.blocks().size());
  for (std::size_t x = 0; x < b.size(); ++x) b[x] = mul(g.block(x), f.block(x));
  return EqMorphism(f.source(), g.target(), std::move(b));
}

EqMorphism inverse(const EqMorphism& f) {
  std::vector<CMat> b(f.blocks().size());
  for (std::size_t x = 0; x < b.size(); ++x) {
    if (f.block(x).size() == 0 && f.block(x).rows() == f.block(x).cols()) {
      b[x] = f.block(x);
      continue;
    }
    auto inv = crossed_s::inverse(f.block(x));
    if (!inv) throw std::domain_error("inverse: morphism is not invertible");
    b[x] = std::move(*inv);
  }
  return EqMorphism(f.target(), f.source(), std::move(b));
}

Cyclo scalar_of(const EqMorphism& f) {
  if (f.source() != f.target()) throw std::invalid_argument("scalar_of: not an endomorphism");
  for (const CMat& b : f.blocks())
    if (b.size() > 0) {
      Cyclo c = b(0, 0);
      if (!(f == identity(f.source()) * c)) throw std::domain_error("scalar_of: not a scalar");
      return c;
    }
  return Cyclo(0);
}

// ---------------------------------------------------------------- simples

EqObject simple_object(const CatPtr& cat, const SimpleLabel& label) {
  const EqCategory& c = *cat;
  const FiniteGroup& gam = c.acting();
  const int n = c.grading().order(), m = gam.order();
  const int r = label.rep;
  if (c.orbit_rep(r) != r) throw std::invalid_argument("simple_object: not an orbit representative");
  const StabilizerData& sd = c.stabilizer_data(r);
  const Irrep& rho = sd.irreps.at(label.irrep);
  std::vector<int> dims(n, 0);
  for (int x = 0; x < n; ++x)
    if (c.orbit_rep(x) == r) dims[x] = rho.dim;
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x) {
      if (dims[x] == 0) {
        action[g][x] = zeros(0, 0);
        continue;
      }
      const int y = c.act(g, x);
      const int st = gam.mul(gam.mul(gam.inv(c.transversal(y)), g), c.transversal(x));
      action[g][x] = rho(sd.subgroup.to_local(st));
    }
  return EqObject(cat, std::move(dims), std::move(action));
}

// ---------------------------------------------------------------- tensor

EqObject tensor(const EqObject& v, const EqObject& w) {
  require_same_category(v, w);
  const EqCategory& c = *v.category();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order(), m = c.acting().order();
  Layout l = layout(v, w);
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g)
    for (int z = 0; z < n; ++z) {
      const int z2 = c.act(g, z);
      CMat b = zeros(l.dims[z2], l.dims[z]);
      for (int x = 0; x < n; ++x) {
        if (l.off[z][x] < 0) continue;
        const int y = gt.mul(gt.inv(x), z);
        const int x2 = c.act(g, x);
        const CMat k = kron(v.act(g, x), w.act(g, y));
        b.block(l.off[z2][x2], l.off[z][x], k.rows(), k.cols()) = k;
      }
      action[g][z] = std::move(b);
    }
  return EqObject(v.category(), l.dims, std::move(action));
}

EqMorphism tensor(const EqMorphism& f, const EqMorphism& g) {
  const EqObject src = tensor(f.source(), g.source());
  const EqObject tgt = tensor(f.target(), g.target());
  const FiniteGroup& gt = src.category()->grading();
  const int n = gt.order();
  Layout ls = layout(f.source(), g.source()), lt = layout(f.target(), g.target());
  std::vector<CMat> blocks(n);
  for (int z = 0; z < n; ++z) {
    CMat b = zeros(lt.dims[z], ls.dims[z]);
    for (int x = 0; x < n; ++x) {
      if (ls.off[z][x] < 0 || lt.off[z][x] < 0) continue;
      const int y = gt.mul(gt.inv(x), z);
      const CMat k = kron(f.block(x), g.block(y));
      b.block(lt.off[z][x], ls.off[z][x], k.rows(), k.cols()) = k;
    }
    blocks[z] = std::move(b);
  }
  return EqMorphism(src, tgt, std::move(blocks));
}

EqMorphism associator(const EqObject& a, const EqObject& b, const EqObject& c) {
  const FiniteGroup& gt = a.category()->grading();
  const int n = gt.order();
  const EqObject ab = tensor(a, b), bc = tensor(b, c);
  const EqObject src = tensor(ab, c), tgt = tensor(a, bc);
  Layout lab = layout(a, b), lbc = layout(b, c), l1 = layout(ab, c), l2 = layout(a, bc);
  std::vector<CMat> blocks(n);
  for (int z = 0; z < n; ++z) {
    CMat p = zeros(l2.dims[z], l1.dims[z]);
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y) {
        const int u = gt.mul(x, y);
        const int w = gt.mul(gt.inv(u), z);
        const int da = a.dim(x), db = b.dim(y), dc = c.dim(w);
        if (da * db * dc == 0) continue;
        const int v = gt.mul(y, w);
        for (int i = 0; i < da; ++i)
          for (int j = 0; j < db; ++j)
            for (int k = 0; k < dc; ++k) {
              const int s = l1.off[z][u] + (lab.off[u][x] + i * db + j) * dc + k;
              const int t = l2.off[z][x] + i * bc.dim(v) + lbc.off[v][y] + j * dc + k;
              p(t, s) = Cyclo(1);
            }
      }
    blocks[z] = std::move(p);
  }
  return EqMorphism(src, tgt, std::move(blocks));
}

EqMorphism associator_inverse(const EqObject& a, const EqObject& b, const EqObject& c) {
  EqMorphism f = associator(a, b, c);
  std::vector<CMat> blocks(f.blocks().size());
  for (std::size_t z = 0; z < blocks.size(); ++z) blocks[z] = f.block(z).transpose();
  return EqMorphism(f.target(), f.source(), std::move(blocks));
}

// ---------------------------------------------------------------- duality

EqObject dual(const EqObject& v) {
  const EqCategory& c = *v.category();
  const FiniteGroup& gt = c.grading();
  const FiniteGroup& gam = c.acting();
  const int n = gt.order(), m = gam.order();
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) dims[gt.inv(x)] = v.dim(x);
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g)
    for (int x = 0; x < n; ++x)
      action[g][gt.inv(x)] = v.act(gam.inv(g), c.act(g, x)).transpose();
  return EqObject(v.category(), std::move(dims), std::move(action));
}

EqMorphism dual(const EqMorphism& f) {
  const FiniteGroup& gt = f.source().category()->grading();
  const int n = gt.order();
  std::vector<CMat> blocks(n);
  for (int x = 0; x < n; ++x) blocks[gt.inv(x)] = f.block(x).transpose();
  return EqMorphism(dual(f.target()), dual(f.source()), std::move(blocks));
}

namespace {

// The delta pairing between l (x) r and the unit, where the stalks of l at
// x^-1 (or x) are dual to those of r at x. `left_is_dual` says which factor
// is indexed by the inverse element.
CMat pairing_row(const EqObject& l, const EqObject& r, bool left_is_dual) {
  const FiniteGroup& gt = l.category()->grading();
  const int n = gt.order(), e = gt.identity();
  Layout lay = layout(l, r);
  CMat row = zeros(1, lay.dims[e]);
  for (int x = 0; x < n; ++x) {
    if (lay.off[e][x] < 0) continue;
    const int d = left_is_dual ? r.dim(gt.inv(x)) : l.dim(x);
    for (int i = 0; i < d; ++i) row(0, lay.off[e][x] + i * d + i) = Cyclo(1);
  }
  return row;
}

EqMorphism from_unit_block(const EqObject& src, const EqObject& tgt, const CMat& b, bool to_unit) {
  const FiniteGroup& gt = src.category()->grading();
  const int n = gt.order(), e = gt.identity();
  std::vector<CMat> blocks(n);
  for (int x = 0; x < n; ++x) blocks[x] = zeros(tgt.dim(x), src.dim(x));
  blocks[e] = to_unit ? b : CMat(b.transpose());
  return EqMorphism(src, tgt, std::move(blocks));
}

}  // namespace

EqMorphism ev(const EqObject& v) {
  const EqObject d = dual(v);
  return from_unit_block(tensor(d, v), v.category()->unit(), pairing_row(d, v, true), true);
}

EqMorphism coev(const EqObject& v) {
  const EqObject d = dual(v);
  return from_unit_block(v.category()->unit(), tensor(v, d), pairing_row(v, d, false), false);
}

EqMorphism ev_right(const EqObject& v) {
  const EqObject d = dual(v);
  return from_unit_block(tensor(v, d), v.category()->unit(), pairing_row(v, d, false), true);
}

EqMorphism coev_right(const EqObject& v) {
  const EqObject d = dual(v);
  return from_unit_block(v.category()->unit(), tensor(d, v), pairing_row(d, v, true), false);
}

// ---------------------------------------------------------------- F action

EqObject F_act(const EqObject& v, long b) {
  const EqCategory& c = *v.category();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order(), m = c.acting().order();
  const int h = c.ext().element(c.acting().identity(), -b);  // h^-b
  std::vector<int> dims(n);
  for (int z = 0; z < n; ++z) dims[z] = v.dim(gt.conjugate(h, z));
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g) {
    const int g2 = c.ext().automorphism().apply_pow(-b, g);
    for (int z = 0; z < n; ++z) action[g][z] = v.act(g2, gt.conjugate(h, z));
  }
  return EqObject(v.category(), std::move(dims), std::move(action));
}

EqMorphism F_act(const EqMorphism& f, long b) {
  const EqCategory& c = *f.source().category();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order();
  const int h = c.ext().element(c.acting().identity(), -b);
  std::vector<CMat> blocks(n);
  for (int z = 0; z < n; ++z) blocks[z] = f.block(gt.conjugate(h, z));
  return EqMorphism(F_act(f.source(), b), F_act(f.target(), b), std::move(blocks));
}

EqMorphism tensor_structure(const EqObject& v, const EqObject& w, long b) {
  const EqCategory& c = *v.category();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order();
  const int h = c.ext().element(c.acting().identity(), -b);
  const EqObject fv = F_act(v, b), fw = F_act(w, b);
  const EqObject src = F_act(tensor(v, w), b), tgt = tensor(fv, fw);
  Layout ls = layout(v, w), lt = layout(fv, fw);
  std::vector<CMat> blocks(n);
  for (int z = 0; z < n; ++z) {
    const int cz = gt.conjugate(h, z);
    CMat p = zeros(lt.dims[z], ls.dims[cz]);
    for (int x2 = 0; x2 < n; ++x2) {
      if (lt.off[z][x2] < 0) continue;
      const int x = gt.conjugate(h, x2);
      const int d = v.dim(x) * w.dim(gt.mul(gt.inv(x), cz));
      for (int i = 0; i < d; ++i) p(lt.off[z][x2] + i, ls.off[cz][x] + i) = Cyclo(1);
    }
    blocks[z] = std::move(p);
  }
  return EqMorphism(src, tgt, std::move(blocks));
}

// ---------------------------------------------------------------- braiding

EqMorphism crossed_braiding(const EqObject& v, const EqObject& w) {
  require_same_category(v, w);
  const EqCategory& c = *v.category();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order();
  const int a = homogeneous_sector(v);
  const EqObject fw = F_act(w, a);
  const EqObject src = tensor(v, w), tgt = tensor(fw, v);
  Layout ls = layout(v, w), lt = layout(fw, v);
  std::vector<CMat> blocks(n);
  for (int z = 0; z < n; ++z) {
    CMat b = zeros(lt.dims[z], ls.dims[z]);
    for (int x = 0; x < n; ++x) {
      if (ls.off[z][x] < 0) continue;
      const int y = gt.mul(gt.inv(x), z);
      const int g = c.ext().automorphism().apply_pow(-a, c.ext().base_part(x));
      const int y2 = gt.conjugate(x, y);
      const CMat& pw = w.act(g, y);
      const int dv = v.dim(x), dw = w.dim(y), dfw = fw.dim(y2);
      for (int i = 0; i < dv; ++i)
        for (int j = 0; j < dw; ++j)
          for (int k = 0; k < dfw; ++k)
            if (!is_zero(pw(k, j))) b(lt.off[z][y2] + k * dv + i, ls.off[z][x] + i * dw + j) = pw(k, j);
    }
    blocks[z] = std::move(b);
  }
  return EqMorphism(src, tgt, std::move(blocks));
}

EqMorphism twist(const EqObject& v) {
  const int a = homogeneous_sector(v);
  const EqObject d = dual(v);
  const EqObject fv = F_act(v, a);
  // V -> V (x) (V (x) V*)
  EqMorphism s1 = tensor(identity(v), coev(v));
  // -> (V (x) V) (x) V*
  EqMorphism s2 = associator_inverse(v, v, d);
  // -> (F^a V (x) V) (x) V*
  EqMorphism s3 = tensor(crossed_braiding(v, v), identity(d));
  // -> F^a V (x) (V** (x) V*)
  EqMorphism s4 = associator(fv, v, d);
  // -> F^a V
  EqMorphism s5 = tensor(identity(fv), ev(d));
  EqMorphism out = compose(s5, compose(s4, compose(s3, compose(s2, s1))));
  return EqMorphism(v, fv, out.blocks());
}

EqMorphism twist_formula(const EqObject& v) {
  const EqCategory& c = *v.category();
  const int n = c.grading().order();
  const int a = homogeneous_sector(v);
  std::vector<CMat> blocks(n);
  for (int x = 0; x < n; ++x) {
    if (v.dim(x) == 0) {
      blocks[x] = zeros(0, 0);
      continue;
    }
    const int g = c.ext().automorphism().apply_pow(-a, c.ext().base_part(x));
    blocks[x] = v.act(g, x);
  }
  return EqMorphism(v, F_act(v, a), std::move(blocks));
}

Cyclo spherical_trace(const EqMorphism& f) {
  if (f.source() != f.target()) throw std::invalid_argument("spherical_trace: not an endomorphism");
  Cyclo acc;
  for (const CMat& b : f.blocks()) acc += trace(b);
  return acc;
}

Cyclo module_dim(const EqObject& v) { return Cyclo(v.total_dim()); }

// ---------------------------------------------------------------- hom spaces

std::vector<EqMorphism> hom_basis(const EqObject& v, const EqObject& w) {
  require_same_category(v, w);
  const EqCategory& c = *v.category();
  const FiniteGroup& gam = c.acting();
  const int n = c.grading().order();
  std::vector<EqMorphism> out;
  for (int r = 0; r < n; ++r) {
    if (c.orbit_rep(r) != r) continue;
    const int dv = v.dim(r), dw = w.dim(r);
    if (dv == 0 || dw == 0) continue;
    const std::vector<int> gens = generators_of(gam, c.stabilizer(r));
    CMat sys = zeros(static_cast<int>(gens.size()) * dv * dw, dv * dw);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      // vec(A F - F B) = (I (x) A - B^T (x) I) vec F, column-major vec
      const CMat lhs = kron(eye(dv), w.act(gens[k], r)) - kron(CMat(v.act(gens[k], r).transpose()), eye(dw));
      sys.block(static_cast<int>(k) * dv * dw, 0, dv * dw, dv * dw) = lhs;
    }
    const CMat ns = gens.empty() ? eye(dv * dw) : nullspace(sys);
    for (int col = 0; col < ns.cols(); ++col) {
      CMat f0(dw, dv);
      for (int j = 0; j < dv; ++j)
        for (int i = 0; i < dw; ++i) f0(i, j) = ns(i + j * dw, col);
      std::vector<CMat> blocks(n);
      for (int x = 0; x < n; ++x) {
        if (c.orbit_rep(x) != r) {
          blocks[x] = zeros(w.dim(x), v.dim(x));
          continue;
        }
        const int t = c.transversal(x);
        blocks[x] = mul(mul(w.act(t, r), f0), v.act(gam.inv(t), x));
      }
      out.emplace_back(v, w, std::move(blocks));
    }
  }
  return out;
}

int hom_dim(const EqObject& v, const EqObject& w) { return static_cast<int>(hom_basis(v, w).size()); }

std::vector<int> decompose(const EqObject& v) {
  const EqCategory& c = *v.category();
  std::vector<int> out(c.simples().size(), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    const int r = c.simples()[i].rep;
    if (v.dim(r) == 0) continue;
    out[i] = hom_dim(c.simple(static_cast<int>(i)), v);
  }
  return out;
}

std::optional<EqMorphism> find_iso(const EqObject& v, const EqObject& w) {
  if (v.dims() != w.dims()) return std::nullopt;
  std::vector<EqMorphism> basis = hom_basis(v, w);
  if (basis.empty()) return v.total_dim() == 0 ? std::optional<EqMorphism>(zero_morphism(v, w)) : std::nullopt;
  for (const EqMorphism& f : basis)
    if (f.is_invertible()) return f;
  // generic combinations sum_j (k+1)^j b_j
  for (int k = 1; k <= 8; ++k) {
    EqMorphism f = basis[0];
    Cyclo coeff(1);
    for (std::size_t j = 1; j < basis.size(); ++j) {
      coeff *= Cyclo(k + 1);
      f = f + basis[j] * coeff;
    }
    if (f.is_invertible()) return f;
  }
  return std::nullopt;
}

std::optional<int> identify_simple(const EqObject& v) {
  if (v.total_dim() == 0 || hom_dim(v, v) != 1) return std::nullopt;
  const EqCategory& c = *v.category();
  const int r = c.orbit_rep(v.support().front());
  for (int i = 0; i < static_cast<int>(c.simples().size()); ++i) {
    if (c.simples()[i].rep != r) continue;
    const EqObject& s = c.simple(i);
    if (s.total_dim() == v.total_dim() && hom_dim(s, v) == 1) return i;
  }
  return std::nullopt;
}

}  // namespace crossed_s
