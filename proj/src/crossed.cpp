#include "crossed_s/crossed.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace crossed_s {

namespace {

CMat eye(int n) { return CMat::Identity(n, n); }
CMat zeros(int r, int c) { return CMat::Zero(r, c); }

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

// All blocks stacked, each column-major.
CVec vec(const EqMorphism& f) {
  Eigen::Index n = 0;
  for (const CMat& b : f.blocks()) n += b.size();
  CVec v(n);
  Eigen::Index k = 0;
  for (const CMat& b : f.blocks())
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index i = 0; i < b.rows(); ++i) v(k++) = b(i, j);
  return v;
}

// Trace of the linear map h -> phi(h) on the span of `basis`.
template <class Phi>
Cyclo induced_trace(const std::vector<EqMorphism>& basis, Phi phi) {
  if (basis.empty()) return Cyclo(0);
  const int k = static_cast<int>(basis.size());
  CMat b(vec(basis[0]).size(), k);
  for (int j = 0; j < k; ++j) b.col(j) = vec(basis[j]);
  CMat images(b.rows(), k);
  for (int j = 0; j < k; ++j) images.col(j) = vec(phi(basis[j]));
  auto x = solve(b, images);
  if (!x) throw std::runtime_error("induced_trace: image leaves the hom space");
  return trace(*x);
}

std::string at(const char* what, int i, int j, const Cyclo& got, const Cyclo& want) {
  std::ostringstream os;
  os << what << "(" << i << "," << j << ") = " << got.str() << ", expected " << want.str();
  return os.str();
}

// psi : F(L) -> L from an extension of the stabilizer irrep to Stab_{Gamma~}(rep).
EqMorphism extension_psi(const CatPtr& cat, int idx) {
  const SimpleLabel& lab = cat->simples()[idx];
  const EqObject& l = cat->simple(idx);
  const FiniteGroup& gt = cat->grading();
  const int r = lab.rep;
  std::vector<int> ct;
  for (int y = 0; y < gt.order(); ++y)
    if (gt.conjugate(y, r) == r) ct.push_back(y);
  Subgroup sub = make_subgroup(gt, ct);
  CharTable tab = char_table(sub.group);
  const StabilizerData& sd = cat->stabilizer_data(r);
  int pick = -1;
  for (int row = 0; row < tab.size() && pick < 0; ++row) {
    bool match = true;
    for (int c : sd.subgroup.elements)
      if (tab.value(row, sub.to_local(c)) != sd.table.value(lab.irrep, sd.subgroup.to_local(c))) {
        match = false;
        break;
      }
    if (match) pick = row;
  }
  if (pick < 0) throw std::runtime_error("choose_psi: simple " + label_string(lab) + " is not F-stable");
  std::vector<Irrep> ext_reps = irreps(sub.group, tab);
  const Irrep& rt = ext_reps[pick];
  const Irrep& rho = sd.irreps[lab.irrep];
  const int d = rho.dim;

  // T with rho(c) T = T rt(c) on the generators of Stab_Gamma(rep)
  CMat t = eye(d);
  const std::vector<int> gens = generators_of(cat->acting(), sd.subgroup.elements);
  if (!gens.empty()) {
    CMat sys = zeros(static_cast<int>(gens.size()) * d * d, d * d);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const CMat& a = rho(sd.subgroup.to_local(gens[k]));
      const CMat& b = rt(sub.to_local(gens[k]));
      sys.block(static_cast<int>(k) * d * d, 0, d * d, d * d) = kron(eye(d), a) - kron(CMat(b.transpose()), eye(d));
    }
    const CMat ns = nullspace(sys);
    if (ns.cols() == 0) throw std::runtime_error("choose_psi: no intertwiner for " + label_string(lab));
    for (int j = 0; j < d; ++j)
      for (int i = 0; i < d; ++i) t(i, j) = ns(i + j * d, 0);
  }
  auto tinv = crossed_s::inverse(t);
  if (!tinv) throw std::runtime_error("choose_psi: singular intertwiner");

  const int h = cat->ext().h();
  const int hinv = gt.inv(h);
  const EqObject fl = F_act(l, 1);
  std::vector<CMat> blocks(gt.order());
  for (int z = 0; z < gt.order(); ++z) {
    if (l.dim(z) == 0 && fl.dim(z) == 0) {
      blocks[z] = zeros(0, 0);
      continue;
    }
    if (l.dim(z) != fl.dim(z)) throw std::runtime_error("choose_psi: F moves the support of " + label_string(lab));
    const int x = gt.conjugate(hinv, z);
    const int u = gt.mul(gt.mul(gt.inv(cat->transversal(z)), h), cat->transversal(x));
    blocks[z] = mul(mul(t, rt(sub.to_local(u))), *tinv);
  }
  return EqMorphism(fl, l, std::move(blocks));
}

}  // namespace

int EquivChoice::position(int simple) const {
  for (std::size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == simple) return static_cast<int>(i);
  return -1;
}

std::vector<int> fstable_simples(const CatPtr& cat, long a) {
  std::vector<int> out;
  for (int i : cat->simples_in_sector(cat->ext().reduce(a))) {
    const EqObject& l = cat->simple(i);
    if (find_iso(F_act(l, 1), l)) out.push_back(i);
  }
  return out;
}

std::optional<Cyclo> leading_entry(const EqMorphism& f) {
  for (const CMat& b : f.blocks())
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      for (Eigen::Index j = 0; j < b.cols(); ++j)
        if (!b(i, j).is_zero()) return b(i, j);
  return std::nullopt;
}

EqMorphism argument_window(const EqMorphism& f, int n) {
  auto lead = leading_entry(f);
  if (!lead || n <= 1) return f;
  long k = static_cast<long>(std::floor(argument(*lead) * n / (2 * std::numbers::pi) + 1e-9));
  k = ((k % n) + n) % n;
  return k == 0 ? f : f * Cyclo::root(n, -k);
}

EqMorphism psi_power(const EqMorphism& psi, long m) {
  if (m <= 0) return identity(psi.target());
  EqMorphism acc = psi;
  for (long k = 1; k < m; ++k) acc = compose(acc, F_act(psi, k));
  return acc;
}

EquivChoice choose_psi(const CatPtr& cat, long a) {
  const int n = cat->modulus();
  EquivChoice out;
  out.sector = cat->ext().reduce(a);
  for (int idx : fstable_simples(cat, a)) {
    EqMorphism psi = argument_window(extension_psi(cat, idx), n);
    const EqObject& l = cat->simple(idx);
    if (!psi.is_equivariant()) throw std::runtime_error("choose_psi: psi is not equivariant");
    if (!(psi_power(psi, n) == identity(l)))
      throw std::runtime_error("choose_psi: psi^(N) != id for " + label_string(cat->simples()[idx]));
    const Cyclo lead = *leading_entry(psi);
    const double arg = argument(lead);
    if (arg >= 2 * std::numbers::pi / n + 1e-9) throw std::runtime_error("choose_psi: tie-break window violated");
    out.labels.push_back(idx);
    out.psi.push_back(std::move(psi));
    out.leading.push_back(lead);
  }
  return out;
}

Cyclo crossed_entry(const EqObject& l, const EqMorphism& psi_l, const EqObject& m, const EqMorphism& psi_m) {
  const int a = *l.sector();
  const EqMorphism b1 = crossed_braiding(l, m);
  const EqObject fm = F_act(m, a);
  const EqMorphism b2 = crossed_braiding(fm, l);
  const EqMorphism p = tensor(psi_l, psi_power(psi_m, a));
  return spherical_trace(compose(p, compose(b2, b1)));
}

CrossedSMatrix crossed_s_matrix(const EquivChoice& rows, const EquivChoice& cols) {
  CrossedSMatrix out;
  out.sector = rows.sector;
  out.rows = rows.labels;
  out.cols = cols.labels;
  const int nr = static_cast<int>(rows.labels.size()), nc = static_cast<int>(cols.labels.size());
  out.S = CMat::Zero(nr, nc);
  if (nr == 0 || nc == 0) return out;
  const CatPtr& cat = rows.psi.empty() ? cols.psi[0].source().category() : rows.psi[0].source().category();
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j)
      out.S(i, j) = crossed_entry(cat->simple(rows.labels[i]), rows.psi[i], cat->simple(cols.labels[j]), cols.psi[j]);
  return out;
}

EqObject restrict_to(const CatPtr& cat, const EqObject& x) {
  const int n = cat->grading().order(), m = cat->acting().order();
  std::vector<std::vector<CMat>> action(m, std::vector<CMat>(n));
  for (int g = 0; g < m; ++g)
    for (int z = 0; z < n; ++z) action[g][z] = x.act(cat->ext().embed(g), z);
  return EqObject(cat, x.dims(), std::move(action));
}

EqObject lift_to_double(const CatPtr& big, const EqObject& l, const EqMorphism& psi) {
  const EqCategory& c = *l.category();
  const ExtendedGroup& ext = c.ext();
  const FiniteGroup& gt = c.grading();
  const int n = gt.order(), N = c.modulus();
  std::vector<EqMorphism> pw;
  for (int b = 0; b < N; ++b) pw.push_back(psi_power(psi, b));
  std::vector<std::vector<CMat>> action(n, std::vector<CMat>(n));
  for (int y = 0; y < n; ++y) {
    const int s = ext.base_part(y), b = ext.sector(y);
    const int hb = ext.element(c.acting().identity(), b);
    for (int x = 0; x < n; ++x) {
      const int z = gt.conjugate(hb, x);
      action[y][x] = l.dim(x) == 0 ? zeros(0, 0) : mul(l.act(s, z), pw[b].block(z));
    }
  }
  return EqObject(big, l.dims(), std::move(action));
}

// ---------------------------------------------------------------- setting

CrossedSetting::CrossedSetting(ExtendedGroup ext) : cat_(EqCategory::create(std::move(ext))) {}

CrossedSetting CrossedSetting::parse(std::string_view group, std::string_view aut) {
  auto g = std::make_shared<const FiniteGroup>(parse_group(group));
  return CrossedSetting(ExtendedGroup(parse_automorphism(g, aut)));
}

Cyclo CrossedSetting::dim_c() const {
  const long g = cat_->acting().order();
  return Cyclo(g * g);
}

const EquivChoice& CrossedSetting::choice(long a) const {
  const int s = reduce(a);
  auto it = choices_.find(s);
  if (it == choices_.end()) it = choices_.emplace(s, choose_psi(cat_, s)).first;
  return it->second;
}

bool CrossedSetting::is_fstable(int simple) const {
  return choice(cat_->simples().at(simple).sector).position(simple) >= 0;
}

const EqMorphism& CrossedSetting::psi(int simple) const {
  const EquivChoice& c = choice(cat_->simples().at(simple).sector);
  const int p = c.position(simple);
  if (p < 0) throw std::invalid_argument("psi: simple is not F-stable");
  return c.psi[p];
}

const CrossedSMatrix& CrossedSetting::crossed(long a) const {
  const int s = reduce(a);
  auto it = crossed_.find(s);
  if (it == crossed_.end()) it = crossed_.emplace(s, crossed_s_matrix(choice(s), choice(1))).first;
  return it->second;
}

const ModularData& CrossedSetting::base_data() const {
  if (!base_) base_ = modular_data(cat_);
  return *base_;
}

const CatPtr& CrossedSetting::big() const {
  if (!big_) big_ = EqCategory::double_of(ext().group());
  return big_;
}

const ModularData& CrossedSetting::big_data() const {
  if (!big_data_) big_data_ = modular_data(big());
  return *big_data_;
}

int CrossedSetting::big_index(int simple) const {
  auto it = big_index_.find(simple);
  if (it != big_index_.end()) return it->second;
  auto idx = identify_simple(lift_to_double(big(), cat_->simple(simple), psi(simple)));
  if (!idx) throw std::runtime_error("big_index: lift is not simple");
  big_index_[simple] = *idx;
  return *idx;
}

// ---------------------------------------------------------------- algebra

int FrobeniusAlgebra::position(int simple) const {
  for (int i = 0; i < size(); ++i)
    if (basis[i] == simple) return i;
  return -1;
}

CVec FrobeniusAlgebra::basis_vector(int i) const {
  CVec v = CVec::Zero(size());
  v(i) = Cyclo(1);
  return v;
}

CVec FrobeniusAlgebra::multiply(const CVec& x, const CVec& y) const {
  const int n = size();
  CVec out = CVec::Zero(n);
  for (int i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      const Cyclo xy = x(i) * y(j);
      for (int k = 0; k < n; ++k)
        if (!a[i][j][k].is_zero()) out(k) += xy * a[i][j][k];
    }
  }
  return out;
}

CVec FrobeniusAlgebra::star(const CVec& x) const {
  CVec out = CVec::Zero(size());
  for (int i = 0; i < size(); ++i)
    if (!x(i).is_zero()) out(star_index[i]) += conj(x(i)) * star_scalar[i];
  return out;
}

Cyclo FrobeniusAlgebra::lambda_of(const CVec& x) const {
  Cyclo acc;
  for (int i = 0; i < size(); ++i) acc += x(i) * lambda[i];
  return acc;
}

Cyclo FrobeniusAlgebra::hermitian(const CVec& x, const CVec& y) const { return lambda_of(multiply(x, star(y))); }

CMat FrobeniusAlgebra::gram() const {
  CMat g(size(), size());
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j) g(i, j) = hermitian(basis_vector(i), basis_vector(j));
  return g;
}

CMat FrobeniusAlgebra::left_mult(int i) const {
  CMat m(size(), size());
  for (int j = 0; j < size(); ++j)
    for (int k = 0; k < size(); ++k) m(k, j) = a[i][j][k];
  return m;
}

FrobeniusAlgebra k_algebra(const CrossedSetting& s, bool all_sectors) {
  const CatPtr& cat = s.category();
  const int n_sec = all_sectors ? s.modulus() : 1;
  FrobeniusAlgebra k;
  for (int a = 0; a < n_sec; ++a)
    for (int idx : s.choice(a).labels) {
      k.basis.push_back(idx);
      k.sectors.push_back(a);
    }
  const int n = k.size();
  k.unit = k.position(0);
  k.a.assign(n, std::vector<std::vector<Cyclo>>(n, std::vector<Cyclo>(n)));

  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const EqObject& c1 = cat->simple(k.basis[i]);
      const EqObject& c2 = cat->simple(k.basis[j]);
      const EqObject prod = tensor(c1, c2);
      const EqMorphism p = compose(tensor(s.psi(k.basis[i]), s.psi(k.basis[j])), tensor_structure(c1, c2, 1));
      const int target = s.reduce(k.sectors[i] + k.sectors[j]);
      for (int l = 0; l < n; ++l) {
        if (k.sectors[l] != target) continue;
        const EqObject& d = cat->simple(k.basis[l]);
        const EqMorphism psi_d_inv = inverse(s.psi(k.basis[l]));
        k.a[i][j][l] = induced_trace(hom_basis(d, prod), [&](const EqMorphism& h) {
          return compose(p, compose(F_act(h, 1), psi_d_inv));
        });
      }
    }

  const EqObject one = cat->unit();
  for (int i = 0; i < n; ++i) {
    const EqObject& c = cat->simple(k.basis[i]);
    const EqMorphism& psi = s.psi(k.basis[i]);
    k.lambda.push_back(induced_trace(hom_basis(one, c), [&](const EqMorphism& h) { return compose(psi, F_act(h, 1)); }));
  }

  for (int i = 0; i < n; ++i) {
    const EqObject& c = cat->simple(k.basis[i]);
    const EqObject dc = dual(c);
    auto j = identify_simple(dc);
    if (!j) throw std::runtime_error("k_algebra: dual of a simple is not simple");
    const int pos = k.position(*j);
    if (pos < 0) throw std::runtime_error("k_algebra: dual of an F-stable simple is not F-stable");
    const EqObject& sd = cat->simple(*j);
    auto phi = find_iso(dc, sd);
    if (!phi) throw std::runtime_error("k_algebra: no isomorphism to the dual simple");
    const EqMorphism& psi_c = s.psi(k.basis[i]);
    const EqMorphism& psi_s = s.psi(*j);
    const EqMorphism phi_inv = inverse(*phi);
    // (psi_C*)^-1 carried to the canonical simple, compared with psi_S
    const EqMorphism carried = compose(*phi, compose(inverse(dual(psi_c)), inverse(F_act(*phi, 1))));
    k.star_index.push_back(pos);
    k.star_scalar.push_back(scalar_of(compose(carried, inverse(psi_s))));
    // psi_{L*} o psi_L^*, with psi_{L*} carried back to dual(L)
    const EqMorphism psi_dual = compose(phi_inv, compose(psi_s, F_act(*phi, 1)));
    k.conjugation_scalar.push_back(scalar_of(compose(psi_dual, dual(psi_c))));
  }
  return k;
}

CharacterData characters_and_idempotents(const FrobeniusAlgebra& k, const CrossedSMatrix& s0, const Cyclo& dim_c) {
  if (s0.rows.size() != k.basis.size()) throw std::invalid_argument("characters: algebra and S-matrix rows differ");
  for (std::size_t i = 0; i < s0.rows.size(); ++i)
    if (s0.rows[i] != k.basis[i]) throw std::invalid_argument("characters: algebra and S-matrix rows differ");
  CharacterData c;
  c.columns = s0.cols;
  const int nm = static_cast<int>(s0.cols.size()), n = k.size();
  c.chi = CMat(nm, n);
  c.idempotents = CMat(nm, n);
  const Cyclo inv_dim_c = dim_c.inverse();
  for (int m = 0; m < nm; ++m) {
    const Cyclo dim_m = s0.S(k.unit, m);
    const Cyclo inv_dim_m = dim_m.inverse();
    for (int i = 0; i < n; ++i) {
      c.chi(m, i) = s0.S(i, m) * inv_dim_m;
      c.idempotents(m, i) = dim_m * inv_dim_c * conj(s0.S(i, m));
    }
  }
  return c;
}

// ---------------------------------------------------------------- verification

Report verify_crossed(const CrossedSetting& s, long a_in, const CrossedSMatrix& m) {
  Report r;
  const int a = s.reduce(a_in);
  r.title = "crossed_a" + std::to_string(a);
  const CatPtr& cat = s.category();
  const int nr = static_cast<int>(m.rows.size()), nc = static_cast<int>(m.cols.size());
  const Cyclo dim_c = s.dim_c();
  const int N = s.modulus();

  r.add("cardinality", nr == nc, std::to_string(nr) + " rows, " + std::to_string(nc) + " columns");

  std::string fail;
  if (nr == nc) {
    const CMat l = mul(m.S, adjoint(m.S)), rr = mul(adjoint(m.S), m.S);
    for (int i = 0; i < nr && fail.empty(); ++i)
      for (int j = 0; j < nr && fail.empty(); ++j) {
        const Cyclo want = i == j ? dim_c : Cyclo(0);
        if (l(i, j) != want) fail = at("S.conj(S)^T", i, j, l(i, j), want);
        else if (rr(i, j) != want) fail = at("conj(S)^T.S", i, j, rr(i, j), want);
      }
  } else {
    fail = "matrix is not square";
  }
  r.add("unitarity", fail.empty(), fail);

  if (a == 0) {
    fail.clear();
    const int u = 0;  // the unit is the first sector-0 simple and always F-stable
    for (int j = 0; j < nc && fail.empty(); ++j) {
      const Cyclo d = module_dim(cat->simple(m.cols[j]));
      if (m.S(u, j) != d) fail = at("S", u, j, m.S(u, j), d);
    }
    r.add("unit_row", fail.empty(), fail);
  }

  fail.clear();
  for (int i = 0; i < nr && fail.empty(); ++i) {
    const Cyclo di = module_dim(cat->simple(m.rows[i])).inverse();
    for (int j = 0; j < nc && fail.empty(); ++j) {
      const Cyclo dj = module_dim(cat->simple(m.cols[j])).inverse();
      const Cyclo& x = m.S(i, j);
      if (!x.is_integral()) fail = at("S", i, j, x, x) + " is not integral";
      else if (!(x * di).is_integral()) fail = at("S/row-dim", i, j, x * di, x * di) + " is not integral";
      else if (!(x * dj).is_integral()) fail = at("S/col-dim", i, j, x * dj, x * dj) + " is not integral";
    }
  }
  r.add("integrality", fail.empty(), fail);

  fail.clear();
  try {
    const ModularData& big = s.big_data();
    for (int i = 0; i < nr && fail.empty(); ++i)
      for (int j = 0; j < nc && fail.empty(); ++j) {
        const Cyclo want = big.S(s.big_index(m.rows[i]), s.big_index(m.cols[j]));
        if (m.S(i, j) != want) fail = at("S", i, j, m.S(i, j), want);
      }
  } catch (const std::exception& e) {
    fail = e.what();
  }
  r.add("submatrix", fail.empty(), fail);

  fail.clear();
  {
    const Cyclo z = Cyclo::root(N, 1);
    const Cyclo za = Cyclo::root(N, a);
    for (int i = 0; i < nr && fail.empty(); ++i)
      for (int j = 0; j < nc && fail.empty(); ++j) {
        const EqObject& l = cat->simple(m.rows[i]);
        const EqObject& mm = cat->simple(m.cols[j]);
        const Cyclo row = crossed_entry(l, s.psi(m.rows[i]) * z, mm, s.psi(m.cols[j]));
        const Cyclo col = crossed_entry(l, s.psi(m.rows[i]), mm, s.psi(m.cols[j]) * z);
        if (row != z * m.S(i, j)) fail = at("row-rescaled S", i, j, row, z * m.S(i, j));
        else if (col != za * m.S(i, j)) fail = at("column-rescaled S", i, j, col, za * m.S(i, j));
      }
  }
  r.add("scaling", fail.empty(), fail);

  fail.clear();
  try {
    const CrossedSMatrix& opp = s.crossed(-a);
    for (int i = 0; i < nr && fail.empty(); ++i) {
      const EqObject& l = cat->simple(m.rows[i]);
      const EqObject dl = dual(l);
      auto j = identify_simple(dl);
      int pos = -1;
      for (std::size_t p = 0; j && p < opp.rows.size(); ++p)
        if (opp.rows[p] == *j) pos = static_cast<int>(p);
      if (pos < 0) {
        fail = "dual of row " + std::to_string(i) + " is not an F-stable simple of sector -a";
        break;
      }
      auto phi = find_iso(dl, cat->simple(*j));
      const EqMorphism psi_dual = compose(inverse(*phi), compose(s.psi(*j), F_act(*phi, 1)));
      const Cyclo kappa = scalar_of(compose(psi_dual, dual(s.psi(m.rows[i]))));
      for (int c = 0; c < nc && fail.empty(); ++c)
        if (kappa * conj(m.S(i, c)) != opp.S(pos, c)) fail = at("kappa conj(S)", i, c, kappa * conj(m.S(i, c)), opp.S(pos, c));
    }
  } catch (const std::exception& e) {
    fail = e.what();
  }
  r.add("conjugation", fail.empty(), fail);

  fail.clear();
  int nonsingleton = 0;
  try {
    const CatPtr& big = s.big();
    const ModularData& bd = s.big_data();
    std::vector<int> cols;
    for (int c : m.cols) cols.push_back(s.big_index(c));
    for (int x = 0; x < static_cast<int>(big->simples().size()) && fail.empty(); ++x) {
      if (s.ext().sector(big->simples()[x].rep) != a) continue;
      const EqObject res = restrict_to(cat, big->simple(x));
      if (hom_dim(res, res) == 1) continue;
      ++nonsingleton;
      for (std::size_t c = 0; c < cols.size() && fail.empty(); ++c)
        if (!bd.S(x, cols[c]).is_zero()) fail = at("S(Z(Vec_G~))", x, cols[c], bd.S(x, cols[c]), Cyclo(0));
    }
  } catch (const std::exception& e) {
    fail = e.what();
  }
  r.add("vanishing", fail.empty(), fail.empty() ? std::to_string(nonsingleton) + " non-singleton rows" : fail);
  return r;
}

Report verify_kalgebra(const FrobeniusAlgebra& k, int modulus) {
  Report r;
  r.title = "kalgebra";
  const int n = k.size();
  std::string fail;

  for (int i = 0; i < n && fail.empty(); ++i)
    for (int j = 0; j < n && fail.empty(); ++j)
      for (int l = 0; l < n && fail.empty(); ++l)
        if (k.a[i][j][l] != k.a[j][i][l]) fail = "a[" + std::to_string(i) + "][" + std::to_string(j) + "] not symmetric";
  r.add("commutative", fail.empty(), fail);

  fail.clear();
  for (int i = 0; i < n && fail.empty(); ++i)
    for (int j = 0; j < n && fail.empty(); ++j) {
      const CVec bij = k.multiply(k.basis_vector(i), k.basis_vector(j));
      for (int l = 0; l < n && fail.empty(); ++l) {
        const CVec lhs = k.multiply(bij, k.basis_vector(l));
        const CVec rhs = k.multiply(k.basis_vector(i), k.multiply(k.basis_vector(j), k.basis_vector(l)));
        if (lhs != rhs)
          fail = "(b" + std::to_string(i) + " b" + std::to_string(j) + ") b" + std::to_string(l) + " differs";
      }
    }
  r.add("associative", fail.empty(), fail);

  fail.clear();
  if (k.unit < 0) fail = "unit is not in the basis";
  for (int j = 0; j < n && fail.empty(); ++j)
    if (k.multiply(k.basis_vector(k.unit), k.basis_vector(j)) != k.basis_vector(j)) fail = "1 b" + std::to_string(j) + " != b" + std::to_string(j);
  r.add("unit", fail.empty(), fail);

  fail.clear();
  for (int i = 0; i < n && fail.empty(); ++i)
    if (k.lambda[i] != Cyclo(i == k.unit ? 1 : 0)) fail = "lambda(b" + std::to_string(i) + ") = " + k.lambda[i].str();
  r.add("lambda", fail.empty(), fail);

  fail.clear();
  bool rational = true;
  long conductor = 1;
  for (int i = 0; i < n && fail.empty(); ++i)
    for (int j = 0; j < n && fail.empty(); ++j)
      for (int l = 0; l < n && fail.empty(); ++l) {
        const Cyclo& x = k.a[i][j][l];
        if (!x.is_integral()) fail = "a[" + std::to_string(i) + "][" + std::to_string(j) + "][" + std::to_string(l) + "] = " + x.str();
        if (!x.is_rational()) rational = false;
        conductor = lcm(conductor, x.conductor());
      }
  r.add("integrality", fail.empty(), fail);
  if (modulus <= 2) r.add("rational_integers", rational, rational ? "" : "non-rational structure constant with N <= 2");
  r.info("field", modulus > 0 && (2 * modulus) % conductor == 0, "conductor of the structure constants: " + std::to_string(conductor));

  CMat pairing(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) pairing(i, j) = k.lambda_of(k.multiply(k.basis_vector(i), k.basis_vector(j)));
  r.add("frobenius", rank(pairing) == n, "rank of lambda(b_i b_j) = " + std::to_string(rank(pairing)));

  fail.clear();
  const CMat g = k.gram();
  for (int i = 0; i < n && fail.empty(); ++i)
    for (int j = 0; j < n && fail.empty(); ++j)
      if (g(i, j) != Cyclo(i == j ? 1 : 0)) fail = at("Gram", i, j, g(i, j), Cyclo(i == j ? 1 : 0));
  r.add("orthonormal_basis", fail.empty(), fail);

  fail.clear();
  for (int i = 0; i < n && fail.empty(); ++i) {
    if (k.star(k.star(k.basis_vector(i))) != k.basis_vector(i)) fail = "star is not an involution at b" + std::to_string(i);
    for (int j = 0; j < n && fail.empty(); ++j) {
      const CVec lhs = k.star(k.multiply(k.basis_vector(i), k.basis_vector(j)));
      const CVec rhs = k.multiply(k.star(k.basis_vector(i)), k.star(k.basis_vector(j)));
      if (lhs != rhs) fail = "star(b" + std::to_string(i) + " b" + std::to_string(j) + ") differs";
    }
  }
  r.add("star", fail.empty(), fail);
  return r;
}

Report verify_characters(const FrobeniusAlgebra& k, const CrossedSMatrix& s0, const CharacterData& c,
                         const Cyclo& dim_c) {
  Report r;
  r.title = "characters";
  const int n = k.size(), nm = static_cast<int>(c.columns.size());
  r.add("count", nm == n, std::to_string(nm) + " characters, dim K = " + std::to_string(n));
  std::string fail;

  for (int m = 0; m < nm && fail.empty(); ++m) {
    if (c.chi(m, k.unit) != Cyclo(1)) fail = at("chi", m, k.unit, c.chi(m, k.unit), Cyclo(1));
    for (int i = 0; i < n && fail.empty(); ++i)
      for (int j = i; j < n && fail.empty(); ++j) {
        Cyclo rhs;
        for (int l = 0; l < n; ++l) rhs += k.a[i][j][l] * c.chi(m, l);
        if (c.chi(m, i) * c.chi(m, j) != rhs)
          fail = "chi_" + std::to_string(m) + " not multiplicative on (" + std::to_string(i) + "," + std::to_string(j) + ")";
      }
  }
  r.add("multiplicative", fail.empty(), fail);

  fail.clear();
  CVec total = CVec::Zero(n);
  for (int m = 0; m < nm && fail.empty(); ++m) {
    const CVec em = c.idempotents.row(m).transpose();
    total += em;
    for (int m2 = 0; m2 < nm && fail.empty(); ++m2) {
      const CVec em2 = c.idempotents.row(m2).transpose();
      const CVec prod = k.multiply(em, em2);
      const CVec want = m == m2 ? em : CVec(CVec::Zero(n));
      if (prod != want) fail = "e_" + std::to_string(m) + " e_" + std::to_string(m2) + " wrong";
    }
  }
  if (fail.empty() && n > 0 && total != k.basis_vector(k.unit)) fail = "sum of idempotents is not 1";
  r.add("idempotents", fail.empty(), fail);

  fail.clear();
  for (int m = 0; m < nm && fail.empty(); ++m) {
    const Cyclo dm = s0.S(k.unit, m);
    const Cyclo got = k.lambda_of(c.idempotents.row(m).transpose());
    const Cyclo want = dm * dm / dim_c;
    if (got != want) fail = "lambda(e_" + std::to_string(m) + ") = " + got.str() + ", expected " + want.str();
  }
  r.add("lambda_idempotents", fail.empty(), fail);

  fail.clear();
  for (int i = 0; i < n && fail.empty(); ++i) {
    const CMat lhs = mul(CMat(k.left_mult(i).transpose()), s0.S);
    CMat delta = CMat::Zero(nm, nm);
    for (int m = 0; m < nm; ++m) delta(m, m) = c.chi(m, i);
    const CMat rhs = mul(s0.S, delta);
    if (lhs != rhs) fail = "(A_" + std::to_string(i) + ")^T S != S Delta_" + std::to_string(i);
  }
  r.add("eigen_relation", fail.empty(), fail);

  fail.clear();
  {
    const Cyclo inv_dim_c = dim_c.inverse();
    std::vector<Cyclo> inv_dm(nm);
    for (int m = 0; m < nm; ++m) inv_dm[m] = s0.S(k.unit, m).inverse();
    for (int i = 0; i < n && fail.empty(); ++i)
      for (int j = 0; j < n && fail.empty(); ++j)
        for (int l = 0; l < n && fail.empty(); ++l) {
          Cyclo acc;
          for (int m = 0; m < nm; ++m) acc += s0.S(i, m) * s0.S(j, m) * conj(s0.S(l, m)) * inv_dm[m];
          acc *= inv_dim_c;
          if (acc != k.a[i][j][l]) {
            std::ostringstream os;
            os << "a[" << i << "][" << j << "][" << l << "] = " << k.a[i][j][l].str() << ", S-matrix expression gives "
               << acc.str();
            fail = os.str();
          }
        }
  }
  r.add("verlinde_analogue", fail.empty(), fail);
  return r;
}

}  // namespace crossed_s
