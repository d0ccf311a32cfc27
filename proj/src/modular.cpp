#include "crossed_s/modular.hpp"

#include <numeric>
#include <sstream>

namespace crossed_s {

namespace {

std::string entry(const char* m, int i, int j, const Cyclo& got, const Cyclo& want) {
  std::ostringstream os;
  os << m << "(" << i << "," << j << ") = " << got.str() << ", expected " << want.str();
  return os.str();
}

}  // namespace

std::string label_string(const SimpleLabel& l) {
  return "a" + std::to_string(l.sector) + ":x" + std::to_string(l.rep) + ":chi" + std::to_string(l.irrep);
}

Cyclo double_braiding_trace(const EqObject& v, const EqObject& w) {
  return spherical_trace(compose(crossed_braiding(w, v), crossed_braiding(v, w)));
}

ModularData modular_data(const CatPtr& cat) {
  // sector-0 simples come first, so indices coincide with the category's
  const int k = static_cast<int>(cat->simples_in_sector(0).size());
  ModularData d;
  d.S = CMat::Zero(k, k);
  for (int i = 0; i < k; ++i) {
    const EqObject& v = cat->simple(i);
    d.labels.push_back(label_string(cat->simples()[i]));
    d.dims.push_back(module_dim(v));
    d.T.push_back(scalar_of(twist(v)));
    for (int j = 0; j <= i; ++j) {
      d.S(i, j) = double_braiding_trace(v, cat->simple(j));
      d.S(j, i) = d.S(i, j);
    }
  }
  fill_derived(d);
  return d;
}

ModularData modular_data_of_double(const FiniteGroup& g) { return modular_data(EqCategory::double_of(g)); }

ModularData modular_data_of_double(const ExtendedGroup& e) { return modular_data(EqCategory::double_of(e.group())); }

Cyclo gauss_sum(const ModularData& d, bool plus) {
  Cyclo acc;
  for (std::size_t i = 0; i < d.T.size() && i < d.dims.size(); ++i)
    acc += (plus ? d.T[i] : conj(d.T[i])) * d.dims[i] * d.dims[i];
  return acc;
}

void fill_derived(ModularData& d) {
  d.global_dim = Cyclo(0);
  for (const Cyclo& x : d.dims) d.global_dim += x * x;
  d.gauss_plus = gauss_sum(d, true);
  d.gauss_minus = gauss_sum(d, false);
}

FusionTable verlinde_fusion(const ModularData& d) {
  const int k = d.size();
  if (d.global_dim.is_zero()) throw std::domain_error("verlinde_fusion: zero global dimension");
  if (rank(d.S) < k) throw std::domain_error("verlinde_fusion: S is singular");
  const Cyclo inv_dim = d.global_dim.inverse();
  std::vector<Cyclo> inv_d(k);
  for (int m = 0; m < k; ++m) inv_d[m] = d.S(0, m).inverse();
  FusionTable n(k, std::vector<std::vector<Cyclo>>(k, std::vector<Cyclo>(k)));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      for (int l = 0; l < k; ++l) {
        Cyclo acc;
        for (int m = 0; m < k; ++m) acc += d.S(i, m) * d.S(j, m) * conj(d.S(l, m)) * inv_d[m];
        n[i][j][l] = acc * inv_dim;
      }
  return n;
}

Report verify_modular(const ModularData& d) {
  Report r;
  r.title = "modular";
  const int k = d.size();
  const bool shape = d.S.rows() == k && d.S.cols() == k && static_cast<int>(d.T.size()) == k &&
                     static_cast<int>(d.dims.size()) == k && k > 0;
  r.add("shape", shape, shape ? "" : "labels, S, T and dims disagree in size");
  if (!shape) return r;

  std::string fail;
  for (int i = 0; i < k && fail.empty(); ++i)
    for (int j = 0; j < i && fail.empty(); ++j)
      if (d.S(i, j) != d.S(j, i)) fail = entry("S", i, j, d.S(i, j), d.S(j, i));
  r.add("symmetry", fail.empty(), fail);

  fail.clear();
  for (int j = 0; j < k && fail.empty(); ++j)
    if (d.S(0, j) != d.dims[j]) fail = entry("S", 0, j, d.S(0, j), d.dims[j]);
  r.add("unit_row", fail.empty(), fail);

  Cyclo gd;
  for (const Cyclo& x : d.dims) gd += x * x;
  r.add("global_dim", gd == d.global_dim, gd == d.global_dim ? "" : "sum of dims^2 = " + gd.str());

  fail.clear();
  const CMat sst = mul(d.S, adjoint(d.S));
  for (int i = 0; i < k && fail.empty(); ++i)
    if (sst(i, i) != gd) fail = entry("S.conj(S)^T", i, i, sst(i, i), gd);
  for (int i = 0; i < k && fail.empty(); ++i)
    for (int j = 0; j < k && fail.empty(); ++j)
      if (i != j && !sst(i, j).is_zero()) fail = entry("S.conj(S)^T", i, j, sst(i, j), Cyclo(0));
  r.add("unitarity", fail.empty(), fail);

  fail.clear();
  for (int i = 0; i < k && fail.empty(); ++i)
    if (!as_root_of_unity(d.T[i])) fail = "T(" + std::to_string(i) + ") = " + d.T[i].str() + " is not a root of unity";
  r.add("twists_roots_of_unity", fail.empty(), fail);

  const Cyclo tp = gauss_sum(d, true), tm = gauss_sum(d, false);
  const bool gauss_ok = tp == d.gauss_plus && tm == d.gauss_minus;
  r.add("gauss_sums", gauss_ok, gauss_ok ? "" : "stored Gauss sums differ from sum theta dim^2");
  r.add("gauss_product", tp * tm == gd, "tau+ tau- = " + (tp * tm).str());

  // (ST)^3 = tau+ S^2 holds for the matrix tr(beta^-1 beta^-1) = conj(S); the
  // form with S itself is reported separately and only agrees on self-dual data.
  CMat t = CMat::Zero(k, k);
  for (int i = 0; i < k; ++i) t(i, i) = d.T[i];
  auto relation = [&](const CMat& s) {
    const CMat st = mul(s, t);
    const CMat lhs = mul(mul(st, st), st);
    const CMat s2 = mul(s, s);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j)
        if (lhs(i, j) != tp * s2(i, j)) return entry("(ST)^3", i, j, lhs(i, j), tp * s2(i, j));
    return std::string();
  };
  fail = relation(conj(d.S));
  r.add("modular_relation", fail.empty(), fail.empty() ? "(conj(S) T)^3 = tau+ conj(S)^2" : fail);
  fail = relation(d.S);
  r.info("modular_relation_literal", fail.empty(), fail.empty() ? "(S T)^3 = tau+ S^2" : fail);

  fail.clear();
  try {
    FusionTable n = verlinde_fusion(d);
    for (int i = 0; i < k && fail.empty(); ++i)
      for (int j = 0; j < k && fail.empty(); ++j)
        for (int l = 0; l < k && fail.empty(); ++l) {
          const Cyclo& x = n[i][j][l];
          if (!x.is_rational() || !x.is_integral() || sgn(x.to_rational()) < 0) {
            std::ostringstream os;
            os << "N_{" << i << "," << j << "}^" << l << " = " << x.str();
            fail = os.str();
          }
        }
  } catch (const std::exception& e) {
    fail = e.what();
  }
  r.add("verlinde_integrality", fail.empty(), fail);
  return r;
}

}  // namespace crossed_s
