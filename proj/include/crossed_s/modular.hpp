#pragma once

#include <string>
#include <vector>

#include "crossed_s/eqcat.hpp"
#include "crossed_s/report.hpp"

namespace crossed_s {

/// Unnormalized modular data of a modular category.
struct ModularData {
  std::vector<std::string> labels;
  CMat S;
  std::vector<Cyclo> T;
  std::vector<Cyclo> dims;
  Cyclo global_dim;
  Cyclo gauss_plus, gauss_minus;

  int size() const { return static_cast<int>(labels.size()); }
};

/// "a{sector}:x{rep}:chi{row}"
std::string label_string(const SimpleLabel& l);

/// tr(beta_{W,V} o beta_{V,W}) for simples of a double (modulus 1).
Cyclo double_braiding_trace(const EqObject& v, const EqObject& w);

/// S, T, dims and Gauss sums of the sector-0 simples (all simples for a double).
ModularData modular_data(const CatPtr& double_cat);
ModularData modular_data_of_double(const FiniteGroup& g);
/// Z(Vec_{Gamma~}) for Gamma~ = Gamma x| <F>.
ModularData modular_data_of_double(const ExtendedGroup& e);

/// tau+ = sum theta dim^2 (plus = true) or tau- with conjugated twists.
Cyclo gauss_sum(const ModularData& d, bool plus = true);
/// Recomputes global_dim and both Gauss sums from T and dims.
void fill_derived(ModularData& d);

/// fusion[i][j][k] = N_{ij}^k from the Verlinde formula. Throws std::domain_error if S is singular.
using FusionTable = std::vector<std::vector<std::vector<Cyclo>>>;
FusionTable verlinde_fusion(const ModularData& d);

/// Exact checks: shape, symmetry, unit row, unitarity, roots of unity, global
/// dimension, Gauss sums, (ST)^3 = tau+ S^2, Verlinde integrality. Never throws
/// on inconsistent data.
Report verify_modular(const ModularData& d);

}  // namespace crossed_s
