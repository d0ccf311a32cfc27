#pragma once

#include <vector>

#include "crossed_s/crossed.hpp"

namespace crossed_s {

/// Scalar of psi^(a) o theta^a_L : L -> L for L in sector a, i.e. the twist of
/// (L, psi) in Z(Vec_Gamma~). A root of unity.
Cyclo equivariant_twist(const EqObject& l, const EqMorphism& psi);

/// theta_{(L, psi_L)} for the F-stable simples of sector a, in choice order.
std::vector<Cyclo> twist_diagonal(const CrossedSetting& s, long a);

/// eta : F(L) -> L with eta^(m) o theta^m_L = id, chosen as c psi_L and then
/// rotated by an m-th root of unity into the argument window of width 2 pi / m.
EqMorphism eta_normalize(const EqObject& l, const EqMorphism& psi, long m);

/// F^m(M) -> M: (theta^1_M)^-1 o F((theta^1_M)^-1) o ... o F^{m-1}((theta^1_M)^-1).
EqMorphism inverse_twist_iterate(const EqObject& m_obj, long m);

struct ShintaniMatrix {
  long m = 1;
  int sector = 0;          // m mod N
  std::vector<int> rows;   // F-stable simples of sector m
  std::vector<int> cols;   // simples of sector 1
  CMat Sh;
  std::vector<EqMorphism> eta;  // per row
  std::vector<Cyclo> t_prime;   // per row, eta^-1 o psi
  std::vector<Cyclo> t;         // per column, theta_{(M, psi_M)}
  std::vector<Cyclo> col_dims;  // dim M
};

/// Entry (L, M) is the trace of (eta_L (x) eta^m_M) o beta_{F^m M, L} o beta_{L, M}.
ShintaniMatrix shintani_matrix(const CrossedSetting& s, long m);

/// Unitarity, root-of-unity diagonals, (T')^m = T_m, and the relation with
/// S(M_m, F). Both the three-factor form T' S T^m and the form obtained by
/// expanding eta = (T')^-1 psi, namely (T')^-1 S T^-m, are reported; `stated_gating`
/// selects which one decides ok().
Report verify_shandsmf(const CrossedSetting& s, const ShintaniMatrix& sh, bool stated_gating = false);

/// Sh_m(L) = sum_M Sh_{L,M} / dim M e_M.
struct ShintaniBasis {
  long m = 1;
  std::vector<int> rows;
  CMat coords;      // row L: coordinates in the basis [(C, psi_C)]
  CMat idempotent;  // row L: coordinates in the basis e_M
};

ShintaniBasis shintani_descent(const ShintaniMatrix& sh, const FrobeniusAlgebra& k, const CharacterData& c);

/// Least positive multiple of N with T(M,F)^m0 = I, from exact root orders.
long m_zero(const CrossedSetting& s);
/// The same by iterating powers of the diagonal.
long m_zero_by_powers(const CrossedSetting& s);

/// Orthonormality of every Shintani basis for m = 1..2 m0, periodicity modulo
/// m0, coincidence with [(C, psi_C)] at multiples of m0, and Sh_m unitarity.
Report verify_shintani_suite(const CrossedSetting& s, bool stated_gating = false);

/// Sh_1 against the twisting operator, the T1 S1 T1 ingredient identity and
/// tau+ of the big double. Reports the stated forms and the forms that follow
/// from the literal definitions; `stated_gating` selects which decide ok().
Report twisting_operator_check(const CrossedSetting& s, bool stated_gating = false);

}  // namespace crossed_s
