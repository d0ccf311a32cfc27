#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "crossed_s/eqcat.hpp"
#include "crossed_s/modular.hpp"
#include "crossed_s/report.hpp"

namespace crossed_s {

/// Chosen isomorphisms psi_L : F(L) -> L for the F-stable simples of one sector,
/// normalized so that psi^(N) = id.
struct EquivChoice {
  int sector = 0;
  std::vector<int> labels;        // simple indices in the category
  std::vector<EqMorphism> psi;    // psi[i] : F(L_i) -> L_i
  std::vector<Cyclo> leading;     // leading entry of psi[i]

  int position(int simple) const;  // index into labels, or -1
};

/// Labels L in sector a with F(L) isomorphic to L.
std::vector<int> fstable_simples(const CatPtr& cat, long a);

/// psi for every F-stable simple of sector a. Throws std::runtime_error if a
/// label is not actually stable or a normalization check fails.
EquivChoice choose_psi(const CatPtr& cat, long a);

/// psi o F(psi) o ... o F^{m-1}(psi) : F^m(L) -> L; m = 0 gives the identity.
EqMorphism psi_power(const EqMorphism& psi, long m);

/// First nonzero entry, row-major, of the smallest-index nonzero stalk block.
std::optional<Cyclo> leading_entry(const EqMorphism& f);

/// f multiplied by zeta_n^-k so that its leading entry has argument in [0, 2 pi / n).
EqMorphism argument_window(const EqMorphism& f, int n);

/// tr((psi_L (x) psi_M^(a)) o beta_{F^a M, L} o beta_{L,M}) for L in sector a, M in sector 1.
Cyclo crossed_entry(const EqObject& l, const EqMorphism& psi_l, const EqObject& m, const EqMorphism& psi_m);

struct CrossedSMatrix {
  int sector = 0;
  std::vector<int> rows;  // F-stable simples of sector a
  std::vector<int> cols;  // simples of sector 1
  CMat S;
};

CrossedSMatrix crossed_s_matrix(const EquivChoice& rows, const EquivChoice& cols);

/// Forgets the h-action: a Gamma~-equivariant object of Z(Vec_Gamma~) seen in D.
EqObject restrict_to(const CatPtr& cat, const EqObject& x);
/// (L, psi) as an object of Z(Vec_Gamma~).
EqObject lift_to_double(const CatPtr& big, const EqObject& l, const EqMorphism& psi);

/// Commutative algebra on F-stable simples with the chosen psi as basis.
struct FrobeniusAlgebra {
  std::vector<int> basis;        // simple indices
  std::vector<int> sectors;
  std::vector<std::vector<std::vector<Cyclo>>> a;  // b_i b_j = sum_k a[i][j][k] b_k
  std::vector<Cyclo> lambda;
  std::vector<int> star_index;   // b_i* = star_scalar[i] b_{star_index[i]}
  std::vector<Cyclo> star_scalar;
  /// psi_{L*} o psi_L^* transported to L*, per basis element.
  std::vector<Cyclo> conjugation_scalar;
  int unit = 0;

  int size() const { return static_cast<int>(basis.size()); }
  int position(int simple) const;
  CVec basis_vector(int i) const;
  CVec multiply(const CVec& x, const CVec& y) const;
  CVec star(const CVec& x) const;
  Cyclo lambda_of(const CVec& x) const;
  /// <x, y> = lambda(x y*)
  Cyclo hermitian(const CVec& x, const CVec& y) const;
  CMat gram() const;
  /// (A_i)_{k,j} = a[i][j][k], the matrix of left multiplication by b_i.
  CMat left_mult(int i) const;
};

struct CharacterData {
  std::vector<int> columns;  // simples of sector 1
  CMat chi;                  // chi(M, i) = S_{i,M} / dim M
  CMat idempotents;          // row M: coordinates of e_M
};

class CrossedSetting;

/// K(C,F) (sector 0 only) or K(D,F) (all sectors).
FrobeniusAlgebra k_algebra(const CrossedSetting& s, bool all_sectors);

CharacterData characters_and_idempotents(const FrobeniusAlgebra& k, const CrossedSMatrix& s0, const Cyclo& dim_c);

/// Everything derived from one (Gamma, F): the category D, psi choices on every
/// sector, crossed S-matrices and the double Z(Vec_Gamma~). Results are cached;
/// not safe for concurrent use.
class CrossedSetting {
 public:
  explicit CrossedSetting(ExtendedGroup ext);
  static CrossedSetting parse(std::string_view group, std::string_view aut);

  const CatPtr& category() const { return cat_; }
  const ExtendedGroup& ext() const { return cat_->ext(); }
  int modulus() const { return cat_->modulus(); }
  int reduce(long a) const { return cat_->ext().reduce(a); }
  /// dim C = |Gamma|^2
  Cyclo dim_c() const;

  const EquivChoice& choice(long a) const;
  bool is_fstable(int simple) const;
  const EqMorphism& psi(int simple) const;

  const CrossedSMatrix& crossed(long a) const;

  /// Modular data of C = Z(Vec_Gamma) on the sector-0 simples of D.
  const ModularData& base_data() const;
  const CatPtr& big() const;
  const ModularData& big_data() const;
  /// Index in Z(Vec_Gamma~) of the lift (L, psi_L).
  int big_index(int simple) const;

 private:
  CatPtr cat_;
  mutable std::map<int, EquivChoice> choices_;
  mutable std::map<int, CrossedSMatrix> crossed_;
  mutable std::optional<ModularData> base_, big_data_;
  mutable CatPtr big_;
  mutable std::map<int, int> big_index_;
};

/// Checks (u), (c), (i), (sub), (scale), (van), unit row and cardinality.
Report verify_crossed(const CrossedSetting& s, long a, const CrossedSMatrix& m);

/// Associativity, commutativity, unit, lambda, integrality, Frobenius and Gram checks.
Report verify_kalgebra(const FrobeniusAlgebra& k, int modulus);

/// Multiplicativity, idempotents, lambda(e_M), eigen-relation and the Verlinde analogue.
Report verify_characters(const FrobeniusAlgebra& k, const CrossedSMatrix& s0, const CharacterData& c,
                         const Cyclo& dim_c);

}  // namespace crossed_s
