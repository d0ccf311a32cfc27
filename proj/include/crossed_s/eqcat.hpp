#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "crossed_s/groups.hpp"
#include "crossed_s/linalg.hpp"
#include "crossed_s/reps.hpp"

namespace crossed_s {

/// Simple object of the ambient category: a Gamma-orbit in Gamma~ (given by
/// its minimal representative) and an irrep of the stabilizer of that
/// representative (a row of the stabilizer's character table).
struct SimpleLabel {
  int sector = 0;
  int rep = 0;    // element of Gamma~
  int irrep = 0;  // character-table row of the stabilizer
  friend bool operator==(const SimpleLabel&, const SimpleLabel&) = default;
};

struct StabilizerData {
  Subgroup subgroup;  // inside the acting group Gamma
  CharTable table;
  std::vector<Irrep> irreps;
};

class EqObject;

/// Gamma-equivariant vector bundles on Gamma~ = Gamma x| <F>. With F = id
/// this is the Drinfeld double Z(Vec_Gamma). Holds the group data plus
/// caches of stabilizer irreps and simple objects.
class EqCategory : public std::enable_shared_from_this<EqCategory> {
 public:
  static std::shared_ptr<const EqCategory> create(ExtendedGroup ext);
  /// Z(Vec_G) for an arbitrary group G.
  static std::shared_ptr<const EqCategory> double_of(const FiniteGroup& g);
  ~EqCategory();

  const ExtendedGroup& ext() const { return ext_; }
  const FiniteGroup& grading() const { return ext_.group(); }
  const FiniteGroup& acting() const { return ext_.base(); }
  int modulus() const { return ext_.modulus(); }
  int sector(int x) const { return ext_.sector(x); }
  /// g x g^-1 for g in Gamma, x in Gamma~.
  int act(int g, int x) const { return grading().conjugate(ext_.embed(g), x); }

  int orbit_rep(int x) const { return orbit_rep_[x]; }
  /// Smallest g in Gamma with g rep g^-1 = x.
  int transversal(int x) const { return transversal_[x]; }
  const std::vector<int>& stabilizer(int rep) const { return stabilizers_.at(rep); }
  const StabilizerData& stabilizer_data(int rep) const;

  /// All simples: sectors ascending, representatives ascending, irreps in table order.
  const std::vector<SimpleLabel>& simples() const { return simples_; }
  std::vector<int> simples_in_sector(int a) const;
  int index_of(const SimpleLabel& l) const;
  const EqObject& simple(int index) const;
  EqObject unit() const;

 private:
  explicit EqCategory(ExtendedGroup ext);
  void init();

  ExtendedGroup ext_;
  std::vector<int> orbit_rep_, transversal_;
  std::map<int, std::vector<int>> stabilizers_;
  std::vector<SimpleLabel> simples_;
  mutable std::recursive_mutex mutex_;
  mutable std::map<int, std::unique_ptr<StabilizerData>> stab_cache_;
  mutable std::map<int, std::unique_ptr<EqObject>> simple_cache_;
};

using CatPtr = std::shared_ptr<const EqCategory>;

/// Immutable handle: stalk dimensions per element of Gamma~ and the action
/// blocks pi(g)|_x : V_x -> V_{g x g^-1} for g in Gamma.
class EqObject {
 public:
  EqObject(CatPtr cat, std::vector<int> dims, std::vector<std::vector<CMat>> action);

  const CatPtr& category() const { return d_->cat; }
  int dim(int x) const { return d_->dims[x]; }
  const std::vector<int>& dims() const { return d_->dims; }
  int total_dim() const;
  const CMat& act(int g, int x) const { return d_->action[g][x]; }
  std::vector<int> support() const;
  /// The sector when the support lies in a single coset (the zero object has none).
  std::optional<int> sector() const;

  /// Exhaustive check of pi(1) = I and pi(g)pi(h) = pi(gh).
  bool is_valid() const;

  friend bool operator==(const EqObject& a, const EqObject& b);
  friend bool operator!=(const EqObject& a, const EqObject& b) { return !(a == b); }

 private:
  struct Data {
    CatPtr cat;
    std::vector<int> dims;
    std::vector<std::vector<CMat>> action;
  };
  std::shared_ptr<const Data> d_;
};

/// Grading-preserving linear map, one block per element of Gamma~.
class EqMorphism {
 public:
  EqMorphism(EqObject source, EqObject target, std::vector<CMat> blocks);

  const EqObject& source() const { return src_; }
  const EqObject& target() const { return tgt_; }
  const CMat& block(int x) const { return blocks_[x]; }
  const std::vector<CMat>& blocks() const { return blocks_; }

  bool is_zero() const;
  /// f_{g x g^-1} pi_V(g)|_x = pi_W(g)|_x f_x for all g, x.
  bool is_equivariant() const;
  bool is_invertible() const;

  EqMorphism operator+(const EqMorphism& o) const;
  EqMorphism operator-(const EqMorphism& o) const;
  EqMorphism operator*(const Cyclo& c) const;
  friend EqMorphism operator*(const Cyclo& c, const EqMorphism& f) { return f * c; }
  friend bool operator==(const EqMorphism& a, const EqMorphism& b);

 private:
  EqObject src_, tgt_;
  std::vector<CMat> blocks_;
};

EqMorphism identity(const EqObject& v);
EqMorphism zero_morphism(const EqObject& v, const EqObject& w);
/// g o f
EqMorphism compose(const EqMorphism& g, const EqMorphism& f);
EqMorphism inverse(const EqMorphism& f);
/// The scalar c with f = c id for an endomorphism of a simple object.
Cyclo scalar_of(const EqMorphism& f);

EqObject simple_object(const CatPtr& cat, const SimpleLabel& label);

/// (V (x) W)_z = sum over x y = z of V_x (x) W_y, summands ordered by x, Kronecker bases.
EqObject tensor(const EqObject& v, const EqObject& w);
EqMorphism tensor(const EqMorphism& f, const EqMorphism& g);
/// (A (x) B) (x) C -> A (x) (B (x) C), a basis permutation.
EqMorphism associator(const EqObject& a, const EqObject& b, const EqObject& c);
EqMorphism associator_inverse(const EqObject& a, const EqObject& b, const EqObject& c);

/// (V*)_{x^-1} = (V_x)*.
EqObject dual(const EqObject& v);
/// f* : W* -> V*.
EqMorphism dual(const EqMorphism& f);
/// V* (x) V -> 1
EqMorphism ev(const EqObject& v);
/// 1 -> V (x) V*
EqMorphism coev(const EqObject& v);
/// V (x) V* -> 1 (pivotal evaluation; V** = V strictly)
EqMorphism ev_right(const EqObject& v);
/// 1 -> V* (x) V
EqMorphism coev_right(const EqObject& v);

/// F^b(V): stalks pushed along conjugation by h^b.
EqObject F_act(const EqObject& v, long b);
EqMorphism F_act(const EqMorphism& f, long b);
/// Tensor structure of F^b: F^b(V (x) W) -> F^b(V) (x) F^b(W).
EqMorphism tensor_structure(const EqObject& v, const EqObject& w, long b);

/// beta_{V,W} : V (x) W -> F^a(W) (x) V for V homogeneous of sector a.
EqMorphism crossed_braiding(const EqObject& v, const EqObject& w);
/// theta^a_V : V -> F^a(V), composed from coev, crossed braiding and the pivotal evaluation.
EqMorphism twist(const EqObject& v);
/// theta^a_V by its stalkwise formula, used to cross-check `twist`.
EqMorphism twist_formula(const EqObject& v);

Cyclo spherical_trace(const EqMorphism& f);
Cyclo module_dim(const EqObject& v);

std::vector<EqMorphism> hom_basis(const EqObject& v, const EqObject& w);
int hom_dim(const EqObject& v, const EqObject& w);
/// Multiplicities of every simple of the category in V, indexed like `simples()`.
std::vector<int> decompose(const EqObject& v);
std::optional<EqMorphism> find_iso(const EqObject& v, const EqObject& w);
/// Index of the simple isomorphic to v, or nullopt if v is not simple.
std::optional<int> identify_simple(const EqObject& v);

}  // namespace crossed_s
