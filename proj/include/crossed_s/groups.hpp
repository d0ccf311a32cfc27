#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace crossed_s {

/// Malformed group, automorphism or job specification.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A finite group given by its multiplication table. Elements are 0..order-1.
class FiniteGroup {
 public:
  /// Validates the table exhaustively (closure, identity, inverses, associativity).
  explicit FiniteGroup(std::vector<std::vector<int>> table, std::string name = "");

  int order() const { return static_cast<int>(table_.size()); }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long k) const;
  int conjugate(int g, int x) const { return mul(mul(g, x), inv(g)); }  // g x g^-1
  int element_order(int a) const { return element_order_[a]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;
  const std::string& name() const { return name_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  /// Conjugacy classes ordered by smallest member; members ascending.
  const std::vector<std::vector<int>>& classes() const { return classes_; }
  int class_of(int x) const { return class_of_[x]; }
  std::vector<int> centralizer(int x) const;

 private:
  std::vector<std::vector<int>> table_;
  std::string name_;
  int identity_ = 0;
  std::vector<int> inverse_;
  std::vector<int> element_order_;
  int exponent_ = 1;
  std::vector<std::vector<int>> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup cyclic_group(int n);
FiniteGroup klein_group();
/// Order 2n; element r^k s^e has index k + n e.
FiniteGroup dihedral_group(int n);
/// Permutations of {0..n-1} in lexicographic order, (st)(i) = s(t(i)). n <= 5.
FiniteGroup symmetric_group(int n);
/// Element (g, h) has index g + |G| h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// "cyclic:3", "klein", "dihedral:4", "sym:3", "product:(cyclic:2,cyclic:2)".
FiniteGroup parse_group(std::string_view spec);

/// A subgroup together with its own multiplication table.
struct Subgroup {
  std::vector<int> elements;  // parent indices, ascending; elements[local] = parent
  std::vector<int> local;     // parent index -> local index or -1
  FiniteGroup group;

  int to_parent(int l) const { return elements[l]; }
  int to_local(int p) const { return local[p]; }
  bool contains(int p) const { return local[p] >= 0; }
};

/// Requires `elements` to be closed under multiplication.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<int> elements);

/// Smallest subgroup containing the generators.
std::vector<int> generated_subgroup(const FiniteGroup& g, const std::vector<int>& generators);

/// A group automorphism of finite order.
class Automorphism {
 public:
  Automorphism(GroupPtr group, std::vector<int> images);

  const GroupPtr& group() const { return group_; }
  int operator()(int x) const { return images_[x]; }
  /// F^k(x) for any integer k.
  int apply_pow(long k, int x) const;
  int order() const { return order_; }
  const std::vector<int>& images() const { return images_; }
  Automorphism power(long k) const;
  bool is_identity() const { return order_ == 1; }

 private:
  GroupPtr group_;
  std::vector<int> images_;
  int order_ = 1;
  std::vector<std::vector<int>> powers_;  // powers_[k][x] = F^k(x), k in [0, order)
};

/// "id", "inv" (abelian only), "inner:gK", "images:[...]".
Automorphism parse_automorphism(GroupPtr group, std::string_view spec);

/// An orbit of the twisted conjugation g.x = g x F^a(g)^-1.
struct TwistedOrbit {
  int rep;                    // minimum element index
  std::vector<int> elements;  // ascending
  std::vector<int> stabilizer;
};

/// Orbits ordered by representative. a = 0 gives ordinary conjugacy classes.
std::vector<TwistedOrbit> twisted_classes(const Automorphism& f, long a);
std::vector<int> twisted_centralizer(const Automorphism& f, long a, int x);

/// Gamma~ = Gamma x| <F>, with (s,a)(t,b) = (s F^a(t), a+b) and index s + |Gamma| a.
class ExtendedGroup {
 public:
  explicit ExtendedGroup(Automorphism f);

  const FiniteGroup& base() const { return *f_.group(); }
  const GroupPtr& base_ptr() const { return f_.group(); }
  const Automorphism& automorphism() const { return f_; }
  int modulus() const { return f_.order(); }  // N
  const FiniteGroup& group() const { return *tilde_; }
  const GroupPtr& group_ptr() const { return tilde_; }

  int element(int s, long a) const;
  int base_part(int x) const { return x % base().order(); }
  int sector(int x) const { return x / base().order(); }
  /// (1, 1)
  int h() const { return element(base().identity(), 1); }
  /// Embedding of Gamma.
  int embed(int s) const { return s; }
  /// Reduction of an arbitrary integer sector into [0, N).
  int reduce(long a) const;

 private:
  Automorphism f_;
  GroupPtr tilde_;
};

/// An isomorphism G -> H as an image list, found by exhaustive search.
std::optional<std::vector<int>> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

}  // namespace crossed_s
