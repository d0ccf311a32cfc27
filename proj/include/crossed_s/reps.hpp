#pragma once

#include <string>
#include <vector>

#include "crossed_s/groups.hpp"
#include "crossed_s/linalg.hpp"

namespace crossed_s {

/// Exact character table. Rows are irreducible characters (trivial first,
/// then by degree), columns are the conjugacy classes of the group in
/// `FiniteGroup::classes()` order.
struct CharTable {
  int exponent = 1;
  std::vector<std::vector<int>> classes;
  std::vector<int> class_of;
  std::vector<std::vector<Cyclo>> values;  // [row][class]
  int class_of_identity = 0;

  int size() const { return static_cast<int>(values.size()); }
  int degree(int row) const { return static_cast<int>(values[row][class_of_identity].to_rational().get_num().get_si()); }
  const Cyclo& value(int row, int element) const { return values[row][class_of[element]]; }
};

/// Character table by the mod-p class-sum method with an exact lift.
CharTable char_table(const FiniteGroup& g);

/// Irreducible representation with matrices for every element.
struct Irrep {
  int dim = 1;
  std::vector<CMat> matrices;  // indexed by element
  const CMat& operator()(int g) const { return matrices[g]; }
};

/// One irrep per character-table row, in row order; each verified to be a
/// homomorphism with the expected character. Throws std::runtime_error when
/// no construction is found.
std::vector<Irrep> irreps(const FiniteGroup& g, const CharTable& table);

std::vector<Cyclo> character_of(const Irrep& rho);

/// rho o phi, for phi given as an image list on the domain group.
Irrep pullback(const Irrep& rho, const std::vector<int>& phi);

/// Rows: characters; columns: classes labelled by representative and size.
std::string char_table_csv(const CharTable& table);

/// Exhaustive check of rho(gh) = rho(g) rho(h) and rho(1) = I.
bool is_homomorphism(const FiniteGroup& g, const Irrep& rho);

}  // namespace crossed_s
