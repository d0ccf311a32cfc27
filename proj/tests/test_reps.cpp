#include <doctest.h>

#include <algorithm>

#include "crossed_s/groups.hpp"
#include "crossed_s/reps.hpp"

using namespace crossed_s;

namespace {

void check_table(const FiniteGroup& g, const CharTable& t) {
  const int r = static_cast<int>(g.classes().size());
  REQUIRE(t.size() == r);
  long sum_sq = 0;
  for (int i = 0; i < r; ++i) {
    CHECK(t.degree(i) > 0);
    sum_sq += static_cast<long>(t.degree(i)) * t.degree(i);
  }
  CHECK(sum_sq == g.order());
  // column orthogonality: sum_chi chi(g_k) conj(chi(g_l)) = delta_kl |C(g_k)|
  for (int k = 0; k < r; ++k)
    for (int l = 0; l < r; ++l) {
      Cyclo acc;
      for (int i = 0; i < r; ++i) acc += t.values[i][k] * conj(t.values[i][l]);
      long expect = k == l ? static_cast<long>(g.centralizer(g.classes()[k][0]).size()) : 0;
      CHECK(acc == Cyclo(expect));
    }
  // trivial character first
  for (int k = 0; k < r; ++k) CHECK(t.values[0][k].is_one());
}

}  // namespace

TEST_CASE("cyclic character tables") {
  for (int n = 1; n <= 8; ++n) {
    FiniteGroup g = cyclic_group(n);
    CharTable t = char_table(g);
    check_table(g, t);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) CHECK(t.value(j, k) == Cyclo::root(n, static_cast<long>(j) * k));
  }
}

TEST_CASE("S3 character table") {
  FiniteGroup s3 = symmetric_group(3);
  CharTable t = char_table(s3);
  check_table(s3, t);
  CHECK(t.degree(0) == 1);
  CHECK(t.degree(1) == 1);
  CHECK(t.degree(2) == 2);
  // element 1 is a transposition, element 3 = [1,2,0] a 3-cycle
  CHECK(t.value(2, 0) == Cyclo(2));
  CHECK(t.value(2, 1) == Cyclo(0));
  CHECK(t.value(2, 3) == Cyclo(-1));
  CHECK(t.value(1, 1) == Cyclo(-1));
}

TEST_CASE("klein character table") {
  FiniteGroup k = klein_group();
  CharTable t = char_table(k);
  check_table(k, t);
  for (int i = 0; i < 4; ++i) {
    CHECK(t.degree(i) == 1);
    for (int x = 0; x < 4; ++x) CHECK((t.value(i, x) == Cyclo(1) || t.value(i, x) == Cyclo(-1)));
  }
}

TEST_CASE("tables of assorted groups") {
  for (const char* spec : {"dihedral:4", "dihedral:5", "dihedral:6", "sym:4", "product:(sym:3,cyclic:2)",
                           "product:(cyclic:4,cyclic:2)"}) {
    CAPTURE(spec);
    FiniteGroup g = parse_group(spec);
    check_table(g, char_table(g));
  }
}

TEST_CASE("irreps are homomorphisms with the right characters") {
  for (const char* spec : {"cyclic:4", "klein", "sym:3", "dihedral:4", "dihedral:5", "product:(sym:3,cyclic:2)", "sym:4"}) {
    CAPTURE(spec);
    FiniteGroup g = parse_group(spec);
    CharTable t = char_table(g);
    auto reps = irreps(g, t);
    REQUIRE(static_cast<int>(reps.size()) == t.size());
    for (int i = 0; i < t.size(); ++i) {
      CHECK(reps[i].dim == t.degree(i));
      CHECK(is_homomorphism(g, reps[i]));
      auto chi = character_of(reps[i]);
      for (int x = 0; x < g.order(); ++x) CHECK(chi[x] == t.value(i, x));
    }
    // regular representation: multiplicity of chi_i equals its degree
    for (int i = 0; i < t.size(); ++i) {
      Cyclo acc = Cyclo(g.order()) * conj(t.value(i, g.identity()));
      CHECK(acc / Cyclo(g.order()) == Cyclo(t.degree(i)));
    }
  }
}

TEST_CASE("abelian irreps equal characters") {
  FiniteGroup g = cyclic_group(6);
  CharTable t = char_table(g);
  auto reps = irreps(g, t);
  for (int i = 0; i < t.size(); ++i)
    for (int x = 0; x < 6; ++x) {
      REQUIRE(reps[i].dim == 1);
      CHECK(reps[i](x)(0, 0) == t.value(i, x));
    }
}

TEST_CASE("pullback") {
  auto c3 = std::make_shared<const FiniteGroup>(cyclic_group(3));
  CharTable t = char_table(*c3);
  auto reps = irreps(*c3, t);
  Automorphism inv = parse_automorphism(c3, "inv");
  Irrep pulled = pullback(reps[1], inv.images());
  CHECK(pulled.dim == 1);
  for (int x = 0; x < 3; ++x) CHECK(pulled(x) == reps[2](x));
  std::vector<int> id{0, 1, 2};
  for (int x = 0; x < 3; ++x) CHECK(pullback(reps[1], id)(x) == reps[1](x));
  CHECK_THROWS(pullback(reps[1], std::vector<int>{0, 1}));
}

TEST_CASE("csv export") {
  CharTable t = char_table(symmetric_group(3));
  std::string csv = char_table_csv(t);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 4);
  CHECK(csv.find("chi2,2,0,-1") != std::string::npos);
}
