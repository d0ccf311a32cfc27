#include <doctest.h>

#include "crossed_s/modular.hpp"

using namespace crossed_s;

TEST_CASE("trivial double") {
  ModularData d = modular_data_of_double(parse_group("trivial"));
  REQUIRE(d.size() == 1);
  CHECK(d.S(0, 0) == Cyclo(1));
  CHECK(d.T[0] == Cyclo(1));
  CHECK(d.gauss_plus == Cyclo(1));
  CHECK(verify_modular(d).ok());
}

TEST_CASE("Z/2 double") {
  ModularData d = modular_data_of_double(cyclic_group(2));
  REQUIRE(d.size() == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK((d.S(i, j) == Cyclo(1) || d.S(i, j) == Cyclo(-1)));
  CHECK(mul(d.S, adjoint(d.S)) == CMat(CMat::Identity(4, 4) * Cyclo(4)));
  CHECK(d.gauss_plus * d.gauss_minus == Cyclo(4));
  // fusion is the group ring of Z/2 x Z/2: labels (x, chi) -> x + 2 chi
  FusionTable n = verlinde_fusion(d);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      for (int k = 0; k < 4; ++k) CHECK(n[i][j][k] == Cyclo((i ^ j) == k ? 1 : 0));
  CHECK(verify_modular(d).ok());
}

TEST_CASE("Z/3 double matches the abelian closed form") {
  ModularData d = modular_data_of_double(cyclic_group(3));
  REQUIRE(d.size() == 9);
  CHECK(d.global_dim == Cyclo(9));
  // simple index = 3 a + chi with chi(b) = z3^(chi b)
  for (int i = 0; i < 9; ++i) {
    CHECK(d.T[i] == Cyclo::root(3, (i / 3) * (i % 3)));
    for (int j = 0; j < 9; ++j) {
      const long e = (i % 3) * (j / 3) + (j % 3) * (i / 3);
      CHECK(d.S(i, j) == Cyclo::root(3, e));
    }
  }
  Report r = verify_modular(d);
  CHECK(r.ok());
  // Z/3 is not self-dual: the relation only holds for conj(S)
  CHECK(r.find("modular_relation")->passed);
  CHECK_FALSE(r.find("modular_relation_literal")->passed);
}

TEST_CASE("S3 double") {
  ModularData d = modular_data_of_double(symmetric_group(3));
  CHECK(d.size() == 8);
  CHECK(d.global_dim == Cyclo(36));
  Report r = verify_modular(d);
  for (const Check& c : r.checks) {
    CAPTURE(c.name);
    CAPTURE(c.detail);
    CHECK(c.passed);
  }
  FusionTable n = verlinde_fusion(d);
  for (int i = 0; i < d.size(); ++i)
    for (int k = 0; k < d.size(); ++k) CHECK(n[i][0][k] == Cyclo(i == k ? 1 : 0));
}

TEST_CASE("extended doubles and negative controls") {
  auto c4 = std::make_shared<const FiniteGroup>(cyclic_group(4));
  ExtendedGroup e(parse_automorphism(c4, "inv"));
  ModularData d = modular_data_of_double(e);
  CHECK(d.global_dim == Cyclo(64));
  CHECK(verify_modular(d).ok());

  ModularData bad = d;
  bad.S(2, 3) = bad.S(2, 3) + Cyclo(1);
  Report r = verify_modular(bad);
  CHECK_FALSE(r.ok());
  CHECK_FALSE(r.find("unitarity")->passed);
  CHECK(r.find("unitarity")->detail.find("(2,2)") != std::string::npos);

  ModularData ragged = d;
  ragged.T.pop_back();
  Report r2 = verify_modular(ragged);
  CHECK_FALSE(r2.find("shape")->passed);
}
