#include <doctest.h>

#include "crossed_s/crossed.hpp"

using namespace crossed_s;

namespace {

struct Example {
  const char* group;
  const char* aut;
};

const Example kDesk[] = {
    {"cyclic:3", "inv"}, {"klein", "images:[0,2,1,3]"}, {"cyclic:4", "inv"}, {"sym:3", "inner:g1"}};

void require_ok(const Report& r) {
  for (const Check& c : r.checks) {
    CAPTURE(r.title);
    CAPTURE(c.name);
    CAPTURE(c.detail);
    if (c.gating) CHECK(c.passed);
  }
}

}  // namespace

TEST_CASE("Z/3 with inversion: pinpoint values") {
  CrossedSetting s = CrossedSetting::parse("cyclic:3", "inv");
  REQUIRE(s.modulus() == 2);
  const CrossedSMatrix& m = s.crossed(0);
  REQUIRE(m.rows.size() == 1);
  CHECK(m.rows[0] == 0);
  REQUIRE(m.cols.size() == 1);
  CHECK(module_dim(s.category()->simple(m.cols[0])) == Cyclo(3));
  CHECK(m.S(0, 0) == Cyclo(3));

  FrobeniusAlgebra k = k_algebra(s, false);
  REQUIRE(k.size() == 1);
  CHECK(k.lambda[0] == Cyclo(1));
  CHECK(k.a[0][0][0] == Cyclo(1));
}

TEST_CASE("klein with a swap: sector-0 rows have norm 16") {
  CrossedSetting s = CrossedSetting::parse("klein", "images:[0,2,1,3]");
  const CrossedSMatrix& m = s.crossed(0);
  REQUIRE(m.S.rows() == 4);
  REQUIRE(m.S.cols() == 4);
  for (int i = 0; i < 4; ++i) {
    Cyclo norm;
    for (int j = 0; j < 4; ++j) norm += m.S(i, j) * conj(m.S(i, j));
    CHECK(norm == Cyclo(16));
  }
}

TEST_CASE("psi normalization") {
  for (const Example& e : kDesk) {
    CAPTURE(e.group);
    CrossedSetting s = CrossedSetting::parse(e.group, e.aut);
    const int n = s.modulus();
    for (int a = 0; a < n; ++a) {
      const EquivChoice& c = s.choice(a);
      for (std::size_t i = 0; i < c.labels.size(); ++i) {
        const EqObject& l = s.category()->simple(c.labels[i]);
        CHECK(c.psi[i].is_equivariant());
        CHECK(psi_power(c.psi[i], n) == identity(l));
        CHECK(argument(c.leading[i]) < 2 * 3.14159265358979 / n + 1e-9);
        CHECK(argument_window(c.psi[i], n) == c.psi[i]);
      }
    }
    CHECK(s.psi(0) == identity(s.category()->unit()));
  }
}

TEST_CASE("argument window picks one representative per orbit") {
  CrossedSetting s = CrossedSetting::parse("cyclic:4", "inv");
  const EqMorphism& psi = s.psi(0);
  for (long k = 0; k < 2; ++k) CHECK(argument_window(psi * Cyclo::root(2, k), 2) == psi);
}

TEST_CASE("crossed S-matrices pass every check on desk examples") {
  for (const Example& e : kDesk) {
    CAPTURE(e.group);
    CrossedSetting s = CrossedSetting::parse(e.group, e.aut);
    for (int a = 0; a < s.modulus(); ++a) require_ok(verify_crossed(s, a, s.crossed(a)));
  }
}

TEST_CASE("an order-3 automorphism") {
  CrossedSetting s = CrossedSetting::parse("klein", "images:[0,2,3,1]");
  REQUIRE(s.modulus() == 3);
  for (int a = 0; a < 3; ++a) require_ok(verify_crossed(s, a, s.crossed(a)));
  FrobeniusAlgebra k = k_algebra(s, true);
  CHECK(k.size() == 3);
  require_ok(verify_kalgebra(k, 3));
}

TEST_CASE("lifts land on simples of the big double") {
  CrossedSetting s = CrossedSetting::parse("sym:3", "inner:g1");
  const CatPtr& big = s.big();
  for (int a = 0; a < s.modulus(); ++a)
    for (int l : s.choice(a).labels) {
      const EqObject lift = lift_to_double(big, s.category()->simple(l), s.psi(l));
      CHECK(lift.is_valid());
      CHECK(restrict_to(s.category(), lift) == s.category()->simple(l));
      CHECK(identify_simple(lift) == s.big_index(l));
    }
}

TEST_CASE("F = id reproduces the ordinary double") {
  for (const char* g : {"cyclic:2", "cyclic:3", "klein", "sym:3"}) {
    CAPTURE(g);
    CrossedSetting s = CrossedSetting::parse(g, "id");
    const ModularData d = modular_data_of_double(parse_group(g));
    const CrossedSMatrix& m = s.crossed(0);
    REQUIRE(m.S.rows() == d.size());
    CHECK(m.S == d.S);
    for (int l : m.rows) CHECK(s.psi(l) == identity(s.category()->simple(l)));

    FrobeniusAlgebra k = k_algebra(s, false);
    const FusionTable n = verlinde_fusion(d);
    REQUIRE(k.size() == d.size());
    for (int i = 0; i < k.size(); ++i)
      for (int j = 0; j < k.size(); ++j)
        for (int l = 0; l < k.size(); ++l) {
          CHECK(k.a[i][j][l] == n[i][j][l]);
          CHECK(k.a[i][j][l].is_rational());
          CHECK(sgn(k.a[i][j][l].to_rational()) >= 0);
        }
  }
}

TEST_CASE("K-algebra and characters on desk examples") {
  for (const Example& e : kDesk) {
    CAPTURE(e.group);
    CrossedSetting s = CrossedSetting::parse(e.group, e.aut);
    FrobeniusAlgebra kc = k_algebra(s, false);
    require_ok(verify_kalgebra(kc, s.modulus()));
    FrobeniusAlgebra kd = k_algebra(s, true);
    require_ok(verify_kalgebra(kd, s.modulus()));
    CHECK(kd.size() >= kc.size());

    const CharacterData c = characters_and_idempotents(kc, s.crossed(0), s.dim_c());
    require_ok(verify_characters(kc, s.crossed(0), c, s.dim_c()));
  }
}

TEST_CASE("star is conjugate-linear") {
  CrossedSetting s = CrossedSetting::parse("cyclic:4", "inv");
  FrobeniusAlgebra k = k_algebra(s, true);
  const Cyclo z = Cyclo::root(4, 1);
  for (int i = 0; i < k.size(); ++i) CHECK(k.star(k.basis_vector(i) * z) == k.star(k.basis_vector(i)) * conj(z));
}

TEST_CASE("negative controls") {
  CrossedSetting s = CrossedSetting::parse("klein", "images:[0,2,1,3]");
  CrossedSMatrix m = s.crossed(0);
  m.S(1, 2) += Cyclo(1);
  const Report r = verify_crossed(s, 0, m);
  CHECK_FALSE(r.ok());
  REQUIRE(r.find("unitarity"));
  CHECK_FALSE(r.find("unitarity")->passed);
  REQUIRE(r.find("submatrix"));
  CHECK_FALSE(r.find("submatrix")->passed);
  CHECK(r.find("submatrix")->detail.find("(1,2)") != std::string::npos);

  FrobeniusAlgebra k = k_algebra(s, false);
  k.a[1][2][3] += Cyclo(1);
  const CharacterData c = characters_and_idempotents(k, s.crossed(0), s.dim_c());
  const Report rc = verify_characters(k, s.crossed(0), c, s.dim_c());
  REQUIRE(rc.find("verlinde_analogue"));
  CHECK_FALSE(rc.find("verlinde_analogue")->passed);
  CHECK(rc.find("verlinde_analogue")->detail.find("a[1][2][3]") != std::string::npos);
  const Report rk = verify_kalgebra(k, s.modulus());
  REQUIRE(rk.find("commutative"));
  CHECK_FALSE(rk.find("commutative")->passed);
}
