#include <doctest.h>

#include <algorithm>
#include <memory>

#include "crossed_s/groups.hpp"

using namespace crossed_s;

namespace {

GroupPtr share(FiniteGroup g) { return std::make_shared<const FiniteGroup>(std::move(g)); }

std::vector<std::size_t> class_sizes(const FiniteGroup& g) {
  std::vector<std::size_t> out;
  for (const auto& c : g.classes()) out.push_back(c.size());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("builders") {
  FiniteGroup c3 = parse_group("cyclic:3");
  CHECK(c3.order() == 3);
  CHECK(c3.is_abelian());
  FiniteGroup s3 = parse_group("sym:3");
  CHECK(s3.order() == 6);
  CHECK(s3.classes().size() == 3);
  CHECK(class_sizes(s3) == std::vector<std::size_t>{1, 2, 3});
  FiniteGroup k = parse_group("klein");
  CHECK(k.order() == 4);
  CHECK(k.exponent() == 2);
  CHECK(parse_group("dihedral:4").order() == 8);
  CHECK(parse_group("sym:4").classes().size() == 5);
  FiniteGroup p = parse_group("product:(cyclic:2,product:(cyclic:2,cyclic:3))");
  CHECK(p.order() == 12);
  CHECK(p.is_abelian());
  CHECK(find_isomorphism(parse_group("product:(cyclic:2,cyclic:2)"), k).has_value());
  CHECK_FALSE(find_isomorphism(parse_group("cyclic:4"), k).has_value());
}

TEST_CASE("malformed specs") {
  CHECK_THROWS_AS(parse_group("cyclic"), ParseError);
  CHECK_THROWS_AS(parse_group("cyclic:x"), ParseError);
  CHECK_THROWS_AS(parse_group("sym:6"), ParseError);
  CHECK_THROWS_AS(parse_group("product:(cyclic:2)"), ParseError);
  CHECK_THROWS_AS(parse_group("foo:3"), ParseError);
  auto s3 = share(parse_group("sym:3"));
  CHECK_THROWS_AS(parse_automorphism(s3, "inv"), ParseError);
  CHECK_THROWS_AS(parse_automorphism(s3, "images:[0,1,2]"), ParseError);
  CHECK_THROWS_AS(parse_automorphism(s3, "images:[0,2,1,3,4,5]"), ParseError);
  CHECK_THROWS_AS(parse_automorphism(s3, "inner:g9"), ParseError);
}

TEST_CASE("centralizers and classes") {
  FiniteGroup s3 = symmetric_group(3);
  // element 1 = [0,2,1] is a transposition
  CHECK(s3.element_order(1) == 2);
  CHECK(s3.centralizer(1).size() == 2);
  for (int x = 0; x < s3.order(); ++x)
    CHECK(s3.classes()[s3.class_of(x)].size() * s3.centralizer(x).size() == 6u);
  FiniteGroup c5 = cyclic_group(5);
  for (const auto& c : c5.classes()) CHECK(c.size() == 1u);
}

TEST_CASE("twisted classes") {
  auto c3 = share(cyclic_group(3));
  Automorphism inv = parse_automorphism(c3, "inv");
  CHECK(inv.order() == 2);
  auto orbits = twisted_classes(inv, 1);
  REQUIRE(orbits.size() == 1);
  CHECK(orbits[0].elements.size() == 3);
  CHECK(orbits[0].stabilizer.size() == 1);
  CHECK(twisted_classes(inv, 0).size() == 3);

  auto k = share(klein_group());
  Automorphism swap = parse_automorphism(k, "images:[0,2,1,3]");
  auto ko = twisted_classes(swap, 1);
  REQUIRE(ko.size() == 2);
  for (const auto& o : ko) {
    CHECK(o.elements.size() == 2);
    CHECK(o.stabilizer.size() == 2);
  }

  // sector periodicity and orbit-stabilizer on every sector
  for (auto [g, spec] : {std::pair{share(symmetric_group(3)), "inner:g1"},
                         std::pair{share(cyclic_group(4)), "inv"},
                         std::pair{share(klein_group()), "images:[0,2,1,3]"}}) {
    Automorphism f = parse_automorphism(g, spec);
    for (int a = 0; a < f.order(); ++a) {
      auto lhs = twisted_classes(f, a);
      auto rhs = twisted_classes(f, a + f.order());
      REQUIRE(lhs.size() == rhs.size());
      for (std::size_t i = 0; i < lhs.size(); ++i) {
        CHECK(lhs[i].elements == rhs[i].elements);
        CHECK(static_cast<int>(lhs[i].elements.size() * lhs[i].stabilizer.size()) == g->order());
        CHECK(lhs[i].rep == lhs[i].elements.front());
      }
    }
  }
}

TEST_CASE("semidirect extension") {
  auto c3 = share(cyclic_group(3));
  ExtendedGroup e(parse_automorphism(c3, "inv"));
  CHECK(e.group().order() == 6);
  CHECK(find_isomorphism(e.group(), symmetric_group(3)).has_value());

  ExtendedGroup trivial(parse_automorphism(c3, "id"));
  CHECK(trivial.modulus() == 1);
  CHECK(trivial.group().table() == c3->table());

  auto k = share(klein_group());
  ExtendedGroup d(parse_automorphism(k, "images:[0,2,1,3]"));
  CHECK(d.group().order() == 8);
  CHECK(find_isomorphism(d.group(), dihedral_group(4)).has_value());
  CHECK_FALSE(d.group().is_abelian());

  for (const ExtendedGroup* x : {&e, &d}) {
    const FiniteGroup& t = x->group();
    for (int s = 0; s < x->base().order(); ++s) {
      CHECK(t.conjugate(x->h(), x->embed(s)) == x->embed(x->automorphism()(s)));
      // Gamma is normal in Gamma~
      for (int y = 0; y < t.order(); ++y) CHECK(x->sector(t.conjugate(y, x->embed(s))) == 0);
    }
    for (int a = 0; a < t.order(); ++a)
      for (int b = 0; b < t.order(); ++b)
        CHECK(x->sector(t.mul(a, b)) == (x->sector(a) + x->sector(b)) % x->modulus());
  }
}
