#include <doctest.h>

#include "crossed_s/axioms.hpp"
#include "crossed_s/crossed.hpp"

using namespace crossed_s;

TEST_CASE("category axiom report") {
  for (auto [g, f] : {std::pair{"cyclic:2", "id"}, {"cyclic:3", "inv"}}) {
    CAPTURE(g);
    const Report r = verify_category_axioms(CrossedSetting::parse(g, f).category());
    for (const Check& c : r.checks) {
      CAPTURE(c.name);
      CAPTURE(c.detail);
      CHECK(c.passed);
    }
    CHECK(r.checks.size() == 10);
  }
  // the reduced hexagon sweep runs fewer identities
  const CatPtr cat = CrossedSetting::parse("cyclic:3", "inv").category();
  CHECK(verify_category_axioms(cat, false).find("hexagon_first")->detail !=
        verify_category_axioms(cat, true).find("hexagon_first")->detail);
}
