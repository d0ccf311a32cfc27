#include <doctest.h>

#include "crossed_s/io.hpp"

using namespace crossed_s;

namespace {

const CrossedSetting& klein() {
  static const CrossedSetting s = CrossedSetting::parse("klein", "images:[0,2,1,3]");
  return s;
}

SettingInfo klein_info() { return setting_info(klein(), "klein", "images:[0,2,1,3]"); }

}  // namespace

TEST_CASE("cyclotomic values round-trip through JSON") {
  for (const Cyclo& x : {Cyclo(0), Cyclo(-7), Cyclo::root(3, 1), Cyclo::root(12, 5) * Cyclo(Rational(2, 3))}) {
    CHECK(cyclo_from_json(cyclo_json(x)) == x);
  }
  CHECK_THROWS_AS(cyclo_from_json(Json(3)), ParseError);
  CHECK_THROWS_AS(cyclo_from_json(Json("z3 +")), ParseError);
  CHECK_THROWS_AS(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), ParseError);
}

TEST_CASE("every artifact kind round-trips byte for byte") {
  const CrossedSetting& s = klein();
  const SettingInfo info = klein_info();
  std::vector<Json> docs{to_json(make_modular_doc(s, info, false)), to_json(make_modular_doc(s, info, true)),
                         to_json(make_crossed_doc(s, info, 0)),     to_json(make_crossed_doc(s, info, 1)),
                         to_json(make_kalgebra_doc(s, info, false)), to_json(make_kalgebra_doc(s, info, true)),
                         to_json(make_shintani_doc(s, info, 3)),    to_json(verify_crossed(s, 0, s.crossed(0))),
                         to_json(std::vector<Report>{verify_kalgebra(k_algebra(s, false), 2)})};
  for (const Json& d : docs) {
    CAPTURE(d.at("kind").get<std::string>());
    const std::string text = dump(d);
    CHECK(dump(reparse(text)) == text);
  }
}

TEST_CASE("parsed documents carry the exact data") {
  const CrossedSetting& s = klein();
  const CrossedDoc d = crossed_doc_from_json(to_json(make_crossed_doc(s, klein_info(), 0)));
  CHECK(d.m.S == s.crossed(0).S);
  CHECK(d.m.rows == s.crossed(0).rows);
  CHECK(d.row_labels.size() == 4);

  const Json j = to_json(make_crossed_doc(s, klein_info(), 0));
  CHECK(matrix_from_json(j.at("S_conj")) == conj(s.crossed(0).S));
  CHECK(j.at("S_approx").at(0).at(0).at(0).get<double>() == doctest::Approx(d.m.S(0, 0).embed().real()));

  const Report r = report_from_json(to_json(verify_crossed(s, 0, s.crossed(0))));
  CHECK(r.ok());
  CHECK(r.find("unitarity"));
}

TEST_CASE("malformed documents are parse errors") {
  CHECK_THROWS_AS(reparse("{"), ParseError);
  CHECK_THROWS_AS(reparse(R"({"kind": "nothing"})"), ParseError);
  CHECK_THROWS_AS(reparse(R"({"kind": "crossed"})"), ParseError);
  Json j = to_json(make_crossed_doc(klein(), klein_info(), 0));
  j["S"][0][0] = "not a number";
  CHECK_THROWS_AS(reparse(j.dump()), ParseError);
  j = to_json(make_crossed_doc(klein(), klein_info(), 0));
  j["rows"] = Json::array({0});
  CHECK_THROWS_AS(reparse(j.dump()), ParseError);
}

TEST_CASE("CSV and pretty exports") {
  const Json j = to_json(make_crossed_doc(klein(), klein_info(), 0));
  const std::string csv = to_csv(j);
  CHECK(csv.find("# S\n") != std::string::npos);
  CHECK(csv.find("# S_conj\n") != std::string::npos);
  CHECK(csv.find("_approx") == std::string::npos);
  const std::string pretty = to_pretty(j);
  CHECK(pretty.find("group klein") != std::string::npos);

  const std::string k = to_csv(to_json(make_kalgebra_doc(klein(), klein_info(), false)));
  CHECK(k.find("# structure_constants\ni,j,k,value\n") != std::string::npos);
  CHECK(k.find("# characters.chi\n") != std::string::npos);

  const std::string r = to_csv(to_json(std::vector<Report>{verify_crossed(klein(), 0, klein().crossed(0))}));
  CHECK(r.find("crossed_a0,unitarity,true,true,") != std::string::npos);
}

TEST_CASE("serialization is deterministic") {
  const CrossedSetting a = CrossedSetting::parse("cyclic:4", "inv");
  const CrossedSetting b = CrossedSetting::parse("cyclic:4", "inv");
  const SettingInfo ia = setting_info(a, "cyclic:4", "inv"), ib = setting_info(b, "cyclic:4", "inv");
  CHECK(dump(to_json(make_crossed_doc(a, ia, 1))) == dump(to_json(make_crossed_doc(b, ib, 1))));
  CHECK(dump(to_json(make_shintani_doc(a, ia, 1))) == dump(to_json(make_shintani_doc(b, ib, 1))));
}
