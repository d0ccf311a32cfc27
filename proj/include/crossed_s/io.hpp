#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "crossed_s/shintani.hpp"

namespace crossed_s {

using Json = nlohmann::json;

/// Exact values are canonical Cyclo strings. Matrix, vector and scalar fields
/// `X` have a sibling `X_approx` with [re, im] pairs for reading only; parsers
/// ignore it and re-derive it on output.
Json cyclo_json(const Cyclo& x);
Cyclo cyclo_from_json(const Json& j);  // throws ParseError
Json matrix_json(const CMat& m);
CMat matrix_from_json(const Json& j);  // throws ParseError
Json vector_json(const std::vector<Cyclo>& v);
std::vector<Cyclo> vector_from_json(const Json& j);

struct SettingInfo {
  std::string group, aut;
  int modulus = 1;
};

struct ModularDoc {
  SettingInfo setting;
  std::string which;  // "base" = Z(Vec_Gamma), "big" = Z(Vec_Gamma~)
  ModularData data;
};

struct CrossedDoc {
  SettingInfo setting;
  CrossedSMatrix m;
  std::vector<std::string> row_labels, col_labels;
  std::vector<Cyclo> psi_leading;  // per row
};

struct KAlgebraDoc {
  SettingInfo setting;
  std::string which;  // "K(C,F)" or "K(D,F)"
  FrobeniusAlgebra k;
  std::vector<std::string> labels;
  std::optional<CharacterData> characters;  // only for K(C,F)
};

struct ShintaniDoc {
  SettingInfo setting;
  ShintaniMatrix sh;  // eta is not serialized
  ShintaniBasis basis;
  long m0 = 1;
  std::vector<std::string> row_labels, col_labels;
};

SettingInfo setting_info(const CrossedSetting& s, std::string group, std::string aut);
ModularDoc make_modular_doc(const CrossedSetting& s, const SettingInfo& info, bool big);
CrossedDoc make_crossed_doc(const CrossedSetting& s, const SettingInfo& info, long a);
KAlgebraDoc make_kalgebra_doc(const CrossedSetting& s, const SettingInfo& info, bool all_sectors);
ShintaniDoc make_shintani_doc(const CrossedSetting& s, const SettingInfo& info, long m);

Json to_json(const ModularDoc& d);
Json to_json(const CrossedDoc& d);
Json to_json(const KAlgebraDoc& d);
Json to_json(const ShintaniDoc& d);
Json to_json(const Report& r);
Json to_json(const std::vector<Report>& rs);

ModularDoc modular_doc_from_json(const Json& j);
CrossedDoc crossed_doc_from_json(const Json& j);
KAlgebraDoc kalgebra_doc_from_json(const Json& j);
ShintaniDoc shintani_doc_from_json(const Json& j);
Report report_from_json(const Json& j);

/// Parses text as JSON and dispatches on the "kind" field, then serializes
/// again. Throws ParseError on malformed input.
Json reparse(const std::string& text);

/// Every exact matrix or vector field as a CSV section headed "# field".
std::string to_csv(const Json& doc);
/// Aligned plain-text tables of the same fields.
std::string to_pretty(const Json& doc);

/// dump(2) plus a trailing newline.
std::string dump(const Json& j);

}  // namespace crossed_s
