#include "crossed_s/io.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace crossed_s {

namespace {

double snap(double x) {
  const double r = std::round(x * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

Json approx(const Cyclo& x) {
  const std::complex<double> z = x.embed();
  return Json::array({snap(z.real()), snap(z.imag())});
}

void put_matrix(Json& j, const std::string& key, const CMat& m) {
  j[key] = matrix_json(m);
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(approx(m(r, c)));
    a.push_back(std::move(row));
  }
  j[key + "_approx"] = std::move(a);
}

void put_vector(Json& j, const std::string& key, const std::vector<Cyclo>& v) {
  j[key] = vector_json(v);
  Json a = Json::array();
  for (const Cyclo& x : v) a.push_back(approx(x));
  j[key + "_approx"] = std::move(a);
}

void put_scalar(Json& j, const std::string& key, const Cyclo& x) {
  j[key] = cyclo_json(x);
  j[key + "_approx"] = approx(x);
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <class T>
T get(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("field '") + key + "': " + e.what());
  }
}

void expect_kind(const Json& j, const char* kind) {
  const std::string k = get<std::string>(j, "kind");
  if (k != kind) throw ParseError("expected kind '" + std::string(kind) + "', found '" + k + "'");
}

Json setting_json(const SettingInfo& s) { return Json{{"group", s.group}, {"aut", s.aut}, {"modulus", s.modulus}}; }

SettingInfo setting_from_json(const Json& j) {
  const Json& s = field(j, "setting");
  return {get<std::string>(s, "group"), get<std::string>(s, "aut"), get<int>(s, "modulus")};
}

std::vector<std::string> labels_of(const CrossedSetting& s, const std::vector<int>& idx) {
  std::vector<std::string> out;
  for (int i : idx) out.push_back(label_string(s.category()->simples().at(i)));
  return out;
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

bool is_string_matrix(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const Json& row : v) {
    if (!row.is_array()) return false;
    for (const Json& x : row)
      if (!x.is_string()) return false;
  }
  return true;
}

bool is_string_vector(const Json& v) {
  if (!v.is_array() || v.empty()) return false;
  for (const Json& x : v)
    if (!x.is_string()) return false;
  return true;
}

bool is_approx_key(const std::string& k) { return k.size() > 7 && k.compare(k.size() - 7, 7, "_approx") == 0; }

using Table = std::vector<std::vector<std::string>>;

// (name, rows) for every exact matrix/vector field, in key order.
std::vector<std::pair<std::string, Table>> tables_of(const Json& doc) {
  std::vector<std::pair<std::string, Table>> out;
  const std::string kind = doc.value("kind", "");
  if (kind == "report" || kind == "report_set") {
    Table t{{"report", "check", "passed", "gating", "detail"}};
    auto add = [&](const Json& r) {
      for (const Json& c : r.at("checks"))
        t.push_back({r.at("title").get<std::string>(), c.at("name").get<std::string>(), c.at("passed").get<bool>() ? "true" : "false",
                     c.at("gating").get<bool>() ? "true" : "false", c.at("detail").get<std::string>()});
    };
    if (kind == "report") add(doc);
    else
      for (const Json& r : doc.at("reports")) add(r);
    out.emplace_back("checks", std::move(t));
    return out;
  }
  std::function<void(const std::string&, const Json&)> walk = [&](const std::string& prefix, const Json& j) {
    for (auto it = j.begin(); it != j.end(); ++it) {
      const std::string key = prefix.empty() ? it.key() : prefix + "." + it.key();
      if (is_approx_key(it.key())) continue;
      const Json& v = it.value();
      if (v.is_object()) {
        walk(key, v);
      } else if (it.key() == "structure_constants") {
        Table t{{"i", "j", "k", "value"}};
        for (std::size_t i = 0; i < v.size(); ++i)
          for (std::size_t jj = 0; jj < v[i].size(); ++jj)
            for (std::size_t k = 0; k < v[i][jj].size(); ++k)
              if (v[i][jj][k].get<std::string>() != "0")
                t.push_back({std::to_string(i), std::to_string(jj), std::to_string(k), v[i][jj][k].get<std::string>()});
        out.emplace_back(key, std::move(t));
      } else if (is_string_matrix(v)) {
        Table t;
        for (const Json& row : v) {
          std::vector<std::string> r;
          for (const Json& x : row) r.push_back(x.get<std::string>());
          t.push_back(std::move(r));
        }
        out.emplace_back(key, std::move(t));
      } else if (is_string_vector(v)) {
        std::vector<std::string> r;
        for (const Json& x : v) r.push_back(x.get<std::string>());
        out.emplace_back(key, Table{std::move(r)});
      }
    }
  };
  walk("", doc);
  return out;
}

}  // namespace

Json cyclo_json(const Cyclo& x) { return x.str(); }

Cyclo cyclo_from_json(const Json& j) {
  if (!j.is_string()) throw ParseError("expected a cyclotomic string, found " + j.dump());
  try {
    return Cyclo::parse(j.get<std::string>());
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError("bad cyclotomic '" + j.get<std::string>() + "': " + e.what());
  }
}

Json matrix_json(const CMat& m) {
  Json a = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(cyclo_json(m(r, c)));
    a.push_back(std::move(row));
  }
  return a;
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a matrix");
  const Eigen::Index rows = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = rows == 0 ? 0 : static_cast<Eigen::Index>(j.at(0).size());
  CMat m(rows, cols);
  for (Eigen::Index r = 0; r < rows; ++r) {
    const Json& row = j.at(r);
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw ParseError("ragged matrix");
    for (Eigen::Index c = 0; c < cols; ++c) m(r, c) = cyclo_from_json(row.at(c));
  }
  return m;
}

Json vector_json(const std::vector<Cyclo>& v) {
  Json a = Json::array();
  for (const Cyclo& x : v) a.push_back(cyclo_json(x));
  return a;
}

std::vector<Cyclo> vector_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("expected a vector");
  std::vector<Cyclo> out;
  for (const Json& x : j) out.push_back(cyclo_from_json(x));
  return out;
}

// ---------------------------------------------------------------- builders

SettingInfo setting_info(const CrossedSetting& s, std::string group, std::string aut) {
  return {std::move(group), std::move(aut), s.modulus()};
}

ModularDoc make_modular_doc(const CrossedSetting& s, const SettingInfo& info, bool big) {
  return {info, big ? "big" : "base", big ? s.big_data() : s.base_data()};
}

CrossedDoc make_crossed_doc(const CrossedSetting& s, const SettingInfo& info, long a) {
  CrossedDoc d{info, s.crossed(a), {}, {}, {}};
  d.row_labels = labels_of(s, d.m.rows);
  d.col_labels = labels_of(s, d.m.cols);
  d.psi_leading = s.choice(a).leading;
  return d;
}

KAlgebraDoc make_kalgebra_doc(const CrossedSetting& s, const SettingInfo& info, bool all_sectors) {
  KAlgebraDoc d{info, all_sectors ? "K(D,F)" : "K(C,F)", k_algebra(s, all_sectors), {}, std::nullopt};
  d.labels = labels_of(s, d.k.basis);
  if (!all_sectors) d.characters = characters_and_idempotents(d.k, s.crossed(0), s.dim_c());
  return d;
}

ShintaniDoc make_shintani_doc(const CrossedSetting& s, const SettingInfo& info, long m) {
  const FrobeniusAlgebra k = k_algebra(s, false);
  const CharacterData c = characters_and_idempotents(k, s.crossed(0), s.dim_c());
  ShintaniDoc d{info, shintani_matrix(s, m), {}, m_zero(s), {}, {}};
  d.basis = shintani_descent(d.sh, k, c);
  d.sh.eta.clear();
  d.row_labels = labels_of(s, d.sh.rows);
  d.col_labels = labels_of(s, d.sh.cols);
  return d;
}

// ---------------------------------------------------------------- to_json

Json to_json(const ModularDoc& d) {
  Json j{{"kind", "modular"}, {"setting", setting_json(d.setting)}, {"which", d.which}, {"labels", d.data.labels}};
  put_matrix(j, "S", d.data.S);
  put_vector(j, "T", d.data.T);
  put_vector(j, "dims", d.data.dims);
  put_scalar(j, "global_dim", d.data.global_dim);
  put_scalar(j, "gauss_plus", d.data.gauss_plus);
  put_scalar(j, "gauss_minus", d.data.gauss_minus);
  return j;
}

Json to_json(const CrossedDoc& d) {
  Json j{{"kind", "crossed"},   {"setting", setting_json(d.setting)}, {"sector", d.m.sector}, {"rows", d.m.rows},
         {"cols", d.m.cols},   {"row_labels", d.row_labels},         {"col_labels", d.col_labels}};
  put_matrix(j, "S", d.m.S);
  put_matrix(j, "S_conj", conj(d.m.S));
  put_vector(j, "psi_leading", d.psi_leading);
  return j;
}

Json to_json(const KAlgebraDoc& d) {
  const FrobeniusAlgebra& k = d.k;
  Json j{{"kind", "kalgebra"}, {"setting", setting_json(d.setting)}, {"which", d.which}, {"basis", k.basis},
         {"labels", d.labels},  {"sectors", k.sectors},               {"unit", k.unit},   {"star_index", k.star_index}};
  Json a = Json::array();
  for (const auto& plane : k.a) {
    Json p = Json::array();
    for (const auto& row : plane) p.push_back(vector_json(row));
    a.push_back(std::move(p));
  }
  j["structure_constants"] = std::move(a);
  put_vector(j, "lambda", k.lambda);
  put_vector(j, "star_scalar", k.star_scalar);
  put_vector(j, "conjugation_scalar", k.conjugation_scalar);
  put_matrix(j, "gram", k.gram());
  if (d.characters) {
    Json c{{"columns", d.characters->columns}};
    put_matrix(c, "chi", d.characters->chi);
    put_matrix(c, "idempotents", d.characters->idempotents);
    j["characters"] = std::move(c);
  }
  return j;
}

Json to_json(const ShintaniDoc& d) {
  Json j{{"kind", "shintani"}, {"setting", setting_json(d.setting)}, {"m", d.sh.m},
         {"sector", d.sh.sector}, {"rows", d.sh.rows},                {"cols", d.sh.cols},
         {"m0", d.m0},            {"row_labels", d.row_labels},       {"col_labels", d.col_labels}};
  put_matrix(j, "Sh", d.sh.Sh);
  put_vector(j, "T", d.sh.t);
  put_vector(j, "T_prime", d.sh.t_prime);
  put_vector(j, "col_dims", d.sh.col_dims);
  Json b = Json::object();
  put_matrix(b, "coords", d.basis.coords);
  put_matrix(b, "idempotent_coords", d.basis.idempotent);
  j["basis"] = std::move(b);
  return j;
}

Json to_json(const Report& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks)
    checks.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"gating", c.gating}, {"detail", c.detail}});
  return Json{{"kind", "report"}, {"title", r.title}, {"ok", r.ok()}, {"checks", std::move(checks)}};
}

Json to_json(const std::vector<Report>& rs) {
  Json a = Json::array();
  bool ok = true;
  for (const Report& r : rs) {
    a.push_back(to_json(r));
    ok = ok && r.ok();
  }
  return Json{{"kind", "report_set"}, {"ok", ok}, {"reports", std::move(a)}};
}

// ---------------------------------------------------------------- from_json

ModularDoc modular_doc_from_json(const Json& j) {
  expect_kind(j, "modular");
  ModularDoc d;
  d.setting = setting_from_json(j);
  d.which = get<std::string>(j, "which");
  d.data.labels = get<std::vector<std::string>>(j, "labels");
  d.data.S = matrix_from_json(field(j, "S"));
  d.data.T = vector_from_json(field(j, "T"));
  d.data.dims = vector_from_json(field(j, "dims"));
  d.data.global_dim = cyclo_from_json(field(j, "global_dim"));
  d.data.gauss_plus = cyclo_from_json(field(j, "gauss_plus"));
  d.data.gauss_minus = cyclo_from_json(field(j, "gauss_minus"));
  return d;
}

CrossedDoc crossed_doc_from_json(const Json& j) {
  expect_kind(j, "crossed");
  CrossedDoc d;
  d.setting = setting_from_json(j);
  d.m.sector = get<int>(j, "sector");
  d.m.rows = get<std::vector<int>>(j, "rows");
  d.m.cols = get<std::vector<int>>(j, "cols");
  d.m.S = matrix_from_json(field(j, "S"));
  d.row_labels = get<std::vector<std::string>>(j, "row_labels");
  d.col_labels = get<std::vector<std::string>>(j, "col_labels");
  d.psi_leading = vector_from_json(field(j, "psi_leading"));
  if (d.m.S.rows() != static_cast<Eigen::Index>(d.m.rows.size()) || d.m.S.cols() != static_cast<Eigen::Index>(d.m.cols.size()))
    throw ParseError("crossed: S does not match rows/cols");
  return d;
}

KAlgebraDoc kalgebra_doc_from_json(const Json& j) {
  expect_kind(j, "kalgebra");
  KAlgebraDoc d;
  d.setting = setting_from_json(j);
  d.which = get<std::string>(j, "which");
  d.k.basis = get<std::vector<int>>(j, "basis");
  d.labels = get<std::vector<std::string>>(j, "labels");
  d.k.sectors = get<std::vector<int>>(j, "sectors");
  d.k.unit = get<int>(j, "unit");
  d.k.star_index = get<std::vector<int>>(j, "star_index");
  const std::size_t n = d.k.basis.size();
  const Json& a = field(j, "structure_constants");
  if (!a.is_array() || a.size() != n) throw ParseError("structure_constants: wrong size");
  for (const Json& plane : a) {
    if (!plane.is_array() || plane.size() != n) throw ParseError("structure_constants: wrong size");
    std::vector<std::vector<Cyclo>> p;
    for (const Json& row : plane) {
      p.push_back(vector_from_json(row));
      if (p.back().size() != n) throw ParseError("structure_constants: wrong size");
    }
    d.k.a.push_back(std::move(p));
  }
  d.k.lambda = vector_from_json(field(j, "lambda"));
  d.k.star_scalar = vector_from_json(field(j, "star_scalar"));
  d.k.conjugation_scalar = vector_from_json(field(j, "conjugation_scalar"));
  if (d.k.lambda.size() != n || d.k.star_scalar.size() != n || d.k.star_index.size() != n)
    throw ParseError("kalgebra: vector sizes disagree with the basis");
  for (int s : d.k.star_index)
    if (s < 0 || static_cast<std::size_t>(s) >= n) throw ParseError("kalgebra: star_index out of range");
  if (j.contains("characters")) {
    const Json& c = j.at("characters");
    CharacterData cd;
    cd.columns = get<std::vector<int>>(c, "columns");
    cd.chi = matrix_from_json(field(c, "chi"));
    cd.idempotents = matrix_from_json(field(c, "idempotents"));
    d.characters = std::move(cd);
  }
  return d;
}

ShintaniDoc shintani_doc_from_json(const Json& j) {
  expect_kind(j, "shintani");
  ShintaniDoc d;
  d.setting = setting_from_json(j);
  d.sh.m = get<long>(j, "m");
  d.sh.sector = get<int>(j, "sector");
  d.sh.rows = get<std::vector<int>>(j, "rows");
  d.sh.cols = get<std::vector<int>>(j, "cols");
  d.m0 = get<long>(j, "m0");
  d.row_labels = get<std::vector<std::string>>(j, "row_labels");
  d.col_labels = get<std::vector<std::string>>(j, "col_labels");
  d.sh.Sh = matrix_from_json(field(j, "Sh"));
  d.sh.t = vector_from_json(field(j, "T"));
  d.sh.t_prime = vector_from_json(field(j, "T_prime"));
  d.sh.col_dims = vector_from_json(field(j, "col_dims"));
  const Json& b = field(j, "basis");
  d.basis.m = d.sh.m;
  d.basis.rows = d.sh.rows;
  d.basis.coords = matrix_from_json(field(b, "coords"));
  d.basis.idempotent = matrix_from_json(field(b, "idempotent_coords"));
  return d;
}

Report report_from_json(const Json& j) {
  expect_kind(j, "report");
  Report r;
  r.title = get<std::string>(j, "title");
  for (const Json& c : field(j, "checks"))
    r.checks.push_back(Check{get<std::string>(c, "name"), get<bool>(c, "passed"), get<std::string>(c, "detail"), get<bool>(c, "gating")});
  return r;
}

Json reparse(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  const std::string kind = get<std::string>(j, "kind");
  if (kind == "modular") return to_json(modular_doc_from_json(j));
  if (kind == "crossed") return to_json(crossed_doc_from_json(j));
  if (kind == "kalgebra") return to_json(kalgebra_doc_from_json(j));
  if (kind == "shintani") return to_json(shintani_doc_from_json(j));
  if (kind == "report") return to_json(report_from_json(j));
  if (kind == "report_set") {
    std::vector<Report> rs;
    for (const Json& r : field(j, "reports")) rs.push_back(report_from_json(r));
    return to_json(rs);
  }
  throw ParseError("unknown kind '" + kind + "'");
}

// ---------------------------------------------------------------- text export

std::string to_csv(const Json& doc) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, table] : tables_of(doc)) {
    if (!first) os << "\n";
    first = false;
    os << "# " << name << "\n";
    for (const auto& row : table) {
      for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << csv_cell(row[c]);
      os << "\n";
    }
  }
  return os.str();
}

std::string to_pretty(const Json& doc) {
  std::ostringstream os;
  if (doc.contains("setting")) {
    const Json& s = doc.at("setting");
    os << doc.value("kind", "") << "  group " << s.value("group", "") << "  aut " << s.value("aut", "") << "  N "
       << s.value("modulus", 1) << "\n";
  }
  for (const auto& [name, table] : tables_of(doc)) {
    os << "\n" << name << "\n";
    std::vector<std::size_t> width;
    for (const auto& row : table)
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (width.size() <= c) width.push_back(0);
        width[c] = std::max(width[c], row[c].size());
      }
    for (const auto& row : table) {
      os << " ";
      for (std::size_t c = 0; c < row.size(); ++c) {
        os << " " << row[c];
        if (c + 1 < row.size()) os << std::string(width[c] - row[c].size(), ' ');
      }
      os << "\n";
    }
  }
  return os.str();
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace crossed_s
