// crossed-s: command-line front end.
//
// Exit codes: 0 ok, 1 verification failure, 2 parse error, 3 computation error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "crossed_s/io.hpp"

namespace fs = std::filesystem;
using namespace crossed_s;

namespace {

enum Exit { kOk = 0, kVerify = 1, kParse = 2, kCompute = 3 };

struct Config {
  std::string group = "cyclic:3";
  std::string aut = "id";
  std::vector<long> sectors;
  std::string m_range;
  std::string out;
  std::string format = "json";
  std::string check = "all";
  std::vector<std::string> inputs;
};

// A named output document.
struct Artifact {
  std::string file;  // e.g. "crossed_a0.json"
  Json doc;
};

std::string render(const Json& doc, const std::string& format) {
  if (format == "csv") return to_csv(doc);
  if (format == "pretty") return to_pretty(doc);
  return dump(doc);
}

std::string extension(const std::string& format) {
  if (format == "csv") return ".csv";
  if (format == "pretty") return ".txt";
  return ".json";
}

std::string stem(const std::string& file) { return fs::path(file).stem().string(); }

fs::path job_dir(const Config& c) { return fs::path(c.out) / (c.group + "__" + c.aut); }

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
}

// JSON always goes to disk under --out; a non-JSON format also writes its rendering.
void emit(const Config& c, const std::vector<Artifact>& arts) {
  if (c.out.empty()) {
    if (c.format == "json") {
      if (arts.size() == 1) {
        std::cout << dump(arts[0].doc);
      } else {
        Json all = Json::object();
        for (const Artifact& a : arts) all[stem(a.file)] = a.doc;
        std::cout << dump(all);
      }
      return;
    }
    for (std::size_t i = 0; i < arts.size(); ++i) {
      if (arts.size() > 1) std::cout << (i ? "\n" : "") << "## " << stem(arts[i].file) << "\n";
      std::cout << render(arts[i].doc, c.format);
    }
    return;
  }
  const fs::path dir = job_dir(c);
  fs::create_directories(dir);
  for (const Artifact& a : arts) {
    write_file(dir / a.file, dump(a.doc));
    if (c.format != "json") write_file(dir / (stem(a.file) + extension(c.format)), render(a.doc, c.format));
    std::cerr << "wrote " << (dir / a.file).string() << "\n";
  }
}

std::vector<long> parse_range(const std::string& text, long default_hi) {
  if (text.empty()) {
    std::vector<long> out;
    for (long m = 1; m <= default_hi; ++m) out.push_back(m);
    return out;
  }
  long lo = 0, hi = 0;
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      lo = hi = std::stol(text, &used);
      if (used != text.size()) throw std::invalid_argument("trailing");
    } else {
      lo = std::stol(text.substr(0, dots), &used);
      if (used != dots) throw std::invalid_argument("trailing");
      const std::string rest = text.substr(dots + 2);
      hi = std::stol(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("trailing");
    }
  } catch (const std::exception&) {
    throw ParseError("--m expects M or LO..HI, got '" + text + "'");
  }
  if (lo < 1 || hi < lo) throw ParseError("--m range must satisfy 1 <= LO <= HI");
  std::vector<long> out;
  for (long m = lo; m <= hi; ++m) out.push_back(m);
  return out;
}

std::vector<long> sectors_of(const Config& c, const CrossedSetting& s) {
  if (!c.sectors.empty()) return c.sectors;
  std::vector<long> out;
  for (long a = 0; a < s.modulus(); ++a) out.push_back(a);
  return out;
}

int cmd_double(const Config& c, const CrossedSetting& s, const SettingInfo& info) {
  emit(c, {{"modular.json", to_json(make_modular_doc(s, info, false))},
           {"modular_big.json", to_json(make_modular_doc(s, info, true))}});
  return kOk;
}

int cmd_crossed(const Config& c, const CrossedSetting& s, const SettingInfo& info) {
  std::vector<Artifact> arts;
  for (long a : sectors_of(c, s))
    arts.push_back({"crossed_a" + std::to_string(s.reduce(a)) + ".json", to_json(make_crossed_doc(s, info, a))});
  emit(c, arts);
  return kOk;
}

int cmd_kalgebra(const Config& c, const CrossedSetting& s, const SettingInfo& info) {
  emit(c, {{"kalgebra.json", to_json(make_kalgebra_doc(s, info, false))},
           {"kalgebra_D.json", to_json(make_kalgebra_doc(s, info, true))}});
  return kOk;
}

int cmd_shintani(const Config& c, const CrossedSetting& s, const SettingInfo& info) {
  std::vector<Artifact> arts;
  for (long m : parse_range(c.m_range, 2 * m_zero(s)))
    arts.push_back({"shintani_m" + std::to_string(m) + ".json", to_json(make_shintani_doc(s, info, m))});
  emit(c, arts);
  return kOk;
}

std::vector<Report> verification_suite(const CrossedSetting& s, const std::string& check) {
  const bool all = check == "all";
  std::vector<Report> out;
  if (all || check == "unitarity")
    for (long a = 0; a < s.modulus(); ++a) out.push_back(verify_crossed(s, a, s.crossed(a)));
  if (all || check == "verlinde") {
    Report base = verify_modular(s.base_data());
    base.title = "modular_base";
    Report big = verify_modular(s.big_data());
    big.title = "modular_big";
    out.push_back(base);
    out.push_back(big);
    const FrobeniusAlgebra kc = k_algebra(s, false);
    Report rk = verify_kalgebra(kc, s.modulus());
    rk.title = "kalgebra_C";
    out.push_back(rk);
    Report rd = verify_kalgebra(k_algebra(s, true), s.modulus());
    rd.title = "kalgebra_D";
    out.push_back(rd);
    out.push_back(verify_characters(kc, s.crossed(0), characters_and_idempotents(kc, s.crossed(0), s.dim_c()), s.dim_c()));
  }
  if (all || check == "shintani") out.push_back(verify_shintani_suite(s));
  if (all || check == "asai") out.push_back(twisting_operator_check(s));
  return out;
}

int cmd_verify(const Config& c, const CrossedSetting& s) {
  const std::vector<Report> reports = verification_suite(s, c.check);
  bool ok = true;
  for (const Report& r : reports) {
    ok = ok && r.ok();
    std::cerr << (r.ok() ? "PASS " : "FAIL ") << r.title << "\n";
    for (const Check& ch : r.checks)
      if (!ch.passed) std::cerr << "  " << (ch.gating ? "fail " : "info ") << ch.name << ": " << ch.detail << "\n";
  }
  emit(c, {{"report.json", to_json(reports)}});
  return ok ? kOk : kVerify;
}

int cmd_export(const Config& c) {
  std::vector<fs::path> inputs;
  for (const std::string& f : c.inputs) inputs.emplace_back(f);
  if (inputs.empty()) {
    if (c.out.empty()) throw ParseError("export needs input files or --out with --group/--aut");
    const fs::path dir = job_dir(c);
    if (!fs::is_directory(dir)) throw ParseError("no such job directory: " + dir.string());
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".json") inputs.push_back(e.path());
    std::sort(inputs.begin(), inputs.end());
  }
  for (const fs::path& p : inputs) {
    std::ifstream f(p, std::ios::binary);
    if (!f) throw ParseError("cannot read " + p.string());
    std::stringstream ss;
    ss << f.rdbuf();
    const Json doc = reparse(ss.str());
    fs::path target = p;
    target.replace_extension(extension(c.format));
    if (c.format == "json" && target == p) {
      // normalizing rewrite
      write_file(p, dump(doc));
    } else {
      write_file(target, render(doc, c.format));
    }
    std::cerr << "wrote " << target.string() << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Crossed S-matrices, equivariant K-algebras and Shintani descent for Z(Vec_G)"};
  app.require_subcommand(1, 1);
  Config c;

  auto add_setting = [&](CLI::App* sub) {
    sub->add_option("--group", c.group, "group spec: cyclic:N, klein, dihedral:N, sym:N, product:(G,H), trivial")
        ->capture_default_str();
    sub->add_option("--aut", c.aut, "automorphism spec: id, inv, inner:gK, images:[...]")->capture_default_str();
    sub->add_option("--out", c.out, "output root; files go to <out>/<group>__<aut>/");
    sub->add_option("--format", c.format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
  };

  CLI::App* dbl = app.add_subcommand("double", "modular data of Z(Vec_G) and Z(Vec_G~)");
  add_setting(dbl);
  CLI::App* crs = app.add_subcommand("crossed", "crossed S-matrices S(M_a, F)");
  add_setting(crs);
  crs->add_option("--sector", c.sectors, "sector(s) a; default all");
  CLI::App* kal = app.add_subcommand("kalgebra", "K(C,F), K(D,F), characters and idempotents");
  add_setting(kal);
  CLI::App* shn = app.add_subcommand("shintani", "Shintani matrices, twists, m0 and Shintani bases");
  add_setting(shn);
  shn->add_option("--m", c.m_range, "M or LO..HI; default 1..2 m0");
  CLI::App* ver = app.add_subcommand("verify", "run the identity suite; exit 0 iff every check passes");
  add_setting(ver);
  ver->add_option("--check", c.check, "all, unitarity, verlinde, shintani or asai")
      ->check(CLI::IsMember({"all", "unitarity", "verlinde", "shintani", "asai"}))
      ->capture_default_str();
  CLI::App* exp = app.add_subcommand("export", "convert stored JSON to CSV or pretty tables");
  add_setting(exp);
  exp->add_option("files", c.inputs, "JSON files; default every .json in the job directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParse;
  }

  try {
    if (exp->parsed()) return cmd_export(c);
    const CrossedSetting s = CrossedSetting::parse(c.group, c.aut);
    const SettingInfo info = setting_info(s, c.group, c.aut);
    if (dbl->parsed()) return cmd_double(c, s, info);
    if (crs->parsed()) return cmd_crossed(c, s, info);
    if (kal->parsed()) return cmd_kalgebra(c, s, info);
    if (shn->parsed()) return cmd_shintani(c, s, info);
    if (ver->parsed()) return cmd_verify(c, s);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kCompute;
  }
  return kOk;
}
