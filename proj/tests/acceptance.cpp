// Acceptance suite: one PASS/FAIL line per criterion, details indented below.
// All identities are exact over the cyclotomic field; the only numeric
// tolerance is the per-example runtime budget.
//
// Exit status is 0 unless --strict is given and some criterion fails.

#include <chrono>
#include <cstring>
#include <deque>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "crossed_s/axioms.hpp"
#include "crossed_s/shintani.hpp"

using namespace crossed_s;

namespace {

constexpr double kRuntimeBudgetSeconds = 60.0;

struct Example {
  const char* group;
  const char* aut;
};

const std::vector<Example> kDesk = {
    {"cyclic:3", "inv"}, {"klein", "images:[0,2,1,3]"}, {"cyclic:4", "inv"}, {"sym:3", "inner:g1"}};
const std::vector<const char*> kIdentityGroups = {"cyclic:2", "cyclic:3", "klein", "sym:3"};

std::string name_of(const Example& e) { return std::string(e.group) + " / " + e.aut; }

struct Outcome {
  bool passed = true;
  std::vector<std::string> lines;

  void expect(bool ok, const std::string& line) {
    passed = passed && ok;
    lines.push_back((ok ? "ok   " : "FAIL ") + line);
  }
  void note(const std::string& line) { lines.push_back("note " + line); }
  // Every gating check of r must pass; failing informational checks are noted.
  void expect_report(const std::string& where, const Report& r) {
    expect(r.ok(), where + ": " + r.title + (r.ok() ? "" : " has failing checks"));
    for (const Check& c : r.checks) {
      if (c.passed) continue;
      if (c.gating) lines.push_back("       " + c.name + ": " + c.detail);
      else note(where + ": " + c.name + " (informational): " + c.detail);
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::deque<CrossedSetting> g_settings;  // parallel to kDesk, filled by criterion 1

Outcome criterion_unitarity() {
  Outcome o;
  for (const Example& e : kDesk) {
    const auto t0 = std::chrono::steady_clock::now();
    g_settings.push_back(CrossedSetting::parse(e.group, e.aut));
    const CrossedSetting& s = g_settings.back();
    bool ok = true;
    std::string bad;
    for (long a = 0; a < s.modulus(); ++a) {
      const Report r = verify_crossed(s, a, s.crossed(a));
      const Check* c = r.find("unitarity");
      if (!c || !c->passed) {
        ok = false;
        bad += " a=" + std::to_string(a) + (c ? ": " + c->detail : "");
      }
    }
    const double dt = seconds_since(t0);
    std::ostringstream line;
    line << name_of(e) << ": S S^H = S^H S = |G|^2 I on " << s.modulus() << " sectors" << bad << " (" << dt << " s)";
    o.expect(ok && dt < kRuntimeBudgetSeconds, line.str());
  }
  return o;
}

Outcome criterion_submatrix() {
  Outcome o;
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    const CrossedSetting& s = g_settings[i];
    for (long a = 0; a < s.modulus(); ++a) {
      const Report r = verify_crossed(s, a, s.crossed(a));
      const Check* c = r.find("submatrix");
      o.expect(c && c->passed, name_of(kDesk[i]) + " a=" + std::to_string(a) + ": " + (c ? c->detail : "missing"));
    }
  }
  return o;
}

Outcome criterion_degeneration() {
  Outcome o;
  for (const char* g : kIdentityGroups) {
    const CrossedSetting s = CrossedSetting::parse(g, "id");
    const ModularData d = modular_data_of_double(parse_group(g));
    const CrossedSMatrix& m = s.crossed(0);
    o.expect(m.S.rows() == d.size() && m.S == d.S, std::string(g) + ": S(C,id) equals the S-matrix of the double");
    const FrobeniusAlgebra k = k_algebra(s, false);
    const FusionTable n = verlinde_fusion(d);
    std::string bad;
    bool ok = k.size() == d.size();
    for (int i = 0; ok && i < k.size(); ++i)
      for (int j = 0; j < k.size(); ++j)
        for (int l = 0; l < k.size(); ++l) {
          const Cyclo& x = k.a[i][j][l];
          if (x != n[i][j][l] || !x.is_rational() || x.to_rational().get_den() != 1 || sgn(x.to_rational()) < 0) {
            if (bad.empty()) bad = " first mismatch a[" + std::to_string(i) + "][" + std::to_string(j) + "][" +
                                   std::to_string(l) + "] = " + x.str();
            ok = false;
          }
        }
    o.expect(ok, std::string(g) + ": K(C,id) structure constants are the Verlinde fusion coefficients" + bad);
  }
  return o;
}

Outcome criterion_verlinde_analogue() {
  Outcome o;
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    const CrossedSetting& s = g_settings[i];
    const FrobeniusAlgebra k = k_algebra(s, false);
    const CharacterData c = characters_and_idempotents(k, s.crossed(0), s.dim_c());
    const Report rc = verify_characters(k, s.crossed(0), c, s.dim_c());
    const Check* v = rc.find("verlinde_analogue");
    o.expect(v && v->passed, name_of(kDesk[i]) + ": trace-computed constants match the S-matrix expression");
    for (bool all : {false, true}) {
      const Report r = verify_kalgebra(all ? k_algebra(s, true) : k, s.modulus());
      const Check* in = r.find("integrality");
      o.expect(in && in->passed, name_of(kDesk[i]) + (all ? " K(D,F)" : " K(C,F)") + ": structure constants are algebraic integers");
      if (s.modulus() <= 2) {
        const Check* q = r.find("rational_integers");
        o.expect(q && q->passed, name_of(kDesk[i]) + (all ? " K(D,F)" : " K(C,F)") + ": rational integers (N = " +
                                     std::to_string(s.modulus()) + ")");
      }
    }
  }
  return o;
}

Outcome criterion_pinpoints() {
  Outcome o;
  {
    const CrossedSetting& s = g_settings[0];
    const EquivChoice& c0 = s.choice(0);
    const EquivChoice& c1 = s.choice(1);
    const CrossedSMatrix& m = s.crossed(0);
    o.expect(c0.labels.size() == 1, "Z/3 inv: F-stable sector-0 simples = " + std::to_string(c0.labels.size()));
    o.expect(c1.labels.size() == 1 && module_dim(s.category()->simple(c1.labels[0])) == Cyclo(3),
             "Z/3 inv: one sector-1 simple of module dimension 3");
    o.expect(m.S.rows() == 1 && m.S.cols() == 1 && m.S(0, 0) == Cyclo(3),
             "Z/3 inv: crossed S-matrix = (" + (m.S.size() == 1 ? m.S(0, 0).str() : std::string("?")) + ")");
  }
  {
    const CrossedSetting& s = g_settings[1];
    const CrossedSMatrix& m = s.crossed(0);
    bool ok = m.S.rows() == 4 && m.S.cols() == 4;
    for (int i = 0; ok && i < m.S.rows(); ++i) {
      Cyclo norm(0);
      for (int j = 0; j < m.S.cols(); ++j) norm += m.S(i, j) * conj(m.S(i, j));
      ok = norm == Cyclo(16);
    }
    o.expect(ok, "klein swap: 4x4 sector-0 crossed S-matrix, every row norm 16");
  }
  return o;
}

Outcome criterion_characters() {
  Outcome o;
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    const CrossedSetting& s = g_settings[i];
    const FrobeniusAlgebra k = k_algebra(s, false);
    const CharacterData c = characters_and_idempotents(k, s.crossed(0), s.dim_c());
    o.expect_report(name_of(kDesk[i]), verify_characters(k, s.crossed(0), c, s.dim_c()));
  }
  return o;
}

Outcome criterion_shintani() {
  Outcome o;
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    const Report r = verify_shintani_suite(g_settings[i], true);
    o.expect_report(name_of(kDesk[i]), r);
    const Check* inv = r.find("three_factor_inverse");
    if (inv) o.note(name_of(kDesk[i]) + ": Sh_m = T'^-1 S T^-m " + (inv->passed ? "holds" : "fails") + " for m = 1..2 m0");
  }
  return o;
}

Outcome criterion_asai() {
  Outcome o;
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    const Report r = twisting_operator_check(g_settings[i], true);
    o.expect_report(name_of(kDesk[i]), r);
    for (const char* name : {"asai_inverse", "ingredient_inverse"})
      if (const Check* c = r.find(name))
        o.note(name_of(kDesk[i]) + ": " + name + " " + (c->passed ? "holds" : "fails") + ": " + c->detail);
  }
  return o;
}

Outcome criterion_axioms() {
  Outcome o;
  auto modular = [&](const std::string& where, const ModularData& d) {
    const Report r = verify_modular(d);
    o.expect_report(where, r);
  };
  for (const char* g : kIdentityGroups) modular(std::string("Z(Vec ") + g + ")", modular_data_of_double(parse_group(g)));
  for (std::size_t i = 0; i < kDesk.size(); ++i) {
    modular(name_of(kDesk[i]) + " base double", g_settings[i].base_data());
    modular(name_of(kDesk[i]) + " big double", g_settings[i].big_data());
    const auto t0 = std::chrono::steady_clock::now();
    Report r = verify_category_axioms(g_settings[i].category());
    std::ostringstream where;
    where << name_of(kDesk[i]) << " (" << seconds_since(t0) << " s)";
    o.expect_report(where.str(), r);
  }
  return o;
}

Outcome criterion_negative_controls() {
  Outcome o;
  const CrossedSetting& s = g_settings[1];
  CrossedSMatrix m = s.crossed(0);
  m.S(1, 2) += Cyclo(1);
  const Report r = verify_crossed(s, 0, m);
  for (const char* name : {"unitarity", "submatrix"}) {
    const Check* c = r.find(name);
    o.expect(c && !c->passed, std::string("corrupted S(1,2) fails ") + name + (c ? ": " + c->detail : ""));
  }
  const Check* sub = r.find("submatrix");
  o.expect(sub && sub->detail.find("(1,2)") != std::string::npos, "submatrix failure names entry (1,2)");

  FrobeniusAlgebra k = k_algebra(s, false);
  k.a[1][2][3] += Cyclo(1);
  const CharacterData c = characters_and_idempotents(k, s.crossed(0), s.dim_c());
  const Report rc = verify_characters(k, s.crossed(0), c, s.dim_c());
  const Check* v = rc.find("verlinde_analogue");
  o.expect(v && !v->passed && v->detail.find("a[1][2][3]") != std::string::npos,
           "corrupted a[1][2][3] fails verlinde_analogue: " + (v ? v->detail : std::string("missing")));
  const Report rk = verify_kalgebra(k, s.modulus());
  const Check* comm = rk.find("commutative");
  o.expect(comm && !comm->passed, "corrupted a[1][2][3] fails commutative: " + (comm ? comm->detail : std::string()));

  ModularData d = s.base_data();
  d.S(0, 1) += Cyclo(1);
  const Report rm = verify_modular(d);
  const Check* u = rm.find("unitarity");
  o.expect(u && !u->passed, "corrupted modular S(0,1) fails unitarity: " + (u ? u->detail : std::string()));
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"exact crossed unitarity", criterion_unitarity},
      {"submatrix of the big double", criterion_submatrix},
      {"degeneration at F = id", criterion_degeneration},
      {"Verlinde analogue and integrality", criterion_verlinde_analogue},
      {"pinpoint values", criterion_pinpoints},
      {"characters and idempotents", criterion_characters},
      {"Shintani suite (Sh_m = T' S T^m)", criterion_shintani},
      {"Asai/Gauss identity", criterion_asai},
      {"modular and category axioms", criterion_axioms},
      {"negative controls", criterion_negative_controls},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.passed = false;
      o.lines.push_back(std::string("FAIL exception: ") + e.what());
    }
    if (!o.passed) ++failed;
    std::cout << "criterion " << i + 1 << " " << (o.passed ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << seconds_since(t0) << " s)\n";
    for (const std::string& l : o.lines) std::cout << "    " << l << "\n";
    std::cout.flush();
  }
  std::cout << criteria.size() - failed << "/" << criteria.size() << " criteria pass\n";
  return strict && failed ? 1 : 0;
}
