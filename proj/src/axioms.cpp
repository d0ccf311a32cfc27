#include "crossed_s/axioms.hpp"

#include <functional>

namespace crossed_s {

namespace {

std::string simple_name(const CatPtr& cat, int i) {
  const SimpleLabel& l = cat->simples()[i];
  return "a" + std::to_string(l.sector) + ":x" + std::to_string(l.rep) + ":chi" + std::to_string(l.irrep);
}

// Records the first failure only; later checks still run.
struct Recorder {
  std::string fail;
  long count = 0;
  void expect(bool ok, const std::function<std::string()>& what) {
    ++count;
    if (!ok && fail.empty()) fail = what();
  }
  std::string detail() const { return fail.empty() ? std::to_string(count) + " identities" : fail; }
};

}  // namespace

Report verify_category_axioms(const CatPtr& cat, bool full_hexagons) {
  Report r;
  r.title = "axioms";
  const int k = static_cast<int>(cat->simples().size());
  const int n = cat->modulus();
  Recorder rigid, fact, braid, natural, hex1, hex2, tw1, tw2, tw3, twf;

  for (int i = 0; i < k; ++i) {
    const EqObject& v = cat->simple(i);
    const EqObject dv = dual(v);
    auto who = [&](const char* what) { return [&, what] { return std::string(what) + " fails at " + simple_name(cat, i); }; };
    rigid.expect(compose(tensor(identity(v), ev(v)), compose(associator(v, dv, v), tensor(coev(v), identity(v)))) == identity(v),
                 who("left zig-zag"));
    rigid.expect(compose(tensor(ev_right(v), identity(v)),
                         compose(associator_inverse(v, dv, v), tensor(identity(v), coev_right(v)))) == identity(v),
                 who("right zig-zag"));
    rigid.expect(dual(dv) == v, who("V** = V"));
    fact.expect(F_act(v, n) == v, who("F^N = id"));
    fact.expect(F_act(dv, 1) == dual(F_act(v, 1)), who("F commutes with duals"));

    const int a = *v.sector();
    const EqMorphism t = twist(v);
    twf.expect(t == twist_formula(v), who("twist composition differs from the stalk formula"));
    tw1.expect(F_act(t, 1) == twist(F_act(v, 1)), who("F(theta_V) = theta_{F V}"));
    const EqMorphism dt = dual(t), t3 = twist(F_act(dv, a));
    tw3.expect(dt.source() == t3.source() && dt.blocks() == t3.blocks(), who("(theta^a_V)* = theta^-a_{F^a(V*)}"));
  }

  std::vector<std::vector<EqMorphism>> caps(k);
  for (int i = 0; i < k; ++i) caps[i] = hom_basis(tensor(cat->simple(i), dual(cat->simple(i))), cat->unit());

  for (int i = 0; i < k; ++i) {
    const EqObject& u = cat->simple(i);
    const int a = *u.sector();
    const std::vector<EqMorphism>& cap_u = caps[i];
    for (int j = 0; j < k; ++j) {
      const EqObject& v = cat->simple(j);
      const int b = *v.sector();
      auto pair = [&](const char* what) {
        return [&, what] { return std::string(what) + " fails at (" + simple_name(cat, i) + ", " + simple_name(cat, j) + ")"; };
      };
      const EqMorphism buv = crossed_braiding(u, v);
      braid.expect(buv.is_equivariant() && buv.is_invertible(), pair("braiding equivariance/invertibility"));

      // naturality in each argument along maps V (x) V* -> 1 and U (x) U* -> 1
      for (const EqMorphism& f : caps[j]) {
        const EqObject vdv = f.source();
        const EqMorphism lhs = compose(crossed_braiding(u, cat->unit()), tensor(identity(u), f));
        const EqMorphism rhs = compose(tensor(F_act(f, a), identity(u)), crossed_braiding(u, vdv));
        natural.expect(lhs == rhs, pair("naturality in the second argument"));
      }
      for (const EqMorphism& f : cap_u) {
        const EqObject udu = f.source();
        const EqMorphism lhs = compose(crossed_braiding(cat->unit(), v), tensor(f, identity(v)));
        const EqMorphism rhs = compose(tensor(identity(v), f), crossed_braiding(udu, v));
        natural.expect(lhs == rhs, pair("naturality in the first argument"));
      }

      // theta_{U (x) V} through the braiding
      const EqObject uv = tensor(u, v);
      const EqObject fv = F_act(v, a);
      const EqMorphism lhs = compose(tensor_structure(u, v, a + b), twist(uv));
      const EqMorphism rhs =
          compose(tensor(F_act(twist(u), b), F_act(twist(v), a)), compose(crossed_braiding(fv, u), buv));
      tw2.expect(lhs == rhs, pair("twist of a tensor product"));

      std::vector<int> thirds;
      if (full_hexagons) {
        for (int l = 0; l < k; ++l) thirds.push_back(l);
      } else {
        thirds = {0, i, j};
      }
      for (int l : thirds) {
        const EqObject& w = cat->simple(l);
        auto triple = [&](const char* what) {
          return [&, what, l] {
            return std::string(what) + " fails at (" + simple_name(cat, i) + ", " + simple_name(cat, j) + ", " +
                   simple_name(cat, l) + ")";
          };
        };
        const EqObject fw = F_act(w, a);
        const EqMorphism h1l = compose(tensor(tensor_structure(v, w, a), identity(u)), crossed_braiding(u, tensor(v, w)));
        const EqMorphism h1r = compose(
            associator_inverse(fv, fw, u),
            compose(tensor(identity(fv), crossed_braiding(u, w)),
                    compose(associator(fv, u, w), compose(tensor(buv, identity(w)), associator_inverse(u, v, w)))));
        hex1.expect(h1l == h1r, triple("first hexagon"));

        // U (x) V over W: (U V) W -> F^{a+b} W (x) (U V)
        const EqObject fbw = F_act(w, b), fabw = F_act(w, a + b);
        const EqMorphism h2l = crossed_braiding(uv, w);
        const EqMorphism h2r = compose(
            associator(fabw, u, v),
            compose(tensor(crossed_braiding(u, fbw), identity(v)),
                    compose(associator_inverse(u, fbw, v), compose(tensor(identity(u), crossed_braiding(v, w)), associator(u, v, w)))));
        hex2.expect(h2l == h2r, triple("second hexagon"));
      }
    }
  }

  r.add("rigidity", rigid.fail.empty(), rigid.detail());
  r.add("f_action", fact.fail.empty(), fact.detail());
  r.add("braiding", braid.fail.empty(), braid.detail());
  r.add("naturality", natural.fail.empty(), natural.detail());
  r.add("hexagon_first", hex1.fail.empty(), hex1.detail());
  r.add("hexagon_second", hex2.fail.empty(), hex2.detail());
  r.add("twist_formula", twf.fail.empty(), twf.detail());
  r.add("twist_f_compatibility", tw1.fail.empty(), tw1.detail());
  r.add("twist_tensor", tw2.fail.empty(), tw2.detail());
  r.add("twist_duality", tw3.fail.empty(), tw3.detail());
  return r;
}

}  // namespace crossed_s
