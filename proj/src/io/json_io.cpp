#include "skein/json_io.hpp"

#include <algorithm>

namespace skein {

namespace {

template <typename F>
auto guarded(const char* what, F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw DomainError(std::string("malformed ") + what + " JSON: " + e.what());
  }
}

Json matrix_json(const GL2Matrix& g) { return Json::array({g(0, 0), g(0, 1), g(1, 0), g(1, 1)}); }

GL2Matrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 4) throw DomainError("gl2 must be an array of four integers");
  return GL2Matrix(j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>(),
                   j[3].get<std::int64_t>());
}

}  // namespace

Json to_json(const LaurentPoly& p) {
  Json out = Json::array();
  for (const auto& [m, c] : p.terms()) out.push_back(Json::array({m.s, m.v, c.get_str()}));
  return out;
}

Json to_json(const RatFunc& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

Json to_json(const Vec2& x) { return Json::array({x.a, x.b}); }

Json to_json(const SkeinElement& e) {
  Json terms = Json::array();
  for (const auto& [w, c] : e.terms()) {
    Json word = Json::array();
    for (const auto& x : w) word.push_back(to_json(x.vec()));
    terms.push_back({{"word", word}, {"coeff", to_json(c)}});
  }
  return {{"terms", terms}};
}

Json to_json(const AnnulusElement& e) {
  Json hooks = Json::array();
  for (const auto& [h, c] : e.hook_terms()) hooks.push_back({{"arm", h.arm}, {"leg", h.leg}, {"coeff", to_json(c)}});
  return {{"unit", to_json(e.unit_coeff())}, {"hooks", hooks}};
}

Json to_json(const BracketElement& e) {
  Json terms = Json::array();
  if (!e.unit_coeff().is_zero()) terms.push_back({{"word", Json::array()}, {"coeff", to_json(e.unit_coeff())}});
  for (const auto& [x, c] : e.curve_terms())
    terms.push_back({{"word", Json::array({to_json(x.vec())})}, {"coeff", to_json(c)}});
  return {{"terms", terms}};
}

Json to_json(const BMW2Element& e) {
  return {{"one", to_json(e.one)}, {"sigma", to_json(e.sigma)}, {"h", to_json(e.h)}};
}

Json to_json(const Certificate& c) {
  Json out = {{"x", to_json(c.x)}, {"y", to_json(c.y)}};
  if (const auto* b = std::get_if<BaseNode>(&c.node)) {
    out["kind"] = "base";
    out["base"] = to_string(b->kind);
    out["gl2"] = matrix_json(b->gl2);
    return out;
  }
  const auto& s = std::get<SplitNode>(c.node);
  out["kind"] = "split";
  out["gl2"] = matrix_json(s.gl2);
  out["swapped"] = s.swapped;
  out["nx"] = to_json(s.x);
  out["ny"] = to_json(s.y);
  out["a"] = to_json(s.a);
  out["b"] = to_json(s.b);
  Json kids = Json::array();
  for (const auto& k : s.children) kids.push_back(to_json(k));
  out["children"] = kids;
  return out;
}

Json to_json(const Value& v) {
  return std::visit([](const auto& x) { return to_json(x); }, v);
}

LaurentPoly laurent_from_json(const Json& j) {
  return guarded("polynomial", [&] {
    if (!j.is_array()) throw DomainError("polynomial must be an array of terms");
    LaurentPoly p;
    for (const auto& t : j) {
      if (!t.is_array() || t.size() != 3) throw DomainError("term must be [es, ev, \"p/q\"]");
      Rational c;
      if (c.set_str(t[2].get<std::string>(), 10) != 0) throw DomainError("bad rational '" + t[2].get<std::string>() + "'");
      if (c.get_den() == 0) throw DomainError("zero denominator in rational");
      c.canonicalize();
      p += LaurentPoly::monomial(c, t[0].get<int>(), t[1].get<int>());
    }
    return p;
  });
}

RatFunc ratfunc_from_json(const Json& j) {
  return guarded("rational function", [&] {
    if (!j.is_object()) throw DomainError("rational function must be an object");
    return RatFunc(laurent_from_json(j.at("num")), laurent_from_json(j.at("den")));
  });
}

Vec2 vec2_from_json(const Json& j) {
  return guarded("vector", [&] {
    if (!j.is_array() || j.size() != 2) throw DomainError("vector must be [a, b]");
    return Vec2{j[0].get<std::int64_t>(), j[1].get<std::int64_t>()};
  });
}

SkeinElement skein_from_json(const Json& j) {
  return guarded("skein element", [&] {
    SkeinElement out;
    for (const auto& t : j.at("terms")) {
      Word w;
      for (const auto& x : t.at("word")) w.push_back(CurveClass::canonicalize(vec2_from_json(x)));
      // Accept unsorted words by normalizing them.
      out += ratfunc_from_json(t.at("coeff")) * normal_form(w);
    }
    return out;
  });
}

AnnulusElement annulus_from_json(const Json& j) {
  return guarded("annulus element", [&] {
    AnnulusElement out = AnnulusElement::empty_link(ratfunc_from_json(j.at("unit")));
    for (const auto& h : j.at("hooks"))
      out.add_hook(Hook{h.at("arm").get<int>(), h.at("leg").get<int>()}, ratfunc_from_json(h.at("coeff")));
    return out;
  });
}

BracketElement bracket_from_json(const Json& j) {
  return guarded("bracket element", [&] {
    BracketElement out;
    for (const auto& t : j.at("terms")) {
      const RatFunc c = ratfunc_from_json(t.at("coeff"));
      const Json& w = t.at("word");
      if (w.empty())
        out.add_unit(c);
      else if (w.size() == 1)
        out.add_curve(CurveClass::canonicalize(vec2_from_json(w[0])), c);
      else
        throw DomainError("bracket words have length at most one");
    }
    return out;
  });
}

BMW2Element bmw2_from_json(const Json& j) {
  return guarded("BMW2 element", [&] {
    return BMW2Element{ratfunc_from_json(j.at("one")), ratfunc_from_json(j.at("sigma")), ratfunc_from_json(j.at("h"))};
  });
}

Certificate certificate_from_json(const Json& j) {
  return guarded("certificate", [&] {
    Certificate c;
    c.x = vec2_from_json(j.at("x"));
    c.y = vec2_from_json(j.at("y"));
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "base") {
      c.node = BaseNode{base_kind_from_string(j.at("base").get<std::string>()), matrix_from_json(j.at("gl2"))};
    } else if (kind == "split") {
      SplitNode s;
      s.gl2 = matrix_from_json(j.at("gl2"));
      s.swapped = j.at("swapped").get<bool>();
      s.x = vec2_from_json(j.at("nx"));
      s.y = vec2_from_json(j.at("ny"));
      s.a = vec2_from_json(j.at("a"));
      s.b = vec2_from_json(j.at("b"));
      for (const auto& k : j.at("children")) s.children.push_back(certificate_from_json(k));
      c.node = std::move(s);
    } else {
      throw DomainError("certificate kind must be 'base' or 'split'");
    }
    return c;
  });
}

}  // namespace skein
