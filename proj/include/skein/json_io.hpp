#pragma once

// JSON forms of every value type.
//
//   RatFunc        {"num": [[es, ev, "p/q"], ...], "den": [...]}
//   SkeinElement   {"terms": [{"word": [[a, b], ...], "coeff": RatFunc}, ...]}
//   AnnulusElement {"unit": RatFunc, "hooks": [{"arm": a, "leg": b, "coeff": RatFunc}, ...]}
//   BracketElement {"terms": [{"word": [] | [[a, b]], "coeff": RatFunc}, ...]}
//   BMW2Element    {"one": RatFunc, "sigma": RatFunc, "h": RatFunc}
//   Certificate    {"x": [a, b], "y": [c, d], "kind": "base", "base": "rel1", "gl2": [m00, m01, m10, m11]}
//                  {"x": ..., "y": ..., "kind": "split", "gl2": ..., "swapped": bool,
//                   "nx": [..], "ny": [..], "a": [..], "b": [..], "children": [...]}
//
// Readers throw DomainError on malformed input.  Reading a RatFunc
// re-canonicalizes it.

#include <json.hpp>

#include "skein/annulus.hpp"
#include "skein/bmw2.hpp"
#include "skein/bracket.hpp"
#include "skein/certificate.hpp"
#include "skein/coeff.hpp"
#include "skein/expr.hpp"
#include "skein/torus.hpp"

namespace skein {

using Json = nlohmann::json;

Json to_json(const LaurentPoly& p);
Json to_json(const RatFunc& f);
Json to_json(const Vec2& x);
Json to_json(const SkeinElement& e);
Json to_json(const AnnulusElement& e);
Json to_json(const BracketElement& e);
Json to_json(const BMW2Element& e);
Json to_json(const Certificate& c);
Json to_json(const Value& v);

LaurentPoly laurent_from_json(const Json& j);
RatFunc ratfunc_from_json(const Json& j);
Vec2 vec2_from_json(const Json& j);
SkeinElement skein_from_json(const Json& j);
AnnulusElement annulus_from_json(const Json& j);
BracketElement bracket_from_json(const Json& j);
BMW2Element bmw2_from_json(const Json& j);
Certificate certificate_from_json(const Json& j);

}  // namespace skein
