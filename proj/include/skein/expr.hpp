#pragma once

// Expression language shared by the command line tool.
//
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-' factor | atom ('^' ['-'] uint)?
//   atom   := 'D[' int ',' int ']' | 'e[' int ',' int ']' | 'Q[' uint '|' uint ']'
//           | '{' int '}' | 'delta' | 's' | 'v' | uint | '(' expr ')'
//
// Division and negative exponents are only allowed on scalar operands, so
// every rendered normal form parses back to itself.

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "skein/annulus.hpp"
#include "skein/bracket.hpp"
#include "skein/torus.hpp"

namespace skein {

enum class Context { torus, annulus, bracket };

std::string to_string(Context c);
Context context_from_string(const std::string& s);

struct Expr {
  enum class Kind { number, sym_s, sym_v, qint, delta, gen_d, gen_e, hook_q, add, sub, mul, div, neg, pow };

  Kind kind = Kind::number;
  std::size_t offset = 0;
  Integer number;             // number
  std::int64_t i = 0, j = 0;  // qint (i), gen_d / gen_e (i, j), hook_q (arm i, leg j), pow (exponent i)
  std::vector<Expr> kids;

  /// Number of nodes in the tree.
  std::size_t size() const;
};

/// Throws ParseError (with a byte offset) on syntax errors, out-of-range
/// literals, zero vectors and atoms that do not belong to the context.
Expr parse(std::string_view input, Context ctx);

using Value = std::variant<SkeinElement, AnnulusElement, BracketElement>;

/// Normal-form value of a parsed expression.  Throws DomainError for
/// operations outside the context (e.g. dividing by a non-scalar).
Value evaluate(const Expr& e, Context ctx);

inline Value evaluate(std::string_view input, Context ctx) { return evaluate(parse(input, ctx), ctx); }

std::string to_string(const Value& v);

}  // namespace skein
