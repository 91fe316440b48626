#include "skein/expr.hpp"

#include <cctype>
#include <optional>

namespace skein {

namespace {

constexpr std::int64_t kMaxCoord = 1'000'000;
constexpr std::int64_t kMaxSmall = 100'000;  // {n}, hook sizes, exponents

class Parser {
 public:
  Parser(std::string_view in, Context ctx) : in_(in), ctx_(ctx) {}

  Expr run() {
    Expr e = expr();
    skip_ws();
    if (pos_ != in_.size()) fail("unexpected '" + std::string(1, in_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < in_.size() && in_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      if (pos_ >= in_.size()) fail(std::string("expected '") + c + "' but input ended");
      fail(std::string("expected '") + c + "'");
    }
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (in_.substr(pos_, w.size()) != w) return false;
    const std::size_t end = pos_ + w.size();
    if (end < in_.size() && std::isalnum(static_cast<unsigned char>(in_[end]))) return false;
    pos_ = end;
    return true;
  }

  Integer digits() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a number");
    return Integer(std::string(in_.substr(start, pos_ - start)));
  }

  std::int64_t bounded_int(std::int64_t bound, bool allow_sign) {
    skip_ws();
    const std::size_t start = pos_;
    bool neg = false;
    if (allow_sign && (accept('-') || (peek('+') && accept('+')))) neg = in_[pos_ - 1] == '-';
    Integer n = digits();
    if (neg) n = -n;
    if (abs(n) > bound) fail_at("integer literal out of range", start);
    return n.get_si();
  }

  void require_context(bool ok, const std::string& what, std::size_t at) const {
    if (!ok) fail_at(what + " is not allowed in " + to_string(ctx_) + " context", at);
  }

  Expr node(Expr::Kind k, std::size_t at) {
    Expr e;
    e.kind = k;
    e.offset = at;
    return e;
  }

  Expr binary(Expr::Kind k, std::size_t at, Expr l, Expr r) {
    Expr e = node(k, at);
    e.kids.push_back(std::move(l));
    e.kids.push_back(std::move(r));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+'))
        lhs = binary(Expr::Kind::add, at, std::move(lhs), term());
      else if (accept('-'))
        lhs = binary(Expr::Kind::sub, at, std::move(lhs), term());
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*'))
        lhs = binary(Expr::Kind::mul, at, std::move(lhs), factor());
      else if (accept('/'))
        lhs = binary(Expr::Kind::div, at, std::move(lhs), factor());
      else
        return lhs;
    }
  }

  Expr factor() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) {
      Expr e = node(Expr::Kind::neg, at);
      e.kids.push_back(factor());
      return e;
    }
    Expr base = atom();
    skip_ws();
    const std::size_t pat = pos_;
    if (accept('^')) {
      Expr e = node(Expr::Kind::pow, pat);
      e.i = bounded_int(kMaxSmall, true);
      e.kids.push_back(std::move(base));
      return e;
    }
    return base;
  }

  Expr atom() {
    skip_ws();
    const std::size_t at = pos_;
    if (pos_ >= in_.size()) fail("unexpected end of input");
    const char c = in_[pos_];
    if (c == '(') {
      ++pos_;
      Expr e = expr();
      expect(')');
      return e;
    }
    if (c == '{') {
      ++pos_;
      Expr e = node(Expr::Kind::qint, at);
      e.i = bounded_int(kMaxSmall, true);
      expect('}');
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Expr e = node(Expr::Kind::number, at);
      e.number = digits();
      return e;
    }
    if ((c == 'D' || c == 'e') && pos_ + 1 < in_.size() && in_[pos_ + 1] == '[') {
      const bool is_d = c == 'D';
      require_context(is_d ? ctx_ == Context::torus : ctx_ == Context::bracket, is_d ? "D[.,.]" : "e[.,.]", at);
      pos_ += 2;
      Expr e = node(is_d ? Expr::Kind::gen_d : Expr::Kind::gen_e, at);
      e.i = bounded_int(kMaxCoord, true);
      expect(',');
      e.j = bounded_int(kMaxCoord, true);
      expect(']');
      if (e.i == 0 && e.j == 0) fail_at("zero vector has no curve class", at);
      return e;
    }
    if (c == 'Q' && pos_ + 1 < in_.size() && in_[pos_ + 1] == '[') {
      require_context(ctx_ == Context::annulus, "Q[.|.]", at);
      pos_ += 2;
      Expr e = node(Expr::Kind::hook_q, at);
      e.i = bounded_int(kMaxSmall, false);
      expect('|');
      e.j = bounded_int(kMaxSmall, false);
      expect(']');
      return e;
    }
    if (accept_word("delta")) {
      require_context(ctx_ != Context::bracket, "delta", at);
      return node(Expr::Kind::delta, at);
    }
    if (accept_word("s")) return node(Expr::Kind::sym_s, at);
    if (accept_word("v")) {
      require_context(ctx_ != Context::bracket, "v", at);
      return node(Expr::Kind::sym_v, at);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view in_;
  Context ctx_;
  std::size_t pos_ = 0;
};

// Evaluation keeps pure scalars apart from elements so that division and
// negative powers can be checked.
struct Val {
  std::optional<RatFunc> scalar;
  Value elem;
};

Value lift(const RatFunc& c, Context ctx) {
  switch (ctx) {
    case Context::torus: return SkeinElement::scalar(c);
    case Context::annulus: return AnnulusElement::empty_link(c);
    case Context::bracket: return BracketElement::scalar(c);
  }
  throw InternalError("unknown context");
}

Value element(const Val& v, Context ctx) { return v.scalar ? lift(*v.scalar, ctx) : v.elem; }

std::optional<RatFunc> scalar_part(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::optional<RatFunc> {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, SkeinElement>) {
          if (x.is_zero()) return RatFunc();
          if (x.is_scalar()) return x.coeff({});
          return std::nullopt;
        } else if constexpr (std::is_same_v<T, AnnulusElement>) {
          if (x.is_scalar()) return x.unit_coeff();
          return std::nullopt;
        } else {
          if (x.curve_terms().empty()) return x.unit_coeff();
          return std::nullopt;
        }
      },
      v);
}

Value add(const Value& a, const Value& b, bool subtract) {
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        return subtract ? Value(x - y) : Value(x + y);
      },
      a);
}

Value scale(const RatFunc& c, const Value& a) {
  return std::visit([&](const auto& x) -> Value { return c * x; }, a);
}

Value mul(const Value& a, const Value& b) {
  if (auto c = scalar_part(a)) return scale(*c, b);
  if (auto c = scalar_part(b)) return scale(*c, a);
  return std::visit(
      [&](const auto& x) -> Value {
        using T = std::decay_t<decltype(x)>;
        const T& y = std::get<T>(b);
        if constexpr (std::is_same_v<T, SkeinElement>)
          return multiply(x, y);
        else if constexpr (std::is_same_v<T, BracketElement>)
          return e_mul(x, y);
        else
          throw DomainError("products of hook elements are not supported");
      },
      a);
}

Val eval(const Expr& e, Context ctx) {
  using K = Expr::Kind;
  auto scalar = [](RatFunc c) { return Val{std::move(c), Value{}}; };
  auto elem = [](Value v) { return Val{std::nullopt, std::move(v)}; };
  switch (e.kind) {
    case K::number: return scalar(RatFunc(Rational(e.number)));
    case K::sym_s: return scalar(RatFunc::s(1));
    case K::sym_v: return scalar(RatFunc::v(1));
    case K::qint: return scalar(qint(static_cast<int>(e.i)));
    case K::delta: return scalar(delta());
    case K::gen_d: return elem(SkeinElement::generator(CurveClass::canonicalize(e.i, e.j)));
    case K::gen_e: return elem(BracketElement::generator(CurveClass::canonicalize(e.i, e.j)));
    case K::hook_q: return elem(AnnulusElement::hook(Hook{static_cast<int>(e.i), static_cast<int>(e.j)}));
    case K::neg: {
      Val v = eval(e.kids[0], ctx);
      if (v.scalar) return scalar(-*v.scalar);
      return elem(scale(RatFunc(-1), v.elem));
    }
    case K::add:
    case K::sub: {
      const Val l = eval(e.kids[0], ctx);
      const Val r = eval(e.kids[1], ctx);
      const bool sub = e.kind == K::sub;
      if (l.scalar && r.scalar) return scalar(sub ? *l.scalar - *r.scalar : *l.scalar + *r.scalar);
      return elem(add(element(l, ctx), element(r, ctx), sub));
    }
    case K::mul: {
      const Val l = eval(e.kids[0], ctx);
      const Val r = eval(e.kids[1], ctx);
      if (l.scalar && r.scalar) return scalar(*l.scalar * *r.scalar);
      if (l.scalar) return elem(scale(*l.scalar, r.elem));
      if (r.scalar) return elem(scale(*r.scalar, l.elem));
      return elem(mul(l.elem, r.elem));
    }
    case K::div: {
      const Val l = eval(e.kids[0], ctx);
      const Val r = eval(e.kids[1], ctx);
      std::optional<RatFunc> d = r.scalar ? r.scalar : scalar_part(r.elem);
      if (!d) throw DomainError("division by a non-scalar element");
      if (d->is_zero()) throw DomainError("division by zero");
      if (l.scalar) return scalar(*l.scalar / *d);
      return elem(scale(d->inverse(), l.elem));
    }
    case K::pow: {
      const Val b = eval(e.kids[0], ctx);
      if (b.scalar) {
        if (e.i < 0 && b.scalar->is_zero()) throw DomainError("division by zero");
        return scalar(b.scalar->pow(static_cast<int>(e.i)));
      }
      if (e.i < 0) throw DomainError("negative power of a non-scalar element");
      Value acc = lift(RatFunc(1), ctx);
      for (std::int64_t k = 0; k < e.i; ++k) acc = mul(acc, b.elem);
      return elem(std::move(acc));
    }
  }
  throw InternalError("unknown expression node");
}

}  // namespace

std::string to_string(Context c) {
  switch (c) {
    case Context::torus: return "torus";
    case Context::annulus: return "annulus";
    case Context::bracket: return "bracket";
  }
  return "?";
}

Context context_from_string(const std::string& s) {
  if (s == "torus") return Context::torus;
  if (s == "annulus") return Context::annulus;
  if (s == "bracket") return Context::bracket;
  throw DomainError("unknown context '" + s + "'");
}

std::size_t Expr::size() const {
  std::size_t n = 1;
  for (const Expr& k : kids) n += k.size();
  return n;
}

Expr parse(std::string_view input, Context ctx) { return Parser(input, ctx).run(); }

Value evaluate(const Expr& e, Context ctx) { return element(eval(e, ctx), ctx); }

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

}  // namespace skein
