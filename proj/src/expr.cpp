#include "tropical/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

namespace tropical {

// ---------------------------------------------------------------------------
// Construction and comparison

ExprPtr make_const(Scalar value) {
  return std::make_shared<const Expr>(Expr{ast::Const{value}});
}
ExprPtr make_var(std::string name) {
  return std::make_shared<const Expr>(Expr{ast::Var{std::move(name)}});
}
ExprPtr make_max(std::vector<ExprPtr> args) {
  return std::make_shared<const Expr>(Expr{ast::Max{std::move(args)}});
}
ExprPtr make_min(std::vector<ExprPtr> args) {
  return std::make_shared<const Expr>(Expr{ast::Min{std::move(args)}});
}
ExprPtr make_sum(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(
      Expr{ast::Sum{std::move(left), std::move(right)}});
}
ExprPtr make_diff(ExprPtr left, ExprPtr right) {
  return std::make_shared<const Expr>(
      Expr{ast::Diff{std::move(left), std::move(right)}});
}
ExprPtr make_scale(double factor, ExprPtr operand) {
  if (!std::isfinite(factor))
    throw Error(ErrorKind::InvalidValue, "scale factor must be finite");
  return std::make_shared<const Expr>(
      Expr{ast::Scale{factor, std::move(operand)}});
}
ExprPtr make_neg(ExprPtr operand) {
  return std::make_shared<const Expr>(Expr{ast::Neg{std::move(operand)}});
}

namespace {

bool same_args(const std::vector<ExprPtr>& a, const std::vector<ExprPtr>& b) {
  return std::equal(a.begin(), a.end(), b.begin(), b.end(),
                    [](const ExprPtr& x, const ExprPtr& y) { return *x == *y; });
}

}  // namespace

bool operator==(const Expr& a, const Expr& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      [&](const auto& lhs) -> bool {
        using T = std::decay_t<decltype(lhs)>;
        const T& rhs = std::get<T>(b.node);
        if constexpr (std::is_same_v<T, ast::Const>) {
          return lhs.value == rhs.value;
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          return lhs.name == rhs.name;
        } else if constexpr (std::is_same_v<T, ast::Max> ||
                             std::is_same_v<T, ast::Min>) {
          return same_args(lhs.args, rhs.args);
        } else if constexpr (std::is_same_v<T, ast::Sum> ||
                             std::is_same_v<T, ast::Diff>) {
          return *lhs.left == *rhs.left && *lhs.right == *rhs.right;
        } else if constexpr (std::is_same_v<T, ast::Scale>) {
          return lhs.factor == rhs.factor && *lhs.operand == *rhs.operand;
        } else {
          return *lhs.operand == *rhs.operand;
        }
      },
      a.node);
}

// ---------------------------------------------------------------------------
// Lexer

namespace {

enum class Tok {
  Number, Ident, Eps, Max, Min, LParen, RParen, Comma, Plus, Minus, Star,
  Slash, End
};

struct Token {
  Tok kind;
  std::size_t pos;
  std::string_view text;
};

bool ident_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

constexpr std::string_view kEpsUtf8 = "\xCE\xB5";  // ε

std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](Tok kind) {
      out.push_back({kind, start, src.substr(start, 1)});
      ++i;
    };
    switch (c) {
      case '(': single(Tok::LParen); continue;
      case ')': single(Tok::RParen); continue;
      case ',': single(Tok::Comma); continue;
      case '+': single(Tok::Plus); continue;
      case '-': single(Tok::Minus); continue;
      case '*': single(Tok::Star); continue;
      case '/': single(Tok::Slash); continue;
      default: break;
    }
    if (src.substr(i, kEpsUtf8.size()) == kEpsUtf8) {
      out.push_back({Tok::Eps, start, src.substr(start, kEpsUtf8.size())});
      i += kEpsUtf8.size();
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      while (i < src.size() &&
             (std::isdigit(static_cast<unsigned char>(src[i])) || src[i] == '.'))
        ++i;
      if (i < src.size() && (src[i] == 'e' || src[i] == 'E')) {
        std::size_t j = i + 1;
        if (j < src.size() && (src[j] == '+' || src[j] == '-')) ++j;
        if (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
          while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j])))
            ++j;
          i = j;
        }
      }
      out.push_back({Tok::Number, start, src.substr(start, i - start)});
      continue;
    }
    if (ident_start(c)) {
      while (i < src.size() && ident_char(src[i])) ++i;
      std::string_view word = src.substr(start, i - start);
      Tok kind = word == "eps"   ? Tok::Eps
                 : word == "max" ? Tok::Max
                 : word == "min" ? Tok::Min
                                 : Tok::Ident;
      out.push_back({kind, start, word});
      continue;
    }
    throw SyntaxError(start, "a token",
                      "unexpected character '" +
                          std::string(1, std::isprint(static_cast<unsigned char>(c))
                                             ? c
                                             : '?') +
                          "'");
  }
  out.push_back({Tok::End, src.size(), {}});
  return out;
}

// ---------------------------------------------------------------------------
// Parser (recursive descent, one function per precedence level)

constexpr std::size_t kMaxDepth = 256;

struct Operand {
  ExprPtr expr;
  std::size_t depth = 1;
  // Set when the operand is a bare constant (possibly negated or in
  // parentheses) and may serve as a scale factor.
  std::optional<Scalar> literal;
  bool fraction = false;
  std::size_t pos = 0;  // start of a fraction literal
};

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(tokenize(src)) {}

  ExprPtr parse() {
    Operand result = additive(0);
    ExprPtr e = materialize(result);
    expect(Tok::End, "an operator or end of input");
    return e;
  }

 private:
  const Token& peek() const {
    return tokens_[std::min(pos_, tokens_.size() - 1)];
  }

  bool accept(Tok kind) {
    if (peek().kind != kind) return false;
    ++pos_;
    return true;
  }

  void expect(Tok kind, const char* what) {
    if (!accept(kind)) fail(what);
  }

  [[noreturn]] void fail(const std::string& expected,
                         const std::string& detail = {}) const {
    const Token& t = peek();
    std::string got = t.kind == Tok::End ? "end of input"
                                         : "'" + std::string(t.text) + "'";
    throw SyntaxError(t.pos, expected,
                      detail.empty() ? "got " + got : detail);
  }

  void check_depth(std::size_t depth) const {
    if (depth > kMaxDepth) fail("a shallower expression", "nesting too deep");
  }

  // Fractions are accepted only as scale factors.
  ExprPtr materialize(const Operand& op) const {
    if (op.fraction)
      throw SyntaxError(op.pos, "an expression",
                        "a fraction p/q is only allowed as a scale factor");
    return op.expr;
  }

  Operand additive(std::size_t nesting) {
    Operand lhs = unary(nesting);
    while (peek().kind == Tok::Plus || peek().kind == Tok::Minus) {
      bool plus = peek().kind == Tok::Plus;
      ++pos_;
      Operand rhs = unary(nesting);
      std::size_t depth = std::max(lhs.depth, rhs.depth) + 1;
      check_depth(depth);
      ExprPtr l = materialize(lhs), r = materialize(rhs);
      lhs = Operand{plus ? make_sum(l, r) : make_diff(l, r), depth, {}};
    }
    return lhs;
  }

  Operand unary(std::size_t nesting) {
    if (!accept(Tok::Minus)) return product(nesting);
    check_depth(nesting + 1);
    Operand inner = unary(nesting + 1);
    if (inner.literal && inner.literal->is_finite()) {
      Scalar negated(-inner.literal->value());
      return Operand{make_const(negated), inner.depth, negated, inner.fraction,
                     inner.pos};
    }
    check_depth(inner.depth + 1);
    return Operand{make_neg(materialize(inner)), inner.depth + 1, {}};
  }

  Operand product(std::size_t nesting) {
    Operand lhs = primary(nesting);
    while (accept(Tok::Star)) {
      std::size_t star_pos = tokens_[pos_ - 1].pos;
      Operand rhs = primary(nesting);
      lhs = scale(lhs, rhs, star_pos);
    }
    return lhs;
  }

  Operand scale(const Operand& lhs, const Operand& rhs, std::size_t at) const {
    auto usable = [](const Operand& op) {
      return op.literal && op.literal->is_finite();
    };
    // Prefer the operand written as a fraction as the factor, then the left.
    const Operand* factor = nullptr;
    const Operand* operand = nullptr;
    if (usable(rhs) && rhs.fraction && !lhs.fraction) {
      factor = &rhs, operand = &lhs;
    } else if (usable(lhs)) {
      factor = &lhs, operand = &rhs;
    } else if (usable(rhs)) {
      factor = &rhs, operand = &lhs;
    } else if (lhs.literal || rhs.literal) {
      throw SyntaxError(at, "a finite scale factor", "eps cannot scale");
    } else {
      throw Error(ErrorKind::NonlinearProduct,
                  "at position " + std::to_string(at) +
                      ": '*' needs a constant on one side");
    }
    std::size_t depth = operand->depth + 1;
    check_depth(depth);
    return Operand{make_scale(factor->literal->value(), materialize(*operand)),
                   depth, {}};
  }

  Operand primary(std::size_t nesting) {
    check_depth(nesting + 1);
    const Token t = peek();
    switch (t.kind) {
      case Tok::Number: {
        ++pos_;
        double value = number(t);
        if (!accept(Tok::Slash)) return Operand{make_const(value), 1, Scalar(value)};
        const Token den = peek();
        if (den.kind != Tok::Number) fail("a denominator");
        ++pos_;
        double d = number(den);
        if (d == 0.0) throw SyntaxError(den.pos, "a nonzero denominator");
        Scalar q(value / d);
        return Operand{make_const(q), 1, q, true, t.pos};
      }
      case Tok::Eps:
        ++pos_;
        return Operand{make_const(eps), 1, eps};
      case Tok::Ident:
        ++pos_;
        return Operand{make_var(std::string(t.text)), 1, {}};
      case Tok::Max:
      case Tok::Min: {
        ++pos_;
        expect(Tok::LParen, "'('");
        std::vector<ExprPtr> args;
        std::size_t depth = 1;
        do {
          Operand arg = additive(nesting + 1);
          depth = std::max(depth, arg.depth + 1);
          args.push_back(materialize(arg));
        } while (accept(Tok::Comma));
        if (args.size() < 2) fail("','", "max/min need at least two arguments");
        expect(Tok::RParen, "',' or ')'");
        check_depth(depth);
        return Operand{t.kind == Tok::Max ? make_max(std::move(args))
                                          : make_min(std::move(args)),
                       depth, {}};
      }
      case Tok::LParen: {
        ++pos_;
        Operand inner = additive(nesting + 1);
        expect(Tok::RParen, "an operator or ')'");
        return inner;
      }
      default:
        fail("a number, name, 'eps', 'max', 'min' or '('");
    }
  }

  static double number(const Token& t) {
    double value = 0.0;
    auto [ptr, ec] =
        std::from_chars(t.text.data(), t.text.data() + t.text.size(), value);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size() ||
        !std::isfinite(value))
      throw SyntaxError(t.pos, "a decimal number",
                        "malformed number '" + std::string(t.text) + "'");
    return value;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Printing

std::string print(const Expr& e);

std::string print_args(const char* name, const std::vector<ExprPtr>& args) {
  std::string out = name;
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(*args[i]);
  }
  return out + ')';
}

bool is_additive(const Expr& e) {
  return e.as<ast::Sum>() || e.as<ast::Diff>();
}

bool is_negative_const(const Expr& e) {
  const auto* c = e.as<ast::Const>();
  return c && c->value.is_finite() && std::signbit(c->value.value()) &&
         c->value.value() != 0.0;
}

std::string paren(const std::string& s) { return "(" + s + ")"; }

std::string print(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::string {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Const>) {
          return format(n.value);
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          return n.name;
        } else if constexpr (std::is_same_v<T, ast::Max>) {
          return print_args("max", n.args);
        } else if constexpr (std::is_same_v<T, ast::Min>) {
          return print_args("min", n.args);
        } else if constexpr (std::is_same_v<T, ast::Sum> ||
                             std::is_same_v<T, ast::Diff>) {
          std::string rhs = print(*n.right);
          if (is_additive(*n.right)) rhs = paren(rhs);
          return print(*n.left) +
                 (std::is_same_v<T, ast::Sum> ? " + " : " - ") + rhs;
        } else if constexpr (std::is_same_v<T, ast::Scale>) {
          std::string factor = format(Scalar(n.factor));
          if (n.factor < 0.0 && factor != "0") factor = paren(factor);
          const Expr& o = *n.operand;
          std::string operand = print(o);
          bool bare = o.as<ast::Var>() || o.as<ast::Max>() || o.as<ast::Min>() ||
                      (o.as<ast::Const>() && !is_negative_const(o));
          return factor + "*" + (bare ? operand : paren(operand));
        } else {
          std::string operand = print(*n.operand);
          return "-" + (is_additive(*n.operand) ? paren(operand) : operand);
        }
      },
      e.node);
}

}  // namespace

ExprPtr parse_expr(std::string_view source) { return Parser(source).parse(); }

std::string to_string(const Expr& e) { return print(e); }

// ---------------------------------------------------------------------------
// Evaluation and substitution

Scalar eval(const Expr& e, const Env& env) {
  return std::visit(
      [&](const auto& n) -> Scalar {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          auto it = env.find(n.name);
          if (it == env.end())
            throw Error(ErrorKind::UnboundVariable, "'" + n.name + "'");
          return it->second;
        } else if constexpr (std::is_same_v<T, ast::Max>) {
          Scalar acc = eps;
          for (const auto& a : n.args) acc = add(acc, eval(*a, env));
          return acc;
        } else if constexpr (std::is_same_v<T, ast::Min>) {
          Scalar acc = eval(*n.args.front(), env);
          for (std::size_t i = 1; i < n.args.size(); ++i)
            acc = std::min(acc, eval(*n.args[i], env));
          return acc;
        } else if constexpr (std::is_same_v<T, ast::Sum>) {
          return mul(eval(*n.left, env), eval(*n.right, env));
        } else if constexpr (std::is_same_v<T, ast::Diff>) {
          return div(eval(*n.left, env), eval(*n.right, env));
        } else if constexpr (std::is_same_v<T, ast::Scale>) {
          return power(eval(*n.operand, env), n.factor);
        } else {
          Scalar v = eval(*n.operand, env);
          if (v.is_eps())
            throw Error(ErrorKind::NegationOfEps, "-eps is +inf");
          return Scalar(-v.value());
        }
      },
      e.node);
}

ExprPtr substitute(const ExprPtr& e, const Env& bindings) {
  return std::visit(
      [&](const auto& n) -> ExprPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, ast::Const>) {
          return e;
        } else if constexpr (std::is_same_v<T, ast::Var>) {
          auto it = bindings.find(n.name);
          return it == bindings.end() ? e : make_const(it->second);
        } else if constexpr (std::is_same_v<T, ast::Max> ||
                             std::is_same_v<T, ast::Min>) {
          std::vector<ExprPtr> args;
          args.reserve(n.args.size());
          for (const auto& a : n.args) args.push_back(substitute(a, bindings));
          return std::make_shared<const Expr>(Expr{T{std::move(args)}});
        } else if constexpr (std::is_same_v<T, ast::Sum> ||
                             std::is_same_v<T, ast::Diff>) {
          return std::make_shared<const Expr>(Expr{
              T{substitute(n.left, bindings), substitute(n.right, bindings)}});
        } else if constexpr (std::is_same_v<T, ast::Scale>) {
          return make_scale(n.factor, substitute(n.operand, bindings));
        } else {
          return make_neg(substitute(n.operand, bindings));
        }
      },
      e->node);
}

std::set<std::string, std::less<>> free_variables(const Expr& e) {
  std::set<std::string, std::less<>> names;
  auto walk = [&](auto&& self, const Expr& x) -> void {
    std::visit(
        [&](const auto& n) {
          using T = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<T, ast::Var>) {
            names.insert(n.name);
          } else if constexpr (std::is_same_v<T, ast::Max> ||
                               std::is_same_v<T, ast::Min>) {
            for (const auto& a : n.args) self(self, *a);
          } else if constexpr (std::is_same_v<T, ast::Sum> ||
                               std::is_same_v<T, ast::Diff>) {
            self(self, *n.left);
            self(self, *n.right);
          } else if constexpr (std::is_same_v<T, ast::Scale> ||
                               std::is_same_v<T, ast::Neg>) {
            self(self, *n.operand);
          }
        },
        x.node);
  };
  walk(walk, e);
  return names;
}

bool is_identifier(std::string_view name) {
  if (name.empty() || !ident_start(name.front())) return false;
  if (!std::all_of(name.begin(), name.end(), ident_char)) return false;
  return name != "eps" && name != "max" && name != "min";
}

}  // namespace tropical
