#include "scott/pcf/parse.hpp"

#include <cctype>
#include <vector>

namespace scott::pcf {

ParseError::ParseError(SourcePos pos, const std::string& message)
    : std::runtime_error(std::to_string(pos.line) + ":" + std::to_string(pos.column) +
                         ": " + message),
      pos_(pos) {}

RawRef raw_const(Op op, SourcePos pos) {
  auto r = std::make_shared<RawTerm>();
  r->kind = RawTerm::Kind::Const;
  r->constant = op;
  r->pos = pos;
  return r;
}

RawRef raw_app(RawRef fun, RawRef arg) {
  auto r = std::make_shared<RawTerm>();
  r->kind = RawTerm::Kind::App;
  r->pos = fun->pos;
  r->fun = std::move(fun);
  r->arg = std::move(arg);
  return r;
}

RawRef raw_ascribe(RawRef term, Type type) {
  auto r = std::make_shared<RawTerm>();
  r->kind = RawTerm::Kind::Ascribe;
  r->pos = term->pos;
  r->arg = std::move(term);
  r->ascription = std::move(type);
  return r;
}

bool raw_eq(const RawTerm& a, const RawTerm& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case RawTerm::Kind::Const:
      return a.constant == b.constant;
    case RawTerm::Kind::App:
      return raw_eq(*a.fun, *b.fun) && raw_eq(*a.arg, *b.arg);
    case RawTerm::Kind::Ascribe:
      return *a.ascription == *b.ascription && raw_eq(*a.arg, *b.arg);
  }
  return false;
}

std::string render(const RawTerm& t) {
  switch (t.kind) {
    case RawTerm::Kind::Const:
      return op_name(t.constant);
    case RawTerm::Kind::App:
      return "app(" + render(*t.fun) + ", " + render(*t.arg) + ")";
    case RawTerm::Kind::Ascribe:
      return "(" + render(*t.arg) + " : " + render(*t.ascription) + ")";
  }
  return "?";
}

namespace {

enum class Tok { Ident, Numeral, LParen, RParen, Colon, Arrow, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

constexpr Nat kMaxNumeral = 10'000;

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&]() {
    if (src[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
    ++i;
  };
  while (i < src.size()) {
    char c = src[i];
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '-') {
      while (i < src.size() && src[i] != '\n') advance();
      continue;
    }
    SourcePos start = pos;
    if (c == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      advance();
      advance();
      out.push_back({Tok::Arrow, "->", start});
    } else if (c == '(') {
      advance();
      out.push_back({Tok::LParen, "(", start});
    } else if (c == ')') {
      advance();
      out.push_back({Tok::RParen, ")", start});
    } else if (c == ':') {
      advance();
      out.push_back({Tok::Colon, ":", start});
    } else if (c == '#') {
      advance();
      std::string digits;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) {
        digits += src[i];
        advance();
      }
      if (digits.empty()) throw ParseError(start, "expected digits after '#'");
      if (digits.size() > 7 || std::stoull(digits) > kMaxNumeral)
        throw ParseError(start, "numeral #" + digits + " exceeds the limit of " +
                                    std::to_string(kMaxNumeral));
      out.push_back({Tok::Numeral, digits, start});
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string word;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) ||
                                src[i] == '_')) {
        word += src[i];
        advance();
      }
      out.push_back({Tok::Ident, word, start});
    } else {
      throw ParseError(start, std::string("unexpected character '") + c + "'");
    }
  }
  out.push_back({Tok::End, "", pos});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  RawRef term() {
    RawRef t = atom();
    while (starts_atom()) t = raw_app(t, atom());
    return t;
  }

  Type type() {
    Type dom = type_atom();
    if (peek().kind == Tok::Arrow) {
      next();
      return Type::arrow(dom, type());
    }
    return dom;
  }

  void expect_end() {
    if (peek().kind != Tok::End)
      throw ParseError(peek().pos, "unexpected '" + peek().text + "'");
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  bool starts_atom() const {
    auto k = peek().kind;
    return k == Tok::Ident || k == Tok::Numeral || k == Tok::LParen;
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      throw ParseError(peek().pos, std::string("expected ") + what +
                                       (peek().kind == Tok::End
                                            ? std::string(", found end of input")
                                            : ", found '" + peek().text + "'"));
    next();
  }

  RawRef atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Ident: {
        next();
        static const std::pair<const char*, Op> kConstants[] = {
            {"zero", Op::Zero}, {"succ", Op::Succ}, {"pred", Op::Pred}, {"ifz", Op::Ifz},
            {"k", Op::K},       {"s", Op::S},       {"fix", Op::Fix}};
        for (auto [name, op] : kConstants)
          if (t.text == name) return raw_const(op, t.pos);
        throw ParseError(t.pos, "unknown identifier '" + t.text + "'");
      }
      case Tok::Numeral: {
        next();
        Nat n = std::stoull(t.text);
        RawRef r = raw_const(Op::Zero, t.pos);
        for (Nat i = 0; i < n; ++i) r = raw_app(raw_const(Op::Succ, t.pos), r);
        return r;
      }
      case Tok::LParen: {
        next();
        RawRef inner = term();
        if (peek().kind == Tok::Colon) {
          next();
          inner = raw_ascribe(inner, type());
        }
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::End:
        throw ParseError(t.pos, "expected a term, found end of input");
      default:
        throw ParseError(t.pos, "expected a term, found '" + t.text + "'");
    }
  }

  Type type_atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && t.text == "nat") {
      next();
      return Type::base();
    }
    if (t.kind == Tok::LParen) {
      next();
      Type inner = type();
      expect(Tok::RParen, "')'");
      return inner;
    }
    throw ParseError(t.pos, t.kind == Tok::End ? std::string("expected a type, found end of input")
                                               : "expected a type, found '" + t.text + "'");
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

}  // namespace

RawRef parse(std::string_view source) {
  Parser p(lex(source));
  RawRef t = p.term();
  p.expect_end();
  return t;
}

Type parse_type(std::string_view source) {
  Parser p(lex(source));
  Type t = p.type();
  p.expect_end();
  return t;
}

}  // namespace scott::pcf
