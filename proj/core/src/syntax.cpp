#include "teamlogic/syntax.hpp"

#include <vector>

#include "teamlogic/errors.hpp"

namespace teamlogic {

namespace {

enum class Tok {
  Ident,
  Tilde,
  Top,
  Bot,
  Dia,
  Box,
  Nab,
  LParen,
  RParen,
  LBracket,
  RBracket,
  Comma,
  Subset,  // <=
  Amp,
  Bar,
  BarBang,  // |!
  End,
};

struct Token {
  Tok kind;
  std::string_view text;
  std::size_t offset;
};

std::string describe(const Token& t) {
  if (t.kind == Tok::End) return "end of input";
  return "'" + std::string(t.text) + "'";
}

std::vector<Token> lex(std::string_view in) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto ident_start = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  auto ident_char = [&](char c) { return ident_start(c) || (c >= '0' && c <= '9'); };
  while (i < in.size()) {
    char c = in[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (ident_start(c)) {
      while (i < in.size() && ident_char(in[i])) ++i;
      std::string_view word = in.substr(start, i - start);
      Tok kind = Tok::Ident;
      if (word == "dia") kind = Tok::Dia;
      else if (word == "box") kind = Tok::Box;
      else if (word == "nab") kind = Tok::Nab;
      else if (word == "top") kind = Tok::Top;
      else if (word == "bot") kind = Tok::Bot;
      out.push_back({kind, word, start});
      continue;
    }
    Tok kind;
    std::size_t len = 1;
    switch (c) {
      case '~': kind = Tok::Tilde; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case '[': kind = Tok::LBracket; break;
      case ']': kind = Tok::RBracket; break;
      case ',': kind = Tok::Comma; break;
      case '&': kind = Tok::Amp; break;
      case '|':
        if (i + 1 < in.size() && in[i + 1] == '!') {
          kind = Tok::BarBang;
          len = 2;
        } else {
          kind = Tok::Bar;
        }
        break;
      case '<':
        if (i + 1 < in.size() && in[i + 1] == '=') {
          kind = Tok::Subset;
          len = 2;
          break;
        }
        throw ParseError("expected '<='", start);
      default:
        throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
    out.push_back({kind, in.substr(start, len), start});
    i += len;
  }
  out.push_back({Tok::End, {}, in.size()});
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Formula parse() {
    if (peek().kind == Tok::End) throw ParseError("empty formula", peek().offset);
    Formula f = parse_or();
    if (peek().kind != Tok::End) {
      throw ParseError("unexpected " + describe(peek()), peek().offset);
    }
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }

  const Token& expect(Tok kind, const char* what) {
    if (peek().kind != kind) {
      throw ParseError(std::string("expected ") + what + ", found " + describe(peek()), peek().offset);
    }
    return next();
  }

  Formula parse_or() {
    Formula lhs = parse_and();
    while (peek().kind == Tok::Bar || peek().kind == Tok::BarBang) {
      bool nonempty = next().kind == Tok::BarBang;
      Formula rhs = parse_and();
      lhs = nonempty ? Formula::nedisj(std::move(lhs), std::move(rhs))
                     : Formula::disj(std::move(lhs), std::move(rhs));
    }
    return lhs;
  }

  Formula parse_and() {
    Formula lhs = parse_unary();
    while (peek().kind == Tok::Amp) {
      next();
      lhs = Formula::conj(std::move(lhs), parse_unary());
    }
    return lhs;
  }

  Formula parse_unary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Dia: return Formula::dia(parse_unary());
      case Tok::Box: return Formula::box(parse_unary());
      case Tok::Nab: return Formula::nab(parse_unary());
      case Tok::Top: return Formula::top();
      case Tok::Bot: return Formula::bot();
      case Tok::Ident: return Formula::prop(std::string(t.text));
      case Tok::Tilde: {
        if (peek().kind != Tok::Ident) {
          throw ParseError("negation applies only to proposition symbols, found " + describe(peek()),
                           peek().offset);
        }
        return Formula::neg_prop(std::string(next().text));
      }
      case Tok::LParen: {
        Formula inner = parse_or();
        expect(Tok::RParen, "')'");
        return inner;
      }
      case Tok::LBracket: return parse_incl(t.offset);
      default: throw ParseError("unexpected " + describe(t), t.offset);
    }
  }

  Formula parse_incl(std::size_t open) {
    std::vector<Formula> lhs = parse_args();
    expect(Tok::Subset, "',' or '<='");
    std::vector<Formula> rhs = parse_args();
    expect(Tok::RBracket, "',' or ']'");
    if (lhs.size() != rhs.size()) {
      throw ParseError("inclusion atom arity mismatch (" + std::to_string(lhs.size()) + " vs " +
                           std::to_string(rhs.size()) + ")",
                       open);
    }
    return Formula::incl(std::move(lhs), std::move(rhs));
  }

  std::vector<Formula> parse_args() {
    std::vector<Formula> args;
    while (true) {
      std::size_t at = peek().offset;
      Formula arg = parse_or();
      if (arg.has_incl()) throw ParseError("nested inclusion atom", at);
      if (!arg.is_pure_ml()) {
        throw ParseError("inclusion atom arguments must be modal formulas", at);
      }
      args.push_back(std::move(arg));
      if (peek().kind != Tok::Comma) break;
      next();
    }
    return args;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

int precedence(Op op) {
  switch (op) {
    case Op::Or:
    case Op::NeDisj: return 1;
    case Op::And: return 2;
    default: return 3;
  }
}

void print_into(const Formula& f, std::string& out);

void print_operand(const Formula& parent, const Formula& kid, bool left, std::string& out) {
  bool plain = precedence(kid.op()) == 3 || (left && kid.op() == parent.op());
  if (!plain) out += '(';
  print_into(kid, out);
  if (!plain) out += ')';
}

void print_list(std::span<const Formula> args, std::string& out) {
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i > 0) out += ", ";
    print_into(args[i], out);
  }
}

void print_into(const Formula& f, std::string& out) {
  switch (f.op()) {
    case Op::Top: out += "top"; return;
    case Op::Bot: out += "bot"; return;
    case Op::Prop: out += f.symbol(); return;
    case Op::NegProp:
      out += '~';
      out += f.symbol();
      return;
    case Op::And:
    case Op::Or:
    case Op::NeDisj: {
      print_operand(f, f.child(0), true, out);
      out += f.op() == Op::And ? " & " : f.op() == Op::Or ? " | " : " |! ";
      print_operand(f, f.child(1), false, out);
      return;
    }
    case Op::Dia:
    case Op::Box:
    case Op::Nab: {
      out += f.op() == Op::Dia ? "dia " : f.op() == Op::Box ? "box " : "nab ";
      const Formula& sub = f.child(0);
      bool plain = precedence(sub.op()) == 3;
      if (!plain) out += '(';
      print_into(sub, out);
      if (!plain) out += ')';
      return;
    }
    case Op::Incl:
      out += '[';
      print_list(f.lhs(), out);
      out += " <= ";
      print_list(f.rhs(), out);
      out += ']';
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) {
  try {
    return Parser(text).parse();
  } catch (const ParseError&) {
    throw;
  } catch (const FormulaError& e) {
    // Constructor-level invariant failures surface as syntax errors.
    throw ParseError(e.what(), 0);
  }
}

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

}  // namespace teamlogic
