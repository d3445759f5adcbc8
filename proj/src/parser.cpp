#include "jluk/parser.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>
#include <vector>

namespace jluk {

namespace {

enum class Tok {
  Ident, Arrow, Not, AndOp, OrOp, Colon,
  LParen, RParen, LBracket, RBracket, Star, Plus, End,
};

const char* tok_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Arrow: return "'->'";
    case Tok::Not: return "'~'";
    case Tok::AndOp: return "'&'";
    case Tok::OrOp: return "'|'";
    case Tok::Colon: return "':'";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBracket: return "'['";
    case Tok::RBracket: return "']'";
    case Tok::Star: return "'*'";
    case Tok::Plus: return "'+'";
    case Tok::End: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
public:
  explicit Lexer(std::string_view src) : src_(src) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (pos_ < src_.size()) {
      char c = src_[pos_];
      if (c == '#') { // comment to end of line
        while (pos_ < src_.size() && src_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
    std::size_t at = pos_;
    if (pos_ >= src_.size()) {
      tok_ = {Tok::End, "", at};
      return;
    }
    char c = src_[pos_];
    if (c >= 'a' && c <= 'z') {
      std::size_t start = pos_;
      while (pos_ < src_.size() &&
             ((src_[pos_] >= 'a' && src_[pos_] <= 'z') ||
              (src_[pos_] >= '0' && src_[pos_] <= '9') || src_[pos_] == '_'))
        ++pos_;
      tok_ = {Tok::Ident, std::string(src_.substr(start, pos_ - start)), at};
      return;
    }
    switch (c) {
      case '-':
        if (pos_ + 1 < src_.size() && src_[pos_ + 1] == '>') {
          pos_ += 2;
          tok_ = {Tok::Arrow, "->", at};
          return;
        }
        throw ParseError("syntax error at offset " + std::to_string(at) +
                             ": '-' must be part of '->'",
                         at, {"'->'"});
      case '~': ++pos_; tok_ = {Tok::Not, "~", at}; return;
      case '&': ++pos_; tok_ = {Tok::AndOp, "&", at}; return;
      case '|': ++pos_; tok_ = {Tok::OrOp, "|", at}; return;
      case ':': ++pos_; tok_ = {Tok::Colon, ":", at}; return;
      case '(': ++pos_; tok_ = {Tok::LParen, "(", at}; return;
      case ')': ++pos_; tok_ = {Tok::RParen, ")", at}; return;
      case '[': ++pos_; tok_ = {Tok::LBracket, "[", at}; return;
      case ']': ++pos_; tok_ = {Tok::RBracket, "]", at}; return;
      case '*': ++pos_; tok_ = {Tok::Star, "*", at}; return;
      case '+': ++pos_; tok_ = {Tok::Plus, "+", at}; return;
      default:
        throw ParseError("syntax error at offset " + std::to_string(at) +
                             ": unexpected character '" + std::string(1, c) +
                             "'",
                         at);
    }
  }

  std::string_view src_;
  std::size_t pos_ = 0;
  Token tok_{Tok::End, "", 0};
};

[[noreturn]] void fail_expecting(const Token& got,
                                 std::vector<std::string> expected) {
  std::ostringstream msg;
  msg << "syntax error at offset " << got.offset << ": expected ";
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i) msg << (i + 1 == expected.size() ? " or " : ", ");
    msg << expected[i];
  }
  msg << ", got " << (got.kind == Tok::End ? "end of input"
                                           : "'" + got.text + "'");
  throw ParseError(msg.str(), got.offset, std::move(expected));
}

Token expect(Lexer& lx, Tok kind) {
  if (lx.peek().kind != kind) fail_expecting(lx.peek(), {tok_name(kind)});
  return lx.next();
}

TermPtr term_from_ident(const Token& tok) {
  char c = tok.text[0];
  if (c == 'c') return Term::constant(tok.text);
  if (c == 'x' || c == 'y') return Term::variable(tok.text);
  throw ParseError("syntax error at offset " + std::to_string(tok.offset) +
                       ": term identifier '" + tok.text +
                       "' must begin with 'c' (constant) or 'x'/'y' (variable)",
                   tok.offset);
}

TermPtr parse_term_expr(Lexer& lx) {
  const Token& t = lx.peek();
  if (t.kind == Tok::Ident) return term_from_ident(lx.next());
  if (t.kind == Tok::LBracket) {
    lx.next();
    TermPtr left = parse_term_expr(lx);
    const Token& op = lx.peek();
    if (op.kind != Tok::Star && op.kind != Tok::Plus)
      fail_expecting(op, {"'*'", "'+'"});
    Tok opk = lx.next().kind;
    TermPtr right = parse_term_expr(lx);
    expect(lx, Tok::RBracket);
    return opk == Tok::Star ? Term::app(left, right) : Term::sum(left, right);
  }
  fail_expecting(t, {"identifier", "'['"});
}

FormulaPtr parse_impl(Lexer& lx);

// The smallest formula unit: an atom, a negation, a justification t:unit,
// or a parenthesised formula. Justification scope is exactly one unit, so
// t:p -> q parses as (t:p) -> q.
FormulaPtr parse_unit(Lexer& lx) {
  const Token& t = lx.peek();
  switch (t.kind) {
    case Tok::Not:
      lx.next();
      return Formula::neg(parse_unit(lx));
    case Tok::LParen: {
      lx.next();
      FormulaPtr f = parse_impl(lx);
      expect(lx, Tok::RParen);
      return f;
    }
    case Tok::LBracket: {
      TermPtr term = parse_term_expr(lx);
      expect(lx, Tok::Colon);
      return Formula::just(term, parse_unit(lx));
    }
    case Tok::Ident: {
      Token id = lx.next();
      if (lx.peek().kind == Tok::Colon) {
        TermPtr term = term_from_ident(id);
        lx.next();
        return Formula::just(term, parse_unit(lx));
      }
      return Formula::atom(id.text);
    }
    default:
      fail_expecting(t, {"identifier", "'~'", "'('", "'['"});
  }
}

FormulaPtr parse_and(Lexer& lx) {
  FormulaPtr f = parse_unit(lx);
  while (lx.peek().kind == Tok::AndOp) {
    lx.next();
    f = Formula::conj(f, parse_unit(lx));
  }
  return f;
}

FormulaPtr parse_or(Lexer& lx) {
  FormulaPtr f = parse_and(lx);
  while (lx.peek().kind == Tok::OrOp) {
    lx.next();
    f = Formula::disj(f, parse_and(lx));
  }
  return f;
}

FormulaPtr parse_impl(Lexer& lx) {
  FormulaPtr f = parse_or(lx);
  if (lx.peek().kind == Tok::Arrow) {
    lx.next();
    return Formula::impl(f, parse_impl(lx)); // right associative
  }
  return f;
}

// ---- script format ----------------------------------------------------

std::string strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  if (hash != std::string_view::npos) line = line.substr(0, hash);
  std::size_t b = line.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return "";
  std::size_t e = line.find_last_not_of(" \t\r");
  return std::string(line.substr(b, e - b + 1));
}

[[noreturn]] void script_fail(std::size_t lineno, const std::string& what) {
  throw ParseError("script line " + std::to_string(lineno) + ": " + what, 0);
}

FormulaPtr parse_embedded_formula(const std::string& text, std::size_t lineno) {
  try {
    return parse_formula(text);
  } catch (const ParseError& e) {
    script_fail(lineno, e.what());
  }
}

std::uint32_t parse_ref(const std::string& word, std::size_t lineno) {
  if (word.empty()) script_fail(lineno, "missing rule reference");
  for (char c : word)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      script_fail(lineno, "rule reference '" + word + "' is not a number");
  long v = std::strtol(word.c_str(), nullptr, 10);
  if (v < 1) script_fail(lineno, "rule reference must be at least 1");
  return static_cast<std::uint32_t>(v);
}

std::vector<std::string> split_words(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string w;
  while (in >> w) out.push_back(w);
  return out;
}

SchemeId axiom_tag(const std::string& word, std::size_t lineno) {
  if (word == "ax1") return SchemeId::L1;
  if (word == "ax2") return SchemeId::L2;
  if (word == "ax3") return SchemeId::L3;
  script_fail(lineno, "unknown axiom tag '" + word + "'");
}

Rule parse_rule(const std::string& text, std::size_t lineno) {
  std::vector<std::string> w = split_words(text);
  if (w.empty()) script_fail(lineno, "missing rule after ';'");
  const std::string& head = w[0];
  auto need = [&](std::size_t n) {
    if (w.size() != n)
      script_fail(lineno, "rule '" + head + "' expects " +
                              std::to_string(n - 1) + " argument(s)");
  };
  if (head == "premise") { need(1); return Rule::premise(); }
  if (head == "ax1" || head == "ax2" || head == "ax3") {
    need(1);
    return Rule::axiom(axiom_tag(head, lineno));
  }
  if (head == "cs") {
    need(2);
    return Rule::cs_axiom(axiom_tag(w[1], lineno));
  }
  if (head == "app") { need(1); return Rule::app_axiom(); }
  if (head == "sum") { need(1); return Rule::sum_axiom(); }
  if (head == "mp") {
    need(3);
    return Rule::mp(parse_ref(w[1], lineno), parse_ref(w[2], lineno));
  }
  if (head == "appintro") {
    need(3);
    return Rule::app_intro(parse_ref(w[1], lineno), parse_ref(w[2], lineno));
  }
  script_fail(lineno, "unknown rule '" + head + "'");
}

} // namespace

FormulaPtr parse_formula(std::string_view text) {
  Lexer lx(text);
  FormulaPtr f = parse_impl(lx);
  if (lx.peek().kind != Tok::End) fail_expecting(lx.peek(), {"end of input"});
  return f;
}

TermPtr parse_term(std::string_view text) {
  Lexer lx(text);
  TermPtr t = parse_term_expr(lx);
  if (lx.peek().kind != Tok::End) fail_expecting(lx.peek(), {"end of input"});
  return t;
}

ProofScript parse_script(std::string_view text) {
  ProofScript script;
  bool calculus_set = false;
  bool saw_numbered = false;
  std::size_t lineno = 0;
  std::size_t start = 0;

  while (start <= text.size()) {
    std::size_t nl = text.find('\n', start);
    std::string_view raw = text.substr(
        start, nl == std::string_view::npos ? text.size() - start : nl - start);
    ++lineno;
    start = (nl == std::string_view::npos) ? text.size() + 1 : nl + 1;

    std::string line = strip_comment(raw);
    if (line.empty()) continue;

    if (line.rfind("system:", 0) == 0) {
      if (calculus_set) script_fail(lineno, "duplicate system header");
      if (!script.premises.empty() || saw_numbered)
        script_fail(lineno, "system header must come first");
      std::string value = strip_comment(line.substr(7));
      if (value == "luk") script.calculus = Calculus::Luk;
      else if (value == "jl") script.calculus = Calculus::JL;
      else script_fail(lineno, "system must be 'luk' or 'jl', got '" + value + "'");
      calculus_set = true;
      continue;
    }

    if (line.rfind("premise:", 0) == 0) {
      if (saw_numbered)
        script_fail(lineno, "premises must precede the numbered lines");
      script.premises.push_back(
          parse_embedded_formula(line.substr(8), lineno));
      continue;
    }

    // numbered line:  N. <formula> ; <rule>
    std::size_t dot = line.find('.');
    if (dot == std::string::npos || dot == 0)
      script_fail(lineno,
                  "expected 'system:', 'premise:' or a numbered proof line");
    std::string num = line.substr(0, dot);
    for (char c : num)
      if (!std::isdigit(static_cast<unsigned char>(c)))
        script_fail(lineno, "line number '" + num + "' is not a number");
    std::size_t semi = line.find(';', dot);
    if (semi == std::string::npos)
      script_fail(lineno, "missing ';' before the rule");
    ProofLine pl;
    pl.index = static_cast<std::uint32_t>(std::strtoul(num.c_str(), nullptr, 10));
    pl.formula =
        parse_embedded_formula(line.substr(dot + 1, semi - dot - 1), lineno);
    pl.rule = parse_rule(line.substr(semi + 1), lineno);
    script.lines.push_back(pl);
    saw_numbered = true;
  }

  validate_structure(script);
  return script;
}

} // namespace jluk
