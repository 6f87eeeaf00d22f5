#include "ordrev/parser.hpp"

#include <cctype>
#include <optional>
#include <sstream>
#include <vector>

namespace ordrev {

namespace {

enum class Tok { Ident, Nat, Plus, Star, Caret, LParen, RParen, Semi, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  std::uint64_t value = 0;
  SourceSpan span;
};

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    char c = text[i];
    if (c == '#') {
      while (i < n && text[i] != '\n') ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    auto single = [&](Tok k) {
      out.push_back(Token{k, std::string(1, c), 0, {start, start + 1}});
      ++i;
    };
    switch (c) {
      case '+':
        single(Tok::Plus);
        continue;
      case '*':
        single(Tok::Star);
        continue;
      case '^':
        single(Tok::Caret);
        continue;
      case '(':
        single(Tok::LParen);
        continue;
      case ')':
        single(Tok::RParen);
        continue;
      case ';':
        single(Tok::Semi);
        continue;
      default:
        break;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t v = 0;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
      }
      out.push_back(Token{Tok::Nat, std::string(text.substr(start, i - start)), v,
                          {start, i}});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i < n && (std::isalnum(static_cast<unsigned char>(text[i])) ||
                       text[i] == '_'))
        ++i;
      out.push_back(Token{Tok::Ident, std::string(text.substr(start, i - start)),
                          0, {start, i}});
      continue;
    }
    throw ParseError("unexpected character '" + std::string(1, c) + "'",
                     {start, start + 1});
  }
  out.push_back(Token{Tok::End, "", 0, {n, n}});
  return out;
}

bool isReserved(const std::string& s) {
  static const char* words[] = {"wo", "rwo", "w",  "x",   "inf",
                                "nat", "for", "in", "aleph"};
  for (const char* word : words)
    if (s == word) return true;
  return false;
}

// A parsed summand of a statement body.
struct Element {
  enum class Kind { Omega, Number, Variable } kind;
  Ordinal omegaPart;         // Omega: w^exp * coeff, already assembled
  std::uint64_t number = 0;  // Number: literal; Variable: coefficient
  std::string varName;       // Variable
  SourceSpan span;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(lex(text)) {}

  FamilyPresentation parseFile() {
    FamilyPresentation p;
    p.entries.push_back(parseStatement());
    while (peek().kind == Tok::Semi) {
      advance();
      if (peek().kind == Tok::End) break;  // trailing semicolon
      p.entries.push_back(parseStatement());
    }
    expect(Tok::End, "end of input");
    return p;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& advance() { return tokens_[pos_++]; }

  [[noreturn]] void fail(const std::string& message,
                         std::vector<std::string> expected = {}) const {
    throw ParseError(message, peek().span, std::move(expected));
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, {what});
    return advance();
  }

  bool atIdent(const char* word) const {
    return peek().kind == Tok::Ident && peek().text == word;
  }

  Ordinal parseExponent() {
    if (peek().kind == Tok::Nat) return Ordinal::nat(advance().value);
    if (atIdent("w")) {
      advance();
      return Ordinal::omega();
    }
    if (peek().kind == Tok::LParen) {
      advance();
      Ordinal e = parseOrdExpr();
      expect(Tok::RParen, ")");
      return e;
    }
    fail("expected exponent", {"number", "w", "("});
  }

  // A sum of w-terms and numbers, no loop variables.
  Ordinal parseOrdExpr() {
    Ordinal acc = parseOrdTerm();
    while (peek().kind == Tok::Plus) {
      advance();
      acc = add(acc, parseOrdTerm());
    }
    return acc;
  }

  Ordinal parseOrdTerm() {
    Element e = parseElement();
    if (e.kind == Element::Kind::Variable)
      throw ParseError("loop variable not allowed here", e.span);
    return e.kind == Element::Kind::Omega ? e.omegaPart : Ordinal::nat(e.number);
  }

  Element parseElement() {
    Element e;
    e.span = peek().span;
    if (atIdent("w")) {
      advance();
      Ordinal exponent = Ordinal::nat(1);
      if (peek().kind == Tok::Caret) {
        advance();
        exponent = parseExponent();
      }
      std::uint64_t coeff = 1;
      if (peek().kind == Tok::Star) {
        advance();
        const Token& t = expect(Tok::Nat, "number");
        if (t.value == 0) throw ParseError("coefficient must be >= 1", t.span);
        coeff = t.value;
      }
      e.kind = Element::Kind::Omega;
      e.omegaPart = exponent.isZero() ? Ordinal::nat(coeff)
                                      : Ordinal::omegaPow(exponent, coeff);
      e.span.end = tokens_[pos_ - 1].span.end;
      return e;
    }
    if (peek().kind == Tok::Nat) {
      std::uint64_t v = advance().value;
      if (peek().kind == Tok::Star) {
        advance();
        const Token& name = expect(Tok::Ident, "loop variable");
        if (isReserved(name.text))
          throw ParseError("'" + name.text + "' is reserved", name.span);
        e.kind = Element::Kind::Variable;
        e.number = v;
        e.varName = name.text;
        e.span.end = name.span.end;
        return e;
      }
      e.kind = Element::Kind::Number;
      e.number = v;
      return e;
    }
    fail("expected term", {"w", "number"});
  }

  // "for IDENT in nat"
  std::string parseForClause() {
    advance();  // for
    const Token& name = expect(Tok::Ident, "loop variable");
    if (isReserved(name.text))
      throw ParseError("'" + name.text + "' is reserved", name.span);
    if (!atIdent("in")) fail("expected 'in'", {"in"});
    advance();
    if (!atIdent("nat")) fail("expected 'nat'", {"nat"});
    advance();
    return name.text;
  }

  ChainEntry parseStatement() {
    if (peek().kind != Tok::Ident || (!atIdent("wo") && !atIdent("rwo")))
      fail("expected statement", {"wo", "rwo"});
    Orientation orientation =
        peek().text == "wo" ? Orientation::W : Orientation::WStar;
    SourceSpan stmtSpan = advance().span;

    expect(Tok::LParen, "(");
    SourceSpan bodySpan = peek().span;
    std::vector<Element> elements;
    elements.push_back(parseElement());
    while (peek().kind == Tok::Plus) {
      advance();
      elements.push_back(parseElement());
    }
    bodySpan.end = tokens_[pos_ - 1].span.end;

    std::optional<std::string> loopVar;
    if (atIdent("for")) loopVar = parseForClause();
    expect(Tok::RParen, ")");
    if (!loopVar && atIdent("for")) loopVar = parseForClause();

    Count count = Count::fin(1);
    bool countInfinite = false;
    if (atIdent("x")) {
      advance();
      if (peek().kind == Tok::Nat) {
        const Token& t = advance();
        if (t.value == 0)
          throw ParseError("multiplicity must be >= 1", t.span);
        count = Count::fin(t.value);
      } else if (atIdent("inf")) {
        advance();
        count = Count::inf();
        countInfinite = true;
      } else if (atIdent("aleph")) {
        advance();
        expect(Tok::Nat, "aleph index");
        count = Count::inf();  // every infinite cardinal collapses
        countInfinite = true;
      } else {
        fail("expected multiplicity", {"number", "inf", "aleph"});
      }
    }
    stmtSpan.end = tokens_[pos_ - 1].span.end;

    return assemble(orientation, elements, loopVar, count, countInfinite,
                    bodySpan, stmtSpan);
  }

  ChainEntry assemble(Orientation orientation, const std::vector<Element>& elements,
                      const std::optional<std::string>& loopVar, Count count,
                      bool countInfinite, SourceSpan bodySpan,
                      SourceSpan stmtSpan) {
    std::size_t varIndex = elements.size();
    for (std::size_t i = 0; i < elements.size(); ++i) {
      if (elements[i].kind != Element::Kind::Variable) continue;
      if (varIndex != elements.size())
        throw ParseError("at most one loop-variable term allowed",
                         elements[i].span);
      varIndex = i;
    }

    if (varIndex == elements.size()) {
      if (loopVar)
        throw ParseError("loop variable '" + *loopVar + "' unused in body",
                         bodySpan);
      Ordinal value;
      for (const auto& e : elements)
        value = add(value, e.kind == Element::Kind::Omega
                               ? e.omegaPart
                               : Ordinal::nat(e.number));
      if (value.isZero())
        throw ParseError("chain type must be a nonzero ordinal", bodySpan);
      return singleEntry(orientation, value, count);
    }

    if (!loopVar)
      throw ParseError("progression body requires a for clause", stmtSpan);
    const Element& var = elements[varIndex];
    if (var.varName != *loopVar)
      throw ParseError("unknown variable '" + var.varName + "'", var.span);
    if (var.number == 0)
      throw ParseError("progression step must be >= 1", var.span);

    std::uint64_t first = 0;
    std::size_t limitEnd = varIndex;
    if (varIndex > 0 && elements[varIndex - 1].kind == Element::Kind::Number) {
      first += elements[varIndex - 1].number;
      limitEnd = varIndex - 1;
    }
    if (varIndex + 1 < elements.size()) {
      if (varIndex + 2 != elements.size() ||
          elements[varIndex + 1].kind != Element::Kind::Number)
        throw ParseError("only one trailing offset allowed after the variable",
                         elements[varIndex + 1].span);
      first += elements[varIndex + 1].number;
    }
    Ordinal gamma;
    for (std::size_t i = 0; i < limitEnd; ++i)
      gamma = add(gamma, elements[i].kind == Element::Kind::Omega
                             ? elements[i].omegaPart
                             : Ordinal::nat(elements[i].number));
    if (decompose(gamma).tail != 0)
      throw ParseError("progression limit part must be limit or zero", bodySpan);
    if (gamma.isZero() && first == 0)
      throw ParseError("chain type must be a nonzero ordinal", bodySpan);
    if (countInfinite)
      throw ParseError("progression multiplicity must be finite", stmtSpan);
    return progressionEntry(orientation, gamma, first, var.number,
                            count.finiteValue());
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

FamilyPresentation parse(std::string_view text) { return Parser(text).parseFile(); }

std::string canonicalText(const FamilyPresentation& p) {
  std::ostringstream os;
  for (const auto& e : p.entries) {
    os << (e.orientation == Orientation::W ? "wo(" : "rwo(");
    if (e.isSingle()) {
      const auto& s = e.single();
      os << toText(s.value) << ")";
      if (s.count.isInf())
        os << " x inf";
      else if (s.count.finiteValue() != 1)
        os << " x " << s.count.finiteValue();
    } else {
      const auto& run = e.progression();
      if (!run.gamma.isZero()) os << toText(run.gamma) << " + ";
      if (run.first != 0) os << run.first << " + ";
      os << run.step << "*n) for n in nat";
      if (run.copies != 1) os << " x " << run.copies;
    }
    os << ";\n";
  }
  return os.str();
}

}  // namespace ordrev
