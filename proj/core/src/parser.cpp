#include <algorithm>
#include <cctype>
#include <string>
#include <vector>

#include "gact/error.hpp"
#include "gact/formula.hpp"

namespace gact {

namespace {

enum class Tok { Ident, LParen, RParen, Comma, Dot, Eq, Neq, Not, And, Or, Arrow, Act, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_' || s[i] == '\'')) ++i;
      out.push_back({Tok::Ident, std::string(s.substr(start, i - start)), start});
      continue;
    }
    if (c == 0xC2 && i + 1 < s.size() && static_cast<unsigned char>(s[i + 1]) == 0xB7) {
      out.push_back({Tok::Act, "·", start});
      i += 2;
      continue;
    }
    auto three = s.substr(i, 3);
    if (three == "≠" || three == "∧" || three == "∨") {
      out.push_back({three == "≠" ? Tok::Neq : three == "∧" ? Tok::And : Tok::Or, std::string(three), start});
      i += 3;
      continue;
    }
    if (s.substr(i, 2) == "¬") {
      out.push_back({Tok::Not, "¬", start});
      i += 2;
      continue;
    }
    auto two = s.substr(i, 2);
    if (two == "!=") {
      out.push_back({Tok::Neq, "!=", start});
      i += 2;
      continue;
    }
    if (two == "->") {
      out.push_back({Tok::Arrow, "->", start});
      i += 2;
      continue;
    }
    Tok k;
    switch (c) {
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case ',': k = Tok::Comma; break;
      case '.': k = Tok::Dot; break;
      case '=': k = Tok::Eq; break;
      case '!': k = Tok::Not; break;
      case '&': k = Tok::And; break;
      case '|': k = Tok::Or; break;
      case '*': k = Tok::Act; break;
      default:
        throw SyntaxError(start, std::string("unexpected character '") + static_cast<char>(c) + "'");
    }
    out.push_back({k, std::string(1, static_cast<char>(c)), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, const FiniteGroup& g, const std::optional<std::vector<std::string>>& free)
      : toks_(std::move(toks)), g_(g), free_(free) {}

  Formula run() {
    Formula f = formula();
    if (peek().kind != Tok::End) throw SyntaxError(peek().pos, "unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() { return toks_[std::min(pos_++, toks_.size() - 1)]; }

  void expect(Tok k, const char* what) {
    if (peek().kind != k) throw SyntaxError(peek().pos, std::string("expected ") + what);
    ++pos_;
  }

  bool at_quantifier() const {
    return peek().kind == Tok::Ident && (peek().text == "E" || peek().text == "A") && peek(1).kind == Tok::Ident &&
           peek(2).kind == Tok::Dot;
  }

  Formula formula() {
    if (at_quantifier()) return quantifier();
    return implication();
  }

  Formula quantifier() {
    bool exists = next().text == "E";
    std::string var = next().text;
    expect(Tok::Dot, "'.'");
    bound_.push_back(var);
    Formula body = formula();
    bound_.pop_back();
    return exists ? f_exists(var, body) : f_forall(var, body);
  }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind != Tok::Arrow) return lhs;
    ++pos_;
    Formula rhs = at_quantifier() ? quantifier() : implication();
    return f_implies(lhs, rhs);
  }

  Formula disjunction() {
    std::vector<Formula> kids{conjunction()};
    while (peek().kind == Tok::Or) {
      ++pos_;
      kids.push_back(at_quantifier() ? quantifier() : conjunction());
    }
    return f_or(std::move(kids));
  }

  Formula conjunction() {
    std::vector<Formula> kids{unary()};
    while (peek().kind == Tok::And) {
      ++pos_;
      kids.push_back(at_quantifier() ? quantifier() : unary());
    }
    return f_and(std::move(kids));
  }

  Formula unary() {
    if (peek().kind == Tok::Not) {
      ++pos_;
      if (at_quantifier()) return f_not(quantifier());
      return f_not(unary());
    }
    if (at_quantifier()) return quantifier();
    if (peek().kind == Tok::LParen) {
      std::size_t save = pos_;
      try {
        return atom();
      } catch (const SyntaxError&) {
        pos_ = save;
      }
      ++pos_;
      Formula f = formula();
      expect(Tok::RParen, "')'");
      return f;
    }
    return atom();
  }

  Formula atom() {
    const Token& t = peek();
    if (t.kind == Tok::Ident && (t.text == "true" || t.text == "false") && peek(1).kind != Tok::Act) {
      ++pos_;
      return t.text == "true" ? f_true() : f_false();
    }
    if (t.kind == Tok::Ident && t.text == "R" && peek(1).kind == Tok::LParen) {
      pos_ += 2;
      Term a = term();
      expect(Tok::Comma, "','");
      Term b = term();
      expect(Tok::RParen, "')'");
      return f_rel(a, b);
    }
    Term a = term();
    if (peek().kind == Tok::Eq) {
      ++pos_;
      return f_eq(a, term());
    }
    if (peek().kind == Tok::Neq) {
      ++pos_;
      return f_neq(a, term());
    }
    throw SyntaxError(peek().pos, "expected '=' or '!='");
  }

  Term term() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Term inner = term();
      expect(Tok::RParen, "')'");
      return inner;
    }
    if (t.kind != Tok::Ident) throw SyntaxError(t.pos, "expected a term");
    if (peek(1).kind == Tok::Act) {
      auto g = g_.find(t.text);
      if (!g) throw Error(Errc::UnknownGroupElement, "unknown group element '" + t.text + "' at position " +
                                                         std::to_string(t.pos));
      pos_ += 2;
      return apply(g_, *g, term());
    }
    ++pos_;
    check_bound(t);
    return Term{g_.identity(), t.text};
  }

  void check_bound(const Token& t) const {
    if (!free_) return;
    if (std::find(bound_.begin(), bound_.end(), t.text) != bound_.end()) return;
    if (std::find(free_->begin(), free_->end(), t.text) != free_->end()) return;
    throw Error(Errc::UnboundVariable, "unbound variable '" + t.text + "' at position " + std::to_string(t.pos));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  const FiniteGroup& g_;
  const std::optional<std::vector<std::string>>& free_;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse(std::string_view text, const FiniteGroup& g, const std::optional<std::vector<std::string>>& free_vars) {
  Parser p(tokenize(text), g, free_vars);
  return p.run();
}

}  // namespace gact
