#ifndef CONNEXIVE_DETAIL_LEXER_HPP
#define CONNEXIVE_DETAIL_LEXER_HPP

// Token stream and formula parser, shared by the formula grammar, the
// conditional-event surface syntax "( f | g )", and the compound grammar.

#include <cctype>
#include <string>
#include <vector>

#include "connexive/error.hpp"
#include "connexive/formula.hpp"

namespace connexive::detail {

struct Token {
  enum class Type { Ident, Top, Bot, Given, Tilde, Amp, Pipe, LParen, RParen, End };
  Type type;
  std::string text;
  std::size_t offset;
};

inline const char* token_name(Token::Type t) {
  switch (t) {
    case Token::Type::Ident: return "IDENT";
    case Token::Type::Top: return "TOP";
    case Token::Type::Bot: return "BOT";
    case Token::Type::Given: return "given";
    case Token::Type::Tilde: return "~";
    case Token::Type::Amp: return "&";
    case Token::Type::Pipe: return "|";
    case Token::Type::LParen: return "(";
    case Token::Type::RParen: return ")";
    case Token::Type::End: return "end of input";
  }
  return "?";
}

inline std::vector<Token> tokenize(const std::string& text) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_'))
        ++j;
      std::string word = text.substr(i, j - i);
      Token::Type type = Token::Type::Ident;
      if (word == "TOP") type = Token::Type::Top;
      else if (word == "BOT") type = Token::Type::Bot;
      else if (word == "given") type = Token::Type::Given;
      out.push_back({type, word, start});
      i = j;
      continue;
    }
    Token::Type type;
    switch (ch) {
      case '~': type = Token::Type::Tilde; break;
      case '&': type = Token::Type::Amp; break;
      case '|': type = Token::Type::Pipe; break;
      case '(': type = Token::Type::LParen; break;
      case ')': type = Token::Type::RParen; break;
      default:
        throw ParseError("unexpected character '" + std::string(1, ch) +
                             "' at byte " + std::to_string(start),
                         start, {"~", "&", "|", "(", ")", "IDENT", "TOP", "BOT"});
    }
    out.push_back({type, std::string(1, ch), start});
    ++i;
  }
  out.push_back({Token::Type::End, "", text.size()});
  return out;
}

class FormulaParser {
 public:
  explicit FormulaParser(const std::vector<Token>& tokens) : tokens_(tokens) {}

  Formula parse_disj() {
    Formula f = parse_conj();
    while (peek().type == Token::Type::Pipe) {
      ++pos_;
      f = Formula::disj(f, parse_conj());
    }
    return f;
  }

  Formula parse_conj() {
    Formula f = parse_neg();
    while (peek().type == Token::Type::Amp) {
      ++pos_;
      f = Formula::conj(f, parse_neg());
    }
    return f;
  }

  Formula parse_neg() {
    if (peek().type == Token::Type::Tilde) {
      ++pos_;
      return Formula::negate(parse_neg());
    }
    return parse_atomexpr();
  }

  Formula parse_atomexpr() {
    const Token& t = peek();
    switch (t.type) {
      case Token::Type::Ident:
        ++pos_;
        return Formula::atom(t.text);
      case Token::Type::Top:
        ++pos_;
        return Formula::top();
      case Token::Type::Bot:
        ++pos_;
        return Formula::bot();
      case Token::Type::LParen: {
        ++pos_;
        Formula f = parse_disj();
        expect(Token::Type::RParen);
        return f;
      }
      default:
        fail({"IDENT", "TOP", "BOT", "~", "("});
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  void expect(Token::Type type) {
    if (peek().type != type) fail({token_name(type)});
    ++pos_;
  }
  [[noreturn]] void fail(std::vector<std::string> expected) const {
    const Token& t = peek();
    std::string got =
        t.type == Token::Type::End ? "end of input" : "'" + t.text + "'";
    throw ParseError("syntax error at byte " + std::to_string(t.offset) +
                         ": unexpected " + got,
                     t.offset, std::move(expected));
  }
  std::size_t pos() const { return pos_; }
  void set_pos(std::size_t p) { pos_ = p; }

 private:
  const std::vector<Token>& tokens_;
  std::size_t pos_ = 0;
};

}  // namespace connexive::detail

#endif  // CONNEXIVE_DETAIL_LEXER_HPP
