#include "charp/parser.hpp"

#include "charp/error.hpp"

#include <cctype>

namespace charp {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
bool digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

class Parser {
 public:
  Parser(const Ring& ring, std::string_view text) : ring_(ring), text_(text) {}

  Polynomial parse_all() {
    Polynomial p = expr();
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

  std::vector<Polynomial> parse_list() {
    std::vector<Polynomial> out;
    skip();
    bool wrapped = false;
    // "(a, b)" is a list; "(a)" or "(a)*b" is a single expression
    if (peek() == '(') {
      std::size_t save = pos_;
      int depth = 0;
      bool top_comma = false;
      for (std::size_t i = pos_; i < text_.size(); ++i) {
        if (text_[i] == '(') ++depth;
        else if (text_[i] == ')') {
          if (--depth == 0) {
            std::size_t j = i + 1;
            while (j < text_.size() && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
            wrapped = (j == text_.size()) && top_comma;
            break;
          }
        } else if (text_[i] == ',' && depth == 1) top_comma = true;
      }
      if (wrapped) ++pos_;
      else pos_ = save;
    }
    skip();
    if (wrapped && peek() == ')') {
      ++pos_;
    } else {
      out.push_back(expr());
      skip();
      while (peek() == ',') {
        ++pos_;
        out.push_back(expr());
        skip();
      }
      if (wrapped) {
        if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
        ++pos_;
      }
    }
    skip();
    if (pos_ != text_.size()) throw SyntaxError(pos_, std::string("unexpected '") + text_[pos_] + "'");
    return out;
  }

 private:
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    bool negate = false;
    char c = peek();
    if (c == '-' || c == '+') {
      negate = c == '-';
      ++pos_;
    }
    Polynomial acc = term();
    if (negate) acc = -acc;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial rhs = term();
      acc = c == '+' ? acc + rhs : acc - rhs;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (digit(c) || ident_start(c) || c == '(') {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    while (peek() == '^') {
      ++pos_;
      skip();
      if (pos_ >= text_.size() || !digit(text_[pos_])) throw SyntaxError(pos_, "expected a non-negative integer exponent");
      base = poly_pow(base, integer());
    }
    return base;
  }

  Polynomial primary() {
    char c = peek();
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    if (digit(c)) return Polynomial::constant(ring_, integer());
    if (ident_start(c)) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && ident_char(text_[pos_])) ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      const auto& vars = ring_.vars();
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return Polynomial::variable(ring_, i);
      fail(ErrorCode::UnknownVariable, "unknown variable '" + name + "' at offset " + std::to_string(start));
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  Integer integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && digit(text_[pos_])) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)), 10);
  }

  const Ring& ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const Ring& ring, std::string_view text) { return Parser(ring, text).parse_all(); }

std::vector<Polynomial> parse_poly_list(const Ring& ring, std::string_view text) {
  return Parser(ring, text).parse_list();
}

}  // namespace charp
