#include "musurf/parser.hpp"

#include <algorithm>
#include <cctype>

namespace musurf {

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::span<const Var> vars) : text_(text), vars_(vars) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("unexpected trailing input", pos_);
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool eat(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial p = eat('-') ? -term() : (static_cast<void>(eat('+')), term());
    while (true) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p = p + term();
      } else if (c == '-') {
        ++pos_;
        p = p - term();
      } else {
        return p;
      }
    }
  }

  Polynomial term() {
    Polynomial p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }

  Polynomial factor() {
    Polynomial base = atom();
    if (eat('^')) {
      std::size_t at = pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError("expected nonnegative integer exponent", at);
      unsigned long e = std::stoul(text_.substr(start, pos_ - start));
      if (e > 512) throw ParseError("exponent too large", start);
      return base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  Polynomial atom() {
    char c = peek();
    std::size_t at = pos_;
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!eat(')')) throw ParseError("expected ')'", pos_);
      return p;
    }
    if (c == '-') {
      ++pos_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number(at);
    if (std::isalpha(static_cast<unsigned char>(c))) return variable(at);
    throw ParseError("expected number, variable or '('", at);
  }

  Polynomial number(std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string num = text_.substr(start, pos_ - start);
    // Rational literal "p/q": the slash binds to the literal, not a division
    // operator.
    if (pos_ < text_.size() && text_[pos_] == '/') {
      std::size_t save = pos_;
      ++pos_;
      std::size_t dstart = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (dstart == pos_) {
        pos_ = save;
        throw ParseError("expected denominator digits", save + 1);
      }
      std::string den = text_.substr(dstart, pos_ - dstart);
      Rat q = rat_parse(num + "/" + den);
      if (q.get_den() == 0) throw ParseError("zero denominator", at);
      return Polynomial::constant(q);
    }
    return Polynomial::constant(rat_parse(num));
  }

  Polynomial variable(std::size_t at) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto v = var_from_name(name);
    if (!v) throw ParseError("unknown variable '" + name + "'", at);
    if (std::find(vars_.begin(), vars_.end(), *v) == vars_.end())
      throw ParseError("variable '" + name + "' not declared for this ring", at);
    return Polynomial::variable(*v);
  }

  const std::string& text_;
  std::span<const Var> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, std::span<const Var> vars) {
  return Parser(text, vars).run();
}

}  // namespace musurf
