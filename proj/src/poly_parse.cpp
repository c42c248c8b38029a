#include "seqreg/poly_parse.hpp"

#include <cctype>

#include "seqreg/errors.hpp"

namespace seqreg {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := factor ('*'? factor)*
// factor := atom ('^' integer)?
// atom   := number ['/' number] | identifier | '(' expr ')'
class PolyParser {
 public:
  PolyParser(std::string_view text, Field field, const std::vector<std::string>& vars, int line, int column)
      : text_(text), field_(field), vars_(vars), line_(line), column_(column) {}

  Poly parse() {
    skip_ws();
    if (pos_ >= text_.size()) fail("empty polynomial");
    Poly p = expr();
    skip_ws();
    if (pos_ < text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg, line_, column_ + static_cast<int>(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  int nvars() const { return static_cast<int>(vars_.size()); }

  Poly expr() {
    Poly acc(field_, nvars());
    bool neg = false;
    if (peek('+')) {
      ++pos_;
    } else if (peek('-')) {
      ++pos_;
      neg = true;
    }
    Poly t = term();
    acc = neg ? -t : t;
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = acc + term();
      } else if (peek('-')) {
        ++pos_;
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  bool starts_atom() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
           c == '(';
  }

  Poly term() {
    Poly acc = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        acc = acc * factor();
      } else if (starts_atom()) {
        acc = acc * factor();
      } else {
        break;
      }
    }
    return acc;
  }

  Poly factor() {
    Poly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent after '^'");
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 4) fail("exponent too large");
      base = base.pow(std::stoi(digits));
    }
    return base;
  }

  std::string number() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Poly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string num = number();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = number();
        if (den.empty()) fail("expected denominator");
        num += "/" + den;
      }
      try {
        return Poly::constant(field_, nvars(), field_.parse(num));
      } catch (const InvalidInput& e) {
        pos_ = start;
        fail(e.what());
      }
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      for (int i = 0; i < nvars(); ++i) {
        if (vars_[static_cast<std::size_t>(i)] == name) return Poly::variable(field_, nvars(), i);
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  Field field_;
  const std::vector<std::string>& vars_;
  int line_;
  int column_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Field field, const std::vector<std::string>& vars, int line, int column) {
  return PolyParser(text, field, vars, line, column).parse();
}

}  // namespace seqreg
