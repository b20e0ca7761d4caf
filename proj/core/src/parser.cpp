#include "charclass/parser.hpp"

#include <cctype>

namespace charclass {

namespace {

class Parser {
public:
  Parser(const std::string& text, ContextPtr ctx, Field field)
      : text_(text), ctx_(std::move(ctx)), field_(field) {}

  Polynomial parse() {
    Polynomial p = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& what) {
    throw UsageError("parse error at position " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial parse_expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial p = parse_term();
    if (neg) p = -p;
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        p = p + parse_term();
      } else if (c == '-') {
        ++pos_;
        p = p - parse_term();
      } else {
        return p;
      }
    }
  }

  Polynomial parse_term() {
    Polynomial p = parse_power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        p = p * parse_power();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c)) || c == '_' ||
                 std::isdigit(static_cast<unsigned char>(c))) {
        p = p * parse_power();  // implicit multiplication
      } else {
        return p;
      }
    }
  }

  Polynomial parse_power() {
    Polynomial base = parse_atom();
    if (eat('^')) {
      long e = parse_integer();
      if (e < 0) fail("negative exponent");
      Polynomial r = Polynomial::constant(ctx_, Scalar::one(field_));
      for (long i = 0; i < e; ++i) r = r * base;
      return r;
    }
    return base;
  }

  Polynomial parse_atom() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Polynomial p = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string num = parse_digits();
      if (eat('/')) {
        std::string den = parse_digits();
        return Polynomial::constant(ctx_, Scalar::from_string(num + "/" + den, field_));
      }
      return Polynomial::constant(ctx_, Scalar::from_string(num, field_));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (pos_ < text_.size()) {
        char d = text_[pos_];
        if (std::isalnum(static_cast<unsigned char>(d)) || d == '_') {
          id += d;
          ++pos_;
        } else {
          break;
        }
      }
      auto idx = ctx_->index_of(id);
      if (!idx) fail("unknown variable '" + id + "'");
      return Polynomial::variable(ctx_, field_, *idx);
    }
    fail("expected a coefficient, variable, or '('");
  }

  std::string parse_digits() {
    skip_ws();
    std::string s;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      s += text_[pos_];
      ++pos_;
    }
    if (s.empty()) fail("expected digits");
    return s;
  }

  long parse_integer() {
    bool neg = eat('-');
    long v = std::stol(parse_digits());
    return neg ? -v : v;
  }

  const std::string& text_;
  ContextPtr ctx_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx, const Field& field) {
  return Parser(text, ctx, field).parse();
}

}  // namespace charclass
