#include "cyclezeta/poly_parser.hpp"

#include <cctype>
#include <string>

#include "cyclezeta/errors.hpp"

namespace cyclezeta {

namespace {

constexpr int kMaxPower = 256;

class Parser {
 public:
  Parser(std::string_view text, VarStyle style, int width) : text_(text), style_(style), width_(width) {}

  IntPoly parse() {
    IntPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("polynomial parse error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  IntPoly expr() {
    IntPoly acc = term();
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  IntPoly term() {
    IntPoly acc = unary();
    while (accept('*')) acc = acc * unary();
    return acc;
  }

  IntPoly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  IntPoly power() {
    IntPoly base = atom();
    if (accept('^')) {
      skip_ws();
      const std::string digits = read_digits();
      if (digits.empty()) fail("expected exponent");
      if (digits.size() > 4 || std::stoi(digits) > kMaxPower) fail("exponent too large");
      return base.pow(static_cast<unsigned>(std::stoi(digits)));
    }
    return base;
  }

  std::string read_digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  IntPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      IntPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return IntPoly::constant(width_, mpz_class(read_digits()));
    }
    ++pos_;
    return IntPoly::variable(width_, variable_index(c));
  }

  int read_index(bool optional) {
    const std::string digits = read_digits();
    if (digits.empty()) {
      if (optional) return 1;
      fail("expected variable index");
    }
    if (digits.size() != 1 || digits == "0") fail("variable index must be 1..9");
    return digits[0] - '0';
  }

  int variable_index(char c) {
    switch (style_) {
      case VarStyle::Affine:
        if (c == 'z') {
          const int i = read_index(true);
          if (i > width_) fail("variable z" + std::to_string(i) + " exceeds nvars");
          return i - 1;
        }
        break;
      case VarStyle::Pairs:
        if (c == 'X' || c == 'Y') {
          const int i = read_index(false);
          if (2 * i > width_) fail("variable index exceeds the number of pairs");
          return 2 * (i - 1) + (c == 'Y' ? 1 : 0);
        }
        break;
      case VarStyle::FunctionField:
        if (c == 't') return 0;
        break;
    }
    --pos_;
    fail("unknown symbol '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  VarStyle style_;
  int width_;
  std::size_t pos_ = 0;
};

int infer_count(std::string_view text, VarStyle style) {
  if (style == VarStyle::FunctionField) return 1;
  const char a = style == VarStyle::Affine ? 'z' : 'X';
  const char b = style == VarStyle::Affine ? 'z' : 'Y';
  int best = 1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != a && text[i] != b) continue;
    if (i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1]))) {
      best = std::max(best, text[i + 1] - '0');
    }
  }
  return best;
}

}  // namespace

IntPoly parse_poly(std::string_view text, VarStyle style, int nvars) {
  if (nvars < 0 || nvars > 9) throw ParseError("number of variables must be in 0..9");
  const int count = nvars == 0 ? infer_count(text, style) : nvars;
  const int width = style == VarStyle::Pairs ? 2 * count : (style == VarStyle::FunctionField ? 1 : count);
  return Parser(text, style, width).parse();
}

}  // namespace cyclezeta
