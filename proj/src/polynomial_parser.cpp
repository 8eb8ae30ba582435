// Recursive-descent parser for the polynomial text grammar:
//
//   poly   := [sign] term (sign term)*
//   term   := factor (['*'] factor)*
//   factor := integer | var ['^' integer]
//   var    := 'x' | 'y' | 'z'
//
// Whitespace is ignored everywhere. Error positions refer to the original text.

#include <cctype>
#include <string>
#include <vector>

#include "duval/errors.hpp"
#include "duval/polynomial.hpp"

namespace duval {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (std::isspace(static_cast<unsigned char>(text[i]))) continue;
      chars_.push_back(text[i]);
      origin_.push_back(i);
    }
    end_offset_ = text.size();
  }

  Polynomial3 parse() {
    if (chars_.empty()) fail("empty polynomial");
    Polynomial3 result;
    bool negative = false;
    if (peek() == '+' || peek() == '-') negative = take() == '-';
    Polynomial3 t = term();
    result += negative ? -t : t;
    while (!at_end()) {
      const char c = peek();
      if (c != '+' && c != '-') fail(std::string("unexpected '") + c + "'");
      take();
      t = term();
      result += c == '-' ? -t : t;
    }
    return result;
  }

 private:
  bool at_end() const { return pos_ >= chars_.size(); }
  char peek() const { return at_end() ? '\0' : chars_[pos_]; }
  char take() { return chars_[pos_++]; }

  [[noreturn]] void fail(const std::string& message) const {
    const std::size_t where = at_end() ? end_offset_ : origin_[pos_];
    throw ParseError(message + " at position " + std::to_string(where), where);
  }

  static bool starts_factor(char c) {
    return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'y' || c == 'z';
  }

  Polynomial3 term() {
    if (!starts_factor(peek())) fail(at_end() ? "expected a term" : std::string("unexpected '") + peek() + "'");
    Polynomial3 product = factor();
    while (!at_end()) {
      if (peek() == '*') {
        take();
        if (!starts_factor(peek())) fail("expected a factor after '*'");
      } else if (!starts_factor(peek())) {
        break;
      }
      product = product * factor();
    }
    return product;
  }

  Polynomial3 factor() {
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return Polynomial3(integer());
    take();
    const Variable v = c == 'x' ? Variable::x : (c == 'y' ? Variable::y : Variable::z);
    std::uint32_t power = 1;
    if (peek() == '^') {
      take();
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected exponent after '^'");
      const std::size_t start = pos_;
      BigInt value = integer();
      if (value > kMaxExponent) {
        pos_ = start;
        fail("exponent exceeds 2^16");
      }
      power = value.convert_to<std::uint32_t>();
    }
    Exponent e;
    switch (v) {
      case Variable::x: e.a = power; break;
      case Variable::y: e.b = power; break;
      case Variable::z: e.c = power; break;
    }
    return Polynomial3::monomial(1, e);
  }

  BigInt integer() {
    BigInt value = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) value = value * 10 + (take() - '0');
    return value;
  }

  std::vector<char> chars_;
  std::vector<std::size_t> origin_;
  std::size_t end_offset_ = 0;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial3 Polynomial3::parse(std::string_view text) { return Parser(text).parse(); }

}  // namespace duval
