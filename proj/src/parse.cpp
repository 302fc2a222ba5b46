#include "zhuforge/parse.hpp"

#include <cctype>
#include <charconv>

namespace zhuforge {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " at position " + std::to_string(position)), position_(position) {}

namespace {

class Cursor {
 public:
  Cursor(const Voa& voa, std::string_view text) : voa_(voa), text_(text) {}

  std::size_t pos() const { return pos_; }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  [[noreturn]] void fail(const std::string& msg) const {
    if (pos_ >= text_.size()) throw ParseError(msg + ", found end of input", pos_);
    throw ParseError(msg + ", found '" + text_[pos_] + "'", pos_);
  }

  int integer() {
    skip_space();
    std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    std::string_view digits = text_.substr(start, pos_ - start);
    if (!digits.empty() && digits.front() == '+') digits.remove_prefix(1);
    int value = 0;
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || end != digits.data() + digits.size() || digits.empty()) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  // Unsigned p or p/q; the caller has seen a digit.
  Rational coefficient() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      std::size_t den = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ == den) fail("expected a denominator");
    }
    try {
      return Rational::parse(text_.substr(start, pos_ - start));
    } catch (const std::exception& e) {
      throw ParseError(e.what(), start);
    }
  }

  std::string identifier() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  FockVector term() {
    Rational c(1);
    if (peek_digit()) c = coefficient();
    std::vector<std::pair<std::size_t, int>> modes;
    for (;;) {
      skip_space();
      std::size_t start = pos_;
      std::string name = identifier();
      if (name.empty()) fail("expected a generator or 'vac'");
      if (name == "vac") break;
      auto g = voa_.presentation().generator_index(name);
      if (!g) throw ParseError("unknown generator " + name + " for " + voa_.name(), start);
      expect('[');
      int m = integer();
      expect(']');
      modes.emplace_back(*g, m);
    }
    FockVector x = FockVector::vacuum();
    for (auto it = modes.rbegin(); it != modes.rend(); ++it) x = voa_.apply_generator_mode(it->first, it->second, x);
    return c * x;
  }

  FockVector element() {
    Rational sign(1);
    if (accept('-')) sign = Rational(-1);
    FockVector out = sign * term();
    for (;;) {
      if (accept('+')) out += term();
      else if (accept('-')) out -= term();
      else return out;
    }
  }

  UEAExpression uterm() {
    Rational c(1);
    if (peek_digit()) c = coefficient();
    UEAExpression out = UEAExpression::word({});
    bool any = false;
    for (;;) {
      skip_space();
      if (pos_ >= text_.size() || text_[pos_] != 'J') break;
      ++pos_;
      expect('[');
      int k = integer();
      expect(']');
      expect('(');
      FockVector u = element();
      expect(')');
      out = out * UEAExpression::mode(u, k);
      any = true;
    }
    if (!any) fail("expected 'J['");
    return c * out;
  }

  UEAExpression uexpr() {
    Rational sign(1);
    if (accept('-')) sign = Rational(-1);
    UEAExpression out = sign * uterm();
    for (;;) {
      if (accept('+')) out += uterm();
      else if (accept('-')) out -= uterm();
      else return out;
    }
  }

 private:
  const Voa& voa_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

FockVector parse_element(const Voa& voa, std::string_view text) {
  Cursor cur(voa, text);
  FockVector v = cur.element();
  if (!cur.done()) cur.fail("unexpected trailing input");
  return v;
}

UEAExpression parse_uea(const Voa& voa, std::string_view text) {
  Cursor cur(voa, text);
  UEAExpression e = cur.uexpr();
  if (!cur.done()) cur.fail("unexpected trailing input");
  return e;
}

}  // namespace zhuforge
