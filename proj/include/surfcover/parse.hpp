#ifndef SURFCOVER_PARSE_HPP
#define SURFCOVER_PARSE_HPP

// Polynomial text format.
//
//   expr   := ['+'|'-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ['^' integer]
//   atom   := integer | 'i' | variable | '(' expr ')'
//
// `i` is the imaginary unit. Division is only by nonzero constants. An optional
// leading `NAME:=` and a trailing `;` are skipped, so Magma-style assignments
// can be read verbatim. Whitespace (including newlines) is ignored.

#include <cctype>
#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "surfcover/multipoly.hpp"

namespace surfcover {

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, const std::vector<std::string>& vars) : text_(text), vars_(vars) {}

  MultiPoly parse() {
    skip_assignment_prefix();
    MultiPoly p = expr();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ';') {
      ++pos_;
      skip_ws();
    }
    if (pos_ != text_.size()) throw ParseError(pos_, "end of input, '+' or '-'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void skip_assignment_prefix() {
    std::size_t k = text_.find(":=");
    if (k == std::string_view::npos) return;
    std::size_t j = 0;
    while (j < k && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    std::size_t start = j;
    while (j < k && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
    std::size_t end = j;
    while (j < k && std::isspace(static_cast<unsigned char>(text_[j]))) ++j;
    if (j == k && end > start) pos_ = k + 2;
  }

  MultiPoly constant(const GR& c) const { return MultiPoly::constant(vars_, c); }

  MultiPoly expr() {
    MultiPoly acc(vars_);
    bool first = true;
    for (;;) {
      skip_ws();
      bool negate = false;
      if (peek('+') || peek('-')) {
        negate = text_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      MultiPoly t = term();
      if (negate) t = -t;
      acc += t;
      first = false;
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = factor();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc *= factor();
      } else if (peek('/')) {
        ++pos_;
        std::size_t at = pos_;
        MultiPoly d = factor();
        if (!d.is_constant() || d.is_zero()) throw ParseError(at, "nonzero constant divisor");
        acc = acc * d.constant_term().inverse();
      } else {
        return acc;
      }
    }
  }

  MultiPoly factor() {
    MultiPoly base = atom();
    if (peek('^')) {
      ++pos_;
      skip_ws();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(start, "non-negative integer exponent");
      unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) throw ParseError(pos_, "number, variable, 'i' or '('");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!peek(')')) throw ParseError(pos_, "')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(GR(Rational(Integer(std::string(text_.substr(start, pos_ - start))))));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '\'')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      if (name == "i") return constant(GR::i());
      for (std::size_t k = 0; k < vars_.size(); ++k) {
        if (vars_[k] == name) return MultiPoly::variable(vars_, k);
      }
      std::string expected = "one of the variables";
      for (const auto& v : vars_) expected += " " + v;
      throw ParseError(start, expected);
    }
    throw ParseError(pos_, "number, variable, 'i' or '('");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline MultiPoly parse_poly(std::string_view text, const std::vector<std::string>& vars = projective_vars()) {
  for (const auto& v : vars) {
    if (v == "i") throw VariableMismatch("'i' is reserved for the imaginary unit");
  }
  return detail::PolyParser(text, vars).parse();
}

/// Parse a Gaussian-rational constant such as "3", "-1/2", "2*i" or "(1320*i-6960)".
inline GR parse_gr(std::string_view text) {
  static const std::vector<std::string> none;
  MultiPoly p = detail::PolyParser(text, none).parse();
  return p.is_zero() ? GR() : p.constant_term();
}

/// Read a polynomial from a file in the same text format.
inline MultiPoly read_poly_file(const std::string& path, const std::vector<std::string>& vars = projective_vars()) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_poly(buf.str(), vars);
}

}  // namespace surfcover

#endif  // SURFCOVER_PARSE_HPP
