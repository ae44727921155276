#include "twistgrp/laurent.hpp"

#include <cctype>
#include <sstream>

#include "twistgrp/checked.hpp"
#include "twistgrp/errors.hpp"

namespace twistgrp {

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (auto [e, c] : terms)
    if (c != 0) terms_.emplace(e, c);
}

LaurentPoly LaurentPoly::monomial(Exponent e, Coeff c) {
  LaurentPoly p;
  p.add_term(e, c);
  return p;
}

LaurentPoly::Coeff LaurentPoly::coeff(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? 0 : it->second;
}

void LaurentPoly::add_term(Exponent e, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second = checked::add(it->second, c);
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly LaurentPoly::shifted(Exponent t) const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), checked::add(e, t), c);
  return r;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (auto [e, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked::neg(c));
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (auto [e, c] : o.terms_) add_term(e, checked::neg(c));
  return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (auto [ea, ca] : a.terms_)
    for (auto [eb, cb] : b.terms_) r.add_term(checked::add(ea, eb), checked::mul(ca, cb));
  return r;
}

LaurentPoly LaurentPoly::scaled(Coeff c) const {
  if (c == 0) return {};
  LaurentPoly r;
  for (auto [e, v] : terms_) r.terms_.emplace_hint(r.terms_.end(), e, checked::mul(v, c));
  return r;
}

namespace {

class PolyParser {
 public:
  explicit PolyParser(std::string_view text) : text_(text) {}

  LaurentPoly run() {
    LaurentPoly result;
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_ws();
      } else if (!first) {
        throw ParseError("expected '+' or '-' between terms", pos_);
      }
      first = false;
      std::size_t term_start = pos_;
      bool have_coeff = false;
      std::int64_t coeff = 1;
      if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
        coeff = read_unsigned();
        have_coeff = true;
        skip_ws();
        if (pos_ < text_.size() && peek() == '*') {
          ++pos_;
          skip_ws();
          if (pos_ == text_.size() || peek() != 'x') throw ParseError("expected 'x' after '*'", pos_);
        }
      }
      std::int64_t exponent = 0;
      if (pos_ < text_.size() && peek() == 'x') {
        ++pos_;
        exponent = 1;
        skip_ws();
        if (pos_ < text_.size() && peek() == '^') {
          ++pos_;
          skip_ws();
          int esign = 1;
          if (pos_ < text_.size() && (peek() == '-' || peek() == '+')) {
            esign = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
          }
          if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            throw ParseError("expected exponent after '^'", pos_);
          exponent = esign * read_unsigned();
        }
      } else if (!have_coeff) {
        throw ParseError("expected a coefficient or 'x'", term_start);
      }
      result.add_term(exponent, checked::mul(sign, coeff));
    }
    return result;
  }

 private:
  char peek() const { return text_[pos_]; }
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::int64_t read_unsigned() {
    std::size_t start = pos_;
    std::int64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      try {
        v = checked::add(checked::mul(v, 10), text_[pos_] - '0');
      } catch (const std::overflow_error&) {
        throw ParseError("integer literal too large", start);
      }
      ++pos_;
    }
    return v;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) { return PolyParser(text).run(); }

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto [e, c] : terms_) {
    // print |c| with a separate sign so terms read `a - b`
    bool negative = c < 0;
    unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(c) : static_cast<unsigned long long>(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag;
    os << 'x';
    if (e != 1) os << '^' << e;
  }
  return os.str();
}

}  // namespace twistgrp
