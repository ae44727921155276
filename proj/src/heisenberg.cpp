#include "twistgrp/heisenberg.hpp"

#include <cctype>
#include <stdexcept>

#include "twistgrp/checked.hpp"
#include "twistgrp/errors.hpp"

namespace twistgrp {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;

std::string HeisenbergElement::to_string() const {
  return "((" + std::to_string(m) + "," + std::to_string(k) + ")," + std::to_string(s) + ")";
}

namespace heis {

HeisenbergElement mul(const HeisenbergElement& h1, const HeisenbergElement& h2) {
  return {add(h1.m, h2.m), add(add(h1.k, h2.k), checked::mul(h1.s, h2.m)), add(h1.s, h2.s)};
}

HeisenbergElement inv(const HeisenbergElement& h) {
  return {neg(h.m), sub(checked::mul(h.s, h.m), h.k), neg(h.s)};
}

HeisenbergElement pow(const HeisenbergElement& h, std::int64_t n) {
  HeisenbergElement base = n < 0 ? inv(h) : h;
  std::uint64_t e = n < 0 ? 0ULL - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  HeisenbergElement result;
  while (e) {
    if (e & 1U) result = heis::mul(result, base);
    e >>= 1U;
    if (e) base = heis::mul(base, base);
  }
  return result;
}

HeisenbergElement commutator(const HeisenbergElement& h1, const HeisenbergElement& h2) {
  return heis::mul(heis::mul(h1, h2), heis::mul(inv(h1), inv(h2)));
}

IntMatrix to_matrix(const HeisenbergElement& h) {
  return IntMatrix{{1, h.s, h.k}, {0, 1, h.m}, {0, 0, 1}};
}

HeisenbergElement from_matrix(const IntMatrix& mat) {
  if (mat.rows() != 3 || mat.cols() != 3 || mat(0, 0) != 1 || mat(1, 1) != 1 || mat(2, 2) != 1 ||
      mat(1, 0) != 0 || mat(2, 0) != 0 || mat(2, 1) != 0)
    throw std::invalid_argument("not an upper unitriangular 3x3 matrix");
  return {mat(1, 2), mat(0, 2), mat(0, 1)};
}

std::vector<HeisenbergElement> box(std::int64_t radius) {
  if (radius < 0) throw std::invalid_argument("radius must be nonnegative");
  std::vector<HeisenbergElement> out;
  const auto side = static_cast<std::size_t>(2 * radius + 1);
  out.reserve(side * side * side);
  for (std::int64_t m = -radius; m <= radius; ++m)
    for (std::int64_t k = -radius; k <= radius; ++k)
      for (std::int64_t s = -radius; s <= radius; ++s) out.push_back({m, k, s});
  return out;
}

}  // namespace heis

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  bool done() const { return pos >= text.size(); }
  char peek() const { return text[pos]; }
  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(peek()))) ++pos;
  }
  void expect(char ch) {
    skip_ws();
    if (done() || peek() != ch) throw ParseError(std::string("expected '") + ch + "'", pos);
    ++pos;
  }
  std::int64_t integer() {
    skip_ws();
    std::size_t start = pos;
    bool negative = false;
    if (!done() && (peek() == '-' || peek() == '+')) {
      negative = peek() == '-';
      ++pos;
    }
    if (done() || !std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected integer", pos);
    std::int64_t v = 0;
    try {
      while (!done() && std::isdigit(static_cast<unsigned char>(peek()))) {
        v = checked::sub(checked::mul(v, 10), peek() - '0');  // accumulate negatively to reach INT64_MIN
        ++pos;
      }
      if (!negative) v = checked::neg(v);
    } catch (const std::overflow_error&) {
      throw ParseError("integer literal out of range", start);
    }
    return v;
  }
};

}  // namespace

GroupWord GroupWord::parse(std::string_view text) {
  GroupWord w;
  Cursor cur{text};
  cur.skip_ws();
  while (!cur.done()) {
    char g = cur.peek();
    if (g != 'a' && g != 'b' && g != 'c') throw ParseError(std::string("unknown generator '") + g + "'", cur.pos);
    ++cur.pos;
    std::int64_t e = 1;
    cur.skip_ws();
    if (!cur.done() && cur.peek() == '^') {
      ++cur.pos;
      e = cur.integer();
    }
    w.letters.push_back({g, e});
    cur.skip_ws();
  }
  return w;
}

HeisenbergElement eval_word(const GroupWord& w) {
  HeisenbergElement acc;
  for (const auto& l : w.letters) {
    const HeisenbergElement& gen = l.generator == 'a' ? heis::a : l.generator == 'b' ? heis::b : heis::c;
    acc = heis::mul(acc, heis::pow(gen, l.exponent));
  }
  return acc;
}

HeisenbergElement parse_heisenberg(std::string_view text) {
  Cursor cur{text};
  cur.skip_ws();
  if (cur.done() || cur.peek() != '(') return eval_word(GroupWord::parse(text));
  cur.expect('(');
  cur.expect('(');
  HeisenbergElement h;
  h.m = cur.integer();
  cur.expect(',');
  h.k = cur.integer();
  cur.expect(')');
  cur.expect(',');
  h.s = cur.integer();
  cur.expect(')');
  cur.skip_ws();
  if (!cur.done()) throw ParseError("trailing characters after element", cur.pos);
  return h;
}

}  // namespace twistgrp
