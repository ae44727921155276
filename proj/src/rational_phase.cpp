#include "twistgrp/rational_phase.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "twistgrp/errors.hpp"

namespace twistgrp {

std::int64_t to_int64(const mpz_class& z) {
  if (!z.fits_slong_p()) throw std::overflow_error("integer does not fit in int64");
  return z.get_si();
}

RationalPhase::RationalPhase(const mpq_class& q) : value_(q) {
  value_.canonicalize();
  reduce();
}

RationalPhase::RationalPhase(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  value_ = mpq_class(mpz_class(num), mpz_class(den));
  value_.canonicalize();
  reduce();
}

void RationalPhase::reduce() {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  if (fl != 0) value_ -= fl;
}

RationalPhase RationalPhase::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (c != ' ' && c != '\t') s.push_back(c);
  if (s.empty()) throw ParseError("empty rational", 0);
  auto slash = s.find('/');
  auto check_int = [&](std::string_view part, std::size_t offset) {
    std::size_t i = 0;
    if (!part.empty() && (part[0] == '-' || part[0] == '+')) i = 1;
    if (i == part.size()) throw ParseError("expected digits in rational '" + s + "'", offset + i);
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9')
        throw ParseError("unexpected character in rational '" + s + "'", offset + i);
  };
  mpq_class q;
  if (slash == std::string::npos) {
    check_int(s, 0);
    q = mpq_class(mpz_class(s[0] == '+' ? s.substr(1) : s));
  } else {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    check_int(num, 0);
    check_int(den, slash + 1);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw ParseError("zero denominator in rational '" + s + "'", slash + 1);
    q = mpq_class(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
  }
  return RationalPhase(q);
}

std::complex<double> RationalPhase::exp2pi() const {
  double t = 2.0 * std::numbers::pi * value_.get_d();
  return {std::cos(t), std::sin(t)};
}

RationalPhase RationalPhase::operator-() const { return RationalPhase(mpq_class(-value_)); }

RationalPhase& RationalPhase::operator+=(const RationalPhase& o) {
  value_ += o.value_;
  if (value_ >= 1) value_ -= 1;
  return *this;
}

RationalPhase& RationalPhase::operator-=(const RationalPhase& o) {
  value_ -= o.value_;
  if (sgn(value_) < 0) value_ += 1;
  return *this;
}

RationalPhase RationalPhase::times(const mpz_class& n) const {
  return RationalPhase(mpq_class(value_ * mpq_class(n)));
}

RationalPhase RationalPhase::times(std::int64_t n) const { return times(mpz_class(static_cast<long>(n))); }

}  // namespace twistgrp
