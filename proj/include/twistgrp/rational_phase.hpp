#pragma once

#include <gmpxx.h>

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>

namespace twistgrp {

/// An exact element of Q/Z, stored as its canonical representative in [0, 1).
///
/// Phases are the exponents θ of e^{2πiθ}; addition is addition mod 1.
class RationalPhase {
 public:
  RationalPhase() = default;
  explicit RationalPhase(const mpq_class& q);
  RationalPhase(std::int64_t num, std::int64_t den);

  /// Accepts `num/den` or a bare integer; the value is reduced mod 1.
  static RationalPhase parse(std::string_view text);

  const mpq_class& value() const noexcept { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const noexcept { return sgn(value_) == 0; }

  /// `num/den`, or `0` for the zero phase.
  std::string to_string() const { return value_.get_str(); }

  double to_double() const { return value_.get_d(); }
  /// Floating approximation of e^{2πiθ}.
  std::complex<double> exp2pi() const;

  RationalPhase operator-() const;
  RationalPhase& operator+=(const RationalPhase& o);
  RationalPhase& operator-=(const RationalPhase& o);
  friend RationalPhase operator+(RationalPhase a, const RationalPhase& b) { return a += b; }
  friend RationalPhase operator-(RationalPhase a, const RationalPhase& b) { return a -= b; }

  /// n·θ mod 1.
  RationalPhase times(const mpz_class& n) const;
  RationalPhase times(std::int64_t n) const;

  friend bool operator==(const RationalPhase& a, const RationalPhase& b) { return a.value_ == b.value_; }
  friend bool operator!=(const RationalPhase& a, const RationalPhase& b) { return !(a == b); }
  friend bool operator<(const RationalPhase& a, const RationalPhase& b) { return a.value_ < b.value_; }

 private:
  void reduce();
  mpq_class value_{0};
};

inline RationalPhase phase_add(const RationalPhase& a, const RationalPhase& b) { return a + b; }

/// Converts an mpz to int64, throwing std::overflow_error when it does not fit.
std::int64_t to_int64(const mpz_class& z);

}  // namespace twistgrp
