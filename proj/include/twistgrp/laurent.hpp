#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <string_view>

namespace twistgrp {

/// Sparse Laurent polynomial over Z. No stored coefficient is zero, so equality
/// is structural and the zero polynomial is the empty map.
class LaurentPoly {
 public:
  using Exponent = std::int64_t;
  using Coeff = std::int64_t;
  using Terms = std::map<Exponent, Coeff>;

  LaurentPoly() = default;
  /// Drops zero coefficients from `terms`.
  explicit LaurentPoly(const Terms& terms);

  static LaurentPoly constant(Coeff c) { return monomial(0, c); }
  static LaurentPoly monomial(Exponent e, Coeff c = 1);

  /// Text grammar: signed monomial list such as `3x^-2 - x^-1 + 5 + 7x`.
  /// Whitespace is ignored; `x` means x^1; an optional `*` may separate coefficient and x.
  static LaurentPoly parse(std::string_view text);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Coeff coeff(Exponent e) const;
  /// Smallest / largest exponent with a nonzero coefficient; undefined for zero.
  Exponent min_exponent() const { return terms_.begin()->first; }
  Exponent max_exponent() const { return terms_.rbegin()->first; }

  /// Multiplication by x^t.
  LaurentPoly shifted(Exponent t) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly scaled(Coeff c) const;

  void add_term(Exponent e, Coeff c);

  std::string to_string() const;

  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

 private:
  Terms terms_;
};

inline LaurentPoly laurent_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

}  // namespace twistgrp
