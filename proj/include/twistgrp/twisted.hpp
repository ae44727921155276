#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "twistgrp/heisenberg.hpp"
#include "twistgrp/tc_oracle.hpp"

namespace twistgrp {

/// Which reading of the s(s−1)/2·N term in Q₀ to use. The automorphism
/// formula carries `−`; the standalone Q₀ line carries `+`. Only `Minus`
/// gives a homomorphism; `Plus` is kept so the regression test can show it fails.
enum class Q0Sign { Minus, Plus };

/// The polynomials Q₀…Q₃ governing the φ_N-conjugacy class of ((m,k),s):
///
///   g·h·φ(g⁻¹) = ((m + (g₁−g₃)N, k + 2g₂ + Q₂(g₁,g₃,s,m)), s + 2g₃ − g₁)
///
/// and Q₃(f₁,f₃,s,m) = Q₂(2f₁+f₃, f₁+f₃, s, m) after f₁ = g₁−g₃, f₃ = 2g₃−g₁.
class QPolynomials {
 public:
  explicit QPolynomials(std::int64_t n, Q0Sign sign = Q0Sign::Minus);

  std::int64_t n() const noexcept { return n_; }
  std::int64_t q0(std::int64_t m, std::int64_t s) const;
  std::int64_t q1(std::int64_t g1, std::int64_t g3) const;
  std::int64_t q2(std::int64_t g1, std::int64_t g3, std::int64_t s, std::int64_t m) const;
  std::int64_t q3(std::int64_t f1, std::int64_t f3, std::int64_t s, std::int64_t m) const;

 private:
  std::int64_t n_;
  Q0Sign sign_;
};

/// φ_N((m,k),s) = ((m(1−N) + sN, −k + Q₀(m,s)), m − s), an automorphism with R(φ_N) = 2N.
class PhiN {
 public:
  explicit PhiN(std::int64_t n, Q0Sign sign = Q0Sign::Minus);

  std::int64_t n() const noexcept { return q_.n(); }
  const QPolynomials& q() const noexcept { return q_; }

  HeisenbergElement apply(const HeisenbergElement& h) const;
  HeisenbergElement apply_inverse(const HeisenbergElement& h) const;

 private:
  QPolynomials q_;
};

/// φ((m,k),s) = ((s+m, −k + m(m−1)/2 + sm), m).
class Phi2Special {
 public:
  HeisenbergElement apply(const HeisenbergElement& h) const;
  HeisenbergElement apply_inverse(const HeisenbergElement& h) const;
};

using HeisenbergAutomorphism = std::variant<PhiN, Phi2Special>;

HeisenbergElement apply_phi(const HeisenbergAutomorphism& phi, const HeisenbergElement& h);

/// Names one of the 2N φ_N-conjugacy classes; its representative is ((r, parity), 0).
struct TwistedClassLabel {
  std::int64_t r = 0;
  int parity = 0;

  HeisenbergElement representative() const { return {r, parity, 0}; }
  friend bool operator==(const TwistedClassLabel&, const TwistedClassLabel&) = default;
  friend auto operator<=>(const TwistedClassLabel&, const TwistedClassLabel&) = default;
};

/// Closed-form class of h under φ_N: r = m mod N, and with f₁ = (m−r)/N, f₃ = s,
/// parity = (k − Q₃(f₁, f₃, 0, r)) mod 2.
TwistedClassLabel class_label(const PhiN& phi, const HeisenbergElement& h);

struct ReidemeisterReport {
  struct Entry {
    TwistedClassLabel label;
    std::int64_t count_in_ball = 0;
  };
  std::int64_t n = 0;
  std::int64_t radius = 0;
  std::vector<Entry> labels;  // sorted by (r, parity)
  std::int64_t reidemeister = 0;
};

/// Largest radius whose box stays below 10^7 elements.
inline constexpr std::int64_t kMaxBallRadius = 107;

/// min(2N, kMaxBallRadius).
std::int64_t default_ball_radius(std::int64_t n);

/// Counts distinct class labels over the box |m|,|k|,|s| ≤ radius.
/// Throws BallTooSmall when the box misses some residue class of m mod N.
ReidemeisterReport reidemeister_number(const PhiN& phi, std::int64_t ball_radius);

/// Group callbacks for the Heisenberg group twisted by `phi`.
tc::GroupInterface<HeisenbergElement> heisenberg_group(const HeisenbergAutomorphism& phi);

/// Oracle partition of the box of radius `ball_radius`, searching conjugators
/// in the box of radius `conjugator_radius`.
tc::ClassPartition<HeisenbergElement> oracle_partition(const HeisenbergAutomorphism& phi, std::int64_t ball_radius,
                                                       std::int64_t conjugator_radius);

}  // namespace twistgrp
