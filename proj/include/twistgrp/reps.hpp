#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "twistgrp/heisenberg.hpp"
#include "twistgrp/rational_phase.hpp"
#include "twistgrp/twisted.hpp"

namespace twistgrp {

/// Parameters (ξ, η, α, p) of a p-dimensional irreducible unitary
/// representation of H. η must be a reduced fraction with denominator exactly p.
class RepParams {
 public:
  /// Throws std::invalid_argument naming the violated constraint.
  RepParams(RationalPhase xi, RationalPhase eta, RationalPhase alpha, std::int64_t p);

  static RepParams trivial() { return {RationalPhase(), RationalPhase(), RationalPhase(), 1}; }

  const RationalPhase& xi() const noexcept { return xi_; }
  const RationalPhase& eta() const noexcept { return eta_; }
  const RationalPhase& alpha() const noexcept { return alpha_; }
  std::int64_t p() const noexcept { return p_; }

  friend bool operator==(const RepParams&, const RepParams&) = default;

 private:
  RationalPhase xi_;
  RationalPhase eta_;
  RationalPhase alpha_;
  std::int64_t p_;
};

/// Exact value of a character: Σ e^{2πiθ} over a multiset of phases.
class CharacterValue {
 public:
  CharacterValue() = default;
  explicit CharacterValue(std::vector<RationalPhase> terms);
  /// `count` copies of one phase.
  CharacterValue(std::int64_t count, const RationalPhase& phase);

  /// Sorted multiset of phases.
  const std::vector<RationalPhase>& terms() const noexcept { return terms_; }
  std::complex<double> approx() const noexcept { return approx_; }

  /// Structural equality of the phase multisets.
  bool same_terms(const CharacterValue& o) const { return terms_ == o.terms_; }

  /// Exact equality of the complex numbers, decided in Z[x]/Φ_L(x) where L is
  /// the lcm of all phase denominators.
  friend bool operator==(const CharacterValue& a, const CharacterValue& b);

  bool is_zero() const { return *this == CharacterValue(); }

 private:
  std::vector<RationalPhase> terms_;
  std::complex<double> approx_{0.0, 0.0};
};

/// Generalized permutation operator: sends ε_j to e^{2πi·phases[j]} ε_{perm[j]}.
class MonomialOperator {
 public:
  /// Throws std::invalid_argument if `perm` is not a permutation of 0..p−1.
  MonomialOperator(std::vector<std::size_t> perm, std::vector<RationalPhase> phases);

  static MonomialOperator identity(std::size_t p);

  std::size_t dim() const noexcept { return perm_.size(); }
  const std::vector<std::size_t>& perm() const noexcept { return perm_; }
  const std::vector<RationalPhase>& phases() const noexcept { return phases_; }

  /// (*this) ∘ rhs: apply `rhs` first.
  MonomialOperator compose(const MonomialOperator& rhs) const;
  MonomialOperator inverse() const;

  /// Phases of the fixed points of `perm`.
  CharacterValue trace() const;

  /// Row-major dense matrix; column j holds the image of ε_j.
  std::vector<std::complex<double>> dense() const;

  friend bool operator==(const MonomialOperator&, const MonomialOperator&) = default;

 private:
  std::vector<std::size_t> perm_;
  std::vector<RationalPhase> phases_;
};

/// Denominator of η in lowest terms, i.e. the orbit size of (ξ, η) under (ξ, η) ↦ (ξ + sη, η).
std::int64_t orbit_size(const RationalPhase& eta);

/// ρ((m,k),s) ε_j = e^{2πi(mξ + (k + tm)η + ⌊(s+t)/p⌋α)} ε_t with t = (j − s) mod p.
MonomialOperator rep_apply(const RepParams& params, const HeisenbergElement& h);

/// p·e^{2πi(mξ + kη + (s/p)α)} if m ≡ s ≡ 0 (mod p), else 0.
CharacterValue character(const RepParams& params, const HeisenbergElement& h);

/// Character of ρ∘φ for the special automorphism:
/// p·e^{2πi((s+m)ξ + (−k + m(m−1)/2 + sm)η + (m/p)α)} if m ≡ s ≡ 0 (mod p), else 0.
CharacterValue character_of_precomposition(const RepParams& params, const Phi2Special& phi,
                                           const HeisenbergElement& h);

struct FixedRepReport {
  bool fixed = false;
  /// First element of the ball where the two characters differ.
  std::optional<HeisenbergElement> mismatch;
  /// For p = 2: whether 2ξ − α ∈ Z and α − 1/2 ∈ Z.
  std::optional<bool> symbolic;
};

/// Whether 2ξ − α ≡ 0 and α − 1/2 ≡ 0 (mod 1). Meaningful for p = 2 only.
bool fixed_criterion_p2(const RepParams& params);

/// Compares χ_ρ and χ_{ρφ} on every element of the box of radius `ball_radius`.
FixedRepReport check_fixed_rep(const RepParams& params, const Phi2Special& phi, std::int64_t ball_radius);

/// check_fixed_rep(...).fixed; throws std::logic_error if for p = 2 and
/// ball_radius ≥ 2 the ball test disagrees with the symbolic criterion.
bool is_fixed_rep(const RepParams& params, const Phi2Special& phi, std::int64_t ball_radius);

inline constexpr std::int64_t kMaxSearchDimension = 6;
inline constexpr std::int64_t kMaxSearchDenominator = 24;

/// All reduced fractions in [0,1) with denominator ≤ max_den, ascending.
std::vector<RationalPhase> fractions_up_to(std::int64_t max_den);

/// Every RepParams of dimension p (η of denominator p, ξ and α of
/// denominator ≤ max_den) that is fixed on the box of radius `ball_radius`.
std::vector<RepParams> fixed_rep_search(const Phi2Special& phi, std::int64_t p, std::int64_t max_den,
                                        std::int64_t ball_radius = 6);

/// Dimension of the space of p×p complex matrices commuting with ρ(a), ρ(b), ρ(c).
/// Singular values at most 1e-9 times the largest count as zero.
std::size_t commutant_dimension(const RepParams& params);

}  // namespace twistgrp
