#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "twistgrp/int_matrix.hpp"
#include "twistgrp/laurent.hpp"

namespace twistgrp {

/// A ≅ Z^k ⊕ Z/d₁ ⊕ … ⊕ Z/d_t.
struct AbelianSpec {
  std::int64_t k = 1;
  std::vector<std::int64_t> torsion;

  /// Throws std::invalid_argument unless k ≥ 0 and every d_i ≥ 2.
  void validate() const;
  bool torsion_free() const noexcept { return torsion.empty(); }
  /// lcm(d_i), the largest order of a torsion element of A (1 when torsion-free).
  std::int64_t max_torsion_order() const;

  friend bool operator==(const AbelianSpec&, const AbelianSpec&) = default;
};

/// Element of A ≀ Z = (⊕_{i∈Z} A_i) ⋊ Z.
///
/// The free part of ⊕ A_i is a Laurent polynomial in which coordinate j of
/// copy A_i is the coefficient of x^{ik+j}. Torsion coordinates are kept
/// separately as (copy, factor) → residue mod d_factor. The generator of Z
/// moves copy i to copy i+1, i.e. multiplies the free part by x^k.
class WreathElement {
 public:
  using TorsionKey = std::pair<std::int64_t, std::size_t>;  // (copy index, torsion factor)
  using TorsionPart = std::map<TorsionKey, std::int64_t>;

  explicit WreathElement(AbelianSpec spec);
  /// Reduces residues and drops zeros; throws on an out-of-range factor or,
  /// when k = 0, a nonzero free part.
  WreathElement(AbelianSpec spec, LaurentPoly free_part, TorsionPart torsion_part, std::int64_t shift);

  static WreathElement identity(const AbelianSpec& spec) { return WreathElement(spec); }
  /// a_j = (x^j, 0), 0 ≤ j < k.
  static WreathElement free_generator(const AbelianSpec& spec, std::int64_t j);
  /// Unit of torsion factor `factor` in copy `copy`.
  static WreathElement torsion_generator(const AbelianSpec& spec, std::size_t factor, std::int64_t copy = 0);
  /// b = (0, 1).
  static WreathElement shift_generator(const AbelianSpec& spec);

  const AbelianSpec& spec() const noexcept { return spec_; }
  const LaurentPoly& free_part() const noexcept { return free_; }
  const TorsionPart& torsion_part() const noexcept { return tors_; }
  std::int64_t shift() const noexcept { return shift_; }

  bool is_identity() const { return shift_ == 0 && free_.is_zero() && tors_.empty(); }
  /// Lies in the base group ⊕ A_i.
  bool in_base() const noexcept { return shift_ == 0; }
  /// Lies in ⊕ T_i.
  bool in_torsion_base() const { return shift_ == 0 && free_.is_zero(); }

  friend bool operator==(const WreathElement&, const WreathElement&) = default;

 private:
  AbelianSpec spec_;
  LaurentPoly free_;
  TorsionPart tors_;
  std::int64_t shift_ = 0;
};

/// (P, r)(Q, s) = (P + x^{rk}Q, r + s); torsion copies shift by r. Throws SpecMismatch.
WreathElement wreath_mul(const WreathElement& g1, const WreathElement& g2);
/// (P, r)⁻¹ = (−x^{−kr}P, −r).
WreathElement wreath_inv(const WreathElement& g);
WreathElement wreath_pow(const WreathElement& g, std::int64_t n);
/// g1 g2 g1⁻¹ g2⁻¹ by direct multiplication.
WreathElement wreath_commutator(const WreathElement& g1, const WreathElement& g2);
/// ((1 − x^{ks})P + (x^{kr} − 1)Q, 0) for torsion-free specs.
WreathElement commutator_closed_form(const WreathElement& g1, const WreathElement& g2);

/// Σ of the coefficients at exponents ≡ j (mod k).
std::int64_t eps(std::int64_t k, std::int64_t j, const LaurentPoly& p);

/// (ε₀(P), …, ε_{k−1}(P), r), the projection onto G/G' ≅ Z^{k+1}. Torsion-free specs only.
std::vector<std::int64_t> abelianize(const WreathElement& g);
/// shift = 0 and every ε_j vanishes. Torsion-free specs only.
bool in_commutant(const WreathElement& g);

/// Whether g1 = (P, s), g2 = (P', s') satisfy P(1 − x^{ks'}) = P'(1 − x^{ks}).
bool commute_iff_identity(const WreathElement& g1, const WreathElement& g2);
/// Whether g1 g2 = g2 g1, by multiplication.
bool commute_direct(const WreathElement& g1, const WreathElement& g2);

/// G with (1 − x^k)·G = 1 − x^{ks}: Σ_{i<s} x^{ik} for s > 0, −Σ_{i<−s} x^{k(s+i)} for s < 0, 0 for s = 0.
LaurentPoly geometric_quotient(std::int64_t k, std::int64_t s);

/// φ(a_0), …, φ(a_{k−1}) and φ(b).
struct GeneratorImages {
  std::vector<WreathElement> a;
  WreathElement b;
};

/// (k+1)×(k+1) matrix of the induced map on G/G'. Column i is
/// (ε₀(P_i), …, ε_{k−1}(P_i), s_i); the last column is the same for φ(b).
/// Torsion coordinates are projected away.
IntMatrix pi_matrix(const GeneratorImages& images);

struct CommutingImageRelations {
  bool minors_ab = true;   // ε_{k−1}(P_i)·s_j = ε_{k−1}(P_j)·s_i for all i, j
  bool minors_b = true;    // ε_{k−1}(P_i)·r = ε_{k−1}(Q)·s_i for all i
  bool divided_ab = true;  // P_i·G(s_j) = P_j·G(s_i)
  bool divided_b = true;   // P_i·G(r) = Q·G(s_i)
};

/// Relations forced on the images of the base generators when they commute
/// pairwise, commute with φ(b)φ(a_i)φ(b)⁻¹, and all have nonzero shift.
/// Throws PreconditionError naming the first failing hypothesis.
CommutingImageRelations commuting_image_relations(const GeneratorImages& images);
/// minors_ab && minors_b of the above.
bool minor_relations_hold(const GeneratorImages& images);

/// Automorphism of A on the torsion coordinates: t_f ↦ units[f]·t_f + Σ_j cross[f][j]·v_j,
/// where v is the free coordinate vector of the same copy.
struct TorsionMap {
  std::vector<std::int64_t> units;
  std::vector<std::vector<std::int64_t>> cross;  // torsion.size() × k, may be empty (all zero)
};

/// φ = (conjugation by `inner`) ∘ (mirror, if set) ∘ (base automorphism of A applied in every copy).
/// The mirror sends copy i to copy −i and the shift n to −n.
class WreathAutomorphism {
 public:
  const AbelianSpec& spec() const noexcept { return spec_; }
  WreathElement apply(const WreathElement& g) const;
  WreathElement apply_inverse(const WreathElement& g) const;
  GeneratorImages generator_images() const;
  /// The induced automorphism of Z^k ≀ Z after killing torsion.
  WreathAutomorphism free_quotient() const;

  const std::optional<IntMatrix>& base_matrix() const noexcept { return base_; }
  bool mirror() const noexcept { return mirror_; }
  const WreathElement& inner() const noexcept { return inner_; }
  const TorsionMap& torsion_map() const noexcept { return torsion_; }

 private:
  friend WreathAutomorphism make_automorphism(const AbelianSpec&, std::optional<IntMatrix>, bool, WreathElement,
                                              TorsionMap);
  WreathAutomorphism(AbelianSpec spec, std::optional<IntMatrix> base, bool mirror, WreathElement inner,
                     TorsionMap torsion);

  WreathElement apply_base(const WreathElement& g, bool inverse) const;

  AbelianSpec spec_;
  std::optional<IntMatrix> base_;      // k×k, absent when k = 0
  std::optional<IntMatrix> base_inv_;
  bool mirror_ = false;
  WreathElement inner_;
  TorsionMap torsion_;
  TorsionMap torsion_inv_;  // in terms of the *output* free coordinates
};

/// Validates the pieces and returns a verified automorphism: homomorphism on
/// 10³ random pairs and round-trip with the inverse on every generator.
/// Throws std::invalid_argument for a non-unimodular matrix or non-invertible
/// torsion unit; `base_matrix` may be omitted for the identity.
WreathAutomorphism make_automorphism(const AbelianSpec& spec, std::optional<IntMatrix> base_matrix, bool mirror,
                                     WreathElement inner, TorsionMap torsion_map);

inline WreathAutomorphism identity_automorphism(const AbelianSpec& spec) {
  return make_automorphism(spec, std::nullopt, false, WreathElement::identity(spec), {});
}

/// Random element: free support inside `span` consecutive exponents around 0,
/// coefficients in [−coeff, coeff], shift in [−max_shift, max_shift].
WreathElement random_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span = 6,
                             std::int64_t coeff = 9, std::int64_t max_shift = 4);
WreathElement random_base_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span = 6);
WreathElement random_torsion_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span = 3);

/// Random automorphism: random unimodular base matrix, coin-flip mirror,
/// random inner element, random torsion units and cross terms.
WreathAutomorphism random_automorphism(const AbelianSpec& spec, std::mt19937_64& rng);

/// Images of base elements stay in the base. Throws PreconditionError on a sample with nonzero shift.
bool preserves_base(const WreathAutomorphism& phi, std::span<const WreathElement> sample);
/// Images of ⊕ T_i stay in ⊕ T_i. Throws PreconditionError on a sample outside ⊕ T_i.
bool preserves_torsion(const WreathAutomorphism& phi, std::span<const WreathElement> sample);

/// Order of g, or nullopt when infinite.
std::optional<std::int64_t> element_order(const WreathElement& g);

/// Drops the torsion part: the quotient map A ≀ Z → Z^k ≀ Z.
WreathElement project_free(const WreathElement& g);

/// An exponent n such that x^n lies outside the subgroup generated by the
/// (base) sample: one past the largest exponent in any free support.
std::int64_t outside_span_witness(std::span<const WreathElement> sample);

}  // namespace twistgrp
