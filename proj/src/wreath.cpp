#include "twistgrp/wreath.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "twistgrp/checked.hpp"
#include "twistgrp/errors.hpp"
#include "twistgrp/rational_phase.hpp"

namespace twistgrp {

using checked::add;
using checked::floor_div;
using checked::mod;
using checked::mul;
using checked::neg;
using checked::sub;

void AbelianSpec::validate() const {
  if (k < 0) throw std::invalid_argument("free rank k must be nonnegative");
  for (auto d : torsion)
    if (d < 2) throw std::invalid_argument("torsion orders must be at least 2 (got " + std::to_string(d) + ")");
}

std::int64_t AbelianSpec::max_torsion_order() const {
  std::int64_t l = 1;
  for (auto d : torsion) l = mul(l / std::gcd(l, d), d);
  return l;
}

namespace {

void require_same_spec(const WreathElement& a, const WreathElement& b) {
  if (a.spec() != b.spec()) throw SpecMismatch("wreath elements belong to different groups");
}

void require_torsion_free(const WreathElement& g, const char* what) {
  if (!g.spec().torsion_free()) throw PreconditionError(std::string(what) + " requires a torsion-free abelian factor");
}

WreathElement::TorsionPart shifted_torsion(const WreathElement::TorsionPart& t, std::int64_t by, bool negate) {
  WreathElement::TorsionPart out;
  for (const auto& [key, v] : t) out.emplace(WreathElement::TorsionKey{add(key.first, by), key.second}, negate ? neg(v) : v);
  return out;
}

std::int64_t uniform(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng);
}

std::int64_t mod_inverse(std::int64_t u, std::int64_t d) {
  // extended Euclid
  std::int64_t a = mod(u, d), b = d, x0 = 1, x1 = 0;
  while (b) {
    std::int64_t q = a / b;
    std::tie(a, b) = std::make_pair(b, a - q * b);
    std::tie(x0, x1) = std::make_pair(x1, x0 - q * x1);
  }
  if (a != 1) throw std::invalid_argument("torsion unit " + std::to_string(u) + " is not invertible mod " + std::to_string(d));
  return mod(x0, d);
}

}  // namespace

// ---------------------------------------------------------------------------

WreathElement::WreathElement(AbelianSpec spec) : spec_(std::move(spec)) { spec_.validate(); }

WreathElement::WreathElement(AbelianSpec spec, LaurentPoly free_part, TorsionPart torsion_part, std::int64_t shift)
    : spec_(std::move(spec)), free_(std::move(free_part)), shift_(shift) {
  spec_.validate();
  if (spec_.k == 0 && !free_.is_zero()) throw std::invalid_argument("free part must be zero when k = 0");
  for (const auto& [key, v] : torsion_part) {
    if (key.second >= spec_.torsion.size())
      throw std::invalid_argument("torsion factor index " + std::to_string(key.second) + " out of range");
    std::int64_t r = mod(v, spec_.torsion[key.second]);
    if (r != 0) tors_.emplace(key, r);
  }
}

WreathElement WreathElement::free_generator(const AbelianSpec& spec, std::int64_t j) {
  if (j < 0 || j >= spec.k) throw std::invalid_argument("free generator index out of range");
  return {spec, LaurentPoly::monomial(j), {}, 0};
}

WreathElement WreathElement::torsion_generator(const AbelianSpec& spec, std::size_t factor, std::int64_t copy) {
  return {spec, {}, {{{copy, factor}, 1}}, 0};
}

WreathElement WreathElement::shift_generator(const AbelianSpec& spec) { return {spec, {}, {}, 1}; }

WreathElement wreath_mul(const WreathElement& g1, const WreathElement& g2) {
  require_same_spec(g1, g2);
  const std::int64_t k = g1.spec().k;
  LaurentPoly free = g1.free_part() + g2.free_part().shifted(mul(g1.shift(), k));
  WreathElement::TorsionPart tors = g1.torsion_part();
  for (const auto& [key, v] : g2.torsion_part()) {
    auto& slot = tors[{add(key.first, g1.shift()), key.second}];
    slot = add(slot, v);
  }
  return {g1.spec(), std::move(free), std::move(tors), add(g1.shift(), g2.shift())};
}

WreathElement wreath_inv(const WreathElement& g) {
  const std::int64_t r = g.shift();
  return {g.spec(), -g.free_part().shifted(neg(mul(g.spec().k, r))), shifted_torsion(g.torsion_part(), neg(r), true),
          neg(r)};
}

WreathElement wreath_pow(const WreathElement& g, std::int64_t n) {
  WreathElement base = n < 0 ? wreath_inv(g) : g;
  std::uint64_t e = n < 0 ? 0ULL - static_cast<std::uint64_t>(n) : static_cast<std::uint64_t>(n);
  WreathElement result = WreathElement::identity(g.spec());
  while (e) {
    if (e & 1U) result = wreath_mul(result, base);
    e >>= 1U;
    if (e) base = wreath_mul(base, base);
  }
  return result;
}

WreathElement wreath_commutator(const WreathElement& g1, const WreathElement& g2) {
  return wreath_mul(wreath_mul(g1, g2), wreath_mul(wreath_inv(g1), wreath_inv(g2)));
}

WreathElement commutator_closed_form(const WreathElement& g1, const WreathElement& g2) {
  require_same_spec(g1, g2);
  require_torsion_free(g1, "closed-form commutator");
  const std::int64_t k = g1.spec().k;
  const LaurentPoly one = LaurentPoly::constant(1);
  LaurentPoly left = (one - LaurentPoly::monomial(mul(k, g2.shift()))) * g1.free_part();
  LaurentPoly right = (LaurentPoly::monomial(mul(k, g1.shift())) - one) * g2.free_part();
  return {g1.spec(), left + right, {}, 0};
}

std::int64_t eps(std::int64_t k, std::int64_t j, const LaurentPoly& p) {
  if (k < 1) throw std::invalid_argument("eps needs k >= 1");
  if (j < 0 || j >= k) throw std::invalid_argument("eps index must lie in [0, k)");
  std::int64_t sum = 0;
  for (auto [e, c] : p.terms())
    if (mod(e, k) == j) sum = add(sum, c);
  return sum;
}

std::vector<std::int64_t> abelianize(const WreathElement& g) {
  require_torsion_free(g, "abelianize");
  const std::int64_t k = g.spec().k;
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(k) + 1);
  for (std::int64_t j = 0; j < k; ++j) out.push_back(eps(k, j, g.free_part()));
  out.push_back(g.shift());
  return out;
}

bool in_commutant(const WreathElement& g) {
  auto v = abelianize(g);
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

bool commute_iff_identity(const WreathElement& g1, const WreathElement& g2) {
  require_same_spec(g1, g2);
  require_torsion_free(g1, "commutation identity");
  const std::int64_t k = g1.spec().k;
  const LaurentPoly one = LaurentPoly::constant(1);
  return g1.free_part() * (one - LaurentPoly::monomial(mul(k, g2.shift()))) ==
         g2.free_part() * (one - LaurentPoly::monomial(mul(k, g1.shift())));
}

bool commute_direct(const WreathElement& g1, const WreathElement& g2) {
  return wreath_mul(g1, g2) == wreath_mul(g2, g1);
}

LaurentPoly geometric_quotient(std::int64_t k, std::int64_t s) {
  LaurentPoly g;
  if (s > 0) {
    for (std::int64_t i = 0; i < s; ++i) g.add_term(mul(i, k), 1);
  } else if (s < 0) {
    for (std::int64_t i = 0; i < -s; ++i) g.add_term(mul(k, add(s, i)), -1);
  }
  return g;
}

IntMatrix pi_matrix(const GeneratorImages& images) {
  const AbelianSpec& spec = images.b.spec();
  const std::int64_t k = spec.k;
  if (k < 1) throw std::invalid_argument("the matrix needs k >= 1");
  if (images.a.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("expected k base-generator images");
  const auto n = static_cast<std::size_t>(k) + 1;
  IntMatrix pi(n, n);
  auto fill = [&](std::size_t col, const WreathElement& g) {
    if (g.spec() != spec) throw SpecMismatch("generator images belong to different groups");
    for (std::int64_t j = 0; j < k; ++j) pi(static_cast<std::size_t>(j), col) = eps(k, j, g.free_part());
    pi(n - 1, col) = g.shift();
  };
  for (std::size_t i = 0; i < images.a.size(); ++i) fill(i, images.a[i]);
  fill(n - 1, images.b);
  return pi;
}

CommutingImageRelations commuting_image_relations(const GeneratorImages& images) {
  const AbelianSpec& spec = images.b.spec();
  const std::int64_t k = spec.k;
  if (k < 1) throw PreconditionError("k must be at least 1");
  if (!spec.torsion_free()) throw PreconditionError("relations are stated for a torsion-free abelian factor");
  if (images.a.size() != static_cast<std::size_t>(k)) throw PreconditionError("expected k base-generator images");
  const auto& a = images.a;
  const auto& b = images.b;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j)
      if (!commute_direct(a[i], a[j]))
        throw PreconditionError("images of a_" + std::to_string(i) + " and a_" + std::to_string(j) + " do not commute");
  for (std::size_t i = 0; i < a.size(); ++i) {
    WreathElement conj = wreath_mul(wreath_mul(b, a[i]), wreath_inv(b));
    if (!commute_direct(a[i], conj))
      throw PreconditionError("image of a_" + std::to_string(i) + " does not commute with its conjugate by the image of b");
  }
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].shift() == 0) throw PreconditionError("image of a_" + std::to_string(i) + " has shift 0");

  CommutingImageRelations rel;
  const std::int64_t last = k - 1;
  const std::int64_t eq = eps(k, last, b.free_part());
  const std::int64_t r = b.shift();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::int64_t ei = eps(k, last, a[i].free_part());
    const std::int64_t si = a[i].shift();
    for (std::size_t j = 0; j < a.size(); ++j) {
      const std::int64_t ej = eps(k, last, a[j].free_part());
      const std::int64_t sj = a[j].shift();
      if (mul(ei, sj) != mul(ej, si)) rel.minors_ab = false;
      if (a[i].free_part() * geometric_quotient(k, sj) != a[j].free_part() * geometric_quotient(k, si))
        rel.divided_ab = false;
    }
    if (mul(ei, r) != mul(eq, si)) rel.minors_b = false;
    if (a[i].free_part() * geometric_quotient(k, r) != b.free_part() * geometric_quotient(k, si)) rel.divided_b = false;
  }
  return rel;
}

bool minor_relations_hold(const GeneratorImages& images) {
  auto rel = commuting_image_relations(images);
  return rel.minors_ab && rel.minors_b;
}

// ---------------------------------------------------------------------------

WreathAutomorphism::WreathAutomorphism(AbelianSpec spec, std::optional<IntMatrix> base, bool mirror,
                                       WreathElement inner, TorsionMap torsion)
    : spec_(std::move(spec)), base_(std::move(base)), mirror_(mirror), inner_(std::move(inner)), torsion_(std::move(torsion)) {
  const std::int64_t k = spec_.k;
  const std::size_t t = spec_.torsion.size();
  if (k > 0) {
    if (!base_) base_ = IntMatrix::identity(static_cast<std::size_t>(k));
    if (base_->rows() != static_cast<std::size_t>(k) || !base_->is_square())
      throw std::invalid_argument("base matrix must be k x k");
    if (!unimodular(*base_)) throw std::invalid_argument("base matrix is not unimodular");
    base_inv_ = base_->inverse_unimodular();
  } else if (base_) {
    throw std::invalid_argument("no base matrix allowed when k = 0");
  }
  if (torsion_.units.empty()) torsion_.units.assign(t, 1);
  if (torsion_.units.size() != t) throw std::invalid_argument("expected one torsion unit per torsion factor");
  if (torsion_.cross.empty()) torsion_.cross.assign(t, std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  if (torsion_.cross.size() != t) throw std::invalid_argument("cross terms need one row per torsion factor");
  for (auto& row : torsion_.cross)
    if (row.size() != static_cast<std::size_t>(k)) throw std::invalid_argument("cross terms need k columns");
  if (inner_.spec() != spec_) throw SpecMismatch("inner element belongs to a different group");

  // α⁻¹(v', t') = (M⁻¹v', u⁻¹t' − u⁻¹·C·M⁻¹·v')
  torsion_inv_.units.resize(t);
  torsion_inv_.cross.assign(t, std::vector<std::int64_t>(static_cast<std::size_t>(k), 0));
  for (std::size_t f = 0; f < t; ++f) {
    const std::int64_t d = spec_.torsion[f];
    const std::int64_t uinv = mod_inverse(torsion_.units[f], d);
    torsion_inv_.units[f] = uinv;
    for (std::int64_t j = 0; j < k; ++j) {
      std::int64_t acc = 0;
      for (std::int64_t l = 0; l < k; ++l)
        acc = mod(add(acc, mul(mod(torsion_.cross[f][static_cast<std::size_t>(l)], d),
                               mod((*base_inv_)(static_cast<std::size_t>(l), static_cast<std::size_t>(j)), d))),
                  d);
      torsion_inv_.cross[f][static_cast<std::size_t>(j)] = mod(neg(mul(uinv, acc)), d);
    }
  }
}

WreathElement WreathAutomorphism::apply_base(const WreathElement& g, bool inverse) const {
  if (g.spec() != spec_) throw SpecMismatch("element belongs to a different group");
  const std::int64_t k = spec_.k;
  const IntMatrix* m = k > 0 ? &(inverse ? *base_inv_ : *base_) : nullptr;
  const TorsionMap& tm = inverse ? torsion_inv_ : torsion_;
  LaurentPoly free;
  WreathElement::TorsionPart tors;
  for (auto [e, c] : g.free_part().terms()) {
    const std::int64_t copy = floor_div(e, k);
    const auto j = static_cast<std::size_t>(mod(e, k));
    for (std::int64_t r = 0; r < k; ++r)
      free.add_term(add(mul(copy, k), r), mul((*m)(static_cast<std::size_t>(r), j), c));
    for (std::size_t f = 0; f < spec_.torsion.size(); ++f) {
      const std::int64_t d = spec_.torsion[f];
      auto& slot = tors[{copy, f}];
      slot = mod(add(slot, mul(mod(tm.cross[f][j], d), mod(c, d))), d);
    }
  }
  for (const auto& [key, v] : g.torsion_part()) {
    const std::int64_t d = spec_.torsion[key.second];
    auto& slot = tors[key];
    slot = mod(add(slot, mul(mod(tm.units[key.second], d), v)), d);
  }
  return {spec_, std::move(free), std::move(tors), g.shift()};
}

namespace {

WreathElement mirror_element(const WreathElement& g) {
  const std::int64_t k = g.spec().k;
  LaurentPoly free;
  for (auto [e, c] : g.free_part().terms()) {
    const std::int64_t copy = floor_div(e, k);
    free.add_term(add(mul(neg(copy), k), mod(e, k)), c);
  }
  WreathElement::TorsionPart tors;
  for (const auto& [key, v] : g.torsion_part()) tors.emplace(WreathElement::TorsionKey{neg(key.first), key.second}, v);
  return {g.spec(), std::move(free), std::move(tors), neg(g.shift())};
}

}  // namespace

WreathElement WreathAutomorphism::apply(const WreathElement& g) const {
  WreathElement x = apply_base(g, false);
  if (mirror_) x = mirror_element(x);
  return wreath_mul(wreath_mul(inner_, x), wreath_inv(inner_));
}

WreathElement WreathAutomorphism::apply_inverse(const WreathElement& g) const {
  WreathElement x = wreath_mul(wreath_mul(wreath_inv(inner_), g), inner_);
  if (mirror_) x = mirror_element(x);
  return apply_base(x, true);
}

GeneratorImages WreathAutomorphism::generator_images() const {
  GeneratorImages images{{}, apply(WreathElement::shift_generator(spec_))};
  for (std::int64_t j = 0; j < spec_.k; ++j) images.a.push_back(apply(WreathElement::free_generator(spec_, j)));
  return images;
}

WreathAutomorphism WreathAutomorphism::free_quotient() const {
  AbelianSpec free_spec{spec_.k, {}};
  WreathElement inner{free_spec, inner_.free_part(), {}, inner_.shift()};
  return make_automorphism(free_spec, base_, mirror_, std::move(inner), {});
}

WreathAutomorphism make_automorphism(const AbelianSpec& spec, std::optional<IntMatrix> base_matrix, bool mirror,
                                     WreathElement inner, TorsionMap torsion_map) {
  spec.validate();
  WreathAutomorphism phi(spec, std::move(base_matrix), mirror, std::move(inner), std::move(torsion_map));

  std::mt19937_64 rng(0x7769726561746855ULL);
  for (int i = 0; i < 1000; ++i) {
    WreathElement g = random_element(spec, rng, 4, 3, 2);
    WreathElement h = random_element(spec, rng, 4, 3, 2);
    if (phi.apply(wreath_mul(g, h)) != wreath_mul(phi.apply(g), phi.apply(h)))
      throw std::logic_error("constructed map is not a homomorphism");
  }
  std::vector<WreathElement> gens{WreathElement::shift_generator(spec)};
  for (std::int64_t j = 0; j < spec.k; ++j) gens.push_back(WreathElement::free_generator(spec, j));
  for (std::size_t f = 0; f < spec.torsion.size(); ++f) gens.push_back(WreathElement::torsion_generator(spec, f));
  for (const auto& g : gens)
    if (phi.apply_inverse(phi.apply(g)) != g || phi.apply(phi.apply_inverse(g)) != g)
      throw std::logic_error("constructed map does not round-trip with its inverse");
  if (spec.k > 0 && !unimodular(pi_matrix(phi.generator_images())))
    throw std::logic_error("induced map on the abelianization is not invertible");
  return phi;
}

// ---------------------------------------------------------------------------

WreathElement random_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span, std::int64_t coeff,
                             std::int64_t max_shift) {
  WreathElement base = random_base_element(spec, rng, span);
  LaurentPoly free;
  if (spec.k > 0) {
    const std::int64_t lo = -span / 2;
    for (std::int64_t e = lo; e < lo + span; ++e)
      if (uniform(rng, 0, 1)) free.add_term(e, uniform(rng, -coeff, coeff));
  }
  return {spec, std::move(free), base.torsion_part(), uniform(rng, -max_shift, max_shift)};
}

WreathElement random_base_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span) {
  LaurentPoly free;
  if (spec.k > 0) {
    const std::int64_t lo = -span / 2;
    for (std::int64_t e = lo; e < lo + span; ++e)
      if (uniform(rng, 0, 1)) free.add_term(e, uniform(rng, -9, 9));
  }
  return {spec, std::move(free), random_torsion_element(spec, rng, std::max<std::int64_t>(1, span / 2)).torsion_part(), 0};
}

WreathElement random_torsion_element(const AbelianSpec& spec, std::mt19937_64& rng, std::int64_t span) {
  WreathElement::TorsionPart tors;
  const std::int64_t lo = -span / 2;
  for (std::int64_t copy = lo; copy < lo + span; ++copy)
    for (std::size_t f = 0; f < spec.torsion.size(); ++f)
      if (uniform(rng, 0, 1)) tors[{copy, f}] = uniform(rng, 0, spec.torsion[f] - 1);
  return {spec, {}, std::move(tors), 0};
}

namespace {

IntMatrix random_unimodular(std::size_t k, std::mt19937_64& rng) {
  IntMatrix m = IntMatrix::identity(k);
  const int steps = static_cast<int>(2 * k + 1);
  for (int step = 0; step < steps; ++step) {
    auto i = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(k) - 1));
    auto j = static_cast<std::size_t>(uniform(rng, 0, static_cast<std::int64_t>(k) - 1));
    switch (uniform(rng, 0, 2)) {
      case 0:  // row_i += c·row_j
        if (i != j) {
          std::int64_t c = uniform(rng, -2, 2);
          for (std::size_t col = 0; col < k; ++col) m(i, col) = add(m(i, col), mul(c, m(j, col)));
        }
        break;
      case 1:
        for (std::size_t col = 0; col < k; ++col) std::swap(m(i, col), m(j, col));
        break;
      default:
        for (std::size_t col = 0; col < k; ++col) m(i, col) = neg(m(i, col));
    }
  }
  return m;
}

}  // namespace

WreathAutomorphism random_automorphism(const AbelianSpec& spec, std::mt19937_64& rng) {
  spec.validate();
  std::optional<IntMatrix> base;
  if (spec.k > 0) base = random_unimodular(static_cast<std::size_t>(spec.k), rng);
  TorsionMap tm;
  for (auto d : spec.torsion) {
    std::int64_t u;
    do u = uniform(rng, 1, d - 1);
    while (std::gcd(u, d) != 1);
    tm.units.push_back(u);
    std::vector<std::int64_t> row;
    for (std::int64_t j = 0; j < spec.k; ++j) row.push_back(uniform(rng, 0, d - 1));
    tm.cross.push_back(std::move(row));
  }
  bool mirror = uniform(rng, 0, 1) == 1;
  WreathElement inner = random_element(spec, rng, 4, 3, 2);
  return make_automorphism(spec, std::move(base), mirror, std::move(inner), std::move(tm));
}

bool preserves_base(const WreathAutomorphism& phi, std::span<const WreathElement> sample) {
  bool ok = true;
  for (const auto& g : sample) {
    if (!g.in_base()) throw PreconditionError("sample element is not in the base group");
    if (!phi.apply(g).in_base()) ok = false;
  }
  return ok;
}

bool preserves_torsion(const WreathAutomorphism& phi, std::span<const WreathElement> sample) {
  bool ok = true;
  for (const auto& g : sample) {
    if (!g.in_torsion_base()) throw PreconditionError("sample element is not in the torsion base group");
    if (!phi.apply(g).in_torsion_base()) ok = false;
  }
  return ok;
}

std::optional<std::int64_t> element_order(const WreathElement& g) {
  if (g.shift() != 0 || !g.free_part().is_zero()) return std::nullopt;
  std::int64_t order = 1;
  for (const auto& [key, v] : g.torsion_part()) {
    const std::int64_t d = g.spec().torsion[key.second];
    const std::int64_t o = d / std::gcd(d, v);
    order = mul(order / std::gcd(order, o), o);
  }
  return order;
}

WreathElement project_free(const WreathElement& g) {
  return {AbelianSpec{g.spec().k, {}}, g.free_part(), {}, g.shift()};
}

std::int64_t outside_span_witness(std::span<const WreathElement> sample) {
  std::int64_t top = 0;
  bool any = false;
  for (const auto& g : sample) {
    if (g.free_part().is_zero()) continue;
    top = any ? std::max(top, g.free_part().max_exponent()) : g.free_part().max_exponent();
    any = true;
  }
  return any ? add(top, 1) : 0;
}

}  // namespace twistgrp
