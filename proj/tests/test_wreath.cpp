#include <doctest.h>

#include <numeric>
#include <random>
#include <vector>

#include "twistgrp/errors.hpp"
#include "twistgrp/wreath.hpp"

using namespace twistgrp;

namespace {

const AbelianSpec Z1{1, {}}, Z2{2, {}}, Z3{3, {}};

WreathElement el(const AbelianSpec& spec, const char* poly, std::int64_t shift) {
  return {spec, LaurentPoly::parse(poly), {}, shift};
}

std::vector<AbelianSpec> axiom_specs() { return {Z1, Z2, Z3, {1, {2}}, {2, {2, 3}}}; }

// Repeated multiplication until the identity, giving up after `cap` steps.
std::optional<std::int64_t> order_by_iteration(const WreathElement& g, std::int64_t cap) {
  WreathElement x = g;
  for (std::int64_t n = 1; n <= cap; ++n) {
    if (x.is_identity()) return n;
    x = wreath_mul(x, g);
  }
  return std::nullopt;
}

// Σ of the coefficients at exponents ≡ j mod k, computed term by term.
std::int64_t eps_by_hand(std::int64_t k, std::int64_t j, const LaurentPoly& p) {
  std::int64_t total = 0;
  for (auto [e, c] : p.terms())
    if (((e % k) + k) % k == j) total += c;
  return total;
}

bool det_is_unit(const IntMatrix& m) {
  const mpz_class d = m.determinant();
  return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("multiplication examples") {
  CHECK(wreath_mul(el(Z1, "x", 1), el(Z1, "1", 0)) == el(Z1, "2x", 1));
  CHECK(wreath_mul(el(Z2, "1", 1), el(Z2, "x", 0)) == el(Z2, "1 + x^3", 1));
  CHECK(wreath_mul(el(Z2, "3x^-2 + x", 0), el(Z2, "5 - x", 0)) == el(Z2, "3x^-2 + 5", 0));
}

TEST_CASE("inverse examples") {
  CHECK(wreath_inv(WreathElement::identity(Z1)) == WreathElement::identity(Z1));
  CHECK(wreath_inv(el(Z1, "x", 1)) == el(Z1, "-1", -1));
  const auto p = el(Z2, "3x^-2 - x^-1 + 5 + 7x", 0);
  CHECK(wreath_inv(p) == el(Z2, "-3x^-2 + x^-1 - 5 - 7x", 0));
  CHECK(wreath_mul(p, wreath_inv(p)).is_identity());
}

TEST_CASE("torsion copies move with the shift") {
  const AbelianSpec spec{1, {3}};
  const auto t = WreathElement::torsion_generator(spec, 0, 0);
  const auto b = WreathElement::shift_generator(spec);
  const auto conj = wreath_mul(wreath_mul(b, t), wreath_inv(b));
  CHECK(conj == WreathElement::torsion_generator(spec, 0, 1));
  CHECK(wreath_pow(t, 3).is_identity());
  CHECK(WreathElement(spec, {}, {{{0, 0}, 4}}, 0) == t);
  CHECK(WreathElement(spec, {}, {{{2, 0}, 3}}, 0).is_identity());
  CHECK_THROWS_AS(WreathElement(spec, {}, {{{0, 1}, 1}}, 0), std::invalid_argument);
  CHECK_THROWS_AS(WreathElement(AbelianSpec{0, {2}}, LaurentPoly::monomial(0), {}, 0), std::invalid_argument);
  CHECK_THROWS_AS((AbelianSpec{1, {1}}.validate()), std::invalid_argument);
}

TEST_CASE("mixing groups is rejected") {
  CHECK_THROWS_AS(wreath_mul(el(Z1, "x", 0), el(Z2, "x", 0)), SpecMismatch);
  CHECK_THROWS_AS(wreath_mul(WreathElement::identity({1, {2}}), WreathElement::identity({1, {3}})), SpecMismatch);
}

TEST_CASE("group axioms on random elements") {
  std::mt19937_64 rng(2024);
  for (const auto& spec : axiom_specs()) {
    const auto e = WreathElement::identity(spec);
    for (int i = 0; i < 10000; ++i) {
      const auto x = random_element(spec, rng), y = random_element(spec, rng), z = random_element(spec, rng);
      REQUIRE(wreath_mul(wreath_mul(x, y), z) == wreath_mul(x, wreath_mul(y, z)));
      REQUIRE(wreath_mul(x, e) == x);
      REQUIRE(wreath_mul(e, x) == x);
      REQUIRE(wreath_mul(x, wreath_inv(x)).is_identity());
      REQUIRE(wreath_mul(wreath_inv(x), x).is_identity());
    }
  }
}

TEST_CASE("powers agree with repeated multiplication") {
  std::mt19937_64 rng(7);
  for (const auto& spec : axiom_specs())
    for (int i = 0; i < 50; ++i) {
      const auto g = random_element(spec, rng);
      const int n = static_cast<int>(rng() % 11) - 5;
      WreathElement oracle = WreathElement::identity(spec);
      for (int t = 0; t < std::abs(n); ++t) oracle = wreath_mul(oracle, n > 0 ? g : wreath_inv(g));
      CHECK(wreath_pow(g, n) == oracle);
    }
}

TEST_CASE("commutator examples") {
  std::mt19937_64 rng(8);
  const auto g = random_element(Z2, rng);
  CHECK(wreath_commutator(g, g).is_identity());
  for (int n = -3; n <= 3; ++n) {
    const WreathElement xn(Z1, LaurentPoly::monomial(n), {}, 0);
    const WreathElement expected(Z1, LaurentPoly::monomial(n) - LaurentPoly::monomial(n + 1), {}, 0);
    CHECK(wreath_commutator(xn, WreathElement::shift_generator(Z1)) == expected);
  }
  const auto g1 = el(Z2, "1", 1), g2 = el(Z2, "x", 2);
  CHECK(wreath_commutator(g1, g2) == el(Z2, "1 - x + x^3 - x^4", 0));
  CHECK(commutator_closed_form(g1, g2) == el(Z2, "1 - x + x^3 - x^4", 0));
}

TEST_CASE("closed-form commutator equals the direct one") {
  std::mt19937_64 rng(9);
  for (const auto& spec : {Z1, Z2, Z3})
    for (int i = 0; i < 2000; ++i) {
      const auto x = random_element(spec, rng), y = random_element(spec, rng);
      REQUIRE(commutator_closed_form(x, y) == wreath_commutator(x, y));
    }
  CHECK_THROWS_AS(commutator_closed_form(WreathElement::identity({1, {2}}), WreathElement::identity({1, {2}})),
                  PreconditionError);
}

TEST_CASE("eps examples") {
  const auto p = LaurentPoly::parse("3x^-2 - x^-1 + 5 + 7x");
  CHECK(eps(2, 0, p) == 8);
  CHECK(eps(2, 1, p) == 6);
  CHECK(eps(3, 2, LaurentPoly()) == 0);
  CHECK(eps(3, 1, LaurentPoly::parse("x^-5 + x^-2 + 2x + x^4")) == 5);
  CHECK_THROWS_AS(eps(2, 2, p), std::invalid_argument);
  std::mt19937_64 rng(10);
  for (std::int64_t k = 1; k <= 4; ++k) {
    const AbelianSpec spec{k, {}};
    for (int i = 0; i < 200; ++i) {
      const auto q = random_element(spec, rng, 12).free_part();
      const std::int64_t s = static_cast<std::int64_t>(rng() % 9) - 4;
      const auto killed = q - q.shifted(k * s);
      for (std::int64_t j = 0; j < k; ++j) {
        CHECK(eps(k, j, q) == eps_by_hand(k, j, q));
        CHECK(eps(k, j, killed) == 0);
      }
    }
  }
}

TEST_CASE("abelianization examples") {
  CHECK(abelianize(WreathElement::identity(Z2)) == std::vector<std::int64_t>{0, 0, 0});
  CHECK(abelianize(el(Z2, "3x^-2 - x^-1 + 5 + 7x", 4)) == std::vector<std::int64_t>{8, 6, 4});
  CHECK_THROWS_AS(abelianize(WreathElement::identity({1, {2}})), PreconditionError);
}

TEST_CASE("abelianization is a surjective homomorphism with kernel the commutant") {
  std::mt19937_64 rng(11);
  for (const auto& spec : {Z1, Z2, Z3}) {
    const auto k = static_cast<std::size_t>(spec.k);
    for (int i = 0; i < 1000; ++i) {
      const auto x = random_element(spec, rng), y = random_element(spec, rng);
      const auto ax = abelianize(x), ay = abelianize(y), axy = abelianize(wreath_mul(x, y));
      for (std::size_t t = 0; t <= k; ++t) REQUIRE(axy[t] == ax[t] + ay[t]);
      const bool zero = std::all_of(ax.begin(), ax.end(), [](std::int64_t v) { return v == 0; });
      CHECK(in_commutant(x) == zero);
    }
    // products of commutators lie in the kernel
    for (int i = 0; i < 200; ++i) {
      WreathElement prod = WreathElement::identity(spec);
      for (int t = 0; t < 3; ++t)
        prod = wreath_mul(prod, wreath_commutator(random_element(spec, rng), random_element(spec, rng)));
      CHECK(in_commutant(prod));
      CHECK(abelianize(prod) == std::vector<std::int64_t>(k + 1, 0));
    }
    // kernel elements are products of commutators x^n − x^{n+k} = [(x^n, 0), b]
    for (int i = 0; i < 200; ++i) {
      auto x = random_base_element(spec, rng, 8);
      LaurentPoly p = x.free_part();
      for (std::size_t j = 0; j < k; ++j) p.add_term(static_cast<std::int64_t>(j), -eps(spec.k, static_cast<std::int64_t>(j), p));
      const WreathElement g(spec, p, {}, 0);
      REQUIRE(in_commutant(g));
      WreathElement rebuilt = WreathElement::identity(spec);
      // peel off the highest monomial with a commutator until nothing is left
      LaurentPoly rest = p;
      while (!rest.is_zero()) {
        const auto top = rest.max_exponent();
        const auto c = rest.coeff(top);
        const WreathElement xn(spec, LaurentPoly::monomial(top - spec.k, -c), {}, 0);
        const auto comm = wreath_commutator(xn, WreathElement::shift_generator(spec));
        rebuilt = wreath_mul(rebuilt, comm);
        rest -= comm.free_part();
        REQUIRE((rest.is_zero() || rest.max_exponent() < top));
      }
      CHECK(rebuilt == g);
    }
    // surjectivity: generators hit the standard basis
    for (std::int64_t j = 0; j < spec.k; ++j) {
      std::vector<std::int64_t> unit(k + 1, 0);
      unit[static_cast<std::size_t>(j)] = 1;
      CHECK(abelianize(WreathElement::free_generator(spec, j)) == unit);
    }
    std::vector<std::int64_t> last(k + 1, 0);
    last[k] = 1;
    CHECK(abelianize(WreathElement::shift_generator(spec)) == last);
  }
}

TEST_CASE("commutant membership examples") {
  CHECK(in_commutant(el(Z1, "x^3 - x^4", 0)));
  CHECK(in_commutant(el(Z2, "x^-1 - x", 0)));
  CHECK(in_commutant(WreathElement::identity(Z2)));
  CHECK_FALSE(in_commutant(el(Z1, "x", 0)));
  CHECK_FALSE(in_commutant(el(Z1, "0", 1)));
}

TEST_CASE("every eps annihilates every commutator") {
  std::mt19937_64 rng(12);
  for (const auto& spec : {Z1, Z2, Z3})
    for (int i = 0; i < 500; ++i) {
      const auto c = wreath_commutator(random_element(spec, rng), random_element(spec, rng));
      CHECK(c.shift() == 0);
      for (std::int64_t j = 0; j < spec.k; ++j) CHECK(eps(spec.k, j, c.free_part()) == 0);
    }
}

TEST_CASE("commuting examples") {
  std::mt19937_64 rng(13);
  const auto g = random_element(Z2, rng);
  CHECK(commute_iff_identity(g, g));
  CHECK(commute_iff_identity(el(Z1, "1", 0), el(Z1, "x", 0)));
  CHECK_FALSE(commute_iff_identity(el(Z1, "1", 1), el(Z1, "x", 1)));
  CHECK_FALSE(commute_direct(el(Z1, "1", 1), el(Z1, "x", 1)));
}

TEST_CASE("the polynomial identity decides commutation: exhaustive k = 1") {
  // every sum of at most two monomials c·x^e with e in [−2, 2], c in {−1, 1}, or zero
  std::vector<LaurentPoly> polys{LaurentPoly()};
  for (int e = -2; e <= 2; ++e)
    for (int c : {-1, 1}) polys.push_back(LaurentPoly::monomial(e, c));
  const std::size_t singles = polys.size();
  for (std::size_t i = 1; i < singles; ++i)
    for (std::size_t j = i + 1; j < singles; ++j) polys.push_back(polys[i] + polys[j]);
  std::size_t checked = 0, commuting = 0;
  for (const auto& p : polys)
    for (const auto& q : polys)
      for (int s = -2; s <= 2; ++s)
        for (int t = -2; t <= 2; ++t) {
          const WreathElement g1(Z1, p, {}, s), g2(Z1, q, {}, t);
          const bool direct = wreath_commutator(g1, g2).is_identity();
          REQUIRE(commute_iff_identity(g1, g2) == direct);
          REQUIRE(commute_direct(g1, g2) == direct);
          ++checked;
          commuting += direct;
        }
  CHECK(checked > 10000);
  CHECK(commuting > 0);
  CHECK(commuting < checked);
}

TEST_CASE("the polynomial identity decides commutation: random and powers") {
  std::mt19937_64 rng(14);
  for (const auto& spec : {Z1, Z2, Z3})
    for (int i = 0; i < 500; ++i) {
      const auto g = random_element(spec, rng, 4, 3, 2), h = random_element(spec, rng, 4, 3, 2);
      CHECK(commute_iff_identity(g, h) == commute_direct(g, h));
      // powers of one element always commute
      const auto gp = wreath_pow(g, 2), gq = wreath_pow(g, -3);
      CHECK(commute_iff_identity(gp, gq));
      CHECK(commute_direct(gp, gq));
    }
}

TEST_CASE("geometric quotient") {
  CHECK(geometric_quotient(2, 0).is_zero());
  CHECK(geometric_quotient(1, 3) == LaurentPoly::parse("1 + x + x^2"));
  CHECK(geometric_quotient(2, -2) == LaurentPoly::parse("-x^-4 - x^-2"));
  const auto one_minus = [](std::int64_t e) { return LaurentPoly::constant(1) - LaurentPoly::monomial(e); };
  for (std::int64_t k = 1; k <= 4; ++k)
    for (std::int64_t s = -6; s <= 6; ++s) CHECK(one_minus(k) * geometric_quotient(k, s) == one_minus(k * s));
}

TEST_CASE("matrix on the abelianization") {
  for (const auto& spec : {Z1, Z2, Z3}) {
    const auto id = identity_automorphism(spec);
    CHECK(pi_matrix(id.generator_images()) == IntMatrix::identity(static_cast<std::size_t>(spec.k + 1)));
  }
  const auto mirror = make_automorphism(Z1, std::nullopt, true, WreathElement::identity(Z1), {});
  const auto images = mirror.generator_images();
  CHECK(images.a[0] == el(Z1, "1", 0));
  CHECK(images.b == el(Z1, "0", -1));
  CHECK(pi_matrix(images) == IntMatrix{{1, 0}, {0, -1}});
  // columns are the abelianized images, torsion projected away
  std::mt19937_64 rng(15);
  for (const AbelianSpec& spec : {Z2, AbelianSpec{2, {2, 3}}}) {
    const auto phi = random_automorphism(spec, rng);
    const auto imgs = phi.generator_images();
    const auto pi = pi_matrix(imgs);
    for (std::size_t i = 0; i <= 2; ++i) {
      const auto& img = i < 2 ? imgs.a[i] : imgs.b;
      const auto col = abelianize(project_free(img));
      for (std::size_t r = 0; r <= 2; ++r) CHECK(pi(r, i) == col[r]);
    }
  }
}

TEST_CASE("minor relations on synthetic commuting images") {
  std::mt19937_64 rng(16);
  for (const auto& spec : {Z1, Z2, Z3}) {
    for (int trial = 0; trial < 40; ++trial) {
      auto g = random_element(spec, rng, 4, 3, 2);
      if (g.shift() == 0) g = wreath_mul(g, WreathElement::shift_generator(spec));
      // same (P, s) for every generator
      GeneratorImages same{std::vector<WreathElement>(static_cast<std::size_t>(spec.k), g), g};
      CHECK(minor_relations_hold(same));
      // distinct powers of one element
      GeneratorImages powers{{}, wreath_pow(g, static_cast<std::int64_t>(rng() % 3) + 1)};
      for (std::int64_t i = 0; i < spec.k; ++i) powers.a.push_back(wreath_pow(g, i + 1));
      const auto rel = commuting_image_relations(powers);
      CHECK(rel.minors_ab);
      CHECK(rel.minors_b);
      CHECK(rel.divided_ab);
      CHECK(rel.divided_b);
      // direct evaluation of the minors
      const std::int64_t last = spec.k - 1;
      for (const auto& pi : powers.a) {
        for (const auto& pj : powers.a)
          CHECK(eps_by_hand(spec.k, last, pi.free_part()) * pj.shift() ==
                eps_by_hand(spec.k, last, pj.free_part()) * pi.shift());
        CHECK(eps_by_hand(spec.k, last, pi.free_part()) * powers.b.shift() ==
              eps_by_hand(spec.k, last, powers.b.free_part()) * pi.shift());
        // the relation before dividing by (1 − x^k)
        const LaurentPoly one = LaurentPoly::constant(1);
        for (const auto& pj : powers.a)
          CHECK(pi.free_part() * (one - LaurentPoly::monomial(spec.k * pj.shift())) ==
                pj.free_part() * (one - LaurentPoly::monomial(spec.k * pi.shift())));
      }
    }
  }
}

TEST_CASE("minor relations reject genuine automorphism images") {
  std::mt19937_64 rng(17);
  for (const auto& spec : {Z1, Z2}) {
    for (int trial = 0; trial < 20; ++trial) {
      const auto phi = random_automorphism(spec, rng);
      try {
        (void)minor_relations_hold(phi.generator_images());
        FAIL("expected a precondition failure");
      } catch (const PreconditionError& e) {
        CHECK(std::string(e.what()).find("shift 0") != std::string::npos);
      }
    }
  }
  GeneratorImages noncommuting{{el(Z2, "1", 1), el(Z2, "x", 1)}, el(Z2, "0", 1)};
  CHECK_THROWS_WITH_AS(minor_relations_hold(noncommuting), doctest::Contains("do not commute"), PreconditionError);
}

TEST_CASE("automorphism constructor examples") {
  std::mt19937_64 rng(18);
  for (const auto& spec : axiom_specs()) {
    const auto id = identity_automorphism(spec);
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(spec, rng);
      CHECK(id.apply(g) == g);
    }
  }
  for (const auto& spec : {Z1, Z2, Z3}) {
    const auto inner_b = make_automorphism(spec, std::nullopt, false, WreathElement::shift_generator(spec), {});
    for (int i = 0; i < 100; ++i) {
      const auto g = random_element(spec, rng);
      CHECK(inner_b.apply(g) == WreathElement(spec, g.free_part().shifted(spec.k), {}, g.shift()));
    }
  }
  const auto mirror = make_automorphism(Z1, std::nullopt, true, WreathElement::identity(Z1), {});
  for (int i = 0; i < 200; ++i) {
    const auto g = random_element(Z1, rng), h = random_element(Z1, rng);
    LaurentPoly reflected;
    for (auto [e, c] : g.free_part().terms()) reflected.add_term(-e, c);
    CHECK(mirror.apply(g) == WreathElement(Z1, reflected, {}, -g.shift()));
    CHECK(mirror.apply(wreath_mul(g, h)) == wreath_mul(mirror.apply(g), mirror.apply(h)));
  }
  CHECK_THROWS_AS(make_automorphism(Z2, IntMatrix{{2, 0}, {0, 1}}, false, WreathElement::identity(Z2), {}),
                  std::invalid_argument);
  const AbelianSpec t4{1, {4}};
  CHECK_THROWS_AS(make_automorphism(t4, std::nullopt, false, WreathElement::identity(t4), TorsionMap{{2}, {}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(make_automorphism(Z2, std::nullopt, false, WreathElement::identity(Z1), {}), SpecMismatch);
}

TEST_CASE("constructed automorphisms: conclusions on the whole family") {
  std::mt19937_64 rng(19);
  for (const AbelianSpec& spec : {Z1, Z2, Z3, AbelianSpec{1, {2}}, AbelianSpec{2, {2, 3}}, AbelianSpec{0, {4}}}) {
    const std::int64_t nmax = spec.max_torsion_order();
    for (int trial = 0; trial < 12; ++trial) {
      const auto phi = random_automorphism(spec, rng);
      std::vector<WreathElement> base, tors;
      for (int i = 0; i < 100; ++i) {
        base.push_back(random_base_element(spec, rng));
        tors.push_back(random_torsion_element(spec, rng));
        const auto g = random_element(spec, rng), h = random_element(spec, rng);
        REQUIRE(phi.apply(wreath_mul(g, h)) == wreath_mul(phi.apply(g), phi.apply(h)));
        REQUIRE(phi.apply_inverse(phi.apply(g)) == g);
      }
      const auto imgs = phi.generator_images();
      for (const auto& a : imgs.a) CHECK(a.shift() == 0);
      if (spec.k > 0) CHECK(det_is_unit(pi_matrix(imgs)));
      CHECK(preserves_base(phi, base));
      CHECK(preserves_torsion(phi, tors));
      for (const auto& t : tors) CHECK(wreath_pow(phi.apply(t), nmax).is_identity());
    }
  }
  CHECK_THROWS_AS(preserves_base(identity_automorphism(Z1), std::vector{el(Z1, "x", 1)}), PreconditionError);
  CHECK_THROWS_AS(preserves_torsion(identity_automorphism(Z1), std::vector{el(Z1, "x", 0)}), PreconditionError);
}

TEST_CASE("a shifting map is caught by preserves_base") {
  // the identity automorphism keeps the base, but a base sample multiplied by b does not
  const auto id = identity_automorphism(Z1);
  CHECK(preserves_base(id, std::vector{el(Z1, "x - 3", 0)}));
  CHECK_FALSE(wreath_mul(el(Z1, "x", 0), WreathElement::shift_generator(Z1)).in_base());
}

TEST_CASE("element order") {
  CHECK(element_order(WreathElement::identity(Z1)) == 1);
  const AbelianSpec spec{1, {2, 3}};
  const WreathElement t(spec, {}, {{{0, 0}, 1}, {{5, 1}, 2}}, 0);
  CHECK(element_order(t) == 6);
  CHECK(order_by_iteration(t, 100) == 6);
  CHECK_FALSE(element_order(el(Z1, "x", 0)).has_value());
  CHECK_FALSE(element_order(WreathElement(spec, {}, {{{0, 0}, 1}}, 1)).has_value());
  CHECK(element_order(WreathElement::torsion_generator({1, {2}}, 0)) == 2);
  std::mt19937_64 rng(20);
  const AbelianSpec big{2, {4, 6}};
  for (int i = 0; i < 200; ++i) {
    const auto g = random_torsion_element(big, rng);
    CHECK(element_order(g) == order_by_iteration(g, 100));
    CHECK(*element_order(g) <= big.max_torsion_order());
  }
  CHECK(big.max_torsion_order() == 12);
  CHECK(Z1.max_torsion_order() == 1);
}

TEST_CASE("the base group is infinitely generated") {
  std::mt19937_64 rng(21);
  for (const auto& spec : {Z1, Z2}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<WreathElement> sample;
      const std::size_t size = 1 + rng() % 10;
      for (std::size_t i = 0; i < size; ++i) sample.push_back(random_base_element(spec, rng, 10));
      const auto n = outside_span_witness(sample);
      // every integer combination of the sample vanishes above the largest exponent
      for (const auto& g : sample)
        if (!g.free_part().is_zero()) CHECK(g.free_part().max_exponent() < n);
      for (int c = 0; c < 50; ++c) {
        WreathElement combo = WreathElement::identity(spec);
        for (const auto& g : sample) combo = wreath_mul(combo, wreath_pow(g, static_cast<std::int64_t>(rng() % 7) - 3));
        CHECK(combo.free_part().coeff(n) == 0);
      }
    }
  }
}

TEST_CASE("projection onto the free quotient") {
  std::mt19937_64 rng(22);
  const AbelianSpec spec{2, {2, 3}};
  for (int i = 0; i < 300; ++i) {
    const auto g = random_element(spec, rng), h = random_element(spec, rng);
    CHECK(project_free(wreath_mul(g, h)) == wreath_mul(project_free(g), project_free(h)));
    CHECK(project_free(g).spec() == Z2);
  }
}
