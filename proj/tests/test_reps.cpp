#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <random>
#include <tuple>

#include "support.hpp"
#include "twistgrp/errors.hpp"
#include "twistgrp/reps.hpp"
#include "twistgrp/twisted.hpp"

using namespace twistgrp;
using twistgrp::testing::random_heis;
using twistgrp::testing::sample_rep_params;

namespace {

RepParams rho2() { return {RationalPhase(1, 4), RationalPhase(1, 2), RationalPhase(1, 2), 2}; }

// The basis formula read with the phase indexed by the source vector j:
// ε_j ↦ e^{2πi(mξ + (k + jm)η + ⌊(s+j)/p⌋α)} ε_{(j−s) mod p}.
MonomialOperator source_indexed(const RepParams& r, const HeisenbergElement& h) {
  const std::int64_t p = r.p();
  std::vector<std::size_t> perm(p);
  std::vector<RationalPhase> phases(p);
  for (std::int64_t j = 0; j < p; ++j) {
    perm[j] = static_cast<std::size_t>(((j - h.s) % p + p) % p);
    const std::int64_t fl = (h.s + j) >= 0 ? (h.s + j) / p : -((-(h.s + j) + p - 1) / p);
    phases[j] = r.xi().times(h.m) + r.eta().times(h.k + j * h.m) + r.alpha().times(fl);
  }
  return {perm, phases};
}

// Function realization: [ρ(h)f](x_j) = A(h, x_j)·f(x_{(j+s) mod p}) with
// A(h, x_j) = e^{2πi(mξ + (k + jm)η + ⌊(s+j)/p⌋α)}, evaluated on the indicator basis as dense matrices.
std::vector<std::complex<double>> function_realization(const RepParams& r, const HeisenbergElement& h) {
  const std::int64_t p = r.p();
  std::vector<std::complex<double>> mat(p * p, 0.0);
  for (std::int64_t j = 0; j < p; ++j) {
    const std::int64_t src = ((j + h.s) % p + p) % p;
    const double fl = std::floor(static_cast<double>(h.s + j) / static_cast<double>(p));
    const double theta = h.m * r.xi().to_double() + (h.k + j * h.m) * r.eta().to_double() + fl * r.alpha().to_double();
    // (ρ(h)ε_src)(x_j) = A(h, x_j)
    mat[j * p + src] = std::polar(1.0, 2 * M_PI * theta);
  }
  return mat;
}

bool dense_close(const std::vector<std::complex<double>>& x, const std::vector<std::complex<double>>& y) {
  if (x.size() != y.size()) return false;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (std::abs(x[i] - y[i]) > 1e-9) return false;
  return true;
}

bool canonical_operator(const MonomialOperator& op) {
  std::vector<bool> seen(op.dim(), false);
  for (std::size_t t : op.perm()) {
    if (t >= op.dim() || seen[t]) return false;
    seen[t] = true;
  }
  return std::all_of(op.phases().begin(), op.phases().end(),
                     [](const RationalPhase& q) { return q.value() >= 0 && q.value() < 1; });
}

}  // namespace

TEST_CASE("orbit size") {
  CHECK(orbit_size(RationalPhase(1, 2)) == 2);
  CHECK(orbit_size(RationalPhase()) == 1);
  // iterate (ξ, η) ↦ (ξ + η, η) until ξ returns
  const RationalPhase eta(3, 7), xi0(1, 5);
  RationalPhase xi = xi0 + eta;
  std::int64_t steps = 1;
  while (xi != xi0) {
    xi += eta;
    ++steps;
  }
  CHECK(steps == 7);
  CHECK(orbit_size(eta) == 7);
}

TEST_CASE("parameter validation") {
  CHECK_NOTHROW(RepParams::trivial());
  CHECK_NOTHROW(RepParams(RationalPhase(1, 3), RationalPhase(2, 4), RationalPhase(), 2));
  CHECK_THROWS_AS(RepParams(RationalPhase(), RationalPhase(), RationalPhase(), 2), std::invalid_argument);
  CHECK_THROWS_AS(RepParams(RationalPhase(), RationalPhase(1, 3), RationalPhase(), 2), std::invalid_argument);
  CHECK_THROWS_AS(RepParams(RationalPhase(), RationalPhase(), RationalPhase(), 0), std::invalid_argument);
  try {
    RepParams(RationalPhase(), RationalPhase(1, 4), RationalPhase(), 3);
    FAIL("expected rejection");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("denominator exactly p") != std::string::npos);
  }
}

TEST_CASE("rep_apply examples") {
  const auto r = rho2();
  CHECK(rep_apply(r, HeisenbergElement::identity()) == MonomialOperator::identity(2));
  const auto rb = rep_apply(r, heis::b);
  CHECK(rb.perm() == std::vector<std::size_t>{0, 1});
  CHECK(rb.phases() == std::vector<RationalPhase>{RationalPhase(1, 2), RationalPhase(1, 2)});
  // c swaps the basis vectors: ε_0 ↦ −ε_1, ε_1 ↦ ε_0, i.e. [[0, 1], [−1, 0]].
  const auto rc = rep_apply(r, heis::c);
  CHECK(rc.perm() == std::vector<std::size_t>{1, 0});
  CHECK(rc.phases() == std::vector<RationalPhase>{RationalPhase(1, 2), RationalPhase()});
  const auto d = rc.dense();
  CHECK(std::abs(d[0]) < 1e-12);
  CHECK(std::abs(d[1] - 1.0) < 1e-12);
  CHECK(std::abs(d[2] + 1.0) < 1e-12);
  CHECK(std::abs(d[3]) < 1e-12);
}

TEST_CASE("rep_apply agrees with the function realization") {
  std::mt19937_64 rng(31);
  for (const auto& params : sample_rep_params(rng, 20))
    for (int i = 0; i < 300; ++i) {
      const auto h = random_heis(rng, 6);
      CHECK(dense_close(rep_apply(params, h).dense(), function_realization(params, h)));
    }
}

TEST_CASE("reading the phase at the source vector is not a homomorphism") {
  const auto r = rho2();
  // the literal reading gives ρ(c) phases (0, 1/2) and fails on (c, a)
  CHECK(source_indexed(r, heis::c).phases() == std::vector<RationalPhase>{RationalPhase(), RationalPhase(1, 2)});
  CHECK(source_indexed(r, heis::mul(heis::c, heis::a)) !=
        source_indexed(r, heis::c).compose(source_indexed(r, heis::a)));
  std::mt19937_64 rng(5);
  for (const auto& params : sample_rep_params(rng, 12)) {
    if (params.p() == 1) continue;
    bool failed = false;
    for (const auto& g : heis::box(2)) {
      for (const auto& h : heis::box(2))
        if (source_indexed(params, heis::mul(g, h)) != source_indexed(params, g).compose(source_indexed(params, h))) {
          failed = true;
          break;
        }
      if (failed) break;
    }
    CHECK_MESSAGE(failed, "p = " << params.p());
  }
}

TEST_CASE("rep_apply is an exact homomorphism on the radius-3 ball") {
  std::mt19937_64 rng(77);
  const auto ball = heis::box(3);
  for (const auto& params : sample_rep_params(rng, 20)) {
    std::map<std::tuple<long, long, long>, MonomialOperator> cache;
    auto op = [&](const HeisenbergElement& h) -> const MonomialOperator& {
      auto key = std::make_tuple(h.m, h.k, h.s);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, rep_apply(params, h)).first;
      return it->second;
    };
    std::size_t failures = 0;
    for (const auto& g : ball)
      for (const auto& h : ball) {
        const auto composed = op(g).compose(op(h));
        if (composed != op(heis::mul(g, h)) || !canonical_operator(composed)) ++failures;
      }
    CHECK_MESSAGE(failures == 0, "p = " << params.p());
  }
}

TEST_CASE("rep_apply is a homomorphism on random pairs") {
  std::mt19937_64 rng(78);
  const auto params = sample_rep_params(rng, 20);
  for (int i = 0; i < 10000; ++i) {
    const auto& r = params[i % params.size()];
    const auto g = random_heis(rng, 40), h = random_heis(rng, 40);
    REQUIRE(rep_apply(r, heis::mul(g, h)) == rep_apply(r, g).compose(rep_apply(r, h)));
  }
}

TEST_CASE("monomial operator algebra") {
  std::mt19937_64 rng(3);
  for (const auto& r : sample_rep_params(rng, 20)) {
    const auto x = rep_apply(r, random_heis(rng, 9)), y = rep_apply(r, random_heis(rng, 9)),
               z = rep_apply(r, random_heis(rng, 9));
    CHECK(x.compose(y).compose(z) == x.compose(y.compose(z)));
    CHECK(x.compose(x.inverse()) == MonomialOperator::identity(x.dim()));
    CHECK(x.inverse().compose(x) == MonomialOperator::identity(x.dim()));
    CHECK(x.compose(MonomialOperator::identity(x.dim())) == x);
    CHECK(canonical_operator(x.inverse()));
  }
  CHECK_THROWS_AS(MonomialOperator({0, 0}, {RationalPhase(), RationalPhase()}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOperator({0, 2}, {RationalPhase(), RationalPhase()}), std::invalid_argument);
  CHECK_THROWS_AS(MonomialOperator({0}, {RationalPhase(), RationalPhase()}), std::invalid_argument);
}

TEST_CASE("trace of a monomial operator") {
  const MonomialOperator op({1, 0, 2}, {RationalPhase(1, 3), RationalPhase(1, 2), RationalPhase(1, 5)});
  CHECK(op.trace().terms() == std::vector<RationalPhase>{RationalPhase(1, 5)});
}

TEST_CASE("exact comparison of character values") {
  const RationalPhase z;
  CHECK(CharacterValue({z, RationalPhase(1, 3), RationalPhase(2, 3)}) == CharacterValue());
  CHECK(CharacterValue({z, RationalPhase(1, 2)}).is_zero());
  CHECK(CharacterValue({RationalPhase(1, 4), RationalPhase(3, 4)}).is_zero());
  CHECK_FALSE(CharacterValue(1, z) == CharacterValue(1, RationalPhase(1, 2)));
  CHECK(CharacterValue(2, RationalPhase(1, 2)) == CharacterValue({RationalPhase(1, 2), RationalPhase(1, 2)}));
  // 1 + ζ5 + ζ5² + ζ5³ = −ζ5⁴
  const CharacterValue four({z, RationalPhase(1, 5), RationalPhase(2, 5), RationalPhase(3, 5)});
  CHECK_FALSE(four.same_terms(CharacterValue(1, RationalPhase(3, 10))));
  CHECK(four == CharacterValue(1, RationalPhase(3, 10)));
  CHECK(CharacterValue(3, z).approx().real() == doctest::Approx(3.0));
}

TEST_CASE("character examples") {
  std::mt19937_64 rng(13);
  auto params = sample_rep_params(rng, 20);
  params.push_back(rho2());
  for (const auto& r : params) {
    CHECK(character(r, HeisenbergElement::identity()) == CharacterValue(r.p(), RationalPhase()));
    const HeisenbergElement cp{0, 0, r.p()};
    CHECK(character(r, cp) == CharacterValue(r.p(), r.alpha()));
    CHECK(character(r, cp) == rep_apply(r, cp).trace());
  }
  CHECK(character(rho2(), heis::a).is_zero());
  CHECK(rep_apply(rho2(), heis::a).trace() == CharacterValue());
}

TEST_CASE("character closed form equals the trace on |m|,|k|,|s| <= 8") {
  std::mt19937_64 rng(14);
  auto params = sample_rep_params(rng, 20);
  params.push_back(rho2());
  const auto ball = heis::box(8);
  for (const auto& r : params) {
    std::size_t failures = 0;
    for (const auto& h : ball) {
      const auto closed = character(r, h);
      const auto trace = rep_apply(r, h).trace();
      // the trace is either empty or p phases that collapse to one complex value
      if (!(closed == trace)) ++failures;
      if (!closed.terms().empty() && !closed.same_terms(trace)) ++failures;
    }
    CHECK_MESSAGE(failures == 0, "p = " << r.p());
  }
}

TEST_CASE("characters are class functions") {
  std::mt19937_64 rng(15);
  for (const auto& r : sample_rep_params(rng, 20))
    for (int i = 0; i < 200; ++i) {
      const auto g = random_heis(rng, 10), h = random_heis(rng, 10);
      CHECK(character(r, heis::mul(heis::mul(g, h), heis::inv(g))) == character(r, h));
    }
}

TEST_CASE("precomposed character examples") {
  const Phi2Special phi;
  const auto r = rho2();
  CHECK(character_of_precomposition(r, phi, HeisenbergElement::identity()) == CharacterValue(2, RationalPhase()));
  const HeisenbergElement c2{0, 0, 2};
  CHECK(phi.apply(c2) == HeisenbergElement{2, 0, 0});
  const auto v = character_of_precomposition(r, phi, c2);
  CHECK(v == CharacterValue(2, RationalPhase(1, 2)));
  CHECK(v.approx().real() == doctest::Approx(-2.0));
  CHECK(character_of_precomposition(r, phi, heis::a).is_zero());
}

TEST_CASE("precomposed character equals the trace of rho(phi(h))") {
  const Phi2Special phi;
  std::mt19937_64 rng(16);
  auto params = sample_rep_params(rng, 20);
  params.push_back(rho2());
  for (const auto& r : params)
    for (const auto& h : heis::box(5)) {
      if (!(character_of_precomposition(r, phi, h) == rep_apply(r, phi.apply(h)).trace()))
        FAIL("mismatch at p=" << r.p() << " h=" << h.to_string());
    }
}

TEST_CASE("fixed representation examples") {
  const Phi2Special phi;
  CHECK(is_fixed_rep(RepParams::trivial(), phi, 6));
  CHECK(is_fixed_rep(rho2(), phi, 6));
  const RepParams bad(RationalPhase(), RationalPhase(1, 2), RationalPhase(), 2);
  CHECK_FALSE(is_fixed_rep(bad, phi, 6));
  const auto report = check_fixed_rep(bad, phi, 6);
  REQUIRE(report.symbolic.has_value());
  CHECK_FALSE(*report.symbolic);
  REQUIRE(report.mismatch.has_value());
  CHECK_FALSE(character(bad, *report.mismatch) == character_of_precomposition(bad, phi, *report.mismatch));
  CHECK(fixed_criterion_p2(rho2()));
  CHECK_FALSE(fixed_criterion_p2(bad));
}

TEST_CASE("fixed representation search") {
  const Phi2Special phi;
  auto contains = [](const std::vector<RepParams>& v, const RepParams& r) {
    return std::find(v.begin(), v.end(), r) != v.end();
  };
  const auto p2 = fixed_rep_search(phi, 2, 4);
  CHECK(contains(p2, rho2()));
  const RepParams other(RationalPhase(3, 4), RationalPhase(1, 2), RationalPhase(1, 2), 2);
  CHECK(contains(p2, other));
  CHECK(p2.size() == 2);
  CHECK(contains(fixed_rep_search(phi, 1, 1), RepParams::trivial()));
  const auto p2wide = fixed_rep_search(phi, 2, 8);
  CHECK(contains(p2wide, other));
  CHECK(p2wide.size() == 2);
  // everything found also matches on the larger radius-8 ball
  for (const auto& r : p2wide) CHECK(check_fixed_rep(r, phi, 8).fixed);
  // one-dimensional: χ∘φ = χ needs ξ = 0 and α = ξ, i.e. only the trivial one
  const auto p1 = fixed_rep_search(phi, 1, 12);
  REQUIRE(p1.size() == 1);
  CHECK(p1.front() == RepParams::trivial());
  // for p > 2 the k-term forces 2η ∈ Z, impossible with denominator p
  for (std::int64_t p = 3; p <= 6; ++p) CHECK(fixed_rep_search(phi, p, 6).empty());
}

TEST_CASE("fixed representation search preconditions") {
  const Phi2Special phi;
  CHECK_THROWS_AS(fixed_rep_search(phi, 0, 4), PreconditionError);
  CHECK_THROWS_AS(fixed_rep_search(phi, 7, 4), PreconditionError);
  CHECK_THROWS_AS(fixed_rep_search(phi, 2, 25), PreconditionError);
  CHECK_THROWS_AS(check_fixed_rep(rho2(), phi, 0), std::invalid_argument);
}

TEST_CASE("symbolic criterion agrees with the ball test for every p = 2 grid point") {
  const Phi2Special phi;
  const RationalPhase half(1, 2);
  for (const auto& xi : fractions_up_to(8))
    for (const auto& alpha : fractions_up_to(8)) {
      const RepParams r(xi, half, alpha, 2);
      const auto report = check_fixed_rep(r, phi, 4);
      CHECK(report.fixed == fixed_criterion_p2(r));
    }
}

TEST_CASE("commutant dimension is one") {
  CHECK(commutant_dimension(RepParams::trivial()) == 1);
  CHECK(commutant_dimension(rho2()) == 1);
  std::mt19937_64 rng(21);
  for (const auto& r : sample_rep_params(rng, 20)) CHECK_MESSAGE(commutant_dimension(r) == 1, "p = " << r.p());
}

TEST_CASE("fraction grid") {
  const auto f = fractions_up_to(4);
  CHECK(f.size() == 6);  // 0, 1/4, 1/3, 1/2, 2/3, 3/4
  CHECK(std::is_sorted(f.begin(), f.end()));
  CHECK_THROWS_AS(fractions_up_to(0), std::invalid_argument);
}
