#include "twistgrp/twisted.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "twistgrp/checked.hpp"
#include "twistgrp/errors.hpp"

namespace twistgrp {

using checked::add;
using checked::mul;
using checked::neg;
using checked::sub;
using checked::triangular;

QPolynomials::QPolynomials(std::int64_t n, Q0Sign sign) : n_(n), sign_(sign) {
  if (n < 1) throw std::invalid_argument("N must be a positive integer");
}

std::int64_t QPolynomials::q0(std::int64_t m, std::int64_t s) const {
  std::int64_t sterm = mul(triangular(s), n_);
  std::int64_t v = mul(triangular(m), sub(1, n_));
  v = sign_ == Q0Sign::Minus ? sub(v, sterm) : add(v, sterm);
  return add(v, mul(mul(m, s), n_));
}

std::int64_t QPolynomials::q1(std::int64_t g1, std::int64_t g3) const {
  return add(neg(mul(g1, g3)), q0(neg(g1), neg(g3)));
}

std::int64_t QPolynomials::q2(std::int64_t g1, std::int64_t g3, std::int64_t s, std::int64_t m) const {
  const std::int64_t one_minus_n = sub(1, n_);
  std::int64_t v = add(mul(g3, m), q1(g1, g3));
  v = sub(v, mul(mul(g3, g1), one_minus_n));
  v = sub(v, mul(mul(s, g1), one_minus_n));
  v = sub(v, mul(mul(g3, g3), n_));
  v = sub(v, mul(mul(s, g3), n_));
  return v;
}

std::int64_t QPolynomials::q3(std::int64_t f1, std::int64_t f3, std::int64_t s, std::int64_t m) const {
  return q2(add(mul(2, f1), f3), add(f1, f3), s, m);
}

PhiN::PhiN(std::int64_t n, Q0Sign sign) : q_(n, sign) {}

HeisenbergElement PhiN::apply(const HeisenbergElement& h) const {
  const std::int64_t n = q_.n();
  return {add(mul(h.m, sub(1, n)), mul(h.s, n)), add(neg(h.k), q_.q0(h.m, h.s)), sub(h.m, h.s)};
}

HeisenbergElement PhiN::apply_inverse(const HeisenbergElement& h) const {
  const std::int64_t n = q_.n();
  const std::int64_t m = add(h.m, mul(n, h.s));
  const std::int64_t s = add(h.m, mul(sub(n, 1), h.s));
  return {m, sub(q_.q0(m, s), h.k), s};
}

HeisenbergElement Phi2Special::apply(const HeisenbergElement& h) const {
  return {add(h.s, h.m), add(add(neg(h.k), triangular(h.m)), mul(h.s, h.m)), h.m};
}

HeisenbergElement Phi2Special::apply_inverse(const HeisenbergElement& h) const {
  const std::int64_t m = h.s;
  const std::int64_t s = sub(h.m, h.s);
  return {m, sub(add(triangular(m), mul(s, m)), h.k), s};
}

HeisenbergElement apply_phi(const HeisenbergAutomorphism& phi, const HeisenbergElement& h) {
  return std::visit([&](const auto& f) { return f.apply(h); }, phi);
}

TwistedClassLabel class_label(const PhiN& phi, const HeisenbergElement& h) {
  const std::int64_t n = phi.n();
  const std::int64_t r = checked::mod(h.m, n);
  const std::int64_t f1 = sub(h.m, r) / n;
  const std::int64_t f3 = h.s;
  const std::int64_t q3 = phi.q().q3(f1, f3, 0, r);
  return {r, static_cast<int>(checked::mod(sub(h.k, q3), 2))};
}

std::int64_t default_ball_radius(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("N must be a positive integer");
  return std::min<std::int64_t>(mul(2, n), kMaxBallRadius);
}

ReidemeisterReport reidemeister_number(const PhiN& phi, std::int64_t ball_radius) {
  if (ball_radius < 1) throw std::invalid_argument("ball radius must be positive");
  if (ball_radius > kMaxBallRadius)
    throw std::invalid_argument("ball radius exceeds the enumeration cap of " + std::to_string(kMaxBallRadius));
  const std::int64_t n = phi.n();
  // the m-range [-R, R] covers every residue mod N iff 2R + 1 >= N
  if (2 * ball_radius + 1 < n)
    throw BallTooSmall("ball of radius " + std::to_string(ball_radius) + " cannot witness all residues of m mod " +
                       std::to_string(n) + "; need radius >= " + std::to_string(n / 2));

  std::map<TwistedClassLabel, std::int64_t> counts;
  for (std::int64_t m = -ball_radius; m <= ball_radius; ++m)
    for (std::int64_t k = -ball_radius; k <= ball_radius; ++k)
      for (std::int64_t s = -ball_radius; s <= ball_radius; ++s) ++counts[class_label(phi, {m, k, s})];

  ReidemeisterReport rep;
  rep.n = n;
  rep.radius = ball_radius;
  for (auto [label, count] : counts) rep.labels.push_back({label, count});
  rep.reidemeister = static_cast<std::int64_t>(rep.labels.size());
  return rep;
}

tc::GroupInterface<HeisenbergElement> heisenberg_group(const HeisenbergAutomorphism& phi) {
  tc::GroupInterface<HeisenbergElement> g;
  g.mul = [](const HeisenbergElement& x, const HeisenbergElement& y) { return heis::mul(x, y); };
  g.inv = [](const HeisenbergElement& x) { return heis::inv(x); };
  g.identity = HeisenbergElement::identity();
  g.automorphism = [phi](const HeisenbergElement& x) { return apply_phi(phi, x); };
  return g;
}

tc::ClassPartition<HeisenbergElement> oracle_partition(const HeisenbergAutomorphism& phi, std::int64_t ball_radius,
                                                       std::int64_t conjugator_radius) {
  if (ball_radius < 0 || conjugator_radius < 0) throw std::invalid_argument("radii must be nonnegative");
  if (ball_radius > kMaxBallRadius || conjugator_radius > kMaxBallRadius)
    throw std::invalid_argument("radius exceeds the enumeration cap of " + std::to_string(kMaxBallRadius));
  const auto conjugators = heis::box(conjugator_radius);
  return tc::partition_ball<HeisenbergElement, HeisenbergHash>(heisenberg_group(phi), heis::box(ball_radius),
                                                               conjugators);
}

}  // namespace twistgrp
