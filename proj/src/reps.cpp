#include "twistgrp/reps.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "twistgrp/checked.hpp"
#include "twistgrp/errors.hpp"

namespace twistgrp {

RepParams::RepParams(RationalPhase xi, RationalPhase eta, RationalPhase alpha, std::int64_t p)
    : xi_(std::move(xi)), eta_(std::move(eta)), alpha_(std::move(alpha)), p_(p) {
  if (p_ < 1) throw std::invalid_argument("dimension p must be a positive integer");
  if (eta_.denominator() != p_)
    throw std::invalid_argument("eta must be an irreducible fraction with denominator exactly p (eta = " +
                                eta_.to_string() + ", p = " + std::to_string(p_) + ")");
}

// ---------------------------------------------------------------------------
// Exact equality of sums of roots of unity

namespace {

using Poly = std::vector<std::int64_t>;  // coefficients, lowest degree first

// Divides `num` by the monic `den` in place; returns the quotient. Remainder is left in `num`.
Poly divide_monic(Poly& num, const Poly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() <= dd) return {};
  Poly quot(num.size() - dd, 0);
  for (std::size_t i = num.size(); i-- > dd;) {
    std::int64_t t = num[i];
    if (t == 0) continue;
    quot[i - dd] = t;
    for (std::size_t j = 0; j <= dd; ++j) num[i - dd + j] = checked::sub(num[i - dd + j], checked::mul(t, den[j]));
  }
  num.resize(dd);
  return quot;
}

const Poly& cyclotomic(std::int64_t n) {
  static std::mutex mu;
  static std::map<std::int64_t, Poly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Poly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (std::int64_t d = 1; d < n; ++d) {
    if (n % d) continue;
    Poly rem = p;
    Poly q = divide_monic(rem, cyclotomic(d));
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  return cache.emplace(n, std::move(p)).first->second;
}

constexpr std::int64_t kMaxCyclotomicOrder = 1 << 16;

bool same_complex_value(const std::vector<RationalPhase>& a, const std::vector<RationalPhase>& b) {
  mpz_class l = 1;
  for (const auto* v : {&a, &b})
    for (const auto& t : *v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.value().get_den_mpz_t());
  if (l > kMaxCyclotomicOrder) throw std::domain_error("phase denominators too large for exact comparison");
  const std::int64_t L = l.get_si();
  Poly c(static_cast<std::size_t>(L), 0);
  auto exponent = [&](const RationalPhase& t) {
    mpz_class e = t.value().get_num() * (l / t.value().get_den());
    return static_cast<std::size_t>(e.get_si());
  };
  for (const auto& t : a) ++c[exponent(t)];
  for (const auto& t : b) --c[exponent(t)];
  divide_monic(c, cyclotomic(L));
  return std::all_of(c.begin(), c.end(), [](std::int64_t v) { return v == 0; });
}

}  // namespace

CharacterValue::CharacterValue(std::vector<RationalPhase> terms) : terms_(std::move(terms)) {
  std::sort(terms_.begin(), terms_.end());
  for (const auto& t : terms_) approx_ += t.exp2pi();
}

CharacterValue::CharacterValue(std::int64_t count, const RationalPhase& phase)
    : CharacterValue(std::vector<RationalPhase>(static_cast<std::size_t>(count), phase)) {}

bool operator==(const CharacterValue& a, const CharacterValue& b) {
  if (a.terms_ == b.terms_) return true;
  // each approx carries error far below this; a larger gap proves inequality
  if (std::abs(a.approx_ - b.approx_) > 1e-6) return false;
  return same_complex_value(a.terms_, b.terms_);
}

// ---------------------------------------------------------------------------

MonomialOperator::MonomialOperator(std::vector<std::size_t> perm, std::vector<RationalPhase> phases)
    : perm_(std::move(perm)), phases_(std::move(phases)) {
  if (perm_.empty()) throw std::invalid_argument("operator dimension must be positive");
  if (perm_.size() != phases_.size()) throw std::invalid_argument("perm and phases differ in length");
  std::vector<bool> seen(perm_.size(), false);
  for (std::size_t t : perm_) {
    if (t >= perm_.size() || seen[t]) throw std::invalid_argument("perm is not a bijection");
    seen[t] = true;
  }
}

MonomialOperator MonomialOperator::identity(std::size_t p) {
  std::vector<std::size_t> perm(p);
  std::iota(perm.begin(), perm.end(), 0);
  return {std::move(perm), std::vector<RationalPhase>(p)};
}

MonomialOperator MonomialOperator::compose(const MonomialOperator& rhs) const {
  if (rhs.dim() != dim()) throw std::invalid_argument("operator dimensions differ");
  std::vector<std::size_t> perm(dim());
  std::vector<RationalPhase> phases(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    std::size_t mid = rhs.perm_[j];
    perm[j] = perm_[mid];
    phases[j] = rhs.phases_[j] + phases_[mid];
  }
  return {std::move(perm), std::move(phases)};
}

MonomialOperator MonomialOperator::inverse() const {
  std::vector<std::size_t> perm(dim());
  std::vector<RationalPhase> phases(dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    perm[perm_[j]] = j;
    phases[perm_[j]] = -phases_[j];
  }
  return {std::move(perm), std::move(phases)};
}

CharacterValue MonomialOperator::trace() const {
  std::vector<RationalPhase> fixed;
  for (std::size_t j = 0; j < dim(); ++j)
    if (perm_[j] == j) fixed.push_back(phases_[j]);
  return CharacterValue(std::move(fixed));
}

std::vector<std::complex<double>> MonomialOperator::dense() const {
  const std::size_t n = dim();
  std::vector<std::complex<double>> out(n * n);
  for (std::size_t j = 0; j < n; ++j) out[perm_[j] * n + j] = phases_[j].exp2pi();
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t orbit_size(const RationalPhase& eta) { return to_int64(eta.denominator()); }

MonomialOperator rep_apply(const RepParams& params, const HeisenbergElement& h) {
  const std::int64_t p = params.p();
  std::vector<std::size_t> perm(static_cast<std::size_t>(p));
  std::vector<RationalPhase> phases(static_cast<std::size_t>(p));
  const RationalPhase base = params.xi().times(h.m);
  for (std::int64_t j = 0; j < p; ++j) {
    const std::int64_t t = checked::mod(checked::sub(j, h.s), p);
    perm[static_cast<std::size_t>(j)] = static_cast<std::size_t>(t);
    phases[static_cast<std::size_t>(j)] =
        base + params.eta().times(checked::add(h.k, checked::mul(t, h.m))) +
        params.alpha().times(checked::floor_div(checked::add(h.s, t), p));
  }
  return {std::move(perm), std::move(phases)};
}

CharacterValue character(const RepParams& params, const HeisenbergElement& h) {
  const std::int64_t p = params.p();
  if (checked::mod(h.s, p) != 0 || checked::mod(h.m, p) != 0) return {};
  RationalPhase phase = params.xi().times(h.m) + params.eta().times(h.k) + params.alpha().times(h.s / p);
  return {p, phase};
}

CharacterValue character_of_precomposition(const RepParams& params, const Phi2Special&, const HeisenbergElement& h) {
  const std::int64_t p = params.p();
  if (checked::mod(h.s, p) != 0 || checked::mod(h.m, p) != 0) return {};
  const std::int64_t eta_coeff =
      checked::add(checked::add(checked::neg(h.k), checked::triangular(h.m)), checked::mul(h.s, h.m));
  RationalPhase phase = params.xi().times(checked::add(h.s, h.m)) + params.eta().times(eta_coeff) +
                        params.alpha().times(h.m / p);
  return {p, phase};
}

bool fixed_criterion_p2(const RepParams& params) {
  const RationalPhase half(1, 2);
  return params.xi().times(2) - params.alpha() == RationalPhase() && params.alpha() - half == RationalPhase();
}

FixedRepReport check_fixed_rep(const RepParams& params, const Phi2Special& phi, std::int64_t ball_radius) {
  if (ball_radius < 1) throw std::invalid_argument("ball radius must be positive");
  FixedRepReport report;
  report.fixed = true;
  const std::int64_t p = params.p();
  // off the lattice m ≡ s ≡ 0 (mod p) both characters vanish
  const std::int64_t lo = checked::floor_div(-ball_radius, p) * p;
  for (std::int64_t m = lo; m <= ball_radius && report.fixed; m += p) {
    if (m < -ball_radius) continue;
    for (std::int64_t s = lo; s <= ball_radius && report.fixed; s += p) {
      if (s < -ball_radius) continue;
      for (std::int64_t k = -ball_radius; k <= ball_radius; ++k) {
        const HeisenbergElement h{m, k, s};
        // both sides are p copies of one phase, so structural comparison is exact
        if (!character(params, h).same_terms(character_of_precomposition(params, phi, h))) {
          report.fixed = false;
          report.mismatch = h;
          break;
        }
      }
    }
  }
  if (p == 2) report.symbolic = fixed_criterion_p2(params);
  return report;
}

bool is_fixed_rep(const RepParams& params, const Phi2Special& phi, std::int64_t ball_radius) {
  FixedRepReport r = check_fixed_rep(params, phi, ball_radius);
  if (r.symbolic && ball_radius >= 2 && *r.symbolic != r.fixed)
    throw std::logic_error("ball character test disagrees with the p = 2 symbolic criterion");
  return r.fixed;
}

std::vector<RationalPhase> fractions_up_to(std::int64_t max_den) {
  if (max_den < 1) throw std::invalid_argument("max denominator must be positive");
  std::vector<RationalPhase> out;
  for (std::int64_t d = 1; d <= max_den; ++d)
    for (std::int64_t n = 0; n < d; ++n)
      if (std::gcd(n, d) == 1) out.emplace_back(n, d);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<RepParams> fixed_rep_search(const Phi2Special& phi, std::int64_t p, std::int64_t max_den,
                                        std::int64_t ball_radius) {
  if (p < 1 || p > kMaxSearchDimension)
    throw PreconditionError("search dimension p must lie in [1, " + std::to_string(kMaxSearchDimension) + "]");
  if (max_den < 1 || max_den > kMaxSearchDenominator)
    throw PreconditionError("max denominator must lie in [1, " + std::to_string(kMaxSearchDenominator) + "]");
  const auto grid = fractions_up_to(max_den);
  std::vector<RepParams> found;
  for (std::int64_t a = 0; a < p; ++a) {
    if (std::gcd(a, p) != 1) continue;
    const RationalPhase eta(a, p);
    for (const auto& xi : grid)
      for (const auto& alpha : grid) {
        RepParams params(xi, eta, alpha, p);
        if (is_fixed_rep(params, phi, ball_radius)) found.push_back(params);
      }
  }
  return found;
}

std::size_t commutant_dimension(const RepParams& params) {
  using Mat = Eigen::MatrixXcd;
  const auto n = static_cast<Eigen::Index>(params.p());
  const auto nn = n * n;
  auto to_eigen = [&](const MonomialOperator& op) {
    const auto d = op.dense();
    Mat m(n, n);
    for (Eigen::Index r = 0; r < n; ++r)
      for (Eigen::Index c = 0; c < n; ++c) m(r, c) = d[static_cast<std::size_t>(r * n + c)];
    return m;
  };
  const Mat id = Mat::Identity(n, n);
  // X·A − A·X = 0  ⇔  (Aᵀ ⊗ I − I ⊗ A) vec(X) = 0, vec column-major
  auto kron = [](const Mat& x, const Mat& y) {
    Mat out(x.rows() * y.rows(), x.cols() * y.cols());
    for (Eigen::Index i = 0; i < x.rows(); ++i)
      for (Eigen::Index j = 0; j < x.cols(); ++j)
        out.block(i * y.rows(), j * y.cols(), y.rows(), y.cols()) = x(i, j) * y;
    return out;
  };
  Mat system(3 * nn, nn);
  Eigen::Index row = 0;
  for (const auto& gen : {heis::a, heis::b, heis::c}) {
    const Mat a = to_eigen(rep_apply(params, gen));
    system.block(row, 0, nn, nn) = kron(a.transpose(), id) - kron(id, a);
    row += nn;
  }
  Eigen::JacobiSVD<Mat> svd(system);
  const auto& sv = svd.singularValues();
  const double largest = sv.size() ? sv(0) : 0.0;
  // p = 1: scalars commute with everything and the system is identically zero
  if (largest == 0.0) return static_cast<std::size_t>(nn);
  std::size_t nullity = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) <= 1e-9 * largest) ++nullity;
  return nullity + static_cast<std::size_t>(nn - sv.size());
}

}  // namespace twistgrp
