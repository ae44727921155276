#include "twistgrp/twistgrp.h"

#include <cstring>
#include <exception>
#include <functional>
#include <new>
#include <random>
#include <stdexcept>
#include <string>

#include "json_io.hpp"
#include "twistgrp/errors.hpp"
#include "twistgrp/heisenberg.hpp"
#include "twistgrp/laurent.hpp"
#include "twistgrp/reps.hpp"
#include "twistgrp/twisted.hpp"
#include "twistgrp/wreath.hpp"

struct twg_heis {
  twistgrp::HeisenbergElement value;
};
struct twg_rep {
  twistgrp::RepParams value;
};
struct twg_wreath_spec {
  twistgrp::AbelianSpec value;
};
struct twg_wreath {
  twistgrp::WreathElement value;
};

namespace {

using namespace twistgrp;
using json_io::json;

thread_local std::string g_last_error;

twg_status fail(twg_status status, const std::string& message) {
  g_last_error = message;
  return status;
}

// Order matters: the project exceptions derive from std::invalid_argument.
twg_status guarded(const std::function<void()>& body) {
  g_last_error.clear();
  try {
    body();
    return TWG_OK;
  } catch (const ParseError& e) {
    return fail(TWG_ERR_PARSE, e.what());
  } catch (const SpecMismatch& e) {
    return fail(TWG_ERR_SPEC_MISMATCH, e.what());
  } catch (const PreconditionError& e) {
    return fail(TWG_ERR_PRECONDITION, e.what());
  } catch (const BallTooSmall& e) {
    return fail(TWG_ERR_BALL_TOO_SMALL, e.what());
  } catch (const nlohmann::json::parse_error& e) {
    return fail(TWG_ERR_PARSE, std::string("malformed JSON: ") + e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(TWG_ERR_INVALID_ARGUMENT, std::string("unexpected JSON shape: ") + e.what());
  } catch (const std::invalid_argument& e) {
    return fail(TWG_ERR_INVALID_ARGUMENT, e.what());
  } catch (const std::overflow_error& e) {
    return fail(TWG_ERR_OVERFLOW, e.what());
  } catch (const std::domain_error& e) {
    return fail(TWG_ERR_OVERFLOW, e.what());
  } catch (const std::bad_alloc&) {
    return fail(TWG_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(TWG_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(TWG_ERR_INTERNAL, "unknown error");
  }
}

template <class... P>
bool any_null(const P*... ptrs) {
  return ((ptrs == nullptr) || ...);
}

twg_status null_argument() { return fail(TWG_ERR_NULL_ARGUMENT, "null argument"); }

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(char** out, const json& j) { *out = dup_string(j.dump()); }

HeisenbergAutomorphism select_phi(std::int64_t n) {
  if (n == 0) return Phi2Special{};
  return PhiN(n);
}

}  // namespace

extern "C" {

const char* twg_last_error(void) { return g_last_error.c_str(); }

const char* twg_status_name(twg_status status) {
  switch (status) {
    case TWG_OK: return "ok";
    case TWG_ERR_NULL_ARGUMENT: return "null argument";
    case TWG_ERR_PARSE: return "parse error";
    case TWG_ERR_INVALID_ARGUMENT: return "invalid argument";
    case TWG_ERR_SPEC_MISMATCH: return "spec mismatch";
    case TWG_ERR_PRECONDITION: return "precondition violated";
    case TWG_ERR_BALL_TOO_SMALL: return "ball too small";
    case TWG_ERR_OVERFLOW: return "arithmetic overflow";
    case TWG_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* twg_version(void) { return TWISTGRP_VERSION; }

void twg_string_free(char* s) { delete[] s; }

// ---- Heisenberg -----------------------------------------------------------

twg_status twg_heis_parse(const char* text, twg_heis** out) {
  if (any_null(text, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{parse_heisenberg(text)}; });
}

twg_status twg_heis_from_triple(int64_t m, int64_t k, int64_t s, twg_heis** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] { *out = new twg_heis{{m, k, s}}; });
}

void twg_heis_free(twg_heis* h) { delete h; }

twg_status twg_heis_components(const twg_heis* h, int64_t* m, int64_t* k, int64_t* s) {
  if (any_null(h, m, k, s)) return null_argument();
  *m = h->value.m;
  *k = h->value.k;
  *s = h->value.s;
  return TWG_OK;
}

twg_status twg_heis_to_string(const twg_heis* h, char** out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = dup_string(h->value.to_string()); });
}

twg_status twg_heis_mul(const twg_heis* a, const twg_heis* b, twg_heis** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{heis::mul(a->value, b->value)}; });
}

twg_status twg_heis_inv(const twg_heis* h, twg_heis** out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{heis::inv(h->value)}; });
}

twg_status twg_heis_comm(const twg_heis* a, const twg_heis* b, twg_heis** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{heis::commutator(a->value, b->value)}; });
}

twg_status twg_heis_pow(const twg_heis* h, int64_t n, twg_heis** out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{heis::pow(h->value, n)}; });
}

twg_status twg_heis_matrix(const twg_heis* h, int64_t out[9]) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] {
    const IntMatrix mat = heis::to_matrix(h->value);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) out[3 * r + c] = mat(r, c);
  });
}

// ---- Twisted conjugacy ----------------------------------------------------

twg_status twg_phi_apply(int64_t n, const twg_heis* h, twg_heis** out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] { *out = new twg_heis{apply_phi(select_phi(n), h->value)}; });
}

twg_status twg_phi_apply_inverse(int64_t n, const twg_heis* h, twg_heis** out) {
  if (any_null(h, out)) return null_argument();
  return guarded([&] {
    const auto phi = select_phi(n);
    *out = new twg_heis{std::visit([&](const auto& f) { return f.apply_inverse(h->value); }, phi)};
  });
}

twg_status twg_twisted_classify(int64_t n, const twg_heis* h, int64_t* r, int* parity) {
  if (any_null(h, r, parity)) return null_argument();
  return guarded([&] {
    const TwistedClassLabel label = class_label(PhiN(n), h->value);
    *r = label.r;
    *parity = label.parity;
  });
}

twg_status twg_twisted_reidemeister_json(int64_t n, int64_t radius, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const PhiN phi(n);
    emit(out, json_io::to_json(reidemeister_number(phi, radius > 0 ? radius : default_ball_radius(n))));
  });
}

twg_status twg_twisted_partition_json(int64_t n, int64_t radius, int64_t conjugator_radius, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    if (n < 0) throw std::invalid_argument("N must be nonnegative (0 selects the special automorphism)");
    const auto phi = select_phi(n);
    const auto part = oracle_partition(phi, radius, conjugator_radius);
    const PhiN* labels = std::get_if<PhiN>(&phi);
    json j = json_io::partition_json(part, labels);
    j["automorphism"] = n == 0 ? json("special") : json(n);
    j["radius"] = radius;
    j["conjugator_radius"] = conjugator_radius;
    emit(out, j);
  });
}

// ---- Representations ------------------------------------------------------

twg_status twg_rep_create(const char* xi, const char* eta, const char* alpha, int64_t p, twg_rep** out) {
  if (any_null(xi, eta, alpha, out)) return null_argument();
  return guarded([&] {
    *out = new twg_rep{RepParams(RationalPhase::parse(xi), RationalPhase::parse(eta), RationalPhase::parse(alpha), p)};
  });
}

void twg_rep_free(twg_rep* r) { delete r; }

twg_status twg_rep_params_json(const twg_rep* r, char** out) {
  if (any_null(r, out)) return null_argument();
  return guarded([&] { emit(out, json_io::to_json(r->value)); });
}

twg_status twg_rep_apply_json(const twg_rep* r, const twg_heis* h, char** out) {
  if (any_null(r, h, out)) return null_argument();
  return guarded([&] { emit(out, json_io::to_json(rep_apply(r->value, h->value))); });
}

twg_status twg_rep_character_json(const twg_rep* r, const twg_heis* h, char** out) {
  if (any_null(r, h, out)) return null_argument();
  return guarded([&] { emit(out, json_io::to_json(character(r->value, h->value))); });
}

twg_status twg_rep_character_table_json(const twg_rep* r, int64_t radius, char** out) {
  if (any_null(r, out)) return null_argument();
  return guarded([&] {
    if (radius < 0 || radius > 20) throw std::invalid_argument("character table radius must lie in [0, 20]");
    emit(out, json_io::character_table(r->value, radius));
  });
}

twg_status twg_rep_is_fixed(const twg_rep* r, int64_t radius, int* fixed) {
  if (any_null(r, fixed)) return null_argument();
  return guarded([&] { *fixed = is_fixed_rep(r->value, Phi2Special{}, radius) ? 1 : 0; });
}

twg_status twg_rep_fixed_search_json(int64_t p, int64_t max_den, int64_t radius, char** out) {
  if (any_null(out)) return null_argument();
  return guarded([&] {
    const auto found = fixed_rep_search(Phi2Special{}, p, max_den, radius);
    json results = json::array();
    for (const auto& params : found) results.push_back(json_io::to_json(params));
    emit(out, {{"p", p}, {"max_den", max_den}, {"radius", radius}, {"count", found.size()}, {"fixed", results}});
  });
}

twg_status twg_rep_commutant_dimension(const twg_rep* r, size_t* dim) {
  if (any_null(r, dim)) return null_argument();
  return guarded([&] { *dim = commutant_dimension(r->value); });
}

// ---- Wreath products ------------------------------------------------------

twg_status twg_wreath_spec_create(int64_t k, const int64_t* torsion, size_t n_torsion, twg_wreath_spec** out) {
  if (any_null(out) || (n_torsion > 0 && torsion == nullptr)) return null_argument();
  return guarded([&] {
    AbelianSpec spec{k, std::vector<std::int64_t>(torsion, torsion + n_torsion)};
    spec.validate();
    *out = new twg_wreath_spec{std::move(spec)};
  });
}

void twg_wreath_spec_free(twg_wreath_spec* spec) { delete spec; }

twg_status twg_wreath_parse_json(const twg_wreath_spec* spec, const char* text, twg_wreath** out) {
  if (any_null(spec, text, out)) return null_argument();
  return guarded([&] { *out = new twg_wreath{json_io::wreath_from_json(spec->value, json::parse(text))}; });
}

void twg_wreath_free(twg_wreath* g) { delete g; }

twg_status twg_wreath_to_json(const twg_wreath* g, char** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { emit(out, json_io::to_json(g->value)); });
}

twg_status twg_wreath_mul(const twg_wreath* a, const twg_wreath* b, twg_wreath** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = new twg_wreath{wreath_mul(a->value, b->value)}; });
}

twg_status twg_wreath_inv(const twg_wreath* g, twg_wreath** out) {
  if (any_null(g, out)) return null_argument();
  return guarded([&] { *out = new twg_wreath{wreath_inv(g->value)}; });
}

twg_status twg_wreath_comm(const twg_wreath* a, const twg_wreath* b, twg_wreath** out) {
  if (any_null(a, b, out)) return null_argument();
  return guarded([&] { *out = new twg_wreath{wreath_commutator(a->value, b->value)}; });
}

twg_status twg_wreath_abelianize(const twg_wreath* g, int64_t* out, size_t capacity, size_t* written) {
  if (any_null(g, written) || (capacity > 0 && out == nullptr)) return null_argument();
  return guarded([&] {
    const auto v = abelianize(g->value);
    *written = v.size();
    if (capacity < v.size()) throw std::invalid_argument("output buffer holds fewer than k+1 integers");
    for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  });
}

twg_status twg_wreath_in_commutant(const twg_wreath* g, int* result) {
  if (any_null(g, result)) return null_argument();
  return guarded([&] { *result = in_commutant(g->value) ? 1 : 0; });
}

twg_status twg_wreath_order(const twg_wreath* g, int* finite, int64_t* order) {
  if (any_null(g, finite, order)) return null_argument();
  return guarded([&] {
    const auto o = element_order(g->value);
    *finite = o ? 1 : 0;
    *order = o.value_or(0);
  });
}

twg_status twg_wreath_commute(const twg_wreath* a, const twg_wreath* b, int* direct, int* identity) {
  if (any_null(a, b, direct, identity)) return null_argument();
  return guarded([&] {
    *direct = commute_direct(a->value, b->value) ? 1 : 0;
    *identity = commute_iff_identity(a->value, b->value) ? 1 : 0;
  });
}

twg_status twg_wreath_check_aut_json(const twg_wreath_spec* spec, const char* aut_json, uint64_t seed, int samples,
                                     char** out) {
  if (any_null(spec, out)) return null_argument();
  return guarded([&] {
    if (samples < 1 || samples > 100000) throw std::invalid_argument("samples must lie in [1, 100000]");
    std::mt19937_64 rng(seed);
    const bool random = aut_json == nullptr || *aut_json == '\0';
    const WreathAutomorphism phi =
        random ? random_automorphism(spec->value, rng) : json_io::automorphism_from_json(spec->value, json::parse(aut_json));
    emit(out, json_io::automorphism_report(phi, rng, samples));
  });
}

// ---- Laurent polynomials --------------------------------------------------

twg_status twg_poly_mul(const char* lhs, const char* rhs, char** out) {
  if (any_null(lhs, rhs, out)) return null_argument();
  return guarded([&] { *out = dup_string((LaurentPoly::parse(lhs) * LaurentPoly::parse(rhs)).to_string()); });
}

}  // extern "C"
