#include "json_io.hpp"

#include <cmath>
#include <map>
#include <set>
#include <string>

#include "twistgrp/errors.hpp"

namespace twistgrp::json_io {

namespace {

std::int64_t as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw std::invalid_argument(std::string(what) + " must be an integer");
  return j.get<std::int64_t>();
}

std::int64_t parse_exponent_key(const std::string& key) {
  std::size_t used = 0;
  std::int64_t e = 0;
  try {
    e = std::stoll(key, &used);
  } catch (const std::exception&) {
    throw ParseError("exponent key '" + key + "' is not an integer", 0);
  }
  if (used != key.size()) throw ParseError("exponent key '" + key + "' is not an integer", used);
  return e;
}

double clean(double x) { return std::abs(x) < 1e-12 ? 0.0 : x; }

}  // namespace

json to_json(const LaurentPoly& p) {
  json out = json::object();
  for (auto [e, c] : p.terms()) out[std::to_string(e)] = c;
  return out;
}

LaurentPoly poly_from_json(const json& j) {
  if (j.is_string()) return LaurentPoly::parse(j.get<std::string>());
  if (!j.is_object()) throw std::invalid_argument("polynomial must be an object or a string");
  LaurentPoly p;
  for (const auto& [key, value] : j.items()) p.add_term(parse_exponent_key(key), as_int(value, "coefficient"));
  return p;
}

json to_json(const WreathElement& g) {
  json tors = json::array();
  for (const auto& [key, v] : g.torsion_part())
    tors.push_back({{"copy", key.first}, {"factor", key.second}, {"residue", v}});
  return {{"k", g.spec().k},
          {"torsion", g.spec().torsion},
          {"free", to_json(g.free_part())},
          {"tors", tors},
          {"shift", g.shift()}};
}

WreathElement wreath_from_json(const AbelianSpec& spec, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("wreath element must be a JSON object");
  if (j.contains("k") && as_int(j.at("k"), "k") != spec.k)
    throw SpecMismatch("element has k = " + std::to_string(j.at("k").get<std::int64_t>()) + " but the group has k = " +
                       std::to_string(spec.k));
  if (j.contains("torsion") && j.at("torsion").get<std::vector<std::int64_t>>() != spec.torsion)
    throw SpecMismatch("element torsion orders differ from the group's");
  LaurentPoly free = j.contains("free") ? poly_from_json(j.at("free")) : LaurentPoly();
  WreathElement::TorsionPart tors;
  if (j.contains("tors")) {
    for (const auto& t : j.at("tors")) {
      const std::int64_t factor = as_int(t.at("factor"), "factor");
      if (factor < 0) throw std::invalid_argument("factor must be nonnegative");
      auto& slot = tors[{as_int(t.at("copy"), "copy"), static_cast<std::size_t>(factor)}];
      slot += as_int(t.at("residue"), "residue");
    }
  }
  const std::int64_t shift = j.contains("shift") ? as_int(j.at("shift"), "shift") : 0;
  return {spec, std::move(free), std::move(tors), shift};
}

json to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(row);
  }
  return rows;
}

json to_json(const RepParams& p) {
  return {{"xi", p.xi().to_string()}, {"eta", p.eta().to_string()}, {"alpha", p.alpha().to_string()}, {"p", p.p()}};
}

json to_json(const CharacterValue& v) {
  json terms = json::array();
  for (const auto& t : v.terms()) terms.push_back(t.to_string());
  return {{"terms", terms}, {"approx", {clean(v.approx().real()), clean(v.approx().imag())}}};
}

json to_json(const MonomialOperator& op) {
  json phases = json::array();
  for (const auto& t : op.phases()) phases.push_back(t.to_string());
  return {{"dim", op.dim()}, {"perm", op.perm()}, {"phases", phases}};
}

json to_json(const ReidemeisterReport& r) {
  json labels = json::array();
  for (const auto& e : r.labels)
    labels.push_back({{"r", e.label.r},
                      {"parity", e.label.parity},
                      {"representative", e.label.representative().to_string()},
                      {"count_in_ball", e.count_in_ball}});
  return {{"N", r.n}, {"radius", r.radius}, {"labels", labels}, {"reidemeister", r.reidemeister}};
}

json partition_json(const tc::ClassPartition<HeisenbergElement>& part, const PhiN* labels_from) {
  json blocks = json::array();
  bool agrees = true;
  std::set<TwistedClassLabel> seen;
  for (std::size_t b = 0; b < part.block_count(); ++b) {
    json block = {{"representative", part.representative(b).to_string()}, {"size", part.blocks[b].size()}};
    if (labels_from) {
      const TwistedClassLabel label = class_label(*labels_from, part.representative(b));
      for (std::size_t idx : part.blocks[b])
        if (class_label(*labels_from, part.elements[idx]) != label) agrees = false;
      if (!seen.insert(label).second) agrees = false;
      block["label"] = {{"r", label.r}, {"parity", label.parity}};
    }
    blocks.push_back(block);
  }
  json out = {{"ball_size", part.elements.size()}, {"block_count", part.block_count()}, {"blocks", blocks}};
  if (labels_from) out["agrees_with_labels"] = agrees;
  return out;
}

json character_table(const RepParams& params, std::int64_t radius) {
  json entries = json::array();
  for (const auto& h : heis::box(radius))
    entries.push_back({{"element", h.to_string()}, {"value", to_json(character(params, h))}});
  return {{"params", to_json(params)}, {"entries", entries}};
}

WreathAutomorphism automorphism_from_json(const AbelianSpec& spec, const json& j) {
  if (!j.is_object()) throw std::invalid_argument("automorphism must be a JSON object");
  std::optional<IntMatrix> base;
  if (j.contains("base_matrix")) {
    const auto rows = j.at("base_matrix").get<std::vector<std::vector<std::int64_t>>>();
    if (rows.empty() || rows.front().empty()) throw std::invalid_argument("base_matrix must be nonempty");
    IntMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (rows[r].size() != m.cols()) throw std::invalid_argument("base_matrix rows differ in length");
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
    }
    base = std::move(m);
  }
  const bool mirror = j.value("mirror", false);
  WreathElement inner = j.contains("inner") ? wreath_from_json(spec, j.at("inner")) : WreathElement::identity(spec);
  TorsionMap tm;
  if (j.contains("torsion_units")) tm.units = j.at("torsion_units").get<std::vector<std::int64_t>>();
  if (j.contains("torsion_cross")) tm.cross = j.at("torsion_cross").get<std::vector<std::vector<std::int64_t>>>();
  return make_automorphism(spec, std::move(base), mirror, std::move(inner), std::move(tm));
}

json to_json(const WreathAutomorphism& phi) {
  json out = {{"mirror", phi.mirror()},
              {"inner", to_json(phi.inner())},
              {"torsion_units", phi.torsion_map().units},
              {"torsion_cross", phi.torsion_map().cross}};
  if (phi.base_matrix()) out["base_matrix"] = to_json(*phi.base_matrix());
  return out;
}

json automorphism_report(const WreathAutomorphism& phi, std::mt19937_64& rng, int samples) {
  const AbelianSpec& spec = phi.spec();
  json out = {{"automorphism", to_json(phi)}};
  if (spec.k > 0) {
    const GeneratorImages images = phi.generator_images();
    json shifts = json::array();
    bool all_zero = true;
    for (const auto& a : images.a) {
      shifts.push_back(a.shift());
      if (a.shift() != 0) all_zero = false;
    }
    const IntMatrix pi = pi_matrix(images);
    out["generator_shifts"] = shifts;
    out["all_generator_shifts_zero"] = all_zero;
    out["pi_matrix"] = to_json(pi);
    out["pi_unimodular"] = unimodular(pi);
  }
  std::vector<WreathElement> base_sample, torsion_sample;
  for (int i = 0; i < samples; ++i) {
    base_sample.push_back(random_base_element(spec, rng));
    if (!spec.torsion_free()) torsion_sample.push_back(random_torsion_element(spec, rng));
  }
  out["base_preserved"] = preserves_base(phi, base_sample);
  if (!spec.torsion_free()) {
    out["torsion_preserved"] = preserves_torsion(phi, torsion_sample);
    const std::int64_t n = spec.max_torsion_order();
    bool killed = true;
    for (const auto& t : torsion_sample)
      if (!wreath_pow(phi.apply(t), n).is_identity()) killed = false;
    out["max_torsion_order"] = n;
    out["torsion_images_killed"] = killed;
  }
  return out;
}

}  // namespace twistgrp::json_io
