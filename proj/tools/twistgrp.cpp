// twistgrp: command-line driver over the C API.
//
// Exit codes: 0 success, 2 bad input, 3 computational diagnostic.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "twistgrp/twistgrp.h"

namespace {

using nlohmann::json;

constexpr int kExitInput = 2;
constexpr int kExitDiagnostic = 3;

struct Failure {
  twg_status status;
  std::string message;
};

int exit_code_for(twg_status s) {
  switch (s) {
    case TWG_ERR_BALL_TOO_SMALL:
    case TWG_ERR_OVERFLOW:
    case TWG_ERR_INTERNAL:
      return kExitDiagnostic;
    default:
      return kExitInput;
  }
}

void check(twg_status s) {
  if (s != TWG_OK) throw Failure{s, twg_last_error()};
}

struct HeisDeleter {
  void operator()(twg_heis* h) const { twg_heis_free(h); }
};
struct RepDeleter {
  void operator()(twg_rep* r) const { twg_rep_free(r); }
};
struct SpecDeleter {
  void operator()(twg_wreath_spec* s) const { twg_wreath_spec_free(s); }
};
struct WreathDeleter {
  void operator()(twg_wreath* g) const { twg_wreath_free(g); }
};
using Heis = std::unique_ptr<twg_heis, HeisDeleter>;
using Rep = std::unique_ptr<twg_rep, RepDeleter>;
using Spec = std::unique_ptr<twg_wreath_spec, SpecDeleter>;
using Wreath = std::unique_ptr<twg_wreath, WreathDeleter>;

std::string take_string(char* s) {
  std::string out(s);
  twg_string_free(s);
  return out;
}

template <class F>
json call_json(F&& f) {
  char* out = nullptr;
  check(f(&out));
  return json::parse(take_string(out));
}

Heis parse_heis(const std::string& text) {
  twg_heis* h = nullptr;
  check(twg_heis_parse(text.c_str(), &h));
  return Heis(h);
}

std::string heis_string(const twg_heis* h) {
  char* s = nullptr;
  check(twg_heis_to_string(h, &s));
  return take_string(s);
}

Wreath parse_wreath(const twg_wreath_spec* spec, const std::string& text) {
  twg_wreath* g = nullptr;
  check(twg_wreath_parse_json(spec, text.c_str(), &g));
  return Wreath(g);
}

json wreath_json(const twg_wreath* g) {
  return call_json([&](char** out) { return twg_wreath_to_json(g, out); });
}

std::string format_complex(double re, double im) {
  auto fmt = [](double x) {
    if (std::abs(x - std::round(x)) < 1e-9) x = std::round(x);
    std::ostringstream os;
    os.precision(12);
    os << (x == 0.0 ? 0.0 : x);
    return os.str();
  };
  if (std::abs(im) < 1e-12) return fmt(re);
  std::string sign = im < 0 ? " - " : " + ";
  return fmt(re) + sign + fmt(std::abs(im)) + "i";
}

// What one command produced: the JSON result, a human rendering, and
// optionally a table for --out CSV.
struct Outcome {
  json result;
  std::string text;
  std::vector<std::string> csv_header;
  std::vector<std::vector<std::string>> csv_rows;
};

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

struct Options {
  bool json_out = false;
  std::string out_path;

  // heis
  std::vector<std::string> heis_args;

  // twisted
  std::int64_t n = 0;
  bool special = false;
  std::int64_t radius = 0;
  std::int64_t conj_radius = -1;
  std::string element;

  // rep
  std::string xi = "0", eta = "0", alpha = "0";
  std::int64_t p = 1;
  std::int64_t max_den = 4;

  // wreath
  std::int64_t k = 1;
  std::vector<std::int64_t> torsion;
  std::string other;
  std::string aut;
  std::uint64_t seed = 1;
  int samples = 1000;
};

// ---- heis -----------------------------------------------------------------

Outcome heis_binary(const Options& o, twg_status (*op)(const twg_heis*, const twg_heis*, twg_heis**)) {
  if (o.heis_args.size() != 2) throw Failure{TWG_ERR_INVALID_ARGUMENT, "expected exactly two elements"};
  Heis a = parse_heis(o.heis_args[0]), b = parse_heis(o.heis_args[1]);
  twg_heis* r = nullptr;
  check(op(a.get(), b.get(), &r));
  Heis res(r);
  const std::string s = heis_string(res.get());
  return {s, s, {}, {}};
}

Outcome heis_unary(const Options& o, const char* what) {
  if (o.heis_args.size() != 1) throw Failure{TWG_ERR_INVALID_ARGUMENT, std::string("expected exactly one ") + what};
  Heis a = parse_heis(o.heis_args[0]);
  return {heis_string(a.get()), heis_string(a.get()), {}, {}};
}

Outcome heis_inv(const Options& o) {
  if (o.heis_args.size() != 1) throw Failure{TWG_ERR_INVALID_ARGUMENT, "expected exactly one element"};
  Heis a = parse_heis(o.heis_args[0]);
  twg_heis* r = nullptr;
  check(twg_heis_inv(a.get(), &r));
  Heis res(r);
  const std::string s = heis_string(res.get());
  return {s, s, {}, {}};
}

Outcome heis_matrix(const Options& o) {
  if (o.heis_args.size() != 1) throw Failure{TWG_ERR_INVALID_ARGUMENT, "expected exactly one element"};
  Heis a = parse_heis(o.heis_args[0]);
  std::int64_t m[9];
  check(twg_heis_matrix(a.get(), m));
  json rows = json::array();
  std::ostringstream text;
  for (int r = 0; r < 3; ++r) {
    rows.push_back({m[3 * r], m[3 * r + 1], m[3 * r + 2]});
    text << "[" << m[3 * r] << " " << m[3 * r + 1] << " " << m[3 * r + 2] << "]" << (r < 2 ? "\n" : "");
  }
  return {rows, text.str(), {}, {}};
}

// ---- twisted --------------------------------------------------------------

Outcome twisted_classify(const Options& o) {
  Heis h = parse_heis(o.element);
  std::int64_t r = 0;
  int parity = 0;
  check(twg_twisted_classify(o.n, h.get(), &r, &parity));
  const std::string rep = "((" + std::to_string(r) + "," + std::to_string(parity) + "),0)";
  json res = {{"r", r}, {"parity", parity}, {"representative", rep}};
  return {res, "(" + std::to_string(r) + ", " + std::to_string(parity) + ")  representative " + rep, {}, {}};
}

Outcome twisted_apply(const Options& o) {
  Heis h = parse_heis(o.element);
  twg_heis* r = nullptr;
  check(twg_phi_apply(o.special ? 0 : o.n, h.get(), &r));
  Heis res(r);
  const std::string s = heis_string(res.get());
  return {s, s, {}, {}};
}

Outcome partition_outcome(const json& res) {
  Outcome out{res, {}, {"block", "representative", "size"}, {}};
  const bool labelled = res.contains("agrees_with_labels");
  if (labelled) {
    out.csv_header.push_back("r");
    out.csv_header.push_back("parity");
  }
  std::ostringstream text;
  text << "block  representative  size" << (labelled ? "  label" : "") << "\n";
  std::size_t i = 0;
  for (const auto& b : res.at("blocks")) {
    std::vector<std::string> row = {std::to_string(i), b.at("representative").get<std::string>(),
                                    std::to_string(b.at("size").get<std::size_t>())};
    text << i << "  " << row[1] << "  " << row[2];
    if (labelled) {
      row.push_back(std::to_string(b.at("label").at("r").get<std::int64_t>()));
      row.push_back(std::to_string(b.at("label").at("parity").get<int>()));
      text << "  (" << row[3] << ", " << row[4] << ")";
    }
    text << "\n";
    out.csv_rows.push_back(std::move(row));
    ++i;
  }
  text << "blocks: " << res.at("block_count").get<std::size_t>();
  if (labelled) text << "\nagrees with closed-form labels: " << (res.at("agrees_with_labels").get<bool>() ? "yes" : "no");
  out.text = text.str();
  return out;
}

Outcome twisted_partition(const Options& o, std::int64_t default_conj) {
  const std::int64_t n = o.special ? 0 : o.n;
  const std::int64_t conj = o.conj_radius >= 0 ? o.conj_radius : default_conj;
  return partition_outcome(call_json([&](char** out) { return twg_twisted_partition_json(n, o.radius, conj, out); }));
}

Outcome twisted_reidemeister(const Options& o) {
  if (o.special) {
    // No closed form for this automorphism: count oracle blocks instead.
    if (o.radius <= 0) throw Failure{TWG_ERR_INVALID_ARGUMENT, "--radius is required with --special-phi2"};
    Outcome part = twisted_partition(o, o.radius);
    json res = {{"automorphism", "special"},
                {"radius", o.radius},
                {"conjugator_radius", part.result.at("conjugator_radius")},
                {"reidemeister", part.result.at("block_count")},
                {"blocks", part.result.at("blocks")}};
    part.text += "\nR(phi) = " + std::to_string(part.result.at("block_count").get<std::size_t>()) +
                 " (lower bound from the ball)";
    part.result = res;
    return part;
  }
  const json res = call_json([&](char** out) { return twg_twisted_reidemeister_json(o.n, o.radius, out); });
  Outcome out{res, {}, {"r", "parity", "representative", "count_in_ball"}, {}};
  std::ostringstream text;
  text << "r  parity  representative  count_in_ball\n";
  for (const auto& e : res.at("labels")) {
    std::vector<std::string> row = {std::to_string(e.at("r").get<std::int64_t>()),
                                    std::to_string(e.at("parity").get<int>()),
                                    e.at("representative").get<std::string>(),
                                    std::to_string(e.at("count_in_ball").get<std::int64_t>())};
    text << row[0] << "  " << row[1] << "  " << row[2] << "  " << row[3] << "\n";
    out.csv_rows.push_back(std::move(row));
  }
  text << "R(phi_" << o.n << ") = " << res.at("reidemeister").get<std::int64_t>();
  out.text = text.str();
  return out;
}

// ---- rep ------------------------------------------------------------------

Rep make_rep(const Options& o) {
  twg_rep* r = nullptr;
  check(twg_rep_create(o.xi.c_str(), o.eta.c_str(), o.alpha.c_str(), o.p, &r));
  return Rep(r);
}

std::string character_text(const json& v) {
  std::string s = format_complex(v.at("approx")[0].get<double>(), v.at("approx")[1].get<double>());
  s += "  phases:";
  if (v.at("terms").empty()) s += " (none)";
  for (const auto& t : v.at("terms")) s += " " + t.get<std::string>();
  return s;
}

Outcome rep_apply(const Options& o) {
  Rep r = make_rep(o);
  Heis h = parse_heis(o.element);
  const json res = call_json([&](char** out) { return twg_rep_apply_json(r.get(), h.get(), out); });
  std::ostringstream text;
  for (std::size_t j = 0; j < res.at("perm").size(); ++j)
    text << "e_" << j << " -> exp(2 pi i " << res.at("phases")[j].get<std::string>() << ") e_"
         << res.at("perm")[j].get<std::size_t>() << (j + 1 < res.at("perm").size() ? "\n" : "");
  return {res, text.str(), {}, {}};
}

Outcome rep_char(const Options& o) {
  Rep r = make_rep(o);
  Heis h = parse_heis(o.element);
  const json res = call_json([&](char** out) { return twg_rep_character_json(r.get(), h.get(), out); });
  return {res, character_text(res), {}, {}};
}

Outcome rep_char_table(const Options& o) {
  Rep r = make_rep(o);
  const std::int64_t radius = o.radius > 0 ? o.radius : 2;
  const json res = call_json([&](char** out) { return twg_rep_character_table_json(r.get(), radius, out); });
  Outcome out{res, {}, {"element", "terms", "re", "im"}, {}};
  std::ostringstream text;
  for (const auto& e : res.at("entries")) {
    std::string terms;
    for (const auto& t : e.at("value").at("terms")) terms += (terms.empty() ? "" : " ") + t.get<std::string>();
    const auto& ap = e.at("value").at("approx");
    std::ostringstream re, im;
    re.precision(15);
    im.precision(15);
    re << ap[0].get<double>();
    im << ap[1].get<double>();
    out.csv_rows.push_back({e.at("element").get<std::string>(), terms, re.str(), im.str()});
    text << e.at("element").get<std::string>() << "  " << character_text(e.at("value")) << "\n";
  }
  out.text = text.str();
  if (!out.text.empty()) out.text.pop_back();
  return out;
}

Outcome rep_is_fixed(const Options& o) {
  Rep r = make_rep(o);
  int fixed = 0;
  check(twg_rep_is_fixed(r.get(), o.radius > 0 ? o.radius : 6, &fixed));
  return {json(fixed != 0), fixed ? "true" : "false", {}, {}};
}

Outcome rep_fixed_search(const Options& o) {
  const std::int64_t radius = o.radius > 0 ? o.radius : 6;
  const json res = call_json([&](char** out) { return twg_rep_fixed_search_json(o.p, o.max_den, radius, out); });
  Outcome out{res, {}, {"xi", "eta", "alpha", "p"}, {}};
  std::ostringstream text;
  for (const auto& f : res.at("fixed")) {
    out.csv_rows.push_back({f.at("xi").get<std::string>(), f.at("eta").get<std::string>(),
                            f.at("alpha").get<std::string>(), std::to_string(f.at("p").get<std::int64_t>())});
    text << "xi=" << f.at("xi").get<std::string>() << " eta=" << f.at("eta").get<std::string>()
         << " alpha=" << f.at("alpha").get<std::string>() << " p=" << f.at("p").get<std::int64_t>() << "\n";
  }
  text << "found: " << res.at("count").get<std::size_t>();
  out.text = text.str();
  return out;
}

Outcome rep_commutant(const Options& o) {
  Rep r = make_rep(o);
  std::size_t dim = 0;
  check(twg_rep_commutant_dimension(r.get(), &dim));
  return {json(dim), std::to_string(dim), {}, {}};
}

// ---- wreath ---------------------------------------------------------------

Spec make_spec(const Options& o) {
  twg_wreath_spec* s = nullptr;
  check(twg_wreath_spec_create(o.k, o.torsion.data(), o.torsion.size(), &s));
  return Spec(s);
}

const std::string& require(const std::string& value, const char* flag) {
  if (value.empty()) throw Failure{TWG_ERR_INVALID_ARGUMENT, std::string(flag) + " is required"};
  return value;
}

std::string wreath_text(const json& g) {
  std::ostringstream text;
  text << "free: " << g.at("free").dump() << "  shift: " << g.at("shift").get<std::int64_t>();
  if (!g.at("tors").empty()) text << "  tors: " << g.at("tors").dump();
  return text.str();
}

Outcome wreath_binary(const Options& o, twg_status (*op)(const twg_wreath*, const twg_wreath*, twg_wreath**)) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  Wreath b = parse_wreath(spec.get(), require(o.other, "--with"));
  twg_wreath* r = nullptr;
  check(op(a.get(), b.get(), &r));
  Wreath res(r);
  const json j = wreath_json(res.get());
  return {j, wreath_text(j), {}, {}};
}

Outcome wreath_inv(const Options& o) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  twg_wreath* r = nullptr;
  check(twg_wreath_inv(a.get(), &r));
  Wreath res(r);
  const json j = wreath_json(res.get());
  return {j, wreath_text(j), {}, {}};
}

Outcome wreath_abelianize(const Options& o) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  std::vector<std::int64_t> v(static_cast<std::size_t>(std::max<std::int64_t>(o.k, 0)) + 1);
  std::size_t written = 0;
  check(twg_wreath_abelianize(a.get(), v.data(), v.size(), &written));
  v.resize(written);
  std::string text = "[";
  for (std::size_t i = 0; i < v.size(); ++i) text += (i ? ", " : "") + std::to_string(v[i]);
  return {json(v), text + "]", {}, {}};
}

Outcome wreath_in_commutant(const Options& o) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  int yes = 0;
  check(twg_wreath_in_commutant(a.get(), &yes));
  return {json(yes != 0), yes ? "true" : "false", {}, {}};
}

Outcome wreath_order(const Options& o) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  int finite = 0;
  std::int64_t order = 0;
  check(twg_wreath_order(a.get(), &finite, &order));
  if (!finite) return {json("infinite"), "infinite", {}, {}};
  return {json(order), std::to_string(order), {}, {}};
}

Outcome wreath_commute(const Options& o) {
  Spec spec = make_spec(o);
  Wreath a = parse_wreath(spec.get(), require(o.element, "--element"));
  Wreath b = parse_wreath(spec.get(), require(o.other, "--with"));
  int direct = 0, identity = 0;
  check(twg_wreath_commute(a.get(), b.get(), &direct, &identity));
  json res = {{"commute", direct != 0}, {"polynomial_identity", identity != 0}};
  return {res, std::string(direct ? "true" : "false") + "  (polynomial identity: " + (identity ? "holds" : "fails") + ")",
          {}, {}};
}

Outcome wreath_check_aut(const Options& o) {
  Spec spec = make_spec(o);
  const json res = call_json(
      [&](char** out) { return twg_wreath_check_aut_json(spec.get(), o.aut.c_str(), o.seed, o.samples, out); });
  std::ostringstream text;
  for (auto it = res.begin(); it != res.end(); ++it)
    if (it.key() != "automorphism") text << it.key() << ": " << it.value().dump() << "\n";
  std::string t = text.str();
  if (!t.empty()) t.pop_back();
  return {res, t, {}, {}};
}

void write_out(const std::string& path, const json& envelope, const Outcome& out) {
  std::ofstream f(path);
  if (!f) throw Failure{TWG_ERR_INVALID_ARGUMENT, "cannot open " + path + " for writing"};
  if (ends_with(path, ".csv")) {
    if (out.csv_header.empty()) throw Failure{TWG_ERR_INVALID_ARGUMENT, "this command has no table to write as CSV"};
    for (std::size_t i = 0; i < out.csv_header.size(); ++i) f << (i ? "," : "") << out.csv_header[i];
    f << "\n";
    for (const auto& row : out.csv_rows) {
      for (std::size_t i = 0; i < row.size(); ++i) f << (i ? "," : "") << csv_escape(row[i]);
      f << "\n";
    }
  } else {
    f << envelope.dump(2) << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Twisted conjugacy, representations and wreath products"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(twg_version()));
  Options o;
  app.add_flag("--json", o.json_out, "Emit one JSON document");
  app.add_option("--out", o.out_path, "Also write the result (JSON, or CSV when the path ends in .csv)");

  std::string command;
  std::function<Outcome()> run;
  json inputs = json::object();
  auto bind = [&](CLI::App* sub, std::string name, std::function<Outcome()> fn) {
    sub->callback([&command, &run, name = std::move(name), fn = std::move(fn)] {
      command = name;
      run = fn;
    });
  };

  // heis
  auto* heis = app.add_subcommand("heis", "Heisenberg group arithmetic");
  heis->require_subcommand(1);
  struct HeisCmd {
    const char* name;
    const char* help;
    std::function<Outcome(const Options&)> fn;
  };
  const std::vector<HeisCmd> heis_cmds = {
      {"mul", "Product of two elements", [](const Options& x) { return heis_binary(x, twg_heis_mul); }},
      {"inv", "Inverse", heis_inv},
      {"comm", "Commutator g h g^-1 h^-1", [](const Options& x) { return heis_binary(x, twg_heis_comm); }},
      {"matrix", "Unitriangular matrix form", heis_matrix},
      {"eval", "Normal form of a word in a, b, c", [](const Options& x) { return heis_unary(x, "word"); }},
  };
  for (const auto& c : heis_cmds) {
    auto* sub = heis->add_subcommand(c.name, c.help);
    sub->add_option("elements", o.heis_args, "Elements as ((m,k),s) or words")->required();
    bind(sub, std::string("heis ") + c.name, [&o, fn = c.fn] { return fn(o); });
  }

  // twisted
  auto* twisted = app.add_subcommand("twisted", "Twisted conjugacy classes");
  twisted->require_subcommand(1);
  auto add_phi = [&](CLI::App* sub, bool allow_special) {
    sub->add_option("--N", o.n, "Automorphism phi_N, N >= 1");
    if (allow_special) sub->add_flag("--special-phi2", o.special, "Use ((m,k),s) -> ((s+m, -k+m(m-1)/2+sm), m)");
  };
  auto* classify = twisted->add_subcommand("classify", "Closed-form class of an element");
  add_phi(classify, false);
  classify->add_option("--element", o.element, "Element")->required();
  bind(classify, "twisted classify", [&o] { return twisted_classify(o); });
  auto* apply = twisted->add_subcommand("apply", "Apply the automorphism");
  add_phi(apply, true);
  apply->add_option("--element", o.element, "Element")->required();
  bind(apply, "twisted apply", [&o] { return twisted_apply(o); });
  auto* reid = twisted->add_subcommand("reidemeister", "Count classes on a ball");
  add_phi(reid, true);
  reid->add_option("--radius", o.radius, "Ball radius (default min(2N, 107))");
  reid->add_option("--conj-radius", o.conj_radius, "Conjugator radius for --special-phi2 (default: --radius)");
  bind(reid, "twisted reidemeister", [&o] { return twisted_reidemeister(o); });
  auto* part = twisted->add_subcommand("oracle-partition", "Brute-force partition of a ball");
  add_phi(part, true);
  part->add_option("--radius", o.radius, "Ball radius")->required();
  part->add_option("--conj-radius", o.conj_radius, "Conjugator radius (default 8)");
  bind(part, "twisted oracle-partition", [&o] { return twisted_partition(o, 8); });

  // rep
  auto* rep = app.add_subcommand("rep", "Finite-dimensional irreducible representations");
  rep->require_subcommand(1);
  auto add_params = [&](CLI::App* sub) {
    sub->add_option("--xi", o.xi, "xi as num/den");
    sub->add_option("--eta", o.eta, "eta as num/den (denominator exactly p)");
    sub->add_option("--alpha", o.alpha, "alpha as num/den");
    sub->add_option("--p", o.p, "Dimension");
  };
  auto* rapply = rep->add_subcommand("apply", "Monomial operator of an element");
  add_params(rapply);
  rapply->add_option("--element", o.element, "Element")->required();
  bind(rapply, "rep apply", [&o] { return rep_apply(o); });
  auto* rchar = rep->add_subcommand("char", "Character value");
  add_params(rchar);
  rchar->add_option("--element", o.element, "Element")->required();
  bind(rchar, "rep char", [&o] { return rep_char(o); });
  auto* rtable = rep->add_subcommand("char-table", "Character on a ball");
  add_params(rtable);
  rtable->add_option("--radius", o.radius, "Ball radius (default 2, at most 20)");
  bind(rtable, "rep char-table", [&o] { return rep_char_table(o); });
  auto* rfixed = rep->add_subcommand("is-fixed", "Whether the character is invariant under the special automorphism");
  add_params(rfixed);
  rfixed->add_option("--radius", o.radius, "Ball radius (default 6)");
  bind(rfixed, "rep is-fixed", [&o] { return rep_is_fixed(o); });
  auto* rsearch = rep->add_subcommand("fixed-search", "Search for representations fixed by the special automorphism");
  rsearch->add_option("--p", o.p, "Dimension (1..6)");
  rsearch->add_option("--max-den", o.max_den, "Largest denominator of xi and alpha (1..24, default 4)");
  rsearch->add_option("--radius", o.radius, "Ball radius (default 6)");
  bind(rsearch, "rep fixed-search", [&o] { return rep_fixed_search(o); });
  auto* rcomm = rep->add_subcommand("commutant", "Dimension of the commutant");
  add_params(rcomm);
  bind(rcomm, "rep commutant", [&o] { return rep_commutant(o); });

  // wreath
  auto* wreath = app.add_subcommand("wreath", "Wreath products A wr Z");
  wreath->require_subcommand(1);
  auto add_spec = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Free rank of A");
    sub->add_option("--torsion", o.torsion, "Orders of the cyclic torsion factors")->delimiter(',');
  };
  struct WreathCmd {
    const char* name;
    const char* help;
    int arity;
    std::function<Outcome(const Options&)> fn;
  };
  const std::vector<WreathCmd> wreath_cmds = {
      {"mul", "Product", 2, [](const Options& x) { return wreath_binary(x, twg_wreath_mul); }},
      {"inv", "Inverse", 1, wreath_inv},
      {"comm", "Commutator", 2, [](const Options& x) { return wreath_binary(x, twg_wreath_comm); }},
      {"commute", "Whether two elements commute", 2, wreath_commute},
      {"abelianize", "Image in the abelianization", 1, wreath_abelianize},
      {"in-commutant", "Membership in the commutator subgroup", 1, wreath_in_commutant},
      {"order", "Element order", 1, wreath_order},
  };
  for (const auto& c : wreath_cmds) {
    auto* sub = wreath->add_subcommand(c.name, c.help);
    add_spec(sub);
    sub->add_option("--element", o.element, "Element as JSON")->required();
    if (c.arity == 2) sub->add_option("--with", o.other, "Second element as JSON")->required();
    bind(sub, std::string("wreath ") + c.name, [&o, fn = c.fn] { return fn(o); });
  }
  auto* waut = wreath->add_subcommand("check-aut", "Check subgroup preservation for an automorphism");
  add_spec(waut);
  waut->add_option("--aut", o.aut, "Automorphism as JSON (default: random from --seed)");
  waut->add_option("--seed", o.seed, "Random seed");
  waut->add_option("--samples", o.samples, "Random elements per check (default 1000)");
  bind(waut, "wreath check-aut", [&o] { return wreath_check_aut(o); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    Outcome out = run();
    inputs = {{"json", o.json_out}};
    for (const auto* sub : app.get_subcommands())
      for (const auto* leaf : sub->get_subcommands())
        for (const auto* opt : leaf->get_options()) {
          if (opt->count() == 0 || opt->get_name() == "--help") continue;
          std::string key = opt->get_name();
          while (!key.empty() && key.front() == '-') key.erase(key.begin());
          const auto& res = opt->results();
          inputs[key] = res.size() == 1 ? json(res.front()) : json(res);
        }
    const json envelope = {{"command", command}, {"inputs", inputs}, {"result", out.result},
                           {"version", twg_version()}};
    if (!o.out_path.empty()) write_out(o.out_path, envelope, out);
    if (o.json_out)
      std::cout << envelope.dump() << "\n";
    else
      std::cout << out.text << "\n";
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << twg_status_name(f.status) << ": " << f.message << "\n";
    return exit_code_for(f.status);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
}
