#include "mcgspin/serialize.hpp"

#include <openssl/evp.h>

#include <cctype>
#include <cstdio>

#include "mcgspin/errors.hpp"

namespace mcgspin {

namespace {

[[noreturn]] void bad_json(const std::string& what) { throw Error(ErrorKind::Parse, "factorization JSON: " + what); }

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

}  // namespace

std::string class_text(const ClassMod2& v, LabelScheme scheme) {
  SurfaceBasis b(v.genus(), scheme);
  std::string out;
  for (int i = 0; i < v.dim(); ++i)
    if (v.test(i)) out += (out.empty() ? "" : "+") + b.label(i);
  return out.empty() ? "0" : out;
}

ClassMod2 parse_class_text(int genus, std::string_view text, LabelScheme scheme) {
  SurfaceBasis b(genus, scheme);
  ClassMod2 v(genus);
  const std::string t = trim(text);
  if (t == "0") return v;
  std::size_t start = 0;
  while (start <= t.size()) {
    const std::size_t end = std::min(t.find('+', start), t.size());
    const std::string term = trim(std::string_view(t).substr(start, end - start));
    const auto coord = b.coordinate(term);
    if (!coord) throw Error(ErrorKind::Parse, "'" + term + "' is not a basis element of genus " + std::to_string(genus));
    v += ClassMod2::basis_vector(genus, *coord);
    start = end + 1;
  }
  return v;
}

QuadraticForm parse_form_text(int genus, std::string_view text, LabelScheme scheme) {
  SurfaceBasis b(genus, scheme);
  const char first = scheme == LabelScheme::XY ? 'x' : 'b';
  const char second = scheme == LabelScheme::XY ? 'y' : 'a';
  ClassMod2 values(genus);
  std::size_t i = 0;
  const std::string t(text);
  while (i < t.size()) {
    while (i < t.size() && std::isspace(static_cast<unsigned char>(t[i]))) ++i;
    if (i == t.size()) break;
    std::size_t j = i;
    while (j < t.size() && !std::isspace(static_cast<unsigned char>(t[j]))) ++j;
    const std::string item = t.substr(i, j - i);
    i = j;
    const auto colon = item.find(':');
    if (colon == std::string::npos || colon + 2 != item.size() || (item.back() != '0' && item.back() != '1'))
      throw Error(ErrorKind::Parse, "form item '" + item + "' must look like x3:1");
    const std::string sel = item.substr(0, colon);
    const bool value = item.back() == '1';
    if (sel == "*") {
      for (int c = 0; c < 2 * genus; ++c) values.set(c, value);
    } else if (sel.size() == 2 && sel[1] == '*' && (sel[0] == first || sel[0] == second)) {
      for (int k = 1; k <= genus; ++k) values.set(sel[0] == first ? b.x(k) : b.y(k), value);
    } else if (const auto coord = b.coordinate(sel)) {
      values.set(*coord, value);
    } else {
      throw Error(ErrorKind::Parse, "form selector '" + sel + "' is not a basis element of genus " + std::to_string(genus));
    }
  }
  return QuadraticForm(values);
}

std::string form_text(const QuadraticForm& q, LabelScheme scheme) {
  SurfaceBasis b(q.genus(), scheme);
  std::string out;
  for (int i = 0; i < 2 * q.genus(); ++i) out += (out.empty() ? "" : " ") + b.label(i) + ":" + std::to_string(q.value_on_basis(i));
  return out;
}

Json to_json(const Curve& c) {
  Json j{{"label", c.label}, {"mod2", class_text(c.mod2)}};
  j["int"] = c.integral ? Json(c.integral->coords()) : Json(nullptr);
  return j;
}

Json to_json(const PositiveFactorization& p) {
  Json twists = Json::array();
  for (const auto& c : p.twists()) twists.push_back(to_json(c));
  Json j{{"genus", p.genus()}, {"boundary_power", p.boundary_power()}, {"twists", twists},
         {"provenance", p.provenance()}};
  j["family"] = p.family() ? Json{{"g", p.family()->g}, {"k", p.family()->k}} : Json(nullptr);
  return j;
}

PositiveFactorization factorization_from_json(const Json& j) {
  if (!j.is_object()) bad_json("expected an object");
  for (const char* key : {"genus", "boundary_power", "twists"})
    if (!j.contains(key)) bad_json(std::string("missing key '") + key + "'");
  if (!j["genus"].is_number_integer() || !j["boundary_power"].is_number_integer() || !j["twists"].is_array())
    bad_json("genus and boundary_power must be integers, twists an array");
  const int g = j["genus"].get<int>();
  if (g < 1) bad_json("genus must be positive");
  std::vector<Curve> twists;
  for (const auto& t : j["twists"]) {
    if (!t.is_object() || !t.contains("mod2") || !t["mod2"].is_string()) bad_json("each twist needs a mod2 string");
    const std::string label = t.contains("label") && t["label"].is_string() ? t["label"].get<std::string>() : "";
    std::optional<ClassInt> integral;
    if (t.contains("int") && !t["int"].is_null()) {
      if (!t["int"].is_array()) bad_json("int must be an array or null");
      std::vector<std::int64_t> coords;
      for (const auto& x : t["int"]) {
        if (!x.is_number_integer()) bad_json("int entries must be integers");
        coords.push_back(x.get<std::int64_t>());
      }
      integral = ClassInt(g, std::move(coords));
    }
    twists.emplace_back(label, parse_class_text(g, t["mod2"].get<std::string>()), std::move(integral));
  }
  std::vector<std::string> prov;
  if (j.contains("provenance") && j["provenance"].is_array())
    for (const auto& s : j["provenance"])
      if (s.is_string()) prov.push_back(s.get<std::string>());
  PositiveFactorization p(g, std::move(twists), j["boundary_power"].get<int>(), std::move(prov));
  if (j.contains("family") && j["family"].is_object()) {
    const auto& f = j["family"];
    if (!f.contains("g") || !f.contains("k") || !f["g"].is_number_integer() || !f["k"].is_number_integer())
      bad_json("family needs integer g and k");
    p = p.with_family({f["g"].get<int>(), f["k"].get<int>()});
  }
  return p;
}

Json to_json(const RelationCheck& r) {
  Json j{{"mod2", r.mod2}};
  j["integral"] = r.integral ? Json(*r.integral) : Json("unavailable");
  return j;
}

Json to_json(const SpinCertificate& s) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < s.labels.size(); ++i) entries.push_back({{"label", s.labels[i]}, {"q", s.values[i]}});
  return {{"entries", entries},         {"all_ones", s.all_ones},   {"boundary_power", s.boundary_power},
          {"boundary_power_even", s.boundary_power_even}, {"verdict", s.verdict}};
}

Json to_json(const FibrationInvariants& inv) {
  return {{"euler", inv.euler},   {"signature", inv.signature}, {"signature_method", to_string(inv.method)},
          {"chi_h", inv.chi_h},   {"c1_squared", inv.c1_squared}};
}

Json to_json(const AbelianGroup& g) {
  Json torsion = Json::array();
  for (const auto& d : g.torsion) torsion.push_back(d.str());
  return {{"free_rank", g.free_rank}, {"torsion", torsion}, {"text", g.to_string()}};
}

Json to_json(const H1Certificate& h) {
  Json j{{"integral", h.integral}, {"mod2_dimension", h.mod2_dimension}};
  j["group"] = h.group ? to_json(*h.group) : Json("unavailable");
  return j;
}

Json to_json(const B2Replay& r) {
  Json steps = Json::array();
  for (std::size_t i = 0; i < r.steps.size(); ++i)
    steps.push_back({{"letter", r.letters[i]}, {"expression", chain_expression_text(r.steps[i])}});
  return {{"initial", chain_expression_text(r.initial)},
          {"steps", steps},
          {"image", class_text(r.image)},
          {"image_is_literally_c1", r.image_is_literally_c1},
          {"image_is_c1_in_quotient", r.image_is_c1_in_quotient}};
}

Json to_json(const ZCertificate& z) {
  return {{"g", z.g},
          {"k", z.k},
          {"length", z.length},
          {"relation", to_json(z.relation)},
          {"spin", {{"all_ones", z.spin.all_ones}, {"boundary_power", z.spin.boundary_power}, {"verdict", z.spin.verdict}}},
          {"invariants", to_json(z.invariants)},
          {"formulas_hold", z.formulas_hold},
          {"h1", to_json(z.h1)},
          {"fast_path", {{"applicable", z.fast_path_applicable}, {"ok", z.fast_path_ok}}},
          {"b2_reduction", to_json(z.b2)},
          {"verdict", z.verdict}};
}

Json to_json(const TheoremACertificate& t) {
  Json relators = Json::array();
  for (std::size_t j = 0; j < t.relator_curves.size(); ++j)
    relators.push_back({{"label", t.relator_curves[j].label},
                        {"class", class_text(t.relator_curves[j].mod2, LabelScheme::AB)},
                        {"parity_fixed", static_cast<bool>(t.parity_fixed[j])}});
  return {{"normalized_presentation", t.normalized.to_text()},
          {"n", t.n},
          {"g", t.g},
          {"blocks", t.blocks},
          {"extra_block", t.extra_block},
          {"relator_curves", relators},
          {"relation", to_json(t.relation)},
          {"spin", {{"all_ones", t.spin.all_ones}, {"boundary_power", t.spin.boundary_power}, {"verdict", t.spin.verdict}}},
          {"h1", to_json(t.h1)},
          {"expected_abelianization", to_json(t.expected)},
          {"normal_generator_h1", to_json(t.normal_generator_h1)},
          {"korkmaz_hypothesis", {{"witnesses", t.normal_generators.witnesses},
                                  {"geometric_hypothesis_assumed", t.normal_generators.geometric_hypothesis_assumed}}},
          {"h1_matches", t.h1_matches},
          {"verdict", t.verdict}};
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw Error(ErrorKind::Unavailable, "sha256 digest failed");
  std::string out;
  char buf[3];
  for (unsigned int i = 0; i < len; ++i) {
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    out += buf;
  }
  return out;
}

Json make_certificate(std::string_view command, std::string_view inputs, Json results) {
  return {{"command", std::string(command)},
          {"inputs_digest", sha256_hex(inputs)},
          {"results", std::move(results)},
          {"tool_version", kToolVersion}};
}

std::string canonical_dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mcgspin
