#include "hwdirac/io.hpp"

#include <cctype>

#include "hwdirac/errors.hpp"

namespace hwdirac {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<Rational> parse_entries(std::string_view text) {
  std::vector<Rational> out;
  if (trim(text).empty()) return out;
  for (auto part : split(text, ',')) out.push_back(Rational::parse(trim(part)));
  return out;
}

Weight checked(AlgebraKind alg, const Weight& w) {
  require_highest_weight(alg, w);
  return w;
}

}  // namespace

Weight parse_reduced_weight(AlgebraKind alg, std::string_view text) {
  return checked(alg, expand_reduced(alg, parse_entries(text)));
}

Weight parse_full_weight(AlgebraKind alg, std::string_view text) {
  const auto r = parse_entries(text);
  if (r.size() != 8) throw ParseError("full weight needs 8 entries, got " + std::to_string(r.size()));
  Weight w;
  for (std::size_t i = 0; i < 8; ++i) w[i] = r[i];
  return checked(alg, w);
}

std::string format_reduced_weight(AlgebraKind alg, const Weight& w) {
  std::string out;
  for (const auto& x : reduced_coords(alg, w)) {
    if (!out.empty()) out += ',';
    out += x.str();
  }
  return out;
}

GridSpec parse_grid(AlgebraKind alg, std::string_view text) {
  GridSpec g = GridSpec::zeros(alg);
  const std::size_t n = g.coords.size();
  for (auto item : split(text, ';')) {
    item = trim(item);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ParseError("grid entry needs var=range: '" + std::string(item) + "'");
    const auto var = trim(item.substr(0, eq));
    auto spec = trim(item.substr(eq + 1));

    Range r;
    const auto colon = spec.find(':');
    if (colon != std::string_view::npos) {
      r.step = Rational::parse(trim(spec.substr(colon + 1)));
      spec = trim(spec.substr(0, colon));
    }
    const auto dots = spec.find("..");
    if (dots == std::string_view::npos) {
      r.lo = r.hi = Rational::parse(spec);
    } else {
      r.lo = Rational::parse(trim(spec.substr(0, dots)));
      r.hi = Rational::parse(trim(spec.substr(dots + 2)));
    }
    if (r.step.sign() <= 0) throw ParseError("grid step must be positive in '" + std::string(item) + "'");

    if (var == "q") {
      if (alg != AlgebraKind::E7) throw ParseError("q is an e7 grid variable");
      g.alpha1 = r;
      continue;
    }
    std::size_t idx = 0;
    if (var.size() == 2 && var[0] == 'l' && var[1] >= '1' && var[1] <= '9') idx = static_cast<std::size_t>(var[1] - '0');
    if (idx < 1 || idx > n) throw ParseError("unknown grid variable '" + std::string(var) + "'");
    g.coords[idx - 1] = r;
  }
  if (g.alpha1 && !(g.coords[5].lo == 0 && g.coords[5].hi == 0))
    throw ParseError("give either l6 or q, not both");
  return g;
}

Json to_json(const Weight& w) {
  Json arr = Json::array();
  for (std::size_t i = 0; i < 8; ++i) arr.push_back(w[i].str());
  return arr;
}

Json to_json(AlgebraKind alg, const SchmidModule& s) {
  Json j;
  j["a"] = s.a;
  j["b"] = s.b;
  if (alg == AlgebraKind::E7) j["c"] = s.c;
  return j;
}

Json to_json(const CaseLabel& label) {
  Json j;
  j["major"] = std::string(to_string(label.major));
  j["s1"] = label.s1;
  j["s2"] = label.s2;
  return j;
}

Json to_json(AlgebraKind alg, const Classification& c) {
  Json j;
  j["verdict"] = std::string(to_string(c.verdict));
  j["witness"] = c.witness ? to_json(alg, *c.witness) : Json();
  j["basis"] = std::string(to_string(c.basis));
  j["scan_level"] = c.scan_level ? Json(*c.scan_level) : Json();
  j["note"] = c.note;
  return j;
}

Json to_json(const Counterexample& c) {
  Json j;
  j["inputs"] = c.inputs;
  j["expected"] = c.expected;
  j["got"] = c.got;
  return j;
}

Json to_json(const SuiteReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["algebra"] = r.algebra ? Json(std::string(to_string(*r.algebra))) : Json();
  j["total"] = r.total;
  j["passed"] = r.passed;
  j["ok"] = r.ok();
  j["seed"] = r.seed ? Json(*r.seed) : Json();
  j["coverage"] = Json::object();
  for (const auto& [k, v] : r.coverage) j["coverage"][k] = v;
  if (!r.parts.empty()) {
    j["parts"] = Json::array();
    for (const auto& p : r.parts) j["parts"].push_back(to_json(p));
  }
  j["counterexamples"] = Json::array();
  for (const auto& c : r.counterexamples) j["counterexamples"].push_back(to_json(c));
  return j;
}

}  // namespace hwdirac
