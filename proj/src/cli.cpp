#include "hwdirac/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <ostream>

#include "hwdirac/errors.hpp"
#include "hwdirac/io.hpp"

namespace hwdirac {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUndecided = 2;

struct ClassifyArgs {
  std::string algebra;
  std::string weight;
  bool full = false;
  std::int64_t max_level = kDefaultMaxLevel;
  std::string mode = "both";
};

struct ScanArgs {
  std::string algebra;
  std::string grid;
  std::int64_t max_level = kDefaultMaxLevel;
  std::string out = "csv";
  std::string mode = "scan";
};

struct VerifyArgs {
  std::string suite = "all";
  std::string algebra = "both";
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t word_length = 20;
  std::optional<std::int64_t> max_level;
};

bool decided(Verdict v) { return v == Verdict::Unitary || v == Verdict::NotUnitary; }

std::string witness_cell(AlgebraKind alg, const std::optional<SchmidModule>& w) {
  if (!w) return "";
  std::string s = std::to_string(w->a) + ":" + std::to_string(w->b);
  if (alg == AlgebraKind::E7) s += ":" + std::to_string(w->c);
  return s;
}

Json margins_json(AlgebraKind alg, const Weight& lambda) {
  Json arr = Json::array();
  for (int i = 1; i <= basic_count(alg); ++i) {
    const SchmidModule s = basic_module(alg, i);
    const MarginReport m = dirac_margin(alg, lambda, s);
    Json j;
    j["schmid"] = to_json(alg, s);
    j["label"] = "s" + std::to_string(i);
    j["margin"] = m.margin.str();
    j["sign"] = std::string(to_string(m.sign));
    j["closed_form_value"] = closed_form_value(alg, lambda, static_cast<BasicModule>(i)).str();
    j["gamma"] = to_json(m.gamma);
    arr.push_back(std::move(j));
  }
  return arr;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out) {
  const AlgebraKind alg = parse_algebra(a.algebra);
  const Weight lambda = a.full ? parse_full_weight(alg, a.weight) : parse_reduced_weight(alg, a.weight);
  if (a.mode != "closed" && a.max_level < 1) throw ParseError("--max-level must be at least 1");

  Json j;
  j["algebra"] = std::string(to_string(alg));
  j["weight"] = {{"reduced", format_reduced_weight(alg, lambda)}, {"coordinates", to_json(lambda)}};
  j["cases"] = to_json(case_of(alg, lambda));
  j["margins"] = margins_json(alg, lambda);
  j["mode"] = a.mode;

  std::optional<Classification> closed, scanned;
  if (a.mode != "scan") closed = classify_closed_form(alg, lambda);
  if (a.mode != "closed") scanned = classify_by_scan(alg, lambda, a.max_level, Execution::Parallel);
  const Classification& chosen = closed ? *closed : *scanned;

  j["verdict"] = std::string(to_string(chosen.verdict));
  j["witness"] = chosen.witness ? to_json(alg, *chosen.witness) : Json();
  j["basis"] = std::string(to_string(chosen.basis));
  if (scanned) j["max_level"] = a.max_level;
  if (closed) j["closed"] = to_json(alg, *closed);
  if (scanned) j["scan"] = to_json(alg, *scanned);

  bool agree = true;
  if (closed && scanned) {
    agree = closed->verdict == scanned->verdict && closed->witness == scanned->witness;
    j["agree"] = agree;
  }
  out << j.dump(2) << '\n';
  if (!agree) return kExitInvalid;
  return decided(chosen.verdict) ? kExitOk : kExitUndecided;
}

struct ScanRow {
  Weight lambda;
  CaseLabel label;
  std::vector<Rational> margins;
  Classification verdict;
};

int cmd_scan(const ScanArgs& a, std::ostream& out) {
  const AlgebraKind alg = parse_algebra(a.algebra);
  const GridSpec grid = parse_grid(alg, a.grid);
  if (a.mode == "scan" && a.max_level < 1) throw ParseError("--max-level must be at least 1");
  const auto weights = enumerate_grid(grid);
  const int nb = basic_count(alg);

  const auto rows = map_indexed(
      weights.size(),
      [&](std::size_t i) {
        const Weight& lambda = weights[i];
        ScanRow r{lambda, case_of(alg, lambda), {}, {}};
        for (int b = 1; b <= nb; ++b) r.margins.push_back(dirac_margin(alg, lambda, basic_module(alg, b)).margin);
        r.verdict = a.mode == "closed" ? classify_closed_form(alg, lambda) : classify_by_scan(alg, lambda, a.max_level);
        return r;
      },
      Execution::Parallel);

  if (a.out == "json") {
    Json j;
    j["algebra"] = std::string(to_string(alg));
    j["mode"] = a.mode;
    if (a.mode == "scan") j["max_level"] = a.max_level;
    j["rows"] = Json::array();
    for (const auto& r : rows) {
      Json row;
      row["coordinates"] = to_json(r.lambda);
      row["cases"] = to_json(r.label);
      row["margins"] = Json::array();
      for (const auto& m : r.margins) row["margins"].push_back(m.str());
      row["verdict"] = std::string(to_string(r.verdict.verdict));
      row["witness"] = r.verdict.witness ? to_json(alg, *r.verdict.witness) : Json();
      j["rows"].push_back(std::move(row));
    }
    out << j.dump(2) << '\n';
    return kExitOk;
  }

  for (int i = 1; i <= 8; ++i) out << "coord" << i << ',';
  out << "major_case,s1_case,s2_case";
  for (int b = 1; b <= nb; ++b) out << ",margin_s" << b;
  out << ",verdict,witness\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < 8; ++i) out << r.lambda[i] << ',';
    out << to_string(r.label.major) << ',' << r.label.s1 << ',' << r.label.s2;
    for (const auto& m : r.margins) out << ',' << m;
    out << ',' << to_string(r.verdict.verdict) << ',' << witness_cell(alg, r.verdict.witness) << '\n';
  }
  return kExitOk;
}

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  std::vector<AlgebraKind> algebras;
  if (a.algebra == "both") {
    algebras = {AlgebraKind::E6, AlgebraKind::E7};
  } else {
    algebras = {parse_algebra(a.algebra)};
  }
  const bool all = a.suite == "all";
  if (a.suite == "dominance" && a.algebra == "e7") throw ParseError("the dominance oracle covers e6 only");
  if (a.samples < 1) throw ParseError("--samples must be at least 1");
  if (a.max_level && *a.max_level < 3) throw ParseError("--max-level must be at least 3");
  auto level_or = [&](std::int64_t d) { return a.max_level.value_or(d); };

  constexpr auto ex = Execution::Parallel;
  std::vector<SuiteReport> reports;
  for (const AlgebraKind alg : algebras) {
    auto want = [&](std::string_view s) { return all || a.suite == s; };
    if (want("cases")) reports.push_back(verify_case_equivalence(alg, default_case_grid(alg), ex));
    if (want("genprv")) reports.push_back(verify_genprv(alg, a.samples, a.word_length, a.seed, ex));
    if (want("thresholds")) reports.push_back(verify_thresholds(alg, level_or(kDefaultMaxLevel), ex));
    if (want("lemmas")) reports.push_back(verify_propagation_lemmas(alg, default_lemma_grid(alg), level_or(12), 10, ex));
    if (want("dominance") && alg == AlgebraKind::E6) reports.push_back(verify_dominance_oracle(alg, a.samples, a.seed, ex));
    if (want("certificates")) reports.push_back(verify_certificates(alg, a.samples, a.seed, ex));
    if (want("coherence"))
      reports.push_back(verify_classifier_coherence(alg, default_coherence_grid(alg), level_or(kDefaultMaxLevel), ex));
  }

  const bool ok = std::all_of(reports.begin(), reports.end(), [](const SuiteReport& r) { return r.ok(); });
  Json j;
  j["ok"] = ok;
  j["suites"] = Json::array();
  for (const auto& r : reports) j["suites"].push_back(to_json(r));
  out << j.dump(2) << '\n';
  return ok ? kExitOk : kExitInvalid;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Unitarity of highest weight modules for E6 and E7 via the Dirac inequality"};
  app.name("hwdirac");
  app.require_subcommand(1, 1);

  const auto algebras = CLI::IsMember({"e6", "e7"});

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Decide unitarity of one highest weight");
  classify->add_option("--algebra", ca.algebra, "e6 or e7")->required()->check(algebras);
  classify->add_option("--weight", ca.weight, "Reduced coordinates, e.g. 0,0,0,0,1,4")->required();
  classify->add_flag("--full", ca.full, "Weight gives all eight coordinates");
  classify->add_option("--max-level", ca.max_level, "Highest Schmid level scanned")->capture_default_str();
  classify->add_option("--mode", ca.mode, "closed, scan or both")
      ->check(CLI::IsMember({"closed", "scan", "both"}))
      ->capture_default_str();

  ScanArgs sa;
  auto* scan_cmd = app.add_subcommand("scan", "Classify every valid weight of a grid");
  scan_cmd->add_option("--algebra", sa.algebra, "e6 or e7")->required()->check(algebras);
  scan_cmd->add_option("--grid", sa.grid, "e.g. \"l6=-1..4:1/2\" or \"l7=0..6:1/2;q=0..2\"")->required();
  scan_cmd->add_option("--max-level", sa.max_level, "Highest Schmid level scanned")->capture_default_str();
  scan_cmd->add_option("--out", sa.out, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
  scan_cmd->add_option("--mode", sa.mode, "scan or closed")
      ->check(CLI::IsMember({"scan", "closed"}))
      ->capture_default_str();

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("--suite", va.suite, "cases, genprv, thresholds, lemmas, dominance, certificates, coherence or all")
      ->check(CLI::IsMember({"cases", "genprv", "thresholds", "lemmas", "dominance", "certificates", "coherence", "all"}))
      ->capture_default_str();
  verify->add_option("--algebra", va.algebra, "e6, e7 or both")
      ->check(CLI::IsMember({"e6", "e7", "both"}))
      ->capture_default_str();
  verify->add_option("--samples", va.samples, "Samples for the randomized suites")->capture_default_str();
  verify->add_option("--seed", va.seed, "Seed for the randomized suites")->capture_default_str();
  verify->add_option("--word-length", va.word_length, "Weyl word length for genprv")->capture_default_str();
  verify->add_option("--max-level", va.max_level, "Scan level for thresholds, lemmas and coherence");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    if (*classify) return cmd_classify(ca, out);
    if (*scan_cmd) return cmd_scan(sa, out);
    return cmd_verify(va, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
}

}  // namespace hwdirac
