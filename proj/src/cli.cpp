// Copyright 2026 The fermat-apn Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fermat/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "fermat/apn.hpp"
#include "fermat/errors.hpp"
#include "fermat/factor.hpp"
#include "fermat/phi.hpp"
#include "fermat/report.hpp"
#include "fermat/singular.hpp"
#include "fermat/verify.hpp"

namespace fermat::cli {

namespace {

struct RunConfig {
  std::string output = "text";
  bool json = false;
  bool timing = false;
  bool extended = false;
  uint64_t seed = 0;
  uint64_t budget = kDefaultBudget;
  std::string threads = "1";

  std::string field = "gf2";
  int j = 0;
  std::string poly;
  std::string poly_file;
  bool affine = false;
  int n = 0;
  std::string range;
  int k = 0;
  std::string h;
  std::string theorem;
};

// "a..b" with a <= b.
std::pair<int, int> parse_range(const std::string& s) {
  const auto dots = s.find("..");
  if (dots == std::string::npos) throw InvalidArgument("range must be a..b");
  try {
    std::size_t used = 0;
    const int a = std::stoi(s.substr(0, dots), &used);
    if (used != dots) throw InvalidArgument("bad range start");
    const std::string tail = s.substr(dots + 2);
    const int b = std::stoi(tail, &used);
    if (used != tail.size()) throw InvalidArgument("bad range end");
    if (a > b) throw InvalidArgument("empty range " + s);
    return {a, b};
  } catch (const std::logic_error&) {
    throw InvalidArgument("range must be a..b, got '" + s + "'");
  }
}

int resolve_threads(const std::string& flag) {
  std::string v = flag;
  if (const char* env = std::getenv("FERMAT_APN_THREADS"); env && *env) v = env;
  if (v == "auto")
    return std::max(1u, std::thread::hardware_concurrency());
  try {
    std::size_t used = 0;
    const int t = std::stoi(v, &used);
    if (used == v.size() && t >= 1) return t;
  } catch (const std::logic_error&) {
  }
  throw InvalidArgument("threads must be a positive integer or auto, got '" +
                        v + "'");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

MPoly bivariate_input(const RunConfig& c, const Field& F) {
  if (!c.poly_file.empty()) return MPoly::parse(F, read_file(c.poly_file));
  if (!c.poly.empty()) return MPoly::parse(F, c.poly);
  throw InvalidArgument("one of --poly or --poly-file is required");
}

Report run_phi(const RunConfig& c) {
  const Field F = Field::parse(c.field);
  Report r;
  r.name = "phi";
  r.hypotheses["field"] = F.to_string();
  MPoly phi;
  if (c.j) {
    r.hypotheses["j"] = c.j;
    phi = build_phi_j(c.j, F);
  } else if (!c.poly.empty()) {
    const CoeffMap f = parse_coeff_map(F, c.poly);
    r.hypotheses["f"] = format_coeff_map(f);
    phi = build_phi_f(f, F);
  } else {
    throw InvalidArgument("one of --j or --poly is required");
  }
  r.hypotheses["affine"] = c.affine;
  if (c.affine) phi = affine_part(phi);
  r.witnesses["degree"] = phi.total_degree();
  r.witnesses["terms"] = phi.size();
  r.witnesses["phi"] = phi.to_string();
  return r;
}

Report run_apn_check(const RunConfig& c, int threads) {
  if (c.poly.empty()) throw InvalidArgument("--poly is required");
  if (c.n < 1) throw InvalidArgument("--n must be at least 1");
  const Field F = make_field(c.n);
  const CoeffMap f = parse_coeff_map(F, c.poly);
  Report r;
  r.name = "apn_check";
  r.hypotheses = {{"f", format_coeff_map(f)}, {"field", F.to_string()}};
  const DiffSpectrum s = diff_spectrum(f, F, threads);
  r.witnesses["uniformity"] = s.uniformity;
  r.witnesses["is_apn"] = s.is_apn();
  Json hist = Json::array();
  for (auto [count, freq] : s.histogram)
    hist.push_back({{"solutions", count}, {"frequency", freq}});
  r.witnesses["histogram"] = hist;
  if (c.n <= kMaxRodierN) {
    const RodierResult rod = rodier_check(f, F);
    r.witnesses["rodier_holds"] = rod.holds;
    if (rod.witness) r.witnesses["rodier_witness"] = *rod.witness;
    if (rod.holds != s.is_apn())
      throw InvariantViolation("Rodier criterion disagrees with spectrum");
  }
  return r;
}

Report run_scan(const RunConfig& c, int threads) {
  if (c.poly.empty()) throw InvalidArgument("--poly is required");
  const auto [a, b] = parse_range(c.range.empty() ? "1..12" : c.range);
  const CoeffMap f = parse_coeff_map(Field(), c.poly);
  std::vector<int> ns;
  for (int n = a; n <= b; ++n) ns.push_back(n);
  Report r;
  r.name = "scan";
  r.hypotheses = {{"f", format_coeff_map(f)}, {"n_min", a}, {"n_max", b}};
  Json rows = Json::array();
  std::vector<int> apn_ns;
  for (const auto& e : exceptional_scan(f, ns, threads)) {
    rows.push_back(
        {{"n", e.n}, {"is_apn", e.is_apn}, {"uniformity", e.uniformity}});
    if (e.is_apn) apn_ns.push_back(e.n);
  }
  r.witnesses["per_n"] = rows;
  r.witnesses["apn_n"] = apn_ns;
  return r;
}

Report run_factor(const RunConfig& c) {
  const Field F = Field::parse(c.field);
  const MPoly f = bivariate_input(c, F);
  FactorOptions fo{c.seed, c.budget};
  Report r;
  r.name = "factor";
  r.hypotheses = {{"field", F.to_string()}, {"poly", f.to_string()}};
  const Factorization fac = bivar_factor(f, fo);
  if (fac.expand() != f)
    throw InvariantViolation("factorization does not reconstruct the input");
  r.witnesses["unit"] = FFElt(F, fac.unit).to_hex();
  r.witnesses["factors"] = factorization_json(fac);
  r.witnesses["reconstructs"] = true;
  return r;
}

Report run_abs_irred(const RunConfig& c) {
  const Field F = Field::parse(c.field);
  Report r;
  r.name = "abs_irred";
  r.hypotheses["field"] = F.to_string();
  MPoly f;
  if (c.j) {
    r.hypotheses["phi_j"] = c.j;
    f = affine_part(build_phi_j(c.j, F));
  } else if (!c.poly.empty()) {
    const CoeffMap m = parse_coeff_map(F, c.poly);
    r.hypotheses["f"] = format_coeff_map(m);
    f = affine_part(build_phi_f(m, F));
  } else {
    f = bivariate_input(c, F);
    r.hypotheses["poly"] = f.to_string();
  }
  AbsIrredOptions ao;
  ao.factor = {c.seed, c.budget};
  const AbsIrredResult a = absolutely_irreducible(f, ao);
  r.witnesses = abs_irred_json(a);
  if (a.capacity_skipped) {
    r.verdict = Verdict::kSkipped;
    r.reason = "capacity";
  }
  return r;
}

Report run_ed_count(const RunConfig& c) {
  const Field F = Field::parse(c.field);
  Report r;
  r.name = "ed_count";
  r.hypotheses["field"] = F.to_string();
  MPoly f;
  if (c.j) {
    r.hypotheses["phi_j"] = c.j;
    f = affine_part(build_phi_j(c.j, F));
  } else {
    f = bivariate_input(c, F);
    r.hypotheses["poly"] = f.to_string();
  }
  const EdCount e = ed_term_count(f);
  r.witnesses = {{"count", e.count}, {"odd", e.odd()}};
  return r;
}

Report run_transversal(const RunConfig& c) {
  if (c.k == 4 && !c.extended) {
    Report r;
    r.name = "transversality";
    r.hypotheses = {{"k", c.k}};
    r.verdict = Verdict::kSkipped;
    r.reason = "capacity";
    r.witnesses["detail"] = "k = 4 runs only in extended mode";
    return r;
  }
  return transversality_check(c.k);
}

Report run_verify(const RunConfig& c, int threads) {
  VerifyOptions vo;
  vo.extended = c.extended;
  vo.factor = {c.seed, c.budget};
  vo.threads = threads;
  if (!c.range.empty()) {
    if (!c.theorem.empty())
      throw InvalidArgument("--phi-d and --theorem are exclusive");
    const auto [a, b] = parse_range(c.range);
    return verify_phi_d_irreducibility(a, b, vo);
  }
  const Field F = Field::parse(c.field);
  if (c.h.empty()) throw InvalidArgument("--h is required with --theorem");
  const CoeffMap h = parse_coeff_map(F, c.h);
  if (c.theorem == "3mod4") return verify_theorem_3mod4(c.k, h, vo, F);
  if (c.theorem == "5mod8") return verify_theorem_5mod8(c.k, h, vo, F);
  throw InvalidArgument("--theorem must be 3mod4 or 5mod8");
}

Json record(const Report& r, bool timing) {
  Json j;
  j["schema"] = kSchema;
  const Json body = r.to_json(timing);
  for (const auto& [key, v] : body.items()) j[key] = v;
  return j;
}

void emit(const RunConfig& c, const Report& r, std::ostream& out) {
  const Json j = record(r, c.timing);
  if (c.output == "json") {
    out << j.dump(2) << "\n";
    return;
  }
  out << j.dump() << "\n";
  if (c.output == "text") {
    out << "# " << std::left << std::setw(24) << "check" << std::setw(10)
        << "verdict" << "reason\n";
    out << "# " << std::setw(24) << r.name << std::setw(10)
        << to_string(r.verdict) << (r.reason.empty() ? "-" : r.reason)
        << "\n";
  }
}

int exit_code(const Report& r) {
  if (r.verdict == Verdict::kFail) return kExitFail;
  if (r.verdict == Verdict::kSkipped && r.reason == "capacity")
    return kExitCapacity;
  if (r.name == "phi_d_irreducibility" && !r.witnesses["skipped"].empty())
    return kExitCapacity;
  return kExitOk;
}

}  // namespace

int dispatch(int argc, const char* const* argv, std::ostream& out,
             std::ostream& err) {
  RunConfig c;
  CLI::App app{"Exact checks for APN exponents and the surfaces phi_f"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--output", c.output, "json, jsonl or text")
      ->check(CLI::IsMember({"json", "jsonl", "text"}));
  app.add_flag("--json", c.json, "Same as --output json");
  app.add_flag("--timing", c.timing, "Include runtime_seconds in records");
  app.add_flag("--extended", c.extended, "Unlock k = 4 and d up to 205");
  app.add_option("--seed", c.seed, "Seed for every random choice");
  app.add_option("--budget", c.budget, "Recombination trial budget")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--threads", c.threads, "Worker count or auto");

  auto* phi = app.add_subcommand("phi", "Build phi_j or phi_f");
  phi->add_option("--j", c.j, "Exponent j >= 3");
  phi->add_option("--poly", c.poly, "f as d:coeff-hex,...");
  phi->add_option("--field", c.field, "Coefficient field, e.g. gf2^3");
  phi->add_flag("--affine", c.affine, "Set z = 1");

  auto* apn = app.add_subcommand("apn-check", "Differential spectrum on GF(2^n)");
  apn->add_option("--poly", c.poly, "f as d:coeff-hex,...")->required();
  apn->add_option("--n", c.n, "Field degree n")->required();

  auto* scan = app.add_subcommand("scan", "APN verdicts over a range of n");
  scan->add_option("--poly", c.poly, "f over GF(2) as d:1,...")->required();
  scan->add_option("--n-range", c.range, "a..b");

  auto* fac = app.add_subcommand("factor", "Factor a bivariate polynomial");
  fac->add_option("--poly", c.poly, "Polynomial text");
  fac->add_option("--poly-file", c.poly_file, "File with polynomial text");
  fac->add_option("--field", c.field, "Coefficient field");

  auto* abs = app.add_subcommand("abs-irred", "Absolute irreducibility");
  abs->add_option("--phi-j", c.j, "Use the affine phi_j");
  abs->add_option("--poly", c.poly, "Use the affine phi_f, f as d:coeff-hex");
  abs->add_option("--poly-file", c.poly_file, "File with polynomial text");
  abs->add_option("--field", c.field, "Coefficient field");

  auto* kas = app.add_subcommand("kasami-verify", "Check the Kasami split");
  kas->add_option("--k", c.k, "k")->required();

  auto* tr = app.add_subcommand("transversal", "Check the components at (1,1)");
  tr->add_option("--k", c.k, "k")->required();

  auto* ed = app.add_subcommand("ed-count", "Count x^m y^m terms");
  ed->add_option("--phi-j", c.j, "Use the affine phi_j");
  ed->add_option("--poly", c.poly, "Polynomial text");
  ed->add_option("--poly-file", c.poly_file, "File with polynomial text");
  ed->add_option("--field", c.field, "Coefficient field");

  auto* ver = app.add_subcommand("verify", "Check a theorem instance or sweep");
  // --h names the h polynomial, so help is long-form only here.
  ver->set_help_flag("--help", "Print this help message and exit");
  ver->add_option("--theorem", c.theorem, "3mod4 or 5mod8");
  ver->add_option("--k", c.k, "k");
  ver->add_option("--h", c.h, "h as d:coeff-hex,...");
  ver->add_option("--field", c.field, "Coefficient field of h");
  ver->add_option("--phi-d", c.range, "Sweep a..b");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (c.json) c.output = "json";

  Report r;
  try {
    const int threads = resolve_threads(c.threads);
    if (phi->parsed()) {
      r = run_phi(c);
    } else if (apn->parsed()) {
      r = run_apn_check(c, threads);
    } else if (scan->parsed()) {
      r = run_scan(c, threads);
    } else if (fac->parsed()) {
      r = run_factor(c);
    } else if (abs->parsed()) {
      r = run_abs_irred(c);
    } else if (kas->parsed()) {
      VerifyOptions vo;
      vo.extended = c.extended;
      vo.factor = {c.seed, c.budget};
      r = verify_kasami_structure(c.k, vo);
    } else if (tr->parsed()) {
      r = run_transversal(c);
    } else if (ed->parsed()) {
      r = run_ed_count(c);
    } else {
      r = run_verify(c, threads);
    }
  } catch (const BudgetExceeded& e) {
    r = Report{};
    r.name = app.get_subcommands().front()->get_name();
    r.verdict = Verdict::kSkipped;
    r.reason = "capacity";
    r.witnesses = {{"detail", e.what()},
                   {"budget", e.budget()},
                   {"modular_factors", e.modular_factors()},
                   {"factors_found", e.factors_found()}};
  } catch (const CapacityError& e) {
    r = Report{};
    r.name = app.get_subcommands().front()->get_name();
    r.verdict = Verdict::kSkipped;
    r.reason = "capacity";
    r.witnesses = {{"detail", e.what()}};
  } catch (const InvariantViolation& e) {
    r = Report{};
    r.name = app.get_subcommands().front()->get_name();
    r.verdict = Verdict::kFail;
    r.witnesses = {{"counterexample", e.what()}};
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n"
        << app.get_subcommands().front()->help();
    return kExitUsage;
  }
  emit(c, r, out);
  return exit_code(r);
}

}  // namespace fermat::cli
