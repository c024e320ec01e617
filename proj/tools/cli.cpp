#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "sheffer/catalog.hpp"
#include "sheffer/error.hpp"
#include "sheffer/expr.hpp"
#include "sheffer/fock.hpp"
#include "sheffer/json_io.hpp"
#include "sheffer/multivar.hpp"
#include "sheffer/normal_order.hpp"
#include "sheffer/sequence.hpp"

namespace sheffer::cli {

namespace {

struct PairSource {
  std::string family;
  std::string f_spec;
  std::string g_spec;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Complex parse_complex(const std::string& text) {
  const auto comma = text.find(',');
  try {
    std::size_t used = 0;
    const std::string re = text.substr(0, comma);
    const double r = std::stod(re, &used);
    if (used != re.size()) throw std::invalid_argument(text);
    double i = 0.0;
    if (comma != std::string::npos) {
      const std::string im = text.substr(comma + 1);
      i = std::stod(im, &used);
      if (used != im.size()) throw std::invalid_argument(text);
    }
    return {r, i};
  } catch (const std::logic_error&) {
    throw UsageError("expected RE,IM but got '" + text + "'");
  }
}

ShefferPair resolve_pair(const PairSource& src, std::size_t order, std::ostream& err) {
  if (!src.family.empty()) {
    if (!src.f_spec.empty() || !src.g_spec.empty()) throw UsageError("give either --family or --f/--g, not both");
    return family(src.family, order).pair;
  }
  if (src.f_spec.empty()) throw UsageError("need --family or --f (with optional --g)");
  const TruncatedSeries f = parse_series(src.f_spec, order);
  const TruncatedSeries g = parse_series(src.g_spec.empty() ? "1" : src.g_spec, order);
  bool rescaled = false;
  ShefferPair pair = ShefferPair::make(f, g, "custom", &rescaled);
  if (rescaled) err << "warning: g rescaled by 1/g(0) so that g(0) = 1\n";
  return pair;
}

struct SuiteRows {
  std::vector<IdentityCheck> exact;
  std::vector<NumericCheck> numeric;
};

struct Task {
  std::string suite;
  std::string family;  // empty for family-independent suites
};

struct TaskResult {
  SuiteRows rows;
  std::optional<ErrorCode> code;
  std::string message;
};

constexpr std::size_t kMonomialityN = 12;
constexpr std::size_t kCommutatorN = 8;
constexpr std::size_t kHeatN = 8;
constexpr std::size_t kThetaPiDegree = 6;
constexpr std::size_t kHkdfN = 10;
constexpr std::size_t kPiN = 6;
constexpr std::size_t kEvolutionOrder = 8;

bool family_independent(const std::string& suite) { return suite == "hkdf" || suite == "evolution"; }

SuiteRows run_task(const Task& task, const RunConfig& cfg, std::size_t draws, std::uint32_t seed) {
  SuiteRows out;
  auto append = [](auto& into, auto&& rows) { into.insert(into.end(), rows.begin(), rows.end()); };
  const std::string& s = task.suite;
  if (s == "hkdf") {
    for (unsigned m : {1u, 2u, 3u}) append(out.exact, hkdf_ladder_check(m, kHkdfN));
    const auto trivial = ShefferPair::make(TruncatedSeries::variable(cfg.order),
                                           TruncatedSeries::constant(Rational(1), cfg.order), "trivial");
    const auto s_n = umbral_S(trivial, kHkdfN);
    for (std::size_t n = 0; n <= kHkdfN; ++n) {
      const BivariatePolynomial h = hkdf(2, n);
      IdentityCheck row{"trivial", "S_n = H_n^(2) for f = x, g = 1", static_cast<int>(n), s_n[n] == h, true, {}};
      if (!row.pass) row.detail = "got " + s_n[n].to_string() + ", expected " + h.to_string();
      out.exact.push_back(std::move(row));
    }
    return out;
  }
  if (s == "evolution") {
    const std::vector<Polynomial> qs = {Polynomial::constant(Rational(1)), Polynomial::monomial(1),
                                        Polynomial({Rational(1), Rational(-2), Rational(0), Rational(1, 3), Rational(5)})};
    for (const Polynomial& q : qs) {
      append(out.exact, evolution_check(q, kEvolutionOrder));
      append(out.exact, pi_recursion_check(q, kPiN));
    }
    return out;
  }
  if (s == "coherent") {
    const FamilyEntry entry = fock_family(task.family, cfg.cutoff);
    FockOptions opt;
    opt.cutoff = cfg.cutoff;
    opt.tolerance = cfg.tolerance;
    opt.policy = ExecPolicy::kSerial;
    for (const CoherentParams& p : draw_params(entry, draws, seed)) append(out.numeric, fock_verify(entry, p, opt));
    return out;
  }
  const FamilyEntry entry = family(task.family, cfg.order);
  if (s == "monomiality") {
    append(out.exact, verify_monomiality(entry.pair, kMonomialityN));
  } else if (s == "commutator") {
    append(out.exact, verify_commutator(entry.pair, kCommutatorN));
  } else if (s == "normal-order") {
    append(out.exact, verify_normal_order(entry.pair, cfg.lambda_order, static_cast<unsigned>(cfg.a_order)));
  } else if (s == "heat") {
    append(out.exact, heat_check(entry.pair, kHeatN));
  } else if (s == "theta-pi") {
    append(out.exact, theta_pi_check(entry.pair, kThetaPiDegree));
  }
  return out;
}

int exit_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntaxError:
    case ErrorCode::kUnknownFamily:
      return kUsage;
    default:
      return kDomain;
  }
}

void print_rows_csv(std::ostream& out, const std::string& suite, const SuiteRows& rows) {
  for (const auto& r : rows.exact) out << csv_row(suite, r) << "\n";
  for (const auto& r : rows.numeric) out << csv_row(suite, r) << "\n";
}

int cmd_list(const RunConfig& cfg, std::ostream& out) {
  if (cfg.format == "csv") {
    out << "label,f,g,guard_radius,shift_guard\n";
    for (const auto& label : family_labels()) {
      const FamilyEntry e = family(label, cfg.order);
      const FamilySpec spec = family_spec(label);
      std::ostringstream guard;
      guard << e.guard_radius;
      out << label << "," << csv_field(spec.f) << "," << csv_field(spec.g) << "," << guard.str() << "," << e.shift_guard
          << "\n";
    }
    return kOk;
  }
  Json arr = Json::array();
  for (const auto& label : family_labels()) arr.push_back(family_to_json(family(label, cfg.order)));
  out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_gen(const RunConfig& cfg, const PairSource& src, std::size_t n, bool coeffs_only, std::ostream& out,
            std::ostream& err) {
  const std::size_t order = std::max(cfg.order, n + 1);
  const ShefferPair pair = resolve_pair(src, order, err);
  const ShefferSequence seq = sequence_via_egf(pair, n);
  const std::string label = src.family.empty() ? "custom" : src.family;
  if (cfg.format == "csv") {
    out << (coeffs_only ? "family,n,coeffs\n" : "family,n,poly,coeffs\n");
    for (std::size_t k = 0; k <= n; ++k) {
      std::string joined;
      for (const Rational& c : sheffer_coeffs(seq, k)) joined += (joined.empty() ? "" : ";") + to_string(c);
      out << label << "," << k << ",";
      if (!coeffs_only) out << csv_field(seq.polys[k].to_string()) << ",";
      out << joined << "\n";
    }
    return kOk;
  }
  Json arr = Json::array();
  for (std::size_t k = 0; k <= n; ++k) {
    Json row{{"family", label}, {"n", k}};
    if (!coeffs_only) row["poly"] = seq.polys[k].to_string();
    std::vector<std::string> c;
    for (const Rational& r : sheffer_coeffs(seq, k)) c.push_back(to_string(r));
    row["coeffs"] = c;
    arr.push_back(std::move(row));
  }
  out << arr.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& cfg, std::vector<std::string> suites, std::vector<std::string> families,
               std::size_t draws, std::uint32_t seed, bool summary, std::ostream& out, std::ostream& err) {
  if (suites.empty()) suites = default_suites();
  if (families.empty()) families = family_labels();
  for (const auto& f : families) (void)family_spec(f);  // rejects unknown labels early

  std::vector<Task> tasks;
  for (const auto& s : suites) {
    if (family_independent(s)) {
      tasks.push_back({s, {}});
    } else {
      for (const auto& f : families) tasks.push_back({s, f});
    }
  }

  std::vector<TaskResult> results(tasks.size());
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);
  const auto count = static_cast<std::ptrdiff_t>(tasks.size());
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < count; ++i) {
    try {
      results[i].rows = run_task(tasks[i], cfg, draws, seed);
    } catch (const Error& e) {
      results[i].code = e.code();
      results[i].message = e.what();
    } catch (const std::exception& e) {
      results[i].code = ErrorCode::kDomainError;
      results[i].message = e.what();
    }
  }

  for (std::size_t i = 0; i < tasks.size(); ++i) {
    if (results[i].code) {
      err << "error in " << tasks[i].suite << (tasks[i].family.empty() ? "" : " / " + tasks[i].family) << ": "
          << results[i].message << "\n";
      return exit_for(*results[i].code);
    }
  }

  bool all_ok = true;
  Json doc{{"suites", Json::array()}};
  if (cfg.format == "csv") out << csv_report_header() << "\n";
  for (const auto& s : suites) {
    SuiteRows merged;
    for (std::size_t i = 0; i < tasks.size(); ++i) {
      if (tasks[i].suite != s) continue;
      const auto& r = results[i].rows;
      merged.exact.insert(merged.exact.end(), r.exact.begin(), r.exact.end());
      merged.numeric.insert(merged.numeric.end(), r.numeric.begin(), r.numeric.end());
    }
    const bool ok = all_pass(merged.exact) && all_pass(merged.numeric);
    all_ok = all_ok && ok;
    const std::size_t total = merged.exact.size() + merged.numeric.size();
    std::size_t failed = 0;
    for (const auto& r : merged.exact) failed += decides(r) ? 0 : 1;
    for (const auto& r : merged.numeric) failed += decides(r) ? 0 : 1;
    err << s << ": " << (ok ? "PASS" : "FAIL") << " (" << total - failed << "/" << total << " rows)\n";
    if (cfg.format == "csv") {
      if (!summary) print_rows_csv(out, s, merged);
      continue;
    }
    Json entry{{"suite", s}, {"pass", ok}, {"rows_total", total}, {"rows_failed", failed}};
    if (!summary) {
      Json rows = rows_to_json(merged.exact);
      for (const auto& r : merged.numeric) rows.push_back(to_json(r));
      entry["rows"] = std::move(rows);
    }
    doc["suites"].push_back(std::move(entry));
  }
  doc["pass"] = all_ok;
  if (cfg.format != "csv") out << doc.dump(2) << "\n";
  return all_ok ? kOk : kVerificationFailed;
}

int cmd_normal_order(const RunConfig& cfg, const PairSource& src, std::size_t k, std::size_t j,
                     const std::string& side, std::ostream& out, std::ostream& err) {
  const std::size_t order = std::max(cfg.order, k + j + 2);
  const ShefferPair pair = resolve_pair(src, order, err);
  const auto ju = static_cast<unsigned>(j);
  const NormallyOrderedSeries s = side == "lhs" ? normal_order_lhs(pair, k, ju) : normal_order_rhs(pair, k, ju);
  if (cfg.format == "csv") {
    out << "adag,a,lambda_poly\n";
    for (const auto& [key, poly] : s.terms()) {
      std::string joined;
      for (const Rational& c : poly.row(k + 1)) joined += (joined.empty() ? "" : ";") + to_string(c);
      out << key.first << "," << key.second << "," << joined << "\n";
    }
    return kOk;
  }
  out << to_json(s).dump(2) << "\n";
  return kOk;
}

int cmd_matrix_element(const RunConfig& cfg, const std::string& label, const CoherentParams& p, bool fock_check,
                       std::ostream& out, std::ostream& err) {
  const FamilyEntry entry = fock_family(label, cfg.cutoff);
  if (std::abs(p.lambda) >= entry.guard_radius) throw Error(ErrorCode::kGuardExceeded, "|lambda| exceeds guard");
  if (std::abs(p.zp) > entry.shift_guard) throw Error(ErrorCode::kGuardExceeded, "|z'| exceeds shift guard");
  const Complex general = exp_element_coherent(entry.numeric, p.lambda, p.z, p.zp);
  const EvalResult series = exp_element_coherent_series(entry.pair, p.lambda, p.z, p.zp, entry.guard_radius);
  const Complex overlap = coherent_overlap(p.z, p.zp);
  Json doc{{"family", label}, {"z", to_json(p.z)}, {"zp", to_json(p.zp)}, {"lambda", to_json(p.lambda)},
           {"overlap", to_json(overlap)}, {"closed_form", to_json(general)}, {"series_route", to_json(series.value)}};
  Json cands = Json::array();
  for (const auto& c : coherent_candidates(label)) {
    cands.push_back({{"name", c.name}, {"value", to_json(c.value(p.lambda, std::conj(p.z), p.zp) * overlap)}});
  }
  doc["candidates"] = std::move(cands);
  bool ok = true;
  if (fock_check) {
    FockOptions opt;
    opt.cutoff = cfg.cutoff;
    opt.tolerance = cfg.tolerance;
    const auto rows = fock_verify(entry, p, opt);
    ok = all_pass(rows);
    const auto held = std::count_if(rows.begin(), rows.end(), [](const NumericCheck& r) { return decides(r); });
    err << "fock check: " << (ok ? "PASS" : "FAIL") << " (" << held << "/" << rows.size() << " rows)\n";
    doc["fock"] = rows_to_json(rows);
    doc["pass"] = ok;
  }
  if (cfg.format == "csv") {
    out << "quantity,re,im\n";
    out << "closed_form," << general.real() << "," << general.imag() << "\n";
    out << "series_route," << series.value.real() << "," << series.value.imag() << "\n";
    for (const auto& c : coherent_candidates(label)) {
      const Complex v = c.value(p.lambda, std::conj(p.z), p.zp) * overlap;
      out << csv_field(c.name) << "," << v.real() << "," << v.imag() << "\n";
    }
    return ok ? kOk : kVerificationFailed;
  }
  out << doc.dump(2) << "\n";
  return ok ? kOk : kVerificationFailed;
}

}  // namespace

const std::vector<std::string>& default_suites() {
  static const std::vector<std::string> suites = {"monomiality", "commutator", "normal-order", "coherent",
                                                  "heat",        "hkdf",       "evolution",    "theta-pi"};
  return suites;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sheffer sequences, their ladder operators and boson normal ordering"};
  app.require_subcommand(1);
  app.fallthrough();

  RunConfig cfg;
  app.add_option("--order", cfg.order, "Truncation order of f and g")
      ->envname("SHEFFER_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--lambda-order", cfg.lambda_order, "Powers of lambda kept in normal-order checks")
      ->envname("SHEFFER_LAMBDA_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--a-order", cfg.a_order, "Powers of a kept in normal-order checks")
      ->envname("SHEFFER_A_ORDER")
      ->check(CLI::PositiveNumber);
  app.add_option("--cutoff", cfg.cutoff, "Fock-space dimension")->envname("SHEFFER_CUTOFF")->check(CLI::PositiveNumber);
  app.add_option("--tolerance", cfg.tolerance, "Relative tolerance for numeric checks")
      ->envname("SHEFFER_TOLERANCE")
      ->check(CLI::Range(std::numeric_limits<double>::min(), 1.0 - std::numeric_limits<double>::epsilon()));
  app.add_option("--format", cfg.format, "Output format")
      ->envname("SHEFFER_FORMAT")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0: OpenMP default)")
      ->envname("SHEFFER_THREADS")
      ->check(CLI::NonNegativeNumber);

  auto* list = app.add_subcommand("list", "Dump the family catalog");

  PairSource gen_src;
  std::size_t gen_n = 0;
  bool gen_coeffs = false;
  auto* gen = app.add_subcommand("gen", "Generate s_0..s_n");
  gen->add_option("--family", gen_src.family, "Catalog family");
  gen->add_option("--f", gen_src.f_spec, "f as an expression in x");
  gen->add_option("--g", gen_src.g_spec, "g as an expression in x (default 1)");
  gen->add_option("--n", gen_n, "Highest index")->required();
  gen->add_flag("--coeffs", gen_coeffs, "Coefficient rows only");

  std::vector<std::string> suites;
  std::vector<std::string> v_families;
  bool v_all = false;
  bool v_summary = false;
  std::size_t v_draws = 3;
  std::uint32_t v_seed = 1;
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::vector<std::string> suite_names = default_suites();
  verify->add_option("suites", suites, "Suites to run (default: all)")->check(CLI::IsMember(suite_names));
  auto* fam_opt = verify->add_option("--family", v_families, "Restrict to these families");
  verify->add_flag("--all", v_all, "All catalog families")->excludes(fam_opt);
  verify->add_option("--draws", v_draws, "Random parameter draws per family for the coherent suite")
      ->check(CLI::PositiveNumber);
  verify->add_option("--seed", v_seed, "Seed for the coherent suite draws");
  verify->add_flag("--summary", v_summary, "Per-suite summary without rows");

  PairSource no_src;
  std::size_t no_k = 6;
  std::size_t no_j = 8;
  std::string no_side = "rhs";
  auto* nord = app.add_subcommand("normal-order", "Normally ordered form of exp(lambda M)");
  nord->add_option("--family", no_src.family, "Catalog family");
  nord->add_option("--f", no_src.f_spec, "f as an expression in x");
  nord->add_option("--g", no_src.g_spec, "g as an expression in x (default 1)");
  nord->add_option("--lambda-order,-K", no_k, "Powers of lambda kept")->check(CLI::NonNegativeNumber);
  nord->add_option("--a-order,-J", no_j, "Powers of a kept")->check(CLI::NonNegativeNumber);
  nord->add_option("--side", no_side, "rhs: composed series; lhs: Weyl-algebra expansion")
      ->check(CLI::IsMember({"lhs", "rhs"}));

  std::string me_family;
  std::string me_z = "0";
  std::string me_zp = "0";
  std::string me_lambda = "0";
  bool me_fock = false;
  auto* me = app.add_subcommand("matrix-element", "<z|exp(lambda M)|z'> in closed form");
  me->add_option("--family", me_family, "Catalog family")->required();
  me->add_option("--z", me_z, "z as RE,IM");
  me->add_option("--zp", me_zp, "z' as RE,IM");
  me->add_option("--lambda", me_lambda, "lambda as RE,IM");
  me->add_flag("--fock-check", me_fock, "Compare against truncated Fock-space numerics");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  for (const CLI::Option* opt : app.get_options()) {
    const std::string& env = opt->get_envname();
    if (env.empty() || opt->count() > 0) continue;
    const char* value = std::getenv(env.c_str());
    if (value != nullptr && *value != '\0') {
      err << env << ": invalid value '" << value << "'\n";
      return kUsage;
    }
  }

  try {
    if (list->parsed()) return cmd_list(cfg, out);
    if (gen->parsed()) return cmd_gen(cfg, gen_src, gen_n, gen_coeffs, out, err);
    if (verify->parsed()) return cmd_verify(cfg, suites, v_families, v_draws, v_seed, v_summary, out, err);
    if (nord->parsed()) return cmd_normal_order(cfg, no_src, no_k, no_j, no_side, out, err);
    if (me->parsed()) {
      const CoherentParams p{parse_complex(me_z), parse_complex(me_zp), parse_complex(me_lambda)};
      return cmd_matrix_element(cfg, me_family, p, me_fock, out, err);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_for(e.code());
  }
  return kUsage;
}

}  // namespace sheffer::cli
