// Command-line front end: field construction, evaluation, permutation
// surveys, necessary-condition screens, character-sum tables, and the
// self-verification suites. Data goes to stdout (or --out), diagnostics to
// stderr. Exit codes: 0 success, 1 usage or configuration error, 2
// mathematical verification failure.
//
// Output is byte-identical across runs for the same configuration: the
// modulus choice, element order, and every sweep are deterministic.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dicksonlab/dickson.hpp"
#include "dicksonlab/field.hpp"
#include "dicksonlab/filters.hpp"
#include "dicksonlab/io.hpp"
#include "dicksonlab/pp.hpp"
#include "dicksonlab/sums.hpp"
#include "dicksonlab/verify.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace dicksonlab;

constexpr std::uint64_t kSurveyGuard = 128;
constexpr std::uint64_t kSumsGuard = 64;
constexpr std::uint64_t kIndexGuard = 100000;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMathFailure = 2;

struct CommonOpts {
  std::uint64_t p = 0;
  std::uint32_t e = 1;
  std::string modulus;  // "c0,c1,...,1"
  bool force = false;
  std::string format = "csv";
  std::string out;
};

void add_field_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--p", opts.p, "characteristic (prime)")->required();
  cmd->add_option("--e", opts.e, "extension degree");
  cmd->add_option("--modulus", opts.modulus,
                  "override modulus as comma-separated coefficients, "
                  "lowest first, must end in 1");
  cmd->add_flag("--force", opts.force, "lift size guards");
}

void add_output_options(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_option("--out", opts.out, "write data to a file instead of stdout");
}

Field open_field(const CommonOpts& opts) {
  std::optional<std::vector<std::uint32_t>> override_coeffs;
  if (!opts.modulus.empty()) {
    std::vector<std::uint32_t> coeffs;
    std::stringstream ss(opts.modulus);
    std::string part;
    while (std::getline(ss, part, ','))
      coeffs.push_back(static_cast<std::uint32_t>(std::stoul(part)));
    override_coeffs = std::move(coeffs);
  }
  return make_field(opts.p, opts.e, override_coeffs, opts.force);
}

class Output {
 public:
  explicit Output(const CommonOpts& opts) {
    if (!opts.out.empty()) {
      file_.open(opts.out, std::ios::trunc);
      if (!file_) throw std::invalid_argument("cannot open " + opts.out);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

const char* bool_str(bool b) { return b ? "true" : "false"; }

std::string outcome_csv(const nec::FilterOutcome& o) {
  return std::string(bool_str(o.applicable)) + "," + bool_str(o.passed);
}

json witness_json(const pp::Verdict& v, const FieldSpec& spec) {
  if (!v.witness) return nullptr;
  json j;
  if (const auto* col = std::get_if<pp::Collision>(&*v.witness)) {
    j["type"] = "collision";
    if (v.method == pp::Method::two_to_one) {
      j["y1"] = io::render(spec.quad_from_code(col->x1));
      j["y2"] = io::render(spec.quad_from_code(col->x2));
    } else {
      j["x1"] = io::render(spec.from_code(col->x1));
      j["x2"] = io::render(spec.from_code(col->x2));
    }
  } else if (const auto* missing = std::get_if<pp::MissingValue>(&*v.witness)) {
    j["type"] = "missing_value";
    j["value"] = io::render(spec.from_code(missing->value));
  } else if (const auto* bad = std::get_if<pp::BadExponent>(&*v.witness)) {
    j["type"] = "failing_exponent";
    j["i"] = bad->i;
  }
  return j;
}

// E_n(1,.) as a callable map, picking a route that can reach n
pp::EvalFn e1_map(std::uint64_t n, const FieldSpec& spec) {
  if (n <= dickson::kRecursiveLimit && n <= 4 * spec.q() * spec.q()) {
    return [n](const FieldElement& x) { return dickson::e1_recursive(n, x); };
  }
  if (spec.p() == 2)
    throw std::invalid_argument(
        "index too large for characteristic 2 (no functional route)");
  return [n](const FieldElement& x) { return dickson::e1_functional(n, x); };
}

// ---------------------------------------------------------------------------

int cmd_field_info(const CommonOpts& opts) {
  Field field = open_field(opts);
  json j = io::field_spec_json(*field);
  j["q"] = field->q();
  if (field->has_quad() &&
      (field->q() <= kSurveyGuard || opts.force)) {
    j["v_size"] = pp::reflection_set(*field).size();
  }
  Output out(opts);
  out.stream() << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_eval(const CommonOpts& opts, std::uint64_t n, const std::string& x_text,
             const std::string& a_text, const std::string& family_name,
             std::uint32_t k, const std::string& method) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  FieldElement x = io::parse_element(x_text, spec);
  FieldElement a = io::parse_element(a_text, spec);

  dickson::Family family = dickson::Family::reversed_second_kind;
  if (family_name == "kth") family = dickson::Family::kth_kind;
  else if (family_name == "reversed-kth") family = dickson::Family::reversed_kth_kind;
  else if (family_name == "second") family = dickson::Family::second_kind;
  else if (family_name == "reversed-second") family = dickson::Family::reversed_second_kind;
  else throw std::invalid_argument("unknown family: " + family_name);

  const bool unit_reversed =
      family == dickson::Family::reversed_second_kind && a == spec.one();

  std::vector<std::pair<std::string, FieldElement>> values;
  auto want = [&](const char* name) {
    return method == "all" || method == name;
  };
  if (want("direct") && n <= dickson::kDirectLimit)
    values.emplace_back("direct", dickson::eval_direct({n, a, x, family, k}));
  if (unit_reversed) {
    if (want("recursive") && n <= dickson::kRecursiveLimit)
      values.emplace_back("recursive", dickson::e1_recursive(n, x));
    if (want("functional") && spec.p() != 2)
      values.emplace_back("functional", dickson::e1_functional(n, x));
    if (want("odd-binomial") && spec.p() != 2 && n + 1 <= dickson::kDirectLimit)
      values.emplace_back("odd-binomial", dickson::e1_via_odd_binomial(n, x));
    if (want("series") && n <= 100000)
      values.emplace_back("series", dickson::e1_series(x, n)[n]);
  }
  if (values.empty())
    throw std::invalid_argument("no applicable evaluation method");

  bool agree = true;
  for (const auto& [name, v] : values) agree = agree && v == values.front().second;

  Output out(opts);
  if (opts.format == "json") {
    json j;
    j["n"] = n;
    j["a"] = io::render(a);
    j["x"] = io::render(x);
    j["family"] = family_name;
    j["k"] = k;
    json vals;
    for (const auto& [name, v] : values) vals[name] = io::render(v);
    j["values"] = vals;
    j["agree"] = agree;
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "n,a,x,family,method,value\n";
    for (const auto& [name, v] : values)
      out.stream() << n << "," << io::render(a) << "," << io::render(x) << ","
                   << family_name << "," << name << "," << io::render(v)
                   << "\n";
  }
  if (!agree) {
    std::cerr << "error: evaluation methods disagree\n";
    return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_pp(const CommonOpts& opts, std::uint64_t n) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  pp::EvalFn f = e1_map(n, spec);
  pp::Verdict exhaustive = pp::is_pp_exhaustive(f, spec);
  pp::Verdict power_sum = pp::is_pp_power_sum(f, spec);
  std::optional<pp::Verdict> two;
  if (spec.p() != 2) two = pp::is_pp_two_to_one(n, spec);

  bool agree = exhaustive.is_pp == power_sum.is_pp &&
               (!two || two->is_pp == exhaustive.is_pp);

  Output out(opts);
  if (opts.format == "json") {
    json j;
    j["n"] = n;
    j["is_pp"] = exhaustive.is_pp;
    json methods;
    methods["exhaustive"] = {{"is_pp", exhaustive.is_pp},
                             {"witness", witness_json(exhaustive, spec)}};
    methods["power_sum"] = {{"is_pp", power_sum.is_pp},
                            {"witness", witness_json(power_sum, spec)}};
    if (two)
      methods["two_to_one"] = {{"is_pp", two->is_pp},
                               {"witness", witness_json(*two, spec)}};
    j["methods"] = methods;
    j["agree"] = agree;
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "n,method,is_pp,witness\n";
    auto row = [&](const char* name, const pp::Verdict& v) {
      std::string w;
      if (v.witness) {
        if (const auto* col = std::get_if<pp::Collision>(&*v.witness)) {
          if (v.method == pp::Method::two_to_one)
            w = io::render(spec.quad_from_code(col->x1)) + "~" +
                io::render(spec.quad_from_code(col->x2));
          else
            w = io::render(spec.from_code(col->x1)) + "~" +
                io::render(spec.from_code(col->x2));
        } else if (const auto* bad = std::get_if<pp::BadExponent>(&*v.witness)) {
          w = "i=" + std::to_string(bad->i);
        }
      }
      out.stream() << n << "," << name << "," << bool_str(v.is_pp) << "," << w
                   << "\n";
    };
    row("exhaustive", exhaustive);
    row("power_sum", power_sum);
    if (two) row("two_to_one", *two);
  }
  if (!agree) {
    std::cerr << "error: permutation criteria disagree at n=" << n << "\n";
    return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_filters(const CommonOpts& opts, std::uint64_t n_max) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  if (n_max == 0) n_max = spec.q() * spec.q() - 1;
  if (n_max > kIndexGuard && !opts.force)
    throw std::invalid_argument("n-max exceeds the guard (use --force)");
  auto reports = nec::screen(n_max, spec.q(), spec.p());

  Output out(opts);
  if (opts.format == "json") {
    json rows = json::array();
    for (const auto& r : reports) {
      rows.push_back({{"n", r.n},
                      {"period6", {{"applicable", r.period6.applicable},
                                   {"passed", r.period6.passed}}},
                      {"odd_index", {{"applicable", r.odd_index.applicable},
                                     {"passed", r.odd_index.passed}}},
                      {"mod4_gcd", {{"applicable", r.mod4_gcd.applicable},
                                    {"passed", r.mod4_gcd.passed}}},
                      {"overall", r.overall}});
    }
    json j;
    j["p"] = spec.p();
    j["e"] = spec.e();
    j["rows"] = rows;
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "n,period6_applicable,period6_passed,odd_index_applicable,"
                    "odd_index_passed,mod4_gcd_applicable,mod4_gcd_passed,"
                    "overall\n";
    for (const auto& r : reports)
      out.stream() << r.n << "," << outcome_csv(r.period6) << ","
                   << outcome_csv(r.odd_index) << "," << outcome_csv(r.mod4_gcd)
                   << "," << bool_str(r.overall) << "\n";
  }
  return kExitOk;
}

int cmd_survey(const CommonOpts& opts, std::uint64_t n_max) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  const std::uint64_t q = spec.q();
  if (q > kSurveyGuard && !opts.force)
    throw std::invalid_argument("survey guard is q <= 128 (use --force)");
  if (n_max == 0) n_max = q * q - 1;
  if (n_max > kIndexGuard && !opts.force)
    throw std::invalid_argument("n-max exceeds the guard (use --force)");

  auto table = dickson::e1_table(spec, n_max);
  const bool odd = spec.p() != 2;

  struct Row {
    std::uint64_t n;
    bool is_pp, agree_power_sum;
    std::optional<bool> agree_two_to_one;
    nec::FilterReport filters;
    std::uint64_t reduced;
  };
  std::vector<Row> rows;
  rows.reserve(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const CoeffSeq& values = table[n];
    auto f = [&](const FieldElement& x) { return values[x.code()]; };
    pp::Verdict exhaustive = pp::is_pp_exhaustive(f, spec);
    pp::Verdict power_sum = pp::is_pp_power_sum(f, spec);
    Row row;
    row.n = n;
    row.is_pp = exhaustive.is_pp;
    row.agree_power_sum = power_sum.is_pp == exhaustive.is_pp;
    if (odd)
      row.agree_two_to_one =
          pp::is_pp_two_to_one(n, spec).is_pp == exhaustive.is_pp;
    row.filters = nec::screen_one(n, q, spec.p());
    row.reduced = dickson::reduce_index(n, q);
    // soundness tripwire: a permutation index must survive every filter
    if (row.is_pp && !row.filters.overall) {
      std::cerr << "error: permutation index n=" << n
                << " rejected by a necessary-condition filter\n";
      return kExitMathFailure;
    }
    if (!row.agree_power_sum || (row.agree_two_to_one && !*row.agree_two_to_one)) {
      std::cerr << "error: permutation criteria disagree at n=" << n << "\n";
      return kExitMathFailure;
    }
    rows.push_back(std::move(row));
  }

  Output out(opts);
  if (opts.format == "json") {
    json jrows = json::array();
    for (const auto& r : rows) {
      json j = {{"n", r.n},
                {"is_pp", r.is_pp},
                {"agree_power_sum", r.agree_power_sum},
                {"agree_two_to_one",
                 r.agree_two_to_one ? json(*r.agree_two_to_one) : json(nullptr)},
                {"filter_overall", r.filters.overall},
                {"period6", {{"applicable", r.filters.period6.applicable},
                             {"passed", r.filters.period6.passed}}},
                {"odd_index", {{"applicable", r.filters.odd_index.applicable},
                               {"passed", r.filters.odd_index.passed}}},
                {"mod4_gcd", {{"applicable", r.filters.mod4_gcd.applicable},
                              {"passed", r.filters.mod4_gcd.passed}}},
                {"reduced_index", r.reduced}};
      jrows.push_back(j);
    }
    json j;
    j["p"] = spec.p();
    j["e"] = spec.e();
    j["q"] = q;
    j["rows"] = jrows;
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream()
        << "n,is_pp,agree_power_sum,agree_two_to_one,filter_overall,"
           "period6_applicable,period6_passed,odd_index_applicable,"
           "odd_index_passed,mod4_gcd_applicable,mod4_gcd_passed,"
           "reduced_index\n";
    for (const auto& r : rows) {
      out.stream() << r.n << "," << bool_str(r.is_pp) << ","
                    << bool_str(r.agree_power_sum) << ",";
      if (r.agree_two_to_one) out.stream() << bool_str(*r.agree_two_to_one);
      out.stream() << "," << bool_str(r.filters.overall) << ","
                    << outcome_csv(r.filters.period6) << ","
                    << outcome_csv(r.filters.odd_index) << ","
                    << outcome_csv(r.filters.mod4_gcd) << "," << r.reduced
                    << "\n";
    }
  }
  return kExitOk;
}

int cmd_sums(const CommonOpts& opts, const std::string& method) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  if (spec.p() == 2)
    throw std::invalid_argument("sum tables require odd characteristic");
  if (spec.q() > kSumsGuard && !opts.force)
    throw std::invalid_argument("sums guard is q <= 64 (use --force)");

  Output out(opts);
  if (method == "scheme" || method == "brute") {
    sums::SumTable table = method == "scheme" ? sums::table_scheme(spec)
                                              : sums::table_brute_force(spec);
    const char* mname =
        table.method == sums::Method::coefficient_scheme ? "scheme" : "brute";
    if (opts.format == "json") {
      json values = json::array();
      for (const auto& v : table.values) values.push_back(io::render(v));
      json j = {{"q", table.q}, {"method", mname}, {"values", values}};
      out.stream() << j.dump(2) << "\n";
    } else {
      out.stream() << "n,s,method\n";
      for (std::size_t i = 0; i < table.values.size(); ++i)
        out.stream() << (i + 1) << "," << io::render(table.values[i]) << ","
                     << mname << "\n";
    }
    return kExitOk;
  }

  sums::SumTable scheme = sums::table_scheme(spec);
  sums::SumTable brute = sums::table_brute_force(spec);
  bool all_match = true;
  if (opts.format == "json") {
    json rows = json::array();
    for (std::size_t i = 0; i < scheme.values.size(); ++i) {
      bool match = scheme.values[i] == brute.values[i];
      all_match = all_match && match;
      rows.push_back({{"n", i + 1},
                      {"s_scheme", io::render(scheme.values[i])},
                      {"s_brute", io::render(brute.values[i])},
                      {"match", match}});
    }
    json j = {{"q", spec.q()}, {"rows", rows}};
    out.stream() << j.dump(2) << "\n";
  } else {
    out.stream() << "n,s_scheme,s_brute,match\n";
    for (std::size_t i = 0; i < scheme.values.size(); ++i) {
      bool match = scheme.values[i] == brute.values[i];
      all_match = all_match && match;
      out.stream() << (i + 1) << "," << io::render(scheme.values[i]) << ","
                   << io::render(brute.values[i]) << "," << bool_str(match)
                   << "\n";
    }
  }
  if (!all_match) {
    std::cerr << "error: sum tables disagree\n";
    return kExitMathFailure;
  }
  return kExitOk;
}

int cmd_verify(const CommonOpts& opts, const std::vector<std::string>& suites) {
  Field field = open_field(opts);
  const FieldSpec& spec = *field;
  if (spec.q() > kSurveyGuard && !opts.force)
    throw std::invalid_argument("verify guard is q <= 128 (use --force)");
  auto results = verify::run(spec, suites);

  Output out(opts);
  bool all_passed = true;
  if (opts.format == "json") {
    json jr = json::array();
    for (const auto& r : results) {
      all_passed = all_passed && (r.passed || !r.applicable);
      jr.push_back({{"suite", r.name},
                    {"applicable", r.applicable},
                    {"passed", r.passed},
                    {"checks", r.checks},
                    {"counterexample",
                     r.counterexample.empty() ? json(nullptr)
                                              : json(r.counterexample)}});
    }
    json j = {{"p", spec.p()}, {"e", spec.e()}, {"q", spec.q()}, {"suites", jr}};
    out.stream() << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      if (!r.applicable) {
        out.stream() << "[ -- ] " << r.name << " (not applicable)\n";
        continue;
      }
      all_passed = all_passed && r.passed;
      out.stream() << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << " ("
                   << r.checks << " checks)";
      if (!r.passed) out.stream() << " -- " << r.counterexample;
      out.stream() << "\n";
    }
  }
  return all_passed ? kExitOk : kExitMathFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"reversed Dickson second-kind permutation laboratory"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::uint64_t n = 0, n_max = 0;
  std::string x_text = "0", a_text = "1", family_name = "reversed-second";
  std::uint32_t k = 1;
  std::string method = "all", sums_method = "both";
  std::vector<std::string> suites;

  CLI::App* info = app.add_subcommand("field-info", "field parameters as JSON");
  add_field_options(info, opts);
  add_output_options(info, opts);

  CLI::App* eval = app.add_subcommand("eval", "evaluate a Dickson family member");
  add_field_options(eval, opts);
  add_output_options(eval, opts);
  eval->add_option("--n", n, "index")->required();
  eval->add_option("--x", x_text, "argument (dotted coefficients)")->required();
  eval->add_option("--a", a_text, "parameter");
  eval->add_option("--family", family_name,
                   "kth | reversed-kth | second | reversed-second");
  eval->add_option("--k", k, "kind parameter for the kth families");
  eval->add_option("--method", method,
                   "all | direct | recursive | functional | odd-binomial | series");

  CLI::App* ppc = app.add_subcommand("pp", "permutation tests for E_n(1,x)");
  add_field_options(ppc, opts);
  add_output_options(ppc, opts);
  ppc->add_option("--n", n, "index")->required();

  CLI::App* filters = app.add_subcommand("filters", "necessary-condition screen");
  add_field_options(filters, opts);
  add_output_options(filters, opts);
  filters->add_option("--n-max", n_max, "largest index (default q^2-1)");

  CLI::App* survey = app.add_subcommand(
      "survey", "permutation verdicts and filters for n = 0..n-max");
  add_field_options(survey, opts);
  add_output_options(survey, opts);
  survey->add_option("--n-max", n_max, "largest index (default q^2-1)");

  CLI::App* sums_cmd = app.add_subcommand("sums", "character-sum table");
  add_field_options(sums_cmd, opts);
  add_output_options(sums_cmd, opts);
  sums_cmd->add_option("--method", sums_method, "scheme | brute | both")
      ->check(CLI::IsMember({"scheme", "brute", "both"}));

  CLI::App* verify_cmd =
      app.add_subcommand("verify", "run the self-verification suites");
  add_field_options(verify_cmd, opts);
  add_output_options(verify_cmd, opts);
  verify_cmd->add_option("--suite", suites, "run only the named suites");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_field_info(opts);
    if (eval->parsed())
      return cmd_eval(opts, n, x_text, a_text, family_name, k, method);
    if (ppc->parsed()) return cmd_pp(opts, n);
    if (filters->parsed()) return cmd_filters(opts, n_max);
    if (survey->parsed()) return cmd_survey(opts, n_max);
    if (sums_cmd->parsed()) return cmd_sums(opts, sums_method);
    if (verify_cmd->parsed()) return cmd_verify(opts, suites);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "internal inconsistency: " << e.what() << "\n";
    return kExitMathFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
