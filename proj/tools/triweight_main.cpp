// Command-line surface: build fields, analyze forms, run the character-sum
// and code batteries, and emit weight-distribution / hierarchy tables as
// CSV or JSON.
//
// Exit codes: 0 all checks passed, 1 a check failed, 2 bad usage or config,
// 3 work budget exceeded.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "triweight/code.hpp"
#include "triweight/cyclotomic.hpp"
#include "triweight/ghw.hpp"
#include "triweight/kernels.hpp"
#include "triweight/verify.hpp"

namespace {

using nlohmann::json;
using namespace triweight;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

struct CommonOpts {
  int p = 3;
  int e = 3;
  std::vector<int> modulus;  // empty = deterministic default
  std::string alpha = "1";
  std::string form = "tr_x2";
  std::string output = "csv";
  std::string method = "both";
  std::uint64_t budget = 100'000'000;
  int threads = 0;
  bool serial = false;
};

Field build_field(const CommonOpts& o) {
  if (o.modulus.empty()) return Field(o.p, o.e);
  return Field(o.p, o.e, o.modulus);
}

Elem parse_element(const Field& f, const std::string& s) {
  if (s == "theta") return f.primitive();
  if (s.rfind("theta^", 0) == 0) {
    const long long k = std::stoll(s.substr(6));
    return f.pow(f.primitive(), k);
  }
  if (!s.empty() && (s[0] == '[')) {
    const json j = json::parse(s);
    std::vector<int> coords = j.get<std::vector<int>>();
    return f.from_coords(coords);
  }
  // plain integer = prime-subfield constant
  return f.from_prime_subfield(std::stoi(s));
}

FormSpec parse_form(const Field& f, const std::string& s) {
  if (s == "tr_x2") return FormSpec::tr_x2(f);
  if (s == "tr_theta_x2") return FormSpec::tr_theta_x2(f);
  const json j = json::parse(s);
  if (!j.is_array() || static_cast<int>(j.size()) != f.e())
    throw std::invalid_argument("--form: expected 'tr_x2', 'tr_theta_x2', or a JSON array of e "
                                "coefficient coordinate lists");
  FormSpec spec;
  for (const auto& item : j) {
    if (item.is_array()) {
      spec.coeffs.push_back(f.from_coords(item.get<std::vector<int>>()));
    } else if (item.is_string()) {
      spec.coeffs.push_back(parse_element(f, item.get<std::string>()));
    } else {
      spec.coeffs.push_back(f.from_prime_subfield(item.get<int>()));
    }
  }
  return spec;
}

ExecPolicy policy(const CommonOpts& o) {
  ExecPolicy pol;
  pol.parallel = !o.serial;
  pol.threads = o.threads;
  pol.budget = o.budget;
  return pol;
}

int print_check_table(const std::vector<CheckResult>& results,
                      const std::vector<std::string>& skipped = {}) {
  int failures = 0;
  for (const auto& r : results) {
    std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
    if (!r.pass && !r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
    if (!r.pass) ++failures;
  }
  for (const auto& s : skipped) std::cout << "[SKIP] " << s << "\n";
  std::cout << results.size() - failures << "/" << results.size() << " checks passed";
  if (!skipped.empty()) std::cout << ", " << skipped.size() << " skipped";
  std::cout << "\n";
  if (failures) return kExitCheckFailed;
  if (!skipped.empty()) return kExitBudget;
  return kExitOk;
}

json distribution_json(const WeightDistribution& wd) {
  json rows = json::array();
  for (const auto& [w, m] : wd.entries) rows.push_back({w, m});
  return json{{"length", wd.length}, {"dimension", wd.dimension}, {"weights", rows}};
}

WeightDistribution enumerate_distribution(const Field& f, const Code& c, const ExecPolicy& pol) {
  const auto hist = weight_histogram(f, c, pol);
  WeightDistribution wd;
  wd.length = c.length;
  wd.dimension = 2 * f.e();
  wd.entries.emplace_back(0, 1);
  for (long long w = 1; w < static_cast<long long>(hist.size()); ++w)
    if (hist[w]) wd.entries.emplace_back(w, hist[w]);
  return wd;
}

int cmd_field(const CommonOpts& o, bool verbose) {
  const Field f = build_field(o);
  std::cout << f.to_json() << "\n";
  if (verbose) {
    std::cout << "q = " << f.q() << "\n";
    std::cout << "primitive element order = " << f.multiplicative_order(f.primitive()) << "\n";
    std::cout << "trace of 1 = " << f.trace(f.one()) << "\n";
  }
  return kExitOk;
}

int cmd_form_analyze(const CommonOpts& o) {
  const Field f = build_field(o);
  const FormSpec spec = parse_form(f, o.form);
  const FormProfile prof = analyze_form(f, spec);
  json out = json::parse(prof.to_json());
  out["spec"] = json::parse(spec.to_json(f));
  out["field"] = json::parse(f.to_json());
  out["nondegenerate"] = prof.nondegenerate(f);
  std::cout << out.dump() << "\n";
  return kExitOk;
}

int cmd_sums_verify(const std::string& level) {
  std::vector<CheckResult> results = check_gauss_sum_laws({3, 5, 7, 11});
  for (auto& r : check_orbit_sums({3, 5, 7}, 6)) results.push_back(std::move(r));
  std::vector<std::pair<int, int>> fields = {{3, 3}};
  if (level == "full") {
    fields.push_back({5, 3});
    fields.push_back({3, 4});
  }
  for (auto [p, e] : fields) {
    const Field f(p, e);
    for (const char* fs : {"tr_x2", "tr_theta_x2"}) {
      const FormSpec spec =
          std::string(fs) == "tr_x2" ? FormSpec::tr_x2(f) : FormSpec::tr_theta_x2(f);
      const FormProfile prof = analyze_form(f, spec);
      std::ostringstream lbl;
      lbl << "(" << p << "," << e << ") " << fs;
      results.push_back(check_weil_identities(f, spec, prof, lbl.str()));
    }
    // a degenerate form: image membership decides vanishing
    FormSpec zero;
    zero.coeffs.assign(f.e(), f.zero());
    const FormProfile zprof = analyze_form(f, zero);
    std::ostringstream lbl;
    lbl << "(" << p << "," << e << ") zero form";
    results.push_back(check_weil_identities(f, zero, zprof, lbl.str()));
  }
  return print_check_table(results);
}

int cmd_wdist(const CommonOpts& o) {
  const Field f = build_field(o);
  const FormSpec spec = parse_form(f, o.form);
  const Code c = make_code(f, spec, parse_element(f, o.alpha));
  const ExecPolicy pol = policy(o);

  std::optional<WeightDistribution> formula, enumerated;
  if (o.method == "formula" || o.method == "both") formula = weight_distribution_formula(f, c);
  if (o.method == "enumerate" || o.method == "both") enumerated = enumerate_distribution(f, c, pol);
  if (o.method == "both" && !(*formula == *enumerated)) {
    std::cerr << "method mismatch:\n  formula     " << formula->to_json()
              << "\n  enumeration " << enumerated->to_json() << "\n";
    return kExitCheckFailed;
  }
  const WeightDistribution& wd = formula ? *formula : *enumerated;
  if (o.output == "json") {
    json out = distribution_json(wd);
    out["method"] = o.method;
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "weight,multiplicity\n";
    for (const auto& [w, m] : wd.entries) std::cout << w << "," << m << "\n";
  }
  return kExitOk;
}

int cmd_ghw(const CommonOpts& o, const std::string& rspec) {
  const Field f = build_field(o);
  const FormSpec spec = parse_form(f, o.form);
  const Code c = make_code(f, spec, parse_element(f, o.alpha));
  const ExecPolicy pol = policy(o);

  std::vector<int> rs;
  if (rspec == "all") {
    for (int r = 1; r <= 2 * f.e(); ++r) rs.push_back(r);
  } else {
    std::stringstream ss(rspec);
    std::string tok;
    while (std::getline(ss, tok, ',')) rs.push_back(std::stoi(tok));
  }
  for (int r : rs)
    if (r < 1 || r > 2 * f.e()) {
      std::cerr << "--r: rank " << r << " outside [1, " << 2 * f.e() << "]\n";
      return kExitUsage;
    }

  struct Row {
    int r;
    long long d;
    std::string method;
    std::optional<Subspace> witness;
  };
  std::vector<Row> rows;
  bool mismatch = false;
  for (int r : rs) {
    if (o.method == "formula") {
      rows.push_back({r, ghw_formula(f, c, r), "formula", std::nullopt});
    } else if (o.method == "brute") {
      GhwEntry g = ghw_brute(f, c, r, pol);
      rows.push_back({r, g.d, "brute", g.witness});
    } else {
      GhwEntry g = ghw_brute(f, c, r, pol);
      const long long d = ghw_formula(f, c, r);
      if (g.d != d) {
        std::cerr << "method mismatch at r=" << r << ": brute=" << g.d << " formula=" << d
                  << "\n";
        mismatch = true;
      }
      rows.push_back({r, g.d, "both", g.witness});
    }
  }
  if (o.output == "json") {
    json out = json::array();
    for (const auto& row : rows) {
      json j{{"r", row.r}, {"d_r", row.d}, {"method", row.method}};
      if (row.witness) j["witness"] = json::parse(row.witness->to_json());
      out.push_back(std::move(j));
    }
    std::cout << out.dump() << "\n";
  } else {
    std::cout << "r,d_r,method\n";
    for (const auto& row : rows)
      std::cout << row.r << "," << row.d << "," << csv_quote(row.method) << "\n";
  }
  return mismatch ? kExitCheckFailed : kExitOk;
}

std::vector<GoldenExample> load_golden(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("--golden: cannot open " + path);
  json j;
  in >> j;
  std::vector<GoldenExample> out;
  for (const auto& item : j.at("examples")) {
    GoldenExample g;
    g.name = item.at("name").get<std::string>();
    g.p = item.at("p").get<int>();
    g.e = item.at("e").get<int>();
    g.alpha = item.at("alpha").get<std::string>();
    g.form = item.at("form").get<std::string>();
    g.length = item.at("length").get<long long>();
    g.dimension = item.at("dimension").get<int>();
    g.min_distance = item.at("min_distance").get<long long>();
    for (const auto& row : item.at("weights"))
      g.weights.emplace_back(row.at(0).get<long long>(), row.at(1).get<long long>());
    out.push_back(std::move(g));
  }
  return out;
}

int cmd_check_examples(const CommonOpts& o, const std::string& golden_path) {
  const std::vector<GoldenExample> table =
      golden_path.empty() ? golden_examples() : load_golden(golden_path);
  const ExecPolicy pol = policy(o);
  std::vector<CheckResult> results;
  for (const auto& g : table) results.push_back(check_golden_example(g, pol));
  return print_check_table(results);
}

int cmd_verify(const CommonOpts& o, const std::string& level) {
  const VerifyReport rep =
      verify_battery(level == "full" ? VerifyLevel::kFull : VerifyLevel::kQuick, policy(o));
  return print_check_table(rep.results, rep.skipped);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"three-weight codes from quadratic-form defining sets: tables and checks"};
  app.require_subcommand(1);

  CommonOpts o;

  auto add_field_opts = [&](CLI::App* cmd) {
    cmd->add_option("--p", o.p, "odd prime characteristic")->required();
    cmd->add_option("--e", o.e, "extension degree")->required();
    cmd->add_option("--modulus", o.modulus,
                    "monic modulus coefficients, constant first (default: smallest irreducible)");
  };
  auto add_code_opts = [&](CLI::App* cmd) {
    add_field_opts(cmd);
    cmd->add_option("--alpha", o.alpha, "element: integer, 'theta', 'theta^k', or [c0,...]");
    cmd->add_option("--form", o.form,
                    "'tr_x2', 'tr_theta_x2', or JSON list of e coefficient vectors");
    cmd->add_option("--budget", o.budget, "work-unit cap for enumeration");
    cmd->add_option("--threads", o.threads, "worker thread cap (0 = default)");
    cmd->add_flag("--serial", o.serial, "force the serial reference kernels");
    cmd->add_option("--output", o.output, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
  };

  auto* field = app.add_subcommand("field", "finite field construction");
  auto* field_build = field->add_subcommand("build", "emit the field description as JSON");
  add_field_opts(field_build);
  auto* field_show = field->add_subcommand("show", "field description plus derived facts");
  add_field_opts(field_show);

  auto* form = app.add_subcommand("form", "quadratic form analysis");
  auto* form_analyze = form->add_subcommand("analyze", "gram matrix, rank, sign, linear map");
  add_field_opts(form_analyze);
  form_analyze->add_option("--form", o.form, "'tr_x2', 'tr_theta_x2', or JSON coefficients");

  auto* sums = app.add_subcommand("sums", "character-sum identities");
  auto* sums_verify = sums->add_subcommand("verify", "run the exact identity sweeps");
  std::string sums_level = "quick";
  sums_verify->add_option("--level", sums_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));

  auto* code = app.add_subcommand("code", "code construction and tables");
  auto* wdist = code->add_subcommand("wdist", "weight distribution table");
  add_code_opts(wdist);
  wdist->add_option("--method", o.method, "formula, enumerate, or both")
      ->check(CLI::IsMember({"formula", "enumerate", "both"}));
  auto* ghw = code->add_subcommand("ghw", "generalized Hamming weights");
  add_code_opts(ghw);
  std::string rspec = "all";
  ghw->add_option("--r", rspec, "'all' or a comma-separated rank list");
  ghw->add_option("--method", o.method, "formula, brute, or both")
      ->check(CLI::IsMember({"formula", "brute", "both"}));
  auto* check_examples = code->add_subcommand("check-examples",
                                              "reproduce the three reference configurations");
  std::string golden_path;
  check_examples->add_option("--golden", golden_path, "alternative golden JSON file");
  check_examples->add_option("--budget", o.budget, "work-unit cap for enumeration");
  check_examples->add_option("--threads", o.threads, "worker thread cap");
  check_examples->add_flag("--serial", o.serial, "force the serial reference kernels");

  auto* verify = app.add_subcommand("verify", "run the whole check battery");
  std::string verify_level = "quick";
  verify->add_option("level", verify_level, "quick or full")
      ->check(CLI::IsMember({"quick", "full"}));
  verify->add_option("--budget", o.budget, "work-unit cap for enumeration");
  verify->add_option("--threads", o.threads, "worker thread cap");
  verify->add_flag("--serial", o.serial, "force the serial reference kernels");

  CLI11_PARSE(app, argc, argv);

  try {
    if (field_build->parsed()) return cmd_field(o, false);
    if (field_show->parsed()) return cmd_field(o, true);
    if (form_analyze->parsed()) return cmd_form_analyze(o);
    if (sums_verify->parsed()) return cmd_sums_verify(sums_level);
    if (wdist->parsed()) return cmd_wdist(o);
    if (ghw->parsed()) return cmd_ghw(o, rspec);
    if (check_examples->parsed()) return cmd_check_examples(o, golden_path);
    if (verify->parsed()) return cmd_verify(o, verify_level);
    std::cerr << "no subcommand selected\n";
    return kExitUsage;
  } catch (const BudgetExceeded& ex) {
    std::cerr << "budget exceeded: " << ex.what() << "\n";
    return kExitBudget;
  } catch (const json::exception& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::domain_error& ex) {
    std::cerr << "config error: " << ex.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kExitCheckFailed;
  }
}
