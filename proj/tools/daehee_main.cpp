// Command-line front end: sequence tables, polynomial evaluation, the
// identity suite, and p-adic convergence reports, all in exact arithmetic.
//
// Exit codes: 0 success / all identities pass, 1 identity failure,
// 2 usage error, 3 term-budget exceeded.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "daehee/identities.hpp"
#include "daehee/rational.hpp"
#include "daehee/sequences.hpp"
#include "daehee/volkenborn.hpp"

namespace {

using daehee::Integrand;
using daehee::IntegrandKind;
using daehee::Rational;
using daehee::SequenceTable;
using daehee::Triangle;
using json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitIdentityFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  auto r = Rational::parse(text);
  if (!r) throw UsageError("invalid rational for " + flag + ": '" + text + "'");
  return *r;
}

std::vector<Rational> parse_sample_args(const std::vector<std::string>& args) {
  std::vector<Rational> samples;
  for (const std::string& arg : args) {
    std::size_t pos = 0;
    while (pos <= arg.size()) {
      const std::size_t comma = arg.find(',', pos);
      const std::string piece =
          comma == std::string::npos ? arg.substr(pos) : arg.substr(pos, comma - pos);
      samples.push_back(parse_rational_arg(piece, "--x"));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return samples;
}

std::pair<unsigned, unsigned> parse_levels(const std::string& text) {
  const std::size_t dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const unsigned n = static_cast<unsigned>(std::stoul(text));
      return {n, n};
    }
    const unsigned lo = static_cast<unsigned>(std::stoul(text.substr(0, dots)));
    const unsigned hi = static_cast<unsigned>(std::stoul(text.substr(dots + 2)));
    if (lo > hi) throw UsageError("--levels range is reversed: " + text);
    return {lo, hi};
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid --levels range: '" + text + "'");
  } catch (const std::out_of_range&) {
    throw UsageError("invalid --levels range: '" + text + "'");
  }
}

// ---- table ----

int run_table(const std::string& seq, unsigned n_max, const std::string& format) {
  const bool is_triangle = seq == "stirling1" || seq == "stirling2";
  if (is_triangle) {
    const Triangle t = seq == "stirling1" ? daehee::stirling1(n_max) : daehee::stirling2(n_max);
    if (format == "json") {
      json out = json::array();
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        json row = json::array();
        for (const Rational& v : t.row(n)) row.push_back(v.to_string());
        out.push_back({{"n", n}, {"row", row}});
      }
      std::cout << out.dump() << "\n";
    } else {
      for (std::size_t n = 0; n <= t.n_max(); ++n) {
        std::cout << n << ":";
        const auto& row = t.row(n);
        for (std::size_t l = 0; l < row.size(); ++l) {
          if (format == "csv") {
            std::cout << (l == 0 ? "" : ",") << row[l];
          } else {
            std::cout << " " << row[l];
          }
        }
        std::cout << "\n";
      }
    }
    return kExitOk;
  }

  SequenceTable table = seq == "daehee"    ? daehee::daehee_numbers(n_max)
                        : seq == "daehee2" ? daehee::daehee2_numbers(n_max)
                                           : daehee::bernoulli_numbers(n_max);
  if (format == "json") {
    json out = json::array();
    for (std::size_t n = 0; n <= table.n_max(); ++n) {
      out.push_back({{"n", n}, {"value", table.at(n).to_string()}});
    }
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "n,value\n";
    for (std::size_t n = 0; n <= table.n_max(); ++n) std::cout << n << "," << table.at(n) << "\n";
  } else {
    for (std::size_t n = 0; n <= table.n_max(); ++n) std::cout << n << " " << table.at(n) << "\n";
  }
  return kExitOk;
}

// ---- eval ----

int run_eval(const std::string& seq, unsigned n, const std::string& x_text, bool has_alpha,
             long alpha, const std::string& format) {
  const Rational x = parse_rational_arg(x_text, "--x");
  if (seq == "bernoulli-higher" && !has_alpha) {
    throw UsageError("--alpha is required for bernoulli-higher");
  }
  if (seq != "bernoulli-higher" && has_alpha) {
    throw UsageError("--alpha only applies to bernoulli-higher");
  }
  Rational value;
  if (seq == "daehee-poly") {
    value = daehee::daehee_poly(n, x);
  } else if (seq == "daehee2-poly") {
    value = daehee::daehee2_poly(n, x);
  } else if (seq == "bernoulli-poly") {
    value = daehee::bernoulli_poly(n, x);
  } else {
    value = daehee::bernoulli_higher(n, alpha, x);
  }

  if (format == "json") {
    json out{{"seq", seq}, {"n", n}, {"x", x.to_string()}, {"value", value.to_string()}};
    if (has_alpha) out["alpha"] = alpha;
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    if (has_alpha) {
      std::cout << "seq,n,alpha,x,value\n"
                << seq << "," << n << "," << alpha << "," << x << "," << value << "\n";
    } else {
      std::cout << "seq,n,x,value\n" << seq << "," << n << "," << x << "," << value << "\n";
    }
  } else {
    std::cout << value << "\n";
  }
  return kExitOk;
}

// ---- verify ----

std::string instances_phrase(std::uint64_t count) {
  return std::to_string(count) + (count == 1 ? " instance" : " instances");
}

int run_verify(const std::string& ids_arg, unsigned n_max, const std::vector<std::string>& x_args,
               std::size_t trunc, const std::string& format) {
  std::vector<Rational> samples = parse_sample_args(x_args);

  std::vector<daehee::IdentityCheck> checks;
  if (ids_arg == "all") {
    checks = daehee::verify_all(n_max, samples, trunc);
  } else {
    std::size_t pos = 0;
    while (pos <= ids_arg.size()) {
      const std::size_t comma = ids_arg.find(',', pos);
      const std::string id =
          comma == std::string::npos ? ids_arg.substr(pos) : ids_arg.substr(pos, comma - pos);
      if (!daehee::is_identity_id(id)) {
        std::string msg = "unknown identity id '" + id + "'; valid ids: all";
        for (const std::string& known : daehee::identity_ids()) msg += " " + known;
        throw UsageError(msg);
      }
      checks.push_back(daehee::verify(id, n_max, samples, trunc));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }

  bool all_passed = true;
  for (const auto& check : checks) all_passed = all_passed && check.passed();

  if (format == "json") {
    json out = json::array();
    for (const auto& check : checks) {
      json failures = json::array();
      for (const auto& f : check.failures) {
        failures.push_back({{"instance", f.instance},
                            {"lhs", f.lhs.to_string()},
                            {"rhs", f.rhs.to_string()}});
      }
      json xs = json::array();
      for (const Rational& x : check.x_samples) xs.push_back(x.to_string());
      out.push_back({{"id", check.id},
                     {"description", check.description},
                     {"n_max", check.n_max},
                     {"x_samples", xs},
                     {"status", check.passed() ? "PASS" : "FAIL"},
                     {"instances", check.instances},
                     {"failures", failures}});
    }
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "id,status,instances,failures\n";
    for (const auto& check : checks) {
      std::cout << check.id << "," << (check.passed() ? "PASS" : "FAIL") << "," << check.instances
                << "," << check.failures.size() << "\n";
    }
  } else {
    for (const auto& check : checks) {
      if (check.passed()) {
        std::cout << check.id << " PASS (" << instances_phrase(check.instances) << ")\n";
      } else {
        std::cout << check.id << " FAIL (" << check.failures.size() << " of "
                  << instances_phrase(check.instances) << ")\n";
        for (const auto& f : check.failures) {
          std::cout << "  " << f.instance << ": " << f.lhs << " != " << f.rhs << "\n";
        }
      }
    }
  }
  return all_passed ? kExitOk : kExitIdentityFailure;
}

// ---- volkenborn ----

json integrand_json(const Integrand& f) {
  json j{{"kind", f.kind == IntegrandKind::Falling      ? "falling"
                  : f.kind == IntegrandKind::NegFalling ? "neg-falling"
                                                        : "monomial"},
         {"x", f.shift.to_string()}};
  if (f.kind == IntegrandKind::Monomial) {
    j["m"] = f.degree;
  } else {
    j["n"] = f.degree;
  }
  return j;
}

int run_volkenborn(const std::string& kind, unsigned n, const std::string& x_text, unsigned long p,
                   const std::string& levels_text, const std::string& format) {
  const Rational x = parse_rational_arg(x_text, "--x");
  const auto [level_min, level_max] = parse_levels(levels_text);

  Integrand f;
  Rational limit;
  if (kind == "first") {
    f = Integrand{IntegrandKind::Falling, n, x};
    limit = daehee::daehee_poly(n, x);
  } else if (kind == "second") {
    f = Integrand{IntegrandKind::NegFalling, n, x};
    limit = daehee::daehee2_poly(n, x);
  } else {
    f = Integrand{IntegrandKind::Monomial, n, x};
    // Stirling-2 transform of the Daehee polynomial values at x.
    const Triangle s2 = daehee::stirling2(n);
    const std::vector<Rational> dp = daehee::daehee_poly_table(n, x);
    for (std::size_t k = 0; k <= n; ++k) limit += dp[k] * s2.at(n, k);
  }

  const daehee::VolkenbornReport report =
      daehee::convergence_report(f, p, level_min, level_max, limit);

  if (format == "json") {
    json levels = json::array();
    for (const auto& level : report.levels) {
      levels.push_back({{"N", level.level},
                        {"sum", level.sum.to_string()},
                        {"valuation", level.error_valuation.to_string()}});
    }
    json out{{"p", report.p},
             {"integrand", integrand_json(report.integrand)},
             {"exact_limit", report.exact_limit.to_string()},
             {"levels", levels}};
    std::cout << out.dump() << "\n";
  } else if (format == "csv") {
    std::cout << "N,sum,valuation,limit\n";
    for (const auto& level : report.levels) {
      std::cout << level.level << "," << level.sum << "," << level.error_valuation.to_string()
                << "," << report.exact_limit << "\n";
    }
  } else {
    for (const auto& level : report.levels) {
      std::cout << "N=" << level.level << " sum=" << level.sum
                << " valuation=" << level.error_valuation.to_string()
                << " limit=" << report.exact_limit << "\n";
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact Daehee/Stirling/Bernoulli sequence tool with p-adic convergence reports"};
  app.require_subcommand(1);

  std::string format = "plain";
  const auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "plain"}))
        ->capture_default_str();
  };

  // table
  auto* table = app.add_subcommand("table", "Emit a sequence or triangle table");
  std::string table_seq;
  unsigned table_n_max = 10;
  table->add_option("seq", table_seq, "Sequence name")
      ->required()
      ->check(CLI::IsMember({"daehee", "daehee2", "bernoulli", "stirling1", "stirling2"}));
  table->add_option("--n-max", table_n_max, "Largest index")
      ->check(CLI::Range(0, 200))
      ->capture_default_str();
  add_format(table);

  // eval
  auto* eval = app.add_subcommand("eval", "Evaluate one polynomial value");
  std::string eval_seq;
  unsigned eval_n = 0;
  std::string eval_x = "0";
  long eval_alpha = 0;
  eval->add_option("seq", eval_seq, "Family to evaluate")
      ->required()
      ->check(CLI::IsMember({"daehee-poly", "daehee2-poly", "bernoulli-poly", "bernoulli-higher"}));
  eval->add_option("--n", eval_n, "Index n")->required();
  eval->add_option("--x", eval_x, "Evaluation point, as 'a/b' or integer text")
      ->capture_default_str();
  auto* alpha_opt = eval->add_option("--alpha", eval_alpha, "Order (bernoulli-higher only)");
  add_format(eval);

  // verify
  auto* verify = app.add_subcommand("verify", "Check identities to exact equality");
  std::string verify_ids = "all";
  unsigned verify_n_max = 12;
  std::vector<std::string> verify_x;
  std::size_t verify_trunc = 0;
  verify->add_option("--ids", verify_ids, "Comma-separated identity ids, or 'all'")
      ->capture_default_str();
  verify->add_option("--n-max", verify_n_max, "Largest index")->capture_default_str();
  verify->add_option("--x", verify_x, "Sample points (repeatable, comma-separable)");
  verify->add_option("--trunc", verify_trunc, "Working series order (0 = automatic)");
  add_format(verify);

  // volkenborn
  auto* volk = app.add_subcommand("volkenborn", "Partial-sum convergence report");
  std::string volk_kind;
  unsigned volk_n = 0;
  std::string volk_x = "0";
  unsigned long volk_p = 0;
  std::string volk_levels = "1..4";
  volk->add_option("kind", volk_kind, "Integrand family")
      ->required()
      ->check(CLI::IsMember({"first", "second", "monomial"}));
  volk->add_option("--n", volk_n, "Integrand degree")->required();
  volk->add_option("--x", volk_x, "Shift, as 'a/b' or integer text")->capture_default_str();
  volk->add_option("--p", volk_p, "Prime base")->required();
  volk->add_option("--levels", volk_levels, "Level range A..B")->capture_default_str();
  add_format(volk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(table)) {
      return run_table(table_seq, table_n_max, format);
    }
    if (app.got_subcommand(eval)) {
      return run_eval(eval_seq, eval_n, eval_x, alpha_opt->count() > 0, eval_alpha, format);
    }
    if (app.got_subcommand(verify)) {
      return run_verify(verify_ids, verify_n_max, verify_x, verify_trunc, format);
    }
    static constexpr unsigned long kPrimeWhitelist[] = {2, 3, 5, 7, 11, 13};
    bool p_ok = false;
    for (unsigned long q : kPrimeWhitelist) p_ok = p_ok || q == volk_p;
    if (!p_ok) throw UsageError("--p must be one of 2, 3, 5, 7, 11, 13");
    return run_volkenborn(volk_kind, volk_n, volk_x, volk_p, volk_levels, format);
  } catch (const daehee::BudgetExceededError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBudget;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
