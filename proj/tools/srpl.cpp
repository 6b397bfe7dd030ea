#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srpl/io.hpp"
#include "srpl/sweep.hpp"

namespace {

using namespace srpl;

// exit codes
constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kOracleOnly = 2;
constexpr int kUsage = 64;
constexpr int kBadInput = 65;
constexpr int kInternal = 70;
constexpr int kBudget = 75;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string field = "Q";
  std::uint32_t prime = 2;
  double budget = 0;
};

Field make_field(const Common& c) {
  if (c.field == "Q") return Field::rationals();
  if (c.field == "Fp") {
    try {
      return Field::prime(c.prime);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }
  throw UsageError("--field must be Q or Fp");
}

OracleOptions make_oracle(const Common& c) {
  OracleOptions o{make_field(c), {}};
  if (c.budget > 0) o.deadline = Deadline::after_seconds(c.budget);
  return o;
}

double default_budget() {
  const char* env = std::getenv("SRPL_BUDGET_SECONDS");
  if (!env || !*env) return 0;
  char* end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || v < 0) throw UsageError("SRPL_BUDGET_SECONDS must be a non-negative number");
  return v;
}

std::optional<int> parse_m(const std::string& s) {
  if (s == "all") return std::nullopt;
  try {
    std::size_t used = 0;
    const int m = std::stoi(s, &used);
    if (used == s.size() && m >= 1) return m;
  } catch (const std::exception&) {
  }
  throw UsageError("--m must be a positive integer or \"all\"");
}

void set_kind(Query& q, const std::string& kind) {
  if (kind == "sr-symbolic" || kind == "symbolic") {
    q.ideal_kind = IdealKind::stanley_reisner;
    q.power_kind = PowerKind::symbolic;
  } else if (kind == "sr-ordinary" || kind == "ordinary") {
    q.ideal_kind = IdealKind::stanley_reisner;
    q.power_kind = PowerKind::ordinary;
  } else if (kind == "facet") {
    q.ideal_kind = IdealKind::facet;
    q.power_kind = PowerKind::symbolic;
  } else if (kind == "cover") {
    q.ideal_kind = IdealKind::cover;
    q.power_kind = PowerKind::symbolic;
  } else {
    throw UsageError("unknown --kind \"" + kind + "\"");
  }
}

Property parse_property(const std::string& s) {
  for (Property p : {Property::cm, Property::s2, Property::gcm, Property::buchsbaum, Property::quasi_buchsbaum})
    if (s == to_string(p)) return p;
  throw UsageError("unknown --property \"" + s + "\"");
}

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

int cmd_analyze(const std::string& input, const std::string& m_text, const std::string& kind,
                const std::string& property, bool oracle, const Common& common) {
  Query q;
  set_kind(q, kind);
  q.property = parse_property(property);
  q.m = parse_m(m_text);
  const OracleOptions opt = make_oracle(common);
  q.complex = input_complex(parse_input(input));
  ClassificationReport r = classify(q);
  const bool oracle_applies = q.property == Property::cm || q.property == Property::s2 || q.property == Property::gcm;
  if (oracle) {
    if (!q.m) throw UsageError("--oracle needs a concrete --m");
    if (oracle_applies) run_oracle(r, q, opt);
    else r.notes.push_back("no algebraic oracle for this property; --oracle ignored");
  }
  print(to_json(r));
  if (r.oracle.ran) {
    const bool o = *r.oracle.result;
    if (r.verdict == Verdict::oracle_only) return o ? kHolds : kFails;
    const bool agree = (r.verdict == Verdict::holds) == o;
    if (!agree) std::cerr << "disagreement between classifier and oracle\n";
    return agree && o ? kHolds : kFails;
  }
  switch (r.verdict) {
    case Verdict::holds: return kHolds;
    case Verdict::fails: return kFails;
    case Verdict::oracle_only: return kOracleOnly;
  }
  return kInternal;
}

int cmd_power(const std::string& input, int m, const std::string& kind) {
  const Input in = parse_input(input);
  if (kind == "symbolic" || kind == "ordinary" || kind == "sr-symbolic" || kind == "sr-ordinary") {
    const PowerKind pk = (kind == "ordinary" || kind == "sr-ordinary") ? PowerKind::ordinary : PowerKind::symbolic;
    print(to_json(power_of_kind(input_ideal(in), m, pk)));
    return kHolds;
  }
  Query q;
  set_kind(q, kind);
  q.complex = input_complex(in);
  print(to_json(query_ideal(q, m)));
  return kHolds;
}

int cmd_depth(const std::string& input, const Common& common) {
  const OracleOptions opt = make_oracle(common);
  const MonomialIdeal I = input_ideal(parse_input(input));
  print(to_json(depth_dim(I, opt), opt.field));
  return kHolds;
}

int cmd_sweep(SweepOptions opt, const std::string& dims, const std::vector<std::string>& checks,
              const Common& common, bool list) {
  if (list) {
    for (const auto& c : sweep_checks()) std::cout << c.id << '\n';
    return kHolds;
  }
  try {
    opt.dims = DimFilter::parse(dims);
    for (const auto& id : checks) find_check(id);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  opt.checks = checks;
  opt.field = make_field(common);
  opt.budget_seconds = common.budget;
  const SweepResult r = run_sweep(opt);
  std::cout << to_csv(r);
  const std::size_t bad = r.disagreements();
  std::cerr << "complexes " << r.completed << "/" << r.total << ", rows " << r.rows.size() << ", disagreements "
            << bad << '\n';
  if (r.resume_token) {
    std::cerr << "budget exhausted; resume with --resume " << *r.resume_token << '\n';
    return kBudget;
  }
  return bad == 0 ? kHolds : kFails;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cohen-Macaulay type properties of powers of Stanley-Reisner, facet and cover ideals"};
  app.require_subcommand(1);
  Common common;
  try {
    common.budget = default_budget();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  auto add_common = [&](CLI::App* sub, bool with_field) {
    if (with_field) {
      sub->add_option("--field", common.field, "coefficient field: Q or Fp")->capture_default_str();
      sub->add_option("--prime", common.prime, "characteristic for --field Fp")->capture_default_str();
    }
    sub->add_option("--budget-seconds", common.budget, "wall-clock budget (default $SRPL_BUDGET_SECONDS)");
  };

  std::string input, m_text = "3", kind = "sr-symbolic", property = "cm";
  bool oracle = false;
  auto* analyze = app.add_subcommand("analyze", "classify a power of an ideal attached to a complex");
  analyze->add_option("input", input, "complex JSON, JSON file or named example")->required();
  analyze->add_option("--m", m_text, "power, or \"all\"")->capture_default_str();
  analyze->add_option("--kind", kind, "sr-symbolic, sr-ordinary, facet or cover")->capture_default_str();
  analyze->add_option("--property", property, "cm, s2, gcm, buchsbaum or quasi-buchsbaum")->capture_default_str();
  analyze->add_flag("--oracle", oracle, "also run the local cohomology oracle");
  add_common(analyze, true);

  int power_m = 2;
  std::string power_kind = "symbolic";
  auto* power = app.add_subcommand("power", "print a power of the ideal as JSON");
  power->add_option("input", input, "complex or ideal JSON, JSON file or named example")->required();
  power->add_option("--m", power_m, "power")->capture_default_str()->check(CLI::Range(1, kMaxPower));
  power->add_option("--kind", power_kind, "symbolic, ordinary, facet or cover")->capture_default_str();

  auto* depth = app.add_subcommand("depth", "depth and dimension of S/I");
  depth->add_option("input", input, "complex or ideal JSON, JSON file or named example")->required();
  add_common(depth, true);

  SweepOptions sweep_opt;
  std::string dims = "any";
  std::vector<std::string> checks;
  bool list = false;
  auto* sweep = app.add_subcommand("sweep", "compare checks over all small complexes; CSV on stdout");
  sweep->add_option("--n", sweep_opt.n_max, "largest vertex count (7 adds a random sample)")
      ->capture_default_str()
      ->check(CLI::Range(1, kMaxSweepVertices));
  sweep->add_option("--dim", dims, "dimension filter: any, d, >=d or <=d")->capture_default_str();
  sweep->add_option("--check", checks, "check id (repeatable; default all)")->delimiter(',');
  sweep->add_option("--parallel", sweep_opt.parallel, "worker threads")->capture_default_str();
  sweep->add_option("--resume", sweep_opt.resume_from, "resume token from a budget-limited run");
  sweep->add_option("--seed", sweep_opt.seed, "seed of the 7-vertex sample")->capture_default_str();
  sweep->add_flag("--list-checks", list, "print the check ids and exit");
  add_common(sweep, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(input, m_text, kind, property, oracle, common);
    if (*power) return cmd_power(input, power_m, power_kind);
    if (*depth) return cmd_depth(input, common);
    if (*sweep) return cmd_sweep(sweep_opt, dims, checks, common, list);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kBadInput;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget: " << e.what() << '\n';
    return kBudget;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::out_of_range& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
