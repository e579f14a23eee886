// Command-line front end: construct interlaced polynomial lattice rules,
// emit point sets, and run the convergence experiments as CSV.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qmcipl/cbc.hpp"
#include "qmcipl/criterion.hpp"
#include "qmcipl/lattice.hpp"
#include "qmcipl/quadrature.hpp"
#include "qmcipl/rulefile.hpp"
#include "qmcipl/sobol.hpp"
#include "qmcipl/util.hpp"

namespace {

using namespace qmcipl;

constexpr int kMaxDoubleDigits = 52;  // binary64-exact digit budget for b = 2

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

int parse_interlacing(const std::string& text) {
  if (text == "auto") return 0;
  try {
    std::size_t pos = 0;
    int v = std::stoi(text, &pos);
    if (pos != text.size() || v < 1) throw std::invalid_argument("");
    return v;
  } catch (...) {
    throw CLI::ValidationError("--d", "expects 'auto' or an integer >= 1");
  }
}

CbcResult run_construction(uint32_t b, int m, int s, int d,
                           const WeightProfile& weights, const std::string& mode) {
  if (mode == "naive") return cbc_construct_naive(b, m, s, d, weights);
  return cbc_construct_fast(b, m, s, d, weights);
}

void enforce_digit_budget(uint32_t b, int d, int m, bool allow_extended,
                          const std::string& what) {
  if (allow_extended) return;
  if (b == 2 && d * m > kMaxDoubleDigits)
    throw SizeGuardError(what + ": d*m = " + std::to_string(d * m) +
                         " exceeds the binary64-exact budget of 52 digits "
                         "(pass --allow-extended to override)");
}

std::ostream& open_sink(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  return file;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
  uint32_t b = 2;
  int m = 0;
  int s = 0;
  double r = 1.0;
  std::string d_text = "auto";
  std::string mode = "fast";
  std::string out;
  bool allow_extended = false;
};

int cmd_construct(const ConstructArgs& args) {
  int d = parse_interlacing(args.d_text);
  if (d == 0) d = choose_interlacing(args.m, args.r);
  enforce_digit_budget(args.b, d, args.m, args.allow_extended, "construct");

  WeightProfile weights = WeightProfile::power_decay(args.b, args.r, args.s);
  CbcResult result = run_construction(args.b, args.m, args.s, d, weights, args.mode);
  RuleFile rule = make_rule_file(result, args.mode);

  std::cout << "p = " << result.spec.p.to_string()
            << " (enc " << result.spec.p.encoding() << ")\n";
  std::cout << "q =";
  for (const auto& qj : result.spec.q) std::cout << " " << qj.encoding();
  std::cout << "\nd = " << d << "  N = " << result.spec.point_count() << "\n";
  std::cout << "B_u = " << fmt(rule.final_b_u) << "\n";
  std::cout << "wce_bound = " << fmt(rule.final_wce_bound) << "\n";
  if (!args.out.empty()) {
    save_rule(rule, args.out);
    std::cout << "rule written to " << args.out << "\n";
  }
  return 0;
}

// ------------------------------------------------------------------- points

int cmd_points(const std::string& rule_path, const std::string& out_path,
               bool allow_extended) {
  RuleFile rule = load_rule(rule_path);
  enforce_digit_budget(rule.spec.b, rule.spec.d, rule.spec.m, allow_extended,
                       "points");
  PointSet ps = generate_point_set(rule.spec);
  std::ofstream file;
  write_point_set(open_sink(file, out_path), ps);
  return 0;
}

// --------------------------------------------------------------- experiment

struct ExperimentArgs {
  std::string name;
  uint32_t b = 2;
  std::vector<double> r_list;
  std::vector<double> w_list;
  std::vector<int> s_list;
  int m_min = 4;
  int m_max = 15;
  std::string mode = "fast";
  std::string out;
  bool allow_extended = false;
};

int digit_budget_limit(uint32_t b, double r, int m_max) {
  int limit = 0;
  for (int m = 1; m <= m_max; ++m) {
    if (b == 2 && choose_interlacing(m, r) * m > kMaxDoubleDigits) break;
    limit = m;
  }
  return limit;
}

struct Row {
  std::string experiment;
  uint32_t b;
  double param;
  int s;
  int m;
  std::optional<int> d;
  uint64_t n;
  std::optional<double> b_u;
  std::optional<double> wce;
  std::optional<double> abs_error;
  std::string baseline;

  std::string csv() const {
    std::ostringstream os;
    os << experiment << ',' << b << ',' << fmt(param) << ',' << s << ',' << m
       << ',' << (d ? std::to_string(*d) : "") << ',' << n << ','
       << (b_u ? fmt(*b_u) : "") << ',' << (wce ? fmt(*wce) : "") << ','
       << (abs_error ? fmt(*abs_error) : "") << ',' << baseline;
    return os.str();
  }
};

int cmd_experiment(const ExperimentArgs& args) {
  const bool is_b1 = args.name == "b1";
  const bool is_f1 = args.name == "f1";
  if (!is_b1 && !is_f1 && args.name != "f2" && args.name != "f3")
    throw CLI::ValidationError("name", "expects b1, f1, f2 or f3");

  std::vector<double> r_list = args.r_list;
  if (r_list.empty()) r_list = (is_b1 || is_f1) ? std::vector<double>{0.5, 1.0, 2.0}
                                                : std::vector<double>{1.0};
  std::vector<double> w_list = args.w_list.empty() ? std::vector<double>{0.5, 0.1}
                                                   : args.w_list;
  std::vector<int> s_list = args.s_list.empty() ? std::vector<int>{1, 2, 4, 8, 16}
                                                : args.s_list;

  struct Job {
    double r;
    int s;
    int m;
    std::vector<Row> rows;
  };
  std::vector<Job> jobs;
  for (double r : r_list) {
    int m_hi = args.allow_extended ? args.m_max
                                   : digit_budget_limit(args.b, r, args.m_max);
    for (int s : s_list) {
      for (int m = args.m_min; m <= m_hi; ++m) jobs.push_back(Job{r, s, m, {}});
    }
  }

  parallel_for(jobs.size(), [&](std::size_t idx) {
    Job& job = jobs[idx];
    int d = choose_interlacing(job.m, job.r);
    WeightProfile weights = WeightProfile::power_decay(args.b, job.r, job.s);
    CbcResult result = run_construction(args.b, job.m, job.s, d, weights, args.mode);
    RuleFile rule = make_rule_file(result, args.mode);

    Row base;
    base.experiment = args.name;
    base.b = args.b;
    base.param = job.r;
    base.s = job.s;
    base.m = job.m;
    base.d = d;
    base.n = result.spec.point_count();
    base.b_u = rule.final_b_u;
    base.wce = rule.final_wce_bound;
    base.baseline = "ipl";

    if (is_b1) {
      job.rows.push_back(base);
      return;
    }
    std::vector<double> pts = generate_point_set(result.spec).to_doubles();
    if (is_f1) {
      Integrand f = make_f1(job.s, job.r);
      base.abs_error = std::abs(integrate(f, pts) - f.exact);
      job.rows.push_back(base);
      return;
    }
    std::vector<double> sobol = sobol_points(job.s, job.m);
    for (double w : w_list) {
      Integrand f = make_integrand(args.name, job.s, w);
      Row ipl = base;
      ipl.param = w;
      ipl.abs_error = std::abs(integrate(f, pts) - f.exact);
      job.rows.push_back(ipl);
      Row sob;
      sob.experiment = args.name;
      sob.b = args.b;
      sob.param = w;
      sob.s = job.s;
      sob.m = job.m;
      sob.n = base.n;
      sob.abs_error = std::abs(integrate(f, sobol) - f.exact);
      sob.baseline = "sobol";
      job.rows.push_back(sob);
    }
  });

  std::ofstream file;
  std::ostream& os = open_sink(file, args.out);
  os << "experiment,b,param,s,m,d,N,b_u,wce_bound,abs_error,baseline\n";
  if (is_b1 || is_f1) {
    for (const Job& job : jobs)
      for (const Row& row : job.rows) os << row.csv() << "\n";
  } else {
    // Group f2/f3 output by w, then (s, m), with the Sobol' row after ours.
    for (double w : w_list) {
      for (const Job& job : jobs) {
        for (const Row& row : job.rows)
          if (row.param == w) os << row.csv() << "\n";
      }
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Interlaced polynomial lattice rules: CBC construction, point "
               "generation, and convergence experiments"};
  app.require_subcommand(1);

  ConstructArgs cargs;
  CLI::App* construct = app.add_subcommand(
      "construct", "Run the component-by-component search and print/report the rule");
  construct->add_option("--b", cargs.b, "prime base")->default_val(2);
  construct->add_option("--m", cargs.m, "log_b of the point count")->required();
  construct->add_option("--s", cargs.s, "dimension")->required();
  construct->add_option("--r", cargs.r, "weight decay exponent, u_j = 2^{-j^r}")
      ->default_val(1.0);
  construct->add_option("--d", cargs.d_text, "interlacing factor or 'auto'")
      ->default_val("auto");
  construct->add_option("--mode", cargs.mode, "construction mode")
      ->check(CLI::IsMember({"naive", "fast"}))
      ->default_val("fast");
  construct->add_option("--out", cargs.out, "write the rule as JSON");
  construct->add_flag("--allow-extended", cargs.allow_extended,
                      "permit d*m > 52 binary digits");

  std::string rule_path, points_out;
  bool points_extended = false;
  CLI::App* points = app.add_subcommand("points", "Generate the rule's point set");
  points->add_option("rule", rule_path, "rule JSON file")->required();
  points->add_option("--out", points_out, "output path (stdout otherwise)");
  points->add_flag("--allow-extended", points_extended,
                   "permit d*m > 52 binary digits");

  ExperimentArgs eargs;
  CLI::App* experiment =
      app.add_subcommand("experiment", "Write figure-ready convergence CSV");
  experiment->add_option("name", eargs.name, "b1, f1, f2 or f3")->required();
  experiment->add_option("--b", eargs.b, "prime base")->default_val(2);
  experiment->add_option("--r", eargs.r_list, "weight decay grid");
  experiment->add_option("--w", eargs.w_list, "f2/f3 weight grid");
  experiment->add_option("--s", eargs.s_list, "dimension grid");
  experiment->add_option("--m-min", eargs.m_min, "smallest m")->default_val(4);
  experiment->add_option("--m-max", eargs.m_max, "largest m")->default_val(15);
  experiment->add_option("--mode", eargs.mode, "construction mode")
      ->check(CLI::IsMember({"naive", "fast"}))
      ->default_val("fast");
  experiment->add_option("--out", eargs.out, "CSV path (stdout otherwise)");
  experiment->add_flag("--allow-extended", eargs.allow_extended,
                       "lift the d*m <= 52 grid cap");

  try {
    app.parse(argc, argv);
    if (construct->parsed()) return cmd_construct(cargs);
    if (points->parsed()) return cmd_points(rule_path, points_out, points_extended);
    return cmd_experiment(eargs);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const SizeGuardError& e) {
    std::cerr << "size guard: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
