// Copyright 2026 The pauligeo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pauligeo/cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "pauligeo/cli/documents.hpp"
#include "pauligeo/cli/suites.hpp"
#include "pauligeo/error.hpp"
#include "pauligeo/family.hpp"
#include "pauligeo/lattice_geodesic.hpp"

namespace pauligeo::cli {

using nlohmann::json;

namespace {

/// Flag combination the solvers do not support.
class Unsupported : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::TooLarge:
      return kExitTooLarge;
    case ErrorKind::InvalidSpec:
      return kExitUnsupported;
    default:
      return kExitInvariantViolation;
  }
}

void emit(const std::string& text, const std::string& path,
          std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
}

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

unsigned default_workers() {
  return std::max(1u, std::thread::hardware_concurrency());
}

MetricSpec metric_for(const std::string& metric, std::optional<double> q) {
  if (metric == "f1") {
    throw Unsupported(
        "no exact F1 minimiser is available; minimise fq or f2 and read "
        "f1_upper_bounds from the result document");
  }
  if (metric == "fq") {
    if (!q) throw Unsupported("--metric fq requires --q");
    return MetricSpec::fq(*q);
  }
  if (q) throw Unsupported("--q is only meaningful with --metric fq");
  return MetricSpec::f2();
}

GeodesicResult solve(const PhaseVector& h, const MetricSpec& spec,
                     const std::string& solver, unsigned workers) {
  if (solver == "rounding") {
    if (spec.kind != MetricKind::F2 && spec.q != 1.0) {
      throw Unsupported("the rounding solver minimises f2 (or fq at q = 1)");
    }
    GeodesicResult result = minimize_f2_closed_form(h);
    result.length = metric_value(result.coeffs, spec);
    return result;
  }
  if (solver == "brute") return minimize_brute(h, spec);
  return minimize_bnb(h, spec, BnbOptions{workers});
}

std::vector<double> parse_q_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    const double q = std::stod(item, &used);
    if (used != item.size()) throw CLI::ConversionError(item, "--q-list");
    out.push_back(q);
  }
  if (out.empty()) throw CLI::ConversionError(text, "--q-list");
  return out;
}

// ---- expand ---------------------------------------------------------------

struct ExpandArgs {
  std::string input;
  std::string output;
};

int cmd_expand(const ExpandArgs& a, std::ostream& out) {
  const PhaseVector h = read_input_document(a.input).to_phases();
  emit(coefficient_csv(expand(h)), a.output, out);
  return kExitOk;
}

// ---- minimize -------------------------------------------------------------

struct MinimizeArgs {
  std::string input;
  std::string metric = "f2";
  std::optional<double> q;
  std::string solver = "bnb";
  unsigned workers = default_workers();
  std::string output;
};

int cmd_minimize(const MinimizeArgs& a, std::ostream& out) {
  const MetricSpec spec = metric_for(a.metric, a.q);
  spec.validate();
  const PhaseVector h = read_input_document(a.input).to_phases();
  const auto start = std::chrono::steady_clock::now();
  const GeodesicResult result = solve(h, spec, a.solver, a.workers);
  const json doc = make_result_document(h, spec, result, elapsed_ms(start));
  emit(doc.dump(2) + "\n", a.output, out);
  return kExitOk;
}

// ---- family ---------------------------------------------------------------

struct FamilyArgs {
  unsigned n = 3;
  std::uint32_t sigma = default_sigma().bits;
  double epsilon = 0.0;
  std::string q_list = "1,8,64,512";
  unsigned workers = default_workers();
  std::string output;
};

int cmd_family(const FamilyArgs& a, std::ostream& out) {
  const FamilyInstance instance{a.n, PauliMask{a.sigma}, a.epsilon};
  instance.validate();
  if (a.n > kBnbMaxQubits) {
    throw Error(ErrorKind::BadDimension,
                "family verification needs n <= " +
                    std::to_string(kBnbMaxQubits));
  }
  const std::vector<double> q_list = parse_q_list(a.q_list);
  const PhaseVector phases = a.epsilon > 0.0
                                 ? perturb(instance)
                                 : make_h0(instance.n, instance.sigma);

  json doc;
  doc["instance"] = {{"n", a.n},
                     {"sigma", a.sigma},
                     {"sigma_weight", pauli_weight(instance.sigma)},
                     {"epsilon", a.epsilon},
                     {"phases", std::vector<double>(phases.values().begin(),
                                                    phases.values().end())},
                     {"distinct_eigenphases", phases_pairwise_distinct(
                                                  phases.canonicalized())}};

  const Lemma2Report lemma = verify_lemma2(instance.n, instance.sigma, q_list,
                                           FamilySolver::Auto, a.workers);
  json rows = json::array();
  for (const auto& row : lemma.rows) {
    rows.push_back({{"q", row.q},
                    {"minimum", row.minimum},
                    {"bound", row.bound},
                    {"length_over_q", row.minimum / row.q},
                    {"solver", std::string(to_string(row.solver))},
                    {"optimal", row.optimal},
                    {"pass", row.passed}});
  }
  doc["lemma2"] = {{"rows", rows}, {"pass", lemma.passed}};
  bool passed = lemma.passed;

  const unsigned n_list[] = {instance.n};
  const ScalingRow scaling =
      exponential_scaling_table(n_list, default_q_rule, a.workers).front();
  doc["scaling"] = {{"n", scaling.n},
                    {"N", scaling.dim},
                    {"q", scaling.q},
                    {"length", scaling.length},
                    {"expected", scaling.expected},
                    {"pass", scaling.passed}};
  passed = passed && scaling.passed;

  if (a.epsilon > 0.0) {
    json perturbation = json::array();
    for (double q : q_list) {
      const PerturbationRow row = perturbation_check(instance, q, a.workers);
      perturbation.push_back({{"q", row.q},
                              {"unperturbed", row.unperturbed},
                              {"perturbed", row.perturbed},
                              {"deviation", row.deviation},
                              {"stability_bound", row.stability_bound},
                              {"distinct", row.distinct},
                              {"pass", row.passed}});
      passed = passed && row.passed && row.distinct;
    }
    doc["perturbation"] = std::move(perturbation);
  }
  doc["pass"] = passed;
  emit(doc.dump(2) + "\n", a.output, out);
  return passed ? kExitOk : kExitPropertyFailure;
}

// ---- verify ---------------------------------------------------------------

struct VerifyArgs {
  SuiteOptions options;
  std::string output;
};

int cmd_verify(const VerifyArgs& a, std::ostream& out) {
  const SuiteReport report = run_suite(a.options);
  emit(report.to_json().dump(2) + "\n", a.output, out);
  return report.passed() ? kExitOk : kExitPropertyFailure;
}

// ---- bench ----------------------------------------------------------------

struct BenchArgs {
  std::string solvers = "bnb";
  unsigned n = 3;
  double q = 1.0;
  int repeat = 3;
  std::string instance = "family";
  std::uint64_t seed = 42;
  unsigned workers = 1;
  std::string output;
};

int cmd_bench(const BenchArgs& a, std::ostream& out) {
  PhaseVector h = PhaseVector::zeros(1);
  if (a.instance == "family") {
    h = make_h0(a.n, default_sigma());
  } else {
    std::mt19937_64 rng(a.seed);
    std::uniform_real_distribution<double> angle(0.0, kTwoPi);
    std::vector<double> phases(dimension(a.n));
    for (double& v : phases) v = angle(rng);
    h = PhaseVector(a.n, std::move(phases));
  }
  const MetricSpec spec = MetricSpec::fq(a.q);
  spec.validate();

  std::vector<std::string> solvers;
  std::stringstream list(a.solvers);
  for (std::string s; std::getline(list, s, ',');) {
    if (s != "rounding" && s != "brute" && s != "bnb") {
      throw Unsupported("unknown solver '" + s + "'");
    }
    solvers.push_back(s);
  }

  // Rows are buffered so a failing solver leaves no partial table.
  std::ostringstream csv;
  csv << "solver,n,q,run,wall_ms,length\n";
  for (const auto& solver : solvers) {
    for (int run = 0; run < a.repeat; ++run) {
      const auto start = std::chrono::steady_clock::now();
      const GeodesicResult result = solve(h, spec, solver, a.workers);
      const double ms = elapsed_ms(start);
      csv << solver << ',' << a.n << ',' << format_real(a.q) << ',' << run
          << ',' << format_real(ms) << ',' << format_real(result.length)
          << '\n';
    }
  }
  emit(csv.str(), a.output, out);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Minimal constant Pauli geodesics of diagonal unitaries"};
  app.name("pauligeo");
  app.require_subcommand(1);

  ExpandArgs expand_args;
  auto* expand_cmd =
      app.add_subcommand("expand", "Pauli {I,Z}^n coefficients of H as CSV");
  expand_cmd->add_option("input", expand_args.input, "InputDocument (JSON)")
      ->required();
  expand_cmd->add_option("-o,--output", expand_args.output, "Output path");

  MinimizeArgs min_args;
  auto* min_cmd = app.add_subcommand(
      "minimize", "Shortest constant geodesic over the 2pi lattice");
  min_cmd->add_option("input", min_args.input, "InputDocument (JSON)")
      ->required();
  min_cmd->add_option("--metric", min_args.metric)
      ->check(CLI::IsMember({"fq", "f2", "f1"}));
  min_cmd->add_option("--q", min_args.q, "Penalty on weight >= 3 strings");
  min_cmd->add_option("--solver", min_args.solver)
      ->check(CLI::IsMember({"rounding", "brute", "bnb"}));
  min_cmd->add_option("--workers", min_args.workers)
      ->check(CLI::PositiveNumber);
  min_cmd->add_option("-o,--output", min_args.output, "Output path");

  FamilyArgs fam_args;
  auto* fam_cmd = app.add_subcommand(
      "family", "Explicit exponential-length family and its checks");
  fam_cmd->add_option("--n", fam_args.n)->required();
  fam_cmd->add_option("--sigma", fam_args.sigma, "Z-string mask, weight >= 3");
  fam_cmd->add_option("--epsilon", fam_args.epsilon);
  fam_cmd->add_option("--q-list", fam_args.q_list, "Comma-separated q values");
  fam_cmd->add_option("--workers", fam_args.workers)
      ->check(CLI::PositiveNumber);
  fam_cmd->add_option("-o,--output", fam_args.output, "Output path");

  VerifyArgs ver_args;
  auto* ver_cmd =
      app.add_subcommand("verify", "Seeded property suites with a JSON report");
  ver_cmd->add_option("--suite", ver_args.options.suite)
      ->required()
      ->check(CLI::IsMember(suite_names()));
  ver_cmd->add_option("--trials", ver_args.options.trials);
  ver_cmd->add_option("--seed", ver_args.options.seed);
  ver_cmd->add_option("--n-max", ver_args.options.n_max);
  ver_cmd->add_option("--workers", ver_args.options.workers)
      ->check(CLI::PositiveNumber);
  ver_cmd->add_option("-o,--output", ver_args.output, "Output path");

  BenchArgs bench_args;
  auto* bench_cmd = app.add_subcommand("bench", "Solver timings as CSV");
  bench_cmd->add_option("--solver", bench_args.solvers,
                        "Comma-separated: rounding, brute, bnb");
  bench_cmd->add_option("--n", bench_args.n)->required();
  bench_cmd->add_option("--q", bench_args.q);
  bench_cmd->add_option("--repeat", bench_args.repeat)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("--instance", bench_args.instance)
      ->check(CLI::IsMember({"family", "random"}));
  bench_cmd->add_option("--seed", bench_args.seed);
  bench_cmd->add_option("--workers", bench_args.workers)
      ->check(CLI::PositiveNumber);
  bench_cmd->add_option("-o,--output", bench_args.output, "Output path");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::Error& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitParseError;
  }

  try {
    if (*expand_cmd) return cmd_expand(expand_args, out);
    if (*min_cmd) return cmd_minimize(min_args, out);
    if (*fam_cmd) return cmd_family(fam_args, out);
    if (*ver_cmd) return cmd_verify(ver_args, out);
    if (*bench_cmd) return cmd_bench(bench_args, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const CLI::Error& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  } catch (const Unsupported& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitUnsupported;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e.kind());
  } catch (const std::invalid_argument& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParseError;
  }
  return kExitParseError;
}

}  // namespace pauligeo::cli
