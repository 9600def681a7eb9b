#include <CLI11.hpp>

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "opucmat/asymptotics.hpp"
#include "opucmat/spec_io.hpp"
#include "opucmat/verify.hpp"

using namespace opucmat;

namespace {

std::string fmt(double x) {
  char b[40];
  std::snprintf(b, sizeof b, "%.17g", x);
  return b;
}

struct Inputs {
  std::string measure;
  std::uint64_t seed = 0;
  bool seeded = false;
  std::size_t nodes = default_nodes;
};

struct Resolved {
  CircleMeasure m;
  SchurSequence head;
  bool head_known = false;  // exact head: schur-kind spec or synthesized seed
};

Resolved resolve(const Inputs& in) {
  if (!in.measure.empty()) {
    MeasureSpec spec = parse_spec(in.measure);
    CircleMeasure m = measure_from_spec(spec, in.nodes);
    if (spec.kind == "schur") return {std::move(m), SchurSequence(spec.schur, spec.eps0), true};
    return {std::move(m), SchurSequence(), false};
  }
  if (in.seeded) {
    SchurSequence s(synthesized_head(in.seed));
    return {bernstein_szego_measure(s, in.nodes), std::move(s), true};
  }
  throw std::invalid_argument("either --measure or --seed is required");
}

// Head for construction pipelines; indices through max_index must be valid.
SchurSequence pipeline_head(const Resolved& r, std::size_t max_index) {
  if (r.head_known) return r.head;
  return schur_from_measure(r.m, max_index);
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::invalid_argument("cannot write file '" + path + "'");
  f << text;
}

int run_gen(const Inputs& in, std::size_t n, const std::string& out) {
  Resolved r = resolve(in);
  if (!r.head_known) {
    PositivityReport pos = positivity_check(associated_matrix_measure(r.m));
    if (!pos.ok) {
      std::string where = pos.weight_violations.empty()
                              ? "an atom"
                              : "x = " + fmt(pos.weight_violations.front().x);
      throw std::domain_error("measure fails positivity near " + where);
    }
  }
  std::string text = to_json(generate(pipeline_head(r, 2 * n + 3), n));
  if (out.empty())
    std::fputs(text.c_str(), stdout);
  else
    write_text(out, text);
  return 0;
}

int run_verify(const Inputs& in, std::size_t n, double tol) {
  Resolved r = resolve(in);
  RunReport rep =
      r.head_known ? verify_measure(r.m, r.head, n, tol) : verify_measure(r.m, n, tol);
  std::printf("%-26s %-26s %-12s %s\n", "check", "residual", "tolerance", "status");
  for (const CheckResult& c : rep.checks)
    std::printf("%-26s %-26s %-12s %s\n", c.name.c_str(), fmt(c.residual).c_str(),
                fmt(c.tol).c_str(), c.pass ? "pass" : "fail");
  std::printf("result: %s\n", rep.pass ? "PASS" : "FAIL");
  std::fprintf(stderr, "elapsed: %.3f s\n", rep.seconds);
  return rep.pass ? 0 : 1;
}

int run_asymptotics(const Inputs& in, double x, std::size_t n_max, const std::string& out) {
  Resolved r = resolve(in);
  std::vector<ConvergenceRow> rows = convergence_report(r.m, pipeline_head(r, 2 * n_max + 3), x, n_max);
  Mat2 limit = orthonormal_limit(r.m, x);

  std::string csv = "n,err,rate\n";
  for (const ConvergenceRow& row : rows) {
    csv += std::to_string(row.n) + ',' + fmt(row.err) + ',';
    if (!std::isnan(row.rate)) csv += fmt(row.rate);
    csv += '\n';
  }

  std::printf("limit: %s %s %s %s\n", fmt(limit(0, 0)).c_str(), fmt(limit(0, 1)).c_str(),
              fmt(limit(1, 0)).c_str(), fmt(limit(1, 1)).c_str());
  if (out.empty()) {
    std::fputs(csv.c_str(), stdout);
  } else {
    write_text(out, csv);
    std::printf("wrote %s (%zu rows)\n", out.c_str(), rows.size());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Matrix orthogonal polynomials on [-1,1] built from a circle measure"};
  app.require_subcommand(1);

  Inputs in;
  std::size_t n = 8;
  std::size_t n_max = 12;
  double tol = 1e-8;
  double x = 0.0;
  std::string out;

  auto add_common = [&in](CLI::App* cmd) {
    cmd->add_option("--measure", in.measure, "measure spec JSON file");
    cmd->add_option("--seed", in.seed,
                    "synthesize a pseudo-random Schur head (used when --measure is absent)");
    cmd->add_option("--nodes", in.nodes, "quadrature nodes on the circle grid")
        ->default_val(default_nodes)
        ->check(CLI::PositiveNumber);
  };

  CLI::App* gen = app.add_subcommand(
      "gen", "generate circle polynomials and the three matrix families as JSON");
  add_common(gen);
  gen->add_option("--n", n, "highest index to generate")->default_val(8);
  gen->add_option("--out", out, "output file (stdout when absent)");

  CLI::App* verify = app.add_subcommand("verify", "run the invariant suite and print the table");
  add_common(verify);
  verify->add_option("--n", n, "highest index to check")->default_val(8);
  verify->add_option("--tol", tol, "relative tolerance for every check")
      ->default_val(1e-8)
      ->check(CLI::PositiveNumber);

  CLI::App* asym = app.add_subcommand(
      "asymptotics", "tabulate orthonormal-family convergence toward the Szego limit");
  add_common(asym);
  asym->add_option("--x", x, "evaluation point, strictly outside [-1,1]")->required();
  asym->add_option("--n-max", n_max, "highest index to tabulate")->default_val(12);
  asym->add_option("--out", out, "CSV output file (stdout when absent)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  in.seeded = app.get_subcommands().front()->count("--seed") > 0;

  try {
    if (gen->parsed()) return run_gen(in, n, out);
    if (verify->parsed()) return run_verify(in, n, tol);
    return run_asymptotics(in, x, n_max, out);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
