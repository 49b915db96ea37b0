// Command-line front end: loads samples, matrices and polynomials, evaluates
// the bound suites, and drives verification and fuzzing.
//
// Exit codes: 0 success, 1 violated bound or fuzz counterexample, 2 bad input.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "momentbounds/io.hpp"
#include "momentbounds/momentbounds.hpp"

namespace mb = momentbounds;
using mb::io::json;

namespace {

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

std::string fmt6_opt(double v, bool present) {
  return present ? fmt6(v) : std::string("n/a");
}

// --------------------------------------------------------------------------
// input loading

mb::Sample load_sample(const std::string& path, bool renormalize) {
  if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
    std::ifstream in(path);
    if (!in) throw mb::ParseError("cannot open file: " + path);
    return mb::io::sample_from_csv(in, renormalize);
  }
  return mb::io::sample_from_json(mb::io::load_json_file(path), renormalize);
}

mb::SquareMatrix load_matrix(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    return mb::io::matrix_from_json(mb::io::load_json_file(spec));
  }
  if (!spec.empty() && spec.front() == '{') {
    try {
      return mb::io::matrix_from_json(json::parse(spec));
    } catch (const nlohmann::json::exception& e) {
      throw mb::ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  return mb::io::matrix_from_inline(spec);
}

mb::Polynomial load_poly(const std::string& spec) {
  if (std::filesystem::exists(spec)) {
    return mb::io::polynomial_from_json(mb::io::load_json_file(spec));
  }
  if (!spec.empty() && spec.front() == '{') {
    try {
      return mb::io::polynomial_from_json(json::parse(spec));
    } catch (const nlohmann::json::exception& e) {
      throw mb::ParseError(std::string("bad inline JSON: ") + e.what());
    }
  }
  return mb::io::polynomial_from_inline(spec);
}

// --------------------------------------------------------------------------
// moments

int cmd_moments(const std::string& sample_path, bool renormalize, int order,
                bool as_json) {
  const mb::Sample s = load_sample(sample_path, renormalize);
  const mb::MomentSet m = mb::compute_moments(s, order);
  std::optional<mb::ShapeStats> shape;
  if (m.central(2) > 0.0) shape = mb::shape_stats(m, s.interval());

  if (as_json) {
    json j = mb::io::to_json(m);
    j["interval"] = {s.interval().lo, s.interval().hi};
    j["shape"] = shape ? mb::io::to_json(*shape) : json(nullptr);
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "n        " << m.n() << "\n";
  std::cout << "interval [" << fmt6(s.interval().lo) << ", "
            << fmt6(s.interval().hi) << "]\n";
  std::cout << "mean     " << fmt6(m.mean()) << "\n";
  for (int r = 2; r <= m.max_order(); ++r) {
    std::printf("mu_%-2d    %-14s mu'_%-2d %s\n", r, fmt6(m.central(r)).c_str(),
                r, fmt6(m.raw(r)).c_str());
  }
  if (shape) {
    std::cout << "skewness " << fmt6(shape->skewness) << "\n";
    std::cout << "kurtosis " << fmt6(shape->kurtosis) << "\n";
    std::cout << "stud.rng " << fmt6(shape->studentized_range) << "\n";
    std::cout << "std.dev  " << fmt6(shape->std_dev) << "\n";
  } else {
    std::cout << "shape    degenerate (zero variance)\n";
  }
  return 0;
}

// --------------------------------------------------------------------------
// check / verify for samples

void print_report_table(const std::vector<mb::BoundReport>& reports,
                        double tol_rel) {
  std::printf("%-22s %-6s %-13s %-13s %-13s %-6s %s\n", "inequality", "dir",
              "lhs", "rhs", "slack", "ok", "note");
  for (const auto& r : reports) {
    if (!r.applicable) {
      std::printf("%-22s %-6s %-13s %-13s %-13s %-6s %s\n", r.name.c_str(),
                  std::string(mb::to_string(r.direction)).c_str(), "n/a", "n/a",
                  "n/a", "-", r.note.c_str());
      continue;
    }
    std::printf("%-22s %-6s %-13s %-13s %-13s %-6s %s\n", r.name.c_str(),
                std::string(mb::to_string(r.direction)).c_str(),
                fmt6(r.lhs).c_str(), fmt6(r.rhs).c_str(), fmt6(r.slack).c_str(),
                mb::holds(r, tol_rel) ? "yes" : "NO", r.note.c_str());
  }
}

int cmd_check(const std::string& sample_path, bool renormalize, bool verify,
              bool as_json, double tol_rel) {
  const mb::Sample s = load_sample(sample_path, renormalize);
  const auto reports = mb::run_suite(s);
  bool violated = false;
  for (const auto& r : reports) {
    if (r.applicable && !mb::holds(r, tol_rel)) violated = true;
  }
  if (as_json) {
    json arr = json::array();
    for (const auto& r : reports) arr.push_back(mb::io::to_json(r));
    std::cout << arr.dump(2) << "\n";
  } else {
    print_report_table(reports, tol_rel);
  }
  if (verify && violated) {
    std::cerr << "verification failed: at least one applicable bound violated\n";
    return 1;
  }
  return 0;
}

// --------------------------------------------------------------------------
// spread

int cmd_spread(const std::string& matrix_spec, bool verify, bool as_json,
               double tol_abs) {
  const mb::SquareMatrix a = load_matrix(matrix_spec);
  const mb::BestBounds bb = mb::best_bounds(a);

  std::vector<mb::SpreadEstimate> sorted = bb.all;
  std::sort(sorted.begin(), sorted.end(), [](const auto& x, const auto& y) {
    if (x.direction != y.direction) {
      return x.direction == mb::Direction::Lower;
    }
    return x.value < y.value;
  });

  std::optional<double> oracle_spread;
  bool violated = false;
  if (verify) {
    if (a.is_real(0.0) && a.is_hermitian()) {
      oracle_spread = mb::oracle::exact_spread(a);
      for (const auto& e : sorted) {
        const bool ok = e.direction == mb::Direction::Lower
                            ? e.value <= *oracle_spread + tol_abs
                            : e.value >= *oracle_spread - tol_abs;
        if (!ok) violated = true;
      }
    } else {
      std::cerr << "note: oracle verification needs a real symmetric matrix; "
                   "skipped\n";
    }
  }

  if (as_json) {
    json j;
    j["dim"] = a.dim();
    j["hermitian"] = a.is_hermitian();
    j["best_lower"] = bb.lower ? mb::io::to_json(*bb.lower) : json(nullptr);
    j["best_upper"] = mb::io::to_json(bb.upper);
    json arr = json::array();
    for (const auto& e : sorted) arr.push_back(mb::io::to_json(e));
    j["estimates"] = std::move(arr);
    j["oracle_spread"] = oracle_spread ? json(*oracle_spread) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-16s %-6s %-12s %-10s %-4s %s\n", "bound", "dir", "value",
                "phi", "r", "note");
    for (const auto& e : sorted) {
      std::printf("%-16s %-6s %-12s %-10s %-4s %s\n", e.name.c_str(),
                  std::string(mb::to_string(e.direction)).c_str(),
                  fmt6(e.value).c_str(),
                  e.functional ? e.functional->label().c_str() : "-",
                  e.parameter ? std::to_string(*e.parameter).c_str() : "-",
                  e.note.c_str());
    }
    std::cout << "best lower " << fmt6_opt(bb.lower ? bb.lower->value : 0.0,
                                           bb.lower.has_value())
              << "  best upper " << fmt6(bb.upper.value) << "\n";
    if (oracle_spread) {
      std::cout << "oracle spread " << fmt6(*oracle_spread) << "\n";
    }
  }
  if (violated) {
    std::cerr << "verification failed: bound violates the oracle spread\n";
    return 1;
  }
  return 0;
}

// --------------------------------------------------------------------------
// span

int cmd_span(const std::string& poly_spec, bool verify, bool as_json) {
  const mb::Polynomial p = load_poly(poly_spec);
  const mb::SpanReport rep = mb::span_report(p, verify);

  if (as_json) {
    json j;
    j["degree"] = p.degree();
    j["shift"] = rep.shift;
    json arr = json::array();
    for (const auto& b : rep.bounds) arr.push_back(mb::io::to_json(b));
    j["bounds"] = std::move(arr);
    j["exact"] = rep.exact ? json(*rep.exact) : json(nullptr);
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("%-16s %-6s %-12s %-4s %s\n", "bound", "dir", "value", "ok",
                "note");
    for (const auto& b : rep.bounds) {
      std::printf("%-16s %-6s %-12s %-4s %s\n", b.name.c_str(),
                  std::string(mb::to_string(b.direction)).c_str(),
                  fmt6(b.value).c_str(), b.applicable ? "yes" : "-",
                  b.note.c_str());
    }
    if (rep.exact) std::cout << "exact span " << fmt6(*rep.exact) << "\n";
  }
  return 0;
}

// --------------------------------------------------------------------------
// fuzz

int cmd_fuzz(std::uint64_t seed, int count, bool as_json, double tol_rel) {
  mb::FuzzConfig cfg;
  cfg.seed = seed;
  cfg.samples = count;
  cfg.matrices = std::max(1, count / 10);
  cfg.polynomials = std::max(1, count / 10);
  cfg.slack_rel = tol_rel;
  const mb::FuzzResult res = mb::run_fuzz(cfg);

  if (as_json) {
    json j;
    j["seed"] = cfg.seed;
    j["samples_checked"] = res.samples_checked;
    j["reports_checked"] = res.reports_checked;
    j["sandwich_checked"] = res.sandwich_checked;
    j["chains_checked"] = res.chains_checked;
    j["matrices_checked"] = res.matrices_checked;
    j["estimates_checked"] = res.estimates_checked;
    j["polynomials_checked"] = res.polynomials_checked;
    j["span_bounds_checked"] = res.span_bounds_checked;
    if (res.violation) {
      j["violation"] = {{"category", res.violation->category},
                        {"seed", res.violation->seed},
                        {"index", res.violation->index},
                        {"detail", res.violation->detail}};
    } else {
      j["violation"] = nullptr;
    }
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "samples      " << res.samples_checked << " (" << res.reports_checked
              << " reports, " << res.sandwich_checked << " sandwiches, "
              << res.chains_checked << " chains)\n";
    std::cout << "matrices     " << res.matrices_checked << " ("
              << res.estimates_checked << " estimates)\n";
    std::cout << "polynomials  " << res.polynomials_checked << " ("
              << res.span_bounds_checked << " span bounds)\n";
    if (res.violation) {
      std::cout << "FAIL first counterexample: category=" << res.violation->category
                << " seed=" << res.violation->seed
                << " index=" << res.violation->index << "\n  "
                << res.violation->detail << "\n";
    } else {
      std::cout << "all checks passed\n";
    }
  }
  return res.ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Moment, spread and span bound toolkit"};
  app.require_subcommand(1);

  std::string sample_path, matrix_spec, poly_spec;
  bool renormalize = false, as_json = false, verify = false;
  int order = 4;
  double tol = -1.0;
  std::uint64_t seed = 1;
  int count = 1000;

  auto* moments = app.add_subcommand("moments", "Moments and shape statistics of a sample");
  moments->add_option("--sample", sample_path, "sample file (JSON or CSV)")->required();
  moments->add_flag("--renormalize", renormalize, "accept unnormalized weights");
  moments->add_option("--order", order, "highest moment order (default 4)");
  moments->add_flag("--json", as_json, "JSON output");

  auto* check = app.add_subcommand("check", "Evaluate the inequality suite on a sample");
  check->add_option("--sample", sample_path, "sample file (JSON or CSV)")->required();
  check->add_flag("--renormalize", renormalize, "accept unnormalized weights");
  check->add_flag("--verify", verify, "exit 1 if an applicable bound is violated");
  check->add_flag("--json", as_json, "JSON output");
  check->add_option("--tol", tol, "relative slack tolerance (default 1e-9)")->check(CLI::PositiveNumber);

  auto* spread = app.add_subcommand("spread", "Eigenvalue spread bounds for a matrix");
  spread->add_option("--matrix", matrix_spec, "matrix file, inline JSON, or rows 'a,b;c,d'")->required();
  spread->add_flag("--verify", verify, "check bounds against the eigenvalue oracle");
  spread->add_flag("--json", as_json, "JSON output");
  spread->add_option("--tol", tol, "absolute oracle tolerance (default 1e-8)")->check(CLI::PositiveNumber);

  auto* span = app.add_subcommand("span", "Root span bounds for a polynomial");
  span->add_option("--poly", poly_spec, "polynomial file, inline JSON, or coefficients '1,a1,...'")->required();
  span->add_flag("--verify", verify, "check real-rootedness and bracketing via the root oracle");
  span->add_flag("--json", as_json, "JSON output");

  auto* verify_cmd = app.add_subcommand("verify", "Run a suite in verification mode");
  verify_cmd->add_option("--sample", sample_path, "sample file (JSON or CSV)");
  verify_cmd->add_option("--matrix", matrix_spec, "matrix file or inline literal");
  verify_cmd->add_option("--poly", poly_spec, "polynomial file or inline literal");
  verify_cmd->add_flag("--renormalize", renormalize, "accept unnormalized weights");
  verify_cmd->add_flag("--json", as_json, "JSON output");
  verify_cmd->add_option("--tol", tol, "tolerance override")->check(CLI::PositiveNumber);

  auto* fuzz = app.add_subcommand("fuzz", "Randomized soundness sweep against the oracles");
  fuzz->add_option("--count", count, "number of samples (matrices/polynomials: count/10)");
  fuzz->add_option("--seed", seed, "generator seed");
  fuzz->add_flag("--json", as_json, "JSON output");
  fuzz->add_option("--tol", tol, "relative slack tolerance (default 1e-9)")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (moments->parsed()) {
      return cmd_moments(sample_path, renormalize, order, as_json);
    }
    if (check->parsed()) {
      return cmd_check(sample_path, renormalize, verify, as_json,
                       tol > 0 ? tol : 1e-9);
    }
    if (spread->parsed()) {
      return cmd_spread(matrix_spec, verify, as_json, tol > 0 ? tol : 1e-8);
    }
    if (span->parsed()) {
      return cmd_span(poly_spec, verify, as_json);
    }
    if (verify_cmd->parsed()) {
      const int sources = (!sample_path.empty()) + (!matrix_spec.empty()) +
                          (!poly_spec.empty());
      if (sources != 1) {
        std::cerr << "verify needs exactly one of --sample, --matrix, --poly\n";
        return 2;
      }
      if (!sample_path.empty()) {
        return cmd_check(sample_path, renormalize, true, as_json,
                         tol > 0 ? tol : 1e-9);
      }
      if (!matrix_spec.empty()) {
        return cmd_spread(matrix_spec, true, as_json, tol > 0 ? tol : 1e-8);
      }
      return cmd_span(poly_spec, true, as_json);
    }
    if (fuzz->parsed()) {
      if (count < 1) {
        std::cerr << "--count must be at least 1\n";
        return 2;
      }
      return cmd_fuzz(seed, count, as_json, tol > 0 ? tol : 1e-9);
    }
  } catch (const mb::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 1;
  } catch (const mb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
