#include "fde/commands.hpp"

#include "fde/analysis.hpp"
#include "fde/csv.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace fde {

namespace {

struct RunResult {
  Trajectory numeric;
  Trajectory exact;
  ErrorReport report;
};

void check_spec(const RunSpec& spec) {
  if (!std::isfinite(spec.alpha) || !std::isfinite(spec.lambda) ||
      !std::isfinite(spec.y0) || !std::isfinite(spec.h) ||
      !std::isfinite(spec.t_max)) {
    throw std::invalid_argument("run spec: all numeric fields must be finite");
  }
  if (!(spec.h > 0.0) || spec.t_max < spec.h) {
    throw std::invalid_argument("run spec: need h > 0 and t_max >= h");
  }
  if (spec.memory_window < 0) {
    throw std::invalid_argument("run spec: memory window must be >= 0");
  }
}

RunResult run_linear(const RunSpec& spec) {
  check_spec(spec);
  LinearTestProblem problem{spec.alpha, spec.lambda, spec.y0};
  const UniformGrid grid = make_grid(spec.h, spec.t_max);

  SchemeConfig cfg;
  cfg.kind = spec.scheme;
  cfg.bootstrap = spec.bootstrap;
  cfg.memory_window = spec.memory_window;

  RunResult r;
  r.numeric = solve(problem.to_problem(), grid, cfg);
  r.exact = exact_solution(problem, grid);
  r.report = error_report(r.numeric, r.exact);
  return r;
}

bool write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << contents;
  out.flush();
  return out.good();
}

int fail_usage(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return exit_usage;
}

}  // namespace

int cmd_solve(const RunSpec& spec) {
  RunResult r;
  try {
    r = run_linear(spec);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  std::ostringstream csv;
  csv << "n,t,y_numeric,y_exact,abs_error\n";
  for (std::size_t i = 0; i < r.numeric.values.size(); ++i) {
    csv << i << ',' << format_double(r.numeric.grid.node(static_cast<long>(i)))
        << ',' << format_double(r.numeric.values[i]) << ','
        << format_double(r.exact.values[i]) << ','
        << format_double(r.report.abs_errors[i]) << '\n';
  }

  const std::string path = spec.output_path.empty() ? "solve.csv" : spec.output_path;
  if (!write_file(path, csv.str())) {
    return fail_usage("cannot write output file: " + path);
  }
  return r.report.diverged ? exit_diverged : exit_ok;
}

int cmd_reproduce(Figure fig, const std::string& output_path, double t_max) {
  RunSpec spec;  // defaults are the standard configuration
  spec.scheme = SchemeKind::flawed_local;
  spec.t_max = t_max;

  RunResult r;
  try {
    r = run_linear(spec);
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  std::ostringstream csv;
  if (fig == Figure::fig1) {
    csv << "t,y_exact,y_flawed\n";
    for (std::size_t i = 0; i < r.numeric.values.size(); ++i) {
      csv << format_double(r.numeric.grid.node(static_cast<long>(i))) << ','
          << format_double(r.exact.values[i]) << ','
          << format_double(r.numeric.values[i]) << '\n';
    }
  } else {
    csv << "t,abs_error\n";
    for (std::size_t i = 0; i < r.numeric.values.size(); ++i) {
      csv << format_double(r.numeric.grid.node(static_cast<long>(i))) << ','
          << format_double(r.report.abs_errors[i]) << '\n';
    }
  }

  const std::string path = output_path.empty()
                               ? (fig == Figure::fig1 ? "fig1.csv" : "fig2.csv")
                               : output_path;
  if (!write_file(path, csv.str())) {
    return fail_usage("cannot write output file: " + path);
  }
  return exit_ok;
}

int cmd_convergence(const std::vector<double>& h_list, const RunSpec& spec) {
  if (h_list.size() < 2) {
    return fail_usage("convergence: need at least two step sizes");
  }
  for (std::size_t i = 1; i < h_list.size(); ++i) {
    if (!(h_list[i] > 0.0) ||
        std::abs(h_list[i] - 0.5 * h_list[i - 1]) > 1e-12 * h_list[i - 1]) {
      return fail_usage("convergence: step sizes must halve strictly");
    }
  }

  std::ostringstream csv;
  csv << "h,max_error,final_error,eoc\n";
  bool any_diverged = false;
  double prev_max = 0.0;
  try {
    for (std::size_t i = 0; i < h_list.size(); ++i) {
      RunSpec one = spec;
      one.h = h_list[i];
      RunResult r = run_linear(one);
      any_diverged = any_diverged || r.report.diverged;
      csv << format_double(one.h) << ',' << format_double(r.report.max_error)
          << ',' << format_double(r.report.final_error) << ',';
      if (i > 0) csv << format_double(eoc(prev_max, r.report.max_error));
      csv << '\n';
      prev_max = r.report.max_error;
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  const std::string path =
      spec.output_path.empty() ? "convergence.csv" : spec.output_path;
  if (!write_file(path, csv.str())) {
    return fail_usage("cannot write output file: " + path);
  }
  return any_diverged ? exit_diverged : exit_ok;
}

int cmd_short_memory_study(const std::vector<long>& windows, const RunSpec& spec) {
  if (windows.empty()) {
    return fail_usage("short-memory-study: need at least one window");
  }
  for (long w : windows) {
    if (w < 0) return fail_usage("short-memory-study: windows must be >= 1 or full");
  }

  // rows sorted by window size, full history (0) last
  std::vector<long> order = windows;
  std::sort(order.begin(), order.end(), [](long a, long b) {
    if (a == 0) return false;
    if (b == 0) return true;
    return a < b;
  });

  std::ostringstream csv;
  csv << "L,max_error,final_error\n";
  try {
    for (long w : order) {
      RunSpec one = spec;
      one.scheme = SchemeKind::short_memory;
      one.memory_window = w;
      RunResult r = run_linear(one);
      if (w == 0) {
        csv << "full";
      } else {
        csv << w;
      }
      csv << ',' << format_double(r.report.max_error) << ','
          << format_double(r.report.final_error) << '\n';
    }
  } catch (const std::exception& e) {
    return fail_usage(e.what());
  }

  const std::string path =
      spec.output_path.empty() ? "short_memory.csv" : spec.output_path;
  if (!write_file(path, csv.str())) {
    return fail_usage("cannot write output file: " + path);
  }
  return exit_ok;
}

}  // namespace fde
