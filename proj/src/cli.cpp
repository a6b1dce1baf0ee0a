/*
 Copyright 2026 The accalc Authors

 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      https://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#include "accalc/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <ostream>

#include "accalc/error.hpp"
#include "accalc/expression.hpp"
#include "accalc/format.hpp"
#include "accalc/rk4.hpp"
#include "accalc/solver.hpp"

namespace accalc::cli {

namespace {

struct Options {
  std::string ode;
  std::string input = "0";
  std::string x0;
  double t0 = 0.0;
  double t1 = 10.0;
  double step = 0.01;
  bool check = false;
  std::string format = "text";
};

/// The oracle flags a closed form whose trace deviates by more than this,
/// relative to max(1, max |x|).
constexpr double kCheckTolerance = 1e-5;

std::vector<double> initial_values(const Options& o, std::size_t n) {
  if (o.x0.empty()) return std::vector<double>(n, 0.0);
  auto x0 = parse_number_list(o.x0);
  if (x0.size() != n) {
    throw InvalidInput("--x0 has " + std::to_string(x0.size()) + " entries, the operator has order " +
                       std::to_string(n));
  }
  return x0;
}

std::vector<double> grid_times(const Options& o) {
  if (!(o.t1 > o.t0) || !(o.step > 0.0) || !std::isfinite(o.t0) || !std::isfinite(o.t1)) {
    throw InvalidInput("sampling needs t1 > t0 and step > 0");
  }
  const double intervals_d = std::ceil((o.t1 - o.t0) / o.step - 1e-9);
  if (intervals_d > 1e7) throw InvalidInput("too many samples");
  const auto intervals = static_cast<std::size_t>(intervals_d);
  const double h = (o.t1 - o.t0) / static_cast<double>(intervals);
  std::vector<double> ts(intervals + 1);
  for (std::size_t i = 0; i < intervals; ++i) ts[i] = o.t0 + static_cast<double>(i) * h;
  ts[intervals] = o.t1;
  return ts;
}

void write_csv(std::ostream& out, const Signal& x, const Options& o) {
  out << "t,x\n";
  for (double t : grid_times(o)) out << format_number(t) << ',' << json_number(x(t)) << '\n';
}

void write_solution(std::ostream& out, const SolutionReport& r, const Options& o) {
  if (o.format == "json") {
    std::string basis = "[";
    for (std::size_t i = 0; i < r.basis.functions.size(); ++i) {
      if (i) basis += ',';
      basis += json_terms(std::span<const Term>(&r.basis.functions[i], 1));
    }
    basis += "]";
    out << "{\"terms\":" << json_terms(r.total.terms()) << ",\"particular\":" << json_terms(r.particular.terms())
        << ",\"homogeneous_coeffs\":" << json_number_array(r.homogeneous_coeffs) << ",\"basis\":" << basis
        << ",\"kind\":\"" << to_string(r.kind) << "\"}\n";
  } else if (o.format == "csv") {
    write_csv(out, r.total, o);
  } else {
    out << format_signal(r.total) << '\n';
  }
}

int cmd_particular(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  const Signal xp = particular_solution(op, parse_input(o.input));
  if (o.format == "json") {
    out << "{\"terms\":" << json_terms(xp.terms()) << "}\n";
  } else if (o.format == "csv") {
    write_csv(out, xp, o);
  } else {
    out << format_signal(xp) << '\n';
  }
  return kSuccess;
}

int cmd_solve(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  const Signal r = parse_input(o.input);
  write_solution(out, solve_ivp({op, r, initial_values(o, op.order())}), o);
  return kSuccess;
}

int cmd_zero_state(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  write_solution(out, zero_state(op, parse_input(o.input)), o);
  return kSuccess;
}

int cmd_zero_input(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  write_solution(out, zero_input(op, initial_values(o, op.order())), o);
  return kSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  const Signal r = parse_input(o.input);
  const SolutionReport rep = steady_transient({op, r, initial_values(o, op.order())});
  const Signal transient = rep.homogeneous();
  if (o.format == "json") {
    out << "{\"terms\":" << json_terms(rep.total.terms()) << ",\"steady\":" << json_terms(rep.particular.terms())
        << ",\"transient\":" << json_terms(transient.terms()) << ",\"kind\":\"" << to_string(rep.kind) << "\"}\n";
  } else if (o.format == "csv") {
    out << "t,steady,transient,x\n";
    for (double t : grid_times(o)) {
      out << format_number(t) << ',' << json_number(rep.particular(t)) << ',' << json_number(transient(t)) << ','
          << json_number(rep.total(t)) << '\n';
    }
  } else {
    out << "steady: " << format_signal(rep.particular) << '\n'
        << "transient: " << format_signal(transient) << '\n'
        << "total: " << format_signal(rep.total) << '\n';
  }
  return kSuccess;
}

int cmd_roots(const Options& o, std::ostream& out) {
  const DiffOperator op = parse_ode(o.ode);
  const RootMultiset roots = find_roots(op.characteristic());
  if (o.format == "json") {
    out << "{\"roots\":[";
    bool first = true;
    for (const auto& r : roots) {
      if (!first) out << ',';
      first = false;
      out << "{\"re\":" << json_number(r.value.real()) << ",\"im\":" << json_number(r.value.imag())
          << ",\"multiplicity\":" << r.multiplicity << '}';
    }
    out << "],\"hurwitz\":" << (is_hurwitz(roots) ? "true" : "false") << "}\n";
  } else if (o.format == "csv") {
    out << "re,im,multiplicity\n";
    for (const auto& r : roots)
      out << json_number(r.value.real()) << ',' << json_number(r.value.imag()) << ',' << r.multiplicity << '\n';
  } else {
    for (const auto& r : roots) out << format_complex(r.value) << " (multiplicity " << r.multiplicity << ")\n";
  }
  return kSuccess;
}

int cmd_sample(const Options& o, std::ostream& out, std::ostream& err) {
  const DiffOperator op = parse_ode(o.ode);
  const Signal r = parse_input(o.input);
  const auto x0 = initial_values(o, op.order());
  const SolutionReport rep = solve_ivp({op, r, x0});
  const auto ts = grid_times(o);

  double oracle_error = 0.0;
  bool oracle_ok = true;
  if (o.check) {
    if (o.t0 != 0.0) throw InvalidInput("--check integrates from the initial values at t = 0; use --t0 0");
    const TraceSpec spec{o.t0, o.t1, o.step};
    const TraceGrid grid = rk4_solve(op, [&r](double t) { return r(t); }, x0, spec, substeps_for(o.step));
    oracle_error = compare_traces(rep.total, grid);
    double scale = 1.0;
    for (const auto& sample : grid.samples) scale = std::max(scale, std::abs(sample.second));
    oracle_ok = oracle_error <= kCheckTolerance * scale;
  }

  if (o.format == "json") {
    std::vector<double> xs;
    for (double t : ts) xs.push_back(rep.total(t));
    out << "{\"t\":" << json_number_array(ts) << ",\"x\":" << json_number_array(xs);
    if (o.check) out << ",\"oracle_max_error\":" << json_number(oracle_error);
    out << "}\n";
  } else {
    write_csv(out, rep.total, o);
    if (o.check) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.3g", oracle_error);
      out << "# oracle max-abs-error: " << buf << '\n';
    }
  }
  if (!oracle_ok) {
    err << "error: closed form disagrees with the RK4 oracle\n";
    return kNumericalFailure;
  }
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Closed-form solutions of constant-coefficient linear ODEs", "accalc"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&o](CLI::App* sub, bool needs_input, bool needs_x0) {
    sub->add_option("--ode", o.ode, "operator, e.g. \"x'' + 3*x' + 2*x\" or \"coeffs: 2, 3, 1\"")->required();
    if (needs_input) sub->add_option("--input", o.input, "input expression, e.g. \"t*exp(-t)*cos(2*t)\"");
    if (needs_x0) sub->add_option("--x0", o.x0, "initial values x(0), x'(0), ... as a comma list");
    sub->add_option("--t0", o.t0, "first sample time");
    sub->add_option("--t1", o.t1, "last sample time");
    sub->add_option("--step", o.step, "sample spacing");
    sub->add_option("--format", o.format, "output format")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto* particular = app.add_subcommand("particular", "particular solution of L(x) = r");
  add_common(particular, true, false);
  auto* solve = app.add_subcommand("solve", "initial-value problem L(x) = r, x(0) = x0");
  add_common(solve, true, true);
  auto* zs = app.add_subcommand("zero-state", "response to the input from rest");
  add_common(zs, true, false);
  auto* zi = app.add_subcommand("zero-input", "response to the initial values without input");
  add_common(zi, false, true);
  auto* decompose = app.add_subcommand("decompose", "steady-state / transient split (Hurwitz operators)");
  add_common(decompose, true, true);
  auto* roots = app.add_subcommand("roots", "roots of the characteristic polynomial");
  add_common(roots, false, false);
  auto* sample = app.add_subcommand("sample", "sample the IVP solution on a grid");
  add_common(sample, true, true);
  sample->add_flag("--check", o.check, "compare against an RK4 integration");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  }

  try {
    if (*particular) return cmd_particular(o, out);
    if (*solve) return cmd_solve(o, out);
    if (*zs) return cmd_zero_state(o, out);
    if (*zi) return cmd_zero_input(o, out);
    if (*decompose) return cmd_decompose(o, out);
    if (*roots) return cmd_roots(o, out);
    if (*sample) return cmd_sample(o, out, err);
  } catch (const ParseError& e) {
    err << "parse error at " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const StructureError& e) {
    err << "error: " << e.what() << '\n';
    return kParseError;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kPreconditionViolation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kNumericalFailure;
  }
  return kParseError;
}

}  // namespace accalc::cli
