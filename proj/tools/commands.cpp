#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <limits>
#include <optional>
#include <ostream>
#include <thread>

#include "kleinfv/boundary.hpp"
#include "kleinfv/errors.hpp"
#include "kleinfv/numeric_oracle.hpp"
#include "kleinfv/smooth.hpp"
#include "kleinfv/step.hpp"
#include "output.hpp"

namespace kfv::cli {

namespace {

double parse_double(std::string_view s, const std::string& whole) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || res.ec != std::errc{} || res.ptr != s.data() + s.size())
    throw DomainError("malformed amplitude '" + whole + "', expected re,im");
  return v;
}

std::string_view identity_label(EnergyRegime regime) {
  return regime == EnergyRegime::kKlein ? "R-T-1" : "R+T-1";
}

ScatterCoefficients coefficients_for(const PhysicalParams& p, const DerivedParams& d) {
  return p.is_step() ? step_coeffs(p, d) : asymptotic_coeffs(p, d);
}

bool at_barrier_top(const PhysicalParams& p) {
  return std::abs(p.E - p.u) <= 1e-12 * std::max(std::abs(p.E), std::abs(p.u));
}

struct SweepRow {
  double E = 0.0;
  std::optional<std::vector<std::string>> cells;
  std::string note;
};

SweepRow sweep_row(PhysicalParams p) {
  SweepRow row{p.E, std::nullopt, {}};
  try {
    const DerivedParams d = derive(p);
    const ScatterCoefficients c = coefficients_for(p, d);
    row.cells = std::vector<std::string>{num(p.E),          std::string(regime_name(d.regime)),
                                         num(d.k1),         num(d.k2.real()),
                                         num(d.k2.imag()),  num(c.R),
                                         num(c.T),          num(c.identity_residual()),
                                         num((p.E - p.u) / p.E)};
    if (at_barrier_top(p)) row.note = "E = u: rho(0+) vanishes on this row";
  } catch (const ThresholdError& e) {
    row.note = std::string("skipped threshold point: ") + e.what();
  } catch (const DomainError& e) {
    row.note = std::string("skipped: ") + e.what();
  }
  return row;
}

void print_checks(std::vector<std::string>& items, const VerifyReport& report) {
  for (const CheckEntry& c : report.checks) {
    JsonObject o;
    o.string("name", c.name).number("residual", c.residual).number("tolerance", c.tolerance).boolean("pass", c.pass);
    items.push_back(o.inline_render());
  }
}

}  // namespace

cplx parse_amplitude(const std::string& text) {
  const auto comma = text.find(',');
  const std::string_view s(text);
  if (comma == std::string::npos) return {parse_double(s, text), 0.0};
  return {parse_double(s.substr(0, comma), text), parse_double(s.substr(comma + 1), text)};
}

PhysicalParams to_params(const PointFlags& f) {
  PhysicalParams p;
  p.m = f.mass;
  p.u = f.coupling;
  p.E = f.energy;
  p.r = f.smoothness;
  p.C1 = parse_amplitude(f.c1);
  p.D1 = parse_amplitude(f.d1);
  p.C2 = parse_amplitude(f.c2);
  p.D2 = parse_amplitude(f.d2);
  validate(p);
  return p;
}

SeriesOptions series_from_env() {
  SeriesOptions s;
  const char* raw = std::getenv("KS_MAX_TERMS");
  if (raw == nullptr || *raw == '\0') return s;
  const std::string_view v(raw);
  long terms = 0;
  const auto res = std::from_chars(v.data(), v.data() + v.size(), terms);
  if (res.ec != std::errc{} || res.ptr != v.data() + v.size() || terms <= 0)
    throw DomainError("KS_MAX_TERMS must be a positive integer, got '" + std::string(v) + "'");
  s.max_terms = terms;
  return s;
}

int cmd_coeffs(const PointFlags& flags, bool json, Io io) {
  const PhysicalParams p = to_params(flags);
  const DerivedParams d = derive(p);
  const ScatterCoefficients c = coefficients_for(p, d);
  const std::string_view regime = regime_name(d.regime);
  if (json) {
    JsonObject o;
    o.string("regime", regime)
        .number("k1", d.k1)
        .number("k2_re", d.k2.real())
        .number("k2_im", d.k2.imag())
        .number("R", c.R)
        .number("T", c.T)
        .string("identity", identity_label(d.regime))
        .number("identity_residual", c.identity_residual());
    io.out << o.render() << '\n';
    return kPass;
  }
  io.out << "regime " << regime << '\n'
         << "k1 " << num(d.k1) << '\n'
         << "k2_re " << num(d.k2.real()) << '\n'
         << "k2_im " << num(d.k2.imag()) << '\n'
         << "R " << num(c.R) << '\n'
         << "T " << num(c.T) << '\n'
         << "identity " << identity_label(d.regime) << '\n'
         << "identity_residual " << num(c.identity_residual()) << '\n';
  return kPass;
}

int cmd_sweep(const PointFlags& flags, const SweepFlags& sweep, Io io) {
  PhysicalParams base = to_params(flags);
  if (sweep.steps == 0) throw DomainError("--steps must be positive");
  if (!(sweep.e_max >= sweep.e_min)) throw DomainError("--e-max must not be below --e-min");
  if (sweep.steps == 1 && sweep.e_max != sweep.e_min) throw DomainError("--steps 1 needs --e-min == --e-max");

  std::vector<SweepRow> rows(sweep.steps);
  const double span = sweep.e_max - sweep.e_min;
  const auto energy = [&](std::size_t i) {
    if (sweep.steps == 1) return sweep.e_min;
    if (i + 1 == sweep.steps) return sweep.e_max;
    return sweep.e_min + span * static_cast<double>(i) / static_cast<double>(sweep.steps - 1);
  };

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < rows.size(); i = next++) {
      PhysicalParams p = base;
      p.E = energy(i);
      rows[i] = sweep_row(p);
    }
  };
  const unsigned hw = sweep.threads ? sweep.threads : std::max(1u, std::thread::hardware_concurrency());
  const unsigned n_threads = static_cast<unsigned>(std::min<std::size_t>(hw, rows.size()));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::size_t emitted = 0;
  csv_line(io.out, {"E", "regime", "k1", "k2_re", "k2_im", "R", "T", "identity_residual", "rho_ratio"});
  for (const SweepRow& row : rows) {
    if (!row.note.empty()) io.err << "E=" << num(row.E) << ": " << row.note << '\n';
    if (!row.cells) continue;
    csv_line(io.out, *row.cells);
    ++emitted;
  }
  if (emitted == 0) {
    io.err << "error: no admissible energy in [" << num(sweep.e_min) << ", " << num(sweep.e_max) << "]\n";
    return kInputError;
  }
  return kPass;
}

int cmd_wave(const PointFlags& flags, const WaveFlags& wave, Io io) {
  const PhysicalParams p = to_params(flags);
  const std::vector<double> grid = uniform_grid(wave.x_min, wave.x_max, wave.points);
  std::optional<StepSolution> step;
  std::optional<SmoothSolution> smooth;
  if (p.is_step())
    step.emplace(p);
  else
    smooth.emplace(p, DeriveOptions{}, series_from_env());

  std::vector<std::string> header{"x"};
  for (int k = 1; k <= 8; ++k) {
    header.push_back("re_psi" + std::to_string(k));
    header.push_back("im_psi" + std::to_string(k));
  }
  header.push_back("rho");
  header.push_back("j");
  csv_line(io.out, header);

  std::size_t failed = 0;
  for (double x : grid) {
    std::vector<std::string> cells{num(x)};
    try {
      const SpinorJet jet = step ? step->spinor_jet(x) : smooth->spinor_jet(x);
      for (int k = 0; k < 8; ++k) {
        cells.push_back(num(jet.value(k).real()));
        cells.push_back(num(jet.value(k).imag()));
      }
      cells.push_back(num(density(jet.value)));
      cells.push_back(num(current(jet, p.m)));
    } catch (const Error& e) {
      cells.resize(1);
      cells.insert(cells.end(), 18, num(std::numeric_limits<double>::quiet_NaN()));
      if (failed++ == 0) io.err << "x=" << num(x) << ": " << e.what() << '\n';
    }
    csv_line(io.out, cells);
  }
  if (failed) io.err << failed << " of " << grid.size() << " rows failed and were written as nan\n";
  return kPass;
}

int cmd_verify(const PointFlags& flags, Io io) {
  const PhysicalParams p = to_params(flags);
  if (at_barrier_top(p)) throw ThresholdError("E = u: rho(0+) vanishes and the point is excluded from verification");
  const StepSolution step(p);
  const BoundaryReport boundary = check_boundary(step);
  VerifyReport report = boundary.report;
  report.add("step_identity", std::abs(step.coefficients().identity_residual()), 1e-12);
  if (!p.is_step()) {
    OracleSuiteOptions opts;
    opts.series = series_from_env();
    const VerifyReport oracle = oracle_suite(p, opts);
    report.checks.insert(report.checks.end(), oracle.checks.begin(), oracle.checks.end());
  }

  JsonObject params;
  params.number("mass", p.m).number("coupling", p.u).number("energy", p.E).number("smoothness", p.r);
  std::vector<std::string> items;
  print_checks(items, report);
  JsonObject doc;
  doc.field("params", params.render(2))
      .string("regime", regime_name(step.derived().regime))
      .field("checks", json_array(items, 2))
      .boolean("pair_creation", boundary.pair_creation)
      .number("charge_ratio", boundary.charge_ratio)
      .boolean("pass", report.all_pass());
  io.out << doc.render() << '\n';
  return report.all_pass() ? kPass : kVerifyFailed;
}

int cmd_limit(const PointFlags& flags, const LimitFlags& limit, Io io) {
  PhysicalParams p = to_params(flags);
  p.r = 0.0;
  const LimitTable t = limit_convergence(p, limit.r_list);
  csv_line(io.out, {"r", "R_smooth", "T_smooth", "R_err", "T_err"});
  for (const LimitRow& row : t.rows) csv_line(io.out, {num(row.r), num(row.R_smooth), num(row.T_smooth), num(row.R_err), num(row.T_err)});
  if (!t.monotone) {
    io.err << "R_err does not decrease along the r list\n";
    return kVerifyFailed;
  }
  return kPass;
}

}  // namespace kfv::cli
