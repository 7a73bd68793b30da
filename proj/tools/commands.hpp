#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "kleinfv/params.hpp"
#include "kleinfv/special.hpp"

namespace kfv::cli {

enum ExitCode : int { kPass = 0, kVerifyFailed = 1, kInputError = 2 };

struct PointFlags {
  double mass = 1.0;
  double coupling = 4.0;
  double energy = 1.5;
  double smoothness = 0.0;
  // "re,im" or "re"
  std::string c1 = "1", d1 = "1", c2 = "1", d2 = "1";
};

struct SweepFlags {
  double e_min = 1.5;
  double e_max = 10.0;
  std::size_t steps = 100;
  unsigned threads = 0;  // 0: hardware concurrency
};

struct WaveFlags {
  double x_min = -5.0;
  double x_max = 5.0;
  std::size_t points = 201;
};

struct LimitFlags {
  std::vector<double> r_list{0.1, 0.03, 0.01, 0.003, 0.001, 0.0001};
};

struct Io {
  std::ostream& out;
  std::ostream& err;
};

/// Parses "re,im" (or a bare real part). DomainError on malformed input.
cplx parse_amplitude(const std::string& text);

PhysicalParams to_params(const PointFlags& flags);

/// Series cap from KS_MAX_TERMS, defaults otherwise. DomainError on a
/// malformed or non-positive value.
SeriesOptions series_from_env();

int cmd_coeffs(const PointFlags& flags, bool json, Io io);
int cmd_sweep(const PointFlags& flags, const SweepFlags& sweep, Io io);
int cmd_wave(const PointFlags& flags, const WaveFlags& wave, Io io);
int cmd_verify(const PointFlags& flags, Io io);
int cmd_limit(const PointFlags& flags, const LimitFlags& limit, Io io);

}  // namespace kfv::cli
