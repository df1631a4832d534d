#pragma once

// Flat text configuration: [section] headers and key = value lines. Complex
// entries are written as "re,im" pairs (plain reals allowed), vectors and
// matrix rows as whitespace-separated entries. See configs/ for examples.

#include "qsd/classifier.hpp"

#include <map>
#include <optional>
#include <string>

namespace qsd {

struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& what)
      : std::runtime_error("line " + std::to_string(line_) + ": " + what), line(line_) {}
};

struct SweepSpec {
  std::string parameter;  // P | bloch_a_x | bloch_a_y | bloch_a_z | a | b | alpha
  double from = 0, to = 1;
  int steps = 11;         // number of grid points
};

struct ModelConfig {
  // model
  std::optional<std::string> preset;  // eq30 | case1 | case3 | trivial
  double a = 1.0, b = 0.5, alpha = 0.5;
  std::optional<Mat> block_a, block_b;  // explicit 3x3 blocks

  // initial state
  std::string initial_type = "product";  // product | entangled | raw
  BlochVector bloch_t, bloch_a;
  double p = 0.5;
  std::optional<Mat> raw_state;

  // evolution
  double t_max = 30.0;
  double dt = 1e-3;
  int samples = 100;

  std::optional<SweepSpec> sweep;
  Tolerances tols;
};

// Throws ParseError with a line diagnostic on malformed input.
ModelConfig parse_config(const std::string& text);
ModelConfig load_config(const std::string& path);

// Realizes the configured Kossakowski blocks (presets or explicit).
// `a`, `b`, `alpha` override the stored parameters when given (sweeps).
KossakowskiModel make_model(const ModelConfig& cfg);
KossakowskiModel make_model(const ModelConfig& cfg, double a, double b, double alpha);

InitialState make_initial(const ModelConfig& cfg);

// Preset blocks.
Mat preset_eq30_block(double a, double b);  // [[a, ib, 0], [-ib, a, 0], [0, 0, a]]

}  // namespace qsd
