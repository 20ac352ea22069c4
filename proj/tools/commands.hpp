#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace netpot::cli {

// Everything a command needs, resolved from the command line. Echoed into
// every JSON report.
struct RunConfig {
  std::string command;

  // inputs
  std::string graph_path;
  std::string gen;           // FAMILY:SHAPE[:RADIUS]
  std::string measure = "unit";
  std::vector<int> radii;
  std::optional<std::int64_t> root;

  // tolerances
  double tol_solver = 1e-10;
  double tol_verdict = 0.05;
  double tol_tangency = 1e-9;
  double tol = 1e-6;

  std::uint64_t seed = 1;
  std::string out;
  std::string report;
  bool csv = false;

  // recur
  double zero_threshold = 1e-3;
  double fit_tol = 0.05;
  double slope_ratio_min = 0.9;
  std::string flow = "radial";

  // capacity
  std::string set;
  bool tail = false;
  std::string coords_path;
  std::vector<double> anchor;
  std::vector<double> rhos;
  std::string optimizer_out;

  // royden
  std::string f_path;
  int f_axis = 0;
  std::vector<double> clamp;
  int window_radius = 1;

  // metric
  std::string metric_mode = "disc-top";
  std::string potential_path;
  std::string weights_path;
  std::string matrix_path;

  // paths
  std::string paths_path;
  std::size_t walks = 16;
  std::size_t steps = 32;
  double threshold = 1.0;
  bool tree = false;
  bool yamasaki = false;

  // packing
  std::optional<double> hex;
  std::string packing_path;
  std::string anchors = "circle:8";
  bool contact_only = false;
  std::string harmonic;
  std::string edges_out;
  std::string potential_out;
  double anchor_radius = 0.25;
  std::size_t depth = 8;
  double r1 = 0.5;
  std::string scales = "span";
  std::optional<double> band;
};

/// Exit codes: 0 decided, 2 inconclusive, 1 error (thrown as netpot::Error).
int run(const RunConfig& cfg);

}  // namespace netpot::cli
