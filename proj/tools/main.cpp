#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "netpot/error.hpp"

int main(int argc, char** argv) {
  using netpot::cli::RunConfig;
  RunConfig cfg;
  CLI::App app{"netpot: potential theory on weighted graphs"};
  app.require_subcommand(1);

  std::int64_t root = -1;
  double hex = 0.0, band = 0.0;

  app.add_option("--graph", cfg.graph_path, "edge list 'u v b'");
  app.add_option("--gen", cfg.gen, "generator FAMILY:SHAPE[:RADIUS] (lattice, tree, path, cycle, tree_quotient)");
  app.add_option("--m", cfg.measure, "measure: unit, file:PATH or msigma");
  app.add_option("--radii", cfg.radii, "exhaustion radii, comma separated")->delimiter(',');
  app.add_option("--root", root, "seed vertex id (default: smallest id)");
  app.add_option("--tol-solver", cfg.tol_solver, "relative residual for iterative solves")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-verdict", cfg.tol_verdict, "relative change accepted as stabilized capacity")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-tangency", cfg.tol_tangency, "tangency tolerance, relative to the smallest radius")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol", cfg.tol, "stabilization tolerance for harmonic limits")->check(CLI::PositiveNumber);
  app.add_option("--seed", cfg.seed, "random seed");
  app.add_option("--out", cfg.out, "output path (default: stdout)");
  app.add_flag("--csv", cfg.csv, "write sequences as CSV");

  auto* gen = app.add_subcommand("gen", "emit a generated or parsed graph as an edge list");
  gen->add_option("--report", cfg.report, "diagnostics JSON");

  auto* recur = app.add_subcommand("recur", "classify recurrence over an exhaustion");
  recur->add_option("--zero-threshold", cfg.zero_threshold)->check(CLI::PositiveNumber);
  recur->add_option("--fit-tol", cfg.fit_tol)->check(CLI::PositiveNumber);
  recur->add_option("--slope-ratio", cfg.slope_ratio_min)->check(CLI::PositiveNumber);
  recur->add_option("--flow", cfg.flow, "radial, harmonic or none");

  auto* cap = app.add_subcommand("capacity", "capacities of sets, tails and boundary neighbourhoods");
  cap->add_option("--set", cfg.set, "vertex set, e.g. \"{0,3}\"");
  cap->add_flag("--tail", cfg.tail, "tail capacity sequence over --radii");
  cap->add_option("--coords", cfg.coords_path, "vertex coordinates 'id x y'");
  cap->add_option("--anchor", cfg.anchor, "anchor X,Y")->delimiter(',');
  cap->add_option("--rhos", cfg.rhos, "basis radii")->delimiter(',');
  cap->add_option("--optimizer", cfg.optimizer_out, "write the optimizer potential");

  auto* royden = app.add_subcommand("royden", "Royden decomposition across truncations");
  royden->add_option("--f", cfg.f_path, "potential file on the full graph");
  royden->add_option("--f-axis", cfg.f_axis, "lattice coordinate used as f");
  royden->add_option("--clamp", cfg.clamp, "clamp f to LO,HI")->delimiter(',');
  royden->add_option("--window-radius", cfg.window_radius, "hop radius of the observation window");

  auto* metric = app.add_subcommand("metric", "intrinsic metric diagnostics");
  metric->add_option("--mode", cfg.metric_mode, "disc-top, potential, weights or matrix");
  metric->add_option("--potential", cfg.potential_path);
  metric->add_option("--weights", cfg.weights_path);
  metric->add_option("--matrix", cfg.matrix_path);

  auto* paths = app.add_subcommand("paths", "null-path witnesses");
  paths->add_option("--potential", cfg.potential_path);
  paths->add_option("--paths", cfg.paths_path, "one path per line, vertex ids");
  paths->add_option("--walks", cfg.walks);
  paths->add_option("--steps", cfg.steps);
  paths->add_option("--threshold", cfg.threshold);
  paths->add_flag("--tree", cfg.tree, "tree boundary potential from --weights");
  paths->add_option("--weights", cfg.weights_path);
  paths->add_flag("--yamasaki", cfg.yamasaki, "witness built from a Recurrent verdict");
  paths->add_option("--witness-out", cfg.potential_out, "write w (or the tree potential)");

  auto* packing = app.add_subcommand("packing", "circle packing diagnostics");
  auto* hex_opt = packing->add_option("--hex", hex, "hexagonal packing radius")->check(CLI::PositiveNumber);
  packing->add_option("--file", cfg.packing_path, "packing file 'id x y r'");
  packing->add_option("--anchors", cfg.anchors, "circle:N or x,y;x,y");
  packing->add_flag("--contact-only", cfg.contact_only, "emit the contact graph only");
  packing->add_option("--harmonic", cfg.harmonic, "anchor data, e.g. \"(1,0)=0,(-1,0)=1\"");
  packing->add_option("--report", cfg.report, "report JSON path");
  packing->add_option("--edges", cfg.edges_out, "write the contact graph");
  packing->add_option("--potential-out", cfg.potential_out, "write f_h");
  packing->add_option("--anchor-radius", cfg.anchor_radius)->check(CLI::PositiveNumber);
  packing->add_option("--depth", cfg.depth);
  packing->add_option("--r1", cfg.r1)->check(CLI::PositiveNumber);
  packing->add_option("--scales", cfg.scales, "span or halving");
  auto* band_opt = packing->add_option("--band", band, "boundary layer width")->check(CLI::PositiveNumber);

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  cfg.command = app.get_subcommands().front()->get_name();
  if (root >= 0) cfg.root = root;
  if (hex_opt->count()) cfg.hex = hex;
  if (band_opt->count()) cfg.band = band;

  try {
    return netpot::cli::run(cfg);
  } catch (const std::exception& e) {
    std::cerr << "netpot " << cfg.command << ": " << e.what() << "\n";
    return 1;
  }
}
