#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <numeric>

#include "netpot/capacity.hpp"
#include "netpot/energy.hpp"
#include "netpot/error.hpp"
#include "netpot/graph.hpp"
#include "netpot/harmonic.hpp"
#include "netpot/io.hpp"
#include "netpot/metrics.hpp"
#include "netpot/packing.hpp"
#include "netpot/paths.hpp"
#include "netpot/report.hpp"

namespace netpot::cli {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json config_json(const RunConfig& c) {
  return Json{{"command", c.command},
              {"graph", c.graph_path},
              {"gen", c.gen},
              {"m", c.measure},
              {"radii", c.radii},
              {"root", opt(c.root)},
              {"tol_solver", c.tol_solver},
              {"tol_verdict", c.tol_verdict},
              {"tol_tangency", c.tol_tangency},
              {"tol", c.tol},
              {"seed", c.seed},
              {"csv", c.csv},
              {"zero_threshold", c.zero_threshold},
              {"fit_tol", c.fit_tol},
              {"slope_ratio_min", c.slope_ratio_min},
              {"flow", c.flow},
              {"set", c.set},
              {"tail", c.tail},
              {"coords", c.coords_path},
              {"anchor", c.anchor},
              {"rhos", c.rhos},
              {"f", c.f_path},
              {"f_axis", c.f_axis},
              {"clamp", c.clamp},
              {"window_radius", c.window_radius},
              {"metric_mode", c.metric_mode},
              {"potential", c.potential_path},
              {"weights", c.weights_path},
              {"matrix", c.matrix_path},
              {"paths", c.paths_path},
              {"walks", c.walks},
              {"steps", c.steps},
              {"threshold", c.threshold},
              {"tree", c.tree},
              {"yamasaki", c.yamasaki},
              {"hex", opt(c.hex)},
              {"packing", c.packing_path},
              {"anchors", c.anchors},
              {"contact_only", c.contact_only},
              {"harmonic", c.harmonic},
              {"anchor_radius", c.anchor_radius},
              {"depth", c.depth},
              {"r1", c.r1},
              {"scales", c.scales},
              {"band", opt(c.band)}};
}

void write_text(const std::string& path, std::string_view text) {
  if (path.empty()) {
    std::cout << text;
    std::cout.flush();
  } else {
    write_file(path, text);
  }
}

class Session {
 public:
  explicit Session(const RunConfig& c) : cfg(c), inputs(Json::array()) {}

  std::string read_input(const std::string& path) {
    std::string text = read_file(path);
    inputs.push_back(input_hash(path, text));
    return text;
  }

  GeneratorSpec parse_gen(std::optional<int> radius_override = std::nullopt) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
      auto next = cfg.gen.find(':', pos);
      parts.push_back(cfg.gen.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
      if (next == std::string::npos) break;
      pos = next + 1;
    }
    if (parts.size() < 2 || parts.size() > 3) {
      throw Error(ErrorKind::invalid_argument, "--gen expects FAMILY:SHAPE[:RADIUS], got '" + cfg.gen + "'");
    }
    GeneratorSpec s;
    const std::string& fam = parts[0];
    if (fam == "lattice") s.family = Family::lattice;
    else if (fam == "tree") s.family = Family::tree;
    else if (fam == "path") s.family = Family::path;
    else if (fam == "cycle") s.family = Family::cycle;
    else if (fam == "tree_quotient") s.family = Family::tree_quotient;
    else throw Error(ErrorKind::invalid_argument, "unknown generator family '" + fam + "'");
    s.shape = static_cast<int>(parse_vertex(parts[1]));
    if (radius_override) {
      s.radius = *radius_override;
    } else if (parts.size() == 3) {
      s.radius = static_cast<int>(parse_vertex(parts[2]));
    } else if (!cfg.radii.empty()) {
      s.radius = cfg.radii.back();
    } else if (s.family != Family::path && s.family != Family::cycle) {
      throw Error(ErrorKind::invalid_argument, "--gen needs a radius (FAMILY:SHAPE:RADIUS or --radii)");
    }
    inputs.push_back(input_hash("gen", describe(s)));
    return s;
  }

  Graph finite_graph() {
    if (!cfg.graph_path.empty()) return parse_edge_list(read_input(cfg.graph_path));
    if (!cfg.gen.empty()) return generate(parse_gen());
    throw Error(ErrorKind::invalid_argument, "one of --graph or --gen is required");
  }

  VertexId root_of(const Graph& g) const {
    if (cfg.root) return static_cast<VertexId>(*cfg.root);
    return g.id(0);
  }

  LevelSource level_source() {
    if (!cfg.gen.empty() && cfg.graph_path.empty()) return LevelSource::from_generator(parse_gen(0));
    Graph g = finite_graph();
    VertexId r = root_of(g);
    return LevelSource::from_graph(std::move(g), r);
  }

  Measure measure(const Graph& g) {
    if (cfg.measure == "unit") return Measure::unit(g.size());
    if (cfg.measure.rfind("file:", 0) == 0) return parse_measure(read_input(cfg.measure.substr(5)), g);
    if (cfg.measure == "msigma") {
      throw Error(ErrorKind::invalid_argument, "--m msigma is only defined for circle packings");
    }
    throw Error(ErrorKind::invalid_argument, "--m expects unit, file:PATH or msigma");
  }

  SolverConfig solver() const {
    SolverConfig s;
    s.rel_tol = cfg.tol_solver;
    return s;
  }

  void emit(Json result) const {
    Json doc{{"command", cfg.command}, {"config", config_json(cfg)}, {"inputs", inputs}, {"result", std::move(result)}};
    write_text(cfg.report.empty() ? cfg.out : cfg.report, dump(doc));
  }

  const RunConfig& cfg;
  Json inputs;
};

void require_radii(const RunConfig& c) {
  if (c.radii.empty()) throw Error(ErrorKind::invalid_argument, "--radii is required");
  for (std::size_t i = 0; i < c.radii.size(); ++i) {
    if (c.radii[i] < 1 || (i > 0 && c.radii[i] <= c.radii[i - 1])) {
      throw Error(ErrorKind::invalid_argument, "--radii must be positive and strictly increasing");
    }
  }
}

std::vector<VertexId> parse_id_set(std::string text) {
  for (char& ch : text) {
    if (ch == '{' || ch == '}' || ch == ',') ch = ' ';
  }
  std::vector<VertexId> out;
  for (auto f : split_fields(text)) out.push_back(parse_vertex(f));
  if (out.empty()) throw Error(ErrorKind::invalid_argument, "--set is empty");
  return out;
}

int cmd_gen(Session& s) {
  Graph g = s.finite_graph();
  write_text(s.cfg.out, format_edge_list(g));
  if (!s.cfg.report.empty()) {
    Json doc{{"command", s.cfg.command},
             {"config", config_json(s.cfg)},
             {"inputs", s.inputs},
             {"result", to_json(validate_graph(g))}};
    write_file(s.cfg.report, dump(doc));
  }
  return 0;
}

int cmd_recur(Session& s) {
  const auto& c = s.cfg;
  require_radii(c);
  ClassifierConfig cc;
  cc.zero_threshold = c.zero_threshold;
  cc.stabilization_tol = c.tol_verdict;
  cc.fit_tol = c.fit_tol;
  cc.slope_ratio_min = c.slope_ratio_min;
  if (c.flow == "radial") cc.flow = FlowMode::radial;
  else if (c.flow == "harmonic") cc.flow = FlowMode::harmonic;
  else if (c.flow == "none") cc.flow = FlowMode::none;
  else throw Error(ErrorKind::invalid_argument, "--flow expects radial, harmonic or none");
  cc.solver = s.solver();
  auto src = s.level_source();
  Verdict v = recurrence_classifier(src, c.radii, cc);
  if (c.csv) {
    std::vector<std::vector<double>> rows;
    for (const auto& l : v.levels) {
      rows.push_back({double(l.radius), l.value, l.residual, l.flow_bound ? *l.flow_bound : NAN});
    }
    write_text(c.out, to_csv({"n", "value", "residual", "flow_bound"}, rows));
  } else {
    s.emit(to_json(v));
  }
  return v.classification == Classification::inconclusive ? 2 : 0;
}

int cmd_capacity(Session& s) {
  const auto& c = s.cfg;
  if (c.tail) {
    require_radii(c);
    auto src = s.level_source();
    std::optional<Measure> m;
    MeasureRule rule = MeasureRule::unit;
    if (c.measure != "unit") {
      if (src.generator) throw Error(ErrorKind::invalid_argument, "a measure file needs --graph, not --gen");
      m = s.measure(src.graph);
      rule = MeasureRule::given;
    }
    auto seq = cap_tail_sequence(src, c.radii, rule, m ? &*m : nullptr, s.solver());
    if (c.csv) {
      std::vector<std::vector<double>> rows;
      for (const auto& e : seq.entries) rows.push_back({double(e.radius), e.tail_cap, e.effective, e.residual});
      write_text(c.out, to_csv({"n", "tail_cap", "effective", "residual"}, rows));
    } else {
      s.emit(to_json(seq));
    }
    return 0;
  }
  Graph g = s.finite_graph();
  Measure m = s.measure(g);
  if (!c.set.empty()) {
    std::vector<Index> set;
    for (VertexId id : parse_id_set(c.set)) set.push_back(g.index(id));
    std::sort(set.begin(), set.end());
    set.erase(std::unique(set.begin(), set.end()), set.end());
    auto res = cap_finite(g, m, set, s.solver());
    if (!c.optimizer_out.empty()) write_file(c.optimizer_out, format_potential(g, res.optimizer));
    std::vector<VertexId> ids;
    for (Index i : set) ids.push_back(g.id(i));
    s.emit(Json{{"problem", "capacity"},
                {"set", ids},
                {"value", res.value},
                {"flux_value", res.flux_value},
                {"residual", res.residual},
                {"iterations", res.iterations},
                {"direct", res.direct}});
    return 0;
  }
  if (!c.coords_path.empty()) {
    if (c.anchor.size() != 2 || c.rhos.empty()) {
      throw Error(ErrorKind::invalid_argument, "a neighbourhood basis needs --anchor X,Y and --rhos LIST");
    }
    std::vector<double> xs(g.size(), NAN), ys(g.size(), NAN);
    std::string text = s.read_input(c.coords_path);
    std::size_t pos = 0;
    while (pos < text.size()) {
      std::size_t end = text.find('\n', pos);
      if (end == std::string::npos) end = text.size();
      auto f = split_fields(std::string_view(text).substr(pos, end - pos));
      pos = end + 1;
      if (f.empty()) continue;
      if (f.size() != 3) throw Error(ErrorKind::parse, "coordinate lines are 'id x y'");
      Index i = g.index(parse_vertex(f[0]));
      xs[i] = parse_real(f[1]);
      ys[i] = parse_real(f[2]);
    }
    for (Index i = 0; i < g.size(); ++i) {
      if (std::isnan(xs[i])) throw Error(ErrorKind::parse, "no coordinates for vertex " + std::to_string(g.id(i)));
    }
    auto basis = euclidean_basis(xs, ys, c.anchor[0], c.anchor[1], c.rhos);
    auto entries = boundary_cap_upper(g, m, basis, s.solver());
    if (c.csv) {
      std::vector<std::vector<double>> rows;
      for (const auto& e : entries) rows.push_back({double(e.k), double(e.size), e.skipped ? NAN : e.value});
      write_text(c.out, to_csv({"k", "size", "value"}, rows));
    } else {
      s.emit(to_json(entries));
    }
    return 0;
  }
  throw Error(ErrorKind::invalid_argument, "capacity needs --set, --tail or --coords");
}

int cmd_royden(Session& s) {
  const auto& c = s.cfg;
  require_radii(c);
  Graph g;
  std::optional<GeneratorSpec> spec;
  if (!c.gen.empty() && c.graph_path.empty()) {
    spec = s.parse_gen(c.radii.back() + 1);
    g = generate(*spec);
  } else {
    g = s.finite_graph();
  }
  const VertexId root = s.root_of(g);
  auto ex = make_exhaustion(g, root, c.radii);
  std::vector<Truncation> levels;
  for (const auto& set : ex.sets) levels.push_back(induced_truncation(g, set));

  Potential full;
  if (!c.f_path.empty()) {
    full = parse_potential(s.read_input(c.f_path), g);
  } else {
    full.resize(g.size());
    auto hops = hop_distances(g, g.index(root));
    for (Index i = 0; i < g.size(); ++i) {
      if (spec && spec->family == Family::lattice) {
        if (c.f_axis < 0 || c.f_axis >= spec->shape) throw Error(ErrorKind::invalid_argument, "--f-axis out of range");
        full[i] = lattice_coords(g.id(i), spec->shape)[c.f_axis];
      } else {
        full[i] = hops[i];
      }
    }
  }
  if (!c.clamp.empty()) {
    if (c.clamp.size() != 2 || !(c.clamp[0] < c.clamp[1])) {
      throw Error(ErrorKind::invalid_argument, "--clamp expects LO,HI with LO < HI");
    }
    full = contraction_apply(full, Contraction::clamp(c.clamp[0], c.clamp[1]));
  }
  PotentialRule rule = [&](const Graph& t) { return transfer(g, full, t, 0.0); };

  std::vector<VertexId> window;
  auto hops = hop_distances(g, g.index(root));
  for (Index i = 0; i < g.size(); ++i) {
    if (hops[i] >= 0 && hops[i] <= c.window_radius) window.push_back(g.id(i));
  }
  auto rep = royden_limit(levels, rule, window, c.tol, s.solver());
  s.emit(to_json(rep));
  return rep.stabilized ? 0 : 2;
}

std::vector<Index> bfs_order(const Graph& g, Index root) {
  auto hops = hop_distances(g, root);
  std::vector<Index> order(g.size());
  std::iota(order.begin(), order.end(), Index{0});
  std::stable_sort(order.begin(), order.end(), [&](Index a, Index b) { return hops[a] < hops[b]; });
  return order;
}

Json intrinsic_json(const IntrinsicReport& r) {
  double min_slack = INFINITY;
  for (double v : r.slack) min_slack = std::min(min_slack, v);
  return Json{{"intrinsic", r.intrinsic}, {"total_load", r.total}, {"min_slack", r.slack.empty() ? 0.0 : min_slack}};
}

int cmd_metric(Session& s) {
  const auto& c = s.cfg;
  Graph g = s.finite_graph();
  Measure m = s.measure(g);
  Json res{{"mode", c.metric_mode}};
  if (c.metric_mode == "disc-top") {
    auto dt = disc_top_metric(g, bfs_order(g, g.index(s.root_of(g))));
    res["load_bound"] = dt.load_bound;
    res["total_load"] = dt.total_load;
    res["positive"] = dt.positive;
    res["against_m"] = intrinsic_json(is_intrinsic(g, dt.sigma, m.values()));
  } else if (c.metric_mode == "potential") {
    if (c.potential_path.empty()) throw Error(ErrorKind::invalid_argument, "--potential is required");
    Potential f = parse_potential(s.read_input(c.potential_path), g);
    auto sp = sigma_from_potential(g, f);
    res["energy"] = energy_value(g, f);
    res["against_m_f"] = intrinsic_json(is_intrinsic(g, sp.sigma, sp.m_f));
    res["against_m"] = intrinsic_json(is_intrinsic(g, sp.sigma, m.values()));
  } else if (c.metric_mode == "weights") {
    if (c.weights_path.empty()) throw Error(ErrorKind::invalid_argument, "--weights is required");
    EdgeFunction w = parse_edge_function(s.read_input(c.weights_path), g);
    auto d = MetricObject::path(g, w);
    auto idem = idempotence_check(g, w);
    res["idempotent"] = idem.ok;
    res["max_deviation"] = idem.max_deviation;
    res["diameter"] = diameter(d);
    res["against_m"] = intrinsic_json(is_intrinsic(g, d, m.values()));
  } else if (c.metric_mode == "matrix") {
    if (c.matrix_path.empty()) throw Error(ErrorKind::invalid_argument, "--matrix is required");
    auto sigma = parse_metric_matrix(s.read_input(c.matrix_path), g);
    auto pc = is_pseudometric(sigma, 0.0, 100000, c.seed);
    res["pseudometric"] = pc.ok;
    res["against_m"] = intrinsic_json(is_intrinsic(g, sigma, m.values()));
  } else {
    throw Error(ErrorKind::invalid_argument, "--mode expects disc-top, potential, weights or matrix");
  }
  s.emit(std::move(res));
  return 0;
}

int cmd_paths(Session& s) {
  const auto& c = s.cfg;
  if (c.yamasaki) {
    require_radii(c);
    auto src = s.level_source();
    ClassifierConfig cc;
    cc.solver = s.solver();
    auto v = recurrence_classifier(src, c.radii, cc);
    Json res{{"verdict", to_string(v.classification)}};
    if (v.classification != Classification::recurrent) {
      res["reason"] = v.reason;
      s.emit(std::move(res));
      return 2;
    }
    auto y = yamasaki_witness(src, v, s.solver());
    res["vertices"] = y.graph.size();
    res["total"] = y.witness.total;
    res["energy"] = energy_value(y.graph, y.f);
    res["energy_bound"] = y.energy_bound;
    res["ball_radii"] = y.ball_radii;
    res["ball_sizes"] = y.ball_sizes;
    if (!c.potential_out.empty()) write_file(c.potential_out, format_edge_function(y.graph, y.witness.w));
    s.emit(std::move(res));
    return 0;
  }
  Graph g = s.finite_graph();
  if (c.tree) {
    if (c.weights_path.empty()) throw Error(ErrorKind::invalid_argument, "--weights is required with --tree");
    EdgeFunction w = parse_edge_function(s.read_input(c.weights_path), g);
    auto tp = tree_boundary_potential(g, w, s.root_of(g));
    if (!c.potential_out.empty()) write_file(c.potential_out, format_potential(g, tp.f));
    s.emit(Json{{"max_edge_deviation", tp.max_edge_deviation}, {"vertices", g.size()}});
    return 0;
  }
  if (c.potential_path.empty()) throw Error(ErrorKind::invalid_argument, "--potential is required");
  Potential f = parse_potential(s.read_input(c.potential_path), g);
  auto nw = null_witness_from_potential(g, f, c.seed);
  std::vector<PathSample> paths;
  if (!c.paths_path.empty()) {
    for (const auto& ids : parse_paths(s.read_input(c.paths_path))) paths.push_back(make_path_from_ids(g, ids));
  } else {
    paths = random_self_avoiding_walks(g, g.index(s.root_of(g)), c.steps, c.walks, c.seed);
  }
  auto rep = verify_null_witness(g, nw, paths, c.threshold);
  if (!c.potential_out.empty()) write_file(c.potential_out, format_edge_function(g, nw.w));
  s.emit(Json{{"energy", energy_value(g, f)},
              {"total", nw.total},
              {"epsilon", nw.epsilon},
              {"paths", to_json(rep)}});
  return 0;
}

std::vector<std::array<double, 2>> parse_anchor_list(const std::string& spec) {
  if (spec.rfind("circle:", 0) == 0) return circle_anchors(parse_vertex(spec.substr(7)));
  std::vector<std::array<double, 2>> out;
  std::string text = spec;
  for (char& ch : text) {
    if (ch == ',' || ch == ';') ch = ' ';
  }
  auto f = split_fields(text);
  if (f.empty() || f.size() % 2) throw Error(ErrorKind::invalid_argument, "--anchors expects circle:N or x,y;x,y");
  for (std::size_t i = 0; i < f.size(); i += 2) out.push_back({parse_real(f[i]), parse_real(f[i + 1])});
  return out;
}

struct HarmonicAnchor {
  double x, y, value;
  std::string label;
};

std::vector<HarmonicAnchor> parse_harmonic(const std::string& spec) {
  // "(x,y)=v,(x,y)=v"
  std::vector<HarmonicAnchor> out;
  std::size_t pos = 0;
  while (pos < spec.size()) {
    auto open = spec.find('(', pos);
    if (open == std::string::npos) break;
    auto close = spec.find(')', open);
    auto eq = spec.find('=', close);
    if (close == std::string::npos || eq == std::string::npos) {
      throw Error(ErrorKind::parse, "--harmonic expects (x,y)=v entries");
    }
    auto comma = spec.find(',', open);
    if (comma == std::string::npos || comma > close) throw Error(ErrorKind::parse, "--harmonic anchor needs x,y");
    auto end = spec.find(',', eq);
    if (end == std::string::npos) end = spec.size();
    HarmonicAnchor a;
    a.x = parse_real(spec.substr(open + 1, comma - open - 1));
    a.y = parse_real(spec.substr(comma + 1, close - comma - 1));
    a.value = parse_real(spec.substr(eq + 1, end - eq - 1));
    a.label = spec.substr(open, close - open + 1);
    out.push_back(a);
    pos = end;
  }
  if (out.size() < 2) throw Error(ErrorKind::parse, "--harmonic needs at least two anchors");
  return out;
}

int cmd_packing(Session& s) {
  const auto& c = s.cfg;
  if (c.measure.rfind("file:", 0) == 0) {
    throw Error(ErrorKind::invalid_argument, "packings carry their own measure m_sigma; drop --m file:");
  }
  CirclePacking p;
  if (c.hex) {
    p = hex_packing(*c.hex);
    s.inputs.push_back(input_hash("hex", format_double(*c.hex)));
  } else if (!c.packing_path.empty()) {
    p = parse_packing(s.read_input(c.packing_path));
  } else {
    throw Error(ErrorKind::invalid_argument, "packing needs --hex RHO or --file PATH");
  }
  Graph g = contact_graph(p, c.tol_tangency * p.min_radius());
  if (c.contact_only) {
    write_text(c.out, format_edge_list(g));
    return 0;
  }
  if (!c.edges_out.empty()) write_file(c.edges_out, format_edge_list(g));
  auto pm = packing_metric_measure(p, g);
  ResolvabilityConfig rc;
  rc.depth = c.depth;
  rc.r1 = c.r1;
  if (c.scales == "span") rc.schedule = ScaleSchedule::span;
  else if (c.scales == "halving") rc.schedule = ScaleSchedule::halving;
  else throw Error(ErrorKind::invalid_argument, "--scales expects span or halving");
  auto rep = resolvability_report(p, g, pm, parse_anchor_list(c.anchors), rc);
  Json res{{"discs", p.size()},
           {"contacts", g.edge_count()},
           {"max_degree", g.max_degree()},
           {"intrinsic", intrinsic_json(pm.intrinsic)},
           {"mass", pm.mass},
           {"mass_bound", pm.mass_bound},
           {"resolvability", to_json(rep)}};
  int code = 0;
  if (!c.harmonic.empty()) {
    std::vector<BoundaryAnchorData> anchors;
    for (const auto& a : parse_harmonic(c.harmonic)) {
      auto region = anchor_region(p, g, a.x, a.y, c.anchor_radius);
      if (region.empty()) throw Error(ErrorKind::invalid_argument, "no disc center within reach of anchor " + a.label);
      anchors.push_back({std::move(region), a.value, a.label});
    }
    const double lip = minimal_lipschitz(pm.sigma, anchors);
    auto levels = packing_levels(p, g, c.band ? *c.band : 2.0 * p.max_radius());
    auto phi = phi_boundary_to_harmonic(g, pm.sigma, pm.m, anchors, lip, levels.levels, levels.window, c.tol,
                                        s.solver());
    auto rank = harmonic_rank(g, {Potential(g.size(), 1.0), phi.fh}, g.id(0), 1e-8);
    if (!c.potential_out.empty()) write_file(c.potential_out, format_potential(g, phi.fh));
    res["harmonic"] = Json{{"lipschitz", phi.lipschitz},
                           {"energy", phi.energy},
                           {"certificate_bound", phi.certificate_bound},
                           {"certificate_ok", phi.certificate_ok},
                           {"lipschitz_ok", phi.lipschitz_ok},
                           {"max_lipschitz_ratio", phi.max_lipschitz_ratio},
                           {"royden", to_json(phi.report)},
                           {"rank", to_json(rank)},
                           {"ok", phi.ok}};
    if (!phi.ok) code = 2;
  }
  s.emit(std::move(res));
  return code;
}

}  // namespace

int run(const RunConfig& cfg) {
  Session s(cfg);
  if (cfg.command == "gen") return cmd_gen(s);
  if (cfg.command == "recur") return cmd_recur(s);
  if (cfg.command == "capacity") return cmd_capacity(s);
  if (cfg.command == "royden") return cmd_royden(s);
  if (cfg.command == "metric") return cmd_metric(s);
  if (cfg.command == "paths") return cmd_paths(s);
  if (cfg.command == "packing") return cmd_packing(s);
  throw Error(ErrorKind::invalid_argument, "unknown command '" + cfg.command + "'");
}

}  // namespace netpot::cli
