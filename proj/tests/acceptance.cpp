// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "cli_run.hpp"
#include "netpot/capacity.hpp"
#include "netpot/energy.hpp"
#include "netpot/harmonic.hpp"
#include "netpot/io.hpp"
#include "netpot/metrics.hpp"
#include "netpot/packing.hpp"
#include "netpot/paths.hpp"
#include "oracles.hpp"

using namespace netpot;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double rel_err(double got, double want) { return std::abs(got - want) / std::abs(want); }

Outcome ac1() {
  auto t0 = std::chrono::steady_clock::now();
  double worst = 0.0;
  for (int n : {2, 4, 8, 16, 32}) {
    auto line = materialize_level(LevelSource::from_generator({Family::lattice, 1, 1}), n);
    const Index s[] = {line.source};
    worst = std::max(worst, rel_err(effective_cap(line.graph, s, line.grounded).value, oracle::line_conductance(n)));
    // Full binary tree up to depth 16 (131071 vertices); depth 32 would need
    // 2^33 vertices, so it is evaluated on the radial quotient.
    const double want = oracle::tree_conductance(2, n);
    if (n <= 16) {
      auto tree = materialize_level(LevelSource::from_generator({Family::tree, 2, 1}), n);
      const Index ts[] = {tree.source};
      worst = std::max(worst, rel_err(effective_cap(tree.graph, ts, tree.grounded).value, want));
    }
    auto quot = materialize_level(LevelSource::from_generator({Family::tree_quotient, 2, 1}), n);
    const Index qs[] = {quot.source};
    worst = std::max(worst, rel_err(effective_cap(quot.graph, qs, quot.grounded).value, want));
    // The closed forms themselves.
    worst = std::max(worst, rel_err(oracle::line_conductance(n), 2.0 / n));
    worst = std::max(worst, rel_err(oracle::tree_conductance(2, n), 1.0 / (1.0 - std::ldexp(1.0, -n))));
  }
  const double secs = seconds_since(t0);
  return {worst <= 1e-9 && secs < 5.0, fmt("max rel err %.2e (tol 1e-9), %.2f s (limit 5 s)", worst, secs)};
}

Outcome ac2() {
  auto t0 = std::chrono::steady_clock::now();
  std::string d;
  bool ok = true;
  auto run = [&](const char* name, GeneratorSpec spec, std::vector<int> radii, Classification want) {
    auto v = recurrence_classifier(LevelSource::from_generator(spec), radii);
    ok = ok && v.classification == want;
    d += fmt("%s=%s ", name, to_string(v.classification));
    return v;
  };
  run("Z1", {Family::lattice, 1, 1}, {8, 16, 32, 64, 128}, Classification::recurrent);
  run("Z2", {Family::lattice, 2, 1}, {8, 16, 32, 64, 128}, Classification::recurrent);
  run("T2", {Family::tree, 2, 1}, {4, 8, 12, 16}, Classification::transient);
  run("T2q", {Family::tree_quotient, 2, 1}, {4, 8, 12, 16, 20, 24}, Classification::transient);
  auto z3 = run("Z3", {Family::lattice, 3, 1}, {4, 8, 12, 16, 20, 24}, Classification::transient);
  const double ratio = z3.flow_bound ? *z3.flow_bound / z3.levels.back().value : 0.0;
  ok = ok && ratio >= 0.9;
  const double secs = seconds_since(t0);
  ok = ok && secs < 120.0;
  return {ok, d + fmt("Z3 flow/cap %.4f (min 0.9), %.2f s (limit 120 s)", ratio, secs)};
}

Truncation random_truncation(std::mt19937_64& rng) {
  std::uniform_int_distribution<Index> size(10, 200);
  const Index n = size(rng);
  auto g = oracle::random_graph(rng, n, 2.5 / n, false);
  std::uniform_int_distribution<Index> pick(0, n - 1);
  auto dist = hop_distances(g, pick(rng));
  int far = 0;
  for (int x : dist) far = std::max(far, x);
  std::uniform_int_distribution<int> cut(0, std::max(0, far - 1));
  const int r = cut(rng);
  std::vector<Index> set;
  for (Index i = 0; i < n; ++i) {
    if (dist[i] <= r) set.push_back(i);
  }
  return induced_truncation(g, set);
}

Outcome ac3() {
  std::mt19937_64 rng(2024);
  double worst_split = 0.0, worst_res = 0.0;
  std::size_t violations = 0, trials = 0;
  for (int t = 0; t < 100; ++t) {
    auto tr = random_truncation(rng);
    auto f = oracle::random_potential(rng, tr.graph.size());
    auto s = royden_split(tr, f);
    worst_split = std::max(worst_split, std::abs(s.q - s.q0 - s.qh) / s.q);
    worst_res = std::max(worst_res, s.harmonic_residual);
    for (int k = 0; k < 50; ++k) {
      auto gv = oracle::random_potential(rng, tr.graph.size(), 0.1 + k * 0.02);
      Potential fg(f);
      for (Index i : tr.interior) fg[i] -= gv[i];
      ++trials;
      if (s.qh > energy_value(tr.graph, fg)) ++violations;
    }
  }
  return {worst_split <= 1e-10 && worst_res <= 1e-10 && violations == 0,
          fmt("split %.2e (tol 1e-10), residual %.2e (tol 1e-10), Dirichlet violations %zu/%zu", worst_split,
              worst_res, violations, trials)};
}

Outcome ac4() {
  // Inequalities are exact in real arithmetic; the computed sides may differ
  // by rounding, so a violation means exceeding by more than 1e-12 relative.
  constexpr double slack = 1e-12;
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  std::size_t contraction_bad = 0, slicing_bad = 0;
  for (int t = 0; t < 1000; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 40, 0.15, t % 2 == 0);
    auto f = oracle::random_potential(rng, g.size(), 2.0);
    const double q = energy_value(g, f);
    const double a = u(rng), b = a + std::abs(u(rng)) + 1e-3;
    for (const auto& c : {Contraction::clamp(a, b), Contraction::slice(a), Contraction::absolute()}) {
      if (energy_value(g, contraction_apply(f, c)) > q * (1 + slack)) ++contraction_bad;
    }
  }
  for (int t = 0; t < 1000; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 40, 0.15, t % 2 == 1);
    auto f = oracle::random_potential(rng, g.size(), 4.0);
    for (auto& x : f) x = std::abs(x);
    const int n_max = 1 + t % 8;
    double sum = 0.0;
    for (int n = 0; n < n_max; ++n) sum += energy_value(g, contraction_apply(f, Contraction::slice(n)));
    const double clamp = energy_value(g, contraction_apply(f, Contraction::clamp(0.0, n_max)));
    if (sum > clamp * (1 + slack)) ++slicing_bad;
  }
  return {contraction_bad == 0 && slicing_bad == 0,
          fmt("contraction violations %zu/3000, slicing violations %zu/1000", contraction_bad, slicing_bad)};
}

Outcome ac5() {
  std::mt19937_64 rng(55);
  std::size_t slack_bad = 0;
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 30, 0.2, false);
    auto f = oracle::random_potential(rng, g.size());
    auto s = sigma_from_potential(g, f);
    auto r = is_intrinsic(g, s.sigma, s.m_f);
    if (!r.intrinsic) ++slack_bad;
    for (double x : r.slack) slack_bad += x != 0.0;
  }
  double load_z2 = 0, load_t3 = 0;
  for (auto [spec, out] : {std::pair{GeneratorSpec{Family::lattice, 2, 8}, &load_z2},
                           std::pair{GeneratorSpec{Family::tree, 3, 6}, &load_t3}}) {
    auto g = generate(spec);
    std::vector<Index> order(g.size());
    for (Index i = 0; i < g.size(); ++i) order[i] = i;
    *out = disc_top_metric(g, order).total_load;
  }
  std::size_t path_bad = 0, idem_bad = 0;
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(rng, 2 + t % 8, 0.3);
    std::vector<double> w(g.edge_count());
    std::uniform_int_distribution<int> k(1, 40);
    for (auto& x : w) x = k(rng) / 8.0;
    if (path_metric_all(g, w) != oracle::all_simple_path_minimum(g, w)) ++path_bad;
    if (!idempotence_check(g, w, 0.0).ok) ++idem_bad;
  }
  return {slack_bad == 0 && load_z2 <= 2.0 && load_t3 <= 2.0 && path_bad == 0 && idem_bad == 0,
          fmt("nonzero slack %zu, disc-top load Z2(8) %.6f T3(6) %.6f (max 2), path-metric mismatches %zu/200, "
              "idempotence failures %zu/200",
              slack_bad, load_z2, load_t3, path_bad, idem_bad)};
}

Outcome ac6() {
  std::mt19937_64 rng(66);
  std::size_t bad = 0;
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(rng, 3 + t % 40, 0.2, false);
    std::uniform_real_distribution<double> len(0.01, 2.0);
    std::vector<double> w(g.edge_count());
    for (auto& x : w) x = len(rng);
    auto sigma = MetricObject::path(g, w);
    auto m = tilde_energy(g, edge_restriction(g, sigma)).local;  // m_sigma
    if (!is_intrinsic(g, sigma, m).intrinsic) ++bad;
    std::vector<Index> u;
    std::bernoulli_distribution coin(0.3);
    for (Index i = 0; i < g.size(); ++i) {
      if (coin(rng)) u.push_back(i);
    }
    if (u.empty()) u.push_back(0);
    auto su = dist_to_set(sigma, u);
    if (!dist_bound_check(g, su, m, u).holds) ++bad;
  }
  return {bad == 0, fmt("violations %zu/200", bad)};
}

Outcome ac7() {
  auto t0 = std::chrono::steady_clock::now();
  auto p = hex_packing(0.05);
  auto g = contact_graph(p);
  const bool connected = validate_graph(g).connected;
  auto pm = packing_metric_measure(p, g);
  auto check = is_intrinsic(g, pm.sigma, pm.m);
  bool equality = check.intrinsic;
  for (double s : check.slack) equality = equality && s == 0.0;
  auto scales = make_scales(ScaleSchedule::span, 0.5, nearest_center_distance(p, 1.0, 0.0), 8);
  auto c = cesaro_boundary_capacity(p, g, pm, 1.0, 0.0, scales);
  const bool full = c.cesaro.size() == 8;
  const double decay = full ? c.cesaro.back() / c.cesaro.front() : INFINITY;
  double qmin = INFINITY, qmax = 0.0;
  for (double q : c.q_f) qmin = std::min(qmin, q), qmax = std::max(qmax, q);
  const double secs = seconds_since(t0);
  const bool ok = g.max_degree() <= 6.0 && connected && equality && full && decay <= 0.5 && qmax / qmin < 4.0 &&
                  secs < 60.0;
  return {ok, fmt("max degree %.0f, connected %d, intrinsic equality %d, final/first %.4f (max 0.5), "
                  "Q(f_r) max/min %.4f (max 4), %.2f s (limit 60 s)",
                  g.max_degree(), connected, equality, decay, qmax / qmin, secs)};
}

Outcome ac8() {
  auto p = hex_packing(0.05);
  auto g = contact_graph(p);
  auto pm = packing_metric_measure(p, g);
  std::vector<BoundaryAnchorData> anchors{{anchor_region(p, g, 1.0, 0.0, 0.25), 0.0, "(1,0)"},
                                          {anchor_region(p, g, -1.0, 0.0, 0.25), 1.0, "(-1,0)"}};
  const double lip = minimal_lipschitz(pm.sigma, anchors);
  auto levels = packing_levels(p, g, 2.0 * p.max_radius());
  auto phi = phi_boundary_to_harmonic(g, pm.sigma, pm.m, anchors, lip, levels.levels, levels.window);
  auto rank = harmonic_rank(g, {Potential(g.size(), 1.0), phi.fh}, g.id(0), 1e-8);
  return {phi.report.stabilized && phi.ok && rank.rank == 2,
          fmt("stabilized %d (by %s), certificate Q=%.4f <= %.4f, rank %zu (tol 1e-8), smallest eigenvalue %.3e",
              phi.report.stabilized, phi.report.stabilized_by.c_str(), phi.energy, phi.certificate_bound, rank.rank,
              rank.eigenvalues.front())};
}

Outcome ac9() {
  std::mt19937_64 rng(99);
  std::size_t witness_bad = 0, tree_bad = 0;
  double worst = -INFINITY;
  for (int t = 0; t < 200; ++t) {
    auto g = oracle::random_graph(rng, 2 + t % 50, 0.15, false);
    auto f = oracle::random_potential(rng, g.size());
    if (t % 3 == 0) {
      for (Index i = 0; i < g.size(); i += 2) f[i] = 0.0;
    }
    auto nw = null_witness_from_potential(g, f, t);
    double ordered = 0.0;  // sum over ordered pairs, written out independently
    for (std::size_t k = 0; k < g.edge_count(); ++k) ordered += 2.0 * g.edges()[k].b * nw.w[k] * nw.w[k];
    const double gap = ordered - 2.0 * oracle::energy(g, f);
    worst = std::max(worst, gap);
    if (gap > 1e-6) ++witness_bad;
    for (double x : nw.w) witness_bad += !(x > 0.0);
  }
  for (int t = 0; t < 100; ++t) {
    auto g = oracle::random_tree(rng, 2 + t % 60);
    std::vector<double> w(g.edge_count());
    std::uniform_int_distribution<int> k(1, 256);
    for (auto& x : w) x = k(rng) / 32.0;
    auto tp = tree_boundary_potential(g, w, g.id(t % g.size()));
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const auto& edge = g.edges()[e];
      if (std::abs(tp.f[edge.u] - tp.f[edge.v]) != w[e]) ++tree_bad;
    }
  }
  return {witness_bad == 0 && tree_bad == 0,
          fmt("witness violations %zu/200 (max excess %.2e, allowed 1e-6), tree edge mismatches %zu", witness_bad,
              worst, tree_bad)};
}

Outcome ac10() {
  auto dir = cli_run::scratch_dir("acceptance");
  auto put = [&](const std::string& name, const std::string& text) {
    auto p = (dir / name).string();
    write_file(p, text);
    return p;
  };
  auto g = put("g.tsv", "0 1 1\n1 2 2\n2 3 1\n3 0 0.5\n1 3 1\n");
  auto pot = put("f.tsv", "0 0\n1 0.5\n2 1\n3 0.25\n");
  auto w = put("w.tsv", "0 1 0.5\n1 2 1\n1 3 0.25\n2 3 0.75\n0 3 1\n");
  auto tw = put("tw.tsv", "0 1 0.5\n1 2 1\n");
  auto tg = put("tg.tsv", "0 1 1\n1 2 1\n");
  auto pk = put("pk.tsv", "0 0 0 1\n1 2 0 1\n2 1 1.7320508075688772 1\n");
  auto gen_report = (dir / "gen.json").string();
  const std::vector<std::string> commands{
      "gen --gen lattice:2:4 --report " + gen_report,
      "recur --gen lattice:2 --radii 8,16,32",
      "recur --gen lattice:1 --radii 8,16,32 --csv",
      "capacity --graph " + g + " --set \"{0,2}\"",
      "capacity --gen lattice:1 --radii 5,10,20 --tail",
      "royden --gen lattice:2 --radii 2,4,8 --clamp -1,1",
      "metric --graph " + g,
      "metric --graph " + g + " --mode potential --potential " + pot,
      "metric --graph " + g + " --mode weights --weights " + w,
      "paths --graph " + g + " --potential " + pot + " --walks 4 --steps 3 --seed 5",
      "paths --graph " + tg + " --tree --weights " + tw,
      "paths --gen lattice:1 --radii 8,16,32 --yamasaki",
      "packing --hex 0.1 --anchors circle:4",
      "packing --hex 0.05 --harmonic \"(1,0)=0,(-1,0)=1\"",
      "packing --file " + pk + " --contact-only",
  };
  std::size_t differing = 0;
  std::string which;
  for (const auto& c : commands) {
    auto a = cli_run::run(c);
    std::string ra = c.rfind("gen ", 0) == 0 ? read_file(gen_report) : "";
    auto b = cli_run::run(c);
    std::string rb = c.rfind("gen ", 0) == 0 ? read_file(gen_report) : "";
    if (a.out != b.out || ra != rb || a.code != b.code || a.out.empty() || a.code == 1) {
      ++differing;
      which += " [" + c.substr(0, c.find(' ')) + "]";
    }
  }
  std::filesystem::remove_all(dir);
  return {differing == 0, fmt("%zu commands run twice, %zu differing or failing%s", commands.size(), differing,
                              which.c_str())};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"AC1 exact capacities", ac1},
      {"AC2 recurrence verdicts", ac2},
      {"AC3 Royden orthogonality", ac3},
      {"AC4 contraction and slicing", ac4},
      {"AC5 metric suite", ac5},
      {"AC6 distance-to-set capacity bound", ac6},
      {"AC7 packing pipeline", ac7},
      {"AC8 harmonic existence on a packing", ac8},
      {"AC9 null-witness identities", ac9},
      {"AC10 CLI determinism", ac10},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("threw: ") + e.what()};
    }
    std::printf("%s %s: %s\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str());
    std::fflush(stdout);
    failed += !o.pass;
  }
  return failed ? 1 : 0;
}
