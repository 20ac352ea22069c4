#include "netpot/report.hpp"

#include <cmath>

#include "netpot/io.hpp"

namespace netpot {

namespace {

template <class T>
Json opt(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

// Infinite proxies (empty sets) serialize as strings rather than null.
Json real(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return x;
}

Json reals(const std::vector<double>& xs) {
  Json a = Json::array();
  for (double x : xs) a.push_back(real(x));
  return a;
}

const char* flow_name(FlowMode f) {
  switch (f) {
    case FlowMode::radial: return "radial";
    case FlowMode::harmonic: return "harmonic";
    case FlowMode::none: return "none";
  }
  return "none";
}

}  // namespace

Json to_json(const ClassifierConfig& c) {
  return Json{{"zero_threshold", c.zero_threshold},
              {"stabilization_tol", c.stabilization_tol},
              {"fit_tol", c.fit_tol},
              {"slope_ratio_min", c.slope_ratio_min},
              {"flow", flow_name(c.flow)},
              {"solver",
               {{"rel_tol", c.solver.rel_tol},
                {"direct_limit", c.solver.direct_limit},
                {"max_iterations", c.solver.max_iterations}}}};
}

Json to_json(const Verdict& v) {
  Json levels = Json::array();
  for (const auto& l : v.levels) {
    levels.push_back({{"n", l.radius},
                      {"vertices", l.vertices},
                      {"value", real(l.value)},
                      {"residual", l.residual},
                      {"flow_bound", opt(l.flow_bound)},
                      {"exhausted", l.exhausted}});
  }
  Json fits = Json::array();
  for (const auto& f : v.fits) {
    fits.push_back({{"model", f.model},
                    {"params", {{"log_c", f.log_c}, {"exponent", f.exponent}}},
                    {"rss", f.rss},
                    {"rms", f.rms}});
  }
  Json best = v.best_fit ? fits[*v.best_fit] : Json(nullptr);
  return Json{{"problem", "recurrence"},
              {"levels", levels},
              {"fit", best},
              {"fits", fits},
              {"relative_change", opt(v.relative_change)},
              {"slope_ratio", opt(v.slope_ratio)},
              {"crossing_radius", opt(v.crossing_radius)},
              {"flow_bound", opt(v.flow_bound)},
              {"verdict", to_string(v.classification)},
              {"reason", v.reason},
              {"config", to_json(v.config)}};
}

Json to_json(const TailSequence& t) {
  Json levels = Json::array();
  for (const auto& e : t.entries) {
    levels.push_back({{"n", e.radius},
                      {"value", real(e.tail_cap)},
                      {"effective", real(e.effective)},
                      {"residual", e.residual}});
  }
  return Json{{"problem", "tail_capacity"}, {"outer_vertices", t.outer_vertices}, {"levels", levels}};
}

Json to_json(const std::vector<BoundaryCapEntry>& entries) {
  Json levels = Json::array();
  for (const auto& e : entries) {
    levels.push_back({{"n", e.k}, {"skipped", e.skipped}, {"size", e.size}, {"value", real(e.value)}});
  }
  return Json{{"problem", "boundary_capacity"}, {"levels", levels}};
}

Json to_json(const RoydenLimitReport& r) {
  Json levels = Json::array();
  for (const auto& l : r.levels) {
    levels.push_back({{"n", l.n},
                      {"vertices", l.vertices},
                      {"qh", l.qh},
                      {"sup_diff", opt(l.sup_diff)},
                      {"energy_diff", opt(l.energy_diff)},
                      {"exact", l.exact}});
  }
  Json window = Json::array();
  for (std::size_t i = 0; i < r.window.size(); ++i) {
    window.push_back({{"vertex", r.window[i]}, {"f_h", r.window_values[i]}});
  }
  return Json{{"levels", levels},
              {"stabilized", r.stabilized},
              {"stabilized_by", r.stabilized_by},
              {"tol", r.tol},
              {"constant_on_window", r.constant_on_window},
              {"f_h", window}};
}

Json to_json(const CesaroResult& c) {
  Json per_scale = Json::array();
  for (std::size_t k = 0; k < c.scales.size(); ++k) {
    per_scale.push_back({{"r", c.scales[k]}, {"Qf", c.q_f[k]}, {"mf", c.m_f[k]}});
  }
  const std::size_t n = c.scales.size();
  Json cross = Json::array();
  for (std::size_t i = 0; i < n; ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < n; ++j) row.push_back(c.cross[i * n + j]);
    cross.push_back(row);
  }
  Json low = Json::array();
  for (char b : c.low_confidence) low.push_back(static_cast<bool>(b));
  return Json{{"anchor", {c.wx, c.wy}},
              {"scales", c.scales},
              {"per_scale", per_scale},
              {"cesaro", reals(c.cesaro)},
              {"rescale", reals(c.rescale)},
              {"low_confidence", low},
              {"triangle_bound", reals(c.triangle_bound)},
              {"triangle_ok", c.triangle_ok},
              {"cross_terms", cross},
              {"truncated_at", opt(c.truncated_at)}};
}

Json to_json(const ResolvabilityReport& r) {
  Json anchors = Json::array();
  for (const auto& a : r.anchors) {
    Json j = to_json(a.cesaro);
    j["verdict"] = !a.error.empty() ? "error" : (a.decaying ? "decaying" : "not_decaying");
    if (!a.error.empty()) j["error"] = a.error;
    anchors.push_back(j);
  }
  std::size_t decaying = 0;
  for (const auto& a : r.anchors) decaying += a.decaying ? 1 : 0;
  return Json{{"anchors", anchors}, {"decaying", decaying}, {"consistent", r.consistent}, {"note", r.note}};
}

Json to_json(const NullWitnessReport& r) {
  Json paths = Json::array();
  for (std::size_t i = 0; i < r.lengths.size(); ++i) {
    paths.push_back({{"length", real(r.lengths[i])}, {"meets_threshold", static_cast<bool>(r.meets_threshold[i])}});
  }
  return Json{{"threshold", r.threshold}, {"paths", paths}, {"meeting", r.meeting}, {"note", r.note}};
}

Json to_json(const HarmonicRank& r) {
  return Json{{"rank", r.rank}, {"eigenvalues", r.eigenvalues}, {"gram", r.gram}};
}

Json to_json(const GraphDiagnostics& d) {
  return Json{{"vertices", d.vertices},         {"edges", d.edges},
              {"symmetric", d.symmetric},       {"zero_diagonal", d.zero_diagonal},
              {"connected", d.connected},       {"finite_degrees", d.finite_degrees},
              {"max_degree", d.max_degree}};
}

Json input_hash(std::string_view name, std::string_view content) {
  return Json{{"name", std::string(name)}, {"bytes", content.size()}, {"fnv1a64", hex64(fnv1a64(content))}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string to_csv(const std::vector<std::string>& header, const std::vector<std::vector<double>>& rows) {
  std::string out;
  for (std::size_t i = 0; i < header.size(); ++i) out += (i ? "," : "") + header[i];
  out += '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + format_double(row[i]);
    out += '\n';
  }
  return out;
}

}  // namespace netpot
