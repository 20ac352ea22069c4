#include "netpot/io.hpp"

#include <charconv>
#include <cstdlib>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "netpot/error.hpp"

namespace netpot {

namespace {

template <typename Fn>
void for_each_record(std::string_view text, Fn&& fn) {
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    auto fields = split_fields(text.substr(pos, end - pos));
    if (!fields.empty()) fn(fields, line_no);
    if (end == text.size()) break;
    pos = end + 1;
  }
}

Error parse_error(std::size_t line, const std::string& msg) {
  return Error(ErrorKind::parse, "line " + std::to_string(line) + ": " + msg);
}

void expect_fields(const std::vector<std::string_view>& f, std::size_t n, std::size_t line) {
  if (f.size() != n) {
    throw parse_error(line, "expected " + std::to_string(n) + " fields, got " + std::to_string(f.size()));
  }
}

}  // namespace

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path);
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) throw Error(ErrorKind::io, "write failed for " + path);
}

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  // Shortest of %.15g/%.16g/%.17g that round-trips.
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, x);
    if (std::strtod(buf, nullptr) == x) break;
  }
  return buf;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex64(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<std::string_view> split_fields(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

VertexId parse_vertex(std::string_view field) {
  VertexId v = 0;
  auto [p, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
  if (ec != std::errc() || p != field.data() + field.size()) {
    throw Error(ErrorKind::parse, "invalid vertex id '" + std::string(field) + "'");
  }
  return v;
}

double parse_real(std::string_view field) {
  std::string s(field);
  char* end = nullptr;
  double x = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size()) throw Error(ErrorKind::parse, "invalid number '" + s + "'");
  return x;
}

Graph parse_edge_list(std::string_view text) {
  std::vector<WeightedEdge> edges;
  for_each_record(text, [&](const auto& f, std::size_t line) {
    expect_fields(f, 3, line);
    try {
      edges.push_back({parse_vertex(f[0]), parse_vertex(f[1]), parse_real(f[2])});
    } catch (const Error& e) {
      throw parse_error(line, e.what());
    }
  });
  return Graph::from_edges({}, edges);
}

Graph load_graph(const std::string& path) { return parse_edge_list(read_file(path)); }

Measure parse_measure(std::string_view text, const Graph& g) {
  std::vector<double> m(g.size(), 0.0);
  std::vector<char> seen(g.size(), 0);
  for_each_record(text, [&](const auto& f, std::size_t line) {
    expect_fields(f, 2, line);
    Index i = g.index(parse_vertex(f[0]));
    if (seen[i]) throw parse_error(line, "vertex listed twice");
    seen[i] = 1;
    m[i] = parse_real(f[1]);
  });
  for (Index i = 0; i < g.size(); ++i) {
    if (!seen[i]) throw Error(ErrorKind::parse, "measure misses vertex " + std::to_string(g.id(i)));
  }
  return Measure(std::move(m));
}

Potential parse_potential(std::string_view text, const Graph& g) {
  Potential f(g.size(), 0.0);
  for_each_record(text, [&](const auto& fl, std::size_t line) {
    expect_fields(fl, 2, line);
    f[g.index(parse_vertex(fl[0]))] = parse_real(fl[1]);
  });
  return f;
}

EdgeFunction parse_edge_function(std::string_view text, const Graph& g) {
  EdgeFunction w(g.edge_count(), 0.0);
  std::vector<char> seen(g.edge_count(), 0);
  for_each_record(text, [&](const auto& f, std::size_t line) {
    expect_fields(f, 3, line);
    Index u = g.index(parse_vertex(f[0]));
    Index v = g.index(parse_vertex(f[1]));
    auto e = g.edge_index(u, v);
    if (!e) throw parse_error(line, "not an edge of the graph");
    double x = parse_real(f[2]);
    if (seen[*e] && w[*e] != x) throw Error(ErrorKind::asymmetric_weight, "edge function is not symmetric");
    seen[*e] = 1;
    w[*e] = x;
  });
  return w;
}

EdgeFunction parse_flow(std::string_view text, const Graph& g) {
  EdgeFunction flow(g.edge_count(), 0.0);
  std::vector<char> seen(g.edge_count(), 0);
  for_each_record(text, [&](const auto& f, std::size_t line) {
    expect_fields(f, 3, line);
    Index u = g.index(parse_vertex(f[0]));
    Index v = g.index(parse_vertex(f[1]));
    auto e = g.edge_index(u, v);
    if (!e) throw parse_error(line, "not an edge of the graph");
    double x = parse_real(f[2]);
    if (u > v) x = -x;
    if (seen[*e] && flow[*e] != x) throw Error(ErrorKind::contract, "flow is not antisymmetric");
    seen[*e] = 1;
    flow[*e] = x;
  });
  return flow;
}

std::vector<std::vector<VertexId>> parse_paths(std::string_view text) {
  std::vector<std::vector<VertexId>> out;
  for_each_record(text, [&](const auto& f, std::size_t) {
    std::vector<VertexId> p;
    for (auto s : f) p.push_back(parse_vertex(s));
    out.push_back(std::move(p));
  });
  return out;
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (const auto& e : g.edges()) {
    out += std::to_string(g.id(e.u)) + '\t' + std::to_string(g.id(e.v)) + '\t' + format_double(e.b) + '\n';
  }
  return out;
}

std::string format_measure(const Graph& g, const Measure& m) { return format_potential(g, m.values()); }

std::string format_potential(const Graph& g, std::span<const double> f) {
  std::string out;
  for (Index i = 0; i < g.size(); ++i) out += std::to_string(g.id(i)) + '\t' + format_double(f[i]) + '\n';
  return out;
}

std::string format_edge_function(const Graph& g, std::span<const double> w) {
  std::string out;
  for (Index k = 0; k < g.edge_count(); ++k) {
    const auto& e = g.edges()[k];
    out += std::to_string(g.id(e.u)) + '\t' + std::to_string(g.id(e.v)) + '\t' + format_double(w[k]) + '\n';
  }
  return out;
}

}  // namespace netpot
