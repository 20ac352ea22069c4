#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "netpot/graph.hpp"

namespace netpot {

// Text formats are whitespace separated (tabs in files we write), one record
// per line; '#' starts a comment and blank lines are skipped.
//
//   edge list      u  v  weight
//   measure        v  m            every vertex must be listed
//   potential      v  value        unlisted vertices read as 0
//   edge function  u  v  value     unlisted edges read as 0
//   flow           u  v  flow      flow(u,v) = -flow(v,u); either orientation
//   paths          v1 v2 ... vk    one path per line

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

/// Shortest round-trip decimal representation used by every writer.
std::string format_double(double x);

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t h);

/// Splits one line into fields; empty result for blank/comment lines.
std::vector<std::string_view> split_fields(std::string_view line);

Graph parse_edge_list(std::string_view text);
Measure parse_measure(std::string_view text, const Graph& g);
Potential parse_potential(std::string_view text, const Graph& g);
EdgeFunction parse_edge_function(std::string_view text, const Graph& g);
/// Oriented flow on edges: value k is the flow from edges()[k].u to edges()[k].v.
EdgeFunction parse_flow(std::string_view text, const Graph& g);
std::vector<std::vector<VertexId>> parse_paths(std::string_view text);

Graph load_graph(const std::string& path);

std::string format_edge_list(const Graph& g);
std::string format_measure(const Graph& g, const Measure& m);
std::string format_potential(const Graph& g, std::span<const double> f);
std::string format_edge_function(const Graph& g, std::span<const double> w);

VertexId parse_vertex(std::string_view field);
double parse_real(std::string_view field);

}  // namespace netpot
