#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace qwoa {

struct Edge {
    int u = 0;
    int v = 0;
    double w = 1.0;
};

/// Undirected simple graph; the MaxCut instance. Edges are stored with
/// u < v, no self-loops, no duplicates. Vertex i maps to qubit i, and a cut
/// is a bitmask whose bit i gives the side of vertex i.
struct Graph {
    int n = 0;
    std::vector<Edge> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
};

/// Builds a validated graph; throws std::invalid_argument on self-loops,
/// duplicate edges, or out-of-range vertex indices.
Graph make_graph(int n, std::vector<Edge> edges);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Erdős–Rényi G(n, p): each of the n(n-1)/2 pairs is included independently
/// with probability p_edge. Deterministic per seed.
Graph gen_er(int n, double p_edge, std::uint64_t seed);

/// Random d-regular simple graph via the pairing (configuration) model with
/// full rejection of loops and multi-edges. Deterministic per seed. Throws
/// std::invalid_argument when n*d is odd or d >= n.
Graph gen_regular(int n, int d, std::uint64_t seed);

double total_weight(const Graph& g);
bool is_connected(const Graph& g);

/// Cut quality of bitmask x: sum of w_ij over edges whose endpoints lie on
/// opposite sides.
double quality(const Graph& g, std::uint64_t x);

/// Parses a 0/1 string (x_0 first) into a bitmask; throws on length mismatch
/// or non-binary characters.
std::uint64_t parse_bitstring(std::string_view s, int n);
std::string format_bitstring(std::uint64_t x, int n);

/// Text format: comment lines start with '#'; first data line is "n m",
/// followed by m lines "u v [w]" (0-based, weight defaults to 1).
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g, std::string_view comment = {});
void write_graph_file(const std::string& path, const Graph& g, std::string_view comment = {});

} // namespace qwoa
