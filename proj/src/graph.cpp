#include "qwoa/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "qwoa/rng.hpp"

namespace qwoa {

Graph make_graph(int n, std::vector<Edge> edges) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    std::set<std::pair<int, int>> seen;
    for (Edge& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop on vertex " + std::to_string(e.u));
        if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (e.u > e.v) std::swap(e.u, e.v);
        if (!seen.insert({e.u, e.v}).second)
            throw std::invalid_argument("duplicate edge {" + std::to_string(e.u) + "," +
                                        std::to_string(e.v) + "}");
    }
    return Graph{n, std::move(edges)};
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1, 1.0});
    return make_graph(n, std::move(edges));
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, 1.0});
    return make_graph(n, std::move(edges));
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v, 1.0});
    return make_graph(n, std::move(edges));
}

Graph gen_er(int n, double p_edge, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("gen_er: n must be >= 1");
    if (p_edge < 0.0 || p_edge > 1.0) throw std::invalid_argument("gen_er: p_edge outside [0,1]");
    SplitMix64 rng(seed);
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform() < p_edge) edges.push_back({u, v, 1.0});
    return Graph{n, std::move(edges)};
}

Graph gen_regular(int n, int d, std::uint64_t seed) {
    if (n < 1 || d < 0) throw std::invalid_argument("gen_regular: bad arguments");
    if (d >= n) throw std::invalid_argument("gen_regular: infeasible degree (d >= n)");
    if ((static_cast<long long>(n) * d) % 2 != 0)
        throw std::invalid_argument("gen_regular: infeasible degree (n*d odd)");
    if (d == 0) return Graph{n, {}};

    SplitMix64 rng(seed);
    std::vector<int> stubs(static_cast<std::size_t>(n) * d);
    const int max_attempts = 100000;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        for (int v = 0; v < n; ++v)
            for (int k = 0; k < d; ++k) stubs[static_cast<std::size_t>(v) * d + k] = v;
        // Fisher-Yates with the portable generator.
        for (std::size_t i = stubs.size() - 1; i > 0; --i)
            std::swap(stubs[i], stubs[rng.below(i + 1)]);

        std::set<std::pair<int, int>> seen;
        std::vector<Edge> edges;
        bool ok = true;
        for (std::size_t i = 0; i + 1 < stubs.size(); i += 2) {
            int u = stubs[i], v = stubs[i + 1];
            if (u == v) {
                ok = false;
                break;
            }
            if (u > v) std::swap(u, v);
            if (!seen.insert({u, v}).second) {
                ok = false;
                break;
            }
            edges.push_back({u, v, 1.0});
        }
        if (ok) {
            std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
                return std::tie(a.u, a.v) < std::tie(b.u, b.v);
            });
            return Graph{n, std::move(edges)};
        }
    }
    throw std::runtime_error("gen_regular: pairing model failed to produce a simple graph");
}

double total_weight(const Graph& g) {
    double w = 0.0;
    for (const Edge& e : g.edges) w += e.w;
    return w;
}

bool is_connected(const Graph& g) {
    if (g.n <= 1) return true;
    std::vector<std::vector<int>> adj(g.n);
    for (const Edge& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<char> visited(g.n, 0);
    std::vector<int> stack{0};
    visited[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!visited[w]) {
                visited[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

double quality(const Graph& g, std::uint64_t x) {
    double q = 0.0;
    for (const Edge& e : g.edges)
        if (((x >> e.u) ^ (x >> e.v)) & 1ULL) q += e.w;
    return q;
}

std::uint64_t parse_bitstring(std::string_view s, int n) {
    if (static_cast<int>(s.size()) != n)
        throw std::invalid_argument("bitstring length " + std::to_string(s.size()) +
                                    " does not match vertex count " + std::to_string(n));
    std::uint64_t x = 0;
    for (int i = 0; i < n; ++i) {
        if (s[i] == '1')
            x |= 1ULL << i;
        else if (s[i] != '0')
            throw std::invalid_argument("bitstring may contain only 0 and 1");
    }
    return x;
}

std::string format_bitstring(std::uint64_t x, int n) {
    std::string s(static_cast<std::size_t>(n), '0');
    for (int i = 0; i < n; ++i)
        if ((x >> i) & 1ULL) s[i] = '1';
    return s;
}

Graph read_graph(std::istream& in) {
    std::string line;
    auto next_data_line = [&](std::string& out) -> bool {
        while (std::getline(in, line)) {
            std::size_t pos = line.find_first_not_of(" \t\r");
            if (pos == std::string::npos || line[pos] == '#') continue;
            out = line;
            return true;
        }
        return false;
    };

    std::string header;
    if (!next_data_line(header)) throw std::runtime_error("graph file: missing header line");
    std::istringstream hs(header);
    int n = 0;
    long long m = 0;
    if (!(hs >> n >> m) || n < 1 || m < 0) throw std::runtime_error("graph file: bad header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        std::string el;
        if (!next_data_line(el)) throw std::runtime_error("graph file: missing edge line");
        std::istringstream es(el);
        Edge e;
        if (!(es >> e.u >> e.v)) throw std::runtime_error("graph file: bad edge line");
        if (!(es >> e.w)) e.w = 1.0;
        edges.push_back(e);
    }
    return make_graph(n, std::move(edges));
}

Graph read_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open graph file: " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, std::string_view comment) {
    if (!comment.empty()) out << "# " << comment << "\n";
    out << g.n << " " << g.edges.size() << "\n";
    for (const Edge& e : g.edges) {
        out << e.u << " " << e.v;
        if (e.w != 1.0) out << " " << e.w;
        out << "\n";
    }
}

void write_graph_file(const std::string& path, const Graph& g, std::string_view comment) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    write_graph(out, g, comment);
}

} // namespace qwoa
